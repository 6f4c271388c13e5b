//! Cross-language sentence index keyed by composite codes.
//!
//! Sentences are appended to `journal.tsv` in the index directory, one per
//! line: `doc_id<TAB>language<TAB>composite<TAB>original_text`, with tab,
//! newline, carriage return and backslash escaped. Opening an index replays
//! the journal into memory.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::RwLock;

use crate::code::CompositeCode;
use crate::error::{Error, Result};

pub const JOURNAL_FILE: &str = "journal.tsv";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedSentence {
    pub doc_id: String,
    pub language: String,
    pub original_text: String,
    pub composite: CompositeCode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchKind {
    Full,
    VerbOnly,
}

impl MatchKind {
    pub fn token(self) -> &'static str {
        match self {
            MatchKind::Full => "FULL",
            MatchKind::VerbOnly => "VERB_ONLY",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchHit {
    pub doc_id: String,
    pub language: String,
    /// Fraction of the three slots (S, O, V) that match.
    pub score: f64,
    pub matched_on: MatchKind,
}

struct Inner {
    docs: Vec<IndexedSentence>,
    ids: HashMap<String, usize>,
    by_verb: HashMap<String, Vec<usize>>,
    journal: File,
}

impl Inner {
    fn insert(&mut self, sentence: IndexedSentence) {
        let at = self.docs.len();
        self.ids.insert(sentence.doc_id.clone(), at);
        self.by_verb
            .entry(sentence.composite.verb.to_string())
            .or_default()
            .push(at);
        self.docs.push(sentence);
    }
}

/// Index handle. Queries take a shared lock; additions are serialized.
pub struct MatchIndex {
    dir: PathBuf,
    inner: RwLock<Inner>,
}

fn escape(field: &str) -> String {
    let mut out = String::with_capacity(field.len());
    for c in field.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(field: &str) -> Option<String> {
    let mut out = String::with_capacity(field.len());
    let mut chars = field.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next()? {
            '\\' => out.push('\\'),
            't' => out.push('\t'),
            'n' => out.push('\n'),
            'r' => out.push('\r'),
            _ => return None,
        }
    }
    Some(out)
}

fn journal_line(s: &IndexedSentence) -> String {
    format!(
        "{}\t{}\t{}\t{}\n",
        escape(&s.doc_id),
        escape(&s.language),
        s.composite,
        escape(&s.original_text)
    )
}

fn parse_journal_line(line: usize, text: &str) -> Result<IndexedSentence> {
    let corrupt = |reason: String| Error::CorruptJournal { line, reason };
    let fields: Vec<&str> = text.split('\t').collect();
    let [doc_id, language, composite, original] = fields[..] else {
        return Err(corrupt(format!("expected 4 fields, got {}", fields.len())));
    };
    let field = |f: &str| unescape(f).ok_or_else(|| corrupt(format!("bad escape in {f:?}")));
    Ok(IndexedSentence {
        doc_id: field(doc_id)?,
        language: field(language)?,
        composite: composite
            .parse()
            .map_err(|e: Error| corrupt(e.to_string()))?,
        original_text: field(original)?,
    })
}

impl MatchIndex {
    /// Opens the index in `dir`, creating the directory and an empty journal
    /// if needed.
    pub fn open(dir: impl AsRef<Path>) -> Result<MatchIndex> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        let path = dir.join(JOURNAL_FILE);
        let existing = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(e.into()),
        };
        let journal = OpenOptions::new().create(true).append(true).open(&path)?;
        let mut inner = Inner {
            docs: Vec::new(),
            ids: HashMap::new(),
            by_verb: HashMap::new(),
            journal,
        };
        for (i, line) in existing.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let sentence = parse_journal_line(i + 1, line)?;
            if inner.ids.contains_key(&sentence.doc_id) {
                return Err(Error::CorruptJournal {
                    line: i + 1,
                    reason: format!("duplicate doc id {:?}", sentence.doc_id),
                });
            }
            inner.insert(sentence);
        }
        Ok(MatchIndex {
            dir,
            inner: RwLock::new(inner),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("index lock").docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, doc_id: &str) -> Option<IndexedSentence> {
        let inner = self.inner.read().expect("index lock");
        inner.ids.get(doc_id).map(|&i| inner.docs[i].clone())
    }

    /// Appends a sentence to the journal and makes it queryable.
    pub fn add(&self, sentence: IndexedSentence) -> Result<()> {
        let mut inner = self.inner.write().expect("index lock");
        if inner.ids.contains_key(&sentence.doc_id) {
            return Err(Error::DuplicateDocId(sentence.doc_id));
        }
        inner
            .journal
            .write_all(journal_line(&sentence).as_bytes())?;
        inner.journal.flush()?;
        inner.insert(sentence);
        Ok(())
    }

    /// Sentences sharing the query's verb code, full matches first, then by
    /// score and doc id.
    pub fn query(&self, composite: &str) -> Result<Vec<MatchHit>> {
        let query: CompositeCode = composite.parse()?;
        Ok(self.query_code(&query))
    }

    pub fn query_code(&self, query: &CompositeCode) -> Vec<MatchHit> {
        let inner = self.inner.read().expect("index lock");
        let Some(candidates) = inner.by_verb.get(&query.verb.to_string()) else {
            return Vec::new();
        };
        let mut scored: Vec<(usize, &IndexedSentence)> = candidates
            .iter()
            .map(|&i| {
                let doc = &inner.docs[i];
                let slots = 1
                    + usize::from(doc.composite.subject == query.subject)
                    + usize::from(doc.composite.object == query.object);
                (slots, doc)
            })
            .collect();
        scored.sort_by(|(sa, a), (sb, b)| sb.cmp(sa).then_with(|| a.doc_id.cmp(&b.doc_id)));
        scored
            .into_iter()
            .map(|(slots, doc)| MatchHit {
                doc_id: doc.doc_id.clone(),
                language: doc.language.clone(),
                score: slots as f64 / 3.0,
                matched_on: if slots == 3 {
                    MatchKind::Full
                } else {
                    MatchKind::VerbOnly
                },
            })
            .collect()
    }
}
