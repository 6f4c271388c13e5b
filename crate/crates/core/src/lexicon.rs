//! Native root to universal root mapping.
//!
//! Entries are kept sorted by `(language, native_root)`, so one language is a
//! contiguous slice: exact lookup is a binary search and the nearest-match
//! fallback is a linear scan of that slice by edit distance.

use crate::code::RootId;
use crate::error::{Error, Result};
use crate::text::nfc;

pub const DEFAULT_MAX_DISTANCE: usize = 2;

/// Unit-cost edit distance over NFC codepoints.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = nfc(a).chars().collect();
    let b: Vec<char> = nfc(b).chars().collect();
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }

    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let substitution = prev[j] + usize::from(ca != cb);
            cur[j + 1] = substitution.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LexiconEntry {
    pub language: String,
    pub native_root: String,
    pub universal: RootId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MappingMethod {
    Exact,
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingResult {
    pub universal: RootId,
    pub native_root: String,
    pub method: MappingMethod,
    pub distance: usize,
    /// Distance of the next-best candidate, reported for fallback matches.
    pub runner_up_distance: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct RootLexicon {
    entries: Vec<LexiconEntry>,
}

fn bad_line(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedLine {
        line,
        reason: reason.into(),
    }
}

pub fn load_lexicon(source: &str) -> Result<RootLexicon> {
    RootLexicon::parse(source)
}

impl RootLexicon {
    /// Parses `language<TAB>native_root<TAB>universal_root_id` lines.
    pub fn parse(source: &str) -> Result<RootLexicon> {
        let mut entries = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split('\t').map(str::trim).collect();
            let [language, native, universal] = fields[..] else {
                return Err(bad_line(
                    line,
                    format!("expected 3 fields, got {}", fields.len()),
                ));
            };
            if language.is_empty() || native.is_empty() {
                return Err(bad_line(line, "empty language or root"));
            }
            let universal = RootId::new(universal).ok_or_else(|| {
                bad_line(line, format!("invalid universal root id {universal:?}"))
            })?;
            entries.push(LexiconEntry {
                language: language.to_string(),
                native_root: nfc(native).into_owned(),
                universal,
            });
            lines.push(line);
        }

        let mut order: Vec<usize> = (0..entries.len()).collect();
        order.sort_by(|&a, &b| {
            (&entries[a].language, &entries[a].native_root, lines[a]).cmp(&(
                &entries[b].language,
                &entries[b].native_root,
                lines[b],
            ))
        });
        for pair in order.windows(2) {
            let (a, b) = (&entries[pair[0]], &entries[pair[1]]);
            if a.language == b.language && a.native_root == b.native_root {
                return Err(Error::DuplicateEntry {
                    line: lines[pair[1]],
                    language: b.language.clone(),
                    root: b.native_root.clone(),
                });
            }
        }
        let mut slots: Vec<Option<LexiconEntry>> = entries.into_iter().map(Some).collect();
        let entries = order.into_iter().filter_map(|i| slots[i].take()).collect();
        Ok(RootLexicon { entries })
    }

    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The sorted entries of one language.
    pub fn language(&self, language: &str) -> &[LexiconEntry] {
        let start = self
            .entries
            .partition_point(|e| e.language.as_str() < language);
        let end = start + self.entries[start..].partition_point(|e| e.language == language);
        &self.entries[start..end]
    }

    pub fn lookup(&self, language: &str, native_root: &str) -> Option<&LexiconEntry> {
        let slice = self.language(language);
        let root = nfc(native_root);
        slice
            .binary_search_by(|e| e.native_root.as_str().cmp(&root))
            .ok()
            .map(|i| &slice[i])
    }

    /// Maps a native root to its universal root, exactly or by nearest edit
    /// distance. Ties go to the lexicographically smallest native root.
    pub fn map_root(
        &self,
        language: &str,
        native_root: &str,
        max_distance: usize,
    ) -> Result<MappingResult> {
        if let Some(entry) = self.lookup(language, native_root) {
            return Ok(MappingResult {
                universal: entry.universal.clone(),
                native_root: entry.native_root.clone(),
                method: MappingMethod::Exact,
                distance: 0,
                runner_up_distance: None,
            });
        }

        let mut best: Option<(&LexiconEntry, usize)> = None;
        let mut runner_up: Option<usize> = None;
        for entry in self.language(language) {
            let d = levenshtein(native_root, &entry.native_root);
            match best {
                Some((_, bd)) if d >= bd => {
                    runner_up = Some(runner_up.map_or(d, |r| r.min(d)));
                }
                _ => {
                    if let Some((_, bd)) = best {
                        runner_up = Some(bd);
                    }
                    best = Some((entry, d));
                }
            }
        }
        match best {
            Some((entry, d)) if d <= max_distance => Ok(MappingResult {
                universal: entry.universal.clone(),
                native_root: entry.native_root.clone(),
                method: MappingMethod::Fallback,
                distance: d,
                runner_up_distance: runner_up,
            }),
            _ => Err(Error::NoMapping {
                language: language.to_string(),
                root: nfc(native_root).into_owned(),
                max_distance,
            }),
        }
    }
}

pub fn map_root(
    lexicon: &RootLexicon,
    language: &str,
    native_root: &str,
    max_distance: usize,
) -> Result<MappingResult> {
    lexicon.map_root(language, native_root, max_distance)
}
