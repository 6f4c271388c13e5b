//! Command-line front end. `run` takes argv and output sinks so it can be
//! driven from tests; the binary only forwards to it.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bundled;
use crate::code::{CompositeCode, Features, GramNumber, Person, Politeness, Tense};
use crate::corpus;
use crate::encoder::{ClauseSpec, Encoder, WordOrder};
use crate::error::Error;
use crate::index::{IndexedSentence, MatchIndex};
use crate::lexicon::{RootLexicon, DEFAULT_MAX_DISTANCE};
use crate::rules::RuleTable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

pub const REPORT_FILE: &str = "report.tsv";

#[derive(Parser, Debug)]
#[command(
    name = "dhatu",
    version,
    about = "Verb root extraction and universal codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Rule file; the bundled table for --lang when omitted.
    #[arg(long, global = true)]
    rules: Option<PathBuf>,
    /// Language tag (bn, en).
    #[arg(long, global = true, default_value = "bn")]
    lang: String,
}

#[derive(Args, Debug)]
struct LexiconArgs {
    /// Root lexicon TSV; the bundled lexicon when omitted.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_DISTANCE)]
    max_distance: usize,
    /// Word order for untagged input; SOV for bn, SVO otherwise.
    #[arg(long, value_parser = parse_order)]
    order: Option<WordOrder>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze inflected verbs (arguments, or stdin lines).
    Analyze {
        #[command(flatten)]
        table: TableArgs,
        /// Emit every analysis with its rule id, not just the top one.
        #[arg(long)]
        all: bool,
        /// Fail when a word has no analysis.
        #[arg(long)]
        strict: bool,
        words: Vec<String>,
    },
    /// Inflect a root; every cell when --tense is omitted.
    Generate {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long, value_parser = parse_tense, requires = "person")]
        tense: Option<Tense>,
        #[arg(long, value_parser = parse_person, requires = "tense")]
        person: Option<Person>,
        #[arg(long)]
        native_tense: Option<String>,
        #[arg(long, value_parser = parse_politeness)]
        politeness: Option<Politeness>,
        #[arg(long, value_parser = parse_number)]
        number: Option<GramNumber>,
        root: String,
    },
    /// Split a verb list into per-cell root files.
    Batch {
        #[command(flatten)]
        table: TableArgs,
        #[arg(long)]
        outdir: PathBuf,
        input: PathBuf,
    },
    /// Score the analyzer against a gold corpus.
    Evaluate {
        #[command(flatten)]
        table: TableArgs,
        /// Gold TSV; the bundled Bengali corpus when omitted.
        #[arg(long)]
        gold: Option<PathBuf>,
        /// Also write the full TSV report here.
        #[arg(long)]
        outdir: Option<PathBuf>,
    },
    /// Encode a clause (`word/POS ... #order=SVO`, or plain words).
    Encode {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(required = true)]
        clause: Vec<String>,
    },
    /// Add encoded clauses to an index.
    Index {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(long)]
        index: PathBuf,
        #[arg(long, requires = "clause", conflicts_with = "input")]
        doc_id: Option<String>,
        /// File of `doc_id<TAB>clause` lines.
        #[arg(long)]
        input: Option<PathBuf>,
        clause: Vec<String>,
    },
    /// Query an index with a clause or a composite code.
    Query {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        lexicon: LexiconArgs,
        #[arg(long)]
        index: PathBuf,
        #[arg(required = true)]
        query: Vec<String>,
    },
}

fn parse_tense(s: &str) -> Result<Tense, String> {
    Tense::from_token(s).ok_or_else(|| format!("expected PRS, PST or FUT, got {s:?}"))
}

fn parse_person(s: &str) -> Result<Person, String> {
    Person::from_token(s).ok_or_else(|| format!("expected 1, 2 or 3, got {s:?}"))
}

fn parse_politeness(s: &str) -> Result<Politeness, String> {
    Politeness::from_token(s).ok_or_else(|| format!("unknown politeness {s:?}"))
}

fn parse_number(s: &str) -> Result<GramNumber, String> {
    GramNumber::from_token(s).ok_or_else(|| format!("expected SG, DU or PL, got {s:?}"))
}

fn parse_order(s: &str) -> Result<WordOrder, String> {
    match s {
        "SVO" | "svo" => Ok(WordOrder::Svo),
        "SOV" | "sov" => Ok(WordOrder::Sov),
        _ => Err(format!("expected SVO or SOV, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Data(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Data(e.into())
    }
}

type CliResult = Result<String, Failure>;

fn read_path(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

impl TableArgs {
    fn load(&self) -> Result<RuleTable, Failure> {
        match (&self.rules, self.lang.as_str()) {
            (Some(path), lang) => Ok(RuleTable::parse(lang, &read_path(path)?)?),
            (None, "bn") => Ok(bundled::bengali_rules()),
            (None, "en") => Ok(bundled::english_rules()),
            (None, other) => Err(Failure::Usage(format!(
                "no bundled rules for language {other:?}; pass --rules"
            ))),
        }
    }
}

impl LexiconArgs {
    fn load(&self) -> Result<RootLexicon, Failure> {
        match &self.lexicon {
            Some(path) => Ok(RootLexicon::parse(&read_path(path)?)?),
            None => Ok(bundled::lexicon()),
        }
    }

    fn clause(&self, encoder: &Encoder<'_>, text: &str) -> Result<ClauseSpec, Error> {
        if text.contains("#order=") {
            return text.parse();
        }
        let word_order = self.order.unwrap_or(match encoder.language() {
            "bn" => WordOrder::Sov,
            _ => WordOrder::Svo,
        });
        Ok(ClauseSpec {
            tokens: encoder.tag_words(text),
            word_order,
        })
    }
}

fn analyze(
    table: &RuleTable,
    words: &[String],
    all: bool,
    strict: bool,
    stdin: &mut dyn Read,
) -> CliResult {
    let owned;
    let words: Vec<&str> = if words.is_empty() {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        owned = buf;
        owned
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect()
    } else {
        words.iter().map(String::as_str).collect()
    };
    let mut out = String::new();
    for word in words {
        let analyses = if strict {
            table.analyze_strict(word)?
        } else {
            table.analyze(word)
        };
        let shown = if all {
            analyses.len()
        } else {
            analyses.len().min(1)
        };
        for a in &analyses[..shown] {
            let f = &a.features;
            write!(
                out,
                "{}\t{}\t{}\t{}",
                a.surface, a.native_root, f.tense, f.person
            )
            .unwrap();
            if all {
                write!(out, "\t{}", a.rule_id).unwrap();
            }
            out.push('\n');
        }
    }
    Ok(out)
}

fn generate(table: &RuleTable, root: &str, features: Option<Features>) -> CliResult {
    match features {
        Some(f) => Ok(format!("{}\n", table.generate(root, &f)?)),
        None => {
            let mut out = String::new();
            for cell in table.cells() {
                if let Ok(surface) = table.generate(root, &cell) {
                    writeln!(out, "{cell}\t{surface}").unwrap();
                }
            }
            if out.is_empty() {
                return Err(Error::NoRuleForFeatures {
                    root: root.to_string(),
                    features: "any cell".to_string(),
                }
                .into());
            }
            Ok(out)
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> CliResult {
    match command {
        Command::Analyze {
            table,
            all,
            strict,
            words,
        } => analyze(&table.load()?, &words, all, strict, stdin),
        Command::Generate {
            table,
            tense,
            person,
            native_tense,
            politeness,
            number,
            root,
        } => {
            let features = match (tense, person) {
                (Some(tense), Some(person)) => {
                    let mut f = Features::new(tense, person);
                    if let Some(native) = native_tense {
                        f = f.with_native_tense(native);
                    }
                    if let Some(p) = politeness {
                        f = f.with_politeness(p);
                    }
                    if let Some(n) = number {
                        f = f.with_number(n);
                    }
                    Some(f)
                }
                _ if native_tense.is_some() || politeness.is_some() || number.is_some() => {
                    return Err(Failure::Usage(
                        "--native-tense, --politeness and --number need --tense and --person"
                            .into(),
                    ));
                }
                _ => None,
            };
            generate(&table.load()?, &root, features)
        }
        Command::Batch {
            table,
            outdir,
            input,
        } => {
            let table = table.load()?;
            let summary = corpus::run_batch(&table, &read_path(&input)?, &outdir)?;
            Ok(format!(
                "total\t{}\nanalyzed\t{}\nrejected\t{}\n",
                summary.total, summary.analyzed, summary.rejected
            ))
        }
        Command::Evaluate {
            table,
            gold,
            outdir,
        } => {
            let table = table.load()?;
            let gold = match gold {
                Some(path) => read_path(&path)?,
                None => bundled::BENGALI_GOLD.to_string(),
            };
            let report = corpus::evaluate_source(&table, &gold)?;
            if let Some(dir) = outdir {
                fs::create_dir_all(&dir)?;
                fs::write(dir.join(REPORT_FILE), report.to_tsv())?;
            }
            Ok(report.summary())
        }
        Command::Encode {
            table,
            lexicon,
            clause,
        } => {
            let (rules, lex) = (table.load()?, lexicon.load()?);
            let encoder = Encoder::new(&rules, &lex).with_max_distance(lexicon.max_distance);
            let spec = lexicon.clause(&encoder, &clause.join(" "))?;
            Ok(format!("{}\n", encoder.encode_clause(&spec)?))
        }
        Command::Index {
            table,
            lexicon,
            index,
            doc_id,
            input,
            clause,
        } => {
            let rules = table.load()?;
            let lex = lexicon.load()?;
            let encoder = Encoder::new(&rules, &lex).with_max_distance(lexicon.max_distance);
            let pairs: Vec<(String, String)> = match (doc_id, input) {
                (Some(id), None) => vec![(id, clause.join(" "))],
                (None, Some(path)) => {
                    let text = read_path(&path)?;
                    let mut pairs = Vec::new();
                    for (i, line) in text.lines().enumerate() {
                        if line.trim().is_empty() || line.starts_with('#') {
                            continue;
                        }
                        let (id, c) = line.split_once('\t').ok_or(Error::MalformedLine {
                            line: i + 1,
                            reason: "expected doc_id<TAB>clause".into(),
                        })?;
                        pairs.push((id.trim().to_string(), c.trim().to_string()));
                    }
                    pairs
                }
                _ => {
                    return Err(Failure::Usage(
                        "index needs --doc-id with a clause, or --input".into(),
                    ))
                }
            };
            // Encode everything first so a bad line adds nothing.
            let mut sentences = Vec::with_capacity(pairs.len());
            for (doc_id, text) in pairs {
                let spec = lexicon.clause(&encoder, &text)?;
                sentences.push(IndexedSentence {
                    doc_id,
                    language: rules.language().to_string(),
                    original_text: spec.text(),
                    composite: encoder.encode_clause(&spec)?,
                });
            }
            let idx = MatchIndex::open(&index)?;
            let mut out = String::new();
            for s in sentences {
                writeln!(out, "{}\t{}", s.doc_id, s.composite).unwrap();
                idx.add(s)?;
            }
            Ok(out)
        }
        Command::Query {
            table,
            lexicon,
            index,
            query,
        } => {
            let text = query.join(" ");
            let code: CompositeCode = match text.parse() {
                Ok(code) => code,
                Err(_) => {
                    let rules = table.load()?;
                    let lex = lexicon.load()?;
                    let encoder =
                        Encoder::new(&rules, &lex).with_max_distance(lexicon.max_distance);
                    encoder.encode_clause(&lexicon.clause(&encoder, &text)?)?
                }
            };
            let idx = MatchIndex::open(&index)?;
            let mut out = String::new();
            for hit in idx.query_code(&code) {
                writeln!(
                    out,
                    "{}\t{}\t{:.4}\t{}",
                    hit.doc_id,
                    hit.language,
                    hit.score,
                    hit.matched_on.token()
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

/// Runs one invocation and returns its exit code: 0 success, 1 usage
/// error, 2 data error.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(out) => match stdout
            .write_all(out.as_bytes())
            .and_then(|_| stdout.flush())
        {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_DATA
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}
