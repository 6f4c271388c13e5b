//! Batch root extraction over a verb list and accuracy evaluation against a
//! gold corpus.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::code::{Analysis, Person, Tense};
use crate::error::{Error, Result};
use crate::rules::RuleTable;
use crate::text::nfc;

pub const OUTPUT_FILE: &str = "output.tsv";
pub const REJECTED_FILE: &str = "rejected.txt";

/// Name of the per-cell root file, e.g. `FUT_1.txt`.
pub fn cell_file_name(tense: Tense, person: Person) -> String {
    format!("{}_{}.txt", tense.token(), person.digit())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub total: usize,
    pub analyzed: usize,
    pub rejected: usize,
    pub per_cell: BTreeMap<(Tense, Person), usize>,
}

/// Top-ranked analysis for each non-blank line of `input`, in order.
fn analyze_lines<'a>(table: &RuleTable, input: &'a str) -> Vec<(&'a str, Option<Analysis>)> {
    let words: Vec<&str> = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    words
        .par_iter()
        .map(|w| (*w, table.analyze(w).into_iter().next()))
        .collect()
}

/// Analyzes every verb in `input` (one per line, blank lines skipped) and
/// writes `output.tsv`, one `<TENSE>_<PERSON>.txt` root list per non-empty
/// cell, and `rejected.txt` into `outdir`.
pub fn run_batch(table: &RuleTable, input: &str, outdir: &Path) -> Result<BatchSummary> {
    fs::create_dir_all(outdir)?;
    let results = analyze_lines(table, input);

    let mut summary = BatchSummary {
        total: results.len(),
        ..BatchSummary::default()
    };
    let mut output = String::new();
    let mut rejected = String::new();
    let mut cells: BTreeMap<(Tense, Person), String> = BTreeMap::new();
    for (word, analysis) in &results {
        match analysis {
            Some(a) => {
                let f = &a.features;
                writeln!(
                    output,
                    "{}\t{}\t{}\t{}",
                    a.surface, a.native_root, f.tense, f.person
                )
                .expect("write to String");
                let cell = cells.entry((f.tense, f.person)).or_default();
                cell.push_str(&a.native_root);
                cell.push('\n');
                *summary.per_cell.entry((f.tense, f.person)).or_default() += 1;
                summary.analyzed += 1;
            }
            None => {
                rejected.push_str(&nfc(word));
                rejected.push('\n');
                summary.rejected += 1;
            }
        }
    }

    fs::write(outdir.join(OUTPUT_FILE), output)?;
    fs::write(outdir.join(REJECTED_FILE), rejected)?;
    for tense in Tense::ALL {
        for person in Person::ALL {
            let path = outdir.join(cell_file_name(tense, person));
            match cells.get(&(tense, person)) {
                Some(roots) => fs::write(path, roots)?,
                None if path.exists() => fs::remove_file(path)?,
                None => {}
            }
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldEntry {
    pub surface: String,
    pub root: String,
    pub tense: Tense,
    pub person: Person,
}

/// Parses `surface<TAB>root<TAB>tense<TAB>person` lines; `#` starts a comment.
pub fn parse_gold(source: &str) -> Result<Vec<GoldEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let bad = |reason: String| Error::MalformedGoldLine { line, reason };
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split('\t').map(str::trim).collect();
        let [surface, root, tense, person] = fields[..] else {
            return Err(bad(format!("expected 4 fields, got {}", fields.len())));
        };
        if surface.is_empty() || root.is_empty() {
            return Err(bad("empty surface or root".to_string()));
        }
        entries.push(GoldEntry {
            surface: nfc(surface).into_owned(),
            root: nfc(root).into_owned(),
            tense: Tense::from_token(tense)
                .ok_or_else(|| bad(format!("unknown tense {tense:?}")))?,
            person: Person::from_token(person)
                .ok_or_else(|| bad(format!("unknown person {person:?}")))?,
        });
    }
    Ok(entries)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CellCounts {
    pub total: usize,
    pub correct_root: usize,
    pub correct_full: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub expected: GoldEntry,
    /// Top-ranked (root, tense, person), or `None` when nothing matched.
    pub got: Option<(String, Tense, Person)>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalReport {
    pub total: usize,
    pub correct_root: usize,
    /// Root, tense and person all correct.
    pub correct_full: usize,
    pub per_cell: BTreeMap<(Tense, Person), CellCounts>,
    pub failures: Vec<Failure>,
}

fn ratio(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

impl EvalReport {
    pub fn accuracy_root(&self) -> f64 {
        ratio(self.correct_root, self.total)
    }

    pub fn accuracy_full(&self) -> f64 {
        ratio(self.correct_full, self.total)
    }

    /// Tab-separated report. The first column names the record type.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "total\t{}", self.total).unwrap();
        writeln!(w, "correct_root\t{}", self.correct_root).unwrap();
        writeln!(w, "correct_full\t{}", self.correct_full).unwrap();
        writeln!(w, "accuracy_root\t{:.6}", self.accuracy_root()).unwrap();
        writeln!(w, "accuracy_full\t{:.6}", self.accuracy_full()).unwrap();
        for ((tense, person), c) in &self.per_cell {
            writeln!(
                w,
                "cell\t{tense}\t{person}\t{}\t{}\t{}",
                c.total, c.correct_root, c.correct_full
            )
            .unwrap();
        }
        for f in &self.failures {
            let e = &f.expected;
            let got = match &f.got {
                Some((root, tense, person)) => format!("{root}\t{tense}\t{person}"),
                None => "-\t-\t-".to_string(),
            };
            writeln!(
                w,
                "failure\t{}\t{}\t{}\t{}\t{got}",
                e.surface, e.root, e.tense, e.person
            )
            .unwrap();
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "total\t{}\nroot accuracy\t{:.2}%\t({}/{})\nfull accuracy\t{:.2}%\t({}/{})\n",
            self.total,
            100.0 * self.accuracy_root(),
            self.correct_root,
            self.total,
            100.0 * self.accuracy_full(),
            self.correct_full,
            self.total
        )
    }
}

/// Compares the top-ranked analysis of every gold surface to its expected
/// root, tense and person.
pub fn evaluate(table: &RuleTable, gold: &[GoldEntry]) -> EvalReport {
    let tops: Vec<Option<Analysis>> = gold
        .par_iter()
        .map(|g| table.analyze(&g.surface).into_iter().next())
        .collect();

    let mut report = EvalReport {
        total: gold.len(),
        ..EvalReport::default()
    };
    for (entry, top) in gold.iter().zip(tops) {
        let cell = report
            .per_cell
            .entry((entry.tense, entry.person))
            .or_default();
        cell.total += 1;
        let got = top.map(|a| (a.native_root, a.features.tense, a.features.person));
        let root_ok = got.as_ref().is_some_and(|(r, _, _)| *r == entry.root);
        let full_ok = root_ok
            && got
                .as_ref()
                .is_some_and(|(_, t, p)| *t == entry.tense && *p == entry.person);
        if root_ok {
            cell.correct_root += 1;
            report.correct_root += 1;
        }
        if full_ok {
            cell.correct_full += 1;
            report.correct_full += 1;
        } else {
            report.failures.push(Failure {
                expected: entry.clone(),
                got,
            });
        }
    }
    report
}

/// Parses `gold` and evaluates it.
pub fn evaluate_source(table: &RuleTable, gold: &str) -> Result<EvalReport> {
    Ok(evaluate(table, &parse_gold(gold)?))
}
