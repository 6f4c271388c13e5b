//! Suffix rule tables and the analyzer/generator pair built on them.
//!
//! A surface form is analyzed by trying every rule whose suffix ends the
//! word (longest suffix first), stripping it, undoing the rule's stem
//! rewrite and keeping the roots that replay exactly. Generation runs the
//! same rule forwards, so `analyze(generate(root, features))` recovers the
//! pair.
//!
//! Rule file format, one rule per line, seven tab-separated fields:
//!
//! ```text
//! suffix  tense  person  native_tense  politeness  number  stem_transform
//! লাম     PST    1       PST           -           -       যা>গে;া>ে;∅>∅
//! ```
//!
//! `-` marks an absent field and `∅` the empty suffix. `#` starts a comment.
//! A line `@root<TAB>root...` declares known roots; when any are declared,
//! only those roots are accepted by the analyzer.

use std::collections::{BTreeSet, HashMap};

use crate::code::{Analysis, Features, GramNumber, Person, Politeness, Tense};
use crate::error::{Error, Result};
use crate::text::{char_len, nfc, strip_suffix};
use crate::transform::StemTransform;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: String,
    pub suffix: String,
    pub features: Features,
    pub transform: StemTransform,
    /// Source line, 1-based. Zero for rules built in code.
    pub line: usize,
}

/// The paradigm cell a rule fills. Rules sharing a cell compete for a root.
type CellKey = (String, Person, Option<Politeness>, Option<GramNumber>);

fn cell_key(f: &Features) -> CellKey {
    (f.native_tense.clone(), f.person, f.politeness, f.number)
}

fn rule_id(suffix: &str, f: &Features) -> String {
    let mut id = format!("{}.{}", f.native_tense, f.person);
    if let Some(p) = f.politeness {
        id.push('.');
        id.push_str(p.short());
    }
    if let Some(n) = f.number {
        id.push('.');
        id.push_str(n.token());
    }
    id.push(':');
    id.push_str(if suffix.is_empty() { "∅" } else { suffix });
    id
}

#[derive(Debug, Clone)]
pub struct RuleTable {
    language: String,
    rules: Vec<Rule>,
    declared_roots: Option<BTreeSet<String>>,
    cells: HashMap<CellKey, Vec<usize>>,
}

fn bad_line(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedLine {
        line,
        reason: reason.into(),
    }
}

/// Parses a rule file for `language`.
pub fn load_rules(language: &str, source: &str) -> Result<RuleTable> {
    RuleTable::parse(language, source)
}

impl RuleTable {
    pub fn parse(language: &str, source: &str) -> Result<RuleTable> {
        let mut rules = Vec::new();
        let mut declared: Option<BTreeSet<String>> = None;
        let mut native_tenses: HashMap<String, (Tense, usize)> = HashMap::new();
        let mut keys: HashMap<(String, Person, String, Option<Politeness>), usize> = HashMap::new();

        for (idx, raw) in source.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let content = nfc(content);
            let fields: Vec<&str> = content.split('\t').map(str::trim).collect();

            if fields[0] == "@root" {
                let roots = declared.get_or_insert_with(BTreeSet::new);
                let mut any = false;
                for root in fields[1..].iter().flat_map(|f| f.split_whitespace()) {
                    roots.insert(root.to_string());
                    any = true;
                }
                if !any {
                    return Err(bad_line(line, "@root directive without roots"));
                }
                continue;
            }

            let [suffix, tense, person, native, politeness, number, transform] = fields[..] else {
                return Err(bad_line(
                    line,
                    format!("expected 7 fields, got {}", fields.len()),
                ));
            };
            let suffix = match suffix {
                "∅" => "",
                "" | "-" => return Err(bad_line(line, "empty suffix must be written as ∅")),
                s => s,
            };
            let tense = Tense::from_token(tense).ok_or_else(|| Error::UnknownTenseToken {
                line,
                token: tense.to_string(),
            })?;
            let person = Person::from_token(person)
                .ok_or_else(|| bad_line(line, format!("unknown person {person:?}")))?;
            if native.is_empty() || native == "-" {
                return Err(bad_line(line, "native tense is required"));
            }
            let politeness = match politeness {
                "-" => None,
                p => Some(
                    Politeness::from_token(p)
                        .ok_or_else(|| bad_line(line, format!("unknown politeness {p:?}")))?,
                ),
            };
            let number = match number {
                "-" => None,
                n => Some(
                    GramNumber::from_token(n)
                        .ok_or_else(|| bad_line(line, format!("unknown number {n:?}")))?,
                ),
            };
            let transform = StemTransform::parse(transform).map_err(|e| bad_line(line, e))?;

            match native_tenses.get(native) {
                Some((mapped, first)) if *mapped != tense => {
                    return Err(bad_line(
                        line,
                        format!(
                            "native tense {native} maps to {mapped} on line {first}, not {tense}"
                        ),
                    ));
                }
                Some(_) => {}
                None => {
                    native_tenses.insert(native.to_string(), (tense, line));
                }
            }

            let key = (suffix.to_string(), person, native.to_string(), politeness);
            if let Some(first) = keys.insert(key, line) {
                return Err(Error::DuplicateRule {
                    line,
                    first,
                    key: format!(
                        "{}/{person}/{native}",
                        if suffix.is_empty() { "∅" } else { suffix }
                    ),
                });
            }

            let features = Features {
                tense,
                person,
                number,
                native_tense: native.to_string(),
                politeness,
            };
            rules.push(Rule {
                id: rule_id(suffix, &features),
                suffix: suffix.to_string(),
                features,
                transform,
                line,
            });
        }
        Ok(RuleTable::from_rules(language, rules, declared))
    }

    /// Builds a table from rules constructed in code. Ordering and cell
    /// indexes are computed here; uniqueness is the caller's concern.
    pub fn from_rules(
        language: &str,
        mut rules: Vec<Rule>,
        declared_roots: Option<BTreeSet<String>>,
    ) -> RuleTable {
        rules.sort_by(|a, b| {
            char_len(&b.suffix)
                .cmp(&char_len(&a.suffix))
                .then_with(|| a.id.cmp(&b.id))
        });
        let mut cells: HashMap<CellKey, Vec<usize>> = HashMap::new();
        for (i, rule) in rules.iter().enumerate() {
            cells.entry(cell_key(&rule.features)).or_default().push(i);
        }
        RuleTable {
            language: language.to_string(),
            rules,
            declared_roots,
            cells,
        }
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    /// Rules in ranking order: longer suffix first, then rule id.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn declared_roots(&self) -> Option<&BTreeSet<String>> {
        self.declared_roots.as_ref()
    }

    pub fn with_declared_roots<I, S>(mut self, roots: I) -> RuleTable
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let set = self.declared_roots.get_or_insert_with(BTreeSet::new);
        set.extend(roots.into_iter().map(|r| nfc(r.as_ref()).into_owned()));
        self
    }

    /// Whether any rule marks `number`; dual is only legal where declared.
    pub fn declares_number(&self, number: GramNumber) -> bool {
        self.rules.iter().any(|r| r.features.number == Some(number))
    }

    /// Distinct paradigm cells covered by the table, in a stable order.
    pub fn cells(&self) -> Vec<Features> {
        let mut seen: Vec<Features> = Vec::new();
        for rule in &self.rules {
            let f = rule.features.clone();
            if !seen.contains(&f) {
                seen.push(f);
            }
        }
        seen.sort_by(|a, b| {
            (&a.native_tense, a.person, a.politeness, a.number).cmp(&(
                &b.native_tense,
                b.person,
                b.politeness,
                b.number,
            ))
        });
        seen
    }

    /// Picks the rule that realizes `root` in the given cell: the applicable
    /// rule with the most specific stem rewrite, then ranking order.
    fn select(&self, root: &str, key: &CellKey) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for &i in self.cells.get(key)? {
            if let Some(applied) = self.rules[i].transform.apply(root) {
                if best.is_none_or(|(_, s)| applied.specificity > s) {
                    best = Some((i, applied.specificity));
                }
            }
        }
        best.map(|(i, _)| i)
    }

    fn accepts_root(&self, root: &str) -> bool {
        !root.is_empty()
            && self
                .declared_roots
                .as_ref()
                .is_none_or(|roots| roots.contains(root))
    }

    /// All readings of `surface`, best first. Empty when nothing matches.
    pub fn analyze(&self, surface: &str) -> Vec<Analysis> {
        let surface = nfc(surface);
        let mut out = Vec::new();
        if surface.is_empty() {
            return out;
        }
        for (i, rule) in self.rules.iter().enumerate() {
            let Some(stem) = strip_suffix(&surface, &rule.suffix) else {
                continue;
            };
            let key = cell_key(&rule.features);
            for root in rule.transform.invert(stem) {
                if !self.accepts_root(&root) || self.select(&root, &key) != Some(i) {
                    continue;
                }
                out.push(Analysis {
                    surface: surface.to_string(),
                    native_root: root,
                    suffix: rule.suffix.clone(),
                    features: rule.features.clone(),
                    rule_id: rule.id.clone(),
                });
            }
        }
        out
    }

    /// Like [`analyze`](Self::analyze), but an unmatched surface is an
    /// error rather than an empty list.
    pub fn analyze_strict(&self, surface: &str) -> Result<Vec<Analysis>> {
        let analyses = self.analyze(surface);
        if analyses.is_empty() {
            return Err(Error::NotAVerb {
                surface: nfc(surface).into_owned(),
            });
        }
        Ok(analyses)
    }

    pub fn generate(&self, root: &str, features: &Features) -> Result<String> {
        let root = nfc(root);
        let missing = || Error::NoRuleForFeatures {
            root: root.to_string(),
            features: features.to_string(),
        };
        let i = self
            .select(&root, &cell_key(features))
            .ok_or_else(missing)?;
        let rule = &self.rules[i];
        if rule.features.tense != features.tense {
            return Err(missing());
        }
        let applied = rule.transform.apply(&root).ok_or_else(missing)?;
        Ok(applied.stem + &rule.suffix)
    }

    /// Rebuilds the surface of an analysis from its root and rule.
    pub fn replay(&self, analysis: &Analysis) -> Option<String> {
        let rule = self.rule(&analysis.rule_id)?;
        let applied = rule.transform.apply(&analysis.native_root)?;
        Some(applied.stem + &rule.suffix)
    }
}
