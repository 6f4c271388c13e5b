//! Clause encoding: verb analysis, root mapping, nominal codes and S,O,V
//! normalization.
//!
//! Tagged clause lines look like
//!
//! ```text
//! আমি/PRON:C1,SG ভাত/NOUN:C2,SG খাই/VERB #order=SOV
//! I/PRON will_go/VERB #order=SVO
//! ```
//!
//! An underscore inside a word stands for a space, which is how multi-word
//! verb surfaces such as `will go` travel as one token.

use std::fmt;
use std::str::FromStr;

use crate::code::{
    Analysis, Case, CompositeCode, GramNumber, NominalCode, Person, UniversalCode, VerbCode,
};
use crate::error::{Error, Result};
use crate::lexicon::{RootLexicon, DEFAULT_MAX_DISTANCE};
use crate::rules::RuleTable;
use crate::text::nfc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pos {
    Noun,
    Pron,
    Verb,
    Other,
}

impl Pos {
    pub fn token(self) -> &'static str {
        match self {
            Pos::Noun => "NOUN",
            Pos::Pron => "PRON",
            Pos::Verb => "VERB",
            Pos::Other => "OTHER",
        }
    }

    fn is_nominal(self) -> bool {
        matches!(self, Pos::Noun | Pos::Pron)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordOrder {
    Svo,
    Sov,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub surface: String,
    pub pos: Pos,
    pub case_hint: Option<Case>,
    pub number_hint: Option<GramNumber>,
}

impl TaggedToken {
    pub fn new(surface: &str, pos: Pos) -> TaggedToken {
        TaggedToken {
            surface: nfc(surface).into_owned(),
            pos,
            case_hint: None,
            number_hint: None,
        }
    }

    pub fn with_hints(mut self, case: Case, number: GramNumber) -> TaggedToken {
        self.case_hint = Some(case);
        self.number_hint = Some(number);
        self
    }
}

impl fmt::Display for TaggedToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.surface.replace(' ', "_"), self.pos.token())?;
        match (self.case_hint, self.number_hint) {
            (Some(c), Some(n)) => write!(f, ":{c},{n}"),
            (Some(c), None) => write!(f, ":{c}"),
            (None, Some(n)) => write!(f, ":{n}"),
            (None, None) => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseSpec {
    pub tokens: Vec<TaggedToken>,
    pub word_order: WordOrder,
}

impl ClauseSpec {
    /// Surface words joined by spaces, for display and indexing.
    pub fn text(&self) -> String {
        self.tokens
            .iter()
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for ClauseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for token in &self.tokens {
            write!(f, "{token} ")?;
        }
        let order = match self.word_order {
            WordOrder::Svo => "SVO",
            WordOrder::Sov => "SOV",
        };
        write!(f, "#order={order}")
    }
}

fn invalid(reason: impl Into<String>) -> Error {
    Error::InvalidClause(reason.into())
}

fn parse_hints(token: &str, hints: &str) -> Result<(Option<Case>, Option<GramNumber>)> {
    let (mut case, mut number) = (None, None);
    for part in hints.split(',') {
        if let Some(n) = GramNumber::from_token(part) {
            number = Some(n);
        } else if let Some(c) = part
            .strip_prefix('C')
            .and_then(|d| d.parse::<u8>().ok())
            .and_then(Case::new)
        {
            case = Some(c);
        } else {
            return Err(invalid(format!("bad hint {part:?} in {token:?}")));
        }
    }
    Ok((case, number))
}

impl FromStr for TaggedToken {
    type Err = Error;

    fn from_str(token: &str) -> Result<TaggedToken> {
        let (word, tag) = token
            .rsplit_once('/')
            .ok_or_else(|| invalid(format!("token {token:?} lacks /POS")))?;
        let (pos, hints) = match tag.split_once(':') {
            Some((pos, hints)) => (pos, Some(hints)),
            None => (tag, None),
        };
        let pos = match pos {
            "NOUN" => Pos::Noun,
            "PRON" => Pos::Pron,
            "VERB" => Pos::Verb,
            "OTHER" => Pos::Other,
            other => return Err(invalid(format!("unknown POS {other:?}"))),
        };
        if word.is_empty() {
            return Err(invalid(format!("empty word in {token:?}")));
        }
        let mut tagged = TaggedToken::new(&word.replace('_', " "), pos);
        if let Some(hints) = hints {
            if !pos.is_nominal() {
                return Err(invalid(format!("hints on non-nominal {token:?}")));
            }
            (tagged.case_hint, tagged.number_hint) = parse_hints(token, hints)?;
        }
        Ok(tagged)
    }
}

impl FromStr for ClauseSpec {
    type Err = Error;

    fn from_str(line: &str) -> Result<ClauseSpec> {
        let (body, trailer) = line
            .rsplit_once("#order=")
            .ok_or_else(|| invalid("missing #order=SVO|SOV trailer"))?;
        let word_order = match trailer.trim() {
            "SVO" => WordOrder::Svo,
            "SOV" => WordOrder::Sov,
            other => return Err(invalid(format!("unknown word order {other:?}"))),
        };
        let tokens = body
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<TaggedToken>>>()?;
        Ok(ClauseSpec { tokens, word_order })
    }
}

/// Grammatical person of a nominal, read off its universal root.
pub fn nominal_person(root: &str) -> Person {
    match root {
        "asmad" => Person::First,
        "yusmad" => Person::Second,
        _ => Person::Third,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Encoder<'a> {
    rules: &'a RuleTable,
    lexicon: &'a RootLexicon,
    max_distance: usize,
}

impl<'a> Encoder<'a> {
    pub fn new(rules: &'a RuleTable, lexicon: &'a RootLexicon) -> Encoder<'a> {
        Encoder {
            rules,
            lexicon,
            max_distance: DEFAULT_MAX_DISTANCE,
        }
    }

    pub fn with_max_distance(mut self, max_distance: usize) -> Encoder<'a> {
        self.max_distance = max_distance;
        self
    }

    pub fn language(&self) -> &str {
        self.rules.language()
    }

    fn verb_code(&self, analysis: &Analysis) -> Result<VerbCode> {
        let mapped =
            self.lexicon
                .map_root(self.language(), &analysis.native_root, self.max_distance)?;
        Ok(VerbCode {
            root: mapped.universal,
            tense: analysis.features.tense,
            person: analysis.features.person,
            number: analysis.features.number,
        })
    }

    /// Encodes a verb from its top-ranked analysis.
    pub fn encode_verb(&self, surface: &str) -> Result<VerbCode> {
        let readings = self.rules.analyze_strict(surface)?;
        self.verb_code(&readings[0])
    }

    /// Encodes a verb, preferring the best reading that agrees with the
    /// subject's person. Falls back to the top reading.
    pub fn encode_verb_agreeing(&self, surface: &str, person: Option<Person>) -> Result<VerbCode> {
        let readings = self.rules.analyze_strict(surface)?;
        let chosen = person
            .and_then(|p| readings.iter().find(|a| a.features.person == p))
            .unwrap_or(&readings[0]);
        self.verb_code(chosen)
    }

    /// Encodes a noun or pronoun. Missing hints default to nominative
    /// singular.
    pub fn encode_nominal(&self, token: &TaggedToken) -> Result<NominalCode> {
        if !token.pos.is_nominal() {
            return Err(invalid(format!(
                "{:?} is not a noun or pronoun",
                token.surface
            )));
        }
        let number = token.number_hint.unwrap_or(GramNumber::Singular);
        if number == GramNumber::Dual && !self.rules.declares_number(GramNumber::Dual) {
            return Err(invalid(format!(
                "language {} has no dual number",
                self.language()
            )));
        }
        let mapped = self
            .lexicon
            .map_root(self.language(), &token.surface, self.max_distance)?;
        Ok(NominalCode {
            root: mapped.universal,
            case: token.case_hint.unwrap_or(Case::NOMINATIVE),
            number,
        })
    }

    pub fn encode_clause(&self, clause: &ClauseSpec) -> Result<CompositeCode> {
        let verbs: Vec<usize> = clause
            .tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.pos == Pos::Verb)
            .map(|(i, _)| i)
            .collect();
        let verb_at = match verbs[..] {
            [i] => i,
            [] => return Err(invalid("clause has no verb")),
            _ => return Err(Error::MultipleVerbs { count: verbs.len() }),
        };

        let (before, after): (Vec<_>, Vec<_>) = clause
            .tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.pos.is_nominal())
            .partition(|(i, _)| *i < verb_at);
        let before: Vec<&TaggedToken> = before.into_iter().map(|(_, t)| t).collect();
        let after: Vec<&TaggedToken> = after.into_iter().map(|(_, t)| t).collect();

        let (subject, object) = match clause.word_order {
            WordOrder::Svo => match (&before[..], &after[..]) {
                ([], []) => (None, None),
                ([s], []) => (Some(*s), None),
                ([], [o]) => (None, Some(*o)),
                ([s], [o]) => (Some(*s), Some(*o)),
                _ => {
                    return Err(invalid(
                        "SVO clause needs at most one nominal on each side of the verb",
                    ))
                }
            },
            WordOrder::Sov => match (&before[..], &after[..]) {
                ([], []) => (None, None),
                ([s], []) => (Some(*s), None),
                ([s, o], []) => (Some(*s), Some(*o)),
                _ => {
                    return Err(invalid(
                        "SOV clause needs at most two nominals, all before the verb",
                    ))
                }
            },
        };

        let subject = subject.map(|t| self.encode_nominal(t)).transpose()?;
        let object = object.map(|t| self.encode_nominal(t)).transpose()?;
        let agreement = subject.as_ref().map(|s| nominal_person(s.root.as_str()));
        let verb = self.encode_verb_agreeing(&clause.tokens[verb_at].surface, agreement)?;
        Ok(CompositeCode {
            subject: subject.map(UniversalCode::Nominal),
            object: object.map(UniversalCode::Nominal),
            verb,
        })
    }

    /// Tags plain words with the closed lexicon: pronoun roots become PRON,
    /// other lexicon words NOUN, analyzable words VERB, the rest OTHER.
    /// Words joined by `_` are one token, as in the tagged format.
    pub fn tag_words(&self, words: &str) -> Vec<TaggedToken> {
        words
            .split_whitespace()
            .map(|w| {
                let w = w.replace('_', " ");
                let pos = match self.lexicon.lookup(self.language(), &w) {
                    Some(e) if matches!(e.universal.as_str(), "asmad" | "yusmad" | "tad") => {
                        Pos::Pron
                    }
                    Some(_) => Pos::Noun,
                    None if !self.rules.analyze(&w).is_empty() => Pos::Verb,
                    None => Pos::Other,
                };
                TaggedToken::new(&w, pos)
            })
            .collect()
    }
}
