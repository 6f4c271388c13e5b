//! Grammatical features and the universal code that carries them.
//!
//! A verb code is `<root>.<TENSE>.<person>[.<NUM>]` and a nominal code is
//! `<root>.C<case>.<NUM>`. A clause renders as `S:<code>|O:<code>|V:<code>`
//! with `-` for an absent subject or object. Rendering and parsing are exact
//! inverses.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Universal tense. Richer native tenses map onto one of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tense {
    Present,
    Past,
    Future,
}

impl Tense {
    pub const ALL: [Tense; 3] = [Tense::Present, Tense::Past, Tense::Future];

    pub fn token(self) -> &'static str {
        match self {
            Tense::Present => "PRS",
            Tense::Past => "PST",
            Tense::Future => "FUT",
        }
    }

    pub fn from_token(token: &str) -> Option<Tense> {
        match token {
            "PRS" => Some(Tense::Present),
            "PST" => Some(Tense::Past),
            "FUT" => Some(Tense::Future),
            _ => None,
        }
    }
}

impl fmt::Display for Tense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Person {
    First,
    Second,
    Third,
}

impl Person {
    pub const ALL: [Person; 3] = [Person::First, Person::Second, Person::Third];

    pub fn digit(self) -> char {
        match self {
            Person::First => '1',
            Person::Second => '2',
            Person::Third => '3',
        }
    }

    pub fn from_token(token: &str) -> Option<Person> {
        match token {
            "1" => Some(Person::First),
            "2" => Some(Person::Second),
            "3" => Some(Person::Third),
            _ => None,
        }
    }
}

impl fmt::Display for Person {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digit())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GramNumber {
    Singular,
    Dual,
    Plural,
}

impl GramNumber {
    pub const ALL: [GramNumber; 3] = [GramNumber::Singular, GramNumber::Dual, GramNumber::Plural];

    pub fn token(self) -> &'static str {
        match self {
            GramNumber::Singular => "SG",
            GramNumber::Dual => "DU",
            GramNumber::Plural => "PL",
        }
    }

    pub fn from_token(token: &str) -> Option<GramNumber> {
        match token {
            "SG" => Some(GramNumber::Singular),
            "DU" => Some(GramNumber::Dual),
            "PL" => Some(GramNumber::Plural),
            _ => None,
        }
    }
}

impl fmt::Display for GramNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Nominal case: vibhakti 1 through 7, with the vocative as 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Case(u8);

impl Case {
    pub const NOMINATIVE: Case = Case(1);

    pub fn new(value: u8) -> Option<Case> {
        (1..=8).contains(&value).then_some(Case(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

/// Register of address. Recorded on analyses, never carried by codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Politeness {
    Intimate,
    Familiar,
    Honorific,
}

impl Politeness {
    pub fn token(self) -> &'static str {
        match self {
            Politeness::Intimate => "INTIMATE",
            Politeness::Familiar => "FAMILIAR",
            Politeness::Honorific => "HONORIFIC",
        }
    }

    pub(crate) fn short(self) -> &'static str {
        match self {
            Politeness::Intimate => "INT",
            Politeness::Familiar => "FAM",
            Politeness::Honorific => "HON",
        }
    }

    pub fn from_token(token: &str) -> Option<Politeness> {
        match token {
            "INTIMATE" | "INT" => Some(Politeness::Intimate),
            "FAMILIAR" | "FAM" => Some(Politeness::Familiar),
            "HONORIFIC" | "HON" => Some(Politeness::Honorific),
            _ => None,
        }
    }
}

/// The feature bundle of one verb form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Features {
    pub tense: Tense,
    pub person: Person,
    pub number: Option<GramNumber>,
    /// Fine-grained native tense tag such as `PST.PERF`.
    pub native_tense: String,
    pub politeness: Option<Politeness>,
}

impl Features {
    /// Simple tense: the native tag is the universal tense token.
    pub fn new(tense: Tense, person: Person) -> Features {
        Features {
            tense,
            person,
            number: None,
            native_tense: tense.token().to_string(),
            politeness: None,
        }
    }

    pub fn with_native_tense(mut self, native_tense: impl Into<String>) -> Features {
        self.native_tense = native_tense.into();
        self
    }

    pub fn with_politeness(mut self, politeness: Politeness) -> Features {
        self.politeness = Some(politeness);
        self
    }

    pub fn with_number(mut self, number: GramNumber) -> Features {
        self.number = Some(number);
        self
    }
}

impl fmt::Display for Features {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}.{}", self.tense, self.native_tense, self.person)?;
        if let Some(p) = self.politeness {
            write!(f, ".{}", p.short())?;
        }
        if let Some(n) = self.number {
            write!(f, ".{n}")?;
        }
        Ok(())
    }
}

/// One reading of an inflected surface form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub surface: String,
    pub native_root: String,
    pub suffix: String,
    pub features: Features,
    pub rule_id: String,
}

/// Identifier of a universal root, `[a-z][a-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootId(String);

impl RootId {
    pub fn new(id: &str) -> Option<RootId> {
        let mut chars = id.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_lowercase());
        let tail_ok = chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
        (head_ok && tail_ok).then(|| RootId(id.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RootId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VerbCode {
    pub root: RootId,
    pub tense: Tense,
    pub person: Person,
    pub number: Option<GramNumber>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NominalCode {
    pub root: RootId,
    pub case: Case,
    pub number: GramNumber,
}

/// Language-independent code for a verb or a nominal slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UniversalCode {
    Verb(VerbCode),
    Nominal(NominalCode),
}

impl UniversalCode {
    pub fn root(&self) -> &RootId {
        match self {
            UniversalCode::Verb(v) => &v.root,
            UniversalCode::Nominal(n) => &n.root,
        }
    }
}

impl fmt::Display for VerbCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.root, self.tense, self.person)?;
        if let Some(n) = self.number {
            write!(f, ".{n}")?;
        }
        Ok(())
    }
}

impl fmt::Display for NominalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.root, self.case, self.number)
    }
}

impl fmt::Display for UniversalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniversalCode::Verb(v) => v.fmt(f),
            UniversalCode::Nominal(n) => n.fmt(f),
        }
    }
}

fn malformed(text: &str, reason: impl Into<String>) -> Error {
    Error::MalformedCode {
        text: text.to_string(),
        reason: reason.into(),
    }
}

impl FromStr for UniversalCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<UniversalCode> {
        let fields: Vec<&str> = text.split('.').collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(malformed(
                text,
                format!("expected 3 or 4 fields, got {}", fields.len()),
            ));
        }
        let root = RootId::new(fields[0]).ok_or_else(|| malformed(text, "invalid root id"))?;

        if let Some(digits) = fields[1].strip_prefix('C') {
            if fields.len() != 3 {
                return Err(malformed(text, "nominal code takes exactly 3 fields"));
            }
            let case = match digits.as_bytes() {
                [d @ b'1'..=b'8'] => Case(d - b'0'),
                _ => return Err(malformed(text, format!("case {digits:?} outside 1..8"))),
            };
            let number = GramNumber::from_token(fields[2])
                .ok_or_else(|| malformed(text, format!("unknown number {:?}", fields[2])))?;
            return Ok(UniversalCode::Nominal(NominalCode { root, case, number }));
        }

        let tense = Tense::from_token(fields[1])
            .ok_or_else(|| malformed(text, format!("unknown tense {:?}", fields[1])))?;
        let person = Person::from_token(fields[2])
            .ok_or_else(|| malformed(text, format!("unknown person {:?}", fields[2])))?;
        let number = match fields.get(3) {
            None => None,
            Some(tok) => Some(
                GramNumber::from_token(tok)
                    .ok_or_else(|| malformed(text, format!("unknown number {tok:?}")))?,
            ),
        };
        Ok(UniversalCode::Verb(VerbCode {
            root,
            tense,
            person,
            number,
        }))
    }
}

impl FromStr for VerbCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<VerbCode> {
        match text.parse::<UniversalCode>()? {
            UniversalCode::Verb(v) => Ok(v),
            UniversalCode::Nominal(_) => Err(malformed(text, "expected a verb code")),
        }
    }
}

/// Canonical rendering of a code.
pub fn render_code(code: &UniversalCode) -> String {
    code.to_string()
}

pub fn parse_code(text: &str) -> Result<UniversalCode> {
    text.parse()
}

/// Subject, object and verb codes of one clause, always rendered S,O,V.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompositeCode {
    pub subject: Option<UniversalCode>,
    pub object: Option<UniversalCode>,
    pub verb: VerbCode,
}

impl fmt::Display for CompositeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn slot(code: &Option<UniversalCode>) -> String {
            code.as_ref()
                .map_or_else(|| "-".to_string(), |c| c.to_string())
        }
        write!(
            f,
            "S:{}|O:{}|V:{}",
            slot(&self.subject),
            slot(&self.object),
            self.verb
        )
    }
}

impl FromStr for CompositeCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<CompositeCode> {
        let slots: Vec<&str> = text.split('|').collect();
        let [s, o, v] = slots.as_slice() else {
            return Err(malformed(text, "composite needs exactly 3 slots"));
        };
        let optional = |slot: &str, tag: &str| -> Result<Option<UniversalCode>> {
            let body = slot
                .strip_prefix(tag)
                .ok_or_else(|| malformed(text, format!("slot {slot:?} lacks {tag:?}")))?;
            if body == "-" {
                Ok(None)
            } else {
                body.parse().map(Some)
            }
        };
        let subject = optional(s, "S:")?;
        let object = optional(o, "O:")?;
        let verb = v
            .strip_prefix("V:")
            .ok_or_else(|| malformed(text, "verb slot lacks \"V:\""))?
            .parse()?;
        Ok(CompositeCode {
            subject,
            object,
            verb,
        })
    }
}

pub fn render_composite(composite: &CompositeCode) -> String {
    composite.to_string()
}
