use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed code {text:?}: {reason}")]
    MalformedCode { text: String, reason: String },

    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: duplicate rule {key} (first defined on line {first})")]
    DuplicateRule {
        line: usize,
        first: usize,
        key: String,
    },

    #[error("line {line}: unknown tense token {token:?}")]
    UnknownTenseToken { line: usize, token: String },

    #[error("{surface:?} is not a verb")]
    NotAVerb { surface: String },

    #[error("no rule generates {root:?} for {features}")]
    NoRuleForFeatures { root: String, features: String },

    #[error("no universal root for {language}:{root:?} within distance {max_distance}")]
    NoMapping {
        language: String,
        root: String,
        max_distance: usize,
    },

    #[error("line {line}: duplicate lexicon entry {language}:{root:?}")]
    DuplicateEntry {
        line: usize,
        language: String,
        root: String,
    },

    #[error("clause has {count} verbs, expected exactly one")]
    MultipleVerbs { count: usize },

    #[error("invalid clause: {0}")]
    InvalidClause(String),

    #[error("document {0:?} is already indexed")]
    DuplicateDocId(String),

    #[error("gold line {line}: {reason}")]
    MalformedGoldLine { line: usize, reason: String },

    #[error("journal line {line}: {reason}")]
    CorruptJournal { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}
