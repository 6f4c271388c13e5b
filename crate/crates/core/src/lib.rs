//! Rule-driven verb root extraction with cross-lingual universal codes.

pub mod bundled;
pub mod cli;
pub mod code;
pub mod corpus;
pub mod encoder;
pub mod error;
pub mod index;
pub mod lexicon;
pub mod rules;
pub mod text;
pub mod transform;

pub use code::{
    parse_code, render_code, render_composite, Analysis, Case, CompositeCode, Features, GramNumber,
    NominalCode, Person, Politeness, RootId, Tense, UniversalCode, VerbCode,
};
pub use corpus::{evaluate, parse_gold, run_batch, BatchSummary, EvalReport, GoldEntry};
pub use encoder::{ClauseSpec, Encoder, Pos, TaggedToken, WordOrder};
pub use error::{Error, Result};
pub use index::{IndexedSentence, MatchHit, MatchIndex, MatchKind};
pub use lexicon::{levenshtein, load_lexicon, map_root, MappingMethod, MappingResult, RootLexicon};
pub use rules::{load_rules, Rule, RuleTable};
