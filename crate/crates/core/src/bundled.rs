//! Rule sets, lexicon and gold corpus shipped with the crate.

use crate::lexicon::RootLexicon;
use crate::rules::RuleTable;

pub const BENGALI_RULES: &str = include_str!("../data/bn.rules");
pub const ENGLISH_RULES: &str = include_str!("../data/en.rules");
pub const LEXICON: &str = include_str!("../data/lexicon.tsv");
pub const BENGALI_GOLD: &str = include_str!("../data/bn_gold.tsv");

pub fn bengali_rules() -> RuleTable {
    RuleTable::parse("bn", BENGALI_RULES).expect("bundled Bengali rules parse")
}

pub fn english_rules() -> RuleTable {
    RuleTable::parse("en", ENGLISH_RULES).expect("bundled English rules parse")
}

pub fn lexicon() -> RootLexicon {
    RootLexicon::parse(LEXICON).expect("bundled lexicon parses")
}
