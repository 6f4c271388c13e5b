//! Score the analyzer on the bundled gold corpus and list what it misses.
//!
//! cargo run --example evaluate_corpus

use dhatu::{bundled, corpus};

fn main() -> dhatu::Result<()> {
    let report = corpus::evaluate_source(&bundled::bengali_rules(), bundled::BENGALI_GOLD)?;
    print!("{}", report.summary());
    for ((tense, person), c) in &report.per_cell {
        println!("{tense}.{person}\t{}/{} roots", c.correct_root, c.total);
    }
    for f in report.failures.iter().filter(|f| {
        f.got
            .as_ref()
            .map_or(true, |(root, _, _)| *root != f.expected.root)
    }) {
        println!(
            "missed {} (expected {}, got {:?})",
            f.expected.surface, f.expected.root, f.got
        );
    }
    Ok(())
}
