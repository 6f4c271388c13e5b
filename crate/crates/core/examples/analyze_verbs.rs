//! Analyze a handful of inflected Bengali verbs with the bundled rules.
//!
//! cargo run --example analyze_verbs

use dhatu::bundled;

fn main() {
    let table = bundled::bengali_rules();
    for word in ["যাব", "করলাম", "খেয়েছি", "লিখছেন", "টেবিল"]
    {
        let analyses = table.analyze(word);
        if analyses.is_empty() {
            println!("{word}: not a verb");
            continue;
        }
        for a in analyses {
            println!(
                "{word}: root {} suffix {} {} ({})",
                a.native_root, a.suffix, a.features, a.rule_id
            );
        }
    }
}
