//! Map native roots to universal roots, including misspelled ones that
//! fall back to the nearest lexicon entry.
//!
//! cargo run --example root_mapping

use dhatu::{bundled, levenshtein, MappingMethod};

fn main() {
    let lexicon = bundled::lexicon();
    let queries = [
        ("bn", "যা"),
        ("en", "go"),
        ("bn", "করা"),
        ("en", "wrte"),
        ("bn", "টেবিল"),
    ];
    for (lang, root) in queries {
        match lexicon.map_root(lang, root, 2) {
            Ok(m) if m.method == MappingMethod::Exact => {
                println!("{lang}:{root} -> {}", m.universal);
            }
            Ok(m) => println!(
                "{lang}:{root} -> {} via {} (distance {}, next {:?})",
                m.universal, m.native_root, m.distance, m.runner_up_distance
            ),
            Err(e) => println!("{lang}:{root}: {e}"),
        }
    }
    println!(
        "levenshtein(kitten, sitting) = {}",
        levenshtein("kitten", "sitting")
    );
}
