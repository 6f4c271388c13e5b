//! Split a mixed word list into per-tense/person root files.
//!
//! cargo run --example batch_pipeline -- /tmp/batch-out

use std::fs;
use std::path::PathBuf;

use dhatu::{bundled, run_batch};

fn main() -> dhatu::Result<()> {
    let outdir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("dhatu-batch"));
    let input = "যাব\nকরলাম\nটেবিল\nখাচ্ছে\nদেখবেন\nবই\nবলি\n";
    let summary = run_batch(&bundled::bengali_rules(), input, &outdir)?;
    println!(
        "{} words: {} analyzed, {} rejected",
        summary.total, summary.analyzed, summary.rejected
    );
    let mut files: Vec<_> = fs::read_dir(&outdir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    files.sort();
    for path in files {
        let body = fs::read_to_string(&path)?;
        println!(
            "{}: {}",
            path.display(),
            body.lines().collect::<Vec<_>>().join(", ")
        );
    }
    Ok(())
}
