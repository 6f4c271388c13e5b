//! Generate a full paradigm for one root and analyze every form back.
//!
//! cargo run --example round_trip -- দে

use dhatu::bundled;

fn main() {
    let root = std::env::args().nth(1).unwrap_or_else(|| "দে".to_string());
    let table = bundled::bengali_rules();
    let mut recovered = 0;
    let cells = table.cells();
    for cell in &cells {
        let surface = match table.generate(&root, cell) {
            Ok(s) => s,
            Err(e) => {
                println!("{cell}\t{e}");
                continue;
            }
        };
        let top = table.analyze(&surface).into_iter().next();
        let back = top.as_ref().map_or("-", |a| a.native_root.as_str());
        if back == root {
            recovered += 1;
        }
        println!("{cell}\t{surface}\t{back}");
    }
    println!("{recovered}/{} forms recovered {root}", cells.len());
}
