//! Index Bengali sentences and retrieve them with an English query.
//!
//! cargo run --example match_index

use dhatu::{bundled, ClauseSpec, Encoder, IndexedSentence, MatchIndex};

fn main() -> dhatu::Result<()> {
    let lexicon = bundled::lexicon();
    let (bn, en) = (bundled::bengali_rules(), bundled::english_rules());
    let bn_enc = Encoder::new(&bn, &lexicon);

    let dir = std::env::temp_dir().join(format!("dhatu-index-{}", std::process::id()));
    let index = MatchIndex::open(&dir)?;
    let docs = [
        ("bn-1", "আমি/PRON যাব/VERB #order=SOV"),
        ("bn-2", "আমি/PRON ভাত/NOUN:C2 খাব/VERB #order=SOV"),
        ("bn-3", "সে/PRON যাবে/VERB #order=SOV"),
        ("bn-4", "আমি/PRON বাড়ি/NOUN:C7 যাব/VERB #order=SOV"),
    ];
    for (doc_id, text) in docs {
        let spec: ClauseSpec = text.parse()?;
        index.add(IndexedSentence {
            doc_id: doc_id.to_string(),
            language: "bn".to_string(),
            original_text: spec.text(),
            composite: bn_enc.encode_clause(&spec)?,
        })?;
    }

    let query =
        Encoder::new(&en, &lexicon).encode_clause(&"I/PRON will_go/VERB #order=SVO".parse()?)?;
    println!("query {query}");
    for hit in index.query_code(&query) {
        let text = index
            .get(&hit.doc_id)
            .map(|s| s.original_text)
            .unwrap_or_default();
        println!(
            "{}\t{:.4}\t{}\t{text}",
            hit.doc_id,
            hit.score,
            hit.matched_on.token()
        );
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
