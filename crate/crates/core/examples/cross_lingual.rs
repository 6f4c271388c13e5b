//! Encode the same clause in Bengali and English and compare the codes.
//!
//! cargo run --example cross_lingual

use dhatu::{bundled, ClauseSpec, Encoder};

fn main() -> dhatu::Result<()> {
    let lexicon = bundled::lexicon();
    let (bn, en) = (bundled::bengali_rules(), bundled::english_rules());
    let bn_enc = Encoder::new(&bn, &lexicon);
    let en_enc = Encoder::new(&en, &lexicon);

    let pairs = [
        (
            "আমি/PRON যাব/VERB #order=SOV",
            "I/PRON will_go/VERB #order=SVO",
        ),
        (
            "আমি/PRON ভাত/NOUN:C2 খাই/VERB #order=SOV",
            "I/PRON eat/VERB rice/NOUN:C2 #order=SVO",
        ),
        (
            "সে/PRON চিঠি/NOUN:C2 লিখল/VERB #order=SOV",
            "he/PRON wrote/VERB letter/NOUN:C2 #order=SVO",
        ),
    ];
    for (b, e) in pairs {
        let b_code = bn_enc.encode_clause(&b.parse::<ClauseSpec>()?)?;
        let e_code = en_enc.encode_clause(&e.parse::<ClauseSpec>()?)?;
        let same = if b_code == e_code {
            "same"
        } else {
            "DIFFERENT"
        };
        println!("{b_code}\n{e_code}\n  {same}");
    }
    Ok(())
}
