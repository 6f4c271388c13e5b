//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use dhatu::{
    bundled, levenshtein, run_batch, ClauseSpec, CompositeCode, Encoder, Features, IndexedSentence,
    MatchIndex, Person, Politeness, Tense,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unicode_normalization::UnicodeNormalization;

const RUNTIME_BUDGET: Duration = Duration::from_secs(5);
const MIN_ROOT_ACCURACY: f64 = 0.98;
const MIN_GOLD_FORMS: usize = 500;
const ROUND_TRIP_ROOTS: usize = 20;
const LEV_ALPHABET: [char; 4] = ['a', 'b', 'c', 'd'];
const LEV_MAX_LEN: usize = 6;
const AXIOM_TRIPLES: usize = 10_000;
const BATCH_LINES: usize = 1_000;
const BATCH_TRIALS: u64 = 5;
const INDEX_SENTENCES: usize = 120;
const INDEX_QUERIES: usize = 50;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- 1

/// Round trip over every cell of the bundled Bengali table. The analyzer
/// ranks by suffix length; readings sharing the longest matching suffix
/// form the top rank. (r, f) must be in that rank and every reading in it
/// must carry root r.
fn round_trip() -> Outcome {
    let table = bundled::bengali_rules();
    let roots: Vec<&String> = table.declared_roots().unwrap().iter().collect();
    ensure(roots.len() >= ROUND_TRIP_ROOTS, || {
        format!("only {} roots", roots.len())
    })?;
    for irregular in ["যা", "খা", "দে"] {
        ensure(roots.iter().any(|r| *r == irregular), || {
            format!("{irregular} missing")
        })?;
    }
    let cells = table.cells();
    let start = Instant::now();
    let (mut checked, mut first_reading) = (0, 0);
    for root in &roots {
        for cell in &cells {
            let surface = table
                .generate(root, cell)
                .map_err(|e| format!("{root} {cell}: {e}"))?;
            let readings = table.analyze(&surface);
            let top = readings
                .first()
                .ok_or_else(|| format!("{surface}: no analysis"))?;
            let rank = top.suffix.chars().count();
            let tier: Vec<_> = readings
                .iter()
                .take_while(|a| a.suffix.chars().count() == rank)
                .collect();
            ensure(tier.iter().all(|a| a.native_root == **root), || {
                format!("{surface}: top rank mixes roots")
            })?;
            ensure(tier.iter().any(|a| a.features == *cell), || {
                format!("{surface}: {cell} not in top rank")
            })?;
            if top.features == *cell {
                first_reading += 1;
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < RUNTIME_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{checked}/{checked} (root, cell) pairs in top rank, {} roots x {} cells, \
         {first_reading} as first reading, {elapsed:.2?}",
        roots.len(),
        cells.len()
    ))
}

// ---------------------------------------------------------------- 2

fn gold_accuracy() -> Outcome {
    let table = bundled::bengali_rules();
    let start = Instant::now();
    let report =
        dhatu::corpus::evaluate_source(&table, bundled::BENGALI_GOLD).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    // Count directly from the gold file rather than trusting the report.
    let rows: Vec<Vec<&str>> = bundled::BENGALI_GOLD
        .lines()
        .map(|l| l.split('#').next().unwrap())
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split('\t').collect())
        .collect();
    ensure(rows.len() >= MIN_GOLD_FORMS, || {
        format!("{} gold forms", rows.len())
    })?;
    for irregular in ["যা", "খা", "দে"] {
        ensure(rows.iter().any(|r| r[1] == irregular), || {
            format!("no {irregular} forms")
        })?;
    }
    let correct = rows
        .iter()
        .filter(|r| {
            table
                .analyze(r[0])
                .first()
                .is_some_and(|a| a.native_root == r[1])
        })
        .count();
    ensure(
        correct == report.correct_root && rows.len() == report.total,
        || "report disagrees with direct count".into(),
    )?;
    let accuracy = correct as f64 / rows.len() as f64;
    ensure(accuracy >= MIN_ROOT_ACCURACY, || {
        format!("accuracy_root {accuracy:.4}")
    })?;
    ensure(elapsed < RUNTIME_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "accuracy_root {:.2}% ({correct}/{}), accuracy_full {:.2}%, {elapsed:.2?}",
        100.0 * accuracy,
        rows.len(),
        100.0 * report.accuracy_full()
    ))
}

// ---------------------------------------------------------------- 3

fn bn_subjects(cell: &Features) -> &'static [&'static str] {
    match (cell.person, cell.politeness) {
        (Person::First, _) => &["আমি"],
        (Person::Second, Some(Politeness::Intimate)) => &["তুই"],
        (Person::Second, Some(Politeness::Honorific)) => &["আপনি"],
        (Person::Second, _) => &["তুমি"],
        (Person::Third, Some(Politeness::Honorific)) => &["তিনি"],
        (Person::Third, _) => &["সে"],
    }
}

fn en_subjects(person: Person) -> &'static [&'static str] {
    match person {
        Person::First => &["I"],
        Person::Second => &["you"],
        Person::Third => &["he", "she", "it"],
    }
}

fn clause(subject: &str, verb: &str, order: &str) -> ClauseSpec {
    format!(
        "{subject}/PRON {}/VERB #order={order}",
        verb.replace(' ', "_")
    )
    .parse()
    .unwrap()
}

fn cross_lingual() -> Outcome {
    let lexicon = bundled::lexicon();
    let (bn, en) = (bundled::bengali_rules(), bundled::english_rules());
    let bn_enc = Encoder::new(&bn, &lexicon);
    let en_enc = Encoder::new(&en, &lexicon);
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;

    // The headline pair, both directions.
    let b = bn_enc
        .encode_clause(&clause("আমি", "যাব", "SOV"))
        .map_err(|e| e.to_string())?;
    let e = en_enc
        .encode_clause(&clause("I", "will go", "SVO"))
        .map_err(|e| e.to_string())?;
    ensure(b.to_string() == e.to_string(), || format!("{b} != {e}"))?;
    let pair = MatchIndex::open(dir.path().join("pair")).map_err(|e| e.to_string())?;
    for (id, lang, text, code) in [("bn", "bn", "আমি যাব", &b), ("en", "en", "I will go", &e)]
    {
        pair.add(IndexedSentence {
            doc_id: id.into(),
            language: lang.into(),
            original_text: text.into(),
            composite: code.clone(),
        })
        .map_err(|e| e.to_string())?;
    }
    for (query, want) in [(&e, "bn"), (&b, "en")] {
        let hits = pair.query_code(query);
        let full: Vec<_> = hits.iter().filter(|h| h.score == 1.0).collect();
        ensure(
            hits[0].score == 1.0 && full.iter().any(|h| h.doc_id == want),
            || format!("query {query} misses {want}"),
        )?;
    }

    // Every shared (universal root, tense, person) with pronoun subjects.
    let shared: Vec<(&String, &String)> = bn
        .declared_roots()
        .unwrap()
        .iter()
        .filter_map(|b_root| {
            let u = &lexicon.lookup("bn", b_root)?.universal;
            let e_root = en
                .declared_roots()
                .unwrap()
                .iter()
                .find(|r| lexicon.lookup("en", r).is_some_and(|e| &e.universal == u))?;
            Some((b_root, e_root))
        })
        .collect();
    let index = MatchIndex::open(dir.path().join("all")).map_err(|e| e.to_string())?;
    let mut bn_codes: Vec<(String, CompositeCode)> = Vec::new();
    for (b_root, _) in &shared {
        for cell in bn.cells() {
            let verb = bn.generate(b_root, &cell).map_err(|e| e.to_string())?;
            for subj in bn_subjects(&cell) {
                let code = bn_enc
                    .encode_clause(&clause(subj, &verb, "SOV"))
                    .map_err(|e| format!("{subj} {verb}: {e}"))?;
                let doc_id = format!("bn-{:05}", bn_codes.len());
                index
                    .add(IndexedSentence {
                        doc_id: doc_id.clone(),
                        language: "bn".into(),
                        original_text: format!("{subj} {verb}"),
                        composite: code.clone(),
                    })
                    .map_err(|e| e.to_string())?;
                bn_codes.push((doc_id, code));
            }
        }
    }

    let (mut pairs, mut mismatches) = (0usize, Vec::new());
    let mut shared_cells = std::collections::BTreeSet::new();
    for (b_root, e_root) in &shared {
        for e_cell in en.cells() {
            let e_verb = en.generate(e_root, &e_cell).map_err(|e| e.to_string())?;
            for e_subj in en_subjects(e_cell.person) {
                let e_code = en_enc
                    .encode_clause(&clause(e_subj, &e_verb, "SVO"))
                    .map_err(|e| format!("{e_subj} {e_verb}: {e}"))?;
                let e_str = e_code.to_string();
                let mut matched_any = false;
                for b_cell in bn.cells() {
                    if (b_cell.tense, b_cell.person) != (e_cell.tense, e_cell.person) {
                        continue;
                    }
                    shared_cells.insert((
                        e_cell.native_tense.clone(),
                        b_cell.native_tense.clone(),
                        e_cell.person,
                    ));
                    let b_verb = bn.generate(b_root, &b_cell).map_err(|e| e.to_string())?;
                    for b_subj in bn_subjects(&b_cell) {
                        let b_code = bn_enc
                            .encode_clause(&clause(b_subj, &b_verb, "SOV"))
                            .unwrap();
                        pairs += 1;
                        if b_code.to_string() != e_str {
                            mismatches.push(format!(
                                "{b_subj} {b_verb} = {b_code} vs {e_subj} {e_verb} = {e_str}"
                            ));
                        }
                        matched_any = true;
                    }
                }
                if matched_any {
                    let hits = index.query_code(&e_code);
                    let expected: Vec<&String> = bn_codes
                        .iter()
                        .filter(|(_, c)| *c == e_code)
                        .map(|(id, _)| id)
                        .collect();
                    let full: Vec<&String> = hits
                        .iter()
                        .filter(|h| h.score == 1.0)
                        .map(|h| &h.doc_id)
                        .collect();
                    ensure(
                        !hits.is_empty() && hits[0].score == 1.0 && full == expected,
                        || format!("query {e_str}: wrong full hits"),
                    )?;
                }
            }
        }
    }
    ensure(mismatches.is_empty(), || {
        format!(
            "{} of {pairs} differ, e.g. {}",
            mismatches.len(),
            mismatches[0]
        )
    })?;
    Ok(format!(
        "আমি যাব == I will go == {b}; {pairs}/{pairs} pairs equal over {} shared roots and {} cell pairings; rank-1 score 1.0",
        shared.len(),
        shared_cells.len()
    ))
}

// ---------------------------------------------------------------- 4

/// Distance between `a[i..]` and `b[j..]` straight from the recursive
/// definition, memoized on (i, j).
fn oracle_rec(a: &[char], b: &[char], i: usize, j: usize, memo: &mut [[u8; 8]; 8]) -> u8 {
    if memo[i][j] != u8::MAX {
        return memo[i][j];
    }
    let d = if i == a.len() {
        (b.len() - j) as u8
    } else if j == b.len() {
        (a.len() - i) as u8
    } else {
        let sub = oracle_rec(a, b, i + 1, j + 1, memo) + u8::from(a[i] != b[j]);
        let del = oracle_rec(a, b, i + 1, j, memo) + 1;
        let ins = oracle_rec(a, b, i, j + 1, memo) + 1;
        sub.min(del).min(ins)
    };
    memo[i][j] = d;
    d
}

fn oracle(a: &[char], b: &[char]) -> usize {
    let mut memo = [[u8::MAX; 8]; 8];
    oracle_rec(a, b, 0, 0, &mut memo) as usize
}

fn all_strings() -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..LEV_MAX_LEN {
        let mut next = Vec::new();
        for s in &frontier {
            for c in LEV_ALPHABET {
                next.push(format!("{s}{c}"));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

const RANGES: [(u32, u32); 7] = [
    (0x61, 0x7A),
    (0xC0, 0xFF),
    (0x300, 0x36F),
    (0x980, 0x9FF),
    (0x900, 0x97F),
    (0x4E00, 0x4E40),
    (0x1F600, 0x1F64F),
];

fn random_string(rng: &mut ChaCha8Rng, pool: Option<&[char]>) -> String {
    let len = rng.gen_range(0..=8);
    (0..len)
        .map(|_| match pool {
            Some(p) => *p.choose(rng).unwrap(),
            None => {
                let (lo, hi) = RANGES[rng.gen_range(0..RANGES.len())];
                char::from_u32(rng.gen_range(lo..=hi)).unwrap()
            }
        })
        .collect()
}

fn levenshtein_oracle() -> Outcome {
    let strings = all_strings();
    let chars: Vec<Vec<char>> = strings.iter().map(|s| s.chars().collect()).collect();
    let mut discrepancies = 0usize;
    let mut example = None;
    for (a, ac) in strings.iter().zip(&chars) {
        for (b, bc) in strings.iter().zip(&chars) {
            if levenshtein(a, b) != oracle(ac, bc) {
                discrepancies += 1;
                example.get_or_insert_with(|| format!("{a:?} {b:?}"));
            }
        }
    }
    let pairs = strings.len() * strings.len();
    ensure(discrepancies == 0, || {
        format!("{discrepancies} discrepancies, e.g. {}", example.unwrap())
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1e7e);
    // Half the triples draw from a small pool so strings share structure.
    let pool: Vec<char> = "কখগাি্য়\u{9bc}eé\u{301}".chars().collect();
    let mut violations = Vec::new();
    for n in 0..AXIOM_TRIPLES {
        let p = if n % 2 == 0 {
            Some(pool.as_slice())
        } else {
            None
        };
        let [x, y, z] = [0; 3].map(|_| random_string(&mut rng, p));
        let len = |s: &str| s.nfc().count();
        let (dxy, dyx, dyz, dxz) = (
            levenshtein(&x, &y),
            levenshtein(&y, &x),
            levenshtein(&y, &z),
            levenshtein(&x, &z),
        );
        let same = x.nfc().eq(y.nfc());
        let checks = [
            ("identity", levenshtein(&x, &x) == 0),
            ("indiscernibles", (dxy == 0) == same),
            ("symmetry", dxy == dyx),
            ("triangle", dxz <= dxy + dyz),
            (
                "bounds",
                len(&x).abs_diff(len(&y)) <= dxy && dxy <= len(&x).max(len(&y)),
            ),
        ];
        for (name, ok) in checks {
            if !ok {
                violations.push(format!("{name}: {x:?} {y:?} {z:?}"));
            }
        }
    }
    ensure(violations.is_empty(), || {
        format!(
            "{} axiom violations, e.g. {}",
            violations.len(),
            violations[0]
        )
    })?;
    Ok(format!(
        "0 discrepancies over {pairs} pairs ({} strings), {AXIOM_TRIPLES} triples satisfy metric axioms",
        strings.len()
    ))
}

// ---------------------------------------------------------------- 5

fn count_lines(path: &Path) -> usize {
    fs::read_to_string(path).map_or(0, |s| s.lines().count())
}

fn batch_partition() -> Outcome {
    let table = bundled::bengali_rules();
    let roots: Vec<&String> = table.declared_roots().unwrap().iter().collect();
    let cells = table.cells();
    let lexicon = bundled::lexicon();
    let non_verbs: Vec<&str> = lexicon
        .language("bn")
        .iter()
        .map(|e| e.native_root.as_str())
        .filter(|w| table.analyze(w).is_empty())
        .chain(["টেবিল", "কলম", "abc", "12", "যাবো", "করবো"])
        .collect();
    let mut total_lines = 0;
    for seed in 0..BATCH_TRIALS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut input = String::new();
        let (mut expect_analyzed, mut expect_rejected) = (0, 0);
        let mut expect_cells: BTreeMap<String, usize> = BTreeMap::new();
        let n = BATCH_LINES + rng.gen_range(0..500);
        for _ in 0..n {
            let word = match rng.gen_range(0..3) {
                0 | 1 => table
                    .generate(
                        roots.choose(&mut rng).unwrap(),
                        cells.choose(&mut rng).unwrap(),
                    )
                    .unwrap(),
                _ => non_verbs.choose(&mut rng).unwrap().to_string(),
            };
            match table.analyze(&word).first() {
                Some(a) => {
                    expect_analyzed += 1;
                    *expect_cells
                        .entry(format!("{}_{}.txt", a.features.tense, a.features.person))
                        .or_default() += 1;
                }
                None => expect_rejected += 1,
            }
            input.push_str(&word);
            input.push('\n');
        }
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let summary = run_batch(&table, &input, dir.path()).map_err(|e| e.to_string())?;
        let input_lines = input.lines().count();

        let mut cell_lines = 0;
        let mut got_cells = BTreeMap::new();
        for entry in fs::read_dir(dir.path()).unwrap() {
            let name = entry.unwrap().file_name().into_string().unwrap();
            if name.contains('_') {
                let count = count_lines(&dir.path().join(&name));
                cell_lines += count;
                got_cells.insert(name, count);
            }
        }
        let rejected = count_lines(&dir.path().join("rejected.txt"));
        let output = count_lines(&dir.path().join("output.tsv"));
        ensure(cell_lines + rejected == input_lines, || {
            format!("seed {seed}: {cell_lines} + {rejected} != {input_lines}")
        })?;
        ensure(
            cell_lines == expect_analyzed
                && output == expect_analyzed
                && rejected == expect_rejected,
            || format!("seed {seed}: counts disagree with per-word analysis"),
        )?;
        ensure(got_cells == expect_cells, || {
            format!("seed {seed}: cell files disagree")
        })?;
        ensure(summary.analyzed + summary.rejected == summary.total, || {
            "summary".into()
        })?;
        total_lines += input_lines;
    }
    Ok(format!(
        "{BATCH_TRIALS} random inputs, {total_lines} lines, all partitioned exactly"
    ))
}

// ---------------------------------------------------------------- 6

fn render_hits(index: &MatchIndex, queries: &[CompositeCode]) -> String {
    let mut out = String::new();
    for q in queries {
        writeln!(out, "? {q}").unwrap();
        for h in index.query_code(q) {
            writeln!(
                out,
                "{}\t{}\t{:016x}\t{}",
                h.doc_id,
                h.language,
                h.score.to_bits(),
                h.matched_on.token()
            )
            .unwrap();
        }
    }
    out
}

fn persistence() -> Outcome {
    let lexicon = bundled::lexicon();
    let bn = bundled::bengali_rules();
    let enc = Encoder::new(&bn, &lexicon);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let subjects = ["আমি", "তুমি", "সে", "আপনি", "রাম"];
    let objects = ["ভাত", "বই", "জল", "চিঠি", "গান"];
    let verbs: Vec<String> = ["খা", "পড়", "দেখ", "লিখ", "শুন", "নে"]
        .iter()
        .flat_map(|r| Tense::ALL.map(|t| bn.generate(r, &Features::new(t, Person::Third)).unwrap()))
        .collect();

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut codes = Vec::new();
    {
        let index = MatchIndex::open(dir.path()).map_err(|e| e.to_string())?;
        for n in 0..INDEX_SENTENCES {
            let s = subjects.choose(&mut rng).unwrap();
            let v = verbs.choose(&mut rng).unwrap();
            let text = if rng.gen_bool(0.7) {
                format!(
                    "{s}/NOUN {}/NOUN:C2 {v}/VERB #order=SOV",
                    objects.choose(&mut rng).unwrap()
                )
            } else {
                format!("{s}/NOUN {v}/VERB #order=SOV")
            };
            let spec: ClauseSpec = text.parse().unwrap();
            let code = enc
                .encode_clause(&spec)
                .map_err(|e| format!("{text}: {e}"))?;
            index
                .add(IndexedSentence {
                    doc_id: format!("doc{n:03}"),
                    language: "bn".into(),
                    original_text: spec.text(),
                    composite: code.clone(),
                })
                .map_err(|e| e.to_string())?;
            codes.push(code);
        }
    }
    // Queries mix stored codes with recombined slots.
    let queries: Vec<CompositeCode> = (0..INDEX_QUERIES)
        .map(|_| {
            let mut q = codes.choose(&mut rng).unwrap().clone();
            if rng.gen_bool(0.5) {
                q.subject = codes.choose(&mut rng).unwrap().subject.clone();
                q.object = codes.choose(&mut rng).unwrap().object.clone();
            }
            q
        })
        .collect();

    let first = {
        let index = MatchIndex::open(dir.path()).map_err(|e| e.to_string())?;
        render_hits(&index, &queries)
    };
    let reopened = MatchIndex::open(dir.path()).map_err(|e| e.to_string())?;
    ensure(reopened.len() == INDEX_SENTENCES, || {
        format!("{} docs after reopen", reopened.len())
    })?;
    let second = render_hits(&reopened, &queries);
    ensure(first == second, || {
        "query results changed after reopen".into()
    })?;
    let hits = second.lines().filter(|l| !l.starts_with('?')).count();
    Ok(format!(
        "{INDEX_SENTENCES} sentences, {INDEX_QUERIES} queries, {hits} hits byte-identical after reopen"
    ))
}

// ---------------------------------------------------------------- 7

/// stdout plus every file the invocation wrote, keyed by relative path.
fn snapshot(root: &Path, stdout: &[u8]) -> BTreeMap<String, Vec<u8>> {
    let mut files = BTreeMap::new();
    files.insert("<stdout>".to_string(), stdout.to_vec());
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(root)
                    .unwrap()
                    .to_string_lossy()
                    .into_owned();
                files.insert(rel, fs::read(&path).unwrap());
            }
        }
    }
    files
}

fn cli_session() -> Result<Vec<(String, BTreeMap<String, Vec<u8>>)>, String> {
    let work = tempfile::tempdir().map_err(|e| e.to_string())?;
    let w = work.path();
    let inputs = w.join("in");
    fs::create_dir(&inputs).unwrap();
    fs::write(inputs.join("bn.rules"), bundled::BENGALI_RULES).unwrap();
    fs::write(inputs.join("lexicon.tsv"), bundled::LEXICON).unwrap();
    fs::write(inputs.join("gold.tsv"), bundled::BENGALI_GOLD).unwrap();
    fs::write(
        inputs.join("verbs.txt"),
        "যাব\nকরলাম\nটেবিল\nখাচ্ছে\nদেখবেন\nবই\n",
    )
    .unwrap();
    fs::write(
        inputs.join("docs.tsv"),
        "d1\tআমি যাব\nd2\tআমি/PRON ভাত/NOUN:C2 খাব/VERB #order=SOV\nd3\tসে যাবে\n",
    )
    .unwrap();
    let p = |name: &str| inputs.join(name).to_string_lossy().into_owned();
    let o = |name: &str| w.join(name).to_string_lossy().into_owned();

    let runs: Vec<(&str, Vec<String>)> = vec![
        (
            "analyze",
            vec![
                "analyze".into(),
                "--rules".into(),
                p("bn.rules"),
                "--lang".into(),
                "bn".into(),
                "--all".into(),
                "যাব".into(),
                "লিখছেন".into(),
                "টেবিল".into(),
            ],
        ),
        (
            "generate",
            vec![
                "generate".into(),
                "--rules".into(),
                p("bn.rules"),
                "দে".into(),
            ],
        ),
        (
            "batch",
            vec![
                "batch".into(),
                "--rules".into(),
                p("bn.rules"),
                "--outdir".into(),
                o("batch"),
                p("verbs.txt"),
            ],
        ),
        (
            "evaluate",
            vec![
                "evaluate".into(),
                "--rules".into(),
                p("bn.rules"),
                "--gold".into(),
                p("gold.tsv"),
                "--outdir".into(),
                o("eval"),
            ],
        ),
        (
            "encode",
            vec![
                "encode".into(),
                "--lang".into(),
                "en".into(),
                "--lexicon".into(),
                p("lexicon.tsv"),
                "I will_go".into(),
            ],
        ),
        (
            "index",
            vec![
                "index".into(),
                "--lexicon".into(),
                p("lexicon.tsv"),
                "--index".into(),
                o("idx"),
                "--input".into(),
                p("docs.tsv"),
            ],
        ),
        (
            "query",
            vec![
                "query".into(),
                "--lang".into(),
                "en".into(),
                "--index".into(),
                o("idx"),
                "I will_go".into(),
            ],
        ),
    ];
    let mut out = Vec::new();
    for (name, args) in runs {
        let result = Command::new(env!("CARGO_BIN_EXE_dhatu"))
            .args(&args)
            .current_dir(w)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(result.status.success(), || {
            format!("{name} failed: {}", String::from_utf8_lossy(&result.stderr))
        })?;
        let mut snap = BTreeMap::new();
        for (k, v) in snapshot(w, &result.stdout) {
            if !k.starts_with("in/") && !k.starts_with("in\\") {
                snap.insert(k, v);
            }
        }
        out.push((name.to_string(), snap));
    }
    Ok(out)
}

fn cli_determinism() -> Outcome {
    let first = cli_session()?;
    let second = cli_session()?;
    for ((name, a), (_, b)) in first.iter().zip(&second) {
        ensure(a == b, || format!("{name} differs between runs"))?;
        ensure(!a["<stdout>"].is_empty(), || {
            format!("{name} printed nothing")
        })?;
    }
    let files = first.last().map_or(0, |(_, s)| s.len() - 1);
    Ok(format!(
        "{} subcommands byte-identical across two sessions ({files} output files)",
        first.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("round-trip", round_trip),
        ("gold accuracy", gold_accuracy),
        ("cross-lingual equality", cross_lingual),
        ("levenshtein oracle", levenshtein_oracle),
        ("batch partition", batch_partition),
        ("persistence", persistence),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS - {detail} [{took:.2?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL - {why} [{took:.2?}]", n + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
