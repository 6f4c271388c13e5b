//! Stem rewrites applied between a root and its inflectional suffix.
//!
//! A transform is written as `pat>rep` pairs joined by `;`:
//!
//! * `^>X` prepends `X` to every root (English auxiliaries such as `will `).
//! * every other pair rewrites the end of the root. The pairs are
//!   alternatives: the first whose pattern ends the root applies. When a
//!   transform has end pairs and none match, the rule does not apply to that
//!   root. `∅>∅` is the catch-all.
//! * `.` in a pattern matches any single codepoint and is copied, in order,
//!   to the `.` slots of the replacement. `∅` is the empty string and `\s` a
//!   space.
//!
//! The length of the matched pattern is the rule's specificity for that
//! root; a more specific rule blocks a general one for the same cell.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sym {
    Lit(char),
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Rewrite {
    pattern: Vec<Sym>,
    replacement: Vec<Sym>,
}

/// Result of applying a transform to a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applied {
    pub stem: String,
    pub specificity: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StemTransform {
    prefix: String,
    rewrites: Vec<Rewrite>,
    source: String,
}

fn parse_side(text: &str) -> Vec<Sym> {
    if text == "∅" {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '.' => out.push(Sym::Any),
            '\\' if chars.peek() == Some(&'s') => {
                chars.next();
                out.push(Sym::Lit(' '));
            }
            c => out.push(Sym::Lit(c)),
        }
    }
    out
}

fn literal(syms: &[Sym]) -> Option<String> {
    syms.iter()
        .map(|s| match s {
            Sym::Lit(c) => Some(*c),
            Sym::Any => None,
        })
        .collect()
}

/// Matches `pattern` against the end of `chars`, returning the captures.
fn match_end(chars: &[char], pattern: &[Sym]) -> Option<Vec<char>> {
    let start = chars.len().checked_sub(pattern.len())?;
    let mut captures = Vec::new();
    for (c, sym) in chars[start..].iter().zip(pattern) {
        match sym {
            Sym::Lit(l) if l == c => {}
            Sym::Lit(_) => return None,
            Sym::Any => captures.push(*c),
        }
    }
    Some(captures)
}

fn fill(template: &[Sym], captures: &[char], out: &mut String) {
    let mut captures = captures.iter();
    for sym in template {
        match sym {
            Sym::Lit(c) => out.push(*c),
            // Wildcard counts are checked at parse time.
            Sym::Any => out.push(*captures.next().expect("capture per wildcard")),
        }
    }
}

impl StemTransform {
    pub fn identity() -> StemTransform {
        StemTransform::default()
    }

    /// Parses the rule-file notation. `-` is the identity.
    pub fn parse(text: &str) -> Result<StemTransform, String> {
        let mut transform = StemTransform {
            source: text.to_string(),
            ..StemTransform::default()
        };
        if text == "-" || text.is_empty() {
            transform.source = "-".to_string();
            return Ok(transform);
        }
        let mut saw_prefix = false;
        for pair in text.split(';') {
            let (pat, rep) = pair
                .split_once('>')
                .ok_or_else(|| format!("rewrite {pair:?} lacks '>'"))?;
            if rep.contains('>') {
                return Err(format!("rewrite {pair:?} has more than one '>'"));
            }
            if let Some(anchored) = pat.strip_prefix('^') {
                if !anchored.is_empty() {
                    return Err(format!(
                        "prefix rewrite {pair:?} must have an empty pattern"
                    ));
                }
                if saw_prefix {
                    return Err("at most one prefix rewrite per transform".to_string());
                }
                saw_prefix = true;
                transform.prefix = literal(&parse_side(rep))
                    .ok_or_else(|| format!("prefix rewrite {pair:?} cannot use wildcards"))?;
                continue;
            }
            let pattern = parse_side(pat);
            let replacement = parse_side(rep);
            let wild = |s: &[Sym]| s.iter().filter(|x| **x == Sym::Any).count();
            if wild(&pattern) != wild(&replacement) {
                return Err(format!("rewrite {pair:?} has unbalanced wildcards"));
            }
            transform.rewrites.push(Rewrite {
                pattern,
                replacement,
            });
        }
        Ok(transform)
    }

    pub fn is_identity(&self) -> bool {
        self.prefix.is_empty() && self.rewrites.is_empty()
    }

    /// Rewrites `root` into the stem the suffix attaches to, or `None` when
    /// no alternative matches.
    pub fn apply(&self, root: &str) -> Option<Applied> {
        let chars: Vec<char> = root.chars().collect();
        let mut stem = self.prefix.clone();
        if self.rewrites.is_empty() {
            stem.push_str(root);
            return Some(Applied {
                stem,
                specificity: 0,
            });
        }
        for rw in &self.rewrites {
            if let Some(captures) = match_end(&chars, &rw.pattern) {
                stem.extend(&chars[..chars.len() - rw.pattern.len()]);
                fill(&rw.replacement, &captures, &mut stem);
                return Some(Applied {
                    stem,
                    specificity: rw.pattern.len(),
                });
            }
        }
        None
    }

    /// All roots that this transform maps onto `stem`, in rewrite order.
    pub fn invert(&self, stem: &str) -> Vec<String> {
        let Some(body) = stem.strip_prefix(self.prefix.as_str()) else {
            return Vec::new();
        };
        if self.rewrites.is_empty() {
            return vec![body.to_string()];
        }
        let chars: Vec<char> = body.chars().collect();
        let mut roots: Vec<String> = Vec::new();
        for rw in &self.rewrites {
            let Some(captures) = match_end(&chars, &rw.replacement) else {
                continue;
            };
            let mut root: String = chars[..chars.len() - rw.replacement.len()].iter().collect();
            fill(&rw.pattern, &captures, &mut root);
            let replays = self.apply(&root).is_some_and(|a| a.stem == stem);
            if replays && !roots.contains(&root) {
                roots.push(root);
            }
        }
        roots
    }
}

impl fmt::Display for StemTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}
