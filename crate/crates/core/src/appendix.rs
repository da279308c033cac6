//! Parametric listings of the elements of positive affine length in
//! W(Ã_2) and W(Ã_3), with core exponents bounded by a cap.

use std::collections::{BTreeSet, HashSet};

use crate::affine::Element;
use crate::coset::enumerate_blocks;
use crate::error::{Error, Result};
use crate::finite::FiniteElement;
use crate::perm::{affine_lengths, bfs_enumerate, AffinePermutation};
use crate::word::{Rank, Word};

/// One generated expression `α · core · x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixEntry {
    pub family: &'static str,
    pub word: Word,
}

fn parse(rank: Rank, text: &str) -> Word {
    Word::parse(text, rank).expect("listing words are well formed")
}

fn power(text: &str, e: usize) -> String {
    vec![text; e].join(" ")
}

fn join(parts: &[&str]) -> String {
    parts
        .iter()
        .filter(|p| !p.is_empty())
        .copied()
        .collect::<Vec<_>>()
        .join(" ")
}

fn finite_words(rank: Rank) -> Vec<String> {
    let mut all = FiniteElement::all(rank);
    all.sort_by(|x, y| x.length().cmp(&y.length()).then(x.cmp_bricks(y)));
    all.iter().map(|x| x.word().to_string()).collect()
}

fn push_all(
    out: &mut Vec<AppendixEntry>,
    rank: Rank,
    family: &'static str,
    alphas: &[&str],
    core: &str,
    xs: &[String],
) {
    for alpha in alphas {
        if alpha.is_empty() && core.is_empty() {
            continue;
        }
        for x in xs {
            out.push(AppendixEntry {
                family,
                word: parse(rank, &join(&[alpha, core, x])),
            });
        }
    }
}

fn listing_rank2(rank: Rank, cap: usize) -> Vec<AppendixEntry> {
    let xs = finite_words(rank);
    let mut out = Vec::new();
    for h in 0..=cap {
        for k in 0..=cap {
            let core = join(&[&power("s2 s1 a", h), &power("s1 s2 s1 a", k)]);
            let mut alphas = vec!["", "a", "s1 a"];
            if h == 0 {
                alphas.push("s2 a");
            }
            push_all(&mut out, rank, "I", &alphas, &core, &xs);
        }
    }
    // with h = 0 the second family repeats the first
    for h in 1..=cap {
        for k in 0..=cap {
            let core = join(&[&power("s1 s2 a", h), &power("s1 s2 s1 a", k)]);
            push_all(&mut out, rank, "II", &["", "a", "s2 a"], &core, &xs);
        }
    }
    out
}

fn listing_rank3(rank: Rank, cap: usize) -> Vec<AppendixEntry> {
    let xs = finite_words(rank);
    let mut out = Vec::new();
    for eps in 0..=cap.min(1) {
        for f in 0..=cap {
            for h in 0..=cap {
                for k in 0..=cap {
                    let core = join(&[
                        &power("s3 s1 a", eps),
                        &power("s2 s3 s1 a", f),
                        &power("s1 s2 s3 s1 a", h),
                        &power("s1 s2 s3 s2 s1 a", k),
                    ]);
                    let alphas: &[&str] = match (eps, f, h) {
                        (1, _, _) => &["", "a"],
                        (0, f, _) if f > 0 => &["", "a", "s1 a", "s3 a"],
                        (0, 0, h) if h > 0 => &["", "a", "s1 a", "s3 a", "s2 s3 a"],
                        _ => &["", "a", "s1 a", "s3 a", "s2 s3 a", "s2 s1 a"],
                    };
                    push_all(&mut out, rank, "I", alphas, &core, &xs);

                    if h > 0 {
                        let core = join(&[
                            &power("s3 s1 a", eps),
                            &power("s2 s3 s1 a", f),
                            &power("s2 s3 s2 s1 a", h),
                            &power("s1 s2 s3 s2 s1 a", k),
                        ]);
                        let alphas: &[&str] = match (eps, f) {
                            (1, _) => &["", "a"],
                            (0, f) if f > 0 => &["", "a", "s1 a", "s3 a"],
                            _ => &["", "a", "s1 a", "s3 a", "s2 s1 a"],
                        };
                        push_all(&mut out, rank, "II", alphas, &core, &xs);
                    }
                    if eps == 0 && f > 0 {
                        let core = join(&[
                            &power("s1 s2 s3 a", f),
                            &power("s1 s2 s3 s1 a", h),
                            &power("s1 s2 s3 s2 s1 a", k),
                        ]);
                        push_all(
                            &mut out,
                            rank,
                            "III",
                            &["", "a", "s3 a", "s2 s3 a"],
                            &core,
                            &xs,
                        );
                        let core = join(&[
                            &power("s3 s2 s1 a", f),
                            &power("s2 s3 s2 s1 a", h),
                            &power("s1 s2 s3 s2 s1 a", k),
                        ]);
                        push_all(
                            &mut out,
                            rank,
                            "IV",
                            &["", "a", "s1 a", "s2 s1 a"],
                            &core,
                            &xs,
                        );
                    }
                }
            }
        }
    }
    out
}

/// The listing for `n = 2` or `n = 3` with every core exponent at most `cap`.
pub fn listing(rank: Rank, cap: usize) -> Result<Vec<AppendixEntry>> {
    match rank.n() {
        2 => Ok(listing_rank2(rank, cap)),
        3 => Ok(listing_rank3(rank, cap)),
        n => Err(Error::Precondition(format!(
            "listings exist for n = 2, 3 only, got {n}"
        ))),
    }
}

/// Result of comparing a listing with brute-force enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub generated: usize,
    pub distinct: usize,
    /// Generated words that are not already canonical.
    pub not_canonical: Vec<String>,
    /// Enumerated elements with `1 ≤ L ≤ cap` absent from the listing.
    pub missing: usize,
    /// Listed elements with `L ≤ cap` absent from the enumeration.
    pub unexpected: usize,
    /// Number of elements with `1 ≤ L ≤ cap`.
    pub expected: usize,
}

impl AppendixReport {
    pub fn is_clean(&self) -> bool {
        self.not_canonical.is_empty()
            && self.missing == 0
            && self.unexpected == 0
            && self.distinct == self.generated
    }
}

/// Checks the listing against a breadth-first enumeration of all elements
/// with affine length between 1 and `cap`.
pub fn check(rank: Rank, cap: usize) -> Result<AppendixReport> {
    let entries = listing(rank, cap)?;
    let mut not_canonical = Vec::new();
    let mut listed: HashSet<AffinePermutation> = HashSet::new();
    let mut distinct: BTreeSet<Element> = BTreeSet::new();
    for entry in &entries {
        let e = Element::canonicalize(&entry.word);
        if e.word() != entry.word {
            not_canonical.push(entry.word.to_string());
        }
        if e.affine_length() <= cap {
            listed.insert(AffinePermutation::from_word(&entry.word));
        }
        distinct.insert(e);
    }
    let n = rank.n();
    let mut radius = 0;
    for m in 1..=cap {
        let longest = enumerate_blocks(rank, m)?
            .items
            .iter()
            .map(|b| b.length())
            .max()
            .unwrap_or(0);
        radius = radius.max(longest);
    }
    radius += n * (n + 1) / 2;
    let ball = bfs_enumerate(rank, radius)?;
    let affine = affine_lengths(&ball);
    let mut expected = 0;
    let mut missing = 0;
    for item in &ball {
        let l = affine[&item.perm];
        if (1..=cap).contains(&l) {
            expected += 1;
            if !listed.contains(&item.perm) {
                missing += 1;
            }
        }
    }
    let unexpected = listed.len() + missing - expected;
    Ok(AppendixReport {
        generated: entries.len(),
        distinct: distinct.len(),
        not_canonical,
        missing,
        unexpected,
        expected,
    })
}
