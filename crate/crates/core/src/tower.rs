//! The embedding `R_n : W(Ã_{n-1}) → W(Ã_n)` fixing `σ_1, …, σ_{n-1}` and
//! sending `a_n` to `σ_n a_{n+1} σ_n`.

use crate::affine::{first_pair_in_range, is_valid_block, AffineBlock, Element, Pair};
use crate::finite::FiniteElement;
use crate::word::{Generator, Rank, Word};

/// The data of the closed embedding formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingWitness {
    /// `max{k : n − k − i_k > 0}`, or 0 when the block is empty.
    pub s_break: usize,
    /// `n − s_break + 1`.
    pub t: usize,
    /// `shifted[k]` is true when the `(k+1)`-th pair had its `i` raised.
    pub shifted: Vec<bool>,
}

fn break_index(n: usize, pairs: &[Pair]) -> usize {
    pairs
        .iter()
        .enumerate()
        .filter(|&(k, &(_, i))| n > k + 1 + i)
        .map(|(k, _)| k + 1)
        .max()
        .unwrap_or(0)
}

/// Witness for embedding an element of rank `n − 1` into rank `n`.
pub fn witness(e: &Element) -> EmbeddingWitness {
    let n = e.rank().n() + 1;
    let pairs = e.block().pairs();
    let s = break_index(n, pairs);
    assert!(pairs.is_empty() || s >= 1, "first pair always qualifies");
    EmbeddingWitness {
        s_break: s,
        t: n - s + 1,
        shifted: (1..=pairs.len()).map(|k| k > s).collect(),
    }
}

/// `R_n(e)` via the closed formula.
pub fn embed(e: &Element) -> Element {
    embed_with_witness(e).0
}

pub fn embed_with_witness(e: &Element) -> (Element, EmbeddingWitness) {
    let rank = Rank::new(e.rank().n() + 1).expect("rank grows");
    let n = rank.n();
    let w = witness(e);
    let pairs: Vec<Pair> = e
        .block()
        .pairs()
        .iter()
        .zip(&w.shifted)
        .map(|(&(j, i), &up)| (j, i + usize::from(up)))
        .collect();
    let mut bricks = e.finite().bricks();
    if w.t <= n {
        bricks.insert(0, (w.t, n));
    }
    let out = Element::new(
        AffineBlock::new(rank, pairs).expect("embedded block satisfies the inequalities"),
        FiniteElement::from_bricks(rank, &bricks).expect("top brick then lower bricks"),
    )
    .expect("same rank");
    (out, w)
}

/// Reference path: substitute `σ_n a_{n+1} σ_n` for `a_n` in the canonical
/// word and canonicalize at rank `n`.
pub fn embed_by_substitution(e: &Element) -> Element {
    let rank = Rank::new(e.rank().n() + 1).expect("rank grows");
    let n = rank.n();
    let mut letters = Vec::new();
    for g in e.letters() {
        match g {
            Generator::Sigma(k) => letters.push(Generator::Sigma(k)),
            Generator::Affine => {
                letters.extend([Generator::Sigma(n), Generator::Affine, Generator::Sigma(n)])
            }
        }
    }
    Element::canonicalize(&Word::new(rank, letters).expect("letters valid at rank n"))
}

/// Conditions on the block alone for `block · x` to lie in the image of the
/// embedding for some `x`: the range of the first pair and the break
/// inequality after `s_break`.
pub fn block_meets_image_conditions(block: &AffineBlock) -> bool {
    let n = block.rank().n();
    if n < 3 {
        return false;
    }
    let pairs = block.pairs();
    let s = break_index(n, pairs);
    match pairs.first() {
        None => true,
        Some(&(j1, i1)) => {
            j1 <= n && i1 + 1 < n && pairs.get(s).is_none_or(|&(_, i)| n < s + 1 + i)
        }
    }
}

/// Whether `e` lies in the image of the embedding from rank `n − 1`.
pub fn is_in_image(e: &Element) -> bool {
    if !block_meets_image_conditions(e.block()) {
        return false;
    }
    let n = e.rank().n();
    let s = break_index(n, e.block().pairs());
    match e.finite().bricks().first() {
        Some(&(start, j)) if j == n => start == n - s + 1,
        _ => s == 0,
    }
}

/// Inverts [`embed`] when `e` lies in the image.
pub fn preimage(e: &Element) -> Option<Element> {
    if !is_in_image(e) {
        return None;
    }
    let rank = Rank::new(e.rank().n() - 1).ok()?;
    let n = e.rank().n();
    let s = break_index(n, e.block().pairs());
    let pairs: Vec<Pair> = e
        .block()
        .pairs()
        .iter()
        .enumerate()
        .map(|(k, &(j, i))| (j, if k + 1 > s { i - 1 } else { i }))
        .collect();
    if !pairs
        .first()
        .is_none_or(|&p| first_pair_in_range(rank.n(), p))
        || !is_valid_block(rank, &pairs)
    {
        return None;
    }
    let bricks: Vec<_> = e
        .finite()
        .bricks()
        .into_iter()
        .filter(|&(_, j)| j < n)
        .collect();
    let out = Element::new(
        AffineBlock::new(rank, pairs).ok()?,
        FiniteElement::from_bricks(rank, &bricks).ok()?,
    )
    .ok()?;
    Some(out)
}
