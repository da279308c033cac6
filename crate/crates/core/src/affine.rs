//! Affine blocks `h(j_1,i_1) a ⋯ h(j_m,i_m) a`, the left-multiplication
//! engine, and canonical elements `block · x` of W(Ã_n).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::{h_letters, FiniteElement, HPrefix, IdentityReport};
use crate::word::{Generator, Rank, Word};

/// A pair `(j, i)` standing for `h(j, i)`.
pub type Pair = (usize, usize);

/// Range condition on the first pair.
pub fn first_pair_in_range(n: usize, (j, i): Pair) -> bool {
    (1..=n + 1).contains(&j) && i < n
}

/// Range condition on pairs after the first.
pub fn later_pair_in_range(n: usize, (j, i): Pair) -> bool {
    (i == 0 && j == 1) || ((1..n).contains(&i) && (1..=n).contains(&j))
}

/// The pairwise inequalities between consecutive pairs `prev`, `cur`.
pub fn junction_ok(n: usize, prev: Pair, cur: Pair) -> bool {
    let (jp, ip) = prev;
    let (j, i) = cur;
    later_pair_in_range(n, cur)
        && j <= jp
        && i >= ip
        && !(jp > ip + 1 && j >= jp)
        && !(j > i + 1 && i <= ip)
}

/// Whether `pairs` satisfy all five pairwise inequalities.
pub fn is_valid_block(rank: Rank, pairs: &[Pair]) -> bool {
    let n = rank.n();
    match pairs.first() {
        None => true,
        Some(&p) => {
            first_pair_in_range(n, p) && pairs.windows(2).all(|w| junction_ok(n, w[0], w[1]))
        }
    }
}

/// An affine block: a minimal length representative of a right coset
/// of W(A_n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineBlock {
    rank: Rank,
    pairs: Vec<Pair>,
}

impl AffineBlock {
    pub fn empty(rank: Rank) -> Self {
        AffineBlock {
            rank,
            pairs: Vec::new(),
        }
    }

    pub fn new(rank: Rank, pairs: Vec<Pair>) -> Result<Self> {
        if !is_valid_block(rank, &pairs) {
            return Err(Error::InvalidBlock(pairs));
        }
        Ok(AffineBlock { rank, pairs })
    }

    pub(crate) fn from_pairs_unchecked(rank: Rank, pairs: Vec<Pair>) -> Self {
        debug_assert!(is_valid_block(rank, &pairs), "{pairs:?}");
        AffineBlock { rank, pairs }
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    #[inline]
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Affine length `m`.
    #[inline]
    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn length(&self) -> usize {
        let n = self.rank.n();
        self.pairs.iter().map(|&(j, i)| n + 2 - j + i).sum()
    }

    pub fn letters(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.length());
        for &(j, i) in &self.pairs {
            out.extend(h_letters(self.rank, j, i));
            out.push(Generator::Affine);
        }
        out
    }

    pub fn word(&self) -> Word {
        Word::from_letters_unchecked(self.rank, self.letters())
    }

    /// `s · self` for a non-empty block.
    pub fn left_mul(&self, s: Generator) -> Result<LeftMulOutcome> {
        if self.pairs.is_empty() {
            return Err(Error::Precondition("left_mul_block needs m ≥ 1".into()));
        }
        if !s.is_valid_for(self.rank) {
            return Err(Error::IndexOutOfRange {
                index: s.index(),
                rank: self.rank.n(),
            });
        }
        Ok(left_mul_pairs(self.rank, &self.pairs, s))
    }
}

impl fmt::Display for AffineBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (k, (j, i)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "h({j},{i}) a")?;
        }
        Ok(())
    }
}

/// Result of `s · w_a` for an affine block `w_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftMulOutcome {
    /// `s · w_a = w_a · σ_v`.
    Absorbed(usize),
    /// `s · w_a` is again an affine block.
    NewBlock(AffineBlock),
}

/// One step of `σ_u · h(j,i) a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableStep {
    /// `σ_u h(j,i) a = h(j,i) a σ_v`.
    Absorbed(usize),
    /// `σ_u h(j,i) a = h(j',i') a`.
    Pair(Pair),
}

/// The affine length one tables for `σ_u · h(j, i) a_{n+1}`.
///
/// The `j ≤ i + 1` table is also used for `(j, i) = (1, 0)`.
pub fn sigma_times_h(n: usize, (j, i): Pair, u: usize) -> TableStep {
    use TableStep::*;
    debug_assert!((1..=n).contains(&u));
    if j > i + 1 {
        if u < i {
            Absorbed(u + 1)
        } else if u == i {
            Pair((j, i - 1))
        } else if u == i + 1 && u + 1 < j {
            Pair((j, i + 1))
        } else if u + 1 < j {
            Absorbed(u)
        } else if u + 1 == j {
            Pair((j - 1, i))
        } else if u == j {
            Pair((j + 1, i))
        } else {
            Absorbed(u - 1)
        }
    } else if u + 1 < j {
        Absorbed(u + 1)
    } else if u + 1 == j {
        Pair((j - 1, i))
    } else if u == j {
        Pair((j + 1, i))
    } else if u < i + 1 {
        Absorbed(u)
    } else if u == i + 1 {
        Pair((j, i - 1))
    } else if u == i + 2 {
        Pair((j, i + 1))
    } else {
        Absorbed(u - 1)
    }
}

/// An instance of an exchange rule
/// `h(r,u) a h(s,v) a = h(left) a h(right) a σ_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exchange {
    pub rule: u8,
    pub left: Pair,
    pub right: Pair,
    pub t: usize,
}

/// Every exchange rule whose guard holds for `h(r,u) a h(s,v) a`.
///
/// Parameters range over `1 ≤ r ≤ n+1`, `0 ≤ u ≤ n−1`, `1 ≤ s ≤ n`,
/// `1 ≤ v ≤ n−1`; additionally `(s, v) = (1, 0)` is accepted by rule 4.
pub fn exchange_rules(n: usize, (r, u): Pair, (s, v): Pair) -> Vec<Exchange> {
    let mut out = Vec::new();
    if !first_pair_in_range(n, (r, u)) || !(1..=n).contains(&s) || v >= n {
        return out;
    }
    if v == 0 {
        if s == 1 && u > 0 {
            out.push(Exchange {
                rule: 4,
                left: (r, 0),
                right: (1, u - 1),
                t: n,
            });
        }
        return out;
    }
    if r > u + 1 && s >= r {
        out.push(Exchange {
            rule: 1,
            left: (s + 1, u),
            right: (r, v),
            t: 1,
        });
    }
    if s > u + 1 && u >= v {
        out.push(Exchange {
            rule: 2,
            left: (r, v - 1),
            right: (s, u),
            t: n,
        });
    }
    if v + 1 < s && s <= u + 1 {
        out.push(Exchange {
            rule: 3,
            left: (r, v - 1),
            right: (s - 1, u - 1),
            t: n,
        });
    }
    if s <= v + 1 && v < u {
        out.push(Exchange {
            rule: 4,
            left: (r, v),
            right: (s, u - 1),
            t: n,
        });
    }
    if r <= u + 1 && u + 1 < s {
        out.push(Exchange {
            rule: 5,
            left: (s + 1, u + 1),
            right: (r + 1, v),
            t: 1,
        });
    }
    if r < s && s <= u + 1 {
        out.push(Exchange {
            rule: 6,
            left: (s, u),
            right: (r + 1, v),
            t: 1,
        });
    }
    out
}

/// The first exchange rule, in rule order, whose guard holds.
pub fn exchange(n: usize, left: Pair, right: Pair) -> Option<Exchange> {
    exchange_rules(n, left, right).into_iter().next()
}

/// Carries `σ_u` rightwards through `pairs[start..]`, mutating them.
/// Returns `Some(v)` when it emerges as `σ_v` on the right.
fn carry_sigma(n: usize, pairs: &mut [Pair], start: usize, u: usize) -> Option<usize> {
    let mut v = u;
    let mut k = start;
    while k < pairs.len() {
        match sigma_times_h(n, pairs[k], v) {
            TableStep::Absorbed(w) => {
                v = w;
                k += 1;
            }
            TableStep::Pair(p) => {
                if k + 1 < pairs.len() && !junction_ok(n, p, pairs[k + 1]) {
                    let ex = exchange(n, p, pairs[k + 1])
                        .unwrap_or_else(|| panic!("no exchange rule for {p:?} {:?}", pairs[k + 1]));
                    pairs[k] = ex.left;
                    pairs[k + 1] = ex.right;
                    v = ex.t;
                    k += 2;
                    continue;
                }
                pairs[k] = p;
                return None;
            }
        }
    }
    Some(v)
}

fn left_mul_pairs(rank: Rank, pairs: &[Pair], s: Generator) -> LeftMulOutcome {
    let n = rank.n();
    let mut out = pairs.to_vec();
    let carried = match s {
        Generator::Sigma(u) => carry_sigma(n, &mut out, 0, u),
        Generator::Affine => {
            let (j1, i1) = pairs[0];
            let h = HPrefix::new(rank, j1, i1).expect("first pair in range");
            if h.is_identity() {
                out.remove(0);
                None
            } else if h.is_extremal() {
                out.insert(0, (n + 1, 0));
                None
            } else if i1 == 0 {
                // a ⌊j,n⌋ a = ⌊j,n⌋ a σ_n
                carry_sigma(n, &mut out, 1, n)
            } else {
                // a ⌈i,1⌉ a = ⌈i,1⌉ a σ_1
                carry_sigma(n, &mut out, 1, 1)
            }
        }
    };
    match carried {
        Some(v) => LeftMulOutcome::Absorbed(v),
        None => {
            assert!(
                is_valid_block(rank, &out),
                "left multiplication left {out:?}"
            );
            LeftMulOutcome::NewBlock(AffineBlock { rank, pairs: out })
        }
    }
}

/// Checks every exchange rule over its parameter ranges (including the
/// `(s, v) = (1, 0)` extension of rule 4) against the oracle.
pub fn exchange_rules_check(rank: Rank) -> IdentityReport {
    let n = rank.n();
    let mut rep = IdentityReport::default();
    let word = |pairs: [Pair; 2], tail: Option<usize>| -> Vec<Generator> {
        let mut out = Vec::new();
        for (j, i) in pairs {
            out.extend(h_letters(rank, j, i));
            out.push(Generator::Affine);
        }
        out.extend(tail.map(Generator::Sigma));
        out
    };
    for r in 1..=n + 1 {
        for u in 0..n {
            for s in 1..=n {
                for v in 0..n {
                    for ex in exchange_rules(n, (r, u), (s, v)) {
                        rep.record(
                            rank,
                            &format!("rule {} r={r} u={u} s={s} v={v}", ex.rule),
                            word([(r, u), (s, v)], None),
                            word([ex.left, ex.right], Some(ex.t)),
                            true,
                        );
                    }
                }
            }
        }
    }
    rep
}

/// A group element in canonical form `block · finite`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    block: AffineBlock,
    finite: FiniteElement,
}

impl Element {
    pub fn identity(rank: Rank) -> Self {
        Element {
            block: AffineBlock::empty(rank),
            finite: FiniteElement::identity(rank),
        }
    }

    pub fn new(block: AffineBlock, finite: FiniteElement) -> Result<Self> {
        block.rank().check_same(finite.rank())?;
        Ok(Element { block, finite })
    }

    pub fn generator(rank: Rank, s: Generator) -> Result<Self> {
        if !s.is_valid_for(rank) {
            return Err(Error::IndexOutOfRange {
                index: s.index(),
                rank: rank.n(),
            });
        }
        Ok(Self::identity(rank).left_mul(s))
    }

    /// The canonical form of any word, reduced or not.
    pub fn canonicalize(word: &Word) -> Self {
        let mut e = Self::identity(word.rank());
        for &g in word.letters().iter().rev() {
            e = e.left_mul(g);
        }
        e
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.block.rank()
    }

    #[inline]
    pub fn block(&self) -> &AffineBlock {
        &self.block
    }

    #[inline]
    pub fn finite(&self) -> &FiniteElement {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.block.is_empty() && self.finite.is_identity()
    }

    pub fn length(&self) -> usize {
        self.block.length() + self.finite.length()
    }

    /// The minimal number of `a_{n+1}` letters in an expression.
    pub fn affine_length(&self) -> usize {
        self.block.m()
    }

    pub fn letters(&self) -> Vec<Generator> {
        let mut out = self.block.letters();
        out.extend(self.finite.letters());
        out
    }

    /// The canonical reduced word.
    pub fn word(&self) -> Word {
        Word::from_letters_unchecked(self.rank(), self.letters())
    }

    /// `s · self`.
    ///
    /// # Panics
    /// If `s` is not a generator of this rank.
    pub fn left_mul(&self, s: Generator) -> Element {
        assert!(s.is_valid_for(self.rank()), "generator {s} out of range");
        if self.block.is_empty() {
            return match s {
                Generator::Sigma(k) => Element {
                    block: self.block.clone(),
                    finite: self.finite.left_mul_sigma(k),
                },
                Generator::Affine => {
                    let n = self.rank().n();
                    Element {
                        block: AffineBlock::from_pairs_unchecked(self.rank(), vec![(n + 1, 0)]),
                        finite: self.finite.clone(),
                    }
                }
            };
        }
        match left_mul_pairs(self.rank(), self.block.pairs(), s) {
            LeftMulOutcome::Absorbed(v) => Element {
                block: self.block.clone(),
                finite: self.finite.left_mul_sigma(v),
            },
            LeftMulOutcome::NewBlock(block) => Element {
                block,
                finite: self.finite.clone(),
            },
        }
    }

    /// `self · s`.
    pub fn right_mul(&self, s: Generator) -> Element {
        let mut e = Self::identity(self.rank()).left_mul(s);
        for g in self.letters().into_iter().rev() {
            e = e.left_mul(g);
        }
        e
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.rank().check_same(other.rank())?;
        let mut e = other.clone();
        for g in self.letters().into_iter().rev() {
            e = e.left_mul(g);
        }
        Ok(e)
    }

    pub fn inverse(&self) -> Element {
        let mut e = Self::identity(self.rank());
        for g in self.letters() {
            e = e.left_mul(g);
        }
        e
    }

    pub fn has_left_descent(&self, s: Generator) -> bool {
        self.left_mul(s).length() < self.length()
    }

    pub fn has_right_descent(&self, s: Generator) -> bool {
        match s {
            Generator::Sigma(k) => self.finite.has_right_descent(k),
            Generator::Affine => {
                !self.block.is_empty() && self.right_mul(Generator::Affine).length() < self.length()
            }
        }
    }

    /// `ℒ(self)`, in generator order (`a` first).
    pub fn left_descents(&self) -> Vec<Generator> {
        self.rank()
            .generators()
            .filter(|&s| self.has_left_descent(s))
            .collect()
    }

    /// `ℛ(self)`, in generator order (`a` first).
    pub fn right_descents(&self) -> Vec<Generator> {
        self.rank()
            .generators()
            .filter(|&s| self.has_right_descent(s))
            .collect()
    }

    /// Canonical text: `h(j,i) a … | [i,j] …`.
    pub fn to_canonical_string(&self) -> String {
        format!("{} | {}", self.block, self.finite)
    }

    /// Parses the canonical text produced by [`Element::to_canonical_string`].
    pub fn parse_canonical(text: &str, rank: Rank) -> Result<Self> {
        let bad = || Error::MalformedCanonical(text.to_string());
        let (left, right) = text.split_once('|').ok_or_else(bad)?;
        let pairs = parse_pairs(left.trim()).ok_or_else(bad)?;
        let bricks = parse_bricks(right.trim()).ok_or_else(bad)?;
        let block = AffineBlock::new(rank, pairs)?;
        let finite = FiniteElement::from_bricks(rank, &bricks)?;
        Ok(Element { block, finite })
    }

    pub fn to_json(&self) -> CanonicalJson {
        CanonicalJson {
            pairs: self.block.pairs().iter().map(|&(j, i)| [j, i]).collect(),
            bricks: self.finite.bricks().iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_json(json: &CanonicalJson, rank: Rank) -> Result<Self> {
        let pairs = json.pairs.iter().map(|p| (p[0], p[1])).collect();
        let bricks: Vec<_> = json.bricks.iter().map(|b| (b[0], b[1])).collect();
        Ok(Element {
            block: AffineBlock::new(rank, pairs)?,
            finite: FiniteElement::from_bricks(rank, &bricks)?,
        })
    }
}

fn parse_pairs(text: &str) -> Option<Vec<Pair>> {
    if text == "1" {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    let mut tokens = text.split_whitespace();
    while let Some(tok) = tokens.next() {
        let inner = tok.strip_prefix("h(")?.strip_suffix(')')?;
        let (j, i) = inner.split_once(',')?;
        out.push((j.trim().parse().ok()?, i.trim().parse().ok()?));
        if tokens.next()? != "a" {
            return None;
        }
    }
    Some(out)
}

fn parse_bricks(text: &str) -> Option<Vec<(usize, usize)>> {
    if text == "1" {
        return Some(Vec::new());
    }
    text.split_whitespace()
        .map(|tok| {
            let inner = tok.strip_prefix('[')?.strip_suffix(']')?;
            let (i, j) = inner.split_once(',')?;
            Some((i.trim().parse().ok()?, j.trim().parse().ok()?))
        })
        .collect()
}

/// JSON shape of a canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalJson {
    pub pairs: Vec<[usize; 2]>,
    pub bricks: Vec<[usize; 2]>,
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.block.pairs().cmp(other.block.pairs()))
            .then_with(|| self.finite.cmp_bricks(&other.finite))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// A non-reduced case of `h(j_1,i_1) a h(j,i) a` (or its `m = 2`
/// analogue) together with the position of the hat partner of the
/// rightmost `a_{n+1}` in the displayed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeficientCase {
    pub case: DescentCase,
    pub partner: usize,
}

/// Which listed case applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentCase {
    /// One of the four cases for a single preceding pair.
    Deficient(u8),
    /// One of the three additional cases at affine length two.
    Listed(u8),
    /// `h(j,i) = ⌊j,n⌋σ_1` with `j < n`, or `j = n` and `i_2 = n − 1`,
    /// cancelling against a letter of `⌊j_1,n⌋`.
    Supplementary,
}

fn h_len(n: usize, (j, i): Pair) -> usize {
    n + 1 - j + i
}

/// Matches `h(j_1,i_1) a h(j,i) a` against the four deficient cases; the
/// partner position is relative to the start of `h(j_1,i_1)`.
fn deficient_case(n: usize, (j1, i1): Pair, (j, i): Pair) -> Option<(u8, usize)> {
    let top = n + 1 - j1;
    if j == n + 1 && i >= 1 && i1 >= i {
        Some((1, top + i1 - i))
    } else if i == 0 && 1 < j && j <= n && j1 <= j && i1 + 1 < j {
        Some((2, j - j1))
    } else if i == 0 && 2 < j && j <= n && j1 < j && i1 + 1 >= j {
        Some((3, j - 1 - j1))
    } else if (j, i) == (2, 0) && j1 == 1 && i1 >= 1 {
        // any i_1 ≥ 1, not only i_1 = 1
        Some((4, 0))
    } else {
        None
    }
}

/// Decides whether `h(j_1,i_1) a h(j,i) a` is non-reduced, reporting the
/// case and the position of the hat partner of the last letter.
pub fn deficiency_m1(rank: Rank, first: Pair, second: HPrefix) -> Result<Option<DeficientCase>> {
    let n = rank.n();
    if !first_pair_in_range(n, first) {
        return Err(Error::Precondition(format!("pair {first:?} out of range")));
    }
    if second.is_identity() {
        return Err(Error::Precondition(
            "second factor must differ from 1".into(),
        ));
    }
    Ok(
        deficient_case(n, first, (second.r, second.i)).map(|(c, partner)| DeficientCase {
            case: DescentCase::Deficient(c),
            partner,
        }),
    )
}

/// Decides whether `h(j_1,i_1) a h(j_2,i_2) a h(j,i) a` is non-reduced for a
/// valid two-pair block, reporting the case and the hat partner position.
pub fn affine_descent_cases_m2(
    rank: Rank,
    pairs: &[Pair],
    x_prefix: HPrefix,
) -> Result<Option<DeficientCase>> {
    let n = rank.n();
    if pairs.len() != 2 || !is_valid_block(rank, pairs) {
        return Err(Error::Precondition(format!(
            "expected a valid block with m = 2: {pairs:?}"
        )));
    }
    if x_prefix.is_identity() {
        return Err(Error::Precondition("x-prefix must differ from 1".into()));
    }
    let (j1, i1) = pairs[0];
    let (j2, i2) = pairs[1];
    let (j, i) = (x_prefix.r, x_prefix.i);
    let offset = h_len(n, pairs[0]) + 1;
    if let Some((c, p)) = deficient_case(n, pairs[1], (j, i)) {
        return Ok(Some(DeficientCase {
            case: DescentCase::Deficient(c),
            partner: offset + p,
        }));
    }
    let top = n + 1 - j1;
    let listed = if (j, i) == (n, 1) && j2 > 1 && 1 <= i2 && i2 + 1 < n {
        Some((1, offset - 1))
    } else if j == n && 1 <= i && i <= i2 && i2 + 1 < n && i < j2 && i1 + 1 >= i && i >= 2 {
        Some((2, top + i1 - (i - 1)))
    } else if j == n && 1 <= i && i <= i2 && i2 + 1 < n && i >= j2 && i1 >= i {
        Some((3, top + i1 - i))
    } else {
        None
    };
    if let Some((c, partner)) = listed {
        return Ok(Some(DeficientCase {
            case: DescentCase::Listed(c),
            partner,
        }));
    }
    // x-prefix ⌊j,n⌋σ_1: the partner is σ_k in ⌊j_1,n⌋; k = n + 1 is case (1)
    if i == 1 && j <= n && j2 > 1 {
        let k = if i1 + 1 >= j {
            j - 1
        } else if i2 + 1 >= j {
            j
        } else {
            j + 1
        };
        if j1 <= k && k <= n {
            return Ok(Some(DeficientCase {
                case: DescentCase::Supplementary,
                partner: k - j1,
            }));
        }
    }
    Ok(None)
}
