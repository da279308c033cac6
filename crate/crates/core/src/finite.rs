//! The finite group W(A_n) in its classical canonical form
//! `⌊i_1, j_1⌋ ⌊i_2, j_2⌋ ⋯ ⌊i_s, j_s⌋` with `n ≥ j_1 > ⋯ > j_s ≥ 1`.
//!
//! Here `⌊i, j⌋ = σ_i σ_{i+1} ⋯ σ_j` and `⌈i, j⌉ = σ_i σ_{i-1} ⋯ σ_j`; out of
//! range bricks (such as `⌊n+1, n⌋` or `⌈0, 1⌉`) are empty.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::AffinePermutation;
use crate::word::{Generator, Rank, Word};

/// Letters of `⌊i, j⌋ = σ_i ⋯ σ_j` (empty when `i > j`).
pub fn ascending(i: usize, j: usize) -> impl Iterator<Item = Generator> {
    (i.max(1)..=j).map(Generator::Sigma)
}

/// Letters of `⌈i, j⌉ = σ_i ⋯ σ_j` (empty when `i < j`).
pub fn descending(i: usize, j: usize) -> impl Iterator<Item = Generator> {
    (j.max(1)..=i).rev().map(Generator::Sigma)
}

/// An element of W(A_n) in canonical brick form.
///
/// Internally `starts[j - 1]` is the first index of the brick ending at `j`,
/// or `j + 1` when there is no such brick.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteElement {
    rank: Rank,
    starts: Vec<usize>,
}

impl FiniteElement {
    pub fn identity(rank: Rank) -> Self {
        FiniteElement {
            rank,
            starts: (2..=rank.n() + 1).collect(),
        }
    }

    /// Builds an element from bricks `(i_t, j_t)` meaning `⌊i_t, j_t⌋`; the
    /// bricks must already be in canonical order.
    pub fn from_bricks(rank: Rank, bricks: &[(usize, usize)]) -> Result<Self> {
        let mut out = Self::identity(rank);
        let mut prev_j = rank.n() + 1;
        for &(i, j) in bricks {
            if j >= prev_j || j < 1 || i < 1 || i > j {
                return Err(Error::InvalidBricks(format!("{bricks:?}")));
            }
            out.starts[j - 1] = i;
            prev_j = j;
        }
        Ok(out)
    }

    /// Canonical form of a word over `σ_1, …, σ_n`.
    pub fn canonicalize(word: &Word) -> Result<Self> {
        let mut x = Self::identity(word.rank());
        for &g in word.letters().iter().rev() {
            match g {
                Generator::Sigma(k) => x.left_mul_sigma_in_place(k),
                Generator::Affine => return Err(Error::AffineLetter),
            }
        }
        Ok(x)
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// The bricks `(i_t, j_t)`, with `j_t` strictly decreasing.
    pub fn bricks(&self) -> Vec<(usize, usize)> {
        (1..=self.rank.n())
            .rev()
            .filter(|&j| self.starts[j - 1] <= j)
            .map(|j| (self.starts[j - 1], j))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.starts.iter().zip(2..).all(|(&s, e)| s == e)
    }

    pub fn length(&self) -> usize {
        self.starts.iter().zip(1..).map(|(&s, j)| j + 1 - s).sum()
    }

    pub fn letters(&self) -> Vec<Generator> {
        self.bricks()
            .into_iter()
            .flat_map(|(i, j)| ascending(i, j))
            .collect()
    }

    /// The canonical reduced word.
    pub fn word(&self) -> Word {
        Word::from_letters_unchecked(self.rank, self.letters())
    }

    /// Replaces `self` with `σ_k · self`.
    ///
    /// Walks the bricks from `j = n` downwards: `σ_k` commutes past
    /// `⌊r, j⌋` when `k < r − 1`, extends it when `k = r − 1`, shortens it when
    /// `k = r`, and becomes `σ_{k-1}` on the other side when `r < k ≤ j`.
    pub(crate) fn left_mul_sigma_in_place(&mut self, k: usize) {
        debug_assert!((1..=self.rank.n()).contains(&k));
        let mut k = k;
        for j in (1..=self.rank.n()).rev() {
            if k > j {
                unreachable!("generator index exceeds the current parabolic rank");
            }
            let r = self.starts[j - 1];
            if k + 1 < r {
                continue;
            } else if k + 1 == r {
                self.starts[j - 1] = k;
                return;
            } else if k == r {
                self.starts[j - 1] = r + 1;
                return;
            } else {
                k -= 1;
            }
        }
        unreachable!("insertion always terminates at j = k");
    }

    pub fn left_mul_sigma(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.left_mul_sigma_in_place(k);
        out
    }

    pub fn right_mul_sigma(&self, k: usize) -> Self {
        let mut out = Self::identity(self.rank);
        out.left_mul_sigma_in_place(k);
        for g in self.letters().into_iter().rev() {
            out.left_mul_sigma_in_place(g.index());
        }
        out
    }

    /// Canonical form of `self · other`.
    pub fn mul(&self, other: &FiniteElement) -> Result<Self> {
        self.rank.check_same(other.rank)?;
        let mut out = other.clone();
        for g in self.letters().into_iter().rev() {
            out.left_mul_sigma_in_place(g.index());
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        let mut out = Self::identity(self.rank);
        for g in self.letters() {
            out.left_mul_sigma_in_place(g.index());
        }
        out
    }

    pub fn has_left_descent(&self, k: usize) -> bool {
        self.left_mul_sigma(k).length() < self.length()
    }

    pub fn has_right_descent(&self, k: usize) -> bool {
        self.right_mul_sigma(k).length() < self.length()
    }

    /// Right descent set as generator indices.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank.n())
            .filter(|&k| self.has_right_descent(k))
            .collect()
    }

    /// `support[k]` tells whether `σ_k` occurs (index 0 is unused).
    pub fn support(&self) -> Vec<bool> {
        let mut support = vec![false; self.rank.n() + 1];
        for (i, j) in self.bricks() {
            support[i..=j].fill(true);
        }
        support
    }

    /// Both `σ_1` and `σ_n` lie in the support.
    pub fn is_extremal(&self) -> bool {
        let support = self.support();
        support[1] && support[self.rank.n()]
    }

    /// Whether the element lies in `P = ⟨σ_2, …, σ_{n-1}⟩`.
    pub fn is_in_parabolic(&self) -> bool {
        let support = self.support();
        !support[1] && !support[self.rank.n()]
    }

    /// Whether the element lies in `W(A_{n-1}) = ⟨σ_1, …, σ_{n-1}⟩`.
    pub fn avoids_top(&self) -> bool {
        !self.support()[self.rank.n()]
    }

    /// The unique factorization `self = h(r, i) · p` with `p ∈ P` and
    /// lengths adding up.
    pub fn peel_h(&self) -> (HPrefix, FiniteElement) {
        let n = self.rank.n();
        let r = self.starts[n - 1];
        let mut rest = self.clone();
        rest.starts[n - 1] = n + 1;
        for i in 0..n {
            // ⌈i,1⌉^{-1} · rest = σ_1 ⋯ σ_i · rest
            let mut p = rest.clone();
            for k in (1..=i).rev() {
                p.left_mul_sigma_in_place(k);
            }
            if p.is_in_parabolic() && p.length() + i == rest.length() {
                return (
                    HPrefix {
                        rank: self.rank,
                        r,
                        i,
                    },
                    p,
                );
            }
        }
        unreachable!("every element factors through some h(r, i)")
    }

    /// Canonical ordering key: bricks in lexicographic order.
    pub(crate) fn cmp_bricks(&self, other: &Self) -> Ordering {
        self.bricks().cmp(&other.bricks())
    }

    /// All `(n+1)!` elements, via the brick parametrization.
    pub fn all(rank: Rank) -> Vec<FiniteElement> {
        let n = rank.n();
        let mut out = vec![Self::identity(rank)];
        for j in 1..=n {
            let mut next = Vec::with_capacity(out.len() * (j + 1));
            for x in &out {
                for start in 1..=j + 1 {
                    let mut y = x.clone();
                    y.starts[j - 1] = start;
                    next.push(y);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for FiniteElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bricks = self.bricks();
        if bricks.is_empty() {
            return f.write_str("1");
        }
        for (k, (i, j)) in bricks.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "[{i},{j}]")?;
        }
        Ok(())
    }
}

/// The element `h(r, i) = ⌊r, n⌋ ⌈i, 1⌉` with `1 ≤ r ≤ n + 1`, `0 ≤ i ≤ n − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HPrefix {
    rank: Rank,
    pub r: usize,
    pub i: usize,
}

impl HPrefix {
    pub fn new(rank: Rank, r: usize, i: usize) -> Result<Self> {
        let n = rank.n();
        if !(1..=n + 1).contains(&r) || i > n - 1 {
            return Err(Error::Precondition(format!(
                "h({r},{i}) out of range for rank {n}"
            )));
        }
        Ok(HPrefix { rank, r, i })
    }

    pub fn identity(rank: Rank) -> Self {
        HPrefix {
            rank,
            r: rank.n() + 1,
            i: 0,
        }
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.r == self.rank.n() + 1 && self.i == 0
    }

    pub fn length(&self) -> usize {
        self.rank.n() + 1 - self.r + self.i
    }

    pub fn letters(&self) -> Vec<Generator> {
        h_letters(self.rank, self.r, self.i)
    }

    pub fn to_finite(&self) -> FiniteElement {
        FiniteElement::canonicalize(&Word::from_letters_unchecked(self.rank, self.letters()))
            .expect("h(r,i) has no affine letter")
    }

    /// Whether both `σ_1` and `σ_n` occur.
    pub fn is_extremal(&self) -> bool {
        (self.r == 1 && self.i == 0) || (self.i >= 1 && self.r <= self.rank.n())
    }
}

impl fmt::Display for HPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({},{})", self.r, self.i)
    }
}

/// Letters of `h(r, i) = σ_r ⋯ σ_n σ_i ⋯ σ_1`.
pub fn h_letters(rank: Rank, r: usize, i: usize) -> Vec<Generator> {
    ascending(r, rank.n()).chain(descending(i, 1)).collect()
}

/// `h(j_prev, i_prev) ⌊j, n⌋ = h(j', i') ⌊u, n − 1⌋` with `u ≥ 2`.
///
/// Requires `j_prev ≥ j > 1` and that `(j_prev, i_prev)` may be followed by
/// a pair with first entry `j` under the pairwise inequalities.
pub fn h_times_floor(
    rank: Rank,
    j_prev: usize,
    i_prev: usize,
    j: usize,
) -> Result<(HPrefix, usize)> {
    let n = rank.n();
    let bad = || Error::Precondition(format!("h({j_prev},{i_prev}) ⌊{j},{n}⌋"));
    if j <= 1 || j > j_prev || j_prev > n + 1 || i_prev > n - 1 {
        return Err(bad());
    }
    if j_prev > i_prev + 1 && j == j_prev {
        return Err(bad());
    }
    let (r, i, u) = if j_prev > j && j > i_prev + 1 {
        (j, i_prev, j_prev - 1)
    } else if j_prev > i_prev + 1 && i_prev + 1 >= j {
        (j - 1, i_prev - 1, j_prev - 1)
    } else {
        (j - 1, i_prev, j_prev)
    };
    Ok((HPrefix::new(rank, r, i)?, u))
}

/// Outcome of an exhaustive identity check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    /// Number of instances examined.
    pub checked: usize,
    /// Instances whose two sides have different letter counts (expected
    /// only for the families that cancel letters).
    pub length_changing: usize,
    /// Human-readable description of every failed instance.
    pub violations: Vec<String>,
}

impl IdentityReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.length_changing += other.length_changing;
        self.violations.extend(other.violations);
    }

    /// Records one instance: both sides must be equal in the oracle, the
    /// right side must be reduced, and when `same_length` the letter counts
    /// must agree.
    pub(crate) fn record(
        &mut self,
        rank: Rank,
        name: &str,
        lhs: Vec<Generator>,
        rhs: Vec<Generator>,
        same_length: bool,
    ) {
        self.checked += 1;
        let (l, r) = (lhs.len(), rhs.len());
        let lhs = Word::from_letters_unchecked(rank, lhs);
        let rhs = Word::from_letters_unchecked(rank, rhs);
        let pl = AffinePermutation::from_word(&lhs);
        let pr = AffinePermutation::from_word(&rhs);
        if l != r {
            self.length_changing += 1;
        }
        let problem = if pl != pr {
            Some("sides differ")
        } else if pr.length() != r {
            Some("right side not reduced")
        } else if same_length && l != r {
            Some("letter counts differ")
        } else if !same_length && l < r {
            Some("right side longer")
        } else {
            None
        };
        if let Some(p) = problem {
            self.violations
                .push(format!("n={} {name}: {p}: `{lhs}` vs `{rhs}`", rank.n()));
        }
    }
}

fn up(i: usize, j: usize) -> Vec<Generator> {
    ascending(i, j).collect()
}

fn down(i: usize, j: usize) -> Vec<Generator> {
    descending(i, j).collect()
}

fn cat(parts: &[Vec<Generator>]) -> Vec<Generator> {
    parts.concat()
}

/// Instantiates the seven two-brick and four three-brick product identities
/// over their full parameter ranges and checks them against the oracle.
///
/// The families `⌈a,1⌉⌊1,n⌋`, `⌊a,n⌋⌊b,n⌋` with `a ≤ b`, `⌈a,1⌉⌈b,1⌉` with
/// `a ≥ b`, and the three-brick case `b = c` cancel letters; for them only
/// the reducedness of the right side is required.
pub fn brick_identities_check(rank: Rank) -> IdentityReport {
    let n = rank.n();
    let mut rep = IdentityReport::default();
    for a in 0..=n {
        for b in 1..=n + 1 {
            if 1 < b && b <= a + 1 {
                rep.record(
                    rank,
                    &format!("2-brick(1) a={a} b={b}"),
                    cat(&[down(a, 1), up(b, n)]),
                    cat(&[up(b - 1, n), down(a - 1, 1)]),
                    true,
                );
            }
            if b > a + 1 {
                rep.record(
                    rank,
                    &format!("2-brick(2) a={a} b={b}"),
                    cat(&[down(a, 1), up(b, n)]),
                    cat(&[up(b, n), down(a, 1)]),
                    true,
                );
            }
        }
        rep.record(
            rank,
            &format!("2-brick(3) a={a}"),
            cat(&[down(a, 1), up(1, n)]),
            up(a + 1, n),
            a == 0,
        );
    }
    for a in 1..=n + 1 {
        for b in 1..=n + 1 {
            if a > b {
                rep.record(
                    rank,
                    &format!("2-brick(4) a={a} b={b}"),
                    cat(&[up(a, n), up(b, n)]),
                    cat(&[up(b, n), up(a - 1, n - 1)]),
                    true,
                );
            }
            if a <= b && b <= n {
                rep.record(
                    rank,
                    &format!("2-brick(5) a={a} b={b}"),
                    cat(&[up(a, n), up(b, n)]),
                    cat(&[up(b + 1, n), up(a, n - 1)]),
                    false,
                );
            }
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            if a < b {
                rep.record(
                    rank,
                    &format!("2-brick(6) a={a} b={b}"),
                    cat(&[down(a, 1), down(b, 1)]),
                    cat(&[down(b, 1), down(a + 1, 2)]),
                    true,
                );
            } else {
                rep.record(
                    rank,
                    &format!("2-brick(7) a={a} b={b}"),
                    cat(&[down(a, 1), down(b, 1)]),
                    cat(&[down(b - 1, 1), down(a, 2)]),
                    false,
                );
            }
        }
    }
    for a in 0..n {
        for b in 1..=n + 1 {
            for c in 1..=n {
                let lhs = cat(&[up(b, n), down(a, 1), up(c, n)]);
                let name = format!("3-brick a={a} b={b} c={c}");
                if c > a + 1 && b > c {
                    rep.record(
                        rank,
                        &name,
                        lhs,
                        cat(&[up(c, n), down(a, 1), up(b - 1, n - 1)]),
                        true,
                    );
                } else if c > a + 1 && b == c {
                    rep.record(
                        rank,
                        &name,
                        lhs,
                        cat(&[up(b + 1, n), down(a, 1), up(b, n - 1)]),
                        false,
                    );
                } else if 1 < c && c <= a + 1 && a + 1 < b {
                    rep.record(
                        rank,
                        &name,
                        lhs,
                        cat(&[up(c - 1, n), down(a - 1, 1), up(b - 1, n - 1)]),
                        true,
                    );
                } else if 1 < c && c <= b && b <= a + 1 {
                    rep.record(
                        rank,
                        &name,
                        lhs,
                        cat(&[up(c - 1, n), down(a, 1), up(b, n - 1)]),
                        true,
                    );
                }
            }
        }
    }
    rep
}
