//! Affine permutations: the window realization of Ã_n used as ground truth.
//!
//! An element is a bijection `w: ℤ → ℤ` with `w(k + N) = w(k) + N`, where
//! `N = n + 1`, and `Σ_{k=1..N} (w(k) − k) = 0`. It is stored through its
//! window `(w(1), …, w(N))`.
//!
//! Generator `σ_i` acts on the right by swapping positions `i` and `i + 1`;
//! the affine generator `a_{n+1}` swaps positions `0` and `1` (equivalently
//! `N` and `N + 1`). A word `s_1⋯s_k` maps to `s_1 ∘ ⋯ ∘ s_k`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::word::{Generator, Rank, Word};

/// Default cap on the number of elements produced by [`bfs_enumerate`].
pub const DEFAULT_ELEMENT_CAP: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePermutation {
    rank: Rank,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(rank: Rank) -> Self {
        let window = (1..=rank.generator_count() as i64).collect();
        AffinePermutation { rank, window }
    }

    /// Builds a permutation from a window, checking both invariants.
    pub fn from_window(rank: Rank, window: Vec<i64>) -> Result<Self> {
        let big_n = rank.generator_count();
        if window.len() != big_n {
            return Err(Error::Precondition(format!(
                "window has {} entries, expected {big_n}",
                window.len()
            )));
        }
        let residues: HashSet<i64> = window.iter().map(|v| v.rem_euclid(big_n as i64)).collect();
        if residues.len() != big_n {
            return Err(Error::Precondition(
                "window values collide modulo n+1".into(),
            ));
        }
        let drift: i64 = window.iter().zip(1..).map(|(v, k)| v - k).sum();
        if drift != 0 {
            return Err(Error::Precondition(format!(
                "window drift {drift} is not zero"
            )));
        }
        Ok(AffinePermutation { rank, window })
    }

    pub fn from_word(word: &Word) -> Self {
        word.letters()
            .iter()
            .fold(Self::identity(word.rank()), |p, &g| p.mul_generator(g))
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    #[inline]
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    #[inline]
    fn modulus(&self) -> i64 {
        self.rank.generator_count() as i64
    }

    /// `w(k)` for any integer `k`.
    #[inline]
    pub fn eval(&self, k: i64) -> i64 {
        let big_n = self.modulus();
        let r = (k - 1).rem_euclid(big_n);
        let shift = (k - 1 - r) / big_n;
        self.window[r as usize] + shift * big_n
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, k)| v == k)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        debug_assert_eq!(self.rank, other.rank);
        let window = other.window.iter().map(|&v| self.eval(v)).collect();
        AffinePermutation {
            rank: self.rank,
            window,
        }
    }

    pub fn inverse(&self) -> AffinePermutation {
        let big_n = self.modulus();
        let mut window = vec![0; big_n as usize];
        for (k, &v) in (1..).zip(&self.window) {
            let r = (v - 1).rem_euclid(big_n);
            let shift = (v - 1 - r) / big_n;
            window[r as usize] = k - shift * big_n;
        }
        AffinePermutation {
            rank: self.rank,
            window,
        }
    }

    /// `self ∘ s`: swaps the positions `k` and `k + 1` (mod `N`) where `k` is
    /// the generator's index on the cycle.
    pub fn mul_generator(&self, g: Generator) -> AffinePermutation {
        let big_n = self.modulus() as usize;
        let mut window = self.window.clone();
        match g {
            Generator::Sigma(i) => window.swap(i - 1, i),
            Generator::Affine => {
                let first = window[0];
                window[0] = window[big_n - 1] - big_n as i64;
                window[big_n - 1] = first + big_n as i64;
            }
        }
        AffinePermutation {
            rank: self.rank,
            window,
        }
    }

    /// `s ∘ self`: swaps the values in the residue classes `k` and `k + 1`.
    pub fn left_mul_generator(&self, g: Generator) -> AffinePermutation {
        let big_n = self.modulus();
        let k = g.index() as i64;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(big_n);
                if r == k {
                    v + 1
                } else if r == (k + 1) % big_n {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePermutation {
            rank: self.rank,
            window,
        }
    }

    /// Coxeter length `Σ_{1≤i<j≤N} |⌊(w(j) − w(i)) / N⌋|`.
    pub fn length(&self) -> usize {
        let big_n = self.modulus();
        let mut total = 0i64;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(big_n).abs();
            }
        }
        total as usize
    }

    /// Whether `l(self · s) < l(self)`.
    pub fn has_right_descent(&self, g: Generator) -> bool {
        let k = g.index() as i64;
        self.eval(k) > self.eval(k + 1)
    }

    /// Whether `l(s · self) < l(self)`.
    pub fn has_left_descent(&self, g: Generator) -> bool {
        self.inverse().has_right_descent(g)
    }
}

/// One element found by [`bfs_enumerate`].
#[derive(Debug, Clone)]
pub struct Enumerated {
    pub perm: AffinePermutation,
    pub length: usize,
    /// A reduced word for the element (discovered by right extension).
    pub word: Word,
}

/// All elements of length at most `max_len`, sorted by length and then by
/// window.
pub fn bfs_enumerate(rank: Rank, max_len: usize) -> Result<Vec<Enumerated>> {
    bfs_enumerate_capped(rank, max_len, DEFAULT_ELEMENT_CAP)
}

pub fn bfs_enumerate_capped(rank: Rank, max_len: usize, cap: usize) -> Result<Vec<Enumerated>> {
    let identity = AffinePermutation::identity(rank);
    let mut seen: HashSet<AffinePermutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut out = vec![Enumerated {
        perm: identity,
        length: 0,
        word: Word::empty(rank),
    }];
    let mut frontier_start = 0;
    for length in 1..=max_len {
        let frontier_end = out.len();
        let mut layer = Vec::new();
        for item in &out[frontier_start..frontier_end] {
            for g in rank.generators() {
                let next = item.perm.mul_generator(g);
                if seen.contains(&next) {
                    continue;
                }
                seen.insert(next.clone());
                let mut letters = item.word.letters().to_vec();
                letters.push(g);
                layer.push(Enumerated {
                    perm: next,
                    length,
                    word: Word::from_letters_unchecked(rank, letters),
                });
            }
        }
        if out.len() + layer.len() > cap {
            return Err(Error::ResourceGuard(cap));
        }
        layer.sort_by(|a, b| a.perm.window.cmp(&b.perm.window));
        out.extend(layer);
        frontier_start = frontier_end;
    }
    Ok(out)
}

/// Minimal number of affine letters over all reduced words, computed for
/// every element of a ball returned by [`bfs_enumerate`] by dynamic
/// programming over right descents.
pub fn affine_lengths(ball: &[Enumerated]) -> HashMap<AffinePermutation, usize> {
    let mut out: HashMap<AffinePermutation, usize> = HashMap::with_capacity(ball.len());
    for e in ball {
        if e.length == 0 {
            out.insert(e.perm.clone(), 0);
            continue;
        }
        let best = e
            .perm
            .rank()
            .generators()
            .filter(|&g| e.perm.has_right_descent(g))
            .map(|g| {
                let shorter = &out[&e.perm.mul_generator(g)];
                shorter + usize::from(g == Generator::Affine)
            })
            .min()
            .expect("non-identity element has a right descent");
        out.insert(e.perm.clone(), best);
    }
    out
}
