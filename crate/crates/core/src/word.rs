//! Generators and words of the affine group of type Ã_n.
//!
//! The generators are `σ_1, …, σ_n` together with the affine generator
//! `a_{n+1}`. They sit on a cycle `a_{n+1} - σ_1 - σ_2 - ⋯ - σ_n - a_{n+1}`,
//! which is what [`Word::rotate`] turns by one step.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::AffinePermutation;

/// Number of finite generators `n`; always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        Ok(Rank(n))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// Number of generators, `n + 1`.
    #[inline]
    pub fn generator_count(self) -> usize {
        self.0 + 1
    }

    /// All generators, `a_{n+1}` first and then `σ_1, …, σ_n`.
    pub fn generators(self) -> impl Iterator<Item = Generator> {
        std::iter::once(Generator::Affine).chain((1..=self.0).map(Generator::Sigma))
    }

    pub(crate) fn check_same(self, other: Rank) -> Result<()> {
        if self != other {
            return Err(Error::RankMismatch {
                left: self.0,
                right: other.0,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A Coxeter generator: `σ_i` or the affine generator `a_{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Sigma(usize),
    Affine,
}

impl Generator {
    /// Position on the generator cycle: `a_{n+1}` is 0, `σ_i` is `i`.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Generator::Affine => 0,
            Generator::Sigma(i) => i,
        }
    }

    /// Inverse of [`Generator::index`], reading indices modulo `n + 1`.
    #[inline]
    pub fn from_index(rank: Rank, k: usize) -> Generator {
        match k % rank.generator_count() {
            0 => Generator::Affine,
            i => Generator::Sigma(i),
        }
    }

    pub fn is_valid_for(self, rank: Rank) -> bool {
        match self {
            Generator::Affine => true,
            Generator::Sigma(i) => (1..=rank.n()).contains(&i),
        }
    }

    /// Image under the diagram rotation `a_{n+1} → σ_1 → ⋯ → σ_n → a_{n+1}`
    /// applied `steps` times.
    pub fn rotate(self, rank: Rank, steps: i64) -> Generator {
        let m = rank.generator_count() as i64;
        let k = (self.index() as i64 + steps).rem_euclid(m);
        Generator::from_index(rank, k as usize)
    }

    /// Whether the two generators are joined by an edge of the cyclic diagram.
    pub fn is_adjacent(self, other: Generator, rank: Rank) -> bool {
        let m = rank.generator_count();
        let (a, b) = (self.index(), other.index());
        a != b && ((a + 1) % m == b || (b + 1) % m == a)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Affine => write!(f, "a"),
            Generator::Sigma(i) => write!(f, "s{i}"),
        }
    }
}

/// A finite sequence of generators, tagged with its rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: Rank,
    letters: Vec<Generator>,
}

impl Word {
    pub fn empty(rank: Rank) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn new(rank: Rank, letters: Vec<Generator>) -> Result<Self> {
        for &g in &letters {
            if !g.is_valid_for(rank) {
                return Err(Error::IndexOutOfRange {
                    index: g.index(),
                    rank: rank.n(),
                });
            }
        }
        Ok(Word { rank, letters })
    }

    pub(crate) fn from_letters_unchecked(rank: Rank, letters: Vec<Generator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.is_valid_for(rank)));
        Word { rank, letters }
    }

    /// Parses whitespace- or `*`-separated tokens `s<k>` and `a`.
    pub fn parse(text: &str, rank: Rank) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == '*') {
            if token.is_empty() {
                continue;
            }
            let g = if token == "a" {
                Generator::Affine
            } else {
                let digits = token
                    .strip_prefix('s')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| Error::MalformedToken(token.to_string()))?;
                let index: usize = digits
                    .parse()
                    .map_err(|_| Error::MalformedToken(token.to_string()))?;
                Generator::Sigma(index)
            };
            if !g.is_valid_for(rank) {
                return Err(Error::IndexOutOfRange {
                    index: g.index(),
                    rank: rank.n(),
                });
            }
            letters.push(g);
        }
        Ok(Word { rank, letters })
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    #[inline]
    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, g: Generator) -> Result<()> {
        if !g.is_valid_for(self.rank) {
            return Err(Error::IndexOutOfRange {
                index: g.index(),
                rank: self.rank.n(),
            });
        }
        self.letters.push(g);
        Ok(())
    }

    /// Concatenation; both words must have the same rank.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.rank.check_same(other.rank)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// The letters in reverse order; represents the inverse element.
    pub fn reversed(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Copy of the word with the letters at the given positions removed.
    pub fn without_positions(&self, positions: &[usize]) -> Word {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|(k, _)| !positions.contains(k))
            .map(|(_, &g)| g)
            .collect();
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Number of occurrences of the affine generator.
    pub fn affine_count(&self) -> usize {
        self.letters
            .iter()
            .filter(|g| **g == Generator::Affine)
            .count()
    }

    /// Applies the cyclic diagram automorphism letter-wise, `steps` times.
    pub fn rotate(&self, steps: i64) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|g| g.rotate(self.rank, steps))
            .collect();
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// The reflections `t_j = (s_1⋯s_{j-1}) s_j (s_1⋯s_{j-1})^{-1}` attached to
    /// each letter, realized as affine permutations.
    pub fn reflections(&self) -> Vec<AffinePermutation> {
        let mut prefix = AffinePermutation::identity(self.rank);
        let mut out = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            let before_inv = prefix.inverse();
            prefix = prefix.mul_generator(g);
            // t_j = p_j p_{j-1}^{-1}
            out.push(prefix.compose(&before_inv));
        }
        out
    }

    /// Reducedness by the reflection criterion: all attached reflections are
    /// pairwise distinct.
    pub fn is_reduced(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.letters.len());
        self.reflections().into_iter().all(|t| seen.insert(t))
    }

    /// Position (0-based) of the letter whose reflection coincides with the
    /// last letter's, provided the word minus its last letter is reduced.
    ///
    /// Returns `Ok(None)` when the whole word is reduced.
    pub fn hat_partner(&self) -> Result<Option<usize>> {
        let Some(last) = self.letters.len().checked_sub(1) else {
            return Ok(None);
        };
        let ts = self.reflections();
        let mut seen = HashSet::with_capacity(last);
        if !ts[..last].iter().all(|t| seen.insert(t.clone())) {
            return Err(Error::Precondition(
                "prefix of the word is not reduced".into(),
            ));
        }
        Ok(ts[..last].iter().position(|t| *t == ts[last]))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
