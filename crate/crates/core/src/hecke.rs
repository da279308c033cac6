//! The Hecke algebra of W(Ã_n) over Laurent polynomials in `q`, and the
//! algebra map `HR_n` lifting the tower embedding.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::affine::Element;
use crate::error::{Error, Result};
use crate::tower;
use crate::word::{Generator, Rank};

/// Coefficient ring of [`LaurentPoly`]: a commutative ring with a sign.
pub trait Coeff:
    Clone
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + fmt::Debug
    + fmt::Display
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + PartialOrd
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + fmt::Debug
        + fmt::Display
{
}

/// A Laurent polynomial `Σ c_k q^k` with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, C::one())
    }

    pub fn monomial(exp: i32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// `Some(k)` when the polynomial is exactly `q^k`.
    pub fn as_q_power(&self) -> Option<i32> {
        match self.terms.iter().next() {
            Some((&e, c)) if self.terms.len() == 1 && c.is_one() => Some(e),
            _ => None,
        }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, x)| (e, x.clone() * c.clone())))
    }

    pub fn shift(&self, by: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + by, c.clone()))
                .collect(),
        }
    }
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Coeff> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: Self) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

/// Prints in increasing degree, e.g. `q^-1 - 1` or `2q + 3q^2`.
impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            let negative = *c < C::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite combination `Σ λ_w g_w` keyed by canonical elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement<C> {
    rank: Rank,
    terms: BTreeMap<Element, LaurentPoly<C>>,
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero(rank: Rank) -> Self {
        HeckeElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `g_1`.
    pub fn one(rank: Rank) -> Self {
        Self::basis(Element::identity(rank))
    }

    /// `g_w`.
    pub fn basis(w: Element) -> Self {
        let rank = w.rank();
        let mut out = Self::zero(rank);
        out.terms.insert(w, LaurentPoly::one());
        out
    }

    /// `g_s` for a generator `s`.
    pub fn generator(rank: Rank, s: Generator) -> Result<Self> {
        Ok(Self::basis(Element::generator(rank, s)?))
    }

    #[inline]
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the canonical element order.
    pub fn terms(&self) -> impl Iterator<Item = (&Element, &LaurentPoly<C>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Element) -> LaurentPoly<C> {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Element, c: &LaurentPoly<C>) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.rank.check_same(other.rank)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly<C>) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    /// `g_s · self` by the defining relations.
    pub fn left_mul_gen(&self, s: Generator) -> Result<Self> {
        if !s.is_valid_for(self.rank) {
            return Err(Error::IndexOutOfRange {
                index: s.index(),
                rank: self.rank.n(),
            });
        }
        let q = LaurentPoly::q();
        let q_minus_one = &q - &LaurentPoly::one();
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            let sw = w.left_mul(s);
            if sw.length() > w.length() {
                out.add_term(sw, c);
            } else {
                out.add_term(sw, &(&q * c));
                out.add_term(w.clone(), &(&q_minus_one * c));
            }
        }
        Ok(out)
    }

    /// `g_s^{-1} · self = q^{-1} g_s · self + (q^{-1} − 1) self`.
    pub fn left_mul_gen_inverse(&self, s: Generator) -> Result<Self> {
        let qi = LaurentPoly::monomial(-1, C::one());
        let gs = self.left_mul_gen(s)?.scale(&qi);
        gs.add(&self.scale(&(&qi - &LaurentPoly::one())))
    }

    /// Product `self · other`, expanding the left factor into letters.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.rank.check_same(other.rank)?;
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            let mut t = other.clone();
            for g in w.letters().into_iter().rev() {
                t = t.left_mul_gen(g)?;
            }
            out = out.add(&t.scale(c))?;
        }
        Ok(out)
    }

    /// Specialization at `q = 1`, dropping vanishing terms.
    pub fn eval_at_one(&self) -> BTreeMap<Element, C> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

impl<C: Coeff> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            if c.terms().nth(1).is_some() {
                write!(f, "({c}) * [{w}]")?;
            } else {
                write!(f, "{c} * [{w}]")?;
            }
        }
        Ok(())
    }
}

/// `q^{-1} g_s + (q^{-1} − 1) g_1`.
pub fn gen_inverse<C: Coeff>(rank: Rank, s: Generator) -> Result<HeckeElement<C>> {
    HeckeElement::one(rank).left_mul_gen_inverse(s)
}

/// `HR_n`: sends `e_{σ_i}` to `g_{σ_i}` and `e_{a_n}` to
/// `g_{σ_n} g_{a_{n+1}} g_{σ_n}^{-1}`.
pub fn hr_embed<C: Coeff>(h: &HeckeElement<C>) -> Result<HeckeElement<C>> {
    let rank = Rank::new(h.rank().n() + 1)?;
    let n = rank.n();
    let mut out = HeckeElement::zero(rank);
    for (w, c) in h.terms() {
        let mut t = HeckeElement::one(rank);
        for g in w.letters().into_iter().rev() {
            t = match g {
                Generator::Sigma(k) => t.left_mul_gen(Generator::Sigma(k))?,
                Generator::Affine => t
                    .left_mul_gen_inverse(Generator::Sigma(n))?
                    .left_mul_gen(Generator::Affine)?
                    .left_mul_gen(Generator::Sigma(n))?,
            };
        }
        out = out.add(&t.scale(c))?;
    }
    Ok(out)
}

/// The decomposition `HR_n(e_w) = A_w g_{R_n(w)} + lower terms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangularity<C> {
    pub image: Element,
    pub leading: LaurentPoly<C>,
    pub lower_terms: HeckeElement<C>,
}

/// Computes and certifies the triangular decomposition of `HR_n(e_w)`.
pub fn triangularity_certificate<C: Coeff>(w: &Element) -> Result<Triangularity<C>> {
    let image = tower::embed(w);
    let full = hr_embed(&HeckeElement::<C>::basis(w.clone()))?;
    let leading = full.coefficient(&image);
    if leading.as_q_power().is_none() {
        return Err(Error::Certificate(format!(
            "leading coefficient {leading} is not a power of q"
        )));
    }
    let mut lower_terms = full.clone();
    lower_terms.terms.remove(&image);
    for (x, _) in lower_terms.terms() {
        if x.length() >= image.length() || x.affine_length() > w.affine_length() {
            return Err(Error::Certificate(format!(
                "term [{x}] not below [{image}] (l = {}, L = {})",
                x.length(),
                x.affine_length()
            )));
        }
    }
    Ok(Triangularity {
        image,
        leading,
        lower_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    type P = LaurentPoly<i64>;
    type H = HeckeElement<i64>;

    fn rank(n: usize) -> Rank {
        Rank::new(n).unwrap()
    }

    fn g(text: &str, n: usize) -> H {
        H::basis(Element::canonicalize(&Word::parse(text, rank(n)).unwrap()))
    }

    #[test]
    fn laurent_arithmetic_and_display() {
        let q = P::q();
        let one = P::one();
        let qi = P::monomial(-1, 1);
        assert_eq!((&q * &qi), one);
        assert_eq!((&qi - &one).to_string(), "q^-1 - 1");
        assert_eq!((&q - &one).to_string(), "-1 + q");
        assert_eq!(P::from_terms([(2, 3), (1, -2)]).to_string(), "-2q + 3q^2");
        assert_eq!(P::zero().to_string(), "0");
        assert!((&q - &q).is_zero());
        assert_eq!(P::monomial(3, 1).as_q_power(), Some(3));
        assert_eq!(P::monomial(3, 2).as_q_power(), None);
        assert_eq!((&q - &one).eval_at_one(), 0);
    }

    #[test]
    fn quadratic_relation() {
        let gs = g("s1", 2);
        let prod = gs.mul(&gs).unwrap();
        let mut expect = H::one(rank(2)).scale(&P::q());
        expect = expect.add(&gs.scale(&(&P::q() - &P::one()))).unwrap();
        assert_eq!(prod, expect);
        assert_eq!(prod.to_string(), "q * [1 | 1]\n(-1 + q) * [1 | [1,1]]");
    }

    #[test]
    fn length_additive_product() {
        assert_eq!(g("s2", 2).mul(&g("a", 2)).unwrap(), g("s2 a", 2));
    }

    #[test]
    fn braid_relation() {
        let lhs = g("s1", 2)
            .mul(&g("s2", 2))
            .unwrap()
            .mul(&g("s1", 2))
            .unwrap();
        let rhs = g("s2", 2)
            .mul(&g("s1", 2))
            .unwrap()
            .mul(&g("s2", 2))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverses() {
        let r = rank(2);
        for s in r.generators() {
            let inv = gen_inverse::<i64>(r, s).unwrap();
            let gs = H::generator(r, s).unwrap();
            assert_eq!(inv.mul(&gs).unwrap(), H::one(r));
            assert_eq!(gs.mul(&inv).unwrap(), H::one(r));
        }
        let inv = gen_inverse::<i64>(r, Generator::Sigma(1)).unwrap();
        assert_eq!(
            inv.coefficient(&Element::generator(r, Generator::Sigma(1)).unwrap()),
            P::monomial(-1, 1)
        );
        assert_eq!(
            inv.coefficient(&Element::identity(r)),
            P::from_terms([(-1, 1), (0, -1)])
        );
    }

    #[test]
    fn hr_embed_examples() {
        let img = hr_embed(&g("a", 2)).unwrap();
        let qi = P::monomial(-1, 1);
        let mut expect = g("s3 a s3", 3).scale(&qi);
        expect = expect.add(&g("s3 a", 3).scale(&(&qi - &P::one()))).unwrap();
        assert_eq!(img, expect);
        assert_eq!(hr_embed(&g("s1", 2)).unwrap(), g("s1", 3));
    }

    #[test]
    fn certificate_examples() {
        let r = rank(2);
        let a = Element::generator(r, Generator::Affine).unwrap();
        let cert = triangularity_certificate::<i64>(&a).unwrap();
        assert_eq!(cert.leading.as_q_power(), Some(-1));
        assert_eq!(cert.lower_terms.len(), 1);
        let s1 = Element::generator(r, Generator::Sigma(1)).unwrap();
        let cert = triangularity_certificate::<i64>(&s1).unwrap();
        assert_eq!(cert.leading, P::one());
        assert!(cert.lower_terms.is_zero());
    }
}
