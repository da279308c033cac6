//! Canonical reduced expressions in the affine Weyl group W(Ã_n), n ≥ 2.
//!
//! Elements are stored as an affine block `h(j_1,i_1) a ⋯ h(j_m,i_m) a`
//! followed by a finite part in brick form. An affine-permutation model
//! ([`perm`]) serves as an independent oracle.

pub mod affine;
pub mod appendix;
pub mod coset;
pub mod error;
pub mod finite;
pub mod hecke;
pub mod perm;
pub mod selfcheck;
pub mod tower;
pub mod word;

pub use affine::{AffineBlock, Element, LeftMulOutcome};
pub use error::{Error, Result};
pub use finite::{FiniteElement, HPrefix};
pub use hecke::{HeckeElement, LaurentPoly};
pub use perm::AffinePermutation;
pub use word::{Generator, Rank, Word};

/// Laurent polynomials with machine-word coefficients.
pub type LaurentPolyZ = LaurentPoly<i64>;
/// Hecke algebra elements with machine-word coefficients.
pub type HeckeZ = HeckeElement<i64>;
/// Wider coefficients for long products.
pub type HeckeWide = HeckeElement<i128>;
