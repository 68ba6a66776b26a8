//! Exact coefficient rings.
//!
//! Every series in the crate is generic over [`Ring`], a commutative
//! Q-algebra with exact arithmetic. Three instances are provided:
//! arbitrary-precision rationals ([`Rat`]), Laurent polynomials in ω
//! ([`LaurentOmega`]) and dense polynomials in γ ([`PolyGamma`]).

mod gamma;
mod laurent;
mod rational;

use std::fmt;

pub use gamma::{chebyshev_reduce, PolyGamma};
pub use laurent::LaurentOmega;
pub use rational::{binomial, rat, rat_from_str, ri, Rat};

use crate::error::Result;

/// A commutative Q-algebra with exact arithmetic.
///
/// Methods take references so big-number instances avoid needless clones.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = self.sub_ref(rhs);
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    /// Embedding of Q.
    fn from_rat(r: &Rat) -> Self;

    /// Multiplication by a rational scalar.
    fn scale(&self, r: &Rat) -> Self;

    /// Multiplicative inverse, if one exists in the ring.
    fn try_inv(&self) -> Option<Self>;

    /// Exact quotient; fails with `InexactDivision` when `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&ri(n))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}
