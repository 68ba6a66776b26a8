//! Truncated formal power series.
//!
//! [`TruncSeries`] is the univariate workhorse: a dense coefficient vector
//! `c_0 .. c_{N-1}` over any [`Ring`], where `N` is the truncation order
//! (everything from `t^N` on is unknown). Binary operations truncate to the
//! smaller of the two orders.
//!
//! [`ShiftedSeries`] adds a rational exponent offset for lattice sums over
//! half- and third-integer points; [`PolyCoeffSeries`] carries polynomial
//! (or truncated power-series) coefficients in `x` and `y`.

mod polycoeff;
mod shifted;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use polycoeff::{PolyCoeffSeries, XBound, XyPoly};
pub use shifted::ShiftedSeries;

use crate::error::{Error, Result};
use crate::ring::{ri, Rat, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Series whose order is the length of `coeffs`.
    pub fn new(coeffs: Vec<R>) -> Self {
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![R::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, R::one(), order)
    }

    /// The series variable `t`.
    pub fn var(order: usize) -> Self {
        Self::monomial(1, R::one(), order)
    }

    pub fn monomial(k: usize, c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    /// Builds a series of the given order from a coefficient function.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self::new((0..order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^k`; panics if `k` is beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &R {
        assert!(k < self.order(), "t^{k} is beyond truncation order {}", self.order());
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, c: R) {
        self.coeffs[k] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// First index where two series differ, compared up to the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add_ref(b)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub_ref(b)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(R::neg_ref).collect())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn mul_scalar(&self, r: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul_ref(r)).collect())
    }

    /// Truncated convolution.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j].add_mul_assign(a, b);
                }
            }
        }
        Self::new(out)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse by long division.
    pub fn inv(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let c0 = self.coeffs[0].try_inv().ok_or(Error::NonUnitLeading)?;
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(c0.clone());
        for k in 1..n {
            let mut acc = R::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc.add_mul_assign(&self.coeffs[j], &out[k - j]);
                }
            }
            out.push(acc.mul_ref(&c0).neg_ref());
        }
        Ok(Self::new(out))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Formal derivative d/dt; the order drops by one.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&ri(k as i64)))
                .collect(),
        )
    }

    /// Euler operator `t d/dt`; keeps the order.
    pub fn euler_op(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&ri(k as i64)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integral(&self) -> Self {
        let mut out = vec![R::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&Rat::new(1.into(), (k as i64 + 1).into()))),
        );
        Self::new(out)
    }

    /// exp of a series with zero constant term, via `n b_n = sum k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp needs a zero constant term"));
        }
        let mut b = vec![R::one()];
        for m in 1..n {
            let mut acc = R::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc.add_mul_assign(&self.coeffs[k].scale(&ri(k as i64)), &b[m - k]);
                }
            }
            b.push(acc.scale(&Rat::new(1.into(), (m as i64).into())));
        }
        Ok(Self::new(b))
    }

    /// log of a series with constant term 1, as the integral of `a'/a`.
    pub fn log(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("log needs constant term 1"));
        }
        let q = self.derivative().div(&self.truncate(n - 1))?;
        Ok(q.integral())
    }

    /// Composition `self(g(t))` by Horner's rule; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if g.order() > 0 && !g.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("inner series of a composition needs zero constant term"));
        }
        let n = self.order().min(g.order());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().take(n).rev() {
            acc = acc.mul(g);
            acc.coeffs[0].add_assign_ref(c);
        }
        Ok(acc)
    }

    /// Compositional inverse.
    ///
    /// Solves `sum_k g_k f^k = t` order by order: the powers of `f` are fixed
    /// and `[t^m] f^m = f_1^m`, so each `g_m` is one exact division.
    pub fn reversion(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 {
            return Err(Error::NotReversible("order must be at least 2"));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotReversible("constant term must vanish"));
        }
        let f1_inv = self.coeffs[1]
            .try_inv()
            .ok_or(Error::NotReversible("linear coefficient is not invertible"))?;
        let mut powers = vec![Self::one(n)];
        for k in 1..n {
            powers.push(powers[k - 1].mul(self));
        }
        let mut g = vec![R::zero(); n];
        for m in 1..n {
            let mut acc = if m == 1 { R::one() } else { R::zero() };
            for (k, gk) in g.iter().enumerate().take(m).skip(1) {
                if !gk.is_zero() {
                    acc.sub_assign_ref(&gk.mul_ref(&powers[k].coeffs[m]));
                }
            }
            g[m] = acc.mul_ref(&f1_inv.pow(m as u32));
        }
        Ok(Self::new(g))
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { R::zero() })
    }

    /// Divides by `t^k`; the first `k` coefficients must vanish and the order drops by `k`.
    pub fn div_t_pow(&self, k: usize) -> Result<Self> {
        if let Some(i) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("t^{i} term is nonzero in division by t^{k}")));
        }
        Ok(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// `t -> c t`
    pub fn scale_var(&self, c: &R) -> Self {
        let mut p = R::one();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            out.push(a.mul_ref(&p));
            p = p.mul_ref(c);
        }
        Self::new(out)
    }

    /// `t -> -t`
    pub fn negate_var(&self) -> Self {
        Self::from_fn(self.order(), |k| {
            if k % 2 == 1 {
                self.coeffs[k].neg_ref()
            } else {
                self.coeffs[k].clone()
            }
        })
    }
}

impl<R: Ring> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> Add for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn add(self, rhs: Self) -> TruncSeries<R> {
        TruncSeries::add(self, rhs)
    }
}

impl<R: Ring> Sub for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn sub(self, rhs: Self) -> TruncSeries<R> {
        TruncSeries::sub(self, rhs)
    }
}

impl<R: Ring> Mul for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn mul(self, rhs: Self) -> TruncSeries<R> {
        TruncSeries::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn neg(self) -> TruncSeries<R> {
        TruncSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, PolyGamma};

    type S = TruncSeries<Rat>;

    fn geometric(n: usize) -> S {
        S::from_fn(n, |_| ri(1))
    }

    #[test]
    fn one_minus_t_times_geometric() {
        let p = S::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(p.mul(&geometric(6)), S::one(6));
    }

    #[test]
    fn inverse_of_cubic() {
        // 1/(1 - 3t + 5t^3): c_n = 3 c_{n-1} - 5 c_{n-3}
        let p = S::from_ints(&[1, -3, 0, 5, 0, 0]);
        let mut c = vec![1i64, 3, 9];
        for n in 3..6 {
            c.push(3 * c[n - 1] - 5 * c[n - 3]);
        }
        assert_eq!(c[3], 22);
        assert_eq!(p.inv().unwrap(), S::from_ints(&c));
    }

    #[test]
    fn truncation_semantics() {
        let t = S::var(2);
        assert!(t.mul(&t).is_zero());
        assert_eq!(S::var(5).mul(&S::var(3)).order(), 3);
    }

    #[test]
    fn non_unit_leading() {
        assert_eq!(S::var(4).inv(), Err(Error::NonUnitLeading));
        let p: TruncSeries<PolyGamma> = TruncSeries::new(vec![PolyGamma::gamma(), PolyGamma::one()]);
        assert_eq!(p.inv(), Err(Error::NonUnitLeading));
    }

    #[test]
    fn exp_and_log_examples() {
        assert_eq!(S::zero(5).exp().unwrap(), S::one(5));
        let l = geometric(6).log().unwrap();
        let expect = S::from_fn(6, |k| if k == 0 { ri(0) } else { rat(1, k as i64) });
        assert_eq!(l, expect);
        let p = S::from_ints(&[1, 1, 5, 0, 0, 0, 0]);
        assert_eq!(p.log().unwrap().exp().unwrap(), p);
        assert!(matches!(S::one(3).exp(), Err(Error::BadConstantTerm(_))));
        assert!(matches!(S::var(3).log(), Err(Error::BadConstantTerm(_))));
    }

    #[test]
    fn reversion_identity() {
        assert_eq!(S::var(6).reversion().unwrap(), S::var(6));
    }

    #[test]
    fn reversion_of_central_binomial_squares() {
        let f = S::from_ints(&[0, 1, 2, 12, 100, 980]);
        assert_eq!(f.reversion().unwrap(), S::from_ints(&[0, 1, -2, -4, -20, -132]));
    }

    #[test]
    fn reversion_of_binomial_products() {
        let f = S::from_ints(&[0, 1, 3, 30, 420, 6930]);
        assert_eq!(f.reversion().unwrap(), S::from_ints(&[0, 1, -3, -12, -105, -1206]));
    }

    #[test]
    fn reversion_errors() {
        assert!(matches!(S::one(4).reversion(), Err(Error::NotReversible(_))));
        assert!(matches!(S::from_ints(&[0, 0, 1, 0]).reversion(), Err(Error::NotReversible(_))));
    }

    #[test]
    fn compose_with_sign_flip() {
        let f = S::from_ints(&[1, 2, 3, 4]);
        let g = S::from_ints(&[0, -1, 0, 0]);
        assert_eq!(f.compose(&g).unwrap(), f.negate_var());
        assert_eq!(f.scale_var(&ri(-1)), f.negate_var());
    }

    #[test]
    fn shifts() {
        let f = S::from_ints(&[0, 0, 3, 4]);
        assert_eq!(f.div_t_pow(2).unwrap(), S::from_ints(&[3, 4]));
        assert!(f.div_t_pow(3).is_err());
        assert_eq!(S::from_ints(&[1, 2, 3]).mul_t_pow(1), S::from_ints(&[0, 1, 2]));
    }
}
