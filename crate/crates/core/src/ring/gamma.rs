use std::fmt;

use num_traits::Signed;

use super::rational::abs;
use super::{LaurentOmega, Rat, Ring};
use crate::error::{Error, Result};

/// Dense polynomial in γ with rational coefficients; index = power of γ.
///
/// Trailing zeros are always trimmed, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyGamma {
    coeffs: Vec<Rat>,
}

impl PolyGamma {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::ri(c)).collect())
    }

    /// The polynomial γ.
    pub fn gamma() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact evaluation at a rational γ (Horner).
    pub fn eval(&self, g: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * g + c;
        }
        acc
    }

    /// Substitutes γ = ω² + ω⁻².
    pub fn to_laurent(&self) -> LaurentOmega {
        let base = LaurentOmega::from_terms([(2, super::ri(1)), (-2, super::ri(1))]);
        let mut acc = LaurentOmega::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(&base).add_ref(&LaurentOmega::constant(c.clone()));
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::InexactDivision("division by the zero polynomial".into()))?;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !Ring::is_zero(&c) {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl Ring for PolyGamma {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::from_ints(&[1])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rat::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Self::new(out)
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Rat::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j].add_mul_assign(x, y);
            }
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::new(vec![r.clone()])
    }
    fn scale(&self, r: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }
    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(rhs)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({rhs})")))
        }
    }
}

/// Rewrites a Laurent polynomial in ω, invariant under ω → ω⁻¹ and ω → −ω,
/// as a polynomial in γ = ω² + ω⁻².
pub fn chebyshev_reduce(p: &LaurentOmega) -> Result<PolyGamma> {
    let base = LaurentOmega::from_terms([(2, super::ri(1)), (-2, super::ri(1))]);
    let mut rem = p.clone();
    let mut out: Vec<Rat> = Vec::new();
    while let Some((deg, lead)) = rem.leading() {
        let lead = lead.clone();
        if deg < 0 || deg % 2 != 0 {
            return Err(Error::NotSymmetric(p.to_string()));
        }
        if deg == 0 && rem.min_exponent() != Some(0) {
            return Err(Error::NotSymmetric(p.to_string()));
        }
        let k = (deg / 2) as usize;
        if out.len() <= k {
            out.resize(k + 1, Rat::zero());
        }
        out[k] += &lead;
        rem = rem.sub_ref(&base.pow(k as u32).scale(&lead));
    }
    Ok(PolyGamma::new(out))
}

impl fmt::Display for PolyGamma {
    /// ASCII form, highest power first: `9*g^2 + 16*g + 10`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = abs(c);
            let unit = Ring::is_one(&a);
            match (k, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "g")?,
                (1, false) => write!(f, "{a}*g")?,
                (_, true) => write!(f, "g^{k}")?,
                (_, false) => write!(f, "{a}*g^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyGamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyGamma({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ri};
    use super::*;

    fn w(terms: &[(i32, i64)]) -> LaurentOmega {
        LaurentOmega::from_terms(terms.iter().map(|&(e, c)| (e, ri(c))))
    }

    #[test]
    fn reduce_basis_element() {
        assert_eq!(chebyshev_reduce(&w(&[(2, 1), (-2, 1)])).unwrap(), PolyGamma::gamma());
    }

    #[test]
    fn reduce_linear_combination() {
        let p = w(&[(2, 2), (-2, 2), (0, 4)]);
        assert_eq!(chebyshev_reduce(&p).unwrap(), PolyGamma::from_ints(&[4, 2]));
    }

    #[test]
    fn reduce_fourth_powers() {
        // (w^2 + w^-2)^2 = w^4 + 2 + w^-4
        let p = w(&[(4, 1), (-4, 1)]);
        assert_eq!(chebyshev_reduce(&p).unwrap(), PolyGamma::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn reduce_rejects_asymmetric() {
        for bad in [
            w(&[(2, 1)]),
            w(&[(1, 1), (-1, 1)]),
            w(&[(0, 1), (-2, 1)]),
            w(&[(2, 1), (-2, 1), (-4, 1)]),
            w(&[(-2, 3)]),
        ] {
            assert!(matches!(chebyshev_reduce(&bad), Err(Error::NotSymmetric(_))), "{bad}");
        }
        assert_eq!(chebyshev_reduce(&LaurentOmega::zero()).unwrap(), PolyGamma::zero());
    }

    #[test]
    fn square_of_gamma_plus_one() {
        let p = PolyGamma::from_ints(&[1, 1]);
        assert_eq!(p.mul_ref(&p), PolyGamma::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn exact_division() {
        let p = PolyGamma::from_ints(&[2, 3, 1]); // (g+1)(g+2)
        assert_eq!(p.div_exact(&PolyGamma::from_ints(&[2, 1])).unwrap(), PolyGamma::from_ints(&[1, 1]));
        assert!(matches!(
            p.div_exact(&PolyGamma::from_ints(&[3, 1])),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(p.eval(&rat(1, 2)), rat(15, 4));
    }

    #[test]
    fn display() {
        assert_eq!(PolyGamma::from_ints(&[10, 16, 9]).to_string(), "9*g^2 + 16*g + 10");
        assert_eq!(PolyGamma::from_ints(&[-2, 0, 1]).to_string(), "g^2 - 2");
        assert_eq!(PolyGamma::new(vec![rat(-1, 2), ri(1)]).to_string(), "g - 1/2");
    }
}
