use std::fmt;

use num_traits::Signed;

use super::rational::abs;
use super::{Rat, Ring};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in ω with rational coefficients.
///
/// Stored as `(exponent, coefficient)` pairs sorted by exponent, never holding a zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentOmega {
    terms: Vec<(i32, Rat)>,
}

impl LaurentOmega {
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rat)>) -> Self {
        let mut v: Vec<(i32, Rat)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Rat)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !Ring::is_zero(c));
        Self { terms: out }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i32, c: Rat) -> Self {
        if Ring::is_zero(&c) {
            Self::default()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// ω itself.
    pub fn omega() -> Self {
        Self::monomial(1, super::ri(1))
    }

    pub fn terms(&self) -> &[(i32, Rat)] {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> Rat {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    /// Highest exponent and its coefficient.
    pub fn leading(&self) -> Option<(i32, &Rat)> {
        self.terms.last().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    /// Multiplication by ω^k.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// ω → ω⁻¹
    pub fn invert_omega(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    /// ω → −ω
    pub fn negate_omega(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    fn merge(&self, rhs: &Self, sign: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let take_left = j >= rhs.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < rhs.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < rhs.terms.len() && rhs.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &rhs.terms[j];
                out.push((*e, if sign { c.clone() } else { -c }));
                j += 1;
            } else {
                let c = if sign {
                    &self.terms[i].1 + &rhs.terms[j].1
                } else {
                    &self.terms[i].1 - &rhs.terms[j].1
                };
                if !Ring::is_zero(&c) {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }
}

impl Ring for LaurentOmega {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(super::ri(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let (Some(a0), Some(b0)) = (self.min_exponent(), rhs.min_exponent()) else {
            return Self::zero();
        };
        let lo = a0 + b0;
        let hi = self.leading().unwrap().0 + rhs.leading().unwrap().0;
        let mut buf = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                buf[(ea + eb - lo) as usize].add_mul_assign(ca, cb);
            }
        }
        Self {
            terms: buf
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !Ring::is_zero(c))
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
    fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
    fn scale(&self, r: &Rat) -> Self {
        if Ring::is_zero(r) {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }
    fn try_inv(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(e, c)] => Some(Self::monomial(-e, c.recip())),
            _ => None,
        }
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        let Some((dhi, dlead)) = rhs.leading() else {
            return Err(Error::InexactDivision("division by zero".into()));
        };
        let dlo = rhs.min_exponent().unwrap();
        let lead_inv = dlead.recip();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        // long division from the top; the remainder's span shrinks each step
        while let Some((rhi, rlead)) = rem.leading() {
            let rlo = rem.min_exponent().unwrap();
            if rhi - rlo < dhi - dlo {
                return Err(Error::InexactDivision(format!("({self}) / ({rhs})")));
            }
            let q = Self::monomial(rhi - dhi, rlead * &lead_inv);
            rem = rem.sub_ref(&q.mul_ref(rhs));
            quot.extend(q.terms);
        }
        Ok(Self::from_terms(quot))
    }
}

impl fmt::Display for LaurentOmega {
    /// `2*w^2 + 1 + 2*w^-2`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = abs(c);
            match (*e, Ring::is_one(&a)) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "w")?,
                (1, false) => write!(f, "{a}*w")?,
                (e, true) => write!(f, "w^{e}")?,
                (e, false) => write!(f, "{a}*w^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentOmega({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::ri;
    use super::*;

    fn w(terms: &[(i32, i64)]) -> LaurentOmega {
        LaurentOmega::from_terms(terms.iter().map(|&(e, c)| (e, ri(c))))
    }

    #[test]
    fn omega_times_inverse_is_one() {
        assert_eq!(w(&[(1, 1)]).mul_ref(&w(&[(-1, 1)])), LaurentOmega::one());
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = w(&[(3, 2), (-1, 5)]);
        assert!(p.sub_ref(&p).is_zero());
        assert_eq!(p.add_ref(&w(&[(3, -2)])), w(&[(-1, 5)]));
    }

    #[test]
    fn substitutions() {
        let p = w(&[(3, 2), (-1, 5), (0, 1)]);
        assert_eq!(p.invert_omega(), w(&[(-3, 2), (1, 5), (0, 1)]));
        assert_eq!(p.negate_omega(), w(&[(3, -2), (-1, -5), (0, 1)]));
        assert_eq!(p.invert_omega().invert_omega(), p);
    }

    #[test]
    fn exact_division() {
        let s = w(&[(1, 1), (-1, 1)]);
        let p = w(&[(2, 2), (0, 3), (-2, 1)]).mul_ref(&s);
        assert_eq!(p.div_exact(&s).unwrap(), w(&[(2, 2), (0, 3), (-2, 1)]));
        assert!(w(&[(2, 1), (0, 2)]).div_exact(&s).is_err());
        assert_eq!(w(&[(4, 6)]).div_exact(&w(&[(1, 3)])).unwrap(), w(&[(3, 2)]));
    }

    #[test]
    fn display() {
        assert_eq!(w(&[(2, 2), (0, 1), (-2, -1)]).to_string(), "2*w^2 + 1 - w^-2");
    }
}
