use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn ri(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse = |p: &str| {
        p.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::BadParameter(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d.is_zero() {
                return Err(Error::BadParameter(format!("zero denominator: {s:?}")));
            }
            Ok(Rat::new(parse(n)?, d))
        }
        None => Ok(Rat::from_integer(parse(s)?)),
    }
}

/// Binomial coefficient C(n, k) as a rational; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Rat {
    if k < 0 || n < 0 || k > n {
        return <Rat as Zero>::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        // integer fast path avoids the gcd work of BigRational
        if a.is_integer() && b.is_integer() && self.is_integer() {
            let v = self.numer() + a.numer() * b.numer();
            *self = Rat::from_integer(v);
            return;
        }
        *self += a * b;
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            Err(Error::InexactDivision("division by zero".into()))
        } else {
            Ok(self / rhs)
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// `|r|` as a display helper for sign-aware polynomial printing.
pub(crate) fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_and_lowest_terms() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(rat(-1, 2).denom(), &BigInt::from(2));
    }

    #[test]
    fn parse() {
        assert_eq!(rat_from_str("3/6").unwrap(), rat(1, 2));
        assert_eq!(rat_from_str("-7").unwrap(), ri(-7));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
        assert_eq!(rat(5, 3).to_string(), "5/3");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), ri(20));
        assert_eq!(binomial(3, 5), ri(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn fused_multiply_add_matches_plain() {
        let mut a = ri(3);
        a.add_mul_assign(&ri(4), &ri(5));
        assert_eq!(a, ri(23));
        let mut b = rat(1, 2);
        b.add_mul_assign(&rat(1, 3), &ri(3));
        assert_eq!(b, rat(3, 2));
    }
}
