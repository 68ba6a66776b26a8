use num_traits::{Signed, ToPrimitive};

use super::TruncSeries;
use crate::error::{Error, Result};
use crate::ring::{Rat, Ring};

/// `q^shift * body(q)` with a nonnegative rational shift.
///
/// The body's truncation order counts from the shift, so the product is known
/// up to (exclusive) `q^(shift + body.order())`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftedSeries<R: Ring> {
    pub shift: Rat,
    pub body: TruncSeries<R>,
}

impl<R: Ring> ShiftedSeries<R> {
    pub fn new(shift: Rat, body: TruncSeries<R>) -> Result<Self> {
        if shift.is_negative() {
            return Err(Error::BadParameter(format!("negative shift {shift}")));
        }
        Ok(Self { shift, body })
    }

    pub fn from_series(body: TruncSeries<R>) -> Self {
        Self { shift: Rat::zero(), body }
    }

    /// Exclusive upper bound on the known exponents.
    pub fn known_below(&self) -> Rat {
        &self.shift + Rat::from_integer(self.body.order().into())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            shift: &self.shift + &rhs.shift,
            body: self.body.mul(&rhs.body),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            shift: &self.shift * Rat::from_integer(e.into()),
            body: self.body.pow(e),
        }
    }

    /// Sum; the shifts must agree modulo 1. The result carries the smaller shift.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let diff = &self.shift - &rhs.shift;
        if !diff.is_integer() {
            return Err(Error::BadParameter(format!(
                "shifts {} and {} differ by a non-integer",
                self.shift, rhs.shift
            )));
        }
        let (lo, hi) = if diff.is_negative() { (self, rhs) } else { (rhs, self) };
        let gap = diff.abs().to_integer().to_usize().unwrap_or(usize::MAX);
        let order = lo.body.order().min(hi.body.order().saturating_add(gap));
        let body = TruncSeries::from_fn(order, |k| {
            let mut c = lo.body.coeff(k).clone();
            if k >= gap {
                c.add_assign_ref(hi.body.coeff(k - gap));
            }
            c
        });
        Ok(Self { shift: lo.shift.clone(), body })
    }

    /// Converts to an ordinary series in `q`; the shift must be a nonnegative integer.
    pub fn to_integral(&self) -> Result<TruncSeries<R>> {
        if !self.shift.is_integer() {
            return Err(Error::BadParameter(format!("fractional shift {}", self.shift)));
        }
        let s = self.shift.to_integer().to_usize().unwrap_or(usize::MAX);
        Ok(TruncSeries::from_fn(s + self.body.order(), |k| {
            if k < s {
                R::zero()
            } else {
                self.body.coeff(k - s).clone()
            }
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ri};

    #[test]
    fn half_shifts_combine() {
        let a = ShiftedSeries::new(rat(1, 2), TruncSeries::<Rat>::from_ints(&[1, 2, 3])).unwrap();
        let b = ShiftedSeries::new(rat(1, 2), TruncSeries::<Rat>::from_ints(&[4, 5, 6])).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.shift, ri(1));
        assert_eq!(p.body, a.body.mul(&b.body));
        assert_eq!(p.to_integral().unwrap(), TruncSeries::from_ints(&[0, 4, 13, 28]));
    }

    #[test]
    fn addition_renormalises() {
        let a = ShiftedSeries::new(rat(1, 3), TruncSeries::<Rat>::from_ints(&[1, 1, 1])).unwrap();
        let b = ShiftedSeries::new(rat(4, 3), TruncSeries::<Rat>::from_ints(&[5, 5])).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!(s.shift, rat(1, 3));
        assert_eq!(s.body, TruncSeries::from_ints(&[1, 6, 6]));
        let c = ShiftedSeries::new(rat(1, 2), TruncSeries::<Rat>::from_ints(&[1])).unwrap();
        assert!(a.add(&c).is_err());
        assert!(a.to_integral().is_err());
    }
}
