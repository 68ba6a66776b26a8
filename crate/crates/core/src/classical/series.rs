use num_integer::Roots;

use crate::error::{Error, Result};
use crate::ring::{rat, ri, Rat, Ring};
use crate::series::{ShiftedSeries, TruncSeries};

/// Truncated Gauss hypergeometric series `2F1(a, b; c | w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSeries {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub body: TruncSeries<Rat>,
}

/// `(a)_n (b)_n / ((c)_n n!)` for `n < order`, built by the term ratio.
pub fn hyper_2f1(a: &Rat, b: &Rat, c: &Rat, order: usize) -> Result<HyperSeries> {
    if c.is_integer() && *c <= ri(0) {
        return Err(Error::BadParameter(format!("2F1 lower parameter {c} is a nonpositive integer")));
    }
    let mut coeffs = Vec::with_capacity(order);
    let mut term = ri(1);
    for n in 0..order {
        coeffs.push(term.clone());
        let k = ri(n as i64);
        term = term * (a + &k) * (b + &k) / ((c + &k) * (&k + ri(1)));
    }
    Ok(HyperSeries { a: a.clone(), b: b.clone(), c: c.clone(), body: TruncSeries::new(coeffs) })
}

/// Rising factorial `(x)_n`.
pub fn pochhammer(x: &Rat, n: usize) -> Rat {
    (0..n).fold(ri(1), |acc, k| acc * (x + ri(k as i64)))
}

/// The two hypergeometric cases, `a = 1/2` and `a = 1/3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    Half,
    Third,
}

impl Case {
    pub fn a(self) -> Rat {
        match self {
            Case::Half => rat(1, 2),
            Case::Third => rat(1, 3),
        }
    }

    /// The value of γ whose angle α matches the case (π/4 and π/3).
    pub fn gamma(self) -> Rat {
        match self {
            Case::Half => ri(0),
            Case::Third => ri(1),
        }
    }

    /// `sin² α = (2 + γ)/4`
    pub fn sin2_alpha(self) -> Rat {
        (self.gamma() + ri(2)) / ri(4)
    }

    /// `a(1−a)/(8 sin² α)`: 1/16 and 1/27.
    pub fn t_prefactor(self) -> Rat {
        let a = self.a();
        &a * (ri(1) - &a) / (ri(8) * self.sin2_alpha())
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::Half => "a=1/2",
            Case::Third => "a=1/3",
        }
    }
}

/// Theta-type lattice sums for one case.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeCase {
    pub case: Case,
    pub big_a: TruncSeries<Rat>,
    pub c: ShiftedSeries<Rat>,
    /// `(C/A)^2` or `(C/A)^3`, an integral series starting at `q`.
    pub w: TruncSeries<Rat>,
}

/// Counts `q^{f(m,n)}` over `|m|, |n| <= bound` with exponents below `order`.
fn lattice(order: usize, f: impl Fn(i64, i64) -> i64) -> TruncSeries<Rat> {
    // both forms are at least 3/4 max(|m|,|n|)^2 minus a bounded shift, so
    // this bound captures every exponent below `order`
    let bound = ((4 * (order as i64 + 1)) / 3).sqrt() + 2;
    let mut c = vec![0i64; order];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = f(m, n);
            if (0..order as i64).contains(&e) {
                c[e as usize] += 1;
            }
        }
    }
    TruncSeries::from_ints(&c)
}

/// A, C and w for the case, each to q-order `order`.
pub fn lattice_sums(case: Case, order: usize) -> Result<LatticeCase> {
    let (big_a, body, shift, power) = match case {
        Case::Half => (
            lattice(order, |m, n| m * m + n * n),
            lattice(order, |m, n| m * (m + 1) + n * (n + 1)),
            rat(1, 2),
            2,
        ),
        Case::Third => (
            lattice(order, |m, n| m * m + m * n + n * n),
            lattice(order, |m, n| m * m + m * n + n * n + m + n),
            rat(1, 3),
            3,
        ),
    };
    let c = ShiftedSeries::new(shift, body)?;
    let cp = c.pow(power);
    if cp.shift != ri(1) {
        return Err(Error::ConventionViolation(format!("C^{power} has shift {}", cp.shift)));
    }
    let w = cp.to_integral()?.truncate(order).div(&big_a.pow(power))?;
    Ok(LatticeCase { case, big_a, c, w })
}

/// `η(q) = ∏_{n>=1} (1 − q^n)` to q-order `order`.
pub fn eta(order: usize) -> TruncSeries<Rat> {
    let mut acc = TruncSeries::one(order);
    for n in 1..order {
        let mut f = TruncSeries::one(order);
        f.set_coeff(n, ri(-1));
        acc = acc.mul(&f);
    }
    acc
}

/// `sum_{n>=0} (2n+1) q^{2n} / (1 − q^{4n+2})`
pub fn lambert_odd(order: usize) -> TruncSeries<Rat> {
    let mut c = vec![0i64; order];
    for n in 0..order {
        let step = 4 * n + 2;
        let mut e = 2 * n;
        while e < order {
            c[e] += 2 * n as i64 + 1;
            e += step;
        }
    }
    TruncSeries::from_ints(&c)
}

/// `sum_m σ(2m+1) q^{2m}`
pub fn odd_divisor_sums(order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |e| {
        if e % 2 == 1 {
            return ri(0);
        }
        let n = e + 1;
        ri((1..=n).filter(|d| n % d == 0).sum::<usize>() as i64)
    })
}

/// `2 ∏_{n>=1} (1 − 2u q^n + q^{2n})(1 − q^n)`, the product form of θ̃/sin α.
pub fn theta_product<R: Ring>(u: &R, order: usize) -> TruncSeries<R> {
    let mut acc = TruncSeries::one(order).scale(&ri(2));
    let two_u = u.scale(&ri(-2));
    for n in 1..order {
        let mut f = TruncSeries::one(order);
        f.set_coeff(n, two_u.clone());
        if 2 * n < order {
            f.set_coeff(2 * n, R::one());
        }
        let mut g = TruncSeries::one(order);
        g.set_coeff(n, R::from_int(-1));
        acc = acc.mul(&f).mul(&g);
    }
    acc
}
