//! Reduced theta expansions and the parametrisation of Q(t, γ) through the nome q.
//!
//! Everything is expressed through θ̃(z, q) = 2 Σ (−1)ⁿ q^{n(n+1)/2} sin((2n+1)z),
//! evaluated at the angle α with γ = −2 cos 2α. Writing u = cos 2α = −γ/2, the
//! multiple-angle values are sin α · Sₙ(u) and cos α · Cₙ(u), so every body is
//! a q-series with coefficients in the ring of γ.

use crate::error::{Error, Result};
use crate::ring::{rat, ri, Ring};
use crate::series::TruncSeries;

/// Which trigonometric prefactor multiplies a [`ThetaSeries`] body.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// prefactor sin α
    Odd,
    /// prefactor cos α
    Even,
}

/// `prefactor(parity) * body(q)`; a derivative of θ̃ at z = α.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSeries<R: Ring> {
    pub parity: Parity,
    pub body: TruncSeries<R>,
}

impl<R: Ring> ThetaSeries<R> {
    /// Quotient of two expansions with the same prefactor.
    pub fn ratio(&self, den: &Self) -> Result<TruncSeries<R>> {
        if self.parity != den.parity {
            return Err(Error::ConventionViolation(format!(
                "ratio of {:?} by {:?} theta bodies",
                self.parity, den.parity
            )));
        }
        self.body.div(&den.body)
    }
}

fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

/// The values `(Sₙ(u), Cₙ(u))` for every n with `n(n+1)/2 < order`.
fn chebyshev_families<R: Ring>(u: &R, order: usize) -> Vec<(R, R)> {
    let two_u = u.scale(&ri(2));
    let mut out: Vec<(R, R)> = Vec::new();
    let mut n = 0;
    while triangular(n) < order {
        let next = match n {
            0 => (R::one(), R::one()),
            1 => (R::one().add_ref(&two_u), two_u.sub_ref(&R::one())),
            _ => {
                let (s1, c1) = &out[n - 1];
                let (s0, c0) = &out[n - 2];
                (two_u.mul_ref(s1).sub_ref(s0), two_u.mul_ref(c1).sub_ref(c0))
            }
        };
        out.push(next);
        n += 1;
    }
    out
}

/// `u = cos 2α = −γ/2`
pub fn u_of_gamma<R: Ring>(gamma: &R) -> R {
    gamma.scale(&rat(-1, 2))
}

/// `γ + 2`, rejecting the singular value γ = −2.
fn gamma_plus_two<R: Ring>(gamma: &R) -> Result<R> {
    let g2 = gamma.add_ref(&R::from_int(2));
    if g2.is_zero() {
        Err(Error::GammaEqualsMinusTwo)
    } else {
        Ok(g2)
    }
}

/// The `d`-th z-derivative of θ̃ at z = α, to q-order `order`.
pub fn theta_at_alpha<R: Ring>(d: usize, order: usize, gamma: &R) -> Result<ThetaSeries<R>> {
    if d > 3 {
        return Err(Error::DerivativeTooHigh(d));
    }
    let u = u_of_gamma(gamma);
    let mut body = TruncSeries::zero(order);
    for (n, (s, c)) in chebyshev_families(&u, order).into_iter().enumerate() {
        let m = 2 * n as i64 + 1;
        // d/dz cycles sin -> cos -> -sin -> -cos, each step a factor (2n+1)
        let sign = if (n % 2 == 1) != (d >= 2) { -2 } else { 2 };
        let factor = ri(sign * m.pow(d as u32));
        let val = if d.is_multiple_of(2) { s } else { c };
        body.set_coeff(triangular(n), val.scale(&factor));
    }
    let parity = if d.is_multiple_of(2) { Parity::Odd } else { Parity::Even };
    Ok(ThetaSeries { parity, body })
}

/// The `d`-th z-derivative of θ̃ at z = 0 (only odd `d` is nonzero).
pub fn theta_at_zero<R: Ring>(d: usize, order: usize) -> Result<TruncSeries<R>> {
    if d > 3 {
        return Err(Error::DerivativeTooHigh(d));
    }
    if d.is_multiple_of(2) {
        return Err(Error::EvenDerivativeAtZero(d));
    }
    let mut body = TruncSeries::zero(order);
    let mut n = 0;
    while triangular(n) < order {
        let m = 2 * n as i64 + 1;
        let sign = if (n % 2 == 1) != (d == 3) { -2 } else { 2 };
        body.set_coeff(triangular(n), R::from_int(sign * m.pow(d as u32)));
        n += 1;
    }
    Ok(body)
}

fn div_coeffs<R: Ring>(s: &TruncSeries<R>, c: &R) -> Result<TruncSeries<R>> {
    let coeffs = s.coeffs().iter().map(|a| a.div_exact(c)).collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::new(coeffs))
}

/// The four bodies `B0..B3` of θ̃, θ̃′, θ̃″, θ̃‴ at α.
fn bodies<R: Ring>(order: usize, gamma: &R) -> Result<[ThetaSeries<R>; 4]> {
    Ok([
        theta_at_alpha(0, order, gamma)?,
        theta_at_alpha(1, order, gamma)?,
        theta_at_alpha(2, order, gamma)?,
        theta_at_alpha(3, order, gamma)?,
    ])
}

/// t as a series in q: `t = (B2·B1 − B0·B3) / (16 (γ+2) B1²)`.
pub fn t_of_q<R: Ring>(gamma: &R, order: usize) -> Result<TruncSeries<R>> {
    let g2 = gamma_plus_two(gamma)?;
    let [b0, b1, b2, b3] = bodies(order, gamma)?;
    // θθ‴/θ′² and θ″/θ′ both carry tan α; the bracket is tan α times this
    let a = b0.body.mul(&b3.body);
    let b = b2.body.mul(&b1.body);
    if b0.parity != b2.parity || b1.parity != b3.parity {
        return Err(Error::ConventionViolation("bracket parities".into()));
    }
    let f = b.sub(&a).div(&b1.body.square())?;
    div_coeffs(&f, &g2.scale(&ri(16)))
}

/// R as a series in q: `(θ̃/θ̃′)² (θ̃‴(0)/θ̃′(0) − θ̃‴/θ̃′) / (24 (γ+2))` after
/// removing the prefactors.
pub fn r_of_q<R: Ring>(gamma: &R, order: usize) -> Result<TruncSeries<R>> {
    let g2 = gamma_plus_two(gamma)?;
    let [b0, b1, _, b3] = bodies(order, gamma)?;
    let z = theta_at_zero::<R>(3, order)?.div(&theta_at_zero::<R>(1, order)?)?;
    let lead = b0.body.div(&b1.body)?.square();
    let diff = z.sub(&b3.ratio(&b1)?);
    div_coeffs(&lead.mul(&diff), &g2.scale(&ri(24)))
}

/// Output of [`q_big_of_t`]; each series is known for `t^0..t^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaPipeline<R: Ring> {
    pub q_of_t: TruncSeries<R>,
    pub r_of_t: TruncSeries<R>,
    pub big_q: TruncSeries<R>,
}

/// q(t), R(t) and Q(t) = (t − (γ+2)t² − R)/((γ+2)t²), each through `t^n`.
pub fn q_big_of_t<R: Ring>(gamma: &R, n: usize) -> Result<ThetaPipeline<R>> {
    let g2 = gamma_plus_two(gamma)?;
    let work = n + 3;
    let q_of_t = t_of_q(gamma, work)?.reversion()?;
    let r_of_t = r_of_q(gamma, work)?.compose(&q_of_t)?;
    let mut num = r_of_t.neg();
    let mut c1 = num.coeff(1).clone();
    c1.add_assign_ref(&R::one());
    num.set_coeff(1, c1);
    let c2 = num.coeff(2).sub_ref(&g2);
    num.set_coeff(2, c2);
    if let Some(k) = (0..3).find(|&k| !num.coeff(k).is_zero()) {
        return Err(Error::CancellationFailure(k));
    }
    let big_q = div_coeffs(&num.div_t_pow(2)?, &g2)?;
    Ok(ThetaPipeline {
        q_of_t: q_of_t.truncate(n + 1),
        r_of_t: r_of_t.truncate(n + 1),
        big_q: big_q.truncate(n + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PolyGamma, Rat};

    fn g(c: &[i64]) -> PolyGamma {
        PolyGamma::from_ints(c)
    }

    #[test]
    fn theta_body_low_orders() {
        let th = theta_at_alpha(0, 4, &PolyGamma::gamma()).unwrap();
        assert_eq!(th.parity, Parity::Odd);
        // u = -g/2: S1 = 1 - g, S2 = 2u(1+2u) - 1 = g^2 - g - 1
        assert_eq!(th.body.coeffs(), &[g(&[2]), g(&[-2, 2]), g(&[]), g(&[-2, -2, 2])]);
        let one = theta_at_alpha(0, 1, &Rat::from_int(3)).unwrap();
        assert_eq!(one.body.coeffs(), &[ri(2)]);
    }

    #[test]
    fn theta_at_zero_values() {
        let d1 = theta_at_zero::<Rat>(1, 7).unwrap();
        assert_eq!(d1, TruncSeries::from_ints(&[2, -6, 0, 10, 0, 0, -14]));
        let d3 = theta_at_zero::<Rat>(3, 7).unwrap();
        assert_eq!(d3, TruncSeries::from_ints(&[-2, 54, 0, -250, 0, 0, 686]));
        let ratio = d3.div(&d1).unwrap().neg();
        assert_eq!(ratio.truncate(4), TruncSeries::from_ints(&[1, -24, -72, -96]));
        assert!(matches!(theta_at_zero::<Rat>(2, 3), Err(Error::EvenDerivativeAtZero(2))));
        assert!(matches!(theta_at_alpha::<Rat>(4, 3, &ri(0)), Err(Error::DerivativeTooHigh(4))));
    }

    #[test]
    fn reduced_heat_equation() {
        for gamma in [g(&[0, 1]), g(&[1]), g(&[-3])] {
            let b: Vec<_> = (0..4).map(|d| theta_at_alpha(d, 40, &gamma).unwrap().body).collect();
            let scale = |s: &TruncSeries<PolyGamma>| s.euler_op().scale(&ri(8));
            assert!(b[2].add(&b[0]).add(&scale(&b[0])).is_zero());
            assert!(b[3].add(&b[1]).add(&scale(&b[1])).is_zero());
        }
    }

    #[test]
    fn t_starts_with_q() {
        let t = t_of_q(&PolyGamma::gamma(), 5).unwrap();
        assert_eq!(t.coeff(0), &g(&[]));
        assert_eq!(t.coeff(1), &g(&[1]));
        assert_eq!(t.coeff(2), &g(&[-6, -6]));
        assert!(matches!(t_of_q(&ri(-2), 4), Err(Error::GammaEqualsMinusTwo)));
    }

    #[test]
    fn nome_and_r_at_special_points() {
        let p0 = q_big_of_t(&ri(0), 5).unwrap();
        assert_eq!(p0.q_of_t.coeff(2), &ri(6));
        assert_eq!(p0.r_of_t, TruncSeries::from_ints(&[0, 1, -2, -4, -20, -132]));
        let p1 = q_big_of_t(&ri(1), 5).unwrap();
        assert_eq!(p1.q_of_t.coeff(2), &ri(12));
        assert_eq!(p1.r_of_t, TruncSeries::from_ints(&[0, 1, -3, -12, -105, -1206]));
    }

    #[test]
    fn big_q_values() {
        assert_eq!(q_big_of_t(&ri(1), 3).unwrap().big_q, TruncSeries::from_ints(&[0, 4, 35, 402]));
        assert_eq!(q_big_of_t(&ri(0), 3).unwrap().big_q, TruncSeries::from_ints(&[0, 2, 10, 66]));
        let sym = q_big_of_t(&PolyGamma::gamma(), 3).unwrap().big_q;
        assert_eq!(sym.coeff(1), &g(&[2, 2]));
        assert_eq!(sym.coeff(2), &g(&[10, 16, 9]));
        assert_eq!(sym.coeff(3), &g(&[66, 150, 132, 54]));
    }

    #[test]
    fn consistency_with_r() {
        let gamma = PolyGamma::gamma();
        let p = q_big_of_t(&gamma, 8).unwrap();
        let g2 = gamma.add_ref(&PolyGamma::from_int(2));
        let one_plus_q = p.big_q.add(&TruncSeries::one(9));
        let lhs = p.r_of_t.add(&one_plus_q.mul_t_pow(2).mul_scalar(&g2));
        assert_eq!(lhs, TruncSeries::var(9));
    }
}
