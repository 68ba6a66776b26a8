//! The (P, C, D) system characterising Q(t, 0), solved by fixed-point iteration
//! and, independently, from the explicit triple sums in R(t).
//!
//! Truncation: `t^k` for `k < t_order`, `y^l` for `l < y_order` (C and D; P
//! keeps one fewer), and D keeps `x^i` only while `i + k < t_order`. Within
//! these windows every coefficient is exact, since `P(t, tx)` pairs `x^i` with
//! at least `t^i`.

use crate::error::{Error, Result};
use crate::ring::{binomial, ri, Rat, Ring};
use crate::series::{PolyCoeffSeries, TruncSeries, XBound};

type S = PolyCoeffSeries<Rat>;

#[derive(Clone, Debug, PartialEq)]
pub struct PcdState {
    pub p: S,
    pub c: S,
    pub d: S,
}

/// Working window for the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PcdBounds {
    pub t_order: usize,
    pub y_order: usize,
}

impl PcdBounds {
    /// Smallest window giving `Q(t, 0)` through `t^n`.
    pub fn for_terms(n: usize) -> Self {
        Self { t_order: n + 1, y_order: n + 2 }
    }

    fn d_bound(&self) -> XBound {
        XBound::series(self.t_order as i64 - 1, -1)
    }

    /// Iterations allowed before giving up. A window stabilises after
    /// `2 t_order + y_order − 1` passes, plus one to observe the repeat.
    pub fn default_cap(&self) -> usize {
        2 * self.t_order + self.y_order + 2
    }

    fn initial(&self) -> PcdState {
        PcdState {
            p: S::one(self.t_order, Some(self.y_order - 1)),
            c: S::zero(self.t_order, Some(self.y_order)),
            d: S::one(self.t_order, Some(self.y_order)),
        }
    }
}

fn update_p(c: &S) -> Result<S> {
    let mut p = c.extract_x(1).div_y()?;
    for k in 0..p.order() {
        let v = if k == 0 { Rat::one() } else { Rat::zero() };
        p.at_mut(k).set(0, 0, v);
    }
    Ok(p)
}

fn update_d(c: &S, b: &PcdBounds) -> Result<S> {
    c.substitute_x_geometric(&b.d_bound())?.inv_one_minus_y(&b.d_bound())
}

fn update_c(p: &S, d: &S, b: &PcdBounds) -> Result<S> {
    let nonneg = XBound { lo: (0, 0), hi: XBound::none().hi, strict: false };
    let prod = p.substitute_y_tx()?.mul(&d.substitute_x_inverse(), &nonneg)?;
    Ok(S::from_coeffs(prod.mul_monomial(1, 1).coeffs().to_vec(), Some(b.y_order)))
}

/// One pass of the system map, in the order P, D, C.
pub fn pcd_step(s: &PcdState, b: &PcdBounds) -> Result<PcdState> {
    let p = update_p(&s.c)?;
    let d = update_d(&s.c, b)?;
    let c = update_c(&p, &d, b)?;
    Ok(PcdState { p, c, d })
}

/// Iterates from `P = 1, C = 0, D = 1` until two consecutive states coincide.
pub fn solve_pcd(b: &PcdBounds, cap: Option<usize>) -> Result<PcdState> {
    let cap = cap.unwrap_or_else(|| b.default_cap());
    let mut s = b.initial();
    for _ in 0..cap {
        let next = pcd_step(&s, b)?;
        if next == s {
            return Ok(s);
        }
        s = next;
    }
    Err(Error::NoStabilization(cap))
}

/// `Q(t, 0) = [y^1] P − 1`.
pub fn q_from_pcd(s: &PcdState) -> Result<TruncSeries<Rat>> {
    let mut q = s.p.extract_y(1).to_t_series()?;
    let c0 = q.coeff(0) - ri(1);
    q.set_coeff(0, c0);
    Ok(q)
}

/// `(1/(n+1)) C(2n−i, n) C(2n−j, n)`
fn cw(n: i64, i: i64, j: i64) -> Rat {
    binomial(2 * n - i, n) * binomial(2 * n - j, n) / ri(n + 1)
}

/// Builds `sum_{n,j} f(n,j,i) x^(i+dx) y^(j+1) R^(n+1)` in the graded variable
/// `Y = ty`, regrades `Y -> y` and cuts to `b.t_order`.
fn graded_sum(
    r_pows: &[TruncSeries<Rat>],
    b: &PcdBounds,
    i_range: impl Fn(i64) -> std::ops::Range<i64>,
    dx: i32,
    f: impl Fn(i64, i64, i64) -> Rat,
    keep: impl Fn(usize, i32) -> bool,
) -> Result<S> {
    let m = r_pows[0].order();
    let mut s = S::zero(m, Some(b.y_order));
    for (n, rp) in r_pows.iter().enumerate() {
        let n = n as i64;
        for j in 0..=n.min(b.y_order as i64 - 2) {
            for i in i_range(n) {
                let w = f(n, j, i);
                if w.is_zero() {
                    continue;
                }
                for (kk, c) in rp.coeffs().iter().enumerate().skip(n as usize + 1) {
                    let k = kk - (j as usize + 1);
                    if c.is_zero() || k >= b.t_order || !keep(k, i as i32 + dx) {
                        continue;
                    }
                    s.at_mut(kk).add_at(i as i32 + dx, j as usize + 1, &(c * &w));
                }
            }
        }
    }
    Ok(s.regrade_y_over_t()?.truncate(b.t_order))
}

/// The explicit solution, evaluated from `R(t)` (the γ = 0 inverse series).
pub fn closed_form_pcd(b: &PcdBounds, r: &TruncSeries<Rat>) -> Result<PcdState> {
    let m = b.t_order + b.y_order;
    if r.order() < m {
        return Err(Error::BadParameter(format!("R needs order {m}, got {}", r.order())));
    }
    let r = r.truncate(m);
    let mut r_pows = vec![r.clone()];
    while r_pows.len() < m - 1 {
        let next = r_pows.last().unwrap().mul(&r);
        r_pows.push(next);
    }
    let nt = b.t_order as i32;

    // t P(t, ty) = sum c y^j R^(n+1): the coefficient of t^K y^j is P at t^(K-1-j) y^j
    let mut p = S::zero(b.t_order, Some(b.y_order - 1));
    for (n, rp) in r_pows.iter().enumerate() {
        for j in 0..=n.min(b.y_order - 2) {
            let w = cw(n as i64, 0, j as i64);
            for (kk, c) in rp.coeffs().iter().enumerate().skip(n + 1) {
                let k = kk - 1 - j;
                if k < b.t_order && !c.is_zero() {
                    p.at_mut(k).add_at(0, j, &(c * &w));
                }
            }
        }
    }

    let sc = graded_sum(&r_pows, b, |n| 0..n + 1, 1, |n, j, i| cw(n, i, j), |_, _| true)?;
    let c = S::one(b.t_order, Some(b.y_order)).sub(&sc.scale(&ri(-1)).exp_y(&XBound::none())?);

    let sd = graded_sum(
        &r_pows,
        b,
        |_| 0..nt as i64,
        0,
        |n, j, i| binomial(2 * n - j, n) * binomial(2 * n + i + 1, n) / ri(n + 1),
        |k, x| (x as usize) + k < b.t_order,
    )?;
    let d = sd.exp_y(&b.d_bound())?;
    Ok(PcdState { p, c, d })
}
