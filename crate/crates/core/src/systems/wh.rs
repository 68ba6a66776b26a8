//! The (W, H) kernel system with ω kept symbolic, solved one t-order at a time.

use crate::error::{Error, Result};
use crate::ring::{chebyshev_reduce, LaurentOmega, PolyGamma, Ring};
use crate::series::{PolyCoeffSeries, TruncSeries, XyPoly};

type Poly = XyPoly<LaurentOmega>;

#[derive(Clone, Debug, PartialEq)]
pub struct WhState {
    /// W(x); only `y^0` is used.
    pub w: PolyCoeffSeries<LaurentOmega>,
    pub h: PolyCoeffSeries<LaurentOmega>,
}

fn omega_pow(e: i32) -> LaurentOmega {
    LaurentOmega::monomial(e, crate::ring::ri(1))
}

/// `T(x^i y^j) = ω x^i y^(j−1) + ω⁻¹ x^(i−1) y^j`, dropping terms with a negative exponent.
pub fn apply_t(p: &Poly) -> Poly {
    let (w, wi) = (omega_pow(1), omega_pow(-1));
    let mut out = Poly::zero();
    for (i, j, c) in p.iter_nonzero() {
        if j >= 1 {
            out.add_at(i, j - 1, &c.mul_ref(&w));
        }
        if i >= 1 {
            out.add_at(i - 1, j, &c.mul_ref(&wi));
        }
    }
    out
}

/// `sum_m T^m(f)`, from `H = f + T H` solved downward in total degree.
fn t_resolvent(f: &Poly) -> Poly {
    let Some(deg) = f.total_degree() else {
        return Poly::zero();
    };
    let (w, wi) = (omega_pow(1), omega_pow(-1));
    let mut h = Poly::with_box(0, deg as i32, deg + 1);
    for total in (0..=deg).rev() {
        for i in 0..=total {
            let j = total - i;
            let mut c = f.coeff(i as i32, j);
            if let Some(up) = h.get(i as i32, j + 1) {
                c.add_assign_ref(&up.mul_ref(&w));
            }
            if let Some(right) = h.get(i as i32 + 1, j) {
                c.add_assign_ref(&right.mul_ref(&wi));
            }
            h.set(i as i32, j, c);
        }
    }
    h
}

fn outer(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    let (Some(da), Some(db)) = (a.x_range(), b.x_range()) else {
        return out;
    };
    out = Poly::with_box(0, da.1, db.1 as usize + 1);
    for (i, _, ca) in a.iter_nonzero() {
        for (j, _, cb) in b.iter_nonzero() {
            out.add_at(i, j as usize, &ca.mul_ref(cb));
        }
    }
    out
}

fn check_degree(order: usize, degree: Option<usize>) -> Result<()> {
    let bound = 2 * order;
    match degree {
        Some(d) if d > bound => Err(Error::DegreeBoundExceeded { order, degree: d, bound }),
        _ => Ok(()),
    }
}

/// Solves for `W_k`, `H_k` with `k < order`.
pub fn solve_wh(order: usize) -> Result<WhState> {
    let mut w: Vec<Poly> = Vec::with_capacity(order);
    let mut h: Vec<Poly> = Vec::with_capacity(order);
    let (om, omi) = (omega_pow(1), omega_pow(-1));
    for k in 0..order {
        let wk = if k == 0 {
            Poly::constant(LaurentOmega::one())
        } else {
            let mut acc = Poly::zero();
            for a in 0..k {
                for (i, _, ca) in w[a].iter_nonzero() {
                    for (j, _, cb) in w[k - 1 - a].iter_nonzero() {
                        acc.add_at(i + j + 2, 0, &ca.mul_ref(cb));
                    }
                }
            }
            // H(0, x) reads the x^0 column, H(x, 0) the y^0 row
            for (i, j, c) in h[k - 1].iter_nonzero() {
                if i == 0 {
                    acc.add_at(j as i32 + 1, 0, &c.mul_ref(&om));
                }
                if j == 0 {
                    acc.add_at(i + 1, 0, &c.mul_ref(&omi));
                }
            }
            acc
        };
        check_degree(k, wk.x_range().map(|r| r.1 as usize))?;
        w.push(wk);
        let mut f = Poly::zero();
        for a in 0..=k {
            f = f.add(&outer(&w[a], &w[k - a]));
        }
        let hk = t_resolvent(&f);
        check_degree(k, hk.total_degree())?;
        h.push(hk);
    }
    Ok(WhState { w: PolyCoeffSeries::from_coeffs(w, None), h: PolyCoeffSeries::from_coeffs(h, None) })
}

/// `Q(t, γ)` for `t^k`, `k < order − 1`, computed both as `H(0,0) − 1` and as
/// `[x^1]W / (t (ω + ω⁻¹)) − 1`; the two must agree before reduction to γ.
pub fn q_from_wh(state: &WhState) -> Result<TruncSeries<PolyGamma>> {
    let n = state.w.order().saturating_sub(1).min(state.h.order());
    let s = om_sum();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut via_h = state.h.coeff(k, 0, 0);
        let mut via_w = state.w.coeff(k + 1, 1, 0).div_exact(&s)?;
        if k == 0 {
            via_h.sub_assign_ref(&LaurentOmega::one());
            via_w.sub_assign_ref(&LaurentOmega::one());
        }
        if via_h != via_w {
            return Err(Error::ExpressionsDisagree(k));
        }
        out.push(chebyshev_reduce(&via_h)?);
    }
    Ok(TruncSeries::new(out))
}

fn om_sum() -> LaurentOmega {
    omega_pow(1).add_ref(&omega_pow(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ri;

    fn lw(terms: &[(i32, i64)]) -> LaurentOmega {
        LaurentOmega::from_terms(terms.iter().map(|&(e, c)| (e, ri(c))))
    }

    #[test]
    fn first_orders() {
        let s = solve_wh(3).unwrap();
        assert_eq!(s.w.at(0), &Poly::constant(LaurentOmega::one()));
        assert_eq!(s.h.at(0), &Poly::constant(LaurentOmega::one()));
        let mut w1 = Poly::zero();
        w1.set(2, 0, LaurentOmega::one());
        w1.set(1, 0, om_sum());
        assert_eq!(s.w.at(1), &w1);
        assert_eq!(chebyshev_reduce(&s.h.coeff(1, 0, 0)).unwrap(), PolyGamma::from_ints(&[2, 2]));
    }

    #[test]
    fn q_low_orders() {
        let q = q_from_wh(&solve_wh(5).unwrap()).unwrap();
        assert_eq!(q.coeff(0), &PolyGamma::zero());
        assert_eq!(q.coeff(1), &PolyGamma::from_ints(&[2, 2]));
        assert_eq!(q.coeff(2), &PolyGamma::from_ints(&[10, 16, 9]));
        assert_eq!(q.coeff(3), &PolyGamma::from_ints(&[66, 150, 132, 54]));
        let at1: Vec<_> = q.coeffs().iter().map(|g| g.eval(&ri(1))).collect();
        assert_eq!(&at1[1..4], &[ri(4), ri(35), ri(402)]);
    }

    #[test]
    fn resolvent_matches_naive_sum() {
        let mut f = Poly::zero();
        f.set(2, 1, lw(&[(1, 3), (-2, 1)]));
        f.set(0, 3, lw(&[(0, -1)]));
        f.set(1, 0, lw(&[(4, 2)]));
        let mut naive = Poly::zero();
        let mut term = f.clone();
        while !term.is_zero() {
            naive = naive.add(&term);
            term = apply_t(&term);
        }
        assert_eq!(t_resolvent(&f), naive);
    }

    #[test]
    fn t_is_nilpotent() {
        let mut f = Poly::zero();
        f.set(3, 1, lw(&[(1, 1)]));
        f.set(0, 2, lw(&[(-1, 5)]));
        let mut p = f.clone();
        for _ in 0..5 {
            assert!(!p.is_zero());
            p = apply_t(&p);
        }
        assert!(p.is_zero());
    }

    #[test]
    fn kernel_symmetry() {
        let s = solve_wh(6).unwrap();
        for k in 0..6 {
            let h = s.h.at(k);
            assert_eq!(&h.transpose().map(LaurentOmega::invert_omega), h, "order {k}");
        }
    }
}
