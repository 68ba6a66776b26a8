use crate::error::Result;
use crate::ring::{binomial, ri, Rat};
use crate::series::TruncSeries;

/// Solves `t = sum_k kernel(k) R^{k+1}` for R(t), through `t^n`.
fn reverse_kernel(n: usize, kernel: impl Fn(i64) -> Rat) -> Result<TruncSeries<Rat>> {
    let order = n + 1;
    let f = TruncSeries::from_fn(order, |m| if m == 0 { ri(0) } else { kernel(m as i64 - 1) });
    f.reversion()
}

/// `(t − c t² − R) / (d t²)`, known through `t^(n−2)`.
fn quotient(r: &TruncSeries<Rat>, c: i64, d: i64) -> Result<TruncSeries<Rat>> {
    let mut num = TruncSeries::var(r.order()).sub(r);
    let c2 = num.coeff(2) - ri(c);
    num.set_coeff(2, c2);
    Ok(num.div_t_pow(2)?.scale(&Rat::new(1.into(), d.into())))
}

/// R(t) at γ = 0: the inverse of `t = sum (1/(k+1)) C(2k,k)² R^{k+1}`.
pub fn thm1_r(n: usize) -> Result<TruncSeries<Rat>> {
    reverse_kernel(n, |k| binomial(2 * k, k).pow(2) / ri(k + 1))
}

/// R(t) at γ = 1: the inverse of `t = sum (1/(k+1)) C(2k,k) C(3k,k) R^{k+1}`.
pub fn thm2_r(n: usize) -> Result<TruncSeries<Rat>> {
    reverse_kernel(n, |k| binomial(2 * k, k) * binomial(3 * k, k) / ri(k + 1))
}

/// Rooted planar Eulerian orientations by edges, `G = (t − 2t² − R)/(4t²)`, through `t^n`.
pub fn thm1_g(n: usize) -> Result<TruncSeries<Rat>> {
    quotient(&thm1_r(n + 2)?, 2, 4)
}

/// `Q(t, 1) = (t − 3t² − R)/(3t²)`, through `t^n`.
pub fn thm2_q1(n: usize) -> Result<TruncSeries<Rat>> {
    quotient(&thm2_r(n + 2)?, 3, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_low_orders() {
        assert_eq!(thm1_g(3).unwrap(), TruncSeries::from_ints(&[0, 1, 5, 33]));
        assert_eq!(thm1_r(5).unwrap(), TruncSeries::from_ints(&[0, 1, -2, -4, -20, -132]));
    }

    #[test]
    fn q1_low_orders() {
        assert_eq!(thm2_q1(3).unwrap(), TruncSeries::from_ints(&[0, 4, 35, 402]));
        assert_eq!(thm2_r(5).unwrap(), TruncSeries::from_ints(&[0, 1, -3, -12, -105, -1206]));
    }

    #[test]
    fn q1_rearranges_to_t() {
        let n = 12;
        let q = thm2_q1(n).unwrap();
        let r = thm2_r(n + 2).unwrap();
        let three_t2 = q.add(&TruncSeries::one(n + 1)).mul_t_pow(2).scale(&ri(3));
        assert_eq!(three_t2.add(&r), TruncSeries::var(n + 1));
    }

    #[test]
    fn g_is_integral_and_nonnegative() {
        for c in thm1_g(20).unwrap().coeffs() {
            assert!(c.is_integer() && *c >= ri(0), "{c}");
        }
    }

    #[test]
    fn inverse_matches_kernel() {
        let r = thm1_r(10).unwrap();
        let back = TruncSeries::from_fn(11, |m| {
            if m == 0 {
                ri(0)
            } else {
                binomial(2 * (m as i64 - 1), m as i64 - 1).pow(2) / ri(m as i64)
            }
        })
        .compose(&r)
        .unwrap();
        assert_eq!(back, TruncSeries::var(11));
    }
}
