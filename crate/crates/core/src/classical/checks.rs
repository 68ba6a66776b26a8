use super::series::{
    eta, hyper_2f1, lambert_odd, lattice_sums, odd_divisor_sums, pochhammer, theta_product, Case, LatticeCase,
};
use crate::error::Result;
use crate::ring::{binomial, ri, PolyGamma, Rat, Ring};
use crate::series::TruncSeries;
use crate::theta::{q_big_of_t, r_of_q, t_of_q, theta_at_alpha, theta_at_zero, u_of_gamma};

/// Outcome of one termwise identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    /// the identity, written out
    pub anchor: &'static str,
    /// coefficients `0..order` were compared
    pub order: usize,
    pub first_failure: Option<usize>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// First `k < n` where the series differ or either one is unknown.
pub fn first_diff<R: Ring>(a: &TruncSeries<R>, b: &TruncSeries<R>, n: usize) -> Option<usize> {
    (0..n).find(|&k| k >= a.order() || k >= b.order() || a.coeff(k) != b.coeff(k))
}

fn result<R: Ring>(
    name: impl Into<String>,
    anchor: &'static str,
    lhs: &TruncSeries<R>,
    rhs: &TruncSeries<R>,
    n: usize,
) -> CheckResult {
    CheckResult { name: name.into(), anchor, order: n, first_failure: first_diff(lhs, rhs, n) }
}

/// Working order; a few spare terms keep divisions and reversions defined at tiny `n`.
fn work(n: usize) -> usize {
    n.max(3) + 1
}

/// `q f(q)` at the same order.
fn times_q(f: &TruncSeries<Rat>, order: usize) -> TruncSeries<Rat> {
    TruncSeries::from_fn(order, |k| if k == 0 || k > f.order() { ri(0) } else { f.coeff(k - 1).clone() })
}

/// `t = R 2F1(a,1−a;2 | R/c)` with the theta-parametrised R(t), plus the
/// coefficient identity behind the binomial kernel.
pub fn check_toprove(case: Case, n: usize) -> Result<Vec<CheckResult>> {
    let m = work(n);
    let a = case.a();
    let scale = ri(1) / case.t_prefactor();
    let r = q_big_of_t(&case.gamma(), m - 1)?.r_of_t;
    let f = hyper_2f1(&a, &(ri(1) - &a), &ri(2), m)?.body;
    let rhs = r.mul(&f.scale_var(&scale).compose(&r)?);
    let kernel = TruncSeries::from_fn(m, |k| {
        let k = k as i64;
        match case {
            Case::Half => binomial(2 * k, k).pow(2) / ri(k + 1),
            Case::Third => binomial(2 * k, k) * binomial(3 * k, k) / ri(k + 1),
        }
    });
    let pochs = TruncSeries::from_fn(m, |k| {
        let num = scale.pow(k as i32) * pochhammer(&a, k) * pochhammer(&(ri(1) - &a), k);
        num / (pochhammer(&ri(2), k) * pochhammer(&ri(1), k))
    });
    let anchor = match case {
        Case::Half => "t = R 2F1(1/2,1/2;2|16R)",
        Case::Third => "t = R 2F1(1/3,2/3;2|27R)",
    };
    let coeff_anchor = match case {
        Case::Half => "C(2n,n)^2/(n+1) = 16^n (1/2)_n^2/((2)_n n!)",
        Case::Third => "C(2n,n)C(3n,n)/(n+1) = 27^n (1/3)_n (2/3)_n/((2)_n n!)",
    };
    Ok(vec![
        result(format!("toprove[{}]", case.name()), anchor, &TruncSeries::var(m), &rhs, n),
        result(format!("toprove.coefficients[{}]", case.name()), coeff_anchor, &kernel, &pochs, n),
    ])
}

/// `A = tan α θ′(α)/θ(α)` against the lattice A.
pub fn check_ath(case: Case, n: usize) -> Result<CheckResult> {
    let m = work(n);
    let g = case.gamma();
    let b0 = theta_at_alpha(0, m, &g)?;
    let b1 = theta_at_alpha(1, m, &g)?;
    let lhs = b1.body.div(&b0.body)?;
    let lat = lattice_sums(case, m)?;
    Ok(result(format!("Ath[{}]", case.name()), "A = tan(a) theta'(a)/theta(a)", &lhs, &lat.big_a, n))
}

/// The chain from θ̃‴/θ̃′ through η and the odd Lambert series to `R = w/16`, link by link.
pub fn check_eta_chain(n: usize) -> Result<Vec<CheckResult>> {
    let m = work(n);
    let g = ri(0);
    let e = eta(m);
    let e_neg = e.negate_var();
    // q η′(q)/η(q) and q η′(−q)/η(−q), η′ being the derivative in the argument
    let log_d = e.euler_op().div(&e)?;
    let log_d_neg = times_q(&e.derivative().negate_var(), m).div(&e_neg)?;
    let one = TruncSeries::<Rat>::one(m);
    let z0 = theta_at_zero::<Rat>(3, m)?.div(&theta_at_zero::<Rat>(1, m)?)?;
    let b1 = theta_at_alpha(1, m, &g)?;
    let b3 = theta_at_alpha(3, m, &g)?;
    let za = b3.ratio(&b1)?;
    let lat = lattice_sums(Case::Half, m)?;
    let r = r_of_q(&g, m)?;
    let divisors = times_q(&odd_divisor_sums(m), m);
    let lambert = lambert_odd(m);
    let c2 = lat.c.pow(2).to_integral()?.truncate(m);

    Ok(vec![
        result("eta_chain.theta0", "-theta'''(0)/theta'(0) = 1 + 24 q eta'(q)/eta(q)", &z0.neg(), &one.add(&log_d.scale(&ri(24))), n),
        result(
            "eta_chain.theta_alpha",
            "-theta'''(pi/4)/theta'(pi/4) = 1 - 24 q eta'(-q)/eta(-q)",
            &za.neg(),
            &one.sub(&log_d_neg.scale(&ri(24))),
            n,
        ),
        result(
            "eta_chain.r_theta",
            "48 R A^2 = theta'''(0)/theta'(0) - theta'''(pi/4)/theta'(pi/4)",
            &r.mul(&lat.big_a.square()).scale(&ri(48)),
            &z0.sub(&za),
            n,
        ),
        result(
            "eta_chain.eta_divisors",
            "-24 q eta'(q)/eta(q) - 24 q eta'(-q)/eta(-q) = 48 sum sigma(2m+1) q^(2m+1)",
            &log_d.add(&log_d_neg).scale(&ri(-24)),
            &divisors.scale(&ri(48)),
            n,
        ),
        result(
            "eta_chain.lambert",
            "sum (2n+1) q^(2n)/(1-q^(4n+2)) = sum sigma(2m+1) q^(2m)",
            &lambert,
            &odd_divisor_sums(m),
            n,
        ),
        result(
            "eta_chain.lattice",
            "48 q sum (2n+1) q^(2n)/(1-q^(4n+2)) = 3 C^2",
            &times_q(&lambert, m).scale(&ri(48)),
            &c2.scale(&ri(3)),
            n,
        ),
        result("eta_chain.r_w16", "R = w/16", &r.scale(&ri(16)), &lat.w, n),
    ])
}

/// `R = w/c` for the given lattice data at the case's γ.
pub fn check_r_w(case: Case, lattice: &LatticeCase, n: usize) -> Result<CheckResult> {
    let m = work(n);
    let r = r_of_q(&case.gamma(), m)?;
    let anchor = match case {
        Case::Half => "R = w/16",
        Case::Third => "R = w/27",
    };
    let scaled = r.scale(&(ri(1) / case.t_prefactor()));
    Ok(result(format!("R_w[{}]", case.name()), anchor, &scaled, &lattice.w, n))
}

pub fn check_r_w_case3(n: usize) -> Result<CheckResult> {
    check_r_w(Case::Third, &lattice_sums(Case::Third, work(n))?, n)
}

/// The hypergeometric ODE for `A = 2F1(a,1−a;1|w)` and the derivative formula.
pub fn check_hyper_ode_and_deriv(a: &Rat, n: usize) -> Result<Vec<CheckResult>> {
    let m = work(n);
    let b = ri(1) - a;
    let ab = a * &b;
    let big_a = hyper_2f1(a, &b, &ri(1), m + 2)?.body;
    let d1 = big_a.derivative().truncate(m + 1);
    let d2 = d1.derivative();
    let w = TruncSeries::<Rat>::var(m);
    let one_minus_w = TruncSeries::one(m).sub(&w);
    let ode = w
        .mul(&one_minus_w)
        .mul(&d2)
        .add(&one_minus_w.sub(&w).mul(&d1.truncate(m)))
        .sub(&big_a.truncate(m).scale(&ab));
    let deriv = one_minus_w.mul(&d1.truncate(m));
    let f2 = hyper_2f1(a, &b, &ri(2), m)?.body.scale(&ab);
    Ok(vec![
        result(format!("hyper_ode[a={a}]"), "w(1-w)A'' + (1-2w)A' - a(1-a)A = 0", &ode, &TruncSeries::zero(m), n),
        result(format!("hyper_deriv[a={a}]"), "(1-w)A' = a(1-a) 2F1(a,1-a;2|w)", &deriv, &f2, n),
    ])
}

/// `w(1−w) A(w(q))² = q dw/dq` and `A(w(q))` = lattice A.
pub fn check_tauid(case: Case, n: usize) -> Result<Vec<CheckResult>> {
    let m = work(n);
    let a = case.a();
    let lat = lattice_sums(case, m)?;
    let a_of_w = hyper_2f1(&a, &(ri(1) - &a), &ri(1), m)?.body.compose(&lat.w)?;
    let one_minus_w = TruncSeries::one(m).sub(&lat.w);
    let lhs = lat.w.mul(&one_minus_w).mul(&a_of_w.square());
    Ok(vec![
        result(format!("tauid[{}]", case.name()), "w(1-w) A(w)^2 = q dw/dq", &lhs, &lat.w.euler_op(), n),
        result(format!("tauid.compose[{}]", case.name()), "2F1(a,1-a;1|w(q)) = A(q)", &a_of_w, &lat.big_a, n),
    ])
}

/// t(q) from θ̃ rewritten step by step into `a(1−a)/(8 sin²α) w 2F1(a,1−a;2|w)`.
pub fn check_t_chain(case: Case, n: usize) -> Result<Vec<CheckResult>> {
    let m = work(n);
    let a = case.a();
    let b = ri(1) - &a;
    let t = t_of_q(&case.gamma(), m)?;
    let lat = lattice_sums(case, m)?;
    let pref = ri(1) / (ri(8) * case.sin2_alpha());
    let via_q = lat.big_a.euler_op().div(&lat.big_a.square())?.scale(&pref);
    let hyp = hyper_2f1(&a, &b, &ri(1), m + 1)?.body;
    let w = TruncSeries::<Rat>::var(m);
    let in_w = w.mul(&TruncSeries::one(m).sub(&w)).mul(&hyp.derivative());
    let via_w = in_w.compose(&lat.w)?.scale(&pref);
    let f2 = hyper_2f1(&a, &b, &ri(2), m)?.body.compose(&lat.w)?;
    let closed = lat.w.mul(&f2).scale(&case.t_prefactor());
    let name = case.name();
    Ok(vec![
        result(format!("t_chain.q[{name}]"), "t = q A'(q)/(8 sin^2(a) A^2)", &t, &via_q, n),
        result(format!("t_chain.w[{name}]"), "t = w(1-w) dA/dw/(8 sin^2(a))", &t, &via_w, n),
        result(format!("t_chain.closed[{name}]"), "t = a(1-a)/(8 sin^2(a)) w 2F1(a,1-a;2|w)", &t, &closed, n),
    ])
}

/// `∂²θ̃/∂z² = −(1 + 8 q ∂/∂q) θ̃` at z = α for symbolic γ, on both parities.
pub fn check_heat(n: usize) -> Result<Vec<CheckResult>> {
    let m = work(n);
    let g = PolyGamma::gamma();
    let mut out = Vec::new();
    for d in 0..2 {
        let lo = theta_at_alpha(d, m, &g)?.body;
        let hi = theta_at_alpha(d + 2, m, &g)?.body;
        let rhs = lo.add(&lo.euler_op().scale(&ri(8))).neg();
        out.push(result(format!("heat[d={d}]"), "theta_zz = -(1 + 8 q d/dq) theta", &hi, &rhs, n));
    }
    Ok(out)
}

/// The triple product against the sum form of θ̃ at z = α.
pub fn check_theta_product(case: Case, n: usize) -> Result<CheckResult> {
    let m = work(n);
    let g = case.gamma();
    let prod = theta_product(&u_of_gamma(&g), m);
    let sum = theta_at_alpha(0, m, &g)?.body;
    Ok(result(
        format!("theta_product[{}]", case.name()),
        "2 prod (1-2u q^n+q^(2n))(1-q^n) = sum form",
        &prod,
        &sum,
        n,
    ))
}

/// Every classical identity check at order `n`.
pub fn classical_suite(n: usize) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for case in [Case::Half, Case::Third] {
        out.extend(check_toprove(case, n)?);
        out.push(check_ath(case, n)?);
    }
    out.extend(check_eta_chain(n)?);
    out.push(check_r_w_case3(n)?);
    for case in [Case::Half, Case::Third] {
        out.extend(check_hyper_ode_and_deriv(&case.a(), n)?);
        out.extend(check_tauid(case, n)?);
        out.extend(check_t_chain(case, n)?);
    }
    out.extend(check_heat(n)?);
    for case in [Case::Half, Case::Third] {
        out.push(check_theta_product(case, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn assert_all(rs: &[CheckResult]) {
        for r in rs {
            assert!(r.passed(), "{} failed at {:?}", r.name, r.first_failure);
        }
    }

    #[test]
    fn suite_passes_at_12() {
        assert_all(&classical_suite(12).unwrap());
    }

    #[test]
    fn suite_is_vacuous_at_zero() {
        let rs = classical_suite(0).unwrap();
        assert!(rs.iter().all(|r| r.passed() && r.order == 0));
    }

    #[test]
    fn perturbed_w_is_caught_at_that_order() {
        let mut lat = lattice_sums(Case::Third, 20).unwrap();
        let c = lat.w.coeff(7) + ri(1);
        lat.w.set_coeff(7, c);
        let r = check_r_w(Case::Third, &lat, 15).unwrap();
        assert_eq!(r.first_failure, Some(7));
        let clean = lattice_sums(Case::Third, 20).unwrap();
        assert!(check_r_w(Case::Third, &clean, 15).unwrap().passed());
    }

    #[test]
    fn eta_log_derivative_start() {
        let e = eta(5);
        let v = e.euler_op().div(&e).unwrap().scale(&ri(24)).add(&TruncSeries::one(5));
        assert_eq!(v, TruncSeries::from_ints(&[1, -24, -72, -96, -168]));
    }

    #[test]
    fn lambert_start_is_3_plus_12q2() {
        assert_eq!(lambert_odd(4).scale(&ri(3)), TruncSeries::from_ints(&[3, 0, 12, 0]));
    }

    #[test]
    fn toprove_first_coefficients() {
        let rs = check_toprove(Case::Third, 4).unwrap();
        assert_all(&rs);
        assert_eq!(pochhammer(&rat(1, 3), 1) * pochhammer(&rat(2, 3), 1) * ri(27) / ri(2), ri(3));
    }
}
