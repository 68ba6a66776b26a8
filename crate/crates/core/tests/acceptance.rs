//! One PASS/FAIL line per acceptance criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestError, TestRunner};
use sixvertex::classical::classical_suite;
use sixvertex::oracle::{
    ambjorn_budd_fibers, colourful_quadrangulations, count_euler_orientations, count_partial_orientations,
    dual_labelling, enumerate_maps, euler_orientations, labelled_maps,
};
use sixvertex::ring::{chebyshev_reduce, rat, ri, LaurentOmega, PolyGamma, Rat, Ring};
use sixvertex::series::{TruncSeries, XyPoly};
use sixvertex::systems::{
    apply_t, closed_form_pcd, q_from_pcd, q_from_wh, solve_pcd, solve_wh, thm1_g, thm1_r, thm2_q1, PcdBounds,
};
use sixvertex::theta::q_big_of_t;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ints(v: &[i64]) -> TruncSeries<Rat> {
    TruncSeries::from_ints(v)
}

fn half(s: &TruncSeries<Rat>) -> TruncSeries<Rat> {
    s.scale(&rat(1, 2))
}

fn at(q: &TruncSeries<PolyGamma>, g: i64) -> TruncSeries<Rat> {
    q.map(|p: &PolyGamma| p.eval(&ri(g)))
}

fn low_order() -> Outcome {
    let g = ints(&[0, 1, 5, 33]);
    let b = PcdBounds::for_terms(3);
    let pcd = q_from_pcd(&solve_pcd(&b, None).map_err(err)?).map_err(err)?;
    let closed = q_from_pcd(&closed_form_pcd(&b, &thm1_r(b.t_order + b.y_order).map_err(err)?).map_err(err)?)
        .map_err(err)?;
    let wh = q_from_wh(&solve_wh(5).map_err(err)?).map_err(err)?;
    let theta0 = q_big_of_t(&ri(0), 3).map_err(err)?.big_q;
    for (route, s) in [
        ("thm1", thm1_g(3).map_err(err)?),
        ("pcd", half(&pcd)),
        ("closed form", half(&closed)),
        ("theta", half(&theta0)),
        ("wh", half(&at(&wh, 0))),
    ] {
        ensure!(s == g, "G by {route}: {s}");
    }
    let q1 = ints(&[0, 4, 35, 402]);
    let theta1 = q_big_of_t(&ri(1), 3).map_err(err)?.big_q;
    for (route, s) in [("thm2", thm2_q1(3).map_err(err)?), ("theta", theta1), ("wh", at(&wh, 1))] {
        ensure!(s == q1, "Q(t,1) by {route}: {s}");
    }
    let want = [
        PolyGamma::zero(),
        PolyGamma::from_ints(&[2, 2]),
        PolyGamma::from_ints(&[10, 16, 9]),
        PolyGamma::from_ints(&[66, 150, 132, 54]),
    ];
    let sym = q_big_of_t(&PolyGamma::gamma(), 3).map_err(err)?;
    ensure!(sym.big_q.coeffs() == want, "symbolic Q by theta: {}", sym.big_q);
    ensure!(wh.coeffs() == want, "symbolic Q by wh: {wh}");
    ensure!(
        *sym.q_of_t.coeff(1) == PolyGamma::one() && *sym.q_of_t.coeff(2) == PolyGamma::from_ints(&[6, 6]),
        "q(t) = {}",
        sym.q_of_t
    );
    Ok("G, Q(t,1), Q(t,g), q(t,g) by every route".into())
}

fn cross_route() -> Outcome {
    let n = 20;
    let g = thm1_g(n).map_err(err)?;
    let b = PcdBounds::for_terms(n);
    let pcd_state = solve_pcd(&b, None).map_err(err)?;
    let closed_state = closed_form_pcd(&b, &thm1_r(b.t_order + b.y_order).map_err(err)?).map_err(err)?;
    ensure!(pcd_state == closed_state, "closed form is not the iteration limit");
    let wh = q_from_wh(&solve_wh(n + 2).map_err(err)?).map_err(err)?;
    for (route, s) in [
        ("pcd", half(&q_from_pcd(&pcd_state).map_err(err)?)),
        ("closed form", half(&q_from_pcd(&closed_state).map_err(err)?)),
        ("theta", half(&q_big_of_t(&ri(0), n).map_err(err)?.big_q)),
        ("wh", half(&at(&wh, 0))),
    ] {
        ensure!(s == g, "G vs {route} differ at t^{:?}", s.first_mismatch(&g));
    }
    let q1 = thm2_q1(n).map_err(err)?;
    for (route, s) in [("theta", q_big_of_t(&ri(1), n).map_err(err)?.big_q), ("wh", at(&wh, 1))] {
        ensure!(s == q1, "Q(t,1) vs {route} differ at t^{:?}", s.first_mismatch(&q1));
    }
    for v in [0, 1, 2, 5, -1] {
        let th = q_big_of_t(&ri(v), n).map_err(err)?.big_q;
        let w = at(&wh, v);
        ensure!(th == w, "g = {v}: wh vs theta differ at t^{:?}", th.first_mismatch(&w));
    }
    Ok(format!("through t^{n}: (a) 5 routes, (b) 3 routes, (c) g in {{0,1,2,5,-1}}"))
}

fn oracle() -> Outcome {
    let wh = q_from_wh(&solve_wh(5).map_err(err)?).map_err(err)?;
    let g = thm1_g(3).map_err(err)?;
    for k in 1..=3 {
        let quartic = enumerate_maps(2 * k, true).map_err(err)?;
        let general = enumerate_maps(k, false).map_err(err)?;
        let eo = count_euler_orientations(&quartic);
        ensure!(eo == *wh.coeff(k), "quartic EO at {k} vertices: {eo}");
        ensure!(eo.eval(&ri(1)) == *thm2_q1(3).map_err(err)?.coeff(k), "Q(t,1) at {k}");
        let po = count_partial_orientations(&general);
        ensure!(po == *wh.coeff(k), "partial orientations at {k} edges: {po}");
        let plain = count_euler_orientations(&general).eval(&ri(1));
        ensure!(plain == *g.coeff(k), "G at {k} edges: {plain}");
        let targets: BTreeSet<_> = labelled_maps(k).map_err(err)?.into_iter().collect();
        ensure!(ri(targets.len() as i64) == *g.coeff(k), "labelled maps at {k}: {}", targets.len());
        let mut images = BTreeSet::new();
        let mut total = 0;
        for m in &general {
            for o in euler_orientations(m) {
                images.insert(dual_labelling(&o).map_err(err)?);
                total += 1;
            }
        }
        ensure!(images.len() == total && images == targets, "dual labelling at {k} is not a bijection");
        let colourful = colourful_quadrangulations(k).map_err(err)?.len();
        ensure!(ri(colourful as i64) == wh.coeff(k).eval(&ri(0)), "colourful at {k}: {colourful}");
        let fib = ambjorn_budd_fibers(k).map_err(err)?;
        ensure!(fib.keys().cloned().collect::<BTreeSet<_>>() == targets, "2-to-1 image at {k}");
        ensure!(fib.values().all(|&c| c == 2), "2-to-1 fibers at {k}");
    }
    Ok("sizes 1..3: EO, partial, labelled, dual bijection, 2-to-1".into())
}

fn identities() -> Outcome {
    let rs = classical_suite(30).map_err(err)?;
    let bad: Vec<String> =
        rs.iter().filter(|r| !r.passed()).map(|r| format!("{} at q^{}", r.name, r.first_failure.unwrap())).collect();
    ensure!(bad.is_empty(), "{}", bad.join(", "));
    Ok(format!("{} identities to q-order 30", rs.len()))
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn series_from(cs: Vec<Rat>) -> TruncSeries<Rat> {
    TruncSeries::new(cs)
}

fn check<T: std::fmt::Debug>(name: &str, r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| format!("{name}: {e}"))
}

fn properties() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 100, failure_persistence: None, ..Config::default() });
    let order = 8;

    let strat = (prop::collection::vec(small_rat(), order - 2), small_rat().prop_filter("unit", |r| *r != ri(0)));
    let res = runner.run(&strat, |(rest, lead)| {
        let mut cs = vec![ri(0), lead];
        cs.extend(rest);
        let f = series_from(cs);
        let g = f.reversion().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(g.compose(&f).unwrap(), TruncSeries::var(order));
        prop_assert_eq!(f.compose(&g).unwrap(), TruncSeries::var(order));
        Ok(())
    });
    check("reversion round trip", res)?;

    let res = runner.run(&prop::collection::vec(small_rat(), order - 1), |rest| {
        let mut cs = vec![ri(0)];
        cs.extend(rest);
        let s = series_from(cs);
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s.clone());
        let u = s.add(&TruncSeries::one(order));
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
        Ok(())
    });
    check("exp/log round trip", res)?;

    let res = runner.run(&prop::collection::vec(small_rat(), 0..7), |cs| {
        let p = PolyGamma::new(cs);
        prop_assert_eq!(chebyshev_reduce(&p.to_laurent()).unwrap(), p);
        Ok(())
    });
    check("chebyshev_reduce round trip", res)?;

    let term = (0i32..5, 0usize..5, -3i32..=3, small_rat());
    let res = runner.run(&prop::collection::vec(term, 1..6), |terms| {
        let mut p = XyPoly::<LaurentOmega>::zero();
        for (i, j, e, c) in terms {
            p.add_at(i, j, &LaurentOmega::monomial(e, c));
        }
        let deg = p.total_degree().unwrap_or(0);
        let mut q = p;
        for _ in 0..=deg {
            q = apply_t(&q);
        }
        prop_assert!(q.is_zero());
        Ok(())
    });
    check("T nilpotence", res)?;

    let wh = solve_wh(10).map_err(err)?;
    for k in 0..10 {
        let h = wh.h.at(k);
        ensure!(h.transpose().map(LaurentOmega::invert_omega) == *h, "H symmetry fails at t^{k}");
    }
    // q_from_wh rejects any order where H(0,0) and [x]W/(ω+ω⁻¹) differ
    let q = q_from_wh(&solve_wh(17).map_err(err)?).map_err(err)?;
    ensure!(q.order() >= 16, "Q expressions compared only to order {}", q.order());

    let g = PolyGamma::gamma();
    let p = q_big_of_t(&g, 15).map_err(err)?;
    let g2 = g.add_ref(&PolyGamma::from_ints(&[2]));
    let lhs = p.r_of_t.add(&p.big_q.add(&TruncSeries::one(16)).mul_t_pow(2).mul_scalar(&g2));
    ensure!(lhs == TruncSeries::var(16), "R + (g+2)t^2(1+Q) = t fails at t^{:?}", lhs.first_mismatch(&TruncSeries::var(16)));
    Ok("100-case round trips, nilpotence; H symmetry to 10; Q expressions to 15; consistency to 15".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 5] = [
        ("1 low-order exactness", low_order),
        ("2 cross-route agreement", cross_route),
        ("3 oracle ground truth", oracle),
        ("4 identity suite", identities),
        ("5 property suites", properties),
    ];
    let mut ok = true;
    for (name, f) in criteria {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                ok = false;
                println!("FAIL criterion {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
