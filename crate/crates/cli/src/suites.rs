use std::collections::BTreeSet;
use std::thread;

use clap::ValueEnum;
use serde_json::json;
use sixvertex::classical::classical_suite;
use sixvertex::oracle::{
    ambjorn_budd_fibers, colourful_quadrangulations, count_euler_orientations, count_partial_orientations,
    dual_labelling, enumerate_maps, euler_orientations, labelled_maps,
};
use sixvertex::ring::{rat, ri, PolyGamma, Rat, Ring};
use sixvertex::series::TruncSeries;
use sixvertex::systems::{
    closed_form_pcd, q_from_pcd, q_from_wh, solve_pcd, solve_wh, thm1_g, thm1_r, thm2_q1, PcdBounds,
};
use sixvertex::theta::q_big_of_t;
use sixvertex::Result;

use crate::report::Entry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Theta,
    Classical,
    Systems,
    Oracle,
}

const ORACLE_MAX: usize = 3;

type SuiteFn = fn(usize) -> Result<Vec<Entry>>;

fn strs<R: Ring>(s: &TruncSeries<R>, n: usize) -> Vec<String> {
    (0..n).map(|k| s.coeff(k).to_string()).collect()
}

pub fn theta(n: usize) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let g = PolyGamma::gamma();
    let p = q_big_of_t(&g, n - 1)?;
    // R + (γ+2) t² (1 + Q) = t
    let g2 = g.add_ref(&PolyGamma::from_ints(&[2]));
    let lhs = p
        .r_of_t
        .add(&p.big_q.add(&TruncSeries::one(n)).mul_t_pow(2).mul_scalar(&g2));
    out.push(Entry::compare(
        "theta.consistency",
        "R + (g+2) t^2 (1 + Q) = t",
        &strs(&lhs, n),
        &strs(&TruncSeries::<PolyGamma>::var(n), n),
    ));
    let lead = TruncSeries::new(vec![PolyGamma::zero(), PolyGamma::one(), PolyGamma::from_ints(&[6, 6])]);
    let m = n.min(3);
    out.push(Entry::compare("theta.nome_leading", "q = t + (6g+6) t^2 + ...", &strs(&p.q_of_t, m), &strs(&lead, m)));
    Ok(out)
}

pub fn classical(n: usize) -> Result<Vec<Entry>> {
    Ok(classical_suite(n)?.iter().map(Entry::from_check).collect())
}

fn halve(s: &TruncSeries<Rat>) -> TruncSeries<Rat> {
    s.scale(&rat(1, 2))
}

/// Cross-route agreement through `t^(n−1)`.
pub fn systems(n: usize) -> Result<Vec<Entry>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let last = n - 1;
    let g = thm1_g(last)?;
    let b = PcdBounds::for_terms(last);
    let pcd = solve_pcd(&b, None)?;
    let closed = closed_form_pcd(&b, &thm1_r(b.t_order + b.y_order)?)?;
    let wh = q_from_wh(&solve_wh(n + 1)?)?;
    let at = |v: i64| wh.map(|p: &PolyGamma| p.eval(&ri(v)));
    let g_strs = strs(&g, n);
    let mut out = vec![
        Entry::compare("systems.G.pcd", "G = ([y^1]P - 1)/2, iterated", &g_strs, &strs(&halve(&q_from_pcd(&pcd)?), n)),
        Entry::compare(
            "systems.G.closed_form",
            "G = ([y^1]P - 1)/2, closed form",
            &g_strs,
            &strs(&halve(&q_from_pcd(&closed)?), n),
        ),
        Entry::new(
            "systems.pcd.fixpoint",
            "closed form P, C, D = iterated P, C, D",
            closed == pcd,
            json!({ "t_order": b.t_order, "y_order": b.y_order }),
        ),
        Entry::compare("systems.G.theta", "G = Q(t,0)/2, theta", &g_strs, &strs(&halve(&q_big_of_t(&ri(0), last)?.big_q), n)),
        Entry::compare("systems.G.wh", "G = Q(t,0)/2, kernel", &g_strs, &strs(&halve(&at(0)), n)),
    ];
    let q1 = strs(&thm2_q1(last)?, n);
    out.push(Entry::compare("systems.Q1.theta", "Q(t,1), theta", &q1, &strs(&q_big_of_t(&ri(1), last)?.big_q, n)));
    out.push(Entry::compare("systems.Q1.wh", "Q(t,1), kernel", &q1, &strs(&at(1), n)));
    for v in [0, 1, 2, 5, -1] {
        out.push(Entry::compare(
            format!("systems.Q.wh_vs_theta[g={v}]"),
            "symbolic kernel Q evaluated = theta Q",
            &strs(&at(v), n),
            &strs(&q_big_of_t(&ri(v), last)?.big_q, n),
        ));
    }
    Ok(out)
}

/// Exhaustive counts for sizes `1..=min(n−1, 3)` against the series.
pub fn oracle(n: usize) -> Result<Vec<Entry>> {
    let top = n.saturating_sub(1).min(ORACLE_MAX);
    if top == 0 {
        return Ok(Vec::new());
    }
    let q = q_from_wh(&solve_wh(top + 2)?)?;
    let g = thm1_g(top)?;
    let mut out = Vec::new();
    for k in 1..=top {
        let want = q.coeff(k).to_string();
        let quartic = enumerate_maps(2 * k, true)?;
        let general = enumerate_maps(k, false)?;
        let eo = count_euler_orientations(&quartic);
        out.push(Entry::compare(
            format!("oracle.quartic_eo[v={k}]"),
            "[t^k] Q(t,g) = Eulerian orientations of quartic maps, g per alternating vertex",
            &[eo.to_string()],
            std::slice::from_ref(&want),
        ));
        let po = count_partial_orientations(&general);
        out.push(Entry::compare(
            format!("oracle.partial[e={k}]"),
            "[t^k] Q(t,g) = partial orientations, g per undirected edge",
            &[po.to_string()],
            &[want],
        ));
        let plain = count_euler_orientations(&general).eval(&ri(1));
        let gk = g.coeff(k).to_string();
        out.push(Entry::compare(
            format!("oracle.general_eo[e={k}]"),
            "[t^k] G = Eulerian orientations of planar maps",
            &[plain.to_string()],
            std::slice::from_ref(&gk),
        ));
        let targets: BTreeSet<_> = labelled_maps(k)?.into_iter().collect();
        let mut images = BTreeSet::new();
        let mut total = 0usize;
        for m in &general {
            for o in euler_orientations(m) {
                images.insert(dual_labelling(&o)?);
                total += 1;
            }
        }
        out.push(Entry::new(
            format!("oracle.dual_labelling[e={k}]"),
            "heights give a bijection onto labelled maps",
            images.len() == total && images == targets && targets.len().to_string() == gk,
            json!({ "orientations": total, "images": images.len(), "labelled_maps": targets.len() }),
        ));
        let colourful = colourful_quadrangulations(k)?.len();
        let fib = ambjorn_budd_fibers(k)?;
        let keys: BTreeSet<_> = fib.keys().cloned().collect();
        let sizes: BTreeSet<usize> = fib.values().copied().collect();
        out.push(Entry::new(
            format!("oracle.two_to_one[f={k}]"),
            "colourful quadrangulations map 2-to-1 onto labelled maps",
            keys == targets && sizes.len() == 1 && sizes.contains(&2) && colourful.to_string() == q.coeff(k).eval(&ri(0)).to_string(),
            json!({ "colourful": colourful, "targets": keys.len(), "fiber_sizes": sizes }),
        ));
    }
    Ok(out)
}

/// Runs the selected suites concurrently; results keep the fixed suite order.
pub fn run(suite: Suite, n: usize) -> Result<Vec<Entry>> {
    let chosen: Vec<SuiteFn> = match suite {
        Suite::All => vec![theta, classical, systems, oracle],
        Suite::Theta => vec![theta],
        Suite::Classical => vec![classical],
        Suite::Systems => vec![systems],
        Suite::Oracle => vec![oracle],
    };
    let parts: Vec<Result<Vec<Entry>>> = thread::scope(|s| {
        let handles: Vec<_> = chosen.into_iter().map(|f| s.spawn(move || f(n))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}
