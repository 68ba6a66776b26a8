use std::fmt;

use clap::ValueEnum;
use sixvertex::ring::{rat_from_str, ri, PolyGamma, Rat, Ring};
use sixvertex::series::TruncSeries;
use sixvertex::systems::{q_from_pcd, q_from_wh, solve_pcd, solve_wh, thm1_g, thm2_q1, thm2_r, PcdBounds};
use sixvertex::theta::q_big_of_t;
use sixvertex::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    #[value(name = "G")]
    G,
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
    /// the nome q(t)
    #[value(name = "q")]
    Nome,
}

impl fmt::Display for What {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            What::G => "G",
            What::Q => "Q",
            What::R => "R",
            What::Nome => "q",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Thm1,
    Thm2,
    Theta,
    Pcd,
    Wh,
    Auto,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GammaArg {
    Symbolic,
    Value(Rat),
}

impl GammaArg {
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        if s == "symbolic" {
            return Ok(GammaArg::Symbolic);
        }
        rat_from_str(s).map(GammaArg::Value).map_err(|e| e.to_string())
    }

    fn is(&self, v: i64) -> bool {
        *self == GammaArg::Value(ri(v))
    }
}

impl fmt::Display for GammaArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaArg::Symbolic => f.write_str("symbolic"),
            GammaArg::Value(r) => write!(f, "{r}"),
        }
    }
}

/// Why `route` cannot produce `what` at `gamma`, if it cannot.
pub fn incompatibility(what: What, gamma: &GammaArg, route: Route) -> Option<String> {
    if what == What::G && !gamma.is(0) {
        return Some("G is only defined at gamma = 0".into());
    }
    let ok = match route {
        Route::Thm1 => what == What::G,
        Route::Thm2 => gamma.is(1) && matches!(what, What::Q | What::R),
        Route::Pcd => gamma.is(0) && matches!(what, What::G | What::Q),
        Route::Wh => matches!(what, What::G | What::Q),
        Route::Theta | Route::Auto => true,
    };
    (!ok).then(|| format!("route {route} cannot compute {what} at gamma = {gamma}"))
}

pub fn applicable(what: What, gamma: &GammaArg) -> Vec<Route> {
    [Route::Thm1, Route::Thm2, Route::Pcd, Route::Wh, Route::Theta]
        .into_iter()
        .filter(|&r| incompatibility(what, gamma, r).is_none())
        .collect()
}

fn render<R: Ring>(s: &TruncSeries<R>, n: usize) -> Vec<String> {
    (1..=n).map(|k| s.coeff(k).to_string()).collect()
}

fn halve(s: &TruncSeries<Rat>) -> TruncSeries<Rat> {
    s.scale(&sixvertex::ring::rat(1, 2))
}

fn theta_route<R: Ring>(what: What, gamma: &R, n: usize) -> Result<Vec<String>> {
    let p = q_big_of_t(gamma, n)?;
    let s = match what {
        What::G | What::Q => p.big_q,
        What::R => p.r_of_t,
        What::Nome => p.q_of_t,
    };
    if what == What::G {
        return Ok(render(&s.map(|c| c.scale(&sixvertex::ring::rat(1, 2))), n));
    }
    Ok(render(&s, n))
}

/// Coefficients of `t^1..t^n` by one concrete route.
pub fn compute(what: What, gamma: &GammaArg, route: Route, n: usize) -> Result<Vec<String>> {
    if let Some(msg) = incompatibility(what, gamma, route) {
        return Err(Error::IncompatibleRoute(msg));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    match route {
        Route::Thm1 => Ok(render(&thm1_g(n)?, n)),
        Route::Thm2 => match what {
            What::Q => Ok(render(&thm2_q1(n)?, n)),
            _ => Ok(render(&thm2_r(n)?, n)),
        },
        Route::Pcd => {
            let q = q_from_pcd(&solve_pcd(&PcdBounds::for_terms(n), None)?)?;
            Ok(render(&if what == What::G { halve(&q) } else { q }, n))
        }
        Route::Wh => {
            let q = q_from_wh(&solve_wh(n + 2)?)?;
            match gamma {
                GammaArg::Symbolic => Ok(render(&q, n)),
                GammaArg::Value(g) => {
                    let v = q.map(|p: &PolyGamma| p.eval(g));
                    Ok(render(&if what == What::G { halve(&v) } else { v }, n))
                }
            }
        }
        Route::Theta => match gamma {
            GammaArg::Symbolic => theta_route(what, &PolyGamma::gamma(), n),
            GammaArg::Value(g) => theta_route(what, g, n),
        },
        Route::Auto => Err(Error::IncompatibleRoute("auto is not a concrete route".into())),
    }
}
