//! Hypergeometric series, lattice sums, η, and the q-series identities linking
//! the theta parametrisation to the binomial kernels.

mod checks;
mod series;

pub use checks::{
    check_ath, check_eta_chain, check_heat, check_hyper_ode_and_deriv, check_r_w, check_r_w_case3, check_t_chain,
    check_tauid, check_theta_product, check_toprove, classical_suite, first_diff, CheckResult,
};
pub use series::{
    eta, hyper_2f1, lambert_odd, lattice_sums, odd_divisor_sums, pochhammer, theta_product, Case, HyperSeries,
    LatticeCase,
};
