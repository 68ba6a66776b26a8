//! Functional-equation and implicit-series routes to the generating functions.

mod implicit;
mod pcd;
mod wh;

pub use implicit::{thm1_g, thm1_r, thm2_q1, thm2_r};
pub use pcd::{closed_form_pcd, pcd_step, q_from_pcd, solve_pcd, PcdBounds, PcdState};
pub use wh::{apply_t, q_from_wh, solve_wh, WhState};
