//! Exact series machinery for the six-vertex model on random planar maps.

pub mod classical;
pub mod error;
pub mod ring;
pub mod oracle;
pub mod series;
pub mod systems;
pub mod theta;

pub use error::{Error, Result};
