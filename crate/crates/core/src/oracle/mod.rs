//! Exhaustive enumeration of small rooted planar maps and their decorations.

mod labels;
mod maps;
mod orient;

pub use labels::{
    ambjorn_budd, ambjorn_budd_fibers, colourful_quadrangulations, dual_labelling, labelled_maps, labellings,
    LabelledMap,
};
pub use maps::{enumerate_maps, RootedMap, MAX_EDGES, MAX_QUARTIC_VERTICES};
pub use orient::{
    count_euler_orientations, count_partial_orientations, edges, euler_orientations, partial_orientations,
    EdgeState, EulerOrientation, PartialOrientation,
};

use crate::ring::{PolyGamma, Ring};
use crate::series::TruncSeries;

/// `sum_k counts[k] t^(k+1)`, with the constant term 0.
pub fn series_from_counts(counts: &[PolyGamma]) -> TruncSeries<PolyGamma> {
    let mut c = vec![PolyGamma::zero()];
    c.extend_from_slice(counts);
    if counts.is_empty() {
        return TruncSeries::zero(0);
    }
    TruncSeries::new(c)
}
