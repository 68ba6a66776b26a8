use super::maps::RootedMap;
use crate::ring::{PolyGamma, Ring};

/// An Eulerian orientation; `out[d]` holds when dart `d` is the tail of its edge.
/// The root dart is always a tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerOrientation {
    pub map: RootedMap,
    pub out: Vec<bool>,
}

/// Per-edge state of a partial orientation, seen from the smaller dart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeState {
    Forward,
    Backward,
    Undirected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    pub map: RootedMap,
    /// indexed like [`edges`]
    pub state: Vec<EdgeState>,
}

/// Edges as `(d, alpha d)` with `d < alpha d`, in dart order.
pub fn edges(m: &RootedMap) -> Vec<(usize, usize)> {
    (0..m.n_darts()).filter(|&d| d < m.alpha[d]).map(|d| (d, m.alpha[d])).collect()
}

fn balanced(m: &RootedMap, sign: &[i32]) -> bool {
    m.vertices().iter().all(|v| v.iter().map(|&d| sign[d]).sum::<i32>() == 0)
}

/// All Eulerian orientations of `m` with the root dart as a tail.
pub fn euler_orientations(m: &RootedMap) -> Vec<EulerOrientation> {
    let es = edges(m);
    let mut out = Vec::new();
    for mask in 0u32..(1 << es.len()) {
        let mut tail = vec![false; m.n_darts()];
        for (i, &(a, b)) in es.iter().enumerate() {
            let t = if mask >> i & 1 == 1 { a } else { b };
            tail[t] = true;
        }
        if !tail[m.root] {
            continue;
        }
        let sign: Vec<i32> = tail.iter().map(|&t| if t { 1 } else { -1 }).collect();
        if balanced(m, &sign) {
            out.push(EulerOrientation { map: m.clone(), out: tail });
        }
    }
    out
}

impl EulerOrientation {
    /// Vertices of degree 4 whose darts alternate out, in, out, in.
    pub fn alternating_vertices(&self) -> usize {
        self.map
            .vertices()
            .iter()
            .filter(|v| v.len() == 4 && (0..4).all(|i| self.out[v[i]] != self.out[v[(i + 1) % 4]]))
            .count()
    }
}

/// All Eulerian partial orientations of `m`; the root edge is unconstrained.
pub fn partial_orientations(m: &RootedMap) -> Vec<PartialOrientation> {
    let es = edges(m);
    let mut out = Vec::new();
    let total = 3usize.pow(es.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut sign = vec![0i32; m.n_darts()];
        let mut state = Vec::with_capacity(es.len());
        for &(a, b) in &es {
            let s = match c % 3 {
                0 => EdgeState::Forward,
                1 => EdgeState::Backward,
                _ => EdgeState::Undirected,
            };
            c /= 3;
            match s {
                EdgeState::Forward => (sign[a], sign[b]) = (1, -1),
                EdgeState::Backward => (sign[a], sign[b]) = (-1, 1),
                EdgeState::Undirected => {}
            }
            state.push(s);
        }
        if balanced(m, &sign) {
            out.push(PartialOrientation { map: m.clone(), state });
        }
    }
    out
}

fn gamma_pow(k: usize) -> PolyGamma {
    PolyGamma::gamma().pow(k as u32)
}

/// `sum over maps and Eulerian orientations of γ^(alternating vertices)`.
pub fn count_euler_orientations(maps: &[RootedMap]) -> PolyGamma {
    let mut acc = PolyGamma::zero();
    for m in maps {
        for eo in euler_orientations(m) {
            acc.add_assign_ref(&gamma_pow(eo.alternating_vertices()));
        }
    }
    acc
}

/// `sum over maps and partial orientations of γ^(undirected edges)`.
pub fn count_partial_orientations(maps: &[RootedMap]) -> PolyGamma {
    let mut acc = PolyGamma::zero();
    for m in maps {
        for po in partial_orientations(m) {
            let k = po.state.iter().filter(|s| **s == EdgeState::Undirected).count();
            acc.add_assign_ref(&gamma_pow(k));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::maps::enumerate_maps;
    use super::*;

    fn g(c: &[i64]) -> PolyGamma {
        PolyGamma::from_ints(c)
    }

    #[test]
    fn quartic_eo_polynomials() {
        let by_v: Vec<PolyGamma> =
            (1..=3).map(|v| count_euler_orientations(&enumerate_maps(2 * v, true).unwrap())).collect();
        assert_eq!(by_v, [g(&[2, 2]), g(&[10, 16, 9]), g(&[66, 150, 132, 54])]);
    }

    #[test]
    fn partial_orientation_polynomials() {
        let by_e: Vec<PolyGamma> =
            (1..=3).map(|n| count_partial_orientations(&enumerate_maps(n, false).unwrap())).collect();
        assert_eq!(by_e, [g(&[2, 2]), g(&[10, 16, 9]), g(&[66, 150, 132, 54])]);
    }

    #[test]
    fn general_eo_counts() {
        let by_e: Vec<PolyGamma> =
            (1..=4).map(|n| count_euler_orientations(&enumerate_maps(n, false).unwrap())).collect();
        let plain: Vec<_> = by_e.iter().map(|p| p.eval(&crate::ring::ri(1))).collect();
        let g = crate::systems::thm1_g(4).unwrap();
        assert_eq!(plain, &g.coeffs()[1..]);
    }
}
