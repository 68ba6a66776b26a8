use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Rooted combinatorial map on darts `0..2n`.
///
/// `sigma` rotates counterclockwise around a vertex, `alpha` swaps the two
/// darts of an edge. Faces are the cycles of `phi = sigma ∘ alpha`. Maps
/// produced by [`enumerate_maps`] are in canonical form with root dart 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedMap {
    pub sigma: Vec<usize>,
    pub alpha: Vec<usize>,
    pub root: usize,
}

pub(crate) fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            cyc.push(d);
            d = perm[d];
        }
        out.push(cyc);
    }
    out
}

/// Index of the cycle containing each element.
pub(crate) fn cycle_index(cycles: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut idx = vec![0; n];
    for (i, c) in cycles.iter().enumerate() {
        for &d in c {
            idx[d] = i;
        }
    }
    idx
}

impl RootedMap {
    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn phi(&self) -> Vec<usize> {
        (0..self.n_darts()).map(|d| self.sigma[self.alpha[d]]).collect()
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.sigma)
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.phi())
    }

    pub fn vertex_of(&self) -> Vec<usize> {
        cycle_index(&self.vertices(), self.n_darts())
    }

    pub fn face_of(&self) -> Vec<usize> {
        cycle_index(&self.faces(), self.n_darts())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n_darts();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.sigma[d], self.alpha[d]] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    /// `V − E + F == 2`
    pub fn is_planar(&self) -> bool {
        self.vertices().len() + self.faces().len() == self.n_edges() + 2
    }

    /// Relabels darts in discovery order from the root: for each dart in
    /// order, its `alpha` image then its `sigma` image receive the next free labels.
    /// Returns the map and the old-to-new relabelling.
    pub fn canonical_with(&self) -> Result<(RootedMap, Vec<usize>)> {
        let n = self.n_darts();
        let mut new_of = vec![usize::MAX; n];
        let mut order = vec![self.root];
        new_of[self.root] = 0;
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for e in [self.alpha[d], self.sigma[d]] {
                if new_of[e] == usize::MAX {
                    new_of[e] = order.len();
                    order.push(e);
                }
            }
            i += 1;
        }
        if order.len() != n {
            return Err(Error::ConventionViolation("map is not connected".into()));
        }
        let sigma = order.iter().map(|&d| new_of[self.sigma[d]]).collect();
        let alpha = order.iter().map(|&d| new_of[self.alpha[d]]).collect();
        Ok((RootedMap { sigma, alpha, root: 0 }, new_of))
    }

    pub fn canonical(&self) -> Result<RootedMap> {
        Ok(self.canonical_with()?.0)
    }

    /// The dual map, `sigma* = phi`, rooted at the same dart. Dual vertices are
    /// the faces of `self`, dual faces its vertices.
    pub fn dual(&self) -> RootedMap {
        RootedMap { sigma: self.phi(), alpha: self.alpha.clone(), root: self.root }
    }

    /// `sigma=(1 2)(3) alpha=(1 3)(2 4) root=1`, darts numbered from 1.
    pub fn dump(&self) -> String {
        let cyc = |p: &[usize]| {
            let mut s = String::new();
            for c in cycles_of(p) {
                s.push('(');
                let parts: Vec<String> = c.iter().map(|d| (d + 1).to_string()).collect();
                s.push_str(&parts.join(" "));
                s.push(')');
            }
            s
        };
        let mut out = String::new();
        let _ = write!(out, "sigma={} alpha={} root={}", cyc(&self.sigma), cyc(&self.alpha), self.root + 1);
        out
    }
}

/// Largest sizes the exhaustive enumerator accepts.
pub const MAX_EDGES: usize = 5;
pub const MAX_QUARTIC_VERTICES: usize = 3;

struct Gen {
    n: usize,
    quartic: bool,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    alpha: Vec<usize>,
    labelled: usize,
    out: Vec<RootedMap>,
}

const NONE: usize = usize::MAX;

impl Gen {
    /// Length of the sigma-chain through `d`, and whether it is closed.
    fn chain(&self, d: usize) -> (usize, bool) {
        let mut start = d;
        let mut len = 1;
        while self.sigma_inv[start] != NONE {
            start = self.sigma_inv[start];
            if start == d {
                return (len, true);
            }
            len += 1;
        }
        let mut e = d;
        while self.sigma[e] != NONE {
            e = self.sigma[e];
            len += 1;
        }
        (len, false)
    }

    fn step(&mut self, d: usize) {
        let total = 2 * self.n;
        if d == total {
            if self.labelled == total {
                let m = RootedMap { sigma: self.sigma.clone(), alpha: self.alpha.clone(), root: 0 };
                if m.is_planar() {
                    self.out.push(m);
                }
            }
            return;
        }
        if d >= self.labelled {
            return;
        }
        if self.alpha[d] != NONE {
            self.choose_sigma(d);
            return;
        }
        let fresh = self.labelled;
        let cands: Vec<usize> =
            (d + 1..=fresh.min(total - 1)).filter(|&e| e == fresh || self.alpha[e] == NONE).collect();
        for e in cands {
            if e == fresh {
                self.labelled += 1;
            }
            self.alpha[d] = e;
            self.alpha[e] = d;
            self.choose_sigma(d);
            self.alpha[d] = NONE;
            self.alpha[e] = NONE;
            if e == fresh {
                self.labelled -= 1;
            }
        }
    }

    fn choose_sigma(&mut self, d: usize) {
        let total = 2 * self.n;
        let fresh = self.labelled;
        let cands: Vec<usize> =
            (0..=fresh.min(total - 1)).filter(|&e| e == fresh || self.sigma_inv[e] == NONE).collect();
        for e in cands {
            if e == fresh {
                self.labelled += 1;
            }
            self.sigma[d] = e;
            self.sigma_inv[e] = d;
            let ok = !self.quartic || {
                let (len, closed) = self.chain(d);
                if closed { len == 4 } else { len <= 4 }
            };
            if ok {
                self.step(d + 1);
            }
            self.sigma[d] = NONE;
            self.sigma_inv[e] = NONE;
            if e == fresh {
                self.labelled -= 1;
            }
        }
    }
}

/// Every rooted planar map with `n_edges` edges, once each, in canonical form.
/// With `quartic`, only maps whose vertices all have degree 4.
pub fn enumerate_maps(n_edges: usize, quartic: bool) -> Result<Vec<RootedMap>> {
    let limit = if quartic { 2 * MAX_QUARTIC_VERTICES } else { MAX_EDGES };
    if n_edges > limit {
        return Err(Error::SizeLimitExceeded(format!("{n_edges} edges (limit {limit})")));
    }
    if n_edges == 0 || (quartic && n_edges % 2 == 1) {
        return Ok(Vec::new());
    }
    let total = 2 * n_edges;
    let mut g = Gen {
        n: n_edges,
        quartic,
        sigma: vec![NONE; total],
        sigma_inv: vec![NONE; total],
        alpha: vec![NONE; total],
        labelled: 1,
        out: Vec::new(),
    };
    g.step(0);
    g.out.sort();
    Ok(g.out)
}
