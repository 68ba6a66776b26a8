use std::collections::BTreeMap;

use super::maps::{cycle_index, cycles_of, enumerate_maps, RootedMap};
use super::orient::{euler_orientations, EulerOrientation};
use crate::error::{Error, Result};

/// A rooted map with an integer label on each vertex, stored per dart
/// (`labels[d]` is the label of the vertex of `d`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledMap {
    pub map: RootedMap,
    pub labels: Vec<i64>,
}

impl LabelledMap {
    /// Adjacent labels differ by one, the root goes from 0 to 1, and the
    /// labels are constant on each vertex.
    pub fn check(&self) -> Result<()> {
        let m = &self.map;
        for d in 0..m.n_darts() {
            if self.labels[d] != self.labels[m.sigma[d]] {
                return Err(Error::ConventionViolation(format!("dart {d}: label not constant on its vertex")));
            }
            if (self.labels[d] - self.labels[m.alpha[d]]).abs() != 1 {
                return Err(Error::ConventionViolation(format!("dart {d}: adjacent labels differ by != 1")));
            }
        }
        if self.labels[m.root] != 0 || self.labels[m.alpha[m.root]] != 1 {
            return Err(Error::ConventionViolation("root is not labelled 0 -> 1".into()));
        }
        Ok(())
    }

    /// Canonical relabelling of the darts, carrying the labels along.
    pub fn canonical(&self) -> Result<LabelledMap> {
        let (map, new_of) = self.map.canonical_with()?;
        let mut labels = vec![0; map.n_darts()];
        for (old, &new) in new_of.iter().enumerate() {
            labels[new] = self.labels[old];
        }
        Ok(LabelledMap { map, labels })
    }

    pub fn is_quadrangulation(&self) -> bool {
        self.map.faces().iter().all(|f| f.len() == 4)
    }

    /// Every face has three distinct labels.
    pub fn is_colourful(&self) -> bool {
        self.map.faces().iter().all(|f| {
            let mut ls: Vec<i64> = f.iter().map(|&d| self.labels[d]).collect();
            ls.sort();
            ls.dedup();
            ls.len() == 3
        })
    }
}

/// All labellings of a map satisfying the labelled-map conditions.
pub fn labellings(m: &RootedMap) -> Vec<LabelledMap> {
    let verts = m.vertices();
    let vof = cycle_index(&verts, m.n_darts());
    // vertices in BFS order from the root, each with a parent already placed
    let mut order = vec![vof[m.root]];
    let mut parent = vec![usize::MAX; verts.len()];
    let mut placed = vec![false; verts.len()];
    placed[vof[m.root]] = true;
    let mut i = 0;
    while i < order.len() {
        for &d in &verts[order[i]] {
            let w = vof[m.alpha[d]];
            if !placed[w] {
                placed[w] = true;
                parent[w] = order[i];
                order.push(w);
            }
        }
        i += 1;
    }
    let mut out = Vec::new();
    let mut lab = vec![0i64; verts.len()];
    let k = order.len() - 1;
    for mask in 0u32..(1 << k) {
        for (j, &v) in order.iter().enumerate().skip(1) {
            lab[v] = lab[parent[v]] + if mask >> (j - 1) & 1 == 1 { 1 } else { -1 };
        }
        let lm = LabelledMap { map: m.clone(), labels: (0..m.n_darts()).map(|d| lab[vof[d]]).collect() };
        if lm.check().is_ok() {
            out.push(lm);
        }
    }
    out
}

/// All labelled maps with `n` edges.
pub fn labelled_maps(n: usize) -> Result<Vec<LabelledMap>> {
    Ok(enumerate_maps(n, false)?.iter().flat_map(labellings).collect())
}

/// Heights on the faces of an Eulerian orientation, as a labelled dual map.
///
/// Crossing an edge from the face of its tail dart to the face of the head
/// dart raises the height by one; the root face (face of the root dart) gets 0.
pub fn dual_labelling(eo: &EulerOrientation) -> Result<LabelledMap> {
    let m = &eo.map;
    let n = m.n_darts();
    let faces = m.faces();
    let fof = cycle_index(&faces, n);
    let mut h: Vec<Option<i64>> = vec![None; faces.len()];
    h[fof[m.root]] = Some(0);
    let mut stack = vec![fof[m.root]];
    while let Some(f) = stack.pop() {
        let hf = h[f].unwrap();
        for &d in &faces[f] {
            let g = fof[m.alpha[d]];
            let want = hf + if eo.out[d] { 1 } else { -1 };
            match h[g] {
                None => {
                    h[g] = Some(want);
                    stack.push(g);
                }
                Some(x) if x != want => {
                    return Err(Error::ConventionViolation(format!("inconsistent height at face {g}")));
                }
                _ => {}
            }
        }
    }
    let dual = m.dual();
    let labels = (0..n).map(|d| h[fof[d]].unwrap()).collect();
    let lm = LabelledMap { map: dual, labels }.canonical()?;
    lm.check()?;
    Ok(lm)
}

/// Colourful labelled quadrangulations with `n` faces, as heights of the
/// Eulerian orientations of quartic maps with `n` vertices and no alternating vertex.
pub fn colourful_quadrangulations(n: usize) -> Result<Vec<LabelledMap>> {
    let mut out = Vec::new();
    for m in enumerate_maps(2 * n, true)? {
        for eo in euler_orientations(&m) {
            if eo.alternating_vertices() == 0 {
                out.push(dual_labelling(&eo)?);
            }
        }
    }
    Ok(out)
}

/// One edge per face of a colourful labelled quadrangulation.
///
/// In a face with corner labels `l, l+1, l+2, l+1`, the new edge joins the
/// `l+2` corner to the corner following it along the face. The image is rooted
/// at the new edge of the root face, from its `l+1` end, and labels are
/// shifted so that this end gets 0. Corners of label-minimum vertices carry
/// no new edge, so local minima disappear.
pub fn ambjorn_budd(q: &LabelledMap) -> Result<LabelledMap> {
    let m = &q.map;
    let n = m.n_darts();
    let faces = m.faces();
    let phi = m.phi();
    // corner of dart x: the sector just before x around its vertex, inside face(x)
    let mut hosted = vec![usize::MAX; n];
    let mut root_dart = usize::MAX;
    let mut shift = 0;
    for (fi, f) in faces.iter().enumerate() {
        let mut ls: Vec<i64> = f.iter().map(|&d| q.labels[d]).collect();
        ls.sort();
        ls.dedup();
        if f.len() != 4 || ls.len() != 3 {
            return Err(Error::NotColourful(fi));
        }
        let top = *f.iter().max_by_key(|&&d| q.labels[d]).unwrap();
        let partner = phi[top];
        hosted[top] = 2 * fi;
        hosted[partner] = 2 * fi + 1;
        if f.contains(&m.root) {
            root_dart = 2 * fi + 1;
            shift = q.labels[partner];
        }
    }
    let k = faces.len();
    let mut sigma = vec![usize::MAX; 2 * k];
    let mut labels = vec![0; 2 * k];
    for v in cycles_of(&m.sigma) {
        let hs: Vec<usize> = v.iter().filter(|&&x| hosted[x] != usize::MAX).copied().collect();
        for (i, &x) in hs.iter().enumerate() {
            sigma[hosted[x]] = hosted[hs[(i + 1) % hs.len()]];
            labels[hosted[x]] = q.labels[x] - shift;
        }
    }
    let alpha = (0..2 * k).map(|d| d ^ 1).collect();
    let img = LabelledMap { map: RootedMap { sigma, alpha, root: root_dart }, labels }.canonical()?;
    if !img.map.is_planar() {
        return Err(Error::ConventionViolation("image map is not planar".into()));
    }
    img.check()?;
    Ok(img)
}

/// Image of every colourful quadrangulation with `n` faces, tallied by target.
pub fn ambjorn_budd_fibers(n: usize) -> Result<BTreeMap<LabelledMap, usize>> {
    let mut fib = BTreeMap::new();
    for q in colourful_quadrangulations(n)? {
        *fib.entry(ambjorn_budd(&q)?).or_insert(0) += 1;
    }
    Ok(fib)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn labelled_map_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| labelled_maps(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 5, 33]);
    }

    #[test]
    fn dual_labelling_is_a_bijection_onto_labelled_maps() {
        for n in 1..=3 {
            let mut images = BTreeSet::new();
            let mut total = 0;
            for m in enumerate_maps(n, false).unwrap() {
                for eo in euler_orientations(&m) {
                    images.insert(dual_labelling(&eo).unwrap());
                    total += 1;
                }
            }
            let targets: BTreeSet<_> = labelled_maps(n).unwrap().into_iter().collect();
            assert_eq!(images.len(), total, "injective at {n}");
            assert_eq!(images, targets, "onto at {n}");
        }
    }

    #[test]
    fn quartic_duals_are_quadrangulations() {
        for m in enumerate_maps(4, true).unwrap() {
            for eo in euler_orientations(&m) {
                let q = dual_labelling(&eo).unwrap();
                assert!(q.is_quadrangulation());
                assert_eq!(q.is_colourful(), eo.alternating_vertices() == 0);
            }
        }
    }

    #[test]
    fn colourful_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| colourful_quadrangulations(n).unwrap().len()).collect();
        assert_eq!(counts, [2, 10, 66]);
    }

    #[test]
    fn two_to_one() {
        for n in 1..=3 {
            let fib = ambjorn_budd_fibers(n).unwrap();
            let targets: BTreeSet<_> = labelled_maps(n).unwrap().into_iter().collect();
            assert_eq!(fib.keys().cloned().collect::<BTreeSet<_>>(), targets, "onto at {n}");
            assert!(fib.values().all(|&c| c == 2), "fibers at {n}: {:?}", fib.values().collect::<Vec<_>>());
        }
    }

    #[test]
    fn non_colourful_rejected() {
        let m = enumerate_maps(2, true).unwrap();
        let bad = m
            .iter()
            .flat_map(euler_orientations)
            .find(|eo| eo.alternating_vertices() > 0)
            .unwrap();
        let q = dual_labelling(&bad).unwrap();
        assert!(matches!(ambjorn_budd(&q), Err(Error::NotColourful(_))));
    }
}
