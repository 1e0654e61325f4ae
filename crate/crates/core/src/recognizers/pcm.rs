//! Perfect complement matchings.
//!
//! A PCM(n) graph is a connected bipartite graph with parts `Z`, `W`,
//! `2 <= |Z| <= |W| = n`, in which every `z` can be assigned its own
//! non-neighbour `w` in `W`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, Graph, VertexSet};

/// An induced PCM(n) subgraph together with its complement matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PcmCertificate {
    pub z_set: VertexSet,
    pub w_set: VertexSet,
    /// Pairs `(z, w)` with `z ≁ w`, one for each member of `z_set`.
    pub matching: Vec<(usize, usize)>,
}

impl PcmCertificate {
    pub fn vertices(&self) -> VertexSet {
        self.z_set.union(self.w_set)
    }

    /// Checks every defining condition against `g`.
    pub fn validate(&self, g: &Graph, n: usize) -> bool {
        let (z, w) = (self.z_set, self.w_set);
        let independent = |s: VertexSet| s.iter().all(|v| g.adjacency(v).is_disjoint(s));
        let mut used_z = VertexSet::EMPTY;
        let mut used_w = VertexSet::EMPTY;
        for &(a, b) in &self.matching {
            if !z.contains(a) || !w.contains(b) || used_z.contains(a) || used_w.contains(b) || g.has_edge(a, b) {
                return false;
            }
            used_z.insert(a);
            used_w.insert(b);
        }
        z.is_disjoint(w)
            && w.len() == n
            && (2..=n).contains(&z.len())
            && used_z == z
            && independent(z)
            && independent(w)
            && g.is_connected_set(self.vertices())
    }
}

/// A PCM(n) graph induced in `g`, searching vertex sets by descending size and
/// then ascending bitmask.
pub fn embeds_pcm(g: &Graph, n: usize) -> Result<Option<PcmCertificate>> {
    if n < 3 {
        return Err(Error::Precondition(format!("PCM(n) needs n >= 3, got {n}")));
    }
    for size in (n + 2..=(2 * n).min(g.n())).rev() {
        for s in subsets_of_size(g.vertices(), size) {
            if let Some(cert) = pcm_on(g, s, n) {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

fn pcm_on(g: &Graph, s: VertexSet, n: usize) -> Option<PcmCertificate> {
    if !g.is_connected_set(s) {
        return None;
    }
    let (h, labels) = g.induced_subgraph(s).ok()?;
    let b = h.bipartition()?;
    let lift = |p: VertexSet| -> VertexSet { p.iter().map(|v| labels[v]).collect() };
    let (x, y) = (lift(b.x), lift(b.y));
    for (z, w) in [(x, y), (y, x)] {
        if w.len() == n && (2..=n).contains(&z.len()) {
            if let Some(matching) = complement_matching(g, z, w) {
                return Some(PcmCertificate { z_set: z, w_set: w, matching });
            }
        }
    }
    None
}

/// A matching of every vertex of `z` to a distinct non-neighbour in `w`, by
/// augmenting paths.
fn complement_matching(g: &Graph, z: VertexSet, w: VertexSet) -> Option<Vec<(usize, usize)>> {
    let mut owner = [usize::MAX; 64];
    fn augment(g: &Graph, v: usize, w: VertexSet, seen: &mut VertexSet, owner: &mut [usize; 64]) -> bool {
        for t in w.difference(g.adjacency(v)) {
            if seen.contains(t) {
                continue;
            }
            seen.insert(t);
            if owner[t] == usize::MAX || augment(g, owner[t], w, seen, owner) {
                owner[t] = v;
                return true;
            }
        }
        false
    }
    for v in z {
        let mut seen = VertexSet::EMPTY;
        if !augment(g, v, w, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut pairs: Vec<(usize, usize)> = w.iter().filter(|&t| owner[t] != usize::MAX).map(|t| (owner[t], t)).collect();
    pairs.sort_unstable();
    Some(pairs)
}

/// Extracts a PCM(n) subgraph from a connected bipartite graph `a` with parts
/// `z` and `w`, where `|w| >= n` and each vertex of `z` has a non-neighbour
/// in `w`.
///
/// If `a` is itself PCM(n) it is returned. Otherwise the subgraph is grown
/// from a vertex `z_1` of maximum degree: first a 3-path `z_1 w_0 z_2 w_1`
/// maximising `|N(z_2) \ N(z_1)|` and a `w_2 ∈ N(z_1) \ N(z_2)`, then repeatedly
/// a 2-path `w' z v` from `N*(Z_i)` to a new `v` maximising `|N(z) \ N*(Z_i)|`,
/// until `N*(Z_i)` has at least `n` vertices; the `W` side is then padded
/// from `N*(Z_i)`. Ties go to the smallest vertex ids.
pub fn pcm_extract(a: &Graph, z: VertexSet, w: VertexSet, n: usize) -> Result<PcmCertificate> {
    let pre = |msg: String| Err(Error::Precondition(msg));
    if n < 3 {
        return pre(format!("PCM(n) needs n >= 3, got {n}"));
    }
    if !a.is_connected() {
        return Err(Error::Disconnected);
    }
    a.check_set(z)?;
    a.check_set(w)?;
    let independent = |s: VertexSet| s.iter().all(|v| a.adjacency(v).is_disjoint(s));
    if !z.is_disjoint(w) || z.union(w) != a.vertices() || !independent(z) || !independent(w) {
        return pre("the given parts are not a bipartition".into());
    }
    if w.len() < n {
        return pre(format!("|W| = {} is smaller than n = {n}", w.len()));
    }
    if let Some(v) = z.iter().find(|&v| w.is_subset(a.adjacency(v))) {
        return pre(format!("vertex {v} of Z is adjacent to every vertex of W"));
    }
    if w.len() == n && z.len() <= n {
        if let Some(matching) = complement_matching(a, z, w) {
            return Ok(PcmCertificate { z_set: z, w_set: w, matching });
        }
    }

    let nbr = |v: usize| a.adjacency(v);
    let mut z1 = usize::MAX;
    for v in z {
        if z1 == usize::MAX || nbr(v).len() > nbr(z1).len() {
            z1 = v;
        }
    }
    // initial step: the 3-path z1 w0 z2 w1
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for w0 in nbr(z1) {
        for z2 in nbr(w0).without(z1) {
            let gain = nbr(z2).difference(nbr(z1));
            if let Some(w1) = gain.first() {
                if best.is_none_or(|b| gain.len() > b.0) {
                    best = Some((gain.len(), w0, z2, w1));
                }
            }
        }
    }
    let Some((_, w0, z2, w1)) = best else {
        return pre(format!("no 3-path starts at vertex {z1}"));
    };
    let Some(w2) = nbr(z1).difference(nbr(z2)).first() else {
        return pre(format!("every neighbour of {z1} is adjacent to {z2}"));
    };
    let mut zs = vec![z1, z2];
    let mut ws = vec![w1, w2];
    let mut z_set = VertexSet::from_iter([z1, z2]);
    let mut w_set = VertexSet::from_iter([w0, w1, w2]);

    loop {
        let reach = a.neighborhood_union(z_set);
        if reach.len() >= n {
            let pad = reach.difference(w_set).iter().take(n - w_set.len());
            w_set = w_set.union(pad.collect());
            let matching = zs.iter().copied().zip(ws.iter().copied()).collect();
            return Ok(PcmCertificate { z_set, w_set, matching });
        }
        // iterative step: a 2-path w' z v leaving N*(Z_i)
        let mut pick: Option<(usize, usize, usize)> = None;
        for zc in z.difference(z_set) {
            if nbr(zc).is_disjoint(reach) {
                continue;
            }
            let gain = nbr(zc).difference(reach);
            if let Some(v) = gain.first() {
                if pick.is_none_or(|p| gain.len() > p.0) {
                    pick = Some((gain.len(), zc, v));
                }
            }
        }
        let Some((_, zn, v)) = pick else {
            return pre(format!("no vertex of Z extends N*(Z_i) = {reach:?}"));
        };
        let unmatched = reach.difference(ws.iter().copied().collect()).difference(nbr(zn));
        match unmatched.first() {
            Some(t) => ws.push(t),
            None => {
                let Some(l) = ws.iter().position(|&t| reach.contains(t) && !a.has_edge(zn, t)) else {
                    return pre(format!("vertex {zn} has no non-neighbour in N*(Z_i)"));
                };
                ws.push(ws[l]);
                ws[l] = v;
            }
        }
        zs.push(zn);
        z_set.insert(zn);
        w_set = reach.with(v);
    }
}
