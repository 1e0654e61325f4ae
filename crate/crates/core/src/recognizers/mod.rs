//! Structural deciders for the classified classes: C-II, C-MI, C-HI and
//! C-HH (connected and disconnected), C-HH-symmetry, and the bipartite
//! predicates B1, B2, B2* and PCM(n)-freeness they rest on.

mod pcm;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{canonical_form_bounded, is_isomorphic, subsets_of_size, Graph, VertexSet};
use crate::morphisms::embeds;

pub use pcm::{embeds_pcm, pcm_extract, PcmCertificate};

/// A member of the C-II list: `copies` disjoint copies of `family`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CiiMatch {
    pub family: Family,
    pub copies: usize,
}

/// Identifies `g` as a disjoint union of copies of one graph from the C-II
/// list, trying the list in its usual order: complete graphs, regular complete
/// multipartite graphs, cycles of length at least 5, `L(K_{s,s})`, bipartite
/// complements of perfect matchings, Petersen, Clebsch.
///
/// ```
/// use homhom::{families::Family, recognizers::classify_cii};
///
/// let c4 = Family::Cycle { n: 4 }.make().unwrap();
/// let m = classify_cii(&c4).unwrap();
/// assert_eq!(m.family, Family::RegularMultipartite { t: 2, s: 2 });
/// ```
pub fn classify_cii(g: &Graph) -> Option<CiiMatch> {
    let (h, copies) = common_component(g)?;
    let family = cii_family(&h)?;
    Some(CiiMatch { family, copies })
}

fn cii_family(h: &Graph) -> Option<Family> {
    let n = h.n();
    if h.is_complete() {
        return Some(Family::Complete { n });
    }
    let co = h.complement();
    let parts = co.connected_components();
    let s = parts[0].len();
    if parts.len() >= 2 && s >= 2 && parts.iter().all(|p| p.len() == s && co.is_clique(*p)) {
        return Some(Family::RegularMultipartite { t: parts.len(), s });
    }
    if n >= 5 && h.vertices().iter().all(|v| h.degree(v) == 2) {
        return Some(Family::Cycle { n });
    }
    let s = (1..=8).find(|s| s * s == n);
    if let Some(s) = s.filter(|&s| s >= 3) {
        if same_graph(h, &Family::LineKss { s }) {
            return Some(Family::LineKss { s });
        }
    }
    if let Some(n) = is_bcpm(h).filter(|&n| n >= 3) {
        return Some(Family::Bcpm { n });
    }
    if n == 10 && same_graph(h, &Family::Petersen) {
        return Some(Family::Petersen);
    }
    if n == 16 && same_graph(h, &Family::Clebsch) {
        return Some(Family::Clebsch);
    }
    None
}

fn same_graph(h: &Graph, f: &Family) -> bool {
    let r = f.make().expect("valid family");
    h.n() == r.n()
        && h.degree_sequence() == r.degree_sequence()
        && canonical_form_bounded(h, h.n()).ok() == canonical_form_bounded(&r, r.n()).ok()
}

/// The component type and its multiplicity, if all components are isomorphic.
fn common_component(g: &Graph) -> Option<(Graph, usize)> {
    let comps = g.component_graphs();
    let first = comps[0].clone();
    comps.iter().skip(1).all(|c| is_isomorphic(c, &first).unwrap_or(false)).then_some((first, comps.len()))
}

/// Disjoint union of copies of one complete graph.
pub fn is_chi(g: &Graph) -> bool {
    let comps = g.connected_components();
    let s = comps[0].len();
    comps.iter().all(|&c| c.len() == s && g.is_clique(c))
}

/// Disjoint union of copies of one of `K_n`, `K_{s,s}` (`s >= 2`) or `C_n` (`n >= 3`).
pub fn is_cmi(g: &Graph) -> bool {
    let Some((h, _)) = common_component(g) else {
        return false;
    };
    if h.is_complete() {
        return true;
    }
    let n = h.n();
    if h.vertices().iter().all(|v| h.degree(v) == 2) {
        return true;
    }
    match h.bipartition() {
        Some(b) => b.x.len() == b.y.len() && h.edge_count() == b.x.len() * b.y.len() && n >= 4,
        None => false,
    }
}

/// The `n >= 2` for which the connected graph `g` is `K_n`-treelike: its only
/// induced cycles are triangles and each neighbour set is a disjoint union of
/// copies of `K_{n-1}`.
pub fn is_kn_treelike(g: &Graph) -> Result<Option<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        return Ok(None);
    }
    let mut size = None;
    for v in g.vertices() {
        let Some(k) = equal_clique_size(g, g.adjacency(v)) else {
            return Ok(None);
        };
        if *size.get_or_insert(k) != k {
            return Ok(None);
        }
    }
    if g.induced_cycle_lengths(g.n()).iter().any(|&k| k != 3) {
        return Ok(None);
    }
    Ok(size.map(|k| k + 1))
}

/// The common size of the components of `⟨s⟩` if they are all cliques of
/// one size.
fn equal_clique_size(g: &Graph, s: VertexSet) -> Option<usize> {
    let h = g.induced(s).ok()?;
    let comps = h.connected_components();
    let k = comps[0].len();
    comps.iter().all(|&c| c.len() == k && h.is_clique(c)).then_some(k)
}

/// Whether each neighbour set induces a disjoint union of equal-size cliques.
pub fn neighbour_sets_are_equal_cliques(g: &Graph) -> bool {
    g.vertices().iter().all(|v| g.adjacency(v).is_empty() || equal_clique_size(g, g.adjacency(v)).is_some())
}

fn two_squares() -> Graph {
    Family::TwoSquares.make().expect("fixed graph")
}

/// All induced cycles are squares and the two-squares graph does not embed.
pub fn b1_holds(g: &Graph) -> bool {
    g.induced_cycle_lengths(g.n()).iter().all(|&k| k == 4) && !embeds(&two_squares(), g)
}

/// For a connected bipartite `g`: every subset of a part with at most `Δ(g)`
/// vertices has a common neighbour. False for other graphs.
pub fn b2_holds(g: &Graph) -> bool {
    let Some(b) = connected_bipartition(g) else {
        return false;
    };
    let delta = g.max_degree();
    // having a common neighbour is inherited by subsets, so only the largest size matters
    [b.x, b.y].iter().all(|&part| {
        let k = delta.min(part.len());
        k == 0 || subsets_of_size(part, k).all(|s| !g.common_neighbors_unchecked(s).is_empty())
    })
}

/// For a connected bipartite `g` with an edge: each part has a common neighbour.
pub fn b2_star_holds(g: &Graph) -> bool {
    match connected_bipartition(g) {
        Some(b) if !b.y.is_empty() => {
            !g.common_neighbors_unchecked(b.x).is_empty() && !g.common_neighbors_unchecked(b.y).is_empty()
        }
        _ => false,
    }
}

fn connected_bipartition(g: &Graph) -> Option<crate::graph::Bipartition> {
    if g.is_connected() {
        g.bipartition()
    } else {
        None
    }
}

/// The `n` for which the connected graph `g` is `K_{n,n}` minus a perfect matching.
pub fn is_bcpm(g: &Graph) -> Option<usize> {
    let b = connected_bipartition(g)?;
    let n = b.x.len();
    (b.y.len() == n && n >= 2 && g.vertices().iter().all(|v| g.degree(v) == n - 1)).then_some(n)
}

/// A family of connected C-HH graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChhFamily {
    /// (i) the single vertex.
    Trivial,
    /// (ii) `K_n`-treelike, `n >= 2`.
    Treelike(usize),
    /// (iii) bipartite with B1.
    B1,
    /// (iv) bipartite, each part with a common neighbour.
    B2Star,
    /// (v) bipartite complement of a perfect matching, `n >= 3`.
    Bcpm(usize),
}

impl fmt::Display for ChhFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChhFamily::Trivial => write!(f, "K1"),
            ChhFamily::Treelike(n) => write!(f, "KN_TREELIKE({n})"),
            ChhFamily::B1 => write!(f, "B1"),
            ChhFamily::B2Star => write!(f, "B2_STAR"),
            ChhFamily::Bcpm(n) => write!(f, "BCPM({n})"),
        }
    }
}

impl Serialize for ChhFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The families a connected C-HH graph belongs to; `primary` is the first in
/// the order (i)–(v).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChhMatch {
    pub primary: ChhFamily,
    pub all: Vec<ChhFamily>,
}

/// Decides C-HH for a connected graph.
pub fn is_chh_connected(g: &Graph) -> Result<Option<ChhMatch>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut all = Vec::new();
    if g.n() == 1 {
        all.push(ChhFamily::Trivial);
    }
    if let Some(n) = is_kn_treelike(g)? {
        all.push(ChhFamily::Treelike(n));
    }
    if g.is_bipartite() {
        if b1_holds(g) {
            all.push(ChhFamily::B1);
        }
        if b2_star_holds(g) {
            all.push(ChhFamily::B2Star);
        }
        if let Some(n) = is_bcpm(g).filter(|&n| n >= 3) {
            all.push(ChhFamily::Bcpm(n));
        }
    }
    Ok(all.first().copied().map(|primary| ChhMatch { primary, all }))
}

/// Decides C-HH-symmetry of two connected C-HH graphs.
pub fn chh_symmetric(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if is_chh_connected(g)?.is_none() {
            return Err(Error::Precondition("both graphs must be connected C-HH graphs".into()));
        }
    }
    if g1.n() == 1 || g2.n() == 1 {
        return Ok(g1.n() == g2.n());
    }
    if !g1.is_bipartite() || !g2.is_bipartite() {
        let n1 = is_kn_treelike(g1)?;
        return Ok(n1.is_some_and(|n| n >= 3) && n1 == is_kn_treelike(g2)?);
    }
    if b1_holds(g1) && b1_holds(g2) {
        return Ok(true);
    }
    if !b2_holds(g1) || !b2_holds(g2) {
        return Ok(false);
    }
    let (p1, p2) = (is_bcpm(g1), is_bcpm(g2));
    if p1.is_some() && p2.is_some() {
        return Ok(p1 == p2);
    }
    let (small, large) = if g1.max_degree() <= g2.max_degree() { (g1, g2) } else { (g2, g1) };
    if small.max_degree() == large.max_degree() || b2_star_holds(small) {
        return Ok(true);
    }
    match is_bcpm(small) {
        Some(n) if b2_star_holds(large) => Ok(pcm_free(large, n)),
        _ => Ok(false),
    }
}

/// PCM(n)-freeness, using that a graph of maximum degree below `n` cannot
/// embed a PCM(n) graph.
fn pcm_free(g: &Graph, n: usize) -> bool {
    g.max_degree() < n || embeds_pcm(g, n).expect("n >= 3").is_none()
}

/// The cases of the C-HH classification of arbitrary finite graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChhCase {
    /// (a) an independent set.
    IndependentSet,
    /// (b) all components `K_n`-treelike for one `n >= 3`.
    Treelike(usize),
    /// (c) all components bipartite with B1.
    B1,
    /// (d) all components bipartite with each part having a common neighbour.
    B2Star,
    /// (e) copies of the bipartite complement of a perfect matching on `2n`
    /// vertices, the other components B2* and PCM(n)-free.
    Mixed(usize),
}

impl ChhCase {
    pub fn letter(&self) -> char {
        match self {
            ChhCase::IndependentSet => 'a',
            ChhCase::Treelike(_) => 'b',
            ChhCase::B1 => 'c',
            ChhCase::B2Star => 'd',
            ChhCase::Mixed(_) => 'e',
        }
    }
}

impl fmt::Display for ChhCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChhCase::Treelike(n) | ChhCase::Mixed(n) => write!(f, "({}) n={n}", self.letter()),
            _ => write!(f, "({})", self.letter()),
        }
    }
}

impl Serialize for ChhCase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Decides C-HH for an arbitrary graph, naming the case that applies.
///
/// ```
/// use homhom::{families::Family, recognizers::{is_chh, ChhCase}, Graph};
///
/// let g = Graph::disjoint_union(&[
///     Family::Bcpm { n: 4 }.make().unwrap(),
///     Family::PcmExample { n: 4 }.make().unwrap(),
/// ]).unwrap();
/// assert_eq!(is_chh(&g), Some(ChhCase::Mixed(4)));
/// ```
pub fn is_chh(g: &Graph) -> Option<ChhCase> {
    let comps = g.component_graphs();
    if comps.len() == 1 {
        let m = is_chh_connected(g).expect("connected")?;
        return Some(match m.primary {
            ChhFamily::Trivial => ChhCase::IndependentSet,
            ChhFamily::Treelike(n) if n >= 3 => ChhCase::Treelike(n),
            ChhFamily::Treelike(_) | ChhFamily::B1 => ChhCase::B1,
            ChhFamily::B2Star => ChhCase::B2Star,
            ChhFamily::Bcpm(n) => ChhCase::Mixed(n),
        });
    }
    if comps.iter().any(|c| c.n() == 1) {
        return comps.iter().all(|c| c.n() == 1).then_some(ChhCase::IndependentSet);
    }
    if comps.iter().any(|c| !c.is_bipartite()) {
        let n = is_kn_treelike(&comps[0]).expect("connected")?;
        let same = comps.iter().all(|c| is_kn_treelike(c).expect("connected") == Some(n));
        return (n >= 3 && same).then_some(ChhCase::Treelike(n));
    }
    let bcpm: Vec<Option<usize>> = comps.iter().map(|c| is_bcpm(c).filter(|&n| n >= 3)).collect();
    if let Some(n) = bcpm.iter().flatten().next().copied() {
        let ok = comps.iter().zip(&bcpm).all(|(c, b)| match b {
            Some(m) => *m == n,
            None => b2_star_holds(c) && pcm_free(c, n),
        });
        return ok.then_some(ChhCase::Mixed(n));
    }
    if comps.iter().all(b1_holds) {
        return Some(ChhCase::B1);
    }
    comps.iter().all(b2_star_holds).then_some(ChhCase::B2Star)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family) -> Graph {
        f.make().unwrap()
    }

    fn union(gs: &[Graph]) -> Graph {
        Graph::disjoint_union(gs).unwrap()
    }

    #[test]
    fn cii_list() {
        assert_eq!(classify_cii(&fam(Family::Petersen)).unwrap().family, Family::Petersen);
        assert_eq!(classify_cii(&fam(Family::Clebsch)).unwrap().family, Family::Clebsch);
        let k3k4 = union(&[fam(Family::Complete { n: 3 }), fam(Family::Complete { n: 4 })]);
        assert!(classify_cii(&k3k4).is_none());
        let m = classify_cii(&union(&[fam(Family::Cycle { n: 5 }), fam(Family::Cycle { n: 5 })])).unwrap();
        assert_eq!(m, CiiMatch { family: Family::Cycle { n: 5 }, copies: 2 });
        assert_eq!(classify_cii(&fam(Family::LineKss { s: 3 })).unwrap().family, Family::LineKss { s: 3 });
        assert_eq!(classify_cii(&fam(Family::Bcpm { n: 4 })).unwrap().family, Family::Bcpm { n: 4 });
        assert!(classify_cii(&fam(Family::CompleteBipartite { m: 2, n: 3 })).is_none());
        assert!(classify_cii(&fam(Family::Path { len: 2 })).is_none());
    }

    #[test]
    fn chi_and_cmi() {
        let three_k4 = union(&vec![fam(Family::Complete { n: 4 }); 3]);
        assert!(is_chi(&three_k4));
        assert!(is_chi(&Graph::empty(1).unwrap()));
        assert!(!is_chi(&fam(Family::Path { len: 2 })));
        assert!(is_cmi(&fam(Family::CompleteBipartite { m: 3, n: 3 })));
        assert!(!is_cmi(&fam(Family::CompleteBipartite { m: 2, n: 3 })));
        assert!(is_cmi(&fam(Family::Cycle { n: 7 })));
        assert!(!is_cmi(&fam(Family::Path { len: 2 })));
    }

    #[test]
    fn treelike_recognition() {
        assert_eq!(is_kn_treelike(&fam(Family::Complete { n: 6 })).unwrap(), Some(6));
        assert_eq!(is_kn_treelike(&fam(Family::Path { len: 4 })).unwrap(), Some(2));
        assert_eq!(is_kn_treelike(&fam(Family::Cycle { n: 4 })).unwrap(), None);
        assert_eq!(is_kn_treelike(&fam(Family::KnTreelike { n: 3, count: 2 })).unwrap(), Some(3));
        assert!(is_kn_treelike(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn bipartite_predicates() {
        let b4 = fam(Family::Bcpm { n: 4 });
        assert!(b2_holds(&b4) && !b2_star_holds(&b4));
        assert_eq!(is_bcpm(&b4), Some(4));
        assert!(b2_star_holds(&fam(Family::CompleteBipartite { m: 1, n: 5 })));
        assert!(b2_star_holds(&fam(Family::PcmExample { n: 4 })));
        assert!(b1_holds(&fam(Family::CompleteBipartite { m: 3, n: 4 })));
        assert!(b1_holds(&fam(Family::Path { len: 5 })));
        assert!(!b1_holds(&fam(Family::Cycle { n: 6 })));
        assert!(!b1_holds(&fam(Family::TwoSquares)));
    }

    #[test]
    fn chh_connected_families() {
        let bowtie = fam(Family::KnTreelike { n: 3, count: 2 });
        assert_eq!(is_chh_connected(&bowtie).unwrap().unwrap().primary, ChhFamily::Treelike(3));
        let f8 = is_chh_connected(&fam(Family::PcmExample { n: 4 })).unwrap().unwrap();
        assert_eq!(f8.primary, ChhFamily::B2Star);
        assert!(is_chh_connected(&fam(Family::Cycle { n: 5 })).unwrap().is_none());
        let tree = is_chh_connected(&fam(Family::Path { len: 3 })).unwrap().unwrap();
        assert_eq!(tree.all, vec![ChhFamily::Treelike(2), ChhFamily::B1, ChhFamily::B2Star]);
        let long = is_chh_connected(&fam(Family::Path { len: 4 })).unwrap().unwrap();
        assert_eq!(long.all, vec![ChhFamily::Treelike(2), ChhFamily::B1]);
    }

    #[test]
    fn chh_symmetry_examples() {
        let k2 = fam(Family::Complete { n: 2 });
        let c6 = fam(Family::Cycle { n: 6 });
        let p4 = fam(Family::Path { len: 4 });
        assert!(chh_symmetric(&k2, &c6).unwrap());
        assert!(chh_symmetric(&k2, &p4).unwrap());
        assert!(!chh_symmetric(&c6, &p4).unwrap());
        assert!(!chh_symmetric(&fam(Family::Bcpm { n: 4 }), &fam(Family::Bcpm { n: 5 })).unwrap());
        assert!(chh_symmetric(&fam(Family::PcmExample { n: 4 }), &fam(Family::Bcpm { n: 4 })).unwrap());
        assert!(chh_symmetric(&fam(Family::Cycle { n: 5 }), &k2).is_err());
    }

    #[test]
    fn chh_cases() {
        assert_eq!(is_chh(&Graph::empty(7).unwrap()), Some(ChhCase::IndependentSet));
        let c6_p4 = union(&[fam(Family::Cycle { n: 6 }), fam(Family::Path { len: 4 })]);
        assert_eq!(is_chh(&c6_p4), None);
        let k1_k2 = union(&[Graph::empty(1).unwrap(), fam(Family::Complete { n: 2 })]);
        assert_eq!(is_chh(&k1_k2), None);
        let bowties = union(&[fam(Family::KnTreelike { n: 3, count: 2 }), fam(Family::Complete { n: 3 })]);
        assert_eq!(is_chh(&bowties), Some(ChhCase::Treelike(3)));
        let forest = union(&[fam(Family::Path { len: 4 }), fam(Family::Path { len: 1 })]);
        assert_eq!(is_chh(&forest), Some(ChhCase::B1));
    }
}
