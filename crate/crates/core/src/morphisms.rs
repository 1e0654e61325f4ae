//! Homomorphisms, monomorphisms and isomorphisms between (sub)graphs:
//! validation, enumeration, extension, automorphism groups and cores.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::search::{MapSearch, UNMAPPED};

/// The three map classes, ordered from strongest to weakest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MorphKind {
    /// Injective, and both edges and non-edges are preserved.
    Iso,
    /// Injective homomorphism.
    Mono,
    /// Edge-preserving map.
    Homo,
}

impl MorphKind {
    pub const ALL: [MorphKind; 3] = [MorphKind::Iso, MorphKind::Mono, MorphKind::Homo];

    /// `I`, `M` or `H`.
    pub fn letter(self) -> char {
        match self {
            MorphKind::Iso => 'I',
            MorphKind::Mono => 'M',
            MorphKind::Homo => 'H',
        }
    }

    /// Whether every map of kind `self` is also of kind `other`.
    pub fn is_at_least(self, other: MorphKind) -> bool {
        self <= other
    }

    fn name(self) -> &'static str {
        match self {
            MorphKind::Iso => "isomorphism",
            MorphKind::Mono => "monomorphism",
            MorphKind::Homo => "homomorphism",
        }
    }
}

/// A vertex map defined on a subset of the source graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialMap {
    image: Vec<usize>,
}

impl PartialMap {
    /// The nowhere-defined map out of a graph on `n` vertices.
    pub fn empty(n: usize) -> PartialMap {
        PartialMap { image: vec![UNMAPPED; n] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<PartialMap> {
        let mut m = PartialMap::empty(n);
        for &(v, t) in pairs {
            m.set(v, t)?;
        }
        Ok(m)
    }

    /// A total map, `image[v]` being the image of `v`.
    pub fn total(image: Vec<usize>) -> PartialMap {
        debug_assert!(image.iter().all(|&t| t != UNMAPPED));
        PartialMap { image }
    }

    /// The identity restricted to `s`.
    pub fn identity_on(n: usize, s: VertexSet) -> PartialMap {
        let mut m = PartialMap::empty(n);
        for v in s {
            m.image[v] = v;
        }
        m
    }

    pub(crate) fn from_slots(image: Vec<usize>) -> PartialMap {
        PartialMap { image }
    }

    pub fn set(&mut self, v: usize, t: usize) -> Result<()> {
        let n = self.image.len();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        self.image[v] = t;
        Ok(())
    }

    /// Number of vertices of the source graph.
    pub fn source_len(&self) -> usize {
        self.image.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.image.get(v).copied().filter(|&t| t != UNMAPPED)
    }

    pub fn domain(&self) -> VertexSet {
        (0..self.image.len()).filter(|&v| self.image[v] != UNMAPPED).collect()
    }

    pub fn image_set(&self) -> VertexSet {
        self.pairs().map(|(_, t)| t).collect()
    }

    /// `(v, image of v)` over the domain, in ascending `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.image.iter().enumerate().filter(|&(_, &t)| t != UNMAPPED).map(|(v, &t)| (v, t))
    }

    pub(crate) fn slots(&self) -> &[usize] {
        &self.image
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

impl Serialize for PartialMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.pairs().map(|(v, t)| [v, t]))
    }
}

/// The strongest kind `m` belongs to as a map from `⟨dom m⟩ ⊆ g1` into `g2`,
/// or `None` if some edge is sent to a non-edge or collapsed.
pub fn check_kind(m: &PartialMap, g1: &Graph, g2: &Graph) -> Result<Option<MorphKind>> {
    if m.source_len() != g1.n() {
        return Err(Error::Precondition(format!(
            "map is defined over {} vertices but the source graph has {}",
            m.source_len(),
            g1.n()
        )));
    }
    if let Some((_, t)) = m.pairs().find(|&(_, t)| t >= g2.n()) {
        return Err(Error::VertexOutOfRange { vertex: t, n: g2.n() });
    }
    Ok(kind_unchecked(m.slots(), m.domain(), g1, g2))
}

pub(crate) fn kind_unchecked(image: &[usize], dom: VertexSet, g1: &Graph, g2: &Graph) -> Option<MorphKind> {
    let mut injective = true;
    let mut reflects = true;
    for u in dom {
        for v in dom.difference(VertexSet::full(u + 1)) {
            let (a, b) = (image[u], image[v]);
            if g1.has_edge(u, v) {
                if !g2.has_edge(a, b) {
                    return None;
                }
            } else if a == b {
                injective = false;
            } else if g2.has_edge(a, b) {
                reflects = false;
            }
        }
    }
    Some(match (injective, reflects) {
        (true, true) => MorphKind::Iso,
        (true, false) => MorphKind::Mono,
        _ => MorphKind::Homo,
    })
}

/// Lazily enumerated maps of one kind from an induced subgraph into a graph.
pub struct Morphisms<'a> {
    search: MapSearch<'a>,
}

impl Iterator for Morphisms<'_> {
    type Item = PartialMap;

    fn next(&mut self) -> Option<PartialMap> {
        self.search.advance().then(|| PartialMap::from_slots(self.search.current().to_vec()))
    }
}

/// All maps of kind `kind` from `⟨a⟩ ⊆ g1` into `g2`.
pub fn enumerate_morphisms<'a>(a: VertexSet, g1: &'a Graph, g2: &'a Graph, kind: MorphKind) -> Result<Morphisms<'a>> {
    if a.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    g1.check_set(a)?;
    let fixed = vec![UNMAPPED; g1.n()];
    Ok(Morphisms { search: MapSearch::new(g1, g2, kind, &fixed, a, g2.vertices()) })
}

/// Extends `m` to a total map `g1 → g2` of kind `kind`. For [`MorphKind::Iso`]
/// the result is an isomorphism onto `g2`, so the graphs must have equal order.
pub fn extend_map(m: &PartialMap, g1: &Graph, g2: &Graph, kind: MorphKind) -> Result<Option<Vec<usize>>> {
    match check_kind(m, g1, g2)? {
        Some(k) if k.is_at_least(kind) => {}
        _ => return Err(Error::InvalidMap(kind.name())),
    }
    if kind == MorphKind::Iso && (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) {
        return Ok(None);
    }
    Ok(extend_unchecked(m.slots(), g1, g2, kind))
}

pub(crate) fn extend_unchecked(fixed: &[usize], g1: &Graph, g2: &Graph, kind: MorphKind) -> Option<Vec<usize>> {
    let free = (0..g1.n()).filter(|&v| fixed[v] == UNMAPPED).collect();
    MapSearch::new(g1, g2, kind, fixed, free, g2.vertices()).first()
}

/// Extends a homomorphism between subgraphs of `g` to an endomorphism of `g`.
pub fn extend_to_endomorphism(m: &PartialMap, g: &Graph) -> Result<Option<Vec<usize>>> {
    extend_map(m, g, g, MorphKind::Homo)
}

/// Extends an isomorphism between induced subgraphs of `g` to an automorphism.
pub fn extend_to_automorphism(m: &PartialMap, g: &Graph) -> Result<Option<Vec<usize>>> {
    extend_map(m, g, g, MorphKind::Iso)
}

/// Extends a homomorphism from a subgraph of `g1` to a homomorphism `g1 → g2`.
pub fn extend_to_hom_between(m: &PartialMap, g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    extend_map(m, g1, g2, MorphKind::Homo)
}

/// The automorphism group of `g`, as permutations in lexicographic order.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let fixed = vec![UNMAPPED; g.n()];
    let mut search = MapSearch::new(g, g, MorphKind::Iso, &fixed, g.vertices(), g.vertices());
    let mut out = Vec::new();
    while search.advance() {
        out.push(search.current().to_vec());
    }
    out.sort_unstable();
    out
}

/// Some homomorphism `g1 → g2`.
pub fn find_hom(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    extend_unchecked(&vec![UNMAPPED; g1.n()], g1, g2, MorphKind::Homo)
}

pub fn hom_equivalent(g1: &Graph, g2: &Graph) -> bool {
    find_hom(g1, g2).is_some() && find_hom(g2, g1).is_some()
}

/// An injective map `pattern → host` whose image induces a copy of `pattern`.
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    extend_unchecked(&vec![UNMAPPED; pattern.n()], pattern, host, MorphKind::Iso)
}

/// Whether `pattern` is isomorphic to an induced subgraph of `host`.
pub fn embeds(pattern: &Graph, host: &Graph) -> bool {
    find_embedding(pattern, host).is_some()
}

/// A core of a graph together with a retraction onto it.
#[derive(Clone, Debug)]
pub struct Core {
    /// The core, relabelled in ascending order of `vertices`.
    pub graph: Graph,
    /// The retract inside the original graph.
    pub vertices: VertexSet,
    /// A homomorphism onto `vertices` that fixes each of them.
    pub retraction: Vec<usize>,
}

/// The smallest retract of `g`. Vertex sets are tried by ascending size and,
/// within a size, in increasing bitmask order.
pub fn core_of(g: &Graph) -> Core {
    let n = g.n();
    for k in 1..=n {
        for s in subsets_of_size(g.vertices(), k) {
            let fixed = PartialMap::identity_on(n, s);
            let free = g.vertices().difference(s);
            let search = MapSearch::new(g, g, MorphKind::Homo, fixed.slots(), free, s);
            if let Some(retraction) = search.first() {
                let graph = g.induced(s).expect("retract is nonempty");
                return Core { graph, vertices: s, retraction };
            }
        }
    }
    unreachable!("the identity retracts onto the whole vertex set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn kinds_are_detected() {
        let p = path(3);
        let fold = PartialMap::total(vec![0, 1, 0]);
        assert_eq!(check_kind(&fold, &p, &p).unwrap(), Some(MorphKind::Homo));
        let collapse = PartialMap::total(vec![0, 0, 1]);
        assert_eq!(check_kind(&collapse, &p, &p).unwrap(), None);
        let k3 = Graph::complete(3).unwrap();
        let into_triangle = PartialMap::total(vec![0, 1, 2]);
        assert_eq!(check_kind(&into_triangle, &p, &k3).unwrap(), Some(MorphKind::Mono));
        assert_eq!(check_kind(&into_triangle, &p, &p).unwrap(), Some(MorphKind::Iso));
        let bad = PartialMap::total(vec![0, 1, 5]);
        assert!(check_kind(&bad, &p, &p).is_err());
    }

    #[test]
    fn morphism_counts() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let homs = |a: &Graph, b: &Graph, k| enumerate_morphisms(a.vertices(), a, b, k).unwrap().count();
        assert_eq!(homs(&k2, &k3, MorphKind::Homo), 6);
        assert_eq!(homs(&k3, &k2, MorphKind::Homo), 0);
        assert_eq!(homs(&cycle(5), &cycle(5), MorphKind::Iso), 10);
        assert!(enumerate_morphisms(VertexSet::EMPTY, &k2, &k3, MorphKind::Homo).is_err());
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(automorphisms(&cycle(5)).len(), 10);
        assert_eq!(automorphisms(&Graph::complete(4).unwrap()).len(), 24);
        assert_eq!(automorphisms(&path(4)).len(), 2);
    }

    #[test]
    fn extension_examples() {
        let g = cycle(6);
        let id = PartialMap::identity_on(6, VertexSet::from_bits(0b111));
        let e = extend_to_endomorphism(&id, &g).unwrap().unwrap();
        assert_eq!(&e[..3], &[0, 1, 2]);
        assert!(g.edges().iter().all(|&(u, v)| g.has_edge(e[u], e[v])));

        // K_{2,3}: parts {0,1} and {2,3,4}; sending 0 into the larger part
        let k23 = Graph::edge_complete_union(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        let m = PartialMap::from_pairs(5, &[(0, 2)]).unwrap();
        assert_eq!(extend_to_automorphism(&m, &k23).unwrap(), None);

        let not_iso = PartialMap::from_pairs(6, &[(0, 0), (2, 1)]).unwrap();
        assert!(matches!(extend_to_automorphism(&not_iso, &g), Err(Error::InvalidMap(_))));
    }

    #[test]
    fn hom_equivalence_and_cores() {
        let k2 = Graph::complete(2).unwrap();
        assert!(hom_equivalent(&k2, &cycle(6)));
        assert!(hom_equivalent(&k2, &path(4)));
        assert!(!hom_equivalent(&Graph::complete(3).unwrap(), &k2));

        let c = core_of(&cycle(6));
        assert_eq!(c.graph, k2);
        assert_eq!(c.vertices, VertexSet::from_bits(0b11));
        assert!(c.retraction.iter().all(|&t| c.vertices.contains(t)));
        assert_eq!(core_of(&cycle(5)).graph.n(), 5);
        assert_eq!(core_of(&Graph::empty(4).unwrap()).graph.n(), 1);
    }

    #[test]
    fn embedding_examples() {
        assert!(embeds(&path(5), &cycle(6)));
        assert!(!embeds(&cycle(4), &cycle(6)));
        assert!(!embeds(&Graph::complete(3).unwrap(), &cycle(6)));
        assert!(embeds(&cycle(6), &cycle(6)));
    }
}
