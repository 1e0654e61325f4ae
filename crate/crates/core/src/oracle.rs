//! Brute-force decision of the C-XY and XY classes straight from the
//! definitions, with failure witnesses.
//!
//! For every (connected) induced subgraph `⟨A⟩` and every X-map out of it,
//! the search looks for a Y-extension. Source sets are taken up to the action
//! of the automorphism group of the source graph, in ascending order of size
//! and then bitmask, so the first witness found is reproducible.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::morphisms::{check_kind, kind_unchecked, MorphKind, PartialMap};
use crate::search::{MapSearch, UNMAPPED};

/// A class C-XY (`connected`) or XY.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassQuery {
    pub x: MorphKind,
    pub y: MorphKind,
    pub connected: bool,
}

impl ClassQuery {
    pub const fn connected(x: MorphKind, y: MorphKind) -> ClassQuery {
        ClassQuery { x, y, connected: true }
    }

    pub const fn plain(x: MorphKind, y: MorphKind) -> ClassQuery {
        ClassQuery { x, y, connected: false }
    }

    pub const CII: ClassQuery = ClassQuery::connected(MorphKind::Iso, MorphKind::Iso);
    pub const CMI: ClassQuery = ClassQuery::connected(MorphKind::Mono, MorphKind::Iso);
    pub const CHI: ClassQuery = ClassQuery::connected(MorphKind::Homo, MorphKind::Iso);
    pub const CIH: ClassQuery = ClassQuery::connected(MorphKind::Iso, MorphKind::Homo);
    pub const CMH: ClassQuery = ClassQuery::connected(MorphKind::Mono, MorphKind::Homo);
    pub const CHH: ClassQuery = ClassQuery::connected(MorphKind::Homo, MorphKind::Homo);

    /// The six connected classes, in report order.
    pub const CONNECTED_CLASSES: [ClassQuery; 6] = [Self::CII, Self::CMI, Self::CHI, Self::CIH, Self::CMH, Self::CHH];

    /// `C-XY` or `XY`.
    pub fn name(&self) -> String {
        let prefix = if self.connected { "C-" } else { "" };
        format!("{prefix}{}{}", self.x.letter(), self.y.letter())
    }
}

impl fmt::Display for ClassQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ClassQuery {
    type Err = Error;

    /// Accepts `C-XY`, `CXY` or `XY` in any case, with X, Y among I, M, H.
    fn from_str(s: &str) -> Result<ClassQuery> {
        let t = s.trim().to_ascii_uppercase().replace(['-', '_'], "");
        let (connected, letters) = match t.len() {
            3 if t.starts_with('C') => (true, &t[1..]),
            2 => (false, &t[..]),
            _ => return Err(Error::Parse(format!("unknown class `{s}`"))),
        };
        let kind = |c: char| match c {
            'I' => Ok(MorphKind::Iso),
            'M' => Ok(MorphKind::Mono),
            'H' => Ok(MorphKind::Homo),
            _ => Err(Error::Parse(format!("unknown class `{s}`"))),
        };
        let mut cs = letters.chars();
        let x = kind(cs.next().expect("two letters"))?;
        let y = kind(cs.next().expect("two letters"))?;
        Ok(ClassQuery { x, y, connected })
    }
}

impl Serialize for ClassQuery {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// An X-map out of `⟨source_set⟩` that has no Y-extension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub source_set: VertexSet,
    pub map: PartialMap,
    /// A vertex adjacent to the source set whose mapped neighbours have no
    /// common neighbour in the target, when there is one.
    pub fail_vertex: Option<usize>,
}

impl Witness {
    /// Re-checks the witness from scratch: the map is an X-map on the source
    /// set (connected if the class requires it) and no Y-map `g1 → g2` extends it.
    pub fn revalidate(&self, g1: &Graph, g2: &Graph, q: ClassQuery) -> Result<bool> {
        if self.map.domain() != self.source_set || self.source_set.is_empty() {
            return Ok(false);
        }
        if q.connected && !g1.is_connected_set(self.source_set) {
            return Ok(false);
        }
        let Some(kind) = check_kind(&self.map, g1, g2)? else {
            return Ok(false);
        };
        if !kind.is_at_least(q.x) {
            return Ok(false);
        }
        if !kind.is_at_least(q.y) {
            return Ok(true);
        }
        Ok(extend(self.map.slots(), self.source_set, g1, g2, q.y).is_none())
    }
}

/// Outcome of a class or morphic check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Random selection of source-set orbits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sampling {
    /// Probability of keeping each orbit representative.
    pub fraction: f64,
    pub seed: u64,
}

/// Limits and restrictions applied by the oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    /// Largest graph accepted when X is a homomorphism or monomorphism.
    pub hom_budget: usize,
    /// Largest graph accepted when X is an isomorphism.
    pub iso_budget: usize,
    /// Only source sets with at most this many vertices are examined.
    pub max_source_size: Option<usize>,
    pub sampling: Option<Sampling>,
}

pub const DEFAULT_HOM_BUDGET: usize = 10;
pub const DEFAULT_ISO_BUDGET: usize = 16;

/// Automorphism groups larger than this are not used for orbit reduction.
const AUT_LIMIT: usize = 50_000;

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            hom_budget: DEFAULT_HOM_BUDGET,
            iso_budget: DEFAULT_ISO_BUDGET,
            max_source_size: None,
            sampling: None,
        }
    }
}

impl OracleConfig {
    /// Applies a budget override: either `N` (both budgets) or a
    /// comma-separated list of `hom:N` / `iso:N`.
    pub fn with_budget_override(mut self, spec: &str) -> Result<OracleConfig> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad budget `{spec}`")));
        if let Ok(n) = num(spec) {
            self.hom_budget = n;
            self.iso_budget = n;
            return Ok(self);
        }
        for part in spec.split(',') {
            match part.split_once(':') {
                Some((k, v)) if k.trim().eq_ignore_ascii_case("hom") => self.hom_budget = num(v)?,
                Some((k, v)) if k.trim().eq_ignore_ascii_case("iso") => self.iso_budget = num(v)?,
                _ => return Err(Error::Parse(format!("bad budget `{spec}`"))),
            }
        }
        Ok(self)
    }

    fn check(&self, g: &Graph, x: MorphKind) -> Result<()> {
        let bound = if x == MorphKind::Iso { self.iso_budget } else { self.hom_budget };
        if g.n() > bound {
            return Err(Error::Budget { what: "oracle", n: g.n(), bound });
        }
        Ok(())
    }
}

/// Whether `g` is in the class `q`; on failure the first witness found.
pub fn is_c_xy(g: &Graph, q: ClassQuery, cfg: &OracleConfig) -> Result<Verdict> {
    morphic_unchecked(g, g, q, cfg)
}

/// `is_c_xy` for the unrestricted class XY.
pub fn is_xy(g: &Graph, x: MorphKind, y: MorphKind, cfg: &OracleConfig) -> Result<Verdict> {
    is_c_xy(g, ClassQuery::plain(x, y), cfg)
}

/// Whether every X-map from a (connected) induced subgraph of `g1` into `g2`
/// extends to a Y-map `g1 → g2`. An X-map is judged against the subgraph of
/// `g2` induced on its image.
pub fn c_xy_morphic(g1: &Graph, g2: &Graph, q: ClassQuery, cfg: &OracleConfig) -> Result<Verdict> {
    morphic_unchecked(g1, g2, q, cfg)
}

/// Both directions of [`c_xy_morphic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub forward: Verdict,
    pub backward: Verdict,
}

impl Symmetry {
    pub fn holds(&self) -> bool {
        self.forward.holds() && self.backward.holds()
    }
}

/// Evaluates both directions, even when the first already fails.
pub fn c_xy_symmetric(g1: &Graph, g2: &Graph, q: ClassQuery, cfg: &OracleConfig) -> Result<Symmetry> {
    Ok(Symmetry { forward: c_xy_morphic(g1, g2, q, cfg)?, backward: c_xy_morphic(g2, g1, q, cfg)? })
}

/// Decides `q` through the components: each must be in the class and every
/// pair of distinct components must be symmetric.
pub fn is_c_xy_via_components(g: &Graph, q: ClassQuery, cfg: &OracleConfig) -> Result<bool> {
    let comps = g.component_graphs();
    for c in &comps {
        if !is_c_xy(c, q, cfg)?.holds() {
            return Ok(false);
        }
    }
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            if !c_xy_symmetric(a, b, q, cfg)?.holds() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that each nonempty neighbour set induces a graph in the unrestricted
/// class with the same X and Y. Returns the first vertex violating this.
pub fn neighbourhood_class_check(g: &Graph, q: ClassQuery, cfg: &OracleConfig) -> Result<Option<usize>> {
    for v in g.vertices() {
        let nbrs = g.adjacency(v);
        if nbrs.is_empty() {
            continue;
        }
        let h = g.induced(nbrs)?;
        if !is_xy(&h, q.x, q.y, cfg)?.holds() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn morphic_unchecked(g1: &Graph, g2: &Graph, q: ClassQuery, cfg: &OracleConfig) -> Result<Verdict> {
    cfg.check(g1, q.x)?;
    cfg.check(g2, q.x)?;
    let full = g1.vertices();
    let auts = bounded_automorphisms(g1);
    let mut rng = cfg.sampling.map(|s| (s.fraction, ChaCha8Rng::seed_from_u64(s.seed)));
    let mut seen: HashSet<u64> = HashSet::new();
    let max = cfg.max_source_size.unwrap_or(g1.n()).min(g1.n());
    let mut image = vec![UNMAPPED; g1.n()];
    for k in 1..=max {
        for a in subsets_of_size(full, k) {
            if q.connected && !g1.is_connected_set(a) {
                continue;
            }
            if let Some(auts) = &auts {
                if seen.contains(&a.bits()) {
                    continue;
                }
                for p in auts {
                    seen.insert(a.iter().map(|v| p[v]).collect::<VertexSet>().bits());
                }
            }
            if let Some((fraction, rng)) = rng.as_mut() {
                if !rng.gen_bool(*fraction) {
                    continue;
                }
            }
            let fixed = vec![UNMAPPED; g1.n()];
            let mut maps = MapSearch::new(g1, g2, q.x, &fixed, a, g2.vertices());
            while maps.advance() {
                image.copy_from_slice(maps.current());
                if let Some(w) = failure(&image, a, g1, g2, q) {
                    return Ok(Verdict::Fails(w));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The automorphisms of `g` if there are at most [`AUT_LIMIT`] of them.
fn bounded_automorphisms(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let fixed = vec![UNMAPPED; g.n()];
    let mut search = MapSearch::new(g, g, MorphKind::Iso, &fixed, g.vertices(), g.vertices());
    let mut out = Vec::new();
    while search.advance() {
        if out.len() == AUT_LIMIT {
            return None;
        }
        out.push(search.current().to_vec());
    }
    Some(out)
}

/// A witness if the X-map `image` on `a` has no Y-extension.
fn failure(image: &[usize], a: VertexSet, g1: &Graph, g2: &Graph, q: ClassQuery) -> Option<Witness> {
    let witness = |fail_vertex| Witness { source_set: a, map: PartialMap::from_slots(image.to_vec()), fail_vertex };
    if !q.x.is_at_least(q.y) {
        // a map extends to a Y-map only if it already is one
        match kind_unchecked(image, a, g1, g2) {
            Some(kind) if kind.is_at_least(q.y) => {}
            _ => return Some(witness(None)),
        }
    }
    if extend(image, a, g1, g2, q.y).is_some() {
        return None;
    }
    let fail = (q.y == MorphKind::Homo).then(|| blocked_vertex(image, a, g1, g2)).flatten();
    Some(witness(fail))
}

fn extend(image: &[usize], a: VertexSet, g1: &Graph, g2: &Graph, y: MorphKind) -> Option<Vec<usize>> {
    if y == MorphKind::Iso && (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) {
        return None;
    }
    let free = g1.vertices().difference(a);
    MapSearch::new(g1, g2, y, image, free, g2.vertices()).first()
}

/// The first vertex outside `a` with a neighbour in `a` such that the images
/// of its neighbours in `a` have no common neighbour.
fn blocked_vertex(image: &[usize], a: VertexSet, g1: &Graph, g2: &Graph) -> Option<usize> {
    g1.vertices().difference(a).iter().find(|&v| {
        let av = g1.adjacency(v).intersection(a);
        !av.is_empty() && {
            let targets: VertexSet = av.iter().map(|u| image[u]).collect();
            g2.common_neighbors_unchecked(targets).is_empty()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn class_names_round_trip() {
        for q in ClassQuery::CONNECTED_CLASSES {
            assert_eq!(q.name().parse::<ClassQuery>().unwrap(), q);
        }
        assert_eq!("hh".parse::<ClassQuery>().unwrap(), ClassQuery::plain(MorphKind::Homo, MorphKind::Homo));
        assert!("c-xh".parse::<ClassQuery>().is_err());
    }

    #[test]
    fn complete_graphs_are_chi() {
        for n in 1..=5 {
            let k = Graph::complete(n).unwrap();
            assert!(is_c_xy(&k, ClassQuery::CHI, &cfg()).unwrap().holds());
        }
    }

    #[test]
    fn hexagon_is_cmi_not_chi() {
        let c6 = Family::Cycle { n: 6 }.make().unwrap();
        assert!(is_c_xy(&c6, ClassQuery::CMI, &cfg()).unwrap().holds());
        let v = is_c_xy(&c6, ClassQuery::CHI, &cfg()).unwrap();
        let w = v.witness().unwrap();
        assert!(w.revalidate(&c6, &c6, ClassQuery::CHI).unwrap());
    }

    #[test]
    fn plain_classes() {
        let two_k3 = Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(3).unwrap()]).unwrap();
        assert!(is_xy(&two_k3, MorphKind::Homo, MorphKind::Homo, &cfg()).unwrap().holds());
        let k3_k2 = Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(2).unwrap()]).unwrap();
        assert!(!is_xy(&k3_k2, MorphKind::Mono, MorphKind::Homo, &cfg()).unwrap().holds());
        let e5 = Graph::empty(5).unwrap();
        assert!(is_xy(&e5, MorphKind::Iso, MorphKind::Iso, &cfg()).unwrap().holds());
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::complete(11).unwrap();
        assert!(matches!(is_c_xy(&g, ClassQuery::CHH, &cfg()), Err(Error::Budget { .. })));
        let relaxed = cfg().with_budget_override("hom:12").unwrap();
        assert_eq!(relaxed.hom_budget, 12);
        assert_eq!(cfg().with_budget_override("20").unwrap().iso_budget, 20);
        assert!(cfg().with_budget_override("x:1").is_err());
    }
}
