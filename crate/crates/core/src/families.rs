//! Generators for the named graph families, tree-like gluings of cliques and
//! bicliques, and exhaustive enumeration of small graphs.
//!
//! Vertex labels of every generator are documented on its variant.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, from_canonical_form, Graph, VertexSet, MAX_VERTICES};

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_n` on `0..n`.
    Complete { n: usize },
    /// `K_t[K̄_s]`: vertex `i` lies in part `i / s`.
    RegularMultipartite { t: usize, s: usize },
    /// `K_{m,n}`: parts `0..m` and `m..m+n`.
    CompleteBipartite { m: usize, n: usize },
    /// `C_n`: `i ~ i+1 mod n`.
    Cycle { n: usize },
    /// The path with `len` edges on `0..=len`.
    Path { len: usize },
    /// `L(K_{s,s})`: vertex `u*s + i` is `u_i`; `u_i ~ v_j` iff `u = v` or `i = j`.
    LineKss { s: usize },
    /// K_{n,n} minus a perfect matching: `x_i = i`, `y_j = n + j`, `x_i ~ y_j` iff `i != j`.
    Bcpm { n: usize },
    /// The 2-subsets of `{1..5}` in lexicographic order, adjacent when disjoint.
    Petersen,
    /// The folded 5-cube. Vertex `b < 16` stands for the antipodal pair of
    /// 5-bit strings `{b, !b}`; two pairs are adjacent when some members
    /// differ in one bit, i.e. when `b ^ b'` has weight 1 or 4.
    Clebsch,
    /// The 6-cycle `0..6` with the long diagonal `{2, 5}`.
    TwoSquares,
    /// A chain of `count` copies of `K_n`, each sharing its last vertex with
    /// the first vertex of the next.
    KnTreelike { n: usize, count: usize },
    /// A chain of `count` copies of `K_{m,n}`, glued like [`Family::KnTreelike`].
    KmnTreelike { m: usize, n: usize, count: usize },
    /// Parts `a_1..a_3 = 0..3` and `b_1..b_n = 3..n+3`; complete bipartite
    /// except `a_1 ≁ b_1, a_1 ≁ b_3, a_2 ≁ b_2, a_2 ≁ b_3`.
    PcmExample { n: usize },
    /// `K_m` joined to the join of `j·K_k` for each `j` in `js`. Vertices are
    /// the `K_m` first, then each `j·K_k` block in order, clique by clique.
    Multiclaw { m: usize, k: usize, js: Vec<usize> },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "COMPLETE",
            Family::RegularMultipartite { .. } => "REGULAR_MULTIPARTITE",
            Family::CompleteBipartite { .. } => "COMPLETE_BIPARTITE",
            Family::Cycle { .. } => "CYCLE",
            Family::Path { .. } => "PATH",
            Family::LineKss { .. } => "LINE_KSS",
            Family::Bcpm { .. } => "BCPM",
            Family::Petersen => "PETERSEN",
            Family::Clebsch => "CLEBSCH",
            Family::TwoSquares => "TWO_SQUARES",
            Family::KnTreelike { .. } => "KN_TREELIKE",
            Family::KmnTreelike { .. } => "KMN_TREELIKE",
            Family::PcmExample { .. } => "PCM_EXAMPLE",
            Family::Multiclaw { .. } => "MULTICLAW",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Complete { n } | Family::Cycle { n } | Family::Bcpm { n } | Family::PcmExample { n } => vec![n],
            Family::Path { len } => vec![len],
            Family::LineKss { s } => vec![s],
            Family::RegularMultipartite { t, s } => vec![t, s],
            Family::CompleteBipartite { m, n } => vec![m, n],
            Family::KnTreelike { n, count } => vec![n, count],
            Family::KmnTreelike { m, n, count } => vec![m, n, count],
            Family::Petersen | Family::Clebsch | Family::TwoSquares => vec![],
            Family::Multiclaw { m, k, ref js } => [m, k].into_iter().chain(js.iter().copied()).collect(),
        }
    }

    /// Parses a family name (case-insensitive, `-` or `_` separated; the tag
    /// itself is accepted) with its parameter list.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family> {
        let key = name.to_ascii_lowercase().replace('_', "-");
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(name, format!("expected {k} parameters, got {}", params.len())))
            }
        };
        let fam = match key.as_str() {
            "complete" | "k" => {
                arity(1)?;
                Family::Complete { n: params[0] }
            }
            "regular-multipartite" | "multipartite" => {
                arity(2)?;
                Family::RegularMultipartite { t: params[0], s: params[1] }
            }
            "complete-bipartite" | "kmn" => {
                arity(2)?;
                Family::CompleteBipartite { m: params[0], n: params[1] }
            }
            "cycle" | "c" => {
                arity(1)?;
                Family::Cycle { n: params[0] }
            }
            "path" | "p" => {
                arity(1)?;
                Family::Path { len: params[0] }
            }
            "line-kss" => {
                arity(1)?;
                Family::LineKss { s: params[0] }
            }
            "bcpm" => {
                arity(1)?;
                Family::Bcpm { n: params[0] }
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "clebsch" => {
                arity(0)?;
                Family::Clebsch
            }
            "two-squares" => {
                arity(0)?;
                Family::TwoSquares
            }
            "kn-treelike" => {
                arity(2)?;
                Family::KnTreelike { n: params[0], count: params[1] }
            }
            "kmn-treelike" => {
                arity(3)?;
                Family::KmnTreelike { m: params[0], n: params[1], count: params[2] }
            }
            "pcm-example" | "fig8" => {
                arity(1)?;
                Family::PcmExample { n: params[0] }
            }
            "multiclaw" => {
                if params.len() < 2 {
                    return Err(bad(name, "expected m, k and a list of multiplicities".into()));
                }
                Family::Multiclaw { m: params[0], k: params[1], js: params[2..].to_vec() }
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Err(bad(self.tag(), reason.to_string()));
        match *self {
            Family::Complete { n } if n < 1 => fail("n >= 1"),
            Family::RegularMultipartite { t, s } if t < 1 || s < 1 => fail("t, s >= 1"),
            Family::CompleteBipartite { m, n } if m < 1 || n < 1 => fail("m, n >= 1"),
            Family::Cycle { n } if n < 3 => fail("n >= 3"),
            Family::LineKss { s } if s < 2 => fail("s >= 2"),
            Family::Bcpm { n } if n < 2 => fail("n >= 2"),
            Family::KnTreelike { n, count } if n < 2 || count < 1 => fail("n >= 2, count >= 1"),
            Family::KmnTreelike { m, n, count } if m < 1 || n < 1 || count < 1 => fail("m, n, count >= 1"),
            Family::PcmExample { n } if n < 4 => fail("n >= 4"),
            Family::Multiclaw { m, k, ref js } => {
                if k < 1 {
                    fail("k >= 1")
                } else if js.iter().any(|&j| j < 2) {
                    fail("every multiplicity j >= 2")
                } else if m == 0 && js.is_empty() {
                    fail("the graph would be empty")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Builds the graph.
    pub fn make(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            Family::Complete { n } => Graph::complete(n),
            Family::RegularMultipartite { t, s } => {
                let parts = vec![Graph::empty(s)?; t];
                parts.iter().skip(1).try_fold(parts[0].clone(), |acc, p| Graph::edge_complete_union(&acc, p))
            }
            Family::CompleteBipartite { m, n } => Graph::edge_complete_union(&Graph::empty(m)?, &Graph::empty(n)?),
            Family::Cycle { n } => {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            Family::Path { len } => {
                let edges: Vec<_> = (1..=len).map(|i| (i - 1, i)).collect();
                Graph::from_edges(len + 1, &edges)
            }
            Family::LineKss { s } => {
                let mut g = Graph::empty(s * s)?;
                for a in 0..s * s {
                    for b in a + 1..s * s {
                        if a / s == b / s || a % s == b % s {
                            g.add_edge(a, b)?;
                        }
                    }
                }
                Ok(g)
            }
            Family::Bcpm { n } => {
                let mut g = Graph::empty(2 * n)?;
                for i in 0..n {
                    for j in (0..n).filter(|&j| j != i) {
                        g.add_edge(i, n + j)?;
                    }
                }
                Ok(g)
            }
            Family::Petersen => {
                let pairs: Vec<(usize, usize)> = (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect();
                let mut g = Graph::empty(10)?;
                for (i, p) in pairs.iter().enumerate() {
                    for (j, q) in pairs.iter().enumerate().skip(i + 1) {
                        if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                            g.add_edge(i, j)?;
                        }
                    }
                }
                Ok(g)
            }
            Family::Clebsch => {
                let mut g = Graph::empty(16)?;
                for a in 0..16usize {
                    for b in a + 1..16 {
                        if matches!((a ^ b).count_ones(), 1 | 4) {
                            g.add_edge(a, b)?;
                        }
                    }
                }
                Ok(g)
            }
            Family::TwoSquares => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (2, 5)]),
            Family::KnTreelike { n, count } => make_treelike(&TreeOfCliques::chain(Block::Clique(n), count)),
            Family::KmnTreelike { m, n, count } => make_treelike(&TreeOfCliques::chain(Block::Biclique(m, n), count)),
            Family::PcmExample { n } => {
                let mut g = Graph::empty(n + 3)?;
                let missing = [(0, 0), (0, 2), (1, 1), (1, 2)];
                for a in 0..3 {
                    for b in 0..n {
                        if !missing.contains(&(a, b)) {
                            g.add_edge(a, 3 + b)?;
                        }
                    }
                }
                Ok(g)
            }
            Family::Multiclaw { m, k, ref js } => {
                let mut pieces = Vec::new();
                if m > 0 {
                    pieces.push(Graph::complete(m)?);
                }
                for &j in js {
                    pieces.push(Graph::disjoint_union(&vec![Graph::complete(k)?; j])?);
                }
                pieces.iter().skip(1).try_fold(pieces[0].clone(), |acc, p| Graph::edge_complete_union(&acc, p))
            }
        }
    }
}

fn bad(family: &str, reason: String) -> Error {
    Error::FamilyParams { family: family.to_string(), reason }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            write!(f, "{}", self.tag())
        } else {
            let p: Vec<String> = params.iter().map(ToString::to_string).collect();
            write!(f, "{}({})", self.tag(), p.join(","))
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("params", &self.params())?;
        map.serialize_entry("tag", self.tag())?;
        map.end()
    }
}

/// One building block of a tree-like graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    /// `K_n` on local vertices `0..n`.
    Clique(usize),
    /// `K_{m,n}` on local vertices `0..m` and `m..m+n`.
    Biclique(usize, usize),
}

impl Block {
    fn order(self) -> usize {
        match self {
            Block::Clique(n) => n,
            Block::Biclique(m, n) => m + n,
        }
    }
}

/// Blocks glued at single vertices. Each glue entry
/// `(block_a, vertex_in_a, block_b, vertex_in_b)` identifies two vertices.
/// A vertex may be shared by any number of blocks, but the incidence
/// structure between blocks and shared vertices must be a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOfCliques {
    pub blocks: Vec<Block>,
    pub glue: Vec<(usize, usize, usize, usize)>,
}

impl TreeOfCliques {
    /// `count` copies of `block`, the last local vertex of each identified
    /// with local vertex 0 of the next.
    pub fn chain(block: Block, count: usize) -> TreeOfCliques {
        let last = block.order() - 1;
        TreeOfCliques { blocks: vec![block; count], glue: (1..count).map(|c| (c - 1, last, c, 0)).collect() }
    }
}

/// Glues the blocks together. Vertices are numbered by their first
/// occurrence when walking the blocks in order.
pub fn make_treelike(spec: &TreeOfCliques) -> Result<Graph> {
    if spec.blocks.is_empty() {
        return Err(Error::NotATree("no blocks".into()));
    }
    if let Some(b) =
        spec.blocks.iter().find(|b| b.order() == 0 || matches!(b, Block::Biclique(0, _) | Block::Biclique(_, 0)))
    {
        return Err(Error::NotATree(format!("degenerate block {b:?}")));
    }
    let offsets: Vec<usize> = spec
        .blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.order();
            Some(o)
        })
        .collect();
    let total: usize = spec.blocks.iter().map(|b| b.order()).sum();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, va, b, vb) in &spec.glue {
        for (blk, v) in [(a, va), (b, vb)] {
            if blk >= spec.blocks.len() || v >= spec.blocks[blk].order() {
                return Err(Error::NotATree(format!("glue refers to missing vertex {v} of block {blk}")));
            }
        }
        if a == b {
            return Err(Error::NotATree(format!("block {a} glued to itself")));
        }
        let (ra, rb) = (find(&mut parent, offsets[a] + va), find(&mut parent, offsets[b] + vb));
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
    }
    let block_of = |x: usize| offsets.iter().rposition(|&o| o <= x).expect("offset 0 exists");
    // incidence structure: blocks plus shared vertices
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); total];
    for x in 0..total {
        let r = find(&mut parent, x);
        members[r].push(block_of(x));
    }
    let mut shared = 0;
    let mut incidences = 0;
    for blocks in members.iter().filter(|m| m.len() > 1) {
        let distinct: BTreeSet<usize> = blocks.iter().copied().collect();
        if distinct.len() != blocks.len() {
            return Err(Error::NotATree("two vertices of one block identified".into()));
        }
        shared += 1;
        incidences += blocks.len();
    }
    // a forest has nodes - edges components; a tree has exactly one
    let nodes = spec.blocks.len() + shared;
    let mut comp: Vec<usize> = (0..spec.blocks.len()).collect();
    for blocks in members.iter().filter(|m| m.len() > 1) {
        for w in blocks.windows(2) {
            let (ra, rb) = (find(&mut comp, w[0]), find(&mut comp, w[1]));
            comp[ra.max(rb)] = ra.min(rb);
        }
    }
    let connected = (0..spec.blocks.len()).all(|b| find(&mut comp, b) == 0);
    if !connected || incidences != nodes - 1 {
        return Err(Error::NotATree("blocks do not form a tree".into()));
    }
    let mut label = vec![usize::MAX; total];
    let mut next = 0;
    for x in 0..total {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        label[x] = label[r];
    }
    if next > MAX_VERTICES {
        return Err(Error::VertexCount { n: next, max: MAX_VERTICES });
    }
    let mut g = Graph::empty(next)?;
    for (blk, &off) in spec.blocks.iter().zip(&offsets) {
        let k = blk.order();
        for i in 0..k {
            for j in i + 1..k {
                let edge = match *blk {
                    Block::Clique(_) => true,
                    Block::Biclique(m, _) => (i < m) != (j < m),
                };
                if edge {
                    g.add_edge(label[off + i], label[off + j])?;
                }
            }
        }
    }
    Ok(g)
}

/// A bipartite C-HH graph that is PCM(n)-free but has maximum degree `n`;
/// same as [`Family::PcmExample`].
pub fn make_pcm_figure8(n: usize) -> Result<Graph> {
    Family::PcmExample { n }.make()
}

/// Largest order enumerated without an explicit override.
pub const DEFAULT_ENUM_BOUND: usize = 7;
/// Largest order the enumerator accepts at all.
pub const MAX_ENUM_BOUND: usize = 8;

/// One graph per isomorphism class on `1..=max_n` vertices, ordered by
/// order and then canonical form, each relabelled canonically.
pub fn enumerate_graphs(max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    enumerate_graphs_bounded(max_n, connected_only, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_graphs_bounded(max_n: usize, connected_only: bool, bound: usize) -> Result<Vec<Graph>> {
    let bound = bound.min(MAX_ENUM_BOUND);
    if max_n > bound {
        return Err(Error::Budget { what: "graph enumeration", n: max_n, bound });
    }
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = Vec::new();
    for n in 1..=max_n {
        layer = next_layer(&layer, n);
        out.extend(layer.iter().map(|f| from_canonical_form(f)).filter(|g| !connected_only || g.is_connected()));
    }
    Ok(out)
}

/// Canonical forms of all graphs on `n` vertices, from those on `n - 1` by
/// adding a vertex with every possible neighbourhood.
fn next_layer(prev: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    if n == 1 {
        return vec![canonical_form(&Graph::empty(1).expect("n = 1")).expect("small")];
    }
    let forms: BTreeSet<Vec<u8>> = prev
        .par_iter()
        .flat_map_iter(|f| {
            let base = from_canonical_form(f);
            (0..1u64 << (n - 1)).map(move |nbrs| {
                let mut g = Graph::empty(n).expect("n <= 8");
                for (u, v) in base.edges() {
                    g.add_edge(u, v).expect("in range");
                }
                for u in VertexSet::from_bits(nbrs) {
                    g.add_edge(u, n - 1).expect("in range");
                }
                canonical_form(&g).expect("n <= 8")
            })
        })
        .collect();
    forms.into_iter().collect()
}
