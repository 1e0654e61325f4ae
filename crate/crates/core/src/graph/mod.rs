//! The finite simple graph value type and its structural queries.
//!
//! Vertices are the integers `0..n` with `1 <= n <= 64`; adjacency is held as
//! one bitmask per vertex. Every query iterates vertices in ascending order, so
//! results are reproducible.

mod canon;
mod cycles;
mod format;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

pub(crate) use canon::from_canonical_form;
pub use canon::{canonical_form, canonical_form_bounded, is_isomorphic, DEFAULT_CANON_BOUND};
pub use format::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6};
pub use vertex_set::{subsets_of_size, VertexSet};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// A proper two-colouring of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl Bipartition {
    /// The part containing `v`.
    pub fn part_of(&self, v: usize) -> VertexSet {
        if self.x.contains(v) {
            self.x
        } else {
            self.y
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount { n, max: MAX_VERTICES });
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).without(v);
        }
        Ok(g)
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Neighbour set of `v`. Panics if `v` is out of range; see
    /// [`Graph::neighbors`] for the checked form.
    #[inline]
    pub fn adjacency(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertices adjacent to every member of `s`.
    pub fn common_neighbors(&self, s: VertexSet) -> Result<VertexSet> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_set(s)?;
        Ok(self.common_neighbors_unchecked(s))
    }

    pub(crate) fn common_neighbors_unchecked(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(self.vertices(), |acc, v| acc.intersection(self.adj[v]))
    }

    /// Union of the neighbour sets of the members of `s`.
    pub fn neighborhood_union(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// The subgraph induced on `s`, relabelled `0..|s|` in ascending order.
    /// The returned vector maps each new vertex to the original one.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_set(s)?;
        let labels = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels.iter().map(|&v| self.adj[v].intersection(s).iter().map(|u| index[u]).collect()).collect();
        Ok((Graph { adj }, labels))
    }

    /// The subgraph induced on `s`, without the relabelling.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.induced_subgraph(s).map(|(g, _)| g)
    }

    /// Whether `⟨s⟩` is connected. The empty set is not.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        self.reach_within(start, s) == s
    }

    fn reach_within(&self, start: usize, s: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood_union(frontier).intersection(s);
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, rest);
            out.push(comp);
            rest = rest.difference(comp);
        }
        out
    }

    /// Components as standalone graphs, in the order of
    /// [`Graph::connected_components`].
    pub fn component_graphs(&self) -> Vec<Graph> {
        self.connected_components().into_iter().map(|c| self.induced(c).expect("components are nonempty")).collect()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n()).map(|v| self.distances_from(v).into_iter().flatten().max().unwrap_or(0)).max().unwrap_or(0))
    }

    /// A two-colouring, or `None` if the graph has an odd cycle. The lowest
    /// vertex of every component is placed in `x`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut colour = vec![None; self.n()];
        for comp in self.connected_components() {
            let root = comp.first().unwrap();
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let x = (0..self.n()).filter(|&v| colour[v] == Some(false)).collect();
        Some(Bipartition { x, y: self.vertices().difference(x) })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    /// Whether `s` induces a clique.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n).map(|v| VertexSet::full(n).difference(self.adj[v]).without(v)).collect();
        Graph { adj }
    }

    /// Vertex-disjoint union; the vertices of `gs[i]` follow those of `gs[i-1]`.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        let total: usize = gs.iter().map(Graph::n).sum();
        let mut out = Graph::empty(total)?;
        let mut offset = 0;
        for g in gs {
            for (u, v) in g.edges() {
                out.add_edge(u + offset, v + offset)?;
            }
            offset += g.n();
        }
        Ok(out)
    }

    /// `g ⊔̄ h`: the disjoint union plus every edge between `g` and `h`.
    pub fn edge_complete_union(g: &Graph, h: &Graph) -> Result<Graph> {
        let mut out = Graph::disjoint_union(&[g.clone(), h.clone()])?;
        for u in 0..g.n() {
            for v in 0..h.n() {
                out.add_edge(u, g.n() + v)?;
            }
        }
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for v in 0..self.n() {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph { adj }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let vertex = s.difference(self.vertices()).first().unwrap();
            Err(Error::VertexOutOfRange { vertex, n: self.n() })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(len: usize) -> Graph {
        let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
        Graph::from_edges(len + 1, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(matches!(Graph::empty(0), Err(Error::VertexCount { .. })));
        assert!(matches!(Graph::empty(65), Err(Error::VertexCount { .. })));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
    }

    #[test]
    fn neighbours() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.neighbors(0).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(path(2).neighbors(1).unwrap().to_vec(), vec![0, 2]);
        assert!(matches!(k3.neighbors(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn common_neighbours() {
        let c4 = cycle(4);
        let s: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(c4.common_neighbors(s).unwrap().to_vec(), vec![1, 3]);
        let k2 = Graph::complete(2).unwrap();
        assert!(k2.common_neighbors(k2.vertices()).unwrap().is_empty());
        assert_eq!(k2.common_neighbors(VertexSet::EMPTY), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5).unwrap();
        let (k3, labels) = k5.induced_subgraph([0, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(labels, vec![0, 2, 4]);
        let p = cycle(6).induced([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p, path(2));
        assert_eq!(k5.induced(VertexSet::EMPTY), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(1).unwrap().is_connected());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        let comps = two_k2.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn distances_and_diameter() {
        assert_eq!(cycle(6).distance(0, 3).unwrap(), Some(3));
        assert_eq!(Graph::complete(6).unwrap().diameter().unwrap(), 1);
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.distance(0, 2).unwrap(), None);
        assert_eq!(two_k2.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn bipartitions() {
        assert!(cycle(5).bipartition().is_none());
        let k34 = Graph::edge_complete_union(&Graph::empty(3).unwrap(), &Graph::empty(4).unwrap()).unwrap();
        let b = k34.bipartition().unwrap();
        assert_eq!((b.x.len(), b.y.len()), (3, 4));
        assert!(b.x.contains(0));
    }

    #[test]
    fn unions() {
        let k23 = Graph::edge_complete_union(&Graph::empty(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degree_sequence(), vec![2, 2, 2, 3, 3]);
        let k3 = Graph::complete(3).unwrap();
        let two_k3 = Graph::disjoint_union(&[k3.clone(), k3]).unwrap();
        assert_eq!(two_k3.n(), 6);
        assert_eq!(two_k3.connected_components().len(), 2);
        // complete split graph K_3 ⊔̄ K̄_2
        let split = Graph::edge_complete_union(&Graph::complete(3).unwrap(), &Graph::empty(2).unwrap()).unwrap();
        assert_eq!(split.degree_sequence(), vec![3, 3, 4, 4, 4]);
    }
}
