//! Canonical labelling by exhaustive minimisation of the adjacency string.
//!
//! The search runs over orderings compatible with an equitable ordered
//! partition (iterated degree refinement), individualising one vertex at a time.
//! Interchangeable twin vertices are branched on only once. Every leaf of the
//! search tree is visited, so the minimum found is a true canonical form.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Vertex bound applied by [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 10;

/// Canonical byte string of `g`: equal strings iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<Vec<u8>> {
    if g.n() > bound {
        return Err(Error::Budget { what: "canonical form", n: g.n(), bound });
    }
    let mut best: Option<Vec<u8>> = None;
    let cells = vec![(0..g.n()).collect::<Vec<_>>()];
    search(g, cells, &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

/// Whether `g` and `h` are isomorphic, compared through canonical forms.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let bound = g.n();
    Ok(canonical_form_bounded(g, bound)? == canonical_form_bounded(h, bound)?)
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let s = adjacency_string(g, &order);
        if best.as_ref().is_none_or(|b| s < *b) {
            *best = Some(s);
        }
        return;
    };
    let cell = &cells[target];
    let mut branched: Vec<usize> = Vec::new();
    for &v in cell {
        if branched.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        branched.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.adjacency(u).without(v) == g.adjacency(v).without(u)
}

/// Splits cells by neighbour counts into each splitter cell until stable.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter: VertexSet = cells[si].iter().copied().collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| (g.adjacency(v).intersection(splitter).len(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

/// Rebuilds the graph whose vertices are listed in canonical order.
pub(crate) fn from_canonical_form(bytes: &[u8]) -> Graph {
    let n = bytes[0] as usize;
    let mut g = Graph::empty(n).expect("canonical forms describe valid graphs");
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bytes[1 + k / 8] & (0x80 >> (k % 8)) != 0 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    g
}

/// `n` followed by the upper triangle of the relabelled adjacency matrix,
/// row by row, packed eight bits per byte.
fn adjacency_string(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + n * n / 16 + 1);
    out.push(n as u8);
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            byte = (byte << 1) | u8::from(g.has_edge(order[i], order[j]));
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}
