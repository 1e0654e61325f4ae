//! Backtracking search for structure-preserving vertex maps.
//!
//! Variables are the unmapped source vertices. The next variable is the one
//! with the most already-mapped neighbours (ties by vertex id); its candidates
//! are a bitmask: the common neighbourhood of the images of its mapped
//! neighbours, minus used images for injective kinds, minus the neighbourhoods
//! of images of mapped non-neighbours for isomorphisms.

use crate::graph::{Graph, VertexSet};
use crate::morphisms::MorphKind;

pub(crate) const UNMAPPED: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    /// There was nothing to assign and the fixed map has been reported.
    Trivial,
    Done,
}

struct Frame {
    var: usize,
    cands: VertexSet,
}

/// Enumerates every extension of a fixed partial map to the vertices of
/// `free`, honouring the constraints of `kind` on the subgraph induced by the
/// fixed domain together with `free`.
pub(crate) struct MapSearch<'a> {
    src: &'a Graph,
    dst: &'a Graph,
    kind: MorphKind,
    allowed: VertexSet,
    scope: VertexSet,
    free: VertexSet,
    assign: Vec<usize>,
    assigned: VertexSet,
    used: VertexSet,
    stack: Vec<Frame>,
    state: State,
}

impl<'a> MapSearch<'a> {
    /// `fixed` has one slot per source vertex, `UNMAPPED` where undefined.
    /// The fixed part is assumed to be valid for `kind`; `free` must be disjoint
    /// from its domain. Images are restricted to `allowed`.
    pub(crate) fn new(
        src: &'a Graph,
        dst: &'a Graph,
        kind: MorphKind,
        fixed: &[usize],
        free: VertexSet,
        allowed: VertexSet,
    ) -> Self {
        debug_assert_eq!(fixed.len(), src.n());
        let assigned: VertexSet = (0..src.n()).filter(|&v| fixed[v] != UNMAPPED).collect();
        debug_assert!(assigned.is_disjoint(free));
        let used = assigned.iter().map(|v| fixed[v]).collect();
        MapSearch {
            src,
            dst,
            kind,
            allowed,
            scope: assigned.union(free),
            free,
            assign: fixed.to_vec(),
            assigned,
            used,
            stack: Vec::with_capacity(free.len()),
            state: State::Fresh,
        }
    }

    /// The current complete assignment; valid after `advance` returned true.
    pub(crate) fn current(&self) -> &[usize] {
        &self.assign
    }

    /// Moves to the next solution. Returns false once the search space is
    /// exhausted.
    pub(crate) fn advance(&mut self) -> bool {
        match self.state {
            State::Done => return false,
            State::Trivial => {
                self.state = State::Done;
                return false;
            }
            State::Fresh => {
                if self.free.is_empty() {
                    self.state = State::Trivial;
                    return true;
                }
                self.state = State::Running;
                self.push_frame();
            }
            State::Running => {}
        }
        let injective = self.kind != MorphKind::Homo;
        loop {
            let Some(frame) = self.stack.last_mut() else {
                self.state = State::Done;
                return false;
            };
            let var = frame.var;
            if self.assigned.contains(var) {
                if injective {
                    self.used.remove(self.assign[var]);
                }
                self.assigned.remove(var);
                self.assign[var] = UNMAPPED;
            }
            let Some(c) = frame.cands.first() else {
                self.stack.pop();
                continue;
            };
            frame.cands.remove(c);
            self.assign[var] = c;
            self.assigned.insert(var);
            if injective {
                self.used.insert(c);
            }
            if self.stack.len() == self.free.len() {
                return true;
            }
            self.push_frame();
        }
    }

    /// Finds the first solution, if any.
    pub(crate) fn first(mut self) -> Option<Vec<usize>> {
        self.advance().then_some(self.assign)
    }

    fn push_frame(&mut self) {
        let open = self.free.difference(self.assigned);
        let mut var = UNMAPPED;
        let mut best = 0;
        for v in open {
            let k = self.src.adjacency(v).intersection(self.assigned).len();
            if var == UNMAPPED || k > best {
                var = v;
                best = k;
            }
        }
        let cands = self.candidates(var);
        self.stack.push(Frame { var, cands });
    }

    fn candidates(&self, v: usize) -> VertexSet {
        let nbrs = self.src.adjacency(v).intersection(self.scope);
        let mut c = self.allowed;
        for u in nbrs.intersection(self.assigned) {
            c = c.intersection(self.dst.adjacency(self.assign[u]));
        }
        if self.kind == MorphKind::Homo {
            return c;
        }
        c = c.difference(self.used);
        if self.kind == MorphKind::Iso {
            let non_nbrs = self.assigned.intersection(self.scope).difference(nbrs).without(v);
            for w in non_nbrs {
                c = c.difference(self.dst.adjacency(self.assign[w]));
            }
        }
        // an injective hom maps the neighbours of v into distinct neighbours of its image
        let need = nbrs.len();
        c.iter().filter(|&t| self.dst.adjacency(t).intersection(self.allowed).len() >= need).collect()
    }
}
