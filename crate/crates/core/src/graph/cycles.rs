use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Graph, VertexSet};

impl Graph {
    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adjacency(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The lengths `k` in `3..=max_len` for which some induced `C_k` embeds.
    ///
    /// Each cycle is found from its smallest vertex by a depth-first search over
    /// chordless paths; the reachable lengths are memoised on the pair
    /// (path end, path vertex set).
    pub fn induced_cycle_lengths(&self, max_len: usize) -> BTreeSet<usize> {
        let mut found = 0u128;
        let mut memo: HashMap<(usize, u64), u128> = HashMap::new();
        for s in 0..self.n() {
            let above = VertexSet::full(self.n()).difference(VertexSet::full(s + 1));
            for p1 in self.adjacency(s).intersection(above) {
                let path = VertexSet::singleton(s).with(p1);
                found |= self.chordless_extensions(s, p1, path, above, max_len, &mut memo);
            }
        }
        (3..=max_len.min(127)).filter(|&k| found & (1u128 << k) != 0).collect()
    }

    /// Cycle lengths obtainable by extending the chordless path `path`
    /// (starting at `start`, ending at `end`) through vertices of `allowed`.
    fn chordless_extensions(
        &self,
        start: usize,
        end: usize,
        path: VertexSet,
        allowed: VertexSet,
        max_len: usize,
        memo: &mut HashMap<(usize, u64), u128>,
    ) -> u128 {
        if let Some(&r) = memo.get(&(end, path.bits())) {
            return r;
        }
        let len = path.len();
        let mut out = 0u128;
        if len < max_len {
            // vertices already on the path other than the end may not touch the new vertex,
            // except that touching `start` closes a cycle
            let interior = path.without(end).without(start);
            let blocked = self.neighborhood_union(interior).union(path);
            for v in self.adjacency(end).intersection(allowed).difference(blocked) {
                if self.adjacency(v).contains(start) {
                    if len >= 2 {
                        out |= 1u128 << (len + 1);
                    }
                } else {
                    out |= self.chordless_extensions(start, v, path.with(v), allowed, max_len, memo);
                }
            }
        }
        memo.insert((end, path.bits()), out);
        out
    }
}
