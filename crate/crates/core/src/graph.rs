//! Simple undirected graphs over vertex ids `0..n`, stored as bit-adjacency
//! rows, plus the vertex-set type every analysis hands around.
//!
//! Graphs are immutable once built; every constructor validates symmetry and
//! rejects loops. Rows are `u64` words so edge queries and neighborhood
//! intersections stay word-parallel for the sizes this crate targets.

use crate::bits;
use thiserror::Error;

/// Default vertex cap: one machine word per adjacency row. Decoders and the
/// compose/expand constructors enforce a cap (configurable per call); the
/// algorithms stay correct above it, just slower.
pub const DEFAULT_VERTEX_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("size {size} exceeds vertex cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n.max(1) * words],
        }
    }

    /// Build from an edge list. Loops and out-of-range endpoints are
    /// rejected; duplicate edges are tolerated.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::VertexOutOfRange { id, n });
                }
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Cycle 0-1-…-(n−1)-0; requires n ≥ 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.set_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path 0-1-…-(n−1).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        bits::get(self.row(u), v)
    }

    /// Adjacency row of `v` as words over `0..n`.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            words: self.row(v).to_vec(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement: same vertices, edge iff non-edge (no loops).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let w = self.words;
            let row = &mut g.rows[v * w..(v + 1) * w];
            for (d, s) in row.iter_mut().zip(self.row(v)) {
                *d = !s;
            }
            bits::clear(row, v);
            bits::trim(row, self.n);
        }
        g
    }

    /// Induced subgraph on `s`; vertices relabeled to `0..|s|` preserving the
    /// ascending order of original ids.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        let members: Vec<usize> = s.iter().collect();
        if let Some(&id) = members.iter().find(|&&id| id >= self.n) {
            return Err(GraphError::VertexOutOfRange { id, n: self.n });
        }
        let mut g = Graph::empty(members.len());
        for (a, &u) in members.iter().enumerate() {
            for (b, &v) in members.iter().enumerate().skip(a + 1) {
                if self.edge(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Graph with `v` removed (relabeling as in [`Graph::induced`]).
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { id: v, n: self.n });
        }
        let mut s = VertexSet::full(self.n);
        s.remove(v);
        self.induced(&s)
    }

    /// True iff the graph has exactly one connected component.
    /// The empty graph is rejected.
    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0usize];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        Ok(seen.len() == self.n)
    }

    /// Proper 2-coloring test via BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![usize::MAX; self.n];
        for start in 0..self.n {
            if side[start] != usize::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if side[u] == usize::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Binary graph composition used by the pattern constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComposeOp {
    /// Disjoint union plus all cross edges.
    Join,
    /// Side-by-side, no cross edges.
    DisjointUnion,
}

/// Compose `g` and `h`; `h`'s vertices are shifted by `g.n()`.
/// Errors when the combined size exceeds `cap`.
pub fn compose(op: ComposeOp, g: &Graph, h: &Graph, cap: usize) -> Result<Graph, GraphError> {
    let n = g.n() + h.n();
    if n > cap {
        return Err(GraphError::SizeCapExceeded { size: n, cap });
    }
    let mut out = Graph::empty(n);
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.set_edge(u + g.n(), v + g.n());
    }
    if let ComposeOp::Join = op {
        for u in 0..g.n() {
            for v in 0..h.n() {
                out.set_edge(u, v + g.n());
            }
        }
    }
    Ok(out)
}

pub fn join(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, GraphError> {
    compose(ComposeOp::Join, g, h, cap)
}

pub fn disjoint_union(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, GraphError> {
    compose(ComposeOp::DisjointUnion, g, h, cap)
}

/// Subset of the vertex ids `0..n` of an associated graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet {
    pub fn empty(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: vec![0; bits::words_for(n)],
        }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            n,
            words: bits::full(n),
        }
    }

    pub fn from_members(n: usize, members: &[usize]) -> Result<VertexSet, GraphError> {
        let mut s = VertexSet::empty(n);
        for &id in members {
            if id >= n {
                return Err(GraphError::VertexOutOfRange { id, n });
            }
            s.insert(id);
        }
        Ok(s)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && bits::get(&self.words, v)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        bits::set(&mut self.words, v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        bits::clear(&mut self.words, v);
    }

    pub fn len(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        bits::is_empty(&self.words)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(&self.words)
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        bits::or_into(&mut out.words, &other.words);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        bits::and_into(&mut out.words, &other.words);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        bits::and_not_into(&mut out.words, &other.words);
        out
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        bits::disjoint(&self.words, &other.words)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        bits::subset(&self.words, &other.words)
    }

    /// Complement within the universe `0..n`.
    pub fn complement_in_universe(&self) -> VertexSet {
        let mut out = VertexSet::full(self.n);
        bits::and_not_into(&mut out.words, &self.words);
        out
    }
}

/// Order by the ascending member sequence, lexicographically; this is the
/// tie-break order used wherever "lexicographically least set" is promised.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_oob() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::LoopEdge(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { id: 3, n: 3 })
        );
    }

    #[test]
    fn complement_of_c5_is_c5_shaped() {
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        assert_eq!(co.edge_count(), 5);
        assert!(co.vertices().all(|v| co.degree(v) == 2));
        assert!(co.is_connected().unwrap());
    }

    #[test]
    fn complement_of_k5_is_edgeless() {
        assert_eq!(Graph::complete(5).complement().edge_count(), 0);
    }

    #[test]
    fn complement_of_p4_is_p4_shaped() {
        let p4 = Graph::path(4);
        let co = p4.complement();
        assert_eq!(co.edge_count(), 3);
        let mut degs: Vec<_> = co.vertices().map(|v| co.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert!(co.is_connected().unwrap());
    }

    #[test]
    fn induced_relabels_ascending() {
        let c5 = Graph::cycle(5);
        let s = VertexSet::from_members(5, &[0, 1, 2, 3]).unwrap();
        let p4 = c5.induced(&s).unwrap();
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);

        let all = VertexSet::full(5);
        assert_eq!(c5.induced(&all).unwrap(), c5);

        let k6 = Graph::complete(6);
        let t = VertexSet::from_members(6, &[1, 3, 5]).unwrap();
        assert_eq!(k6.induced(&t).unwrap(), Graph::complete(3));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::cycle(5);
        let s = VertexSet::from_members(7, &[0, 6]).unwrap();
        assert_eq!(
            g.induced(&s),
            Err(GraphError::VertexOutOfRange { id: 6, n: 5 })
        );
    }

    #[test]
    fn compose_shapes() {
        let cap = DEFAULT_VERTEX_CAP;
        let w4 = join(&Graph::complete(1), &Graph::cycle(4), cap).unwrap();
        assert_eq!(w4.n(), 5);
        assert_eq!(w4.edge_count(), 8);
        assert_eq!(w4.degree(0), 4);

        let k3k1 = disjoint_union(&Graph::complete(3), &Graph::complete(1), cap).unwrap();
        let g = join(&k3k1, &Graph::complete(1), cap).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 7);

        let e2 = disjoint_union(&Graph::complete(1), &Graph::complete(1), cap).unwrap();
        assert_eq!(e2.edge_count(), 0);
        assert_eq!(e2.n(), 2);

        assert_eq!(
            compose(ComposeOp::Join, &Graph::complete(40), &Graph::complete(30), cap),
            Err(GraphError::SizeCapExceeded { size: 70, cap: 64 })
        );
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_connected().unwrap());
        let e2 = disjoint_union(&Graph::complete(1), &Graph::complete(1), 64).unwrap();
        assert!(!e2.is_connected().unwrap());
        assert!(!Graph::complete(2).complement().is_connected().unwrap());
        assert_eq!(Graph::empty(0).is_connected(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn vertex_set_ordering_is_member_lex() {
        let a = VertexSet::from_members(8, &[0, 5]).unwrap();
        let b = VertexSet::from_members(8, &[1, 2]).unwrap();
        let c = VertexSet::from_members(8, &[0]).unwrap();
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn graphs_over_one_word() {
        let g = Graph::cycle(70);
        assert_eq!(g.n(), 70);
        assert_eq!(g.edge_count(), 70);
        assert!(g.edge(69, 0));
        assert!(g.is_connected().unwrap());
        assert_eq!(g.complement().complement(), g);
    }
}
