//! Canonical codes for small graphs (n ≤ 11) via branch-and-bound over
//! vertex orderings.
//!
//! The code of an ordering is the concatenation, for position k = 1..n−1, of
//! the k adjacency bits between the vertex placed at position k and the
//! vertices placed before it. The canonical code is the maximum over all
//! orderings; two graphs are isomorphic iff their codes agree. Tiny graphs
//! only: the upper-triangle bits must fit in a `u64`.

use crate::graph::Graph;

pub const MAX_CANON_VERTICES: usize = 11;

struct Search {
    n: usize,
    adj: Vec<u64>, // one-word rows; n <= 11
    best: u64,
    total_bits: u32,
}

impl Search {
    fn rec(&mut self, depth: usize, used: u64, chunks: &mut [u64], code: u64, bits: u32) {
        if depth == self.n {
            if code > self.best {
                self.best = code;
            }
            return;
        }
        // Distinct chunk values among unused vertices, descending.
        let mut values: Vec<u64> = (0..self.n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| chunks[v])
            .collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        for value in values {
            let new_code = (code << depth) | value;
            let new_bits = bits + depth as u32;
            // Compare against the best code's prefix of the same length.
            if self.best >> (self.total_bits - new_bits) > new_code {
                continue;
            }
            for v in 0..self.n {
                if used >> v & 1 == 0 && chunks[v] == value {
                    let row = self.adj[v];
                    for (u, chunk) in chunks.iter_mut().enumerate() {
                        *chunk = (*chunk << 1) | (row >> u & 1);
                    }
                    self.rec(depth + 1, used | 1 << v, chunks, new_code, new_bits);
                    for chunk in chunks.iter_mut() {
                        *chunk >>= 1;
                    }
                }
            }
        }
    }
}

/// Canonical code of `g`. Panics when `g` has more than
/// [`MAX_CANON_VERTICES`] vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= MAX_CANON_VERTICES,
        "canonical codes support at most {MAX_CANON_VERTICES} vertices"
    );
    if n <= 1 {
        return 0;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let total_bits = (n * (n - 1) / 2) as u32;
    let mut search = Search {
        n,
        adj,
        best: 0,
        total_bits,
    };
    let mut chunks = vec![0u64; n];
    search.rec(0, 0, &mut chunks, 0, 0);
    search.best
}

/// Isomorphism test for graphs within the canonical-code size limit.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compose, ComposeOp};

    #[test]
    fn codes_are_permutation_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        // Same C5 with scrambled labels.
        let h = Graph::from_edges(5, &[(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_p4_from_star() {
        let p4 = Graph::path(4);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
    }

    #[test]
    fn self_complementary_classics() {
        let c5 = Graph::cycle(5);
        assert!(are_isomorphic(&c5, &c5.complement()));
        let p4 = Graph::path(4);
        assert!(are_isomorphic(&p4, &p4.complement()));
    }

    #[test]
    fn union_vs_join_labelling() {
        let a = compose(ComposeOp::DisjointUnion, &Graph::complete(3), &Graph::path(2), 64).unwrap();
        let b = compose(ComposeOp::DisjointUnion, &Graph::path(2), &Graph::complete(3), 64).unwrap();
        assert!(are_isomorphic(&a, &b));
    }
}
