//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Graphs on n vertices are built by augmenting every (n−1)-vertex graph with
//! one new vertex attached to each of the 2^(n−1) possible neighborhoods,
//! deduplicating by canonical code. This is the corpus source for the
//! verification sweeps; nothing here is exposed through the CLI.

use crate::canon::canonical_code;
use crate::graph::Graph;
use std::collections::HashSet;

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, in canonical-code order. Supported for `n ≤ 10` (practically
/// useful up to 8).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "enumeration starts at one vertex");
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next: Vec<(u64, Graph)> = Vec::new();
        for g in &level {
            let mut edges = g.edges();
            for nbrs in 0u64..(1u64 << (k - 1)) {
                edges.truncate(g.edge_count());
                for u in 0..k - 1 {
                    if nbrs >> u & 1 == 1 {
                        edges.push((u, k - 1));
                    }
                }
                let cand = Graph::from_edges(k, &edges).expect("augmented edges are valid");
                let code = canonical_code(&cand);
                if seen.insert(code) {
                    next.push((code, cand));
                }
            }
        }
        next.sort_unstable_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// All graphs with `1 ≤ |V| ≤ n`, one per isomorphism class.
pub fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

/// Connected graphs with `1 ≤ |V| ≤ n`, one per isomorphism class.
pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    all_graphs_up_to(n)
        .into_iter()
        .filter(|g| g.is_connected().unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // Graphs per isomorphism class: 1, 2, 4, 11, 34, 156.
        let expected = [1usize, 2, 4, 11, 34, 156];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_graphs(i + 1).len(), want, "n = {}", i + 1);
        }
        // Connected: 1, 1, 2, 6, 21, 112.
        let connected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in connected.iter().enumerate() {
            let got = all_graphs(i + 1)
                .iter()
                .filter(|g| g.is_connected().unwrap())
                .count();
            assert_eq!(got, want, "connected n = {}", i + 1);
        }
    }

    #[test]
    fn no_pair_is_isomorphic_at_n5() {
        let graphs = all_graphs(5);
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(!crate::canon::are_isomorphic(a, b));
            }
        }
    }
}
