//! Exact invariant records: ω, χ, Δ, the ⌈(ω+Δ+1)/2⌉ bound, Berge testing,
//! and k-criticality.

use crate::budget::{Budget, BudgetExceeded};
use crate::clique;
use crate::coloring;
use crate::graph::{Graph, GraphError};
use crate::holes;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub omega: usize,
    pub chi: usize,
    pub delta: usize,
    pub reed_bound: usize,
}

/// ⌈(ω+Δ+1)/2⌉ in integer arithmetic.
pub fn reed_bound(omega: usize, delta: usize) -> usize {
    (omega + delta + 2) / 2
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not k-critical")]
    NotCritical,
}

/// Maximum degree; rejects the empty graph.
pub fn max_degree(g: &Graph) -> Result<usize, InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    Ok(g.vertices().map(|v| g.degree(v)).max().unwrap())
}

/// Full invariant record via the exact solvers; requires n ≥ 1.
pub fn invariant_record(g: &Graph, budget: Budget) -> Result<InvariantRecord, InvariantError> {
    let delta = max_degree(g)?;
    let omega = clique::clique_number(g, budget)?.size;
    let chi = coloring::chromatic_number(g, budget)?.chi;
    Ok(InvariantRecord {
        omega,
        chi,
        delta,
        reed_bound: reed_bound(omega, delta),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReedOutcome {
    Holds { slack: usize, record: InvariantRecord },
    Violated { record: InvariantRecord, graph6: String },
}

impl ReedOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, ReedOutcome::Holds { .. })
    }

    pub fn record(&self) -> &InvariantRecord {
        match self {
            ReedOutcome::Holds { record, .. } | ReedOutcome::Violated { record, .. } => record,
        }
    }
}

/// Does χ ≤ ⌈(ω+Δ+1)/2⌉ hold? Violations carry the full record and the
/// graph6 line for replay.
pub fn satisfies_reed(g: &Graph, budget: Budget) -> Result<ReedOutcome, InvariantError> {
    let record = invariant_record(g, budget)?;
    if record.chi <= record.reed_bound {
        Ok(ReedOutcome::Holds {
            slack: record.reed_bound - record.chi,
            record,
        })
    } else {
        Ok(ReedOutcome::Violated {
            graph6: crate::codec::to_graph6(g),
            record,
        })
    }
}

/// Berge test at desk scale: neither the graph nor its complement contains
/// an odd hole (of any length).
pub fn is_berge(g: &Graph) -> bool {
    !holes::has_odd_hole(g) && !holes::has_odd_hole(&g.complement())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Criticality {
    Critical { k: usize },
    NotCritical { chi: usize },
}

/// χ(G) = k and χ(G−v) < k for every vertex.
pub fn is_k_critical(g: &Graph, budget: Budget) -> Result<Criticality, InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let chi = coloring::chromatic_number(g, budget)?.chi;
    for v in g.vertices() {
        let reduced = g.delete_vertex(v)?;
        if coloring::chromatic_number(&reduced, budget)?.chi >= chi {
            return Ok(Criticality::NotCritical { chi });
        }
    }
    Ok(Criticality::Critical { k: chi })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KCriticalHoleOutcome {
    /// Every qualifying vertex lies on some odd hole. `checked` counts the
    /// vertices for which the inequality actually triggered.
    Pass { k: usize, checked: usize },
    Violation { k: usize, vertex: usize },
}

/// For a k-critical graph, every vertex v with k > (d(v)+ω(v)+1)/2 must lie
/// on an odd hole. Errors when `g` is not k-critical.
pub fn kcritical_odd_hole_check(
    g: &Graph,
    budget: Budget,
) -> Result<KCriticalHoleOutcome, InvariantError> {
    let k = match is_k_critical(g, budget)? {
        Criticality::Critical { k } => k,
        Criticality::NotCritical { .. } => return Err(InvariantError::NotCritical),
    };
    // Vertices on any odd hole, collected once.
    let mut on_hole = crate::graph::VertexSet::empty(g.n());
    for hole in holes::enumerate_odd_holes(g, g.n()) {
        for &v in hole.vertices() {
            on_hole.insert(v);
        }
    }
    let mut checked = 0;
    for v in g.vertices() {
        let omega_v = clique::clique_number_at(g, v, budget)?;
        // k > (d+ω+1)/2 over the integers.
        if 2 * k > g.degree(v) + omega_v + 1 {
            checked += 1;
            if !on_hole.contains(v) {
                return Ok(KCriticalHoleOutcome::Violation { k, vertex: v });
            }
        }
    }
    Ok(KCriticalHoleOutcome::Pass { k, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{compose, ComposeOp};

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn degrees() {
        assert_eq!(max_degree(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(max_degree(&Graph::complete(6)).unwrap(), 5);
        let chair = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(max_degree(&chair).unwrap(), 3);
        assert_eq!(max_degree(&Graph::empty(0)), Err(InvariantError::EmptyGraph));
    }

    #[test]
    fn reed_on_classics() {
        // C5: χ = 3, bound = ⌈5/2⌉ = 3.
        match satisfies_reed(&Graph::cycle(5), unlimited()).unwrap() {
            ReedOutcome::Holds { slack, record } => {
                assert_eq!(slack, 0);
                assert_eq!(record.chi, 3);
                assert_eq!(record.reed_bound, 3);
            }
            other => panic!("expected holds, got {other:?}"),
        }
        // K6: χ = 6, bound = ⌈12/2⌉ = 6.
        match satisfies_reed(&Graph::complete(6), unlimited()).unwrap() {
            ReedOutcome::Holds { slack, record } => {
                assert_eq!(slack, 0);
                assert_eq!(record.reed_bound, 6);
            }
            other => panic!("expected holds, got {other:?}"),
        }
    }

    #[test]
    fn berge_classifies() {
        assert!(is_berge(&Graph::path(6)));
        assert!(is_berge(&Graph::cycle(6)));
        assert!(!is_berge(&Graph::cycle(5)));
        assert!(!is_berge(&Graph::cycle(7)));
        // Antiholes fail through the complement side of the test.
        assert!(!is_berge(&Graph::cycle(7).complement()));
        assert!(is_berge(&Graph::complete(5)));
    }

    #[test]
    fn criticality() {
        assert_eq!(
            is_k_critical(&Graph::cycle(5), unlimited()).unwrap(),
            Criticality::Critical { k: 3 }
        );
        assert_eq!(
            is_k_critical(&Graph::complete(4), unlimited()).unwrap(),
            Criticality::Critical { k: 4 }
        );
        assert_eq!(
            is_k_critical(&Graph::cycle(6), unlimited()).unwrap(),
            Criticality::NotCritical { chi: 2 }
        );
    }

    #[test]
    fn kcritical_hole_check() {
        // C5: every vertex triggers (2·3 > 2+2+1) and lies on the hole.
        assert_eq!(
            kcritical_odd_hole_check(&Graph::cycle(5), unlimited()).unwrap(),
            KCriticalHoleOutcome::Pass { k: 3, checked: 5 }
        );
        // K4: 2·4 > 3+4+1 is false everywhere; vacuous pass.
        assert_eq!(
            kcritical_odd_hole_check(&Graph::complete(4), unlimited()).unwrap(),
            KCriticalHoleOutcome::Pass { k: 4, checked: 0 }
        );
        // Non-critical input is a precondition error.
        assert_eq!(
            kcritical_odd_hole_check(&Graph::cycle(6), unlimited()),
            Err(InvariantError::NotCritical)
        );
    }

    #[test]
    fn expansion_invariants_match_spec_examples() {
        // C5 expansion with every component K2: χ = 5, ω = 4, Δ = 5.
        let g = crate::expansion::tests::c5_all_k2();
        let r = invariant_record(&g, unlimited()).unwrap();
        assert_eq!((r.omega, r.chi, r.delta, r.reed_bound), (4, 5, 5, 5));
        assert!(satisfies_reed(&g, unlimited()).unwrap().holds());

        // C3 expansion by three C5s contains K6.
        let base = Graph::cycle(3);
        let spec = crate::expansion::ExpansionSpec::new(
            base,
            vec![Graph::cycle(5), Graph::cycle(5), Graph::cycle(5)],
        )
        .unwrap();
        let expanded = crate::expansion::expand(&spec, 64).unwrap();
        assert_eq!(
            clique::clique_number(&expanded.graph, unlimited()).unwrap().size,
            6
        );
    }

    #[test]
    fn join_of_k3_and_stable_pair() {
        let g = compose(ComposeOp::Join, &Graph::complete(3), &Graph::empty(2), 64).unwrap();
        assert_eq!(clique::clique_number(&g, unlimited()).unwrap().size, 4);
    }
}
