//! Graph expansions: substituting a component graph for each base vertex and
//! fully joining components across base edges, plus the closed-form
//! chromatic number of odd-hole expansions.

use crate::budget::{Budget, BudgetExceeded};
use crate::clique;
use crate::coloring;
use crate::graph::{Graph, GraphError};
use crate::invariants::{self, InvariantRecord, ReedOutcome};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("expected {expected} components (one per base vertex), got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("component {0} is empty")]
    EmptyComponent(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("base graph is neither bipartite nor an odd hole")]
    UnsupportedBase,
    #[error("chi vector must have odd length ≥ 5 with positive entries, got {0:?}")]
    BadChiVector(Vec<u32>),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Invariant(#[from] crate::invariants::InvariantError),
}

/// Base graph plus one component per base vertex.
#[derive(Clone, Debug)]
pub struct ExpansionSpec {
    pub base: Graph,
    pub components: Vec<Graph>,
}

impl ExpansionSpec {
    pub fn new(base: Graph, components: Vec<Graph>) -> Result<ExpansionSpec, ExpansionError> {
        if components.len() != base.n() {
            return Err(ExpansionError::ComponentCount {
                expected: base.n(),
                got: components.len(),
            });
        }
        if let Some(i) = components.iter().position(|c| c.n() == 0) {
            return Err(ExpansionError::EmptyComponent(i));
        }
        Ok(ExpansionSpec { base, components })
    }

    pub fn total_size(&self) -> usize {
        self.components.iter().map(Graph::n).sum()
    }
}

#[derive(Clone, Debug)]
pub struct Expansion {
    pub graph: Graph,
    /// Expanded vertex → index of its base vertex.
    pub component_of: Vec<usize>,
}

/// Builds the expansion: components side by side (in base-vertex order),
/// intra-component edges copied, full joins across base edges.
pub fn expand(spec: &ExpansionSpec, cap: usize) -> Result<Expansion, ExpansionError> {
    let total = spec.total_size();
    if total > cap {
        return Err(ExpansionError::Graph(GraphError::SizeCapExceeded {
            size: total,
            cap,
        }));
    }
    let mut offsets = Vec::with_capacity(spec.components.len());
    let mut component_of = Vec::with_capacity(total);
    let mut next = 0usize;
    for (i, c) in spec.components.iter().enumerate() {
        offsets.push(next);
        component_of.extend(std::iter::repeat(i).take(c.n()));
        next += c.n();
    }
    let mut edges = Vec::new();
    for (i, c) in spec.components.iter().enumerate() {
        for (u, v) in c.edges() {
            edges.push((offsets[i] + u, offsets[i] + v));
        }
    }
    for (i, j) in spec.base.edges() {
        for u in 0..spec.components[i].n() {
            for v in 0..spec.components[j].n() {
                edges.push((offsets[i] + u, offsets[j] + v));
            }
        }
    }
    Ok(Expansion {
        graph: Graph::from_edges(total, &edges)?,
        component_of,
    })
}

/// Cyclic vector of component chromatic numbers along an odd hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiVector {
    chis: Vec<u32>,
}

impl ChiVector {
    pub fn new(chis: Vec<u32>) -> Result<ChiVector, ExpansionError> {
        if chis.len() < 5 || chis.len() % 2 == 0 || chis.iter().any(|&c| c == 0) {
            return Err(ExpansionError::BadChiVector(chis));
        }
        Ok(ChiVector { chis })
    }

    pub fn len(&self) -> usize {
        self.chis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u32] {
        &self.chis
    }
}

/// How the formula rotated/reflected the input vector so the (0,1) edge has
/// maximum weight, plus the minimizing window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddExpansionChi {
    pub chi: u32,
    /// Rotated (and possibly reflected) vector the formula ran on.
    pub rotated: Vec<u32>,
    /// `rotated[j] = input[rotation[j]]`: positions back to input indices.
    pub rotation: Vec<usize>,
    /// Index l of the minimizing window center, in rotated positions.
    pub l_index: usize,
    /// min over 3 ≤ i ≤ 2k−1 of rotated[i−1]+rotated[i]+rotated[i+1].
    pub window_min: u32,
}

/// Closed-form chromatic number of an odd-hole expansion with component
/// chromatic numbers `v`: after rotating so the (0,1) edge has maximum
/// weight, with m the minimum 3-window sum over centers 3..=2k−1,
/// χ = χ0+χ1 if χ0+χ1 ≥ m, else χ0+χ1 + ⌊(m−χ0−χ1+1)/2⌋.
pub fn chi_odd_expansion_full(v: &ChiVector) -> OddExpansionChi {
    let len = v.len();
    let chis = v.entries();
    // Choose rotation/reflection: maximize entries[0]+entries[1]; ties go to
    // the least start index, forward orientation preferred.
    let mut best: Option<(u32, usize, bool)> = None;
    for start in 0..len {
        for reversed in [false, true] {
            let first = chis[start];
            let second = if reversed {
                chis[(start + len - 1) % len]
            } else {
                chis[(start + 1) % len]
            };
            let weight = first + second;
            let better = match best {
                None => true,
                Some((w, s, r)) => {
                    weight > w || (weight == w && (start < s || (start == s && !reversed && r)))
                }
            };
            if better {
                best = Some((weight, start, reversed));
            }
        }
    }
    let (_, start, reversed) = best.expect("vector is nonempty");
    let rotation: Vec<usize> = (0..len)
        .map(|j| {
            if reversed {
                (start + len - j % len) % len
            } else {
                (start + j) % len
            }
        })
        .collect();
    let rotated: Vec<u32> = rotation.iter().map(|&i| chis[i]).collect();

    let k = len / 2;
    let mut l_index = 3;
    let mut window_min = u32::MAX;
    for i in 3..=(2 * k - 1) {
        let w = rotated[i - 1] + rotated[i] + rotated[i + 1];
        if w < window_min {
            window_min = w;
            l_index = i;
        }
    }
    let head = rotated[0] + rotated[1];
    let chi = if head >= window_min {
        head
    } else {
        head + (window_min - head + 1) / 2
    };
    OddExpansionChi {
        chi,
        rotated,
        rotation,
        l_index,
        window_min,
    }
}

pub fn chi_odd_expansion(v: &ChiVector) -> u32 {
    chi_odd_expansion_full(v).chi
}

/// Recover the cyclic vertex order of a base graph that is an odd hole
/// (connected, 2-regular, odd n ≥ 5), starting at vertex 0 toward its
/// lesser neighbor.
pub fn odd_hole_order(base: &Graph) -> Option<Vec<usize>> {
    let n = base.n();
    if n < 5 || n % 2 == 0 {
        return None;
    }
    if !base.vertices().all(|v| base.degree(v) == 2) || !base.is_connected().ok()? {
        return None;
    }
    let mut order = vec![0usize];
    let mut prev = 0usize;
    let mut cur = base.neighbors(0).next()?;
    while cur != 0 {
        order.push(cur);
        let next = base.neighbors(cur).find(|&u| u != prev)?;
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseKind {
    Bipartite,
    OddHole,
}

/// Outcome of the formula-vs-solver comparison on an odd-hole base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaAgreement {
    pub formula_chi: u32,
    pub exact_chi: usize,
    pub agree: bool,
}

/// Equality-condition corollary: when χ(A)=ω(A) for the components at
/// rotated positions 0, 1, l, the bound must hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryOutcome {
    pub applicable: bool,
    pub reed_holds: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct ExpansionReedReport {
    pub base_kind: BaseKind,
    pub invariants: InvariantRecord,
    pub reed: ReedOutcome,
    pub formula: Option<FormulaAgreement>,
    pub corollary: Option<CorollaryOutcome>,
}

impl ExpansionReedReport {
    /// All applicable assertions hold.
    pub fn all_pass(&self) -> bool {
        self.reed.holds()
            && self.formula.as_ref().map_or(true, |f| f.agree)
            && self
                .corollary
                .as_ref()
                .map_or(true, |c| c.reed_holds != Some(false))
    }
}

/// Builds the expansion, computes exact invariants, and checks the bound;
/// on odd-hole bases additionally compares the closed-form χ with the exact
/// solver and evaluates the equality-condition corollary.
pub fn verify_expansion_reed(
    spec: &ExpansionSpec,
    cap: usize,
    budget: Budget,
) -> Result<ExpansionReedReport, ExpansionError> {
    let hole_order = odd_hole_order(&spec.base);
    let base_kind = if spec.base.is_bipartite() {
        BaseKind::Bipartite
    } else if hole_order.is_some() {
        BaseKind::OddHole
    } else {
        return Err(ExpansionError::UnsupportedBase);
    };
    let expansion = expand(spec, cap)?;
    let invariants = invariants::invariant_record(&expansion.graph, budget)?;
    let reed = invariants::satisfies_reed(&expansion.graph, budget)?;

    let mut formula = None;
    let mut corollary = None;
    if let Some(order) = hole_order {
        let mut chis = Vec::with_capacity(order.len());
        for &b in &order {
            chis.push(coloring::chromatic_number(&spec.components[b], budget)?.chi as u32);
        }
        let v = ChiVector::new(chis).expect("odd hole order has odd length ≥ 5");
        let full = chi_odd_expansion_full(&v);
        formula = Some(FormulaAgreement {
            formula_chi: full.chi,
            exact_chi: invariants.chi,
            agree: full.chi as usize == invariants.chi,
        });
        // Positions 0, 1, l in the rotated frame map back through the
        // rotation and the hole order to component indices.
        let mut applicable = true;
        for &pos in &[0usize, 1, full.l_index] {
            let comp = &spec.components[order[full.rotation[pos]]];
            let chi = coloring::chromatic_number(comp, budget)?.chi;
            let omega = clique::clique_number(comp, budget)?.size;
            if chi != omega {
                applicable = false;
                break;
            }
        }
        corollary = Some(CorollaryOutcome {
            applicable,
            reed_holds: applicable.then(|| reed.holds()),
        });
    }

    Ok(ExpansionReedReport {
        base_kind,
        invariants,
        reed,
        formula,
        corollary,
    })
}

/// Parse an expansion spec in the text format: edge-list sections separated
/// by lines containing only `#`; first the base, then one component per
/// base vertex.
pub fn parse_expansion_spec(text: &str, cap: usize) -> Result<ExpansionSpec, String> {
    let mut sections: Vec<Vec<&str>> = vec![Vec::new()];
    for line in text.lines() {
        if line.trim() == "#" {
            sections.push(Vec::new());
        } else if !line.trim().is_empty() {
            sections.last_mut().unwrap().push(line);
        }
    }
    sections.retain(|s| !s.is_empty());
    if sections.is_empty() {
        return Err("expansion spec is empty".into());
    }
    let mut graphs = Vec::with_capacity(sections.len());
    for (i, section) in sections.iter().enumerate() {
        let g = crate::codec::from_edge_list(&mut section.iter().copied(), cap)
            .map_err(|e| format!("section {}: {e}", i + 1))?;
        graphs.push(g);
    }
    let base = graphs.remove(0);
    ExpansionSpec::new(base, graphs).map_err(|e| e.to_string())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn c5_all_k2() -> Graph {
        let spec = ExpansionSpec::new(Graph::cycle(5), vec![Graph::complete(2); 5]).unwrap();
        expand(&spec, 64).unwrap().graph
    }

    #[test]
    fn identity_expansion() {
        let spec = ExpansionSpec::new(Graph::cycle(5), vec![Graph::complete(1); 5]).unwrap();
        let e = expand(&spec, 64).unwrap();
        assert_eq!(e.graph, Graph::cycle(5));
        assert_eq!(e.component_of, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn k2_expansion_shape() {
        let g = c5_all_k2();
        assert_eq!(g.n(), 10);
        // Each vertex: 1 twin + 2×2 joined neighbors.
        assert!(g.vertices().all(|v| g.degree(v) == 5));
    }

    #[test]
    fn p4_of_c5s_matches_paper_construction() {
        let spec = ExpansionSpec::new(Graph::path(4), vec![Graph::cycle(5); 4]).unwrap();
        let e = expand(&spec, 64).unwrap();
        assert_eq!(e.graph.n(), 20);
        // Cross joins between consecutive components only.
        assert!(e.graph.edge(0, 5));
        assert!(!e.graph.edge(0, 10));
    }

    #[test]
    fn formula_trivial_values() {
        let v = ChiVector::new(vec![1, 1, 1, 1, 1]).unwrap();
        assert_eq!(chi_odd_expansion(&v), 3);
        let v = ChiVector::new(vec![2, 2, 2, 2, 2]).unwrap();
        assert_eq!(chi_odd_expansion(&v), 5);
        let v = ChiVector::new(vec![3, 3, 1, 1, 1]).unwrap();
        assert_eq!(chi_odd_expansion(&v), 6);
        let v = ChiVector::new(vec![1, 1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(chi_odd_expansion(&v), 3);
    }

    #[test]
    fn chi_vector_validation() {
        assert!(ChiVector::new(vec![1, 1, 1]).is_err());
        assert!(ChiVector::new(vec![1, 1, 1, 1]).is_err());
        assert!(ChiVector::new(vec![1, 0, 1, 1, 1]).is_err());
    }

    #[test]
    fn rotation_lands_on_max_edge() {
        let v = ChiVector::new(vec![1, 2, 3, 1, 1]).unwrap();
        let full = chi_odd_expansion_full(&v);
        assert_eq!(full.rotated[0] + full.rotated[1], 5);
        // Formula agrees for every rotation/reflection of the input.
        let base = [1u32, 2, 3, 1, 1];
        for s in 0..5 {
            let rot: Vec<u32> = (0..5).map(|j| base[(s + j) % 5]).collect();
            let rev: Vec<u32> = rot.iter().rev().copied().collect();
            assert_eq!(chi_odd_expansion(&ChiVector::new(rot).unwrap()), full.chi);
            assert_eq!(chi_odd_expansion(&ChiVector::new(rev).unwrap()), full.chi);
        }
    }

    #[test]
    fn verify_reports() {
        let spec = ExpansionSpec::new(Graph::cycle(5), vec![Graph::complete(2); 5]).unwrap();
        let r = verify_expansion_reed(&spec, 64, Budget::unlimited()).unwrap();
        assert_eq!(r.base_kind, BaseKind::OddHole);
        assert!(r.reed.holds());
        let f = r.formula.unwrap();
        assert!(f.agree);
        assert_eq!(f.formula_chi, 5);
        assert_eq!(f.exact_chi, 5);
        let c = r.corollary.unwrap();
        assert!(c.applicable);
        assert_eq!(c.reed_holds, Some(true));

        // K2 base with K3 components: join of two triangles = K6.
        let spec = ExpansionSpec::new(Graph::complete(2), vec![Graph::complete(3); 2]).unwrap();
        let r = verify_expansion_reed(&spec, 64, Budget::unlimited()).unwrap();
        assert_eq!(r.base_kind, BaseKind::Bipartite);
        assert_eq!(r.invariants.chi, 6);
        assert!(r.reed.holds());
        assert!(r.formula.is_none());
    }

    #[test]
    fn unsupported_base_is_rejected() {
        // C3 base: neither bipartite nor a hole of length ≥ 5.
        let spec = ExpansionSpec::new(Graph::cycle(3), vec![Graph::complete(1); 3]).unwrap();
        assert!(matches!(
            verify_expansion_reed(&spec, 64, Budget::unlimited()),
            Err(ExpansionError::UnsupportedBase)
        ));
    }

    #[test]
    fn spec_text_format() {
        let text = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n#\n1 0\n#\n1 0\n#\n2 1\n0 1\n#\n1 0\n#\n1 0\n";
        let spec = parse_expansion_spec(text, 64).unwrap();
        assert_eq!(spec.base, Graph::cycle(5));
        assert_eq!(spec.components.len(), 5);
        assert_eq!(spec.components[2], Graph::complete(2));
    }
}
