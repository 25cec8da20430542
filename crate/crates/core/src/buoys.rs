//! Buoys: odd cyclic sequences of disjoint vertex sets where consecutive
//! sets are fully joined, non-consecutive sets see no edges, and the sets
//! are jointly maximal. Includes the closure construction from a hole, the
//! validator, laminarity, partitioning, and quotient shrinking.

use crate::graph::{Graph, VertexSet};
use crate::holes::{
    enumerate_odd_holes, partial_vertices, profile_allowed, HoleCertificate, HoleError,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuoyError {
    #[error("buoy needs an odd number (≥ 5) of sets, got {0}")]
    BadLength(usize),
    #[error("buoy set {0} is empty")]
    EmptySet(usize),
    #[error("buoy sets {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("hole is not well-hooped: vertex {vertex} touches positions {positions:?}")]
    HoleNotWellHooped { vertex: usize, positions: Vec<usize> },
    #[error("graph is not well-hooped: vertex {vertex} is partial to a hole with positions {positions:?}")]
    NotWellHooped { vertex: usize, positions: Vec<usize> },
    #[error("closure did not reach a valid buoy: {0}")]
    ClosureBroken(BuoyViolation),
    #[error(transparent)]
    Hole(#[from] HoleError),
}

/// Which buoy invariant broke, with a replayable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuoyViolation {
    /// Missing edge between consecutive sets.
    ConsecutiveJoin { position: usize, x: usize, y: usize },
    /// Edge between non-consecutive sets.
    NonConsecutiveNonJoin {
        position_a: usize,
        position_b: usize,
        x: usize,
        y: usize,
    },
    /// An outside vertex could be added to a set.
    NotMaximal { vertex: usize, position: usize },
    /// An outside vertex sees some but not all of the buoy.
    OutsidePartial { vertex: usize },
}

impl std::fmt::Display for BuoyViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BuoyViolation::ConsecutiveJoin { position, x, y } => {
                write!(f, "sets {position} and next are not joined: ({x}, {y}) missing")
            }
            BuoyViolation::NonConsecutiveNonJoin {
                position_a,
                position_b,
                x,
                y,
            } => write!(
                f,
                "edge ({x}, {y}) between non-consecutive sets {position_a} and {position_b}"
            ),
            BuoyViolation::NotMaximal { vertex, position } => {
                write!(f, "vertex {vertex} could join set {position}")
            }
            BuoyViolation::OutsidePartial { vertex } => {
                write!(f, "outside vertex {vertex} is partial to the buoy")
            }
        }
    }
}

/// Cyclic sequence of 2k+1 ≥ 5 disjoint nonempty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Buoy {
    sets: Vec<VertexSet>,
}

impl Buoy {
    /// Structural validation only (length, nonempty, disjoint); the graph
    /// invariants are checked by [`validate_buoy`].
    pub fn new(sets: Vec<VertexSet>) -> Result<Buoy, BuoyError> {
        if sets.len() < 5 || sets.len() % 2 == 0 {
            return Err(BuoyError::BadLength(sets.len()));
        }
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(BuoyError::EmptySet(i));
            }
            for (j, t) in sets.iter().enumerate().skip(i + 1) {
                if !s.is_disjoint(t) {
                    return Err(BuoyError::Overlap(i, j));
                }
            }
        }
        Ok(Buoy { sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn union(&self) -> VertexSet {
        let mut u = self.sets[0].clone();
        for s in &self.sets[1..] {
            u = u.union(s);
        }
        u
    }

    /// Hole through the least vertex of each set, in cyclic order. Valid by
    /// the buoy invariants.
    pub fn spanning_hole(&self, g: &Graph) -> Result<HoleCertificate, HoleError> {
        let cycle: Vec<usize> = self
            .sets
            .iter()
            .map(|s| s.min().expect("buoy sets are nonempty"))
            .collect();
        HoleCertificate::new(g, cycle)
    }
}

/// Can `x` be placed in set `position` without breaking the join /
/// non-join conditions? Adjacency to the set itself is unconstrained.
fn qualifies(g: &Graph, sets: &[VertexSet], x: usize, position: usize) -> bool {
    let len = sets.len();
    let prev = (position + len - 1) % len;
    let next = (position + 1) % len;
    for (j, set) in sets.iter().enumerate() {
        if j == position {
            continue;
        }
        let must_join = j == prev || j == next;
        for y in set.iter() {
            if g.edge(x, y) != must_join {
                return false;
            }
        }
    }
    true
}

/// Grows the buoy of a hole: starting from singletons, repeatedly absorbs
/// (scanning vertex ids in ascending order) any outside vertex that is
/// complete to both neighbors of some position and non-adjacent to all
/// other positions, until a fixed point. The hole must be well-hooped.
pub fn buoy_closure(g: &Graph, c: &HoleCertificate) -> Result<Buoy, BuoyError> {
    buoy_closure_scanned(g, c, false)
}

/// Closure variant with reversed vertex scanning, used to test that the
/// fixed point does not depend on the scan order.
pub fn buoy_closure_scanned(
    g: &Graph,
    c: &HoleCertificate,
    descending: bool,
) -> Result<Buoy, BuoyError> {
    let partials = partial_vertices(g, c)?;
    for p in &partials.profiles {
        if !profile_allowed(&p.positions, c.len()) {
            return Err(BuoyError::HoleNotWellHooped {
                vertex: p.vertex,
                positions: p.positions.clone(),
            });
        }
    }

    let mut sets: Vec<VertexSet> = c
        .vertices()
        .iter()
        .map(|&v| VertexSet::from_members(g.n(), &[v]).expect("hole vertices in range"))
        .collect();
    let mut inside = c.vertex_set(g.n());
    loop {
        let mut changed = false;
        let order: Vec<usize> = if descending {
            (0..g.n()).rev().collect()
        } else {
            (0..g.n()).collect()
        };
        for x in order {
            if inside.contains(x) {
                continue;
            }
            if let Some(position) = (0..sets.len()).find(|&i| qualifies(g, &sets, x, i)) {
                sets[position].insert(x);
                inside.insert(x);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let buoy = Buoy::new(sets).expect("closure preserves buoy structure");
    match validate_buoy(g, &buoy) {
        BuoyValidity::Valid => Ok(buoy),
        BuoyValidity::Broken(violation) => Err(BuoyError::ClosureBroken(violation)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuoyValidity {
    Valid,
    Broken(BuoyViolation),
}

impl BuoyValidity {
    pub fn is_valid(&self) -> bool {
        matches!(self, BuoyValidity::Valid)
    }
}

/// Exhaustively checks the four buoy invariants: consecutive join,
/// non-consecutive non-join, joint maximality, and no outside vertex
/// partial to the union.
pub fn validate_buoy(g: &Graph, b: &Buoy) -> BuoyValidity {
    let len = b.len();
    for i in 0..len {
        let next = (i + 1) % len;
        for x in b.sets[i].iter() {
            for y in b.sets[next].iter() {
                if !g.edge(x, y) {
                    return BuoyValidity::Broken(BuoyViolation::ConsecutiveJoin {
                        position: i,
                        x,
                        y,
                    });
                }
            }
        }
        for j in (i + 2)..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            for x in b.sets[i].iter() {
                for y in b.sets[j].iter() {
                    if g.edge(x, y) {
                        return BuoyValidity::Broken(BuoyViolation::NonConsecutiveNonJoin {
                            position_a: i,
                            position_b: j,
                            x,
                            y,
                        });
                    }
                }
            }
        }
    }
    let union = b.union();
    let total = union.len();
    for x in 0..g.n() {
        if union.contains(x) {
            continue;
        }
        if let Some(position) = (0..len).find(|&i| qualifies(g, &b.sets, x, i)) {
            return BuoyValidity::Broken(BuoyViolation::NotMaximal {
                vertex: x,
                position,
            });
        }
        let seen = g.neighbor_set(x).intersection(&union).len();
        if seen > 0 && seen < total {
            return BuoyValidity::Broken(BuoyViolation::OutsidePartial { vertex: x });
        }
    }
    BuoyValidity::Valid
}

fn require_well_hooped(g: &Graph, max_len: usize) -> Result<(), BuoyError> {
    match crate::holes::is_well_hooped(g, max_len) {
        crate::holes::WellHooped::Yes => Ok(()),
        crate::holes::WellHooped::Violation {
            vertex, positions, ..
        } => Err(BuoyError::NotWellHooped { vertex, positions }),
    }
}

/// Distinct buoy closures of all holes up to `max_len`, in hole
/// enumeration order.
pub fn all_buoys(g: &Graph, max_len: usize) -> Result<Vec<Buoy>, BuoyError> {
    let mut buoys: Vec<Buoy> = Vec::new();
    for hole in enumerate_odd_holes(g, max_len) {
        let b = buoy_closure(g, &hole)?;
        if !buoys.contains(&b) {
            buoys.push(b);
        }
    }
    Ok(buoys)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Laminarity {
    Pass { buoys: Vec<Buoy> },
    Counterexample { first: Buoy, second: Buoy },
}

impl Laminarity {
    pub fn is_laminar(&self) -> bool {
        matches!(self, Laminarity::Pass { .. })
    }
}

/// Any two buoy closures must be vertex-disjoint or nested. Requires a
/// well-hooped graph.
pub fn buoy_laminarity_check(g: &Graph, max_len: usize) -> Result<Laminarity, BuoyError> {
    require_well_hooped(g, max_len)?;
    let buoys = all_buoys(g, max_len)?;
    let unions: Vec<VertexSet> = buoys.iter().map(Buoy::union).collect();
    for i in 0..buoys.len() {
        for j in (i + 1)..buoys.len() {
            let (a, b) = (&unions[i], &unions[j]);
            if !(a.is_disjoint(b) || a.is_subset(b) || b.is_subset(a)) {
                return Ok(Laminarity::Counterexample {
                    first: buoys[i].clone(),
                    second: buoys[j].clone(),
                });
            }
        }
    }
    Ok(Laminarity::Pass { buoys })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuoyPartition {
    /// Maximal buoys, ordered by least contained vertex id, pairwise
    /// disjoint.
    pub buoys: Vec<Buoy>,
    /// Vertices on no odd hole and in no buoy.
    pub leftover: VertexSet,
}

/// Greedy partition into maximal buoys plus a leftover set. Requires a
/// well-hooped graph; leftovers are vertices on no odd hole.
pub fn partition_into_buoys(g: &Graph, max_len: usize) -> Result<BuoyPartition, BuoyError> {
    require_well_hooped(g, max_len)?;
    let all = all_buoys(g, max_len)?;
    // Drop buoys strictly contained in another.
    let unions: Vec<VertexSet> = all.iter().map(Buoy::union).collect();
    let mut maximal: Vec<(VertexSet, Buoy)> = Vec::new();
    for (i, b) in all.iter().enumerate() {
        let contained = unions
            .iter()
            .enumerate()
            .any(|(j, u)| j != i && unions[i].is_subset(u) && unions[i] != *u);
        if !contained {
            maximal.push((unions[i].clone(), b.clone()));
        }
    }
    maximal.sort_by(|(ua, _), (ub, _)| ua.cmp(ub));
    let mut chosen: Vec<Buoy> = Vec::new();
    let mut covered = VertexSet::empty(g.n());
    for (u, b) in maximal {
        if u.is_disjoint(&covered) {
            covered = covered.union(&u);
            chosen.push(b);
        }
    }
    let leftover = covered.complement_in_universe();
    Ok(BuoyPartition {
        buoys: chosen,
        leftover,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrunkGraph {
    pub graph: Graph,
    /// Original vertex id → quotient vertex id. Buoys come first in
    /// partition order, then leftover vertices ascending.
    pub vertex_map: Vec<usize>,
}

/// Quotient of `g` by the partition: one vertex per buoy plus one per
/// leftover vertex; a quotient edge wherever any cross edge exists.
pub fn shrink(g: &Graph, partition: &BuoyPartition) -> ShrunkGraph {
    let mut vertex_map = vec![usize::MAX; g.n()];
    for (qid, b) in partition.buoys.iter().enumerate() {
        for v in b.union().iter() {
            vertex_map[v] = qid;
        }
    }
    let mut next = partition.buoys.len();
    for v in partition.leftover.iter() {
        vertex_map[v] = next;
        next += 1;
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let (qu, qv) = (vertex_map[u], vertex_map[v]);
        if qu != qv {
            edges.push((qu, qv));
        }
    }
    let graph = Graph::from_edges(next, &edges).expect("quotient edges are valid");
    ShrunkGraph { graph, vertex_map }
}

/// Classification of a buoy by the structure of its sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuoyKind {
    /// Every set induces a complete graph. `also_independent` flags the
    /// all-singleton case, which is independent as well.
    Full { also_independent: bool },
    /// Every set induces no edge.
    Independent,
    Mixed,
}

fn set_is_clique(g: &Graph, s: &VertexSet) -> bool {
    let members: Vec<usize> = s.iter().collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.edge(u, v)))
}

fn set_is_stable(g: &Graph, s: &VertexSet) -> bool {
    let members: Vec<usize> = s.iter().collect();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| !g.edge(u, v)))
}

pub fn buoy_is_full(g: &Graph, b: &Buoy) -> bool {
    b.sets().iter().all(|s| set_is_clique(g, s))
}

pub fn buoy_is_independent(g: &Graph, b: &Buoy) -> bool {
    b.sets().iter().all(|s| set_is_stable(g, s))
}

pub fn buoy_kind(g: &Graph, b: &Buoy) -> BuoyKind {
    match (buoy_is_full(g, b), buoy_is_independent(g, b)) {
        (true, independent) => BuoyKind::Full {
            also_independent: independent,
        },
        (false, true) => BuoyKind::Independent,
        (false, false) => BuoyKind::Mixed,
    }
}
