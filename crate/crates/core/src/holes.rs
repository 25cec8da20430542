//! Odd-hole enumeration and partial-vertex analysis.
//!
//! An odd hole is a chordless odd cycle of length at least 5. Enumeration
//! reports each hole once, in canonical rotation/reflection: least vertex
//! first, then its lesser cycle-neighbor.

use crate::bits;
use crate::graph::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HoleError {
    #[error("certificate has length {0}; odd length of at least 5 required")]
    BadLength(usize),
    #[error("certificate vertex {0} out of range or repeated")]
    BadVertex(usize),
    #[error("cycle edge ({0}, {1}) missing from graph")]
    MissingEdge(usize, usize),
    #[error("chord ({0}, {1}) present in graph")]
    Chord(usize, usize),
}

/// Witness of a chordless odd cycle of length ≥ 5, cyclically ordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HoleCertificate {
    cycle: Vec<usize>,
}

impl HoleCertificate {
    /// Validates the cycle against `g`: odd length ≥ 5, distinct in-range
    /// vertices, consecutive pairs adjacent, all other pairs non-adjacent.
    pub fn new(g: &Graph, cycle: Vec<usize>) -> Result<HoleCertificate, HoleError> {
        let len = cycle.len();
        if len < 5 || len % 2 == 0 {
            return Err(HoleError::BadLength(len));
        }
        let mut seen = VertexSet::empty(g.n());
        for &v in &cycle {
            if v >= g.n() || seen.contains(v) {
                return Err(HoleError::BadVertex(v));
            }
            seen.insert(v);
        }
        for i in 0..len {
            for j in (i + 1)..len {
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                let (u, v) = (cycle[i], cycle[j]);
                if consecutive && !g.edge(u, v) {
                    return Err(HoleError::MissingEdge(u, v));
                }
                if !consecutive && g.edge(u, v) {
                    return Err(HoleError::Chord(u, v));
                }
            }
        }
        Ok(HoleCertificate { cycle })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.cycle
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_members(n, &self.cycle).expect("certificate vertices are in range")
    }
}

/// Largest odd value ≤ `max_len`, floored at 5; holes longer than the
/// graph itself cannot exist.
fn effective_max_len(n: usize, max_len: usize) -> usize {
    let cap = max_len.min(n);
    if cap % 2 == 0 {
        cap.saturating_sub(1)
    } else {
        cap
    }
}

struct HoleSearch<'g> {
    g: &'g Graph,
    max_len: usize,
    limit: Option<usize>,
    path: Vec<usize>,
    /// path ∪ N(p0..p_{k−1}): vertices that would chord the path.
    blocked_all: Vec<Vec<u64>>,
    /// path ∪ N(p1..p_{k−1}): closure candidates must avoid these.
    blocked_inner: Vec<Vec<u64>>,
    ge_start: Vec<u64>,
    found: Vec<HoleCertificate>,
}

impl<'g> HoleSearch<'g> {
    fn done(&self) -> bool {
        matches!(self.limit, Some(limit) if self.found.len() >= limit)
    }

    fn dfs(&mut self) {
        if self.done() {
            return;
        }
        let last = *self.path.last().unwrap();
        let start = self.path[0];
        let len_with_close = self.path.len() + 1;

        if len_with_close >= 5 && len_with_close % 2 == 1 && len_with_close <= self.max_len {
            let mut closers = self.g.row(last).to_vec();
            bits::and_into(&mut closers, self.g.row(start));
            bits::and_not_into(&mut closers, self.blocked_inner.last().unwrap());
            bits::and_into(&mut closers, &self.ge_start);
            for w in bits::iter_ones(&closers) {
                // Canonical reflection: second vertex below the closer.
                if self.path[1] < w {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    let cert = HoleCertificate::new(self.g, cycle)
                        .expect("search yields valid holes");
                    self.found.push(cert);
                    if self.done() {
                        return;
                    }
                }
            }
        }

        if self.path.len() + 1 > self.max_len.saturating_sub(1) {
            return;
        }
        let mut candidates = self.g.row(last).to_vec();
        bits::and_not_into(&mut candidates, self.blocked_all.last().unwrap());
        bits::and_into(&mut candidates, &self.ge_start);
        for w in bits::iter_ones(&candidates) {
            let mut all = self.blocked_all.last().unwrap().clone();
            bits::or_into(&mut all, self.g.row(last));
            bits::set(&mut all, w);
            let mut inner = self.blocked_inner.last().unwrap().clone();
            if self.path.len() >= 2 {
                bits::or_into(&mut inner, self.g.row(last));
            }
            bits::set(&mut inner, w);
            self.path.push(w);
            self.blocked_all.push(all);
            self.blocked_inner.push(inner);
            self.dfs();
            self.path.pop();
            self.blocked_all.pop();
            self.blocked_inner.pop();
            if self.done() {
                return;
            }
        }
    }
}

fn enumerate_capped(g: &Graph, max_len: usize, limit: Option<usize>) -> Vec<HoleCertificate> {
    let max_len = effective_max_len(g.n(), max_len);
    if max_len < 5 {
        return vec![];
    }
    let words = bits::words_for(g.n());
    let mut found = Vec::new();
    for start in 0..g.n() {
        let mut ge_start = bits::full(g.n());
        for v in 0..=start {
            bits::clear(&mut ge_start, v);
        }
        let mut blocked = vec![0u64; words];
        bits::set(&mut blocked, start);
        let mut search = HoleSearch {
            g,
            max_len,
            limit,
            path: vec![start],
            blocked_all: vec![blocked.clone()],
            blocked_inner: vec![blocked],
            ge_start,
            found,
        };
        search.dfs();
        found = search.found;
        if matches!(limit, Some(limit) if found.len() >= limit) {
            break;
        }
    }
    found.sort_unstable();
    found
}

/// All odd holes of length 5..=`max_len`, canonical, lexicographically
/// sorted.
pub fn enumerate_odd_holes(g: &Graph, max_len: usize) -> Vec<HoleCertificate> {
    enumerate_capped(g, max_len, None)
}

/// Some odd hole of length ≤ `max_len`, if one exists.
pub fn find_odd_hole(g: &Graph, max_len: usize) -> Option<HoleCertificate> {
    enumerate_capped(g, max_len, Some(1)).into_iter().next()
}

/// True iff `g` contains an odd hole of any length.
pub fn has_odd_hole(g: &Graph) -> bool {
    find_odd_hole(g, g.n()).is_some()
}

/// A vertex outside a hole adjacent to some but not all of it, with the
/// cycle positions it touches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialVertex {
    pub vertex: usize,
    /// Ascending positions into the certificate's cycle order.
    pub positions: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialVertices {
    pub set: VertexSet,
    pub profiles: Vec<PartialVertex>,
}

/// All vertices partial to `c`: adjacent to at least one but not all cycle
/// vertices. Re-validates the certificate.
pub fn partial_vertices(g: &Graph, c: &HoleCertificate) -> Result<PartialVertices, HoleError> {
    HoleCertificate::new(g, c.vertices().to_vec())?;
    let on_cycle = c.vertex_set(g.n());
    let mut set = VertexSet::empty(g.n());
    let mut profiles = Vec::new();
    for x in 0..g.n() {
        if on_cycle.contains(x) {
            continue;
        }
        let positions: Vec<usize> = c
            .vertices()
            .iter()
            .enumerate()
            .filter(|&(_, &v)| g.edge(x, v))
            .map(|(i, _)| i)
            .collect();
        if !positions.is_empty() && positions.len() < c.len() {
            set.insert(x);
            profiles.push(PartialVertex {
                vertex: x,
                positions,
            });
        }
    }
    Ok(PartialVertices { set, profiles })
}

/// Three cyclically consecutive positions on a cycle of length `len`.
pub fn is_three_consecutive(positions: &[usize], len: usize) -> bool {
    if positions.len() != 3 {
        return false;
    }
    (0..len).any(|r| {
        let mut window = [r, (r + 1) % len, (r + 2) % len];
        window.sort_unstable();
        window == positions[..3]
    })
}

/// Exactly two positions at cycle-distance two (distance along the cycle,
/// not in the graph).
pub fn is_distance_two_pair(positions: &[usize], len: usize) -> bool {
    if positions.len() != 2 {
        return false;
    }
    let d = positions[1] - positions[0];
    d.min(len - d) == 2
}

/// Allowed partial-vertex profile on a well-hooped hole.
pub fn profile_allowed(positions: &[usize], len: usize) -> bool {
    is_three_consecutive(positions, len) || is_distance_two_pair(positions, len)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WellHooped {
    Yes,
    Violation {
        hole: HoleCertificate,
        vertex: usize,
        positions: Vec<usize>,
    },
}

impl WellHooped {
    pub fn is_well_hooped(&self) -> bool {
        matches!(self, WellHooped::Yes)
    }
}

/// Checks every odd hole up to `max_len`: every partial vertex must touch
/// either 3 cyclically consecutive positions or exactly 2 positions at
/// cycle-distance 2. Returns the first violation in enumeration order.
pub fn is_well_hooped(g: &Graph, max_len: usize) -> WellHooped {
    for hole in enumerate_odd_holes(g, max_len) {
        let partials = partial_vertices(g, &hole).expect("enumerated holes are valid");
        for p in partials.profiles {
            if !profile_allowed(&p.positions, hole.len()) {
                return WellHooped::Violation {
                    hole,
                    vertex: p.vertex,
                    positions: p.positions,
                };
            }
        }
    }
    WellHooped::Yes
}
