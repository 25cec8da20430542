//! Exact maximum-clique solver: branch and bound over bit-parallel candidate
//! sets with a greedy-coloring bound (Tomita-style).

use crate::bits;
use crate::budget::{Budget, BudgetExceeded, Ticker};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    /// Lexicographically least maximum clique, ascending vertex ids.
    pub witness: Vec<usize>,
}

struct Solver<'g> {
    g: &'g Graph,
    words: usize,
    budget: Budget,
    ticker: Ticker,
    best: usize,
}

impl<'g> Solver<'g> {
    fn new(g: &'g Graph, budget: Budget) -> Solver<'g> {
        Solver {
            g,
            words: g.words(),
            budget,
            ticker: Ticker::new(),
            best: 0,
        }
    }

    /// Greedy coloring of `cand`; returns vertices ordered so that the
    /// color-class bound of each prefix is the vertex's color + 1.
    fn color_order(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = cand.to_vec();
        let mut order = Vec::with_capacity(bits::count(cand));
        let mut color = 0usize;
        let mut class = vec![0u64; self.words];
        while !bits::is_empty(&uncolored) {
            class.copy_from_slice(&uncolored);
            loop {
                let Some(v) = bits::iter_ones(&class).next() else {
                    break;
                };
                bits::clear(&mut class, v);
                bits::and_not_into(&mut class, self.g.row(v));
                bits::clear(&mut uncolored, v);
                order.push((v, color));
            }
            color += 1;
        }
        order
    }

    fn expand(&mut self, size: usize, cand: &[u64]) -> Result<(), BudgetExceeded> {
        self.ticker.tick(&self.budget, "clique solver")?;
        if bits::is_empty(cand) {
            if size > self.best {
                self.best = size;
            }
            return Ok(());
        }
        let order = self.color_order(cand);
        let mut cand = cand.to_vec();
        for &(v, color) in order.iter().rev() {
            if size + color + 1 <= self.best {
                return Ok(());
            }
            let mut next = cand.clone();
            bits::and_into(&mut next, self.g.row(v));
            self.expand(size + 1, &next)?;
            bits::clear(&mut cand, v);
        }
        Ok(())
    }

    fn max_size(&mut self, cand: &[u64], floor: usize) -> Result<usize, BudgetExceeded> {
        self.best = floor;
        self.expand(0, cand)?;
        Ok(self.best)
    }
}

/// Size of a maximum clique inside `cand` (not counting vertices outside it).
fn max_clique_size_in(g: &Graph, cand: &[u64], budget: Budget) -> Result<usize, BudgetExceeded> {
    Solver::new(g, budget).max_size(cand, 0)
}

/// Exact clique number with a deterministic witness: the lexicographically
/// least maximum clique, found by greedy extension once ω is known.
pub fn clique_number(g: &Graph, budget: Budget) -> Result<CliqueResult, BudgetExceeded> {
    if g.n() == 0 {
        return Ok(CliqueResult {
            size: 0,
            witness: vec![],
        });
    }
    let full = bits::full(g.n());
    let omega = max_clique_size_in(g, &full, budget)?;
    let mut witness = Vec::with_capacity(omega);
    let mut cand = full;
    while witness.len() < omega {
        let need = omega - witness.len();
        let mut found = false;
        for v in bits::iter_ones(&cand.clone()) {
            // Extensions must stay above v to keep the sequence ascending.
            let mut next = cand.clone();
            bits::and_into(&mut next, g.row(v));
            for u in 0..=v {
                bits::clear(&mut next, u);
            }
            if 1 + max_clique_size_in(g, &next, budget)? >= need {
                witness.push(v);
                cand = next;
                found = true;
                break;
            }
        }
        debug_assert!(found, "greedy extension must reach a maximum clique");
        if !found {
            break;
        }
    }
    Ok(CliqueResult {
        size: omega,
        witness,
    })
}

/// ω(v): size of a maximum clique containing `v`.
pub fn clique_number_at(g: &Graph, v: usize, budget: Budget) -> Result<usize, BudgetExceeded> {
    assert!(v < g.n(), "vertex out of range");
    Ok(1 + max_clique_size_in(g, g.row(v), budget)?)
}

/// Maximum independent set size (clique of the complement); used as a
/// chromatic lower bound via ⌈n/α⌉.
pub fn independence_number(g: &Graph, budget: Budget) -> Result<usize, BudgetExceeded> {
    let co = g.complement();
    max_clique_size_in(&co, &bits::full(co.n()), budget)
}

/// Clique number of the subgraph induced by `s`, in `g`'s vertex ids.
pub fn clique_number_within(
    g: &Graph,
    s: &VertexSet,
    budget: Budget,
) -> Result<usize, BudgetExceeded> {
    max_clique_size_in(g, s.words(), budget)
}

/// True when `vs` is pairwise adjacent in `g`; used to replay clique
/// witnesses.
pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.edge(u, v)))
}
