//! Exact chromatic number: DSATUR-ordered branch and bound between a clique /
//! independence lower bound and a greedy-saturation upper bound, with a
//! maximum clique precolored for symmetry breaking.

use crate::bits;
use crate::budget::{Budget, BudgetExceeded, Ticker};
use crate::clique;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub chi: usize,
    /// Proper coloring using colors `0..chi`, one entry per vertex.
    pub coloring: Vec<usize>,
}

/// Per-vertex sets of colors present in the neighborhood, plus saturation
/// counts. Color masks are word slices so any color count stays in range.
struct SaturationTable {
    words: usize,
    masks: Vec<u64>, // n * words
    saturation: Vec<u32>,
}

impl SaturationTable {
    fn new(n: usize, max_colors: usize) -> SaturationTable {
        let words = bits::words_for(max_colors);
        SaturationTable {
            words,
            masks: vec![0; n * words],
            saturation: vec![0; n],
        }
    }

    #[inline]
    fn mask(&self, v: usize) -> &[u64] {
        &self.masks[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn has_color(&self, v: usize, color: usize) -> bool {
        bits::get(self.mask(v), color)
    }

    /// Records `color` in `v`'s neighborhood; true if it was new.
    #[inline]
    fn add(&mut self, v: usize, color: usize) -> bool {
        let mask = &mut self.masks[v * self.words..(v + 1) * self.words];
        if bits::get(mask, color) {
            false
        } else {
            bits::set(mask, color);
            self.saturation[v] += 1;
            true
        }
    }

    #[inline]
    fn remove(&mut self, v: usize, color: usize) {
        bits::clear(&mut self.masks[v * self.words..(v + 1) * self.words], color);
        self.saturation[v] -= 1;
    }

    fn first_free(&self, v: usize) -> usize {
        self.mask(v)
            .iter()
            .enumerate()
            .find_map(|(wi, &w)| {
                if w != u64::MAX {
                    Some(wi * 64 + (!w).trailing_zeros() as usize)
                } else {
                    None
                }
            })
            .expect("mask capacity exceeds color count")
    }
}

/// Greedy DSATUR: always color the vertex with the most distinctly colored
/// neighbors. Returns a proper coloring; its color count is an upper bound.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut coloring = vec![usize::MAX; n];
    let mut table = SaturationTable::new(n, n + 1);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| coloring[v] == usize::MAX)
            .max_by_key(|&v| (table.saturation[v], g.degree(v), usize::MAX - v))
            .expect("uncolored vertex exists");
        let color = table.first_free(v);
        coloring[v] = color;
        for u in g.neighbors(v) {
            table.add(u, color);
        }
    }
    coloring
}

struct KColoring<'g> {
    g: &'g Graph,
    k: usize,
    coloring: Vec<usize>,
    table: SaturationTable,
    budget: Budget,
    ticker: Ticker,
}

impl<'g> KColoring<'g> {
    /// Backtracking DSATUR search for a proper k-coloring extending the
    /// current partial assignment. `colored` counts assigned vertices;
    /// `max_used` is the highest color index assigned so far.
    fn solve(&mut self, colored: usize, max_used: usize) -> Result<bool, BudgetExceeded> {
        self.ticker.tick(&self.budget, "coloring solver")?;
        let n = self.g.n();
        if colored == n {
            return Ok(true);
        }
        let v = (0..n)
            .filter(|&v| self.coloring[v] == usize::MAX)
            .max_by_key(|&v| (self.table.saturation[v], self.g.degree(v), usize::MAX - v))
            .expect("uncolored vertex exists");
        if self.table.saturation[v] as usize >= self.k {
            return Ok(false);
        }
        // New colors are introduced in order: at most one fresh color branch.
        let limit = self.k.min(max_used + 2);
        for color in 0..limit {
            if self.table.has_color(v, color) {
                continue;
            }
            self.coloring[v] = color;
            let mut touched = Vec::new();
            for u in self.g.neighbors(v) {
                if self.table.add(u, color) {
                    touched.push(u);
                }
            }
            if self.solve(colored + 1, max_used.max(color))? {
                return Ok(true);
            }
            for u in touched {
                self.table.remove(u, color);
            }
            self.coloring[v] = usize::MAX;
        }
        Ok(false)
    }
}

/// Proper k-coloring of `g`, if one exists.
pub fn k_coloring(g: &Graph, k: usize, budget: Budget) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(vec![]));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = KColoring {
        g,
        k,
        coloring: vec![usize::MAX; n],
        table: SaturationTable::new(n, k + 1),
        budget,
        ticker: Ticker::new(),
    };
    // Precolor a maximum clique: its vertices need pairwise distinct colors
    // in every proper coloring, so fixing them prunes color symmetry.
    let clique = clique::clique_number(g, budget)?.witness;
    if clique.len() > k {
        return Ok(None);
    }
    let mut max_used = 0usize;
    for (color, &v) in clique.iter().enumerate() {
        search.coloring[v] = color;
        for u in g.neighbors(v) {
            search.table.add(u, color);
        }
        max_used = color;
    }
    if search.solve(clique.len(), max_used)? {
        Ok(Some(search.coloring))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number with a witness coloring on colors `0..chi`.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<ColoringResult, BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(ColoringResult {
            chi: 0,
            coloring: vec![],
        });
    }
    if g.edge_count() == 0 {
        return Ok(ColoringResult {
            chi: 1,
            coloring: vec![0; n],
        });
    }
    let greedy = dsatur_greedy(g);
    let ub = greedy.iter().max().unwrap() + 1;
    let omega = clique::clique_number(g, budget)?.size;
    let alpha = clique::independence_number(g, budget)?;
    let lb = omega.max(n.div_ceil(alpha)).max(2);
    if lb >= ub {
        return Ok(ColoringResult {
            chi: ub,
            coloring: greedy,
        });
    }
    for k in lb..ub {
        if let Some(coloring) = k_coloring(g, k, budget)? {
            return Ok(ColoringResult { chi: k, coloring });
        }
    }
    Ok(ColoringResult {
        chi: ub,
        coloring: greedy,
    })
}

/// True when `coloring` is proper for `g` and uses exactly the colors
/// `0..chi`. Used by witness checks and tests.
pub fn is_proper_coloring(g: &Graph, coloring: &[usize], chi: usize) -> bool {
    if coloring.len() != g.n() {
        return false;
    }
    if g.n() == 0 {
        return chi == 0;
    }
    let used: std::collections::HashSet<usize> = coloring.iter().copied().collect();
    if used.iter().any(|&c| c >= chi) || used.len() != chi {
        return false;
    }
    g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn chi(g: &Graph) -> ColoringResult {
        chromatic_number(g, Budget::unlimited()).unwrap()
    }

    #[test]
    fn odd_cycle_needs_three() {
        let r = chi(&Graph::cycle(5));
        assert_eq!(r.chi, 3);
        assert!(is_proper_coloring(&Graph::cycle(5), &r.coloring, 3));
    }

    #[test]
    fn complete_and_bipartite() {
        assert_eq!(chi(&Graph::complete(6)).chi, 6);
        assert_eq!(chi(&Graph::path(7)).chi, 2);
        assert_eq!(chi(&Graph::cycle(6)).chi, 2);
        assert_eq!(chi(&Graph::empty(4)).chi, 1);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let petersen = petersen_graph();
        let r = chi(&petersen);
        assert_eq!(r.chi, 3);
        assert!(is_proper_coloring(&petersen, &r.coloring, 3));
        // Independent exhaustive check: some proper 3-coloring exists and no
        // proper 2-coloring does.
        assert!(exhaustive_colorable(&petersen, 3));
        assert!(!exhaustive_colorable(&petersen, 2));
    }

    pub fn petersen_graph() -> Graph {
        let mut edges = Vec::new();
        for v in 0..5 {
            edges.push((v, (v + 1) % 5)); // outer C5
            edges.push((v, v + 5)); // spokes
            edges.push((v + 5, (v + 2) % 5 + 5)); // inner pentagram
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Plain recursive enumeration of all assignments, independent of the
    /// solver's ordering and bounds.
    fn exhaustive_colorable(g: &Graph, k: usize) -> bool {
        fn rec(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
            let v = colors.len();
            if v == g.n() {
                return true;
            }
            for c in 0..k {
                if (0..v).all(|u| !g.edge(u, v) || colors[u] != c) {
                    colors.push(c);
                    if rec(g, k, colors) {
                        return true;
                    }
                    colors.pop();
                }
            }
            false
        }
        rec(g, k, &mut Vec::new())
    }

    #[test]
    fn budget_zero_reports_exceeded() {
        assert!(chromatic_number(&Graph::cycle(9), Budget::from_millis(0)).is_err());
    }

    #[test]
    fn witness_uses_exactly_chi_colors() {
        for n in [3usize, 5, 7, 9] {
            let r = chi(&Graph::cycle(n));
            assert!(is_proper_coloring(&Graph::cycle(n), &r.coloring, r.chi));
        }
    }

    #[test]
    fn wide_graph_stays_correct() {
        // 70 vertices: color masks must not assume one word.
        let g = Graph::cycle(70);
        assert_eq!(chi(&g).chi, 2);
        let g = Graph::cycle(69);
        assert_eq!(chi(&g).chi, 3);
    }
}
