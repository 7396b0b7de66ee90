//! Exact coloring by DSATUR branch and bound.

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::recognition::clique_number;

/// Node budget used when the caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// An optimal coloring of `g`.
///
/// A maximum clique is fixed to colors `0..omega` up front and serves as the
/// lower bound; a DSATUR greedy coloring is the first upper bound. The search
/// branches on the uncolored vertex with the most distinct neighbour colors
/// and fails with [`Error::BudgetExceeded`] after `budget` nodes.
pub fn exact_color(g: &Graph, budget: u64) -> Result<Coloring> {
    let n = g.n();
    if n == 0 {
        return Ok(Coloring::empty());
    }
    let (omega, clique) = clique_number(g);
    let greedy = dsatur_greedy(g);
    let upper = greedy.color_count();
    if upper == omega {
        return Ok(greedy);
    }

    let mut s = Search::new(g, upper, budget);
    s.best_colors = greedy.colors().to_vec();
    for (c, &v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    s.search(clique.len(), omega, omega)?;
    let c = Coloring::new(s.best_colors);
    debug_assert!(c.is_proper(g));
    Ok(c)
}

/// Greedy DSATUR: repeatedly colors the vertex with the most distinct
/// neighbour colors (ties by degree, then index) with its smallest free color.
pub fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut s = Search::new(g, n, u64::MAX);
    for _ in 0..n {
        let v = s.pick();
        let c = (0..n).find(|&c| s.count(v, c) == 0).unwrap();
        s.assign(v, c);
    }
    Coloring::new(s.colors.iter().map(|c| c.unwrap()).collect())
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<Option<usize>>,
    /// `counts[v * width + c]`: neighbours of `v` colored `c`.
    counts: Vec<u32>,
    width: usize,
    saturation: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, best: usize, budget: u64) -> Self {
        let n = g.n();
        let width = best.max(1);
        Search {
            g,
            colors: vec![None; n],
            counts: vec![0; n * width],
            width,
            saturation: vec![0; n],
            best,
            best_colors: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn count(&self, v: usize, c: usize) -> u32 {
        self.counts[v * self.width + c]
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for u in self.g.neighbor_iter(v) {
            let slot = &mut self.counts[u * self.width + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for u in self.g.neighbor_iter(v) {
            let slot = &mut self.counts[u * self.width + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap()
    }

    /// Extends the partial coloring (`colored` vertices using `used` colors).
    fn search(&mut self, colored: usize, used: usize, lower: usize) -> Result<()> {
        if used >= self.best {
            return Ok(());
        }
        if colored == self.g.n() {
            self.best = used;
            self.best_colors = self.colors.iter().map(|c| c.unwrap()).collect();
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let v = self.pick();
        for c in 0..used {
            if self.count(v, c) == 0 {
                self.assign(v, c);
                let r = self.search(colored + 1, used, lower);
                self.unassign(v, c);
                r?;
                if self.best == lower {
                    return Ok(());
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            let r = self.search(colored + 1, used + 1, lower);
            self.unassign(v, used);
            r?;
        }
        Ok(())
    }
}
