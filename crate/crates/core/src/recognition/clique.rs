//! Exact maximum clique by branch and bound with a greedy coloring bound.

use fixedbitset::FixedBitSet;

use crate::graph::Graph;

/// The clique number and a maximum clique (sorted).
pub fn clique_number(g: &Graph) -> (usize, Vec<usize>) {
    let mut search = CliqueSearch {
        g,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(g.vertex_set());
    let mut best = search.best;
    best.sort_unstable();
    debug_assert!(g.is_clique(&best));
    (best.len(), best)
}

/// The stability number and a maximum stable set (sorted).
pub fn stability_number(g: &Graph) -> (usize, Vec<usize>) {
    clique_number(&g.complement())
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut candidates: FixedBitSet) {
        let (order, bounds) = self.color_sort(&candidates);
        for (&v, &bound) in order.iter().zip(&bounds).rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(self.g.neighbors(v));
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.set(v, false);
        }
    }

    /// Greedy sequential coloring of the candidates. Returns the vertices by
    /// non-decreasing color with, for each, its color number (1-based), which
    /// bounds the clique size among it and the vertices before it.
    fn color_sort(&self, candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.minimum() {
                avail.set(v, false);
                avail.difference_with(self.g.neighbors(v));
                uncolored.set(v, false);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{co_petersen, complete, cycle, petersen};

    fn brute_clique(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&m| {
                let vs: Vec<usize> = (0..g.n()).filter(|&v| m >> v & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn known_values() {
        assert_eq!(clique_number(&co_petersen()).0, 4);
        assert_eq!(clique_number(&cycle(5)).0, 2);
        assert_eq!(stability_number(&cycle(5)).0, 2);
        // Exhaustive subset enumeration on C7 gives 3.
        assert_eq!(stability_number(&cycle(7)).0, 3);
        assert_eq!(brute_clique(&cycle(7).complement()), 3);
        assert_eq!(stability_number(&petersen()).0, 4);
        assert_eq!(clique_number(&complete(6)), (6, vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(clique_number(&Graph::new(0)).0, 0);
        assert_eq!(clique_number(&Graph::new(3)).0, 1);
    }

    proptest::proptest! {
        #[test]
        fn matches_brute_force(n in 0usize..=11, seed in proptest::prelude::any::<u64>()) {
            let mut x = seed | 1;
            let g = Graph::from_fn(n, |_, _| { x ^= x << 13; x ^= x >> 7; x ^= x << 17; x % 3 != 0 });
            let (w, clique) = clique_number(&g);
            proptest::prop_assert_eq!(w, clique.len());
            proptest::prop_assert!(g.is_clique(&clique));
            proptest::prop_assert_eq!(w, brute_clique(&g));
            let (a, stable) = stability_number(&g);
            proptest::prop_assert!(g.is_stable(&stable));
            proptest::prop_assert_eq!(a, brute_clique(&g.complement()));
        }
    }
}
