//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[usize]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.edges.iter().all(|&(u, v)| {
            u < g.n()
                && v < g.n()
                && g.has_edge(u, v)
                && !std::mem::replace(&mut used[u], true)
                && !std::mem::replace(&mut used[v], true)
        })
    }
}

/// Greedy maximal matching in vertex order.
pub fn greedy_matching(g: &Graph) -> Matching {
    let mut mate = vec![NONE; g.n()];
    for v in 0..g.n() {
        if mate[v] == NONE {
            if let Some(w) = g.neighbor_iter(v).find(|&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    Matching::from_mates(&mate)
}

/// A maximum matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for (u, v) in greedy_matching(g).edges {
        mate[u] = v;
        mate[v] = u;
    }
    let mut search = Search::new(n);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search.augmenting_path(g, &mate, root) {
                search.augment(&mut mate, end);
            }
        }
    }
    Matching::from_mates(&mate)
}

struct Search {
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// BFS for an augmenting path from the exposed vertex `root`, contracting
    /// blossoms as they appear. Returns the exposed endpoint found.
    fn augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.n();
        self.parent.fill(NONE);
        self.in_tree.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in g.neighbor_iter(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let lca = self.lowest_common_base(mate, v, to);
                    self.blossom.fill(false);
                    self.mark_path(mate, v, lca, to);
                    self.mark_path(mate, to, lca, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = lca;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.in_tree[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    fn lowest_common_base(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, lca: usize, mut child: usize) {
        while self.base[v] != lca {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    fn augment(&self, mate: &mut [usize], mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen};

    /// Largest matching by exhaustive search: the smallest free vertex is
    /// either left exposed or matched to each free neighbour in turn.
    fn brute_matching_number(g: &Graph) -> usize {
        fn go(g: &Graph, free: u64) -> usize {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(g, rest);
            for w in g.neighbor_iter(v).filter(|&w| rest >> w & 1 == 1) {
                best = best.max(1 + go(g, rest & !(1 << w)));
            }
            best
        }
        assert!(g.n() <= 16);
        go(g, (1u64 << g.n()) - 1)
    }

    #[test]
    fn known_matching_numbers() {
        assert_eq!(max_matching(&cycle(5)).size(), 2);
        assert_eq!(max_matching(&complete(4)).size(), 2);
        // Exhaustive search on the 10-vertex Petersen graph gives 5.
        assert_eq!(brute_matching_number(&petersen()), 5);
        let m = max_matching(&petersen());
        assert_eq!(m.size(), 5);
        assert!(m.is_valid(&petersen()));
        assert_eq!(max_matching(&Graph::new(3)).size(), 0);
    }

    #[test]
    fn needs_blossom_contraction() {
        // Triangle 0-1-2 with pendant paths; greedy picks 0-1 first and a
        // blossom must be shrunk to reach the perfect matching.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid(&g));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(1500))]
        #[test]
        fn matches_brute_force(n in 0usize..=8, bits in proptest::prelude::any::<u32>(), density in 0u32..4) {
            let mut x = bits as u64 | 1;
            let g = Graph::from_fn(n, |_, _| {
                x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                (x % 4) as u32 <= density
            });
            let m = max_matching(&g);
            proptest::prop_assert!(m.is_valid(&g));
            proptest::prop_assert_eq!(m.size(), brute_matching_number(&g));
            proptest::prop_assert!(m.size() >= greedy_matching(&g).size());
        }
    }
}
