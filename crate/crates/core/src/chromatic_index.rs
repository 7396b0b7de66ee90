//! Chromatic index of graphs with no matching of size four, by coloring the
//! line graph.

use serde::{Deserialize, Serialize};

use crate::coloring::{color_class_graph_with, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{line_graph, max_matching, Graph, Matching};

/// Largest matching size accepted by [`chromatic_index`].
pub const MAX_MATCHING: usize = 3;

/// One color per edge; `edges` is sorted with `u < v` in each pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn color_count(&self) -> usize {
        let mut cs = self.colors.clone();
        cs.sort_unstable();
        cs.dedup();
        cs.len()
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|k| self.colors[k])
    }

    /// Covers exactly the edges of `g` and gives incident edges distinct colors.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.edges != g.edges() || self.colors.len() != self.edges.len() {
            return false;
        }
        (0..g.n()).all(|v| {
            let mut seen: Vec<usize> = g.neighbor_iter(v).filter_map(|u| self.color_of(v, u)).collect();
            let k = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == k
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticIndex {
    pub coloring: EdgeColoring,
    pub max_degree: usize,
    pub chi_prime: usize,
}

impl ChromaticIndex {
    /// 1 when the chromatic index equals the maximum degree, 2 otherwise.
    pub fn class(&self) -> u8 {
        if self.chi_prime == self.max_degree {
            1
        } else {
            2
        }
    }
}

/// `Ok` when the matching number is at most three; otherwise a matching of
/// size four.
pub fn matching_gate(g: &Graph) -> std::result::Result<(), Matching> {
    let m = max_matching(g);
    if m.size() <= MAX_MATCHING {
        Ok(())
    } else {
        Err(Matching {
            edges: m.edges[..MAX_MATCHING + 1].to_vec(),
        })
    }
}

/// Optimal edge coloring of a graph with no matching of size four.
///
/// Such a line graph has no four pairwise disjoint edges behind it, so it is
/// 4K1-free, and as a line graph it avoids the other forbidden graphs; it is
/// colored with the class pipeline and the colors are mapped back to edges.
pub fn chromatic_index(g: &Graph) -> Result<ChromaticIndex> {
    chromatic_index_with(g, DEFAULT_BUDGET)
}

pub fn chromatic_index_with(g: &Graph, budget: u64) -> Result<ChromaticIndex> {
    if let Err(m) = matching_gate(g) {
        return Err(Error::MatchingTooLarge(m.edges));
    }
    let lg = line_graph(g);
    let colored = color_class_graph_with(&lg.graph, budget).map_err(|e| match e {
        Error::NotInClass(w) => {
            Error::violation("chromatic_index", format!("line graph contains {}", w.kind), w.vertices)
        }
        other => other,
    })?;
    let coloring = EdgeColoring {
        edges: lg.edges,
        colors: colored.coloring.into_colors(),
    };
    debug_assert!(coloring.is_proper(g));
    Ok(ChromaticIndex {
        chi_prime: coloring.color_count(),
        max_degree: g.max_degree(),
        coloring,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{claw, complete, cycle, petersen};

    #[test]
    fn small_examples() {
        let r = chromatic_index(&claw()).unwrap();
        assert_eq!((r.chi_prime, r.max_degree, r.class()), (3, 3, 1));
        assert!(r.coloring.is_proper(&claw()));
        assert_eq!(chromatic_index(&complete(3)).unwrap().chi_prime, 3);
        let k4 = chromatic_index(&complete(4)).unwrap();
        assert_eq!((k4.chi_prime, k4.class()), (3, 1));
        let c5 = chromatic_index(&cycle(5)).unwrap();
        assert_eq!((c5.chi_prime, c5.class()), (3, 2));
        let empty = chromatic_index(&Graph::new(4)).unwrap();
        assert_eq!((empty.chi_prime, empty.max_degree), (0, 0));
        assert_eq!(chromatic_index(&complete(7)).unwrap().chi_prime, 7);
    }

    #[test]
    fn gate() {
        assert!(matching_gate(&cycle(7)).is_ok());
        let m = matching_gate(&cycle(8)).unwrap_err();
        assert_eq!(m.size(), 4);
        assert!(m.is_valid(&cycle(8)));
        assert!(matching_gate(&petersen()).is_err());
        assert!(matches!(chromatic_index(&cycle(8)), Err(Error::MatchingTooLarge(ref e)) if e.len() == 4));
    }
}
