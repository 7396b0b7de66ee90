//! Forbidden induced subgraph detection, class membership, exact clique and
//! stability numbers, and short-hole search.

mod clique;
pub(crate) mod hole;

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::{self, Graph};

pub use clique::{clique_number, stability_number};
pub use hole::{find_hole, is_perfect_in_class};

/// The six graphs excluded from the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ForbiddenKind {
    Claw,
    FourK1,
    K5MinusE,
    FiveWheel,
    C5Twin,
    P5Twin,
}

impl ForbiddenKind {
    pub const ALL: [ForbiddenKind; 6] = [
        ForbiddenKind::Claw,
        ForbiddenKind::FourK1,
        ForbiddenKind::K5MinusE,
        ForbiddenKind::FiveWheel,
        ForbiddenKind::C5Twin,
        ForbiddenKind::P5Twin,
    ];

    /// The pattern graph. Witness vertex `i` plays the role of pattern vertex `i`.
    ///
    /// * claw: center 0, leaves 1, 2, 3
    /// * 4K1: four isolated vertices
    /// * K5-e: K5 on 0..5 without the edge 3 4
    /// * 5-wheel: cycle 0..5, hub 5
    /// * C5-twin: cycle 0..5, vertex 5 adjacent to 0, 1, 2
    /// * P5-twin: path 0..5, vertex 5 adjacent to 1, 2, 3
    pub fn pattern(self) -> Graph {
        match self {
            ForbiddenKind::Claw => graph::claw(),
            ForbiddenKind::FourK1 => Graph::new(4),
            ForbiddenKind::K5MinusE => graph::k5_minus_e(),
            ForbiddenKind::FiveWheel => graph::five_wheel(),
            ForbiddenKind::C5Twin => graph::c5_twin(),
            ForbiddenKind::P5Twin => graph::p5_twin(),
        }
    }

    /// Order in which pattern vertices are bound during the search. Each
    /// vertex after the first is adjacent to an earlier one where the pattern
    /// allows it, so candidate sets shrink to neighbourhood intersections.
    fn search_order(self) -> &'static [usize] {
        match self {
            ForbiddenKind::Claw => &[0, 1, 2, 3],
            ForbiddenKind::FourK1 => &[0, 1, 2, 3],
            ForbiddenKind::K5MinusE => &[3, 4, 0, 1, 2],
            ForbiddenKind::FiveWheel => &[5, 0, 1, 2, 3, 4],
            ForbiddenKind::C5Twin => &[1, 5, 0, 2, 3, 4],
            ForbiddenKind::P5Twin => &[2, 5, 1, 3, 0, 4],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenKind::Claw => "claw",
            ForbiddenKind::FourK1 => "4K1",
            ForbiddenKind::K5MinusE => "K5-e",
            ForbiddenKind::FiveWheel => "5-wheel",
            ForbiddenKind::C5Twin => "C5-twin",
            ForbiddenKind::P5Twin => "P5-twin",
        }
    }
}

impl fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An induced copy of a forbidden graph: `vertices[i]` realizes pattern
/// vertex `i` of `kind.pattern()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: ForbiddenKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// Re-checks that the vertices induce exactly the pattern.
    pub fn verify(&self, g: &Graph) -> bool {
        let p = self.kind.pattern();
        self.vertices.len() == p.n()
            && self.vertices.iter().all(|&v| v < g.n())
            && (0..p.n()).all(|i| {
                (i + 1..p.n()).all(|j| {
                    let (a, b) = (self.vertices[i], self.vertices[j]);
                    a != b && g.has_edge(a, b) == p.has_edge(i, j)
                })
            })
    }
}

/// Finds an induced copy of `kind` in `g`, if any.
///
/// Pattern vertices are bound in the kind's search order; at each step the
/// candidates are the unused vertices adjacent to the images of earlier
/// pattern neighbours and non-adjacent to the images of earlier pattern
/// non-neighbours. Candidates are tried in increasing order, so the witness
/// returned is the lexicographically least in search order.
pub fn find_forbidden(g: &Graph, kind: ForbiddenKind) -> Option<Witness> {
    let pattern = kind.pattern();
    let order = kind.search_order();
    if g.n() < order.len() {
        return None;
    }
    let mut search = PatternSearch {
        g,
        pattern: &pattern,
        order,
        image: vec![0; order.len()],
        scratch: (0..order.len()).map(|_| FixedBitSet::with_capacity(g.n())).collect(),
    };
    let found = search.bind(0);
    debug_assert!(found.is_none() || found.as_ref().unwrap().len() == pattern.n());
    found.map(|vertices| {
        let w = Witness { kind, vertices };
        debug_assert!(w.verify(g));
        w
    })
}

struct PatternSearch<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: &'static [usize],
    /// `image[k]` is the host vertex bound to pattern vertex `order[k]`.
    image: Vec<usize>,
    scratch: Vec<FixedBitSet>,
}

impl PatternSearch<'_> {
    fn bind(&mut self, depth: usize) -> Option<Vec<usize>> {
        if depth == self.order.len() {
            let mut out = vec![0; self.order.len()];
            for (k, &p) in self.order.iter().enumerate() {
                out[p] = self.image[k];
            }
            return Some(out);
        }
        let mut cand = std::mem::take(&mut self.scratch[depth]);
        cand.clear();
        cand.insert_range(..);
        let p = self.order[depth];
        for k in 0..depth {
            let host = self.image[k];
            if self.pattern.has_edge(self.order[k], p) {
                cand.intersect_with(self.g.neighbors(host));
            } else {
                cand.difference_with(self.g.neighbors(host));
                cand.set(host, false);
            }
        }
        let mut found = None;
        for v in cand.ones() {
            self.image[depth] = v;
            found = self.bind(depth + 1);
            if found.is_some() {
                break;
            }
        }
        self.scratch[depth] = cand;
        found
    }
}

/// Membership in Free(claw, 4K1, 5-wheel, C5-twin, P5-twin, K5-e). On failure
/// the witness of the first violated kind (in `ForbiddenKind::ALL` order) is
/// returned.
pub fn in_class(g: &Graph) -> Result<(), Witness> {
    match ForbiddenKind::ALL.iter().find_map(|&k| find_forbidden(g, k)) {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

pub fn is_in_class(g: &Graph) -> bool {
    in_class(g).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{claw, co_petersen, complete, cycle, disjoint_union, path};

    #[test]
    fn claw_witness() {
        let w = find_forbidden(&claw(), ForbiddenKind::Claw).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(w.verify(&claw()));
    }

    #[test]
    fn four_k1_in_c8_alternates() {
        let w = find_forbidden(&cycle(8), ForbiddenKind::FourK1).unwrap();
        assert_eq!(w.vertices, vec![0, 2, 4, 6]);
    }

    #[test]
    fn k5_has_no_k5_minus_e() {
        assert!(find_forbidden(&complete(5), ForbiddenKind::K5MinusE).is_none());
    }

    #[test]
    fn every_pattern_finds_itself() {
        for kind in ForbiddenKind::ALL {
            let w = find_forbidden(&kind.pattern(), kind).expect("pattern contains itself");
            assert!(w.verify(&kind.pattern()));
        }
    }

    #[test]
    fn class_examples() {
        assert!(is_in_class(&co_petersen()));
        assert!(is_in_class(&complete(6)));
        assert!(is_in_class(&cycle(5)));
        assert!(is_in_class(&cycle(7)));
        assert_eq!(in_class(&claw()).unwrap_err().kind, ForbiddenKind::Claw);
        assert_eq!(in_class(&cycle(8)).unwrap_err().kind, ForbiddenKind::FourK1);
        // C5 plus an isolated vertex only reaches stability number 3; two
        // isolated vertices make a 4K1.
        let far = disjoint_union(&cycle(5), &Graph::new(1));
        assert!(is_in_class(&far));
        let farther = disjoint_union(&cycle(5), &Graph::new(2));
        assert_eq!(in_class(&farther).unwrap_err().kind, ForbiddenKind::FourK1);
        assert!(is_in_class(&path(4)));
    }

    #[test]
    fn kinds_are_pairwise_distinct_patterns() {
        for a in ForbiddenKind::ALL {
            for b in ForbiddenKind::ALL {
                if a != b && a.pattern().n() == b.pattern().n() {
                    assert!(find_forbidden(&a.pattern(), b).is_none(), "{a} contains {b}");
                }
            }
        }
    }
}
