//! Induced cycles of a fixed length, and the perfectness test used inside the
//! class.

use fixedbitset::FixedBitSet;

use super::{in_class, stability_number};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Finds an induced cycle of `len` vertices (`len >= 4`), in cyclic order.
///
/// Cycles are reported canonically: the first vertex is the smallest and the
/// second is smaller than the last. Among those, the lexicographically least
/// is returned, so the answer is reproducible.
pub fn find_hole(g: &Graph, len: usize) -> Option<Vec<usize>> {
    assert!(len >= 4, "holes have at least four vertices");
    if g.n() < len {
        return None;
    }
    let mut path = Vec::with_capacity(len);
    for start in 0..g.n() {
        path.clear();
        path.push(start);
        let mut allowed = g.vertex_set();
        allowed.remove_range(..start + 1);
        if extend(g, len, &mut path, &allowed) {
            debug_assert!(is_induced_cycle(g, &path));
            return Some(path);
        }
    }
    None
}

/// `allowed` holds the vertices above the start that are off the path and not
/// adjacent to any interior path vertex (everything but the two ends).
fn extend(g: &Graph, len: usize, path: &mut Vec<usize>, allowed: &FixedBitSet) -> bool {
    let depth = path.len();
    let start = path[0];
    let last = path[depth - 1];
    let mut cand = allowed.clone();
    cand.intersect_with(g.neighbors(last));
    if depth == len - 1 {
        cand.intersect_with(g.neighbors(start));
        return match cand.ones().find(|&v| v > path[1]) {
            Some(v) => {
                path.push(v);
                true
            }
            None => false,
        };
    }
    let mut next = allowed.clone();
    if depth >= 2 {
        cand.difference_with(g.neighbors(start));
        next.difference_with(g.neighbors(last));
    }
    for v in cand.ones() {
        let mut a = next.clone();
        a.set(v, false);
        path.push(v);
        if extend(g, len, path, &a) {
            return true;
        }
        path.pop();
    }
    false
}

pub(crate) fn is_induced_cycle(g: &Graph, cyc: &[usize]) -> bool {
    let k = cyc.len();
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cyc[i], cyc[j]) == consecutive
        })
    })
}

/// Perfectness test valid for connected class members with stability number
/// at least three: such a graph is perfect iff it has no C5 and no C7.
///
/// Longer odd holes contain four pairwise non-adjacent vertices, and a
/// connected claw-free graph with an odd antihole and stability number at
/// least three contains a C5.
pub fn is_perfect_in_class(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Precondition("perfectness test needs a connected graph".into()));
    }
    if let Err(w) = in_class(g) {
        return Err(Error::NotInClass(w));
    }
    let alpha = stability_number(g).0;
    if alpha < 3 {
        return Err(Error::Precondition(format!(
            "perfectness test needs stability number >= 3, got {alpha}"
        )));
    }
    Ok(find_hole(g, 5).is_none() && find_hole(g, 7).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{co_petersen, complete, cycle, petersen};

    fn brute_hole(g: &Graph, len: usize) -> bool {
        // Every len-subset with exactly len edges and all degrees 2 that is
        // connected is an induced cycle.
        let n = g.n();
        (0u32..1 << n).filter(|m| m.count_ones() as usize == len).any(|m| {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            let sub = g.induced_subgraph(&vs).unwrap().graph;
            sub.edge_count() == len && (0..len).all(|v| sub.degree(v) == 2) && sub.is_connected()
        })
    }

    #[test]
    fn examples() {
        assert_eq!(find_hole(&cycle(5), 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(find_hole(&complete(4), 5), None);
        assert_eq!(find_hole(&cycle(7), 5), None);
        assert_eq!(find_hole(&cycle(7), 7).unwrap().len(), 7);
        // Petersen's outer cycle is 0..5; in the complement it is again a C5
        // (0-2-4-1-3), the least one found by the scan.
        let h = find_hole(&co_petersen(), 5).unwrap();
        assert!(is_induced_cycle(&co_petersen(), &h));
        assert_eq!(h, vec![0, 2, 4, 1, 3]);
        assert!(brute_hole(&co_petersen(), 5));
        assert!(find_hole(&petersen(), 5).is_some());
    }

    #[test]
    fn perfectness() {
        assert!(is_perfect_in_class(&cycle(6)).unwrap());
        // C5 plus a vertex on the edge 0 1: stability number 3, has a C5.
        assert!(!is_perfect_in_class(&crate::graph::cycle_plus(&[0, 1])).unwrap());
        // C5 and co-Petersen have stability number 2, below the test's range.
        assert!(matches!(is_perfect_in_class(&cycle(5)), Err(Error::Precondition(_))));
        assert!(matches!(
            is_perfect_in_class(&co_petersen()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(is_perfect_in_class(&cycle(9)), Err(Error::NotInClass(_))));
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_subset_scan(n in 0usize..=9, seed in proptest::prelude::any::<u64>(), len in 4usize..=7) {
            let mut x = seed | 1;
            let g = Graph::from_fn(n, |_, _| { x ^= x << 13; x ^= x >> 7; x ^= x << 17; x % 2 == 0 });
            let found = find_hole(&g, len);
            if let Some(h) = &found {
                proptest::prop_assert!(is_induced_cycle(&g, h));
            }
            proptest::prop_assert_eq!(found.is_some(), brute_hole(&g, len));
        }
    }
}
