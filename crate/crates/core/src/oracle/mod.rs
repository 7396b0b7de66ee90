//! Brute-force ground truth and graph generators for tests.
//!
//! Nothing here calls into the coloring, recognition or decomposition code:
//! the searches are deliberately naive so they can serve as independent
//! references.

mod generate;

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::coloring::ListInstance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::ForbiddenKind;

pub use generate::{constructive_c5, generate, random_list_instance, C5Shape, GenSpec, Strategy};

pub const BRUTE_CHROMATIC_LIMIT: usize = 14;
pub const BRUTE_EDGE_LIMIT: usize = 20;
pub const BRUTE_LIST_LIMIT: usize = 12;
pub const BRUTE_SUBSET_LIMIT: usize = 20;

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::SizeGuard { what, actual, limit });
    }
    Ok(())
}

/// Adjacency as a dense boolean matrix.
fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Largest clique by checking every vertex subset.
pub fn brute_clique_number(g: &Graph) -> Result<usize> {
    guard("vertex count", g.n(), BRUTE_SUBSET_LIMIT)?;
    let adj = matrix(g);
    let n = g.n();
    let best = (0u32..1 << n)
        .filter(|&mask| (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || adj[u][v])))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0);
    Ok(best as usize)
}

/// Largest stable set by checking every vertex subset.
pub fn brute_stability_number(g: &Graph) -> Result<usize> {
    guard("vertex count", g.n(), BRUTE_SUBSET_LIMIT)?;
    brute_clique_number(&g.complement())
}

/// Chromatic number: the least `k` for which backtracking finds a
/// `k`-coloring, trying `k` upwards from the clique number.
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    guard("vertex count", g.n(), BRUTE_CHROMATIC_LIMIT)?;
    Ok(least_k(&matrix(g), brute_clique_number(g)?))
}

fn least_k(adj: &[Vec<bool>], lower: usize) -> usize {
    if adj.is_empty() {
        return 0;
    }
    let mut k = lower.max(1);
    loop {
        let mut colors = vec![usize::MAX; adj.len()];
        if k_color(adj, k, 0, 0, &mut colors) {
            return k;
        }
        k += 1;
    }
}

/// Colors vertices in index order; a vertex may open at most one new color.
fn k_color(adj: &[Vec<bool>], k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if (0..v).all(|u| !adj[u][v] || colors[u] != c) {
            colors[v] = c;
            if k_color(adj, k, v + 1, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Chromatic index: the least `k` for which the edge-incidence graph, built
/// here from the edge list, is `k`-colorable, trying `k` upwards from the
/// maximum degree.
pub fn brute_edge_chromatic(g: &Graph) -> Result<usize> {
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    guard("edge count", edges.len(), BRUTE_EDGE_LIMIT)?;
    let m = edges.len();
    let adj: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let (p, q) = (edges[a], edges[b]);
                    a != b && (p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1)
                })
                .collect()
        })
        .collect();
    let delta = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    Ok(least_k(&adj, delta))
}

/// A list coloring found by exhaustive search, or `None` if none exists.
pub fn brute_list_color(inst: &ListInstance) -> Result<Option<Vec<usize>>> {
    let g = inst.graph();
    let lists: Vec<Vec<usize>> = (0..g.n()).map(|v| inst.list_of(v).iter().copied().collect()).collect();
    brute_list_color_raw(g, &lists)
}

/// List coloring oracle for arbitrary per-vertex lists.
pub fn brute_list_color_raw(g: &Graph, lists: &[Vec<usize>]) -> Result<Option<Vec<usize>>> {
    guard("vertex count", g.n(), BRUTE_LIST_LIMIT)?;
    let adj = matrix(g);
    let mut colors = vec![usize::MAX; g.n()];
    fn go(v: usize, adj: &[Vec<bool>], lists: &[Vec<usize>], colors: &mut [usize]) -> bool {
        if v == adj.len() {
            return true;
        }
        for &c in &lists[v] {
            if (0..v).all(|u| !adj[u][v] || colors[u] != c) {
                colors[v] = c;
                if go(v + 1, adj, lists, colors) {
                    return true;
                }
            }
        }
        false
    }
    Ok(go(0, &adj, lists, &mut colors).then_some(colors))
}

/// Edge masks (over vertex pairs in lexicographic order) of every labeling
/// of a pattern.
fn labelings(pattern: &Graph) -> HashSet<u32> {
    let k = pattern.n();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut out = HashSet::new();
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u32;
        let mut bit = 0;
        for a in 0..k {
            for b in a + 1..k {
                if pattern.has_edge(p[a], p[b]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        out.insert(mask);
    });
    out
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Naive detector: compares the induced edge mask of every vertex subset of
/// the pattern's size against all labelings of the pattern. Returns the
/// first subset, in lexicographic order, that induces the pattern.
pub fn naive_find_forbidden(g: &Graph, kind: ForbiddenKind) -> Option<Vec<usize>> {
    static MASKS: OnceLock<Vec<(usize, HashSet<u32>)>> = OnceLock::new();
    let all = MASKS.get_or_init(|| {
        ForbiddenKind::ALL
            .iter()
            .map(|k| (k.pattern().n(), labelings(&k.pattern())))
            .collect()
    });
    let slot = ForbiddenKind::ALL.iter().position(|&k2| k2 == kind).unwrap();
    let (k, masks) = (all[slot].0, &all[slot].1);
    let adj = matrix(g);
    let mut subset = Vec::with_capacity(k);
    fn walk(start: usize, k: usize, adj: &[Vec<bool>], masks: &HashSet<u32>, subset: &mut Vec<usize>) -> bool {
        if subset.len() == k {
            let mut mask = 0u32;
            let mut bit = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if adj[subset[a]][subset[b]] {
                        mask |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            return masks.contains(&mask);
        }
        for v in start..adj.len() {
            subset.push(v);
            if walk(v + 1, k, adj, masks, subset) {
                return true;
            }
            subset.pop();
        }
        false
    }
    walk(0, k, &adj, masks, &mut subset).then_some(subset)
}

/// Class membership by the naive detector.
pub fn naive_in_class(g: &Graph) -> bool {
    ForbiddenKind::ALL.iter().all(|&k| naive_find_forbidden(g, k).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{co_petersen, complete, cycle, path};

    #[test]
    fn chromatic_values() {
        assert_eq!(brute_chromatic(&cycle(5)).unwrap(), 3);
        assert_eq!(brute_chromatic(&co_petersen()).unwrap(), 5);
        assert_eq!(brute_chromatic(&complete(6)).unwrap(), 6);
        assert_eq!(brute_chromatic(&Graph::new(0)).unwrap(), 0);
        assert!(matches!(brute_chromatic(&Graph::new(15)), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn edge_chromatic_values() {
        assert_eq!(brute_edge_chromatic(&complete(3)).unwrap(), 3);
        assert_eq!(brute_edge_chromatic(&cycle(6)).unwrap(), 2);
        assert_eq!(brute_edge_chromatic(&complete(4)).unwrap(), 3);
        assert_eq!(brute_edge_chromatic(&complete(5)).unwrap(), 5);
        assert_eq!(brute_edge_chromatic(&path(1)).unwrap(), 0);
        assert!(brute_edge_chromatic(&complete(7)).is_err());
    }

    #[test]
    fn subset_numbers() {
        assert_eq!(brute_clique_number(&co_petersen()).unwrap(), 4);
        assert_eq!(brute_stability_number(&co_petersen()).unwrap(), 2);
        assert_eq!(brute_stability_number(&cycle(7)).unwrap(), 3);
    }

    #[test]
    fn naive_detector_matches_patterns() {
        for kind in ForbiddenKind::ALL {
            assert!(naive_find_forbidden(&kind.pattern(), kind).is_some());
        }
        assert!(naive_in_class(&co_petersen()));
        assert!(!naive_in_class(&cycle(8)));
        assert_eq!(labelings(&ForbiddenKind::Claw.pattern()).len(), 4);
        assert_eq!(labelings(&ForbiddenKind::FourK1.pattern()).len(), 1);
    }

    #[test]
    fn list_oracle() {
        let g = complete(2);
        assert!(brute_list_color_raw(&g, &[vec![1], vec![1]]).unwrap().is_none());
        assert_eq!(
            brute_list_color_raw(&g, &[vec![1, 2], vec![1]]).unwrap(),
            Some(vec![2, 1])
        );
    }
}
