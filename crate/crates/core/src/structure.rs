//! Classification of the vertices around an induced C5 or C7, and runtime
//! checks of the structural facts that hold around a C5 in a connected class
//! member.
//!
//! Cycle positions are taken modulo the cycle length throughout. Around a C5
//! with positions `0..5`:
//!
//! * `X[i]`: vertices whose cycle neighbours are exactly `{i, i+1}`
//! * `Y[i]`: vertices whose cycle neighbours are exactly `{i, i+1, i+2, i+3}`
//! * `R`: vertices with no cycle neighbour
//!
//! Around a C7 only `Y[i]` and `Z[i]` (neighbours `{i, i+1, i+3, i+4}`) occur.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::hole::is_induced_cycle;

/// Vertices outside a fixed C5, split by their neighbourhood on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Structure {
    pub cycle: [usize; 5],
    pub x: [Vec<usize>; 5],
    pub y: [Vec<usize>; 5],
    pub r: Vec<usize>,
}

impl C5Structure {
    pub fn x_union(&self) -> Vec<usize> {
        let mut v = self.x.concat();
        v.sort_unstable();
        v
    }

    pub fn y_union(&self) -> Vec<usize> {
        let mut v = self.y.concat();
        v.sort_unstable();
        v
    }

    /// The vertex of `Y[i]`, if there is exactly one.
    pub fn y_vertex(&self, i: usize) -> Option<usize> {
        match self.y[i % 5].as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// Number of vertices accounted for: the cycle plus every set.
    pub fn vertex_count(&self) -> usize {
        5 + self.x.iter().chain(&self.y).map(Vec::len).sum::<usize>() + self.r.len()
    }
}

/// Vertices outside a fixed C7.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C7Structure {
    pub cycle: [usize; 7],
    pub y: [Vec<usize>; 7],
    pub z: [Vec<usize>; 7],
}

impl C7Structure {
    pub fn vertex_count(&self) -> usize {
        7 + self.y.iter().chain(&self.z).map(Vec::len).sum::<usize>()
    }
}

/// Cycle positions adjacent to `v`, as a bitmask over positions.
fn cycle_mask(g: &Graph, cycle: &[usize], v: usize) -> u32 {
    cycle
        .iter()
        .enumerate()
        .filter(|&(_, &c)| g.has_edge(v, c))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Mask of the positions `start + offsets` on a cycle of length `k`.
fn positions(k: usize, start: usize, offsets: &[usize]) -> u32 {
    offsets.iter().fold(0, |m, &o| m | 1 << ((start + o) % k))
}

fn check_cycle(g: &Graph, cycle: &[usize], len: usize) -> Result<()> {
    if cycle.len() != len {
        return Err(Error::Precondition(format!(
            "expected {len} cycle vertices, got {}",
            cycle.len()
        )));
    }
    for &v in cycle {
        g.check_vertex(v)?;
    }
    if !is_induced_cycle(g, cycle) {
        return Err(Error::Precondition(format!("{cycle:?} is not an induced C{len}")));
    }
    Ok(())
}

fn unclassifiable(stage: &'static str, g: &Graph, cycle: &[usize], v: usize) -> Error {
    let on_cycle: Vec<usize> = cycle.iter().copied().filter(|&c| g.has_edge(v, c)).collect();
    Error::violation(
        stage,
        format!("vertex {v} has cycle neighbourhood {on_cycle:?}"),
        std::iter::once(v).chain(on_cycle).collect(),
    )
}

/// Splits the vertices outside the induced C5 `cycle` into X, Y and R.
pub fn classify_c5(g: &Graph, cycle: &[usize]) -> Result<C5Structure> {
    check_cycle(g, cycle, 5)?;
    let mut s = C5Structure {
        cycle: cycle.try_into().unwrap(),
        x: Default::default(),
        y: Default::default(),
        r: Vec::new(),
    };
    for v in (0..g.n()).filter(|v| !cycle.contains(v)) {
        let mask = cycle_mask(g, cycle, v);
        if mask == 0 {
            s.r.push(v);
        } else if let Some(i) = (0..5).find(|&i| mask == positions(5, i, &[0, 1])) {
            s.x[i].push(v);
        } else if let Some(i) = (0..5).find(|&i| mask == positions(5, i, &[0, 1, 2, 3])) {
            s.y[i].push(v);
        } else {
            return Err(unclassifiable("classify_c5", g, cycle, v));
        }
    }
    Ok(s)
}

/// Splits the vertices outside the induced C7 `cycle` into Y and Z. Each set
/// holds at most one vertex, so the graph has at most 21 vertices.
pub fn classify_c7(g: &Graph, cycle: &[usize]) -> Result<C7Structure> {
    check_cycle(g, cycle, 7)?;
    let mut s = C7Structure {
        cycle: cycle.try_into().unwrap(),
        y: Default::default(),
        z: Default::default(),
    };
    for v in (0..g.n()).filter(|v| !cycle.contains(v)) {
        let mask = cycle_mask(g, cycle, v);
        if let Some(i) = (0..7).find(|&i| mask == positions(7, i, &[0, 1, 2, 3])) {
            s.y[i].push(v);
        } else if let Some(i) = (0..7).find(|&i| mask == positions(7, i, &[0, 1, 3, 4])) {
            s.z[i].push(v);
        } else {
            return Err(unclassifiable("classify_c7", g, cycle, v));
        }
    }
    for (name, sets) in [("Y", &s.y), ("Z", &s.z)] {
        if let Some(i) = (0..7).find(|&i| sets[i].len() > 1) {
            return Err(Error::violation(
                "classify_c7",
                format!("{name}[{i}] has {} vertices", sets[i].len()),
                sets[i].clone(),
            ));
        }
    }
    Ok(s)
}

/// The structural facts checked by [`validate_claims`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    /// `|Y[i]| <= 1`.
    YAtMostOne,
    /// `Y[i]` has no edge to `Y[i+1]`.
    ConsecutiveYCojoin,
    /// `X[i]` is complete to `Y[i]` and `Y[i+3]`.
    XJoinsFlankingY,
    /// If `X[i]` is non-empty and `Y[i]`, `Y[i+3]` are occupied, their
    /// vertices are adjacent.
    FlankingYAdjacent,
    /// `X[i]` has no edge to `Y[i+1]`, `Y[i+2]` or `Y[i+4]`.
    XCojoinsOtherY,
    /// `R` has no edge to `Y`.
    RCojoinsY,
    /// A connected graph with `R` non-empty has `X` non-empty.
    RNeedsX,
    /// Each `X[i]` is a clique.
    XiClique,
    /// `R` is a clique.
    RClique,
    /// `R` is complete to every `X[i]`.
    RJoinsX,
    /// If `R` is non-empty, `|X[i]| <= 2`.
    RLimitsX,
    /// A vertex of `X[i]` has at most one neighbour in `X[j]`, `j != i`.
    OneNeighbourPerX,
    /// The neighbours of a vertex of `X[i]` in `X - X[i]` are pairwise
    /// adjacent.
    XNeighboursAdjacent,
    /// If `X` is non-empty, `|R| <= 2` or `X` is a clique cutset.
    SmallROrXCutset,
    /// If `X[i]`, `X[i+1]`, `X[i+2]` are non-empty and one has at least three
    /// vertices, the other two are singletons.
    BigXForcesSingletons,
    /// A connected graph with `R` non-empty has at most 22 vertices or a
    /// clique cutset.
    RBoundsOrder,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ClaimId::YAtMostOne => "|Y[i]| <= 1",
            ClaimId::ConsecutiveYCojoin => "Y[i] cojoin Y[i+1]",
            ClaimId::XJoinsFlankingY => "X[i] join Y[i] + Y[i+3]",
            ClaimId::FlankingYAdjacent => "X[i] non-empty implies y[i] y[i+3] adjacent",
            ClaimId::XCojoinsOtherY => "X[i] cojoin Y[i+1] + Y[i+2] + Y[i+4]",
            ClaimId::RCojoinsY => "R cojoin Y",
            ClaimId::RNeedsX => "R non-empty implies X non-empty",
            ClaimId::XiClique => "X[i] is a clique",
            ClaimId::RClique => "R is a clique",
            ClaimId::RJoinsX => "R join X[i]",
            ClaimId::RLimitsX => "R non-empty implies |X[i]| <= 2",
            ClaimId::OneNeighbourPerX => "at most one neighbour in each other X[j]",
            ClaimId::XNeighboursAdjacent => "neighbours in X - X[i] are pairwise adjacent",
            ClaimId::SmallROrXCutset => "|R| <= 2 or X is a clique cutset",
            ClaimId::BigXForcesSingletons => "big X[j] among three consecutive forces singletons",
            ClaimId::RBoundsOrder => "R non-empty implies n <= 22 or a clique cutset",
        };
        f.write_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimViolation {
    pub claim: ClaimId,
    pub vertices: Vec<usize>,
}

impl fmt::Display for ClaimViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails on {:?}", self.claim, self.vertices)
    }
}

/// Checks every structural fact on `s`. An empty result means all hold.
///
/// The facts that depend on connectivity are only checked when `g` is
/// connected.
pub fn validate_claims(g: &Graph, s: &C5Structure) -> Vec<ClaimViolation> {
    let mut out = Vec::new();
    let mut fail = |claim, vertices: Vec<usize>| out.push(ClaimViolation { claim, vertices });
    let x = &s.x;
    let y = &s.y;
    let xs = s.x_union();
    let connected = g.is_connected();

    for yi in y.iter().filter(|yi| yi.len() > 1) {
        fail(ClaimId::YAtMostOne, yi.clone());
    }
    for i in 0..5 {
        for &a in &y[i] {
            for &b in &y[(i + 1) % 5] {
                if g.has_edge(a, b) {
                    fail(ClaimId::ConsecutiveYCojoin, vec![a, b]);
                }
            }
        }
    }
    for i in 0..5 {
        for &v in &x[i] {
            for &w in y[i].iter().chain(&y[(i + 3) % 5]) {
                if !g.has_edge(v, w) {
                    fail(ClaimId::XJoinsFlankingY, vec![v, w]);
                }
            }
            for k in [1, 2, 4] {
                for &w in &y[(i + k) % 5] {
                    if g.has_edge(v, w) {
                        fail(ClaimId::XCojoinsOtherY, vec![v, w]);
                    }
                }
            }
        }
        if let (Some(&v), Some(a), Some(b)) = (x[i].first(), s.y_vertex(i), s.y_vertex(i + 3)) {
            if !g.has_edge(a, b) {
                fail(ClaimId::FlankingYAdjacent, vec![v, a, b]);
            }
        }
    }
    for &r in &s.r {
        for w in s.y_union() {
            if g.has_edge(r, w) {
                fail(ClaimId::RCojoinsY, vec![r, w]);
            }
        }
    }
    if connected && !s.r.is_empty() && xs.is_empty() {
        fail(ClaimId::RNeedsX, s.r.clone());
    }
    for (i, xi) in x.iter().enumerate() {
        if let Some(pair) = non_adjacent_pair(g, xi) {
            fail(ClaimId::XiClique, pair);
        }
        for &r in &s.r {
            for &v in xi {
                if !g.has_edge(r, v) {
                    fail(ClaimId::RJoinsX, vec![r, v]);
                }
            }
        }
        if !s.r.is_empty() && xi.len() > 2 {
            fail(ClaimId::RLimitsX, xi.clone());
        }
        for &v in xi {
            for xj in x.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, xj)| xj) {
                let nb: Vec<usize> = xj.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
                if nb.len() > 1 {
                    fail(ClaimId::OneNeighbourPerX, std::iter::once(v).chain(nb).collect());
                }
            }
            let nb: Vec<usize> = xs
                .iter()
                .copied()
                .filter(|w| !xi.contains(w) && g.has_edge(v, *w))
                .collect();
            if let Some(pair) = non_adjacent_pair(g, &nb) {
                fail(ClaimId::XNeighboursAdjacent, std::iter::once(v).chain(pair).collect());
            }
        }
    }
    if let Some(pair) = non_adjacent_pair(g, &s.r) {
        fail(ClaimId::RClique, pair);
    }
    if !xs.is_empty() && s.r.len() > 2 && !is_clique_cutset(g, &xs) {
        fail(ClaimId::SmallROrXCutset, xs.clone());
    }
    for i in 0..5 {
        let run = [i, (i + 1) % 5, (i + 2) % 5];
        if run.iter().all(|&j| !x[j].is_empty()) {
            for &j in &run {
                let others: Vec<usize> = run.iter().copied().filter(|&k| k != j).collect();
                if x[j].len() >= 3 && others.iter().any(|&k| x[k].len() != 1) {
                    fail(
                        ClaimId::BigXForcesSingletons,
                        run.iter().flat_map(|&k| x[k].clone()).collect(),
                    );
                }
            }
        }
    }
    if connected
        && !s.r.is_empty()
        && g.n() > 22
        && crate::decomposition::find_clique_cutset(g).ok().flatten().is_none()
    {
        fail(ClaimId::RBoundsOrder, s.r.clone());
    }
    out
}

fn non_adjacent_pair(g: &Graph, vs: &[usize]) -> Option<Vec<usize>> {
    vs.iter()
        .enumerate()
        .find_map(|(k, &a)| vs[k + 1..].iter().find(|&&b| !g.has_edge(a, b)).map(|&b| vec![a, b]))
}

fn is_clique_cutset(g: &Graph, s: &[usize]) -> bool {
    if !g.is_clique(s) {
        return false;
    }
    let mut rest = g.vertex_set();
    rest.difference_with(&g.set_of(s));
    g.components_within(&rest).len() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{co_petersen, cycle, cycle_plus};
    use crate::recognition::{find_hole, is_in_class};

    fn c5_plus(attach: &[&[usize]], extra: &[(usize, usize)]) -> Graph {
        let n = 5 + attach.len();
        let mut g = Graph::new(n);
        for (u, v) in cycle(5).edges() {
            g.add_edge(u, v);
        }
        for (k, nb) in attach.iter().enumerate() {
            for &c in *nb {
                g.add_edge(5 + k, c);
            }
        }
        for &(u, v) in extra {
            g.add_edge(u, v);
        }
        g
    }

    const C5: [usize; 5] = [0, 1, 2, 3, 4];

    #[test]
    fn single_x_and_y_vertex() {
        let s = classify_c5(&cycle_plus(&[1, 2]), &C5).unwrap();
        assert_eq!(s.x[1], vec![5]);
        assert_eq!(s.vertex_count(), 6);
        assert!(s.y.iter().all(Vec::is_empty) && s.r.is_empty());
        let s = classify_c5(&cycle_plus(&[1, 2, 3, 4]), &C5).unwrap();
        assert_eq!(s.y[1], vec![5]);
        assert!(validate_claims(&cycle_plus(&[1, 2, 3, 4]), &s).is_empty());
    }

    #[test]
    fn bad_neighbourhoods_are_rejected() {
        for attach in [&[0][..], &[0, 1, 2], &[0, 1, 2, 3, 4], &[0, 2]] {
            let err = classify_c5(&cycle_plus(attach), &C5).unwrap_err();
            assert!(matches!(err, Error::StructureViolation { ref vertices, .. } if vertices[0] == 5));
        }
        assert!(matches!(classify_c5(&cycle(6), &C5), Err(Error::Precondition(_))));
    }

    #[test]
    fn co_petersen_has_one_y_per_position() {
        let g = co_petersen();
        let hole = find_hole(&g, 5).unwrap();
        let s = classify_c5(&g, &hole).unwrap();
        assert!(s.y.iter().all(|y| y.len() == 1));
        assert!(s.x.iter().all(Vec::is_empty) && s.r.is_empty());
        assert!(validate_claims(&g, &s).is_empty());
    }

    #[test]
    fn bare_cycle_is_vacuous() {
        let s = classify_c5(&cycle(5), &C5).unwrap();
        assert_eq!(s.vertex_count(), 5);
        assert!(validate_claims(&cycle(5), &s).is_empty());
    }

    #[test]
    fn x_to_next_y_edge_is_flagged() {
        // x in X[1], y in Y[2], plus the edge x y.
        let g = c5_plus(&[&[1, 2], &[2, 3, 4, 0]], &[(5, 6)]);
        let s = classify_c5(&g, &C5).unwrap();
        let v = validate_claims(&g, &s);
        assert!(v
            .iter()
            .any(|c| c.claim == ClaimId::XCojoinsOtherY && c.vertices == [5, 6]));
        assert!(!is_in_class(&g));
    }

    #[test]
    fn flagged_facts_have_forbidden_subgraphs() {
        // Two non-adjacent X[0] vertices.
        let g = c5_plus(&[&[0, 1], &[0, 1]], &[]);
        let v = validate_claims(&g, &classify_c5(&g, &C5).unwrap());
        assert!(v.iter().any(|c| c.claim == ClaimId::XiClique));
        assert!(!is_in_class(&g));
        // R vertex away from an X vertex.
        let g = c5_plus(&[&[0, 1], &[]], &[]);
        let v = validate_claims(&g, &classify_c5(&g, &C5).unwrap());
        assert!(v.iter().any(|c| c.claim == ClaimId::RJoinsX));
    }

    #[test]
    fn c7_classes() {
        let c7: Vec<usize> = (0..7).collect();
        let s = classify_c7(&cycle(7), &c7).unwrap();
        assert_eq!(s.vertex_count(), 7);

        let mut g = Graph::new(8);
        for (u, v) in cycle(7).edges() {
            g.add_edge(u, v);
        }
        for c in [1, 2, 3, 4] {
            g.add_edge(7, c);
        }
        assert_eq!(classify_c7(&g, &c7).unwrap().y[1], vec![7]);
        g.remove_edge(7, 3);
        g.add_edge(7, 5);
        assert_eq!(classify_c7(&g, &c7).unwrap().z[1], vec![7]);
        g.remove_edge(7, 5);
        assert!(classify_c7(&g, &c7).is_err());
    }
}
