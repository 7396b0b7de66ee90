//! Simple undirected graphs backed by per-vertex bitsets.

mod families;
pub mod io;
mod line;
mod matching;

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use families::*;
pub use io::{read_graph, read_graph_file, write_graph, Format};
pub use line::{line_graph, LineGraph};
pub use matching::{greedy_matching, max_matching, Matching};

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex, so adjacency tests are O(1)
/// and neighbourhood intersections cost O(n / 64).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds the graph on `n` vertices whose edges are the pairs `u < v`
    /// accepted by `adjacent`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Attaches one text label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Adds the edge `uv`.
    ///
    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Bitset holding every vertex.
    pub fn vertex_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n());
        s.insert_range(..);
        s
    }

    /// Bitset with exactly the given vertices.
    pub fn set_of(&self, vs: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n());
        for &v in vs {
            s.insert(v);
        }
        s
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components of the subgraph induced by `within`, each sorted,
    /// ordered by smallest vertex.
    pub fn components_within(&self, within: &FixedBitSet) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n());
        let mut out = Vec::new();
        for start in within.ones() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for w in self.adj[v].ones() {
                    if within.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertex_set())
    }

    /// The 0-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().len() == 1
    }

    /// The complement: same vertices, `uv` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// The subgraph induced by `vs`. Vertex `i` of the result is `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Subgraph> {
        let mut seen = FixedBitSet::with_capacity(self.n());
        for &v in vs {
            self.check_vertex(v)?;
            if seen.put(v) {
                return Err(Error::Precondition(format!("vertex {v} listed twice")));
            }
        }
        let graph = Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j]));
        let graph = Graph {
            labels: self.labels.as_ref().map(|l| vs.iter().map(|&v| l[v].clone()).collect()),
            ..graph
        };
        Ok(Subgraph {
            graph,
            origin: vs.to_vec(),
        })
    }

    /// The subgraph induced by all vertices except `removed`.
    pub fn without(&self, removed: &[usize]) -> Result<Subgraph> {
        for &v in removed {
            self.check_vertex(v)?;
        }
        let gone = self.set_of(removed);
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone.contains(v)).collect();
        self.induced_subgraph(&keep)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// An induced subgraph together with the host index of each of its vertices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

impl Subgraph {
    /// Maps local vertex indices back to host indices.
    pub fn lift(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.origin[v]).collect()
    }
}

/// Outcome of comparing two disjoint vertex sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetRelation {
    /// Every pair across the sets is an edge.
    Join,
    /// No pair across the sets is an edge.
    Cojoin,
    Mixed,
}

/// Classifies the edges between two disjoint vertex sets. When either set is
/// empty both relations hold vacuously and `Cojoin` is reported.
pub fn join_cojoin(g: &Graph, xs: &[usize], ys: &[usize]) -> Result<SetRelation> {
    for &v in xs.iter().chain(ys) {
        g.check_vertex(v)?;
    }
    let yset = g.set_of(ys);
    if let Some(&v) = xs.iter().find(|&&v| yset.contains(v)) {
        return Err(Error::OverlappingSets(v));
    }
    let pairs = xs.len() * ys.len();
    let edges: usize = xs.iter().map(|&x| g.neighbors(x).intersection_count(&yset)).sum();
    Ok(if edges == 0 {
        SetRelation::Cojoin
    } else if edges == pairs {
        SetRelation::Join
    } else {
        SetRelation::Mixed
    })
}

/// A vertex coloring, indexed by vertex. Colors are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn empty() -> Self {
        Coloring { colors: Vec::new() }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Checks that the coloring covers `g` and is proper. On failure returns
    /// the first monochromatic edge, or `None` inside the error when the
    /// lengths disagree.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), Option<(usize, usize)>> {
        if self.colors.len() != g.n() {
            return Err(None);
        }
        match g.edges().into_iter().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            Some(e) => Err(Some(e)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.verify(g).is_ok()
    }

    /// Relabels colors to `0..k` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let k4 = complete(4);
        assert_eq!(k4.complement(), Graph::new(4));
        assert_eq!(Graph::new(0).complement(), Graph::new(0));
        // C5 0-1-2-3-4 is isomorphic to its complement via i -> 2i.
        let c5 = cycle(5);
        let co = c5.complement();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert_eq!(c5.has_edge(u, v), co.has_edge((2 * u) % 5, (2 * v) % 5));
                }
            }
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let p = cycle(5).induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p.graph, path(3));
        assert_eq!(p.origin, vec![1, 2, 3]);
        assert_eq!(cycle(5).induced_subgraph(&[]).unwrap().graph.n(), 0);
        assert_eq!(complete(5).induced_subgraph(&[0, 2, 3, 4]).unwrap().graph, complete(4));
        assert!(matches!(
            cycle(5).induced_subgraph(&[7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn join_cojoin_examples() {
        assert_eq!(join_cojoin(&complete(4), &[], &[1]).unwrap(), SetRelation::Cojoin);
        assert_eq!(join_cojoin(&complete(4), &[0, 1], &[2, 3]).unwrap(), SetRelation::Join);
        assert_eq!(join_cojoin(&cycle(5), &[0], &[2, 3]).unwrap(), SetRelation::Cojoin);
        assert_eq!(join_cojoin(&cycle(5), &[0], &[1, 3]).unwrap(), SetRelation::Mixed);
        assert!(matches!(
            join_cojoin(&cycle(5), &[0, 1], &[1]),
            Err(Error::OverlappingSets(1))
        ));
    }

    #[test]
    fn from_edges_rejects_loops_and_dedupes() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1))));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn labels_follow_induced_subgraphs() {
        let g = path(3).with_labels(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let s = g.induced_subgraph(&[2, 0]).unwrap();
        assert_eq!(s.graph.labels().unwrap(), &["c".to_string(), "a".to_string()]);
    }

    #[test]
    fn coloring_verification() {
        let c = Coloring::new(vec![0, 1, 0, 1, 2]);
        assert!(c.is_proper(&cycle(5)));
        assert_eq!(c.color_count(), 3);
        let bad = Coloring::new(vec![0, 1, 0, 1, 0]);
        assert_eq!(bad.verify(&cycle(5)), Err(Some((0, 4))));
        assert_eq!(Coloring::new(vec![5, 9, 5]).normalized().colors(), &[0, 1, 0]);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(cycle(6).is_connected());
        assert!(Graph::new(0).is_connected());
    }
}
