use super::Graph;

/// The line graph of a host graph, plus the host edge behind each vertex.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the host edge `(u, v)`, `u < v`, represented by vertex `i`.
    pub edges: Vec<(usize, usize)>,
}

/// Builds L(g): one vertex per edge of `g`, two adjacent iff the edges share
/// an endpoint. Vertices follow the lexicographic order of `g.edges()`.
pub fn line_graph(g: &Graph) -> LineGraph {
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut graph = Graph::new(edges.len());
    for at in &incident {
        for (k, &a) in at.iter().enumerate() {
            for &b in &at[k + 1..] {
                graph.add_edge(a, b);
            }
        }
    }
    LineGraph { graph, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{claw, complete, cycle, path};

    #[test]
    fn small_line_graphs() {
        assert_eq!(line_graph(&claw()).graph, complete(3));
        assert_eq!(line_graph(&path(4)).graph, path(3));
        let lc5 = line_graph(&cycle(5)).graph;
        assert_eq!(lc5.edge_count(), 5);
        assert!((0..5).all(|v| lc5.degree(v) == 2));
        assert!(lc5.is_connected());
        assert_eq!(line_graph(&Graph::new(4)).graph.n(), 0);
    }

    #[test]
    fn edge_map_matches_incidence() {
        let g = complete(4);
        let lg = line_graph(&g);
        for a in 0..lg.edges.len() {
            for b in a + 1..lg.edges.len() {
                let (p, q) = (lg.edges[a], lg.edges[b]);
                let share = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
                assert_eq!(lg.graph.has_edge(a, b), share);
            }
        }
    }
}
