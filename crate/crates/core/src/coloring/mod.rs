//! Coloring engines and the main pipeline for class members.

mod c5_cases;
mod exact;
mod lists;

use serde::{Deserialize, Serialize};

use crate::decomposition::{decompose, recombine};
use crate::error::{Error, Result};
use crate::graph::{max_matching, Coloring, Graph};
use crate::recognition::{clique_number, find_hole, in_class, stability_number};
use crate::structure::{classify_c5, classify_c7, validate_claims};

pub use c5_cases::{color_k_colorable_case, color_three_xi_case, good_stable_set};
pub use exact::{dsatur_greedy, exact_color, DEFAULT_BUDGET};
pub use lists::{l_color_three_cliques, ListInstance};

/// Clique number from which atoms are handled structurally rather than by
/// the exact solver; vertices of smaller degree are colored last.
pub const STRUCTURAL_THRESHOLD: usize = 14;

/// Optimal coloring of a graph with stability number at most two.
///
/// Color classes have at most two vertices, so an optimal coloring pairs up
/// as many vertices as possible along non-edges: a maximum matching of the
/// complement.
pub fn color_alpha2(g: &Graph) -> Result<Coloring> {
    let (alpha, stable) = stability_number(g);
    if alpha > 2 {
        return Err(Error::Precondition(format!(
            "stability number is {alpha} (stable set {stable:?}), expected at most 2"
        )));
    }
    let m = max_matching(&g.complement());
    let mut colors = vec![usize::MAX; g.n()];
    for (c, &(u, v)) in m.edges.iter().enumerate() {
        colors[u] = c;
        colors[v] = c;
    }
    for (next, c) in (m.size()..).zip(colors.iter_mut().filter(|c| **c == usize::MAX)) {
        *c = next;
    }
    Ok(Coloring::new(colors))
}

/// How an atom was colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Trivial,
    StabilityTwo,
    Perfect,
    SevenHole,
    ZeroVertices,
    SmallClique,
    LowDegree,
    ThreeBigSets,
}

/// Result of [`color_class_graph_with`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassColoring {
    pub coloring: Coloring,
    /// A maximum clique of the input.
    pub clique: Vec<usize>,
    /// Route taken by each atom, in decomposition order, over all components.
    pub routes: Vec<Route>,
}

impl ClassColoring {
    /// True when the clique certifies the coloring optimal.
    pub fn clique_certified(&self) -> bool {
        self.coloring.color_count() == self.clique.len()
    }
}

/// Optimal coloring of a class member, with the default exact-solver budget.
pub fn color_class_graph(g: &Graph) -> Result<Coloring> {
    color_class_graph_with(g, DEFAULT_BUDGET).map(|r| r.coloring)
}

/// Optimal coloring of a class member.
///
/// Components are colored separately and each is split into atoms along
/// clique cutsets. An atom is colored by the first route that applies:
///
/// 1. stability number at most two: complement matching;
/// 2. no C5 and no C7 (perfect): exact solver, checked against the clique
///    number;
/// 3. a C7: at most 21 vertices, exact solver;
/// 4. a C5 with a vertex far from it: at most 22 vertices, exact solver;
/// 5. clique number below 14: exact solver;
/// 6. a vertex of degree at most 13: color the rest, then give the vertex a
///    free color;
/// 7. otherwise the X-sets around the C5 are three big sets at positions
///    `i, i+1, i+3`, colored with clique-number many colors.
///
/// Exact-solver calls share `budget` nodes each and report
/// [`Error::BudgetExceeded`] rather than return a worse coloring.
pub fn color_class_graph_with(g: &Graph, budget: u64) -> Result<ClassColoring> {
    if let Err(w) = in_class(g) {
        return Err(Error::NotInClass(w));
    }
    let mut routes = Vec::new();
    let coloring = color_any(g, budget, &mut routes)?;
    if let Err(edge) = coloring.verify(g) {
        return Err(Error::violation(
            "color_class_graph",
            "final coloring is not proper",
            edge.map_or(Vec::new(), |(a, b)| vec![a, b]),
        ));
    }
    let (_, clique) = clique_number(g);
    Ok(ClassColoring {
        coloring,
        clique,
        routes,
    })
}

/// Colors each component and merges the colorings.
fn color_any(g: &Graph, budget: u64, routes: &mut Vec<Route>) -> Result<Coloring> {
    let mut colors = vec![0; g.n()];
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp)?;
        let c = color_connected(&sub.graph, budget, routes)?;
        for (k, &v) in sub.origin.iter().enumerate() {
            colors[v] = c.color(k);
        }
    }
    Ok(Coloring::new(colors))
}

fn color_connected(g: &Graph, budget: u64, routes: &mut Vec<Route>) -> Result<Coloring> {
    let tree = decompose(g)?;
    let mut atom_colorings = Vec::new();
    for atom in tree.atoms() {
        let sub = g.induced_subgraph(atom)?;
        atom_colorings.push(color_atom(&sub.graph, budget, routes)?);
    }
    recombine(g, &tree, &atom_colorings)
}

fn color_atom(g: &Graph, budget: u64, routes: &mut Vec<Route>) -> Result<Coloring> {
    let n = g.n();
    if n <= 1 {
        routes.push(Route::Trivial);
        return Ok(Coloring::new(vec![0; n]));
    }
    if stability_number(g).0 <= 2 {
        routes.push(Route::StabilityTwo);
        return color_alpha2(g);
    }
    let (omega, clique) = clique_number(g);
    let c5 = find_hole(g, 5);
    let c7 = find_hole(g, 7);

    let Some(c5) = c5 else {
        if let Some(c7) = c7 {
            routes.push(Route::SevenHole);
            classify_c7(g, &c7)?;
            return exact_color(g, budget);
        }
        routes.push(Route::Perfect);
        let c = exact_color(g, budget)?;
        if c.color_count() != omega {
            return Err(Error::violation(
                "perfect",
                format!(
                    "graph without odd holes needs {} colors, clique number {omega}",
                    c.color_count()
                ),
                clique,
            ));
        }
        return Ok(c);
    };
    if let Some(c7) = c7 {
        routes.push(Route::SevenHole);
        classify_c7(g, &c7)?;
        return exact_color(g, budget);
    }

    let s = classify_c5(g, &c5)?;
    let violations = validate_claims(g, &s);
    if let Some(first) = violations.first() {
        if cfg!(debug_assertions) {
            return Err(Error::violation(
                "validate_claims",
                first.to_string(),
                first.vertices.clone(),
            ));
        }
        log::warn!("structural check failed: {first}");
    }
    if !s.r.is_empty() {
        routes.push(Route::ZeroVertices);
        if n > 22 {
            return Err(Error::violation(
                "zero_vertices",
                format!("atom with 0-vertices has {n} vertices"),
                s.r.clone(),
            ));
        }
        return exact_color(g, budget);
    }
    if omega < STRUCTURAL_THRESHOLD {
        routes.push(Route::SmallClique);
        return exact_color(g, budget);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) < STRUCTURAL_THRESHOLD) {
        routes.push(Route::LowDegree);
        return extend_low_degree(g, v, omega, &clique, budget, routes);
    }

    routes.push(Route::ThreeBigSets);
    let big: Vec<usize> = (0..5).filter(|&j| s.x[j].len() >= 3).collect();
    if let Some(j) = (0..5).find(|&j| (1..3).contains(&s.x[j].len())) {
        return Err(Error::violation(
            "three_big_sets",
            format!("X[{j}] is non-empty but small"),
            s.x[j].clone(),
        ));
    }
    let layout_ok = big.len() == 3 && (0..5).any(|i| big == sorted([i, (i + 1) % 5, (i + 3) % 5]));
    if !layout_ok {
        return Err(Error::violation(
            "three_big_sets",
            format!("big X-sets at positions {big:?}, expected i, i+1, i+3"),
            s.x_union(),
        ));
    }
    color_k_colorable_case(g, &s, budget)
}

fn sorted(mut a: [usize; 3]) -> Vec<usize> {
    a.sort_unstable();
    a.to_vec()
}

/// Colors `g - v` optimally, then gives `v` its smallest free color. A new
/// color is only accepted when the result still matches the clique number.
fn extend_low_degree(
    g: &Graph,
    v: usize,
    omega: usize,
    clique: &[usize],
    budget: u64,
    routes: &mut Vec<Route>,
) -> Result<Coloring> {
    let rest = g.without(&[v])?;
    let inner = color_any(&rest.graph, budget, routes)?.normalized();
    let k = inner.color_count();
    let mut colors = vec![0; g.n()];
    for (i, &u) in rest.origin.iter().enumerate() {
        colors[u] = inner.color(i);
    }
    let used: std::collections::BTreeSet<usize> = g.neighbor_iter(v).map(|u| colors[u]).collect();
    let free = (0..).find(|c| !used.contains(c)).unwrap();
    if free >= k && k + 1 > omega {
        return Err(Error::violation(
            "low_degree",
            format!("vertex {v} needs color {} beyond the {k} colors of the rest", free + 1),
            clique.to_vec(),
        ));
    }
    colors[v] = free;
    Ok(Coloring::new(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{co_petersen, complete, cycle, path};

    #[test]
    fn alpha2_examples() {
        assert_eq!(color_alpha2(&cycle(5)).unwrap().color_count(), 3);
        assert_eq!(color_alpha2(&complete(5)).unwrap().color_count(), 5);
        let co_c7 = cycle(7).complement();
        let c = color_alpha2(&co_c7).unwrap();
        assert!(c.is_proper(&co_c7));
        assert_eq!(c.color_count(), 4);
        assert!(matches!(color_alpha2(&cycle(7)), Err(Error::Precondition(_))));
    }

    #[test]
    fn class_graph_examples() {
        let r = color_class_graph_with(&co_petersen(), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.coloring.color_count(), 5);
        assert_eq!(r.clique.len(), 4);
        assert_eq!(color_class_graph(&complete(6)).unwrap().color_count(), 6);
        assert_eq!(color_class_graph(&Graph::new(0)).unwrap().color_count(), 0);
        assert_eq!(color_class_graph(&Graph::new(1)).unwrap().color_count(), 1);
        assert_eq!(color_class_graph(&path(4)).unwrap().color_count(), 2);
        assert_eq!(color_class_graph(&cycle(7)).unwrap().color_count(), 3);
        assert!(matches!(color_class_graph(&cycle(8)), Err(Error::NotInClass(_))));
    }
}
