//! Named graphs used as fixtures and as forbidden patterns.

use super::Graph;

/// The complete graph K_n.
pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// The chordless path P_n on `0, 1, .., n-1`.
pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

/// The chordless cycle C_n on `0, 1, .., n-1` in cyclic order (n >= 3).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
}

/// The star K_{1,k} with center 0.
pub fn star(k: usize) -> Graph {
    Graph::from_fn(k + 1, |u, _| u == 0)
}

/// The claw K_{1,3}: center 0, leaves 1, 2, 3.
pub fn claw() -> Graph {
    star(3)
}

/// Outer cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Complement of the Petersen graph: omega = 4, chi = 5.
pub fn co_petersen() -> Graph {
    petersen().complement()
}

/// C_5 on `0..5` plus a hub `5` adjacent to every cycle vertex.
pub fn five_wheel() -> Graph {
    cycle_plus(&[0, 1, 2, 3, 4])
}

/// C_5 on `0..5` plus `5`, an adjacent twin of vertex `1` (adjacent to 0, 1, 2).
pub fn c5_twin() -> Graph {
    cycle_plus(&[0, 1, 2])
}

/// C_5 on `0..5` plus one extra vertex `5` with the given cycle neighbours.
pub fn cycle_plus(attach: &[usize]) -> Graph {
    let mut g = Graph::new(6);
    for (u, v) in cycle(5).edges() {
        g.add_edge(u, v);
    }
    for &v in attach {
        g.add_edge(v, 5);
    }
    g
}

/// P_5 on `0..5` plus `5`, an adjacent twin of the middle vertex `2`
/// (adjacent to 1, 2, 3).
pub fn p5_twin() -> Graph {
    let mut g = Graph::new(6);
    for (u, v) in path(5).edges() {
        g.add_edge(u, v);
    }
    for v in [1, 2, 3] {
        g.add_edge(v, 5);
    }
    g
}

/// K_5 minus the edge `3 4`.
pub fn k5_minus_e() -> Graph {
    let mut g = complete(5);
    g.remove_edge(3, 4);
    g
}

/// Disjoint union of two graphs; the second is shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::new(a.n() + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(a.n() + u, a.n() + v);
    }
    g
}
