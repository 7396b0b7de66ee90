//! Benchmark inputs shared by the criterion targets in `benches/`.

use clawcolor::oracle::{constructive_c5, generate, C5Shape, GenSpec, Strategy};
use clawcolor::Graph;

/// The first `count` class members of a deterministic stream.
pub fn members(min_n: usize, max_n: usize, strategy: Strategy, count: usize) -> Vec<Graph> {
    generate(&GenSpec::new(min_n, max_n, 1, strategy)).take(count).collect()
}

/// A single atom with three linked X-sets of size `k` around a C5; its
/// clique number is `k + 2`.
pub fn three_big_sets(k: usize, rng: &mut impl rand::Rng) -> Graph {
    let shape = C5Shape {
        x_sizes: [0, k, k, 0, k],
        y: [false; 5],
        r: 0,
        cross_density: 1.0,
        y_density: 0.5,
        linked: true,
    };
    constructive_c5(rng, &shape).expect("linked three-set shape is a class member")
}
