//! Deterministic streams of class members and random list instances.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::ListInstance;
use crate::graph::Graph;
use crate::recognition::in_class;

/// Consecutive rejected draws after which a random stream gives up.
const MAX_REJECTIONS: usize = 20_000;

/// Rounds of edge removal when repairing a constructive draw.
const REPAIR_ROUNDS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Every labeled graph, by increasing vertex count and edge mask.
    ExhaustiveLabeled,
    /// Dense random graphs kept only when they are class members.
    RandomFiltered,
    /// A C5 with attached X, Y and R vertices of random shape.
    ConstructiveC5,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::ExhaustiveLabeled,
        Strategy::RandomFiltered,
        Strategy::ConstructiveC5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::ExhaustiveLabeled => "exhaustive_labeled",
            Strategy::RandomFiltered => "random_filtered",
            Strategy::ConstructiveC5 => "constructive_c5",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.replace('-', "_");
        Strategy::ALL.into_iter().find(|st| st.name() == key).ok_or_else(|| {
            format!("unknown strategy `{s}` (expected exhaustive_labeled, random_filtered or constructive_c5)")
        })
    }
}

/// What [`generate`] should produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
    pub strategy: Strategy,
}

impl GenSpec {
    pub fn new(min_n: usize, max_n: usize, seed: u64, strategy: Strategy) -> Self {
        GenSpec {
            min_n,
            max_n,
            seed,
            strategy,
        }
    }
}

/// Class members with `min_n..=max_n` vertices.
///
/// The exhaustive stream is finite. The random streams are unbounded, but
/// stop after a long run of rejected draws, so an infeasible `GenSpec` yields an
/// empty or short stream. The same `GenSpec` always yields the same sequence.
pub fn generate(spec: &GenSpec) -> Box<dyn Iterator<Item = Graph>> {
    let rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (lo, hi) = (spec.min_n, spec.max_n);
    match spec.strategy {
        Strategy::ExhaustiveLabeled => Box::new(
            (lo..=hi)
                .flat_map(|n| {
                    let pairs = n * n.saturating_sub(1) / 2;
                    (0u64..1 << pairs).map(move |mask| from_mask(n, mask))
                })
                .filter(|g| in_class(g).is_ok()),
        ),
        Strategy::RandomFiltered => Box::new(Rejecting::new(rng, move |rng: &mut ChaCha8Rng| {
            (lo <= hi).then(|| {
                let n = rng.gen_range(lo..=hi);
                let p = rng.gen_range(0.5..0.95);
                Graph::from_fn(n, |_, _| rng.gen_bool(p))
            })
        })),
        Strategy::ConstructiveC5 => Box::new(Rejecting::new(rng, move |rng: &mut ChaCha8Rng| {
            let shape = C5Shape::random(rng, lo, hi)?;
            constructive_c5(rng, &shape).filter(|g| (lo..=hi).contains(&g.n()))
        })),
    }
}

/// Graph on `n` vertices whose edges are the set bits of `mask`, pairs
/// taken in lexicographic order.
fn from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// Repeats a draw until it yields a class member.
struct Rejecting<F> {
    rng: ChaCha8Rng,
    draw: F,
    exhausted: bool,
}

impl<F> Rejecting<F> {
    fn new(rng: ChaCha8Rng, draw: F) -> Self {
        Rejecting {
            rng,
            draw,
            exhausted: false,
        }
    }
}

impl<F: FnMut(&mut ChaCha8Rng) -> Option<Graph>> Iterator for Rejecting<F> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.exhausted {
            return None;
        }
        for _ in 0..MAX_REJECTIONS {
            if let Some(g) = (self.draw)(&mut self.rng) {
                if in_class(&g).is_ok() {
                    return Some(g);
                }
            }
        }
        self.exhausted = true;
        None
    }
}

/// Sizes of the sets attached to the cycle by [`constructive_c5`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct C5Shape {
    /// `|X[i]|`: vertices adjacent to exactly cycle positions `i, i+1`.
    pub x_sizes: [usize; 5],
    /// Whether `Y[i]` holds a vertex adjacent to positions `i..=i+3`.
    pub y: [bool; 5],
    /// Size of the clique `R` with no neighbour on the cycle.
    pub r: usize,
    /// Chance that a free pair between two X-sets becomes an edge.
    pub cross_density: f64,
    /// Chance that `Y[i]` and `Y[i+2]` are adjacent.
    pub y_density: f64,
    /// Link the X-sets by transversal cliques (one vertex from each
    /// non-empty set) instead of independent matchings.
    pub linked: bool,
}

impl C5Shape {
    /// Only the given X-sets, no Y, no R.
    pub fn x_only(x_sizes: [usize; 5], cross_density: f64) -> Self {
        C5Shape {
            x_sizes,
            y: [false; 5],
            r: 0,
            cross_density,
            y_density: 0.5,
            linked: false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        5 + self.x_sizes.iter().sum::<usize>() + self.y.iter().filter(|&&b| b).count() + self.r
    }

    /// A shape with `lo..=hi` vertices, biased towards big X-sets and present
    /// Y vertices; `None` if `hi < 5`.
    fn random(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Option<C5Shape> {
        if hi < 5 {
            return None;
        }
        let n = rng.gen_range(lo.max(5)..=hi);
        let mut shape = C5Shape {
            x_sizes: [0; 5],
            y: [false; 5],
            r: 0,
            cross_density: rng.gen_range(0.0..0.8),
            y_density: 0.5,
            linked: rng.gen_bool(0.3),
        };
        let mut left = n - 5;
        for i in 0..5 {
            if left > 0 && rng.gen_bool(0.35) {
                shape.y[i] = true;
                left -= 1;
            }
        }
        if left > 0 && rng.gen_bool(0.15) {
            shape.r = rng.gen_range(1..=left.min(3));
            left -= shape.r;
        }
        let active: Vec<usize> = match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..5);
                vec![i, (i + 1) % 5, (i + 3) % 5]
            }
            1 => (0..5).filter(|_| rng.gen_bool(0.6)).collect(),
            _ => (0..5).collect(),
        };
        if active.is_empty() {
            shape.r = 0;
        } else {
            for _ in 0..left {
                shape.x_sizes[*active.choose(rng).unwrap()] += 1;
            }
        }
        if shape.r > 0 {
            for k in &mut shape.x_sizes {
                *k = (*k).min(2);
            }
        }
        Some(shape)
    }
}

/// A graph built around the induced cycle `0..5`, or `None` if the draw
/// could not be repaired into a class member.
///
/// Vertices are the cycle, then `X[0..5]` in order, then the present Y
/// vertices by position, then `R`. Every X-set and `R` is a clique; `R` is
/// complete to `X` and has no edge to `Y`; `X[i]` is complete to `Y[i]` and
/// `Y[i+3]` and has no other Y-neighbour. Between two X-sets a random partial
/// matching is drawn, or with `linked` a family of transversal cliques.
/// Consecutive Y vertices are never adjacent, and `Y[i]`, `Y[i+3]` are
/// adjacent when `X[i]` is non-empty. Cross-X and optional Y edges inside a
/// forbidden subgraph are then removed until the graph is a class member.
pub fn constructive_c5(rng: &mut impl Rng, shape: &C5Shape) -> Option<Graph> {
    let n = shape.vertex_count();
    let mut g = Graph::new(n);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
    }
    let mut next = 5;
    let x: [Vec<usize>; 5] = std::array::from_fn(|i| {
        let xi: Vec<usize> = (next..next + shape.x_sizes[i]).collect();
        next += shape.x_sizes[i];
        xi
    });
    for (i, xi) in x.iter().enumerate() {
        clique(&mut g, xi);
        for &v in xi {
            g.add_edge(v, i);
            g.add_edge(v, (i + 1) % 5);
        }
    }
    let y: [Option<usize>; 5] = std::array::from_fn(|i| {
        shape.y[i].then(|| {
            next += 1;
            next - 1
        })
    });
    for (i, w) in y.iter().enumerate() {
        if let Some(w) = *w {
            for k in 0..4 {
                g.add_edge(w, (i + k) % 5);
            }
        }
    }
    let r: Vec<usize> = (next..n).collect();
    clique(&mut g, &r);
    for &v in &r {
        for xi in &x {
            for &u in xi {
                g.add_edge(v, u);
            }
        }
    }
    for i in 0..5 {
        for k in [0, 3] {
            if let Some(w) = y[(i + k) % 5] {
                for &v in &x[i] {
                    g.add_edge(v, w);
                }
            }
        }
    }

    let mut optional = Vec::new();
    for i in 0..5 {
        if let (Some(a), Some(b)) = (y[i], y[(i + 2) % 5]) {
            if !x[(i + 2) % 5].is_empty() {
                g.add_edge(a, b);
            } else if rng.gen_bool(shape.y_density) {
                g.add_edge(a, b);
                optional.push((a, b));
            }
        }
    }
    if shape.linked {
        let mut sets = x.clone();
        for set in &mut sets {
            set.shuffle(rng);
        }
        let rounds = sets.iter().map(Vec::len).max().unwrap_or(0);
        for t in 0..rounds {
            let picked: Vec<usize> = sets
                .iter()
                .filter_map(|set| set.get(t).copied())
                .filter(|_| rng.gen_bool(shape.cross_density))
                .collect();
            for (k, &a) in picked.iter().enumerate() {
                for &b in &picked[k + 1..] {
                    g.add_edge(a, b);
                    optional.push((a, b));
                }
            }
        }
    } else {
        for i in 0..5 {
            for j in i + 1..5 {
                let mut left = x[i].clone();
                let mut right = x[j].clone();
                left.shuffle(rng);
                right.shuffle(rng);
                for (&a, &b) in left.iter().zip(&right) {
                    if rng.gen_bool(shape.cross_density) {
                        g.add_edge(a, b);
                        optional.push((a, b));
                    }
                }
            }
        }
    }

    for _ in 0..REPAIR_ROUNDS {
        let Err(w) = in_class(&g) else {
            return Some(g);
        };
        let inside: Vec<(usize, usize)> = optional
            .iter()
            .copied()
            .filter(|&(a, b)| g.has_edge(a, b) && w.vertices.contains(&a) && w.vertices.contains(&b))
            .collect();
        let &(a, b) = inside.choose(rng)?;
        g.remove_edge(a, b);
    }
    in_class(&g).is_ok().then_some(g)
}

fn clique(g: &mut Graph, vs: &[usize]) {
    for (k, &u) in vs.iter().enumerate() {
        for &v in &vs[k + 1..] {
            g.add_edge(u, v);
        }
    }
}

/// A random instance satisfying every [`ListInstance`] condition, with
/// cliques of at most `max_clique` vertices.
///
/// Cliques are numbered consecutively. Some vertex triples, one per clique,
/// are made into triangles; the remaining vertices get random partial
/// matchings between cliques. Edges breaking the condition on two outside
/// neighbours are removed. Lists are drawn from a palette of 6 to 12 colors,
/// never putting a color in all three.
pub fn random_list_instance(rng: &mut impl Rng, max_clique: usize) -> ListInstance {
    loop {
        if let Some(inst) = try_list_instance(rng, max_clique) {
            return inst;
        }
    }
}

fn try_list_instance(rng: &mut impl Rng, max_clique: usize) -> Option<ListInstance> {
    let sizes: [usize; 3] = std::array::from_fn(|_| rng.gen_range(0..=max_clique));
    let n: usize = sizes.iter().sum();
    let mut g = Graph::new(n);
    let mut cliques: [Vec<usize>; 3] = Default::default();
    let mut start = 0;
    for i in 0..3 {
        cliques[i] = (start..start + sizes[i]).collect();
        start += sizes[i];
        clique(&mut g, &cliques[i]);
    }

    let mut free: [Vec<usize>; 3] = cliques.clone();
    for f in &mut free {
        f.shuffle(rng);
    }
    let triangles = rng.gen_range(0..=sizes.iter().copied().min().unwrap_or(0));
    for _ in 0..triangles {
        let t: Vec<usize> = free.iter_mut().map(|f| f.pop().unwrap()).collect();
        clique(&mut g, &t);
    }
    let density = rng.gen_range(0.0..1.0);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut left = free[i].clone();
        let mut right = free[j].clone();
        left.shuffle(rng);
        right.shuffle(rng);
        for (&a, &b) in left.iter().zip(&right) {
            if rng.gen_bool(density) {
                g.add_edge(a, b);
            }
        }
    }
    let owner = |v: usize| (0..3).find(|&i| cliques[i].contains(&v)).unwrap();
    loop {
        let broken = (0..n).find_map(|v| {
            let across: Vec<usize> = g.neighbor_iter(v).filter(|&u| owner(u) != owner(v)).collect();
            match across[..] {
                [b, c] if !g.has_edge(b, c) => Some((v, c)),
                _ => None,
            }
        });
        match broken {
            Some((v, c)) => g.remove_edge(v, c),
            None => break,
        }
    }

    let palette = rng.gen_range(6..=12);
    let mut lists: [BTreeSet<usize>; 3] = Default::default();
    let mut designated = [0; 3];
    for i in 0..3 {
        let banned: BTreeSet<usize> = match i {
            2 => lists[0]
                .intersection(&lists[1])
                .copied()
                .chain(designated[..2].iter().copied())
                .collect(),
            1 => BTreeSet::from([designated[0]]),
            _ => BTreeSet::new(),
        };
        let mut open: Vec<usize> = (0..palette).filter(|c| !banned.contains(c)).collect();
        open.shuffle(rng);
        let d = *open.first()?;
        designated[i] = d;
        lists[i].insert(d);
        let skip: BTreeSet<usize> = if i == 2 {
            lists[0].intersection(&lists[1]).copied().collect()
        } else {
            BTreeSet::new()
        };
        let want = sizes[i].max(1) + rng.gen_range(0..=2);
        for c in (0..palette)
            .filter(|c| !skip.contains(c))
            .collect::<Vec<_>>()
            .choose_multiple(rng, palette)
        {
            if lists[i].len() >= want {
                break;
            }
            lists[i].insert(*c);
        }
        if lists[i].len() < sizes[i] {
            return None;
        }
    }
    ListInstance::new(g, cliques, lists, designated).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{color_k_colorable_case, DEFAULT_BUDGET};
    use crate::graph::{claw, complete, cycle, disjoint_union};
    use crate::structure::classify_c5;

    fn contains(list: &[Graph], g: &Graph) -> bool {
        list.iter().any(|h| h.n() == g.n() && h.edges() == g.edges())
    }

    #[test]
    fn exhaustive_five() {
        let all: Vec<Graph> = generate(&GenSpec::new(5, 5, 0, Strategy::ExhaustiveLabeled)).collect();
        assert!(contains(&all, &cycle(5)));
        assert!(contains(&all, &complete(5)));
        assert!(!contains(&all, &disjoint_union(&claw(), &Graph::new(1))));
        assert!(all.iter().all(|g| in_class(g).is_ok()));
    }

    #[test]
    fn random_four() {
        let seen: Vec<Graph> = generate(&GenSpec::new(4, 4, 7, Strategy::RandomFiltered))
            .take(400)
            .collect();
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        for g in [complete(4), cycle(4), diamond, paw] {
            assert!(in_class(&g).is_ok());
        }
        assert!(in_class(&claw()).is_err());
        assert!(in_class(&Graph::new(4)).is_err());
        assert!(seen.iter().all(|g| g.n() == 4 && in_class(g).is_ok()));
        assert!(contains(&seen, &complete(4)));
    }

    #[test]
    fn streams_are_deterministic() {
        for strategy in [Strategy::RandomFiltered, Strategy::ConstructiveC5] {
            let spec = GenSpec::new(8, 11, 42, strategy);
            let a: Vec<_> = generate(&spec).take(20).map(|g| g.edges()).collect();
            let b: Vec<_> = generate(&spec).take(20).map(|g| g.edges()).collect();
            assert_eq!(a.len(), 20);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn infeasible_spec_is_empty() {
        assert_eq!(generate(&GenSpec::new(3, 4, 1, Strategy::ConstructiveC5)).count(), 0);
        assert_eq!(generate(&GenSpec::new(5, 4, 1, Strategy::RandomFiltered)).count(), 0);
    }

    #[test]
    fn three_big_sets_are_accepted() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let shape = C5Shape::x_only([0, 3, 3, 0, 3], 0.5);
        let g = constructive_c5(&mut rng, &shape).unwrap();
        let s = classify_c5(&g, &[0, 1, 2, 3, 4]).unwrap();
        let c = color_k_colorable_case(&g, &s, DEFAULT_BUDGET).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.color_count(), 5);
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
        assert_eq!("constructive-c5".parse::<Strategy>().unwrap(), Strategy::ConstructiveC5);
        assert!("nope".parse::<Strategy>().is_err());
    }

    #[test]
    fn list_instances_are_valid_and_varied() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut cross = 0;
        for _ in 0..200 {
            let inst = random_list_instance(&mut rng, 4);
            assert!(inst.cliques().iter().all(|q| q.len() <= 4));
            let g = inst.graph();
            cross += g.edge_count()
                - inst
                    .cliques()
                    .iter()
                    .map(|q| q.len() * q.len().saturating_sub(1) / 2)
                    .sum::<usize>();
        }
        assert!(cross > 100);
    }
}
