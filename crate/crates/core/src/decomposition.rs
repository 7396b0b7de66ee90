//! Clique-cutset decomposition into an atom tree, and recombination of atom
//! colorings.
//!
//! Cutsets are clique minimal separators. They are read off a minimal
//! elimination ordering computed by MCS-M: every clique minimal separator of
//! the graph is `madj(x)` for some generator `x` of the ordering. Graphs on at
//! most [`EXHAUSTIVE_LIMIT`] vertices for which the ordering yields nothing are
//! re-scanned through their maximal cliques.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Vertex count up to which the maximal-clique scan backs up the ordering.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// Binary clique-cutset decomposition. Vertex indices refer to the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomTree {
    Atom(Vec<usize>),
    Split {
        cutset: Vec<usize>,
        left: Box<AtomTree>,
        right: Box<AtomTree>,
    },
}

impl AtomTree {
    /// Leaves from left to right.
    pub fn atoms(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a [usize]>) {
        match self {
            AtomTree::Atom(vs) => out.push(vs),
            AtomTree::Split { left, right, .. } => {
                left.collect_atoms(out);
                right.collect_atoms(out);
            }
        }
    }

    pub fn atom_count(&self) -> usize {
        match self {
            AtomTree::Atom(_) => 1,
            AtomTree::Split { left, right, .. } => left.atom_count() + right.atom_count(),
        }
    }

    /// Sorted vertex set covered by this subtree.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.atoms().concat();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Checks the structural invariants against the host graph: cutsets are
    /// cliques separating the two sides, atoms are connected and have no
    /// clique cutset, and there are at most `n - 1` atoms (for `n >= 2`).
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = self.vertices().len();
        if n >= 2 && self.atom_count() > n - 1 {
            return Err(format!("{} atoms for {} vertices", self.atom_count(), n));
        }
        self.check_node(g)
    }

    fn check_node(&self, g: &Graph) -> std::result::Result<(), String> {
        match self {
            AtomTree::Atom(vs) => {
                let sub = g.induced_subgraph(vs).map_err(|e| e.to_string())?.graph;
                if !sub.is_connected() {
                    return Err(format!("atom {vs:?} is disconnected"));
                }
                if let Some(c) = clique_cutset_of_connected(&sub) {
                    return Err(format!("atom {vs:?} has clique cutset {c:?}"));
                }
                Ok(())
            }
            AtomTree::Split { cutset, left, right } => {
                if !g.is_clique(cutset) {
                    return Err(format!("cutset {cutset:?} is not a clique"));
                }
                let (lv, rv) = (left.vertices(), right.vertices());
                let inter: Vec<usize> = lv.iter().copied().filter(|v| rv.contains(v)).collect();
                if inter != *cutset {
                    return Err(format!("sides meet in {inter:?}, cutset is {cutset:?}"));
                }
                for &a in lv.iter().filter(|v| !cutset.contains(v)) {
                    for &b in rv.iter().filter(|v| !cutset.contains(v)) {
                        if g.has_edge(a, b) {
                            return Err(format!("edge {a} {b} crosses cutset {cutset:?}"));
                        }
                    }
                }
                if lv.len() == cutset.len() || rv.len() == cutset.len() {
                    return Err(format!("cutset {cutset:?} leaves an empty side"));
                }
                left.check_node(g)?;
                right.check_node(g)
            }
        }
    }
}

/// A clique cutset of the connected graph `g`, or `None` if `g` is an atom.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "clique cutset search needs a connected graph".into(),
        ));
    }
    Ok(clique_cutset_of_connected(g))
}

fn clique_cutset_of_connected(g: &Graph) -> Option<Vec<usize>> {
    if g.n() < 3 {
        return None;
    }
    let from_ordering = elimination_cutset(g);
    if from_ordering.is_some() || g.n() > EXHAUSTIVE_LIMIT {
        return from_ordering;
    }
    let scanned = maximal_clique_cutset(g);
    debug_assert!(scanned.is_none(), "ordering missed clique separator {scanned:?}");
    scanned
}

/// `s` is a clique and `g - s` has at least two components whose
/// neighbourhood is all of `s`.
fn is_clique_minimal_separator(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() || !g.is_clique(s) {
        return false;
    }
    let sset = g.set_of(s);
    let mut rest = g.vertex_set();
    rest.difference_with(&sset);
    let full = g
        .components_within(&rest)
        .iter()
        .filter(|c| neighbourhood(g, c) == sset)
        .count();
    full >= 2
}

fn neighbourhood(g: &Graph, c: &[usize]) -> FixedBitSet {
    let mut nb = FixedBitSet::with_capacity(g.n());
    for &v in c {
        nb.union_with(g.neighbors(v));
    }
    for &v in c {
        nb.set(v, false);
    }
    nb
}

/// MCS-M: numbers vertices from `n` down to 1, always picking an unnumbered
/// vertex of largest label. When `x` is numbered, every unnumbered `y`
/// reachable from `x` through unnumbered vertices of label smaller than
/// `label(y)` gets its label raised and records `x` in `madj(y)`. A vertex
/// whose label does not exceed the previous pick's label is a generator.
///
/// Returns the first generator set `madj(x)`, in elimination order, that is
/// a clique minimal separator.
fn elimination_cutset(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut madj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut picks = Vec::with_capacity(n);
    let mut generators = vec![false; n];
    let mut prev_label: Option<usize> = None;

    for _ in 0..n {
        let x = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (label[v], std::cmp::Reverse(v)))
            .unwrap();
        if prev_label.is_some_and(|p| label[x] <= p) {
            generators[x] = true;
        }
        prev_label = Some(label[x]);
        numbered[x] = true;
        picks.push(x);

        // Bottleneck search: reach[y] = least possible maximum label over the
        // interior vertices of an unnumbered path from x to y.
        let mut reach = vec![usize::MAX; n];
        let mut done = vec![false; n];
        let mut raised = Vec::new();
        for y in g.neighbor_iter(x).filter(|&y| !numbered[y]) {
            reach[y] = 0;
        }
        loop {
            let next = (0..n)
                .filter(|&v| !numbered[v] && !done[v] && reach[v] != usize::MAX)
                .min_by_key(|&v| (reach[v], v));
            let Some(y) = next else { break };
            done[y] = true;
            let direct = g.has_edge(x, y);
            if direct || reach[y] < label[y] + 1 {
                raised.push(y);
            }
            // Paths continue through y with y as an interior vertex.
            let through = reach[y].max(label[y] + 1);
            for z in g.neighbor_iter(y) {
                if !numbered[z] && !done[z] && through < reach[z] {
                    reach[z] = through;
                }
            }
        }
        for y in raised {
            label[y] += 1;
            madj[y].push(x);
        }
    }

    // Elimination order is the reverse of the numbering order.
    picks.iter().rev().find_map(|&x| {
        if !generators[x] {
            return None;
        }
        let mut s = madj[x].clone();
        s.sort_unstable();
        is_clique_minimal_separator(g, &s).then_some(s)
    })
}

/// Exhaustive scan: every clique minimal separator `S` lies in a maximal
/// clique `K` and equals `N(C)` for some component `C` of `g - K`.
fn maximal_clique_cutset(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_maximal_clique(g, &mut |k| {
        if found.is_some() {
            return;
        }
        let mut rest = g.vertex_set();
        rest.difference_with(&g.set_of(k));
        for c in g.components_within(&rest) {
            let s: Vec<usize> = neighbourhood(g, &c).ones().collect();
            if is_clique_minimal_separator(g, &s) {
                found = Some(s);
                return;
            }
        }
    });
    found
}

/// Bron-Kerbosch with pivoting.
fn for_each_maximal_clique(g: &Graph, visit: &mut dyn FnMut(&[usize])) {
    fn expand(g: &Graph, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet, visit: &mut dyn FnMut(&[usize])) {
        if p.is_clear() && x.is_clear() {
            visit(r);
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| g.neighbors(u).intersection_count(&p))
            .unwrap();
        let mut branch = p.clone();
        branch.difference_with(g.neighbors(pivot));
        for v in branch.ones() {
            let mut np = p.clone();
            np.intersect_with(g.neighbors(v));
            let mut nx = x.clone();
            nx.intersect_with(g.neighbors(v));
            r.push(v);
            expand(g, r, np, nx, visit);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
    expand(
        g,
        &mut Vec::new(),
        g.vertex_set(),
        FixedBitSet::with_capacity(g.n()),
        visit,
    );
}

/// Decomposes a connected graph into its atoms.
pub fn decompose(g: &Graph) -> Result<AtomTree> {
    if !g.is_connected() {
        return Err(Error::Precondition("decomposition needs a connected graph".into()));
    }
    Ok(split(g, (0..g.n()).collect()))
}

fn split(g: &Graph, vs: Vec<usize>) -> AtomTree {
    let sub = g.induced_subgraph(&vs).expect("vertices in range");
    let Some(local_cut) = clique_cutset_of_connected(&sub.graph) else {
        return AtomTree::Atom(vs);
    };
    let cut = sub.graph.set_of(&local_cut);
    let mut rest = sub.graph.vertex_set();
    rest.difference_with(&cut);
    // The first full component becomes the left side.
    let side = sub
        .graph
        .components_within(&rest)
        .into_iter()
        .find(|c| neighbourhood(&sub.graph, c) == cut)
        .expect("minimal separators have full components");
    let side_set = sub.graph.set_of(&side);

    let mut left: Vec<usize> = side.iter().chain(&local_cut).map(|&v| sub.origin[v]).collect();
    left.sort_unstable();
    let right: Vec<usize> = (0..vs.len())
        .filter(|&v| !side_set.contains(v))
        .map(|v| sub.origin[v])
        .collect();
    AtomTree::Split {
        cutset: sub.lift(&local_cut),
        left: Box::new(split(g, left)),
        right: Box::new(split(g, right)),
    }
}

/// Combines one coloring per atom (in [`AtomTree::atoms`] order, each indexed
/// by position within its atom's vertex list) into a coloring of the whole
/// graph with as many colors as the most colorful atom.
///
/// At every split the right side's colors are permuted so the two sides agree
/// on the cutset; its remaining colors go to the smallest free indices.
pub fn recombine(g: &Graph, tree: &AtomTree, atom_colorings: &[Coloring]) -> Result<Coloring> {
    let atoms = tree.atoms();
    if atoms.len() != atom_colorings.len() {
        return Err(Error::Precondition(format!(
            "{} colorings for {} atoms",
            atom_colorings.len(),
            atoms.len()
        )));
    }
    for (vs, c) in atoms.iter().zip(atom_colorings) {
        let sub = g.induced_subgraph(vs)?.graph;
        if let Err(bad) = c.verify(&sub) {
            return Err(Error::Precondition(match bad {
                Some((a, b)) => format!("atom coloring is improper on edge {} {}", vs[a], vs[b]),
                None => format!("atom coloring has the wrong length for atom {vs:?}"),
            }));
        }
    }
    let mut next = atom_colorings.iter();
    let merged = merge(tree, &mut next, g.n());
    let colors = merged
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::Precondition("tree does not cover every vertex".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(colors))
}

fn merge<'a>(tree: &AtomTree, colorings: &mut impl Iterator<Item = &'a Coloring>, n: usize) -> Vec<Option<usize>> {
    match tree {
        AtomTree::Atom(vs) => {
            let c = colorings.next().expect("one coloring per atom").normalized();
            let mut out = vec![None; n];
            for (i, &v) in vs.iter().enumerate() {
                out[v] = Some(c.color(i));
            }
            out
        }
        AtomTree::Split { cutset, left, right } => {
            let mut l = merge(left, colorings, n);
            let r = merge(right, colorings, n);
            let mut perm = std::collections::BTreeMap::new();
            for &s in cutset {
                perm.insert(r[s].unwrap(), l[s].unwrap());
            }
            let taken: std::collections::BTreeSet<usize> = perm.values().copied().collect();
            let mut free = (0..).filter(|c| !taken.contains(c));
            let others: std::collections::BTreeSet<usize> =
                r.iter().flatten().copied().filter(|c| !perm.contains_key(c)).collect();
            for c in others {
                perm.insert(c, free.next().unwrap());
            }
            for (v, c) in r.iter().enumerate() {
                if let Some(c) = c {
                    l[v] = Some(perm[c]);
                }
            }
            l
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, cycle_plus, path};

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn cutset_examples() {
        assert_eq!(find_clique_cutset(&path(3)).unwrap(), Some(vec![1]));
        assert_eq!(find_clique_cutset(&complete(4)).unwrap(), None);
        assert_eq!(find_clique_cutset(&cycle(5)).unwrap(), None);
        // A vertex attached to both ends of a cycle edge is cut off by that edge.
        assert_eq!(find_clique_cutset(&cycle_plus(&[0, 1])).unwrap(), Some(vec![0, 1]));
        assert_eq!(find_clique_cutset(&diamond()).unwrap(), Some(vec![1, 2]));
        assert!(find_clique_cutset(&Graph::new(2)).is_err());
    }

    #[test]
    fn decompose_examples() {
        let t = decompose(&path(3)).unwrap();
        assert_eq!(t.atom_count(), 2);
        assert!(matches!(&t, AtomTree::Split { cutset, .. } if cutset == &vec![1]));
        assert_eq!(decompose(&cycle(5)).unwrap(), AtomTree::Atom(vec![0, 1, 2, 3, 4]));
        let t = decompose(&diamond()).unwrap();
        let mut atoms: Vec<Vec<usize>> = t.atoms().iter().map(|a| a.to_vec()).collect();
        atoms.sort();
        assert_eq!(atoms, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        t.check(&diamond()).unwrap();
        assert!(decompose(&Graph::new(2)).is_err());
    }

    #[test]
    fn recombine_examples() {
        let g = diamond();
        let t = decompose(&g).unwrap();
        let cs = vec![Coloring::new(vec![0, 1, 2]), Coloring::new(vec![2, 0, 1])];
        let c = recombine(&g, &t, &cs).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.color_count(), 3);

        let t = decompose(&cycle(5)).unwrap();
        let c = recombine(&cycle(5), &t, &[Coloring::new(vec![0, 1, 0, 1, 2])]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0, 1, 2]);

        let t = decompose(&path(3)).unwrap();
        let cs = vec![Coloring::new(vec![0, 1]), Coloring::new(vec![0, 1])];
        let c = recombine(&path(3), &t, &cs).unwrap();
        assert!(c.is_proper(&path(3)));
        assert_eq!(c.color_count(), 2);

        let bad = vec![Coloring::new(vec![0, 0]), Coloring::new(vec![0, 1])];
        assert!(matches!(recombine(&path(3), &t, &bad), Err(Error::Precondition(_))));
    }

    fn has_clique_cutset_brute(g: &Graph) -> bool {
        (1u32..(1 << g.n()) - 1).any(|mask| {
            let s: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            if !g.is_clique(&s) {
                return false;
            }
            let mut rest = g.vertex_set();
            rest.difference_with(&g.set_of(&s));
            g.components_within(&rest).len() >= 2
        })
    }

    fn connected_graph() -> impl proptest::strategy::Strategy<Value = Graph> {
        use proptest::prelude::*;
        (1usize..=10, 0.15f64..0.9, any::<u64>()).prop_filter_map("connected", |(n, p, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            g.is_connected().then_some(g)
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config::with_cases(2000))]

        #[test]
        fn cutset_matches_brute_force(g in connected_graph()) {
            let found = find_clique_cutset(&g).unwrap();
            proptest::prop_assert_eq!(found.is_some(), has_clique_cutset_brute(&g));
            if let Some(s) = found {
                proptest::prop_assert!(is_clique_minimal_separator(&g, &s));
            }
            proptest::prop_assert_eq!(elimination_cutset(&g).is_some(), maximal_clique_cutset(&g).is_some());
        }

        #[test]
        fn tree_invariants(g in connected_graph()) {
            let t = decompose(&g).unwrap();
            proptest::prop_assert_eq!(t.vertices(), (0..g.n()).collect::<Vec<_>>());
            if let Err(e) = t.check(&g) {
                return Err(proptest::test_runner::TestCaseError::fail(e));
            }
        }
    }
}
