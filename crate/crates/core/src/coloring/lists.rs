//! List coloring of graphs covered by three cliques with uniform lists.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

/// Largest search tree explored by the backtracking base cases.
const BACKTRACK_BUDGET: u64 = 1_000_000;

/// A graph whose vertices split into three cliques `Q[0..3]`, where every
/// vertex of `Q[i]` may use the colors in `lists[i]`.
///
/// The constructor enforces:
/// * a vertex of `Q[i]` has at most one neighbour in `Q[j]` (`i != j`);
/// * if a vertex of `Q[i]` has neighbours `b` in `Q[j]` and `c` in `Q[k]`,
///   then `b` and `c` are adjacent;
/// * `|lists[i]| >= |Q[i]|`;
/// * `designated[i]` lies in `lists[i]` and the three designated colors are
///   distinct;
/// * no color lies in all three lists.
///
/// Under these conditions a list coloring always exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListInstance {
    graph: Graph,
    cliques: [Vec<usize>; 3],
    lists: [BTreeSet<usize>; 3],
    designated: [usize; 3],
}

impl ListInstance {
    pub fn new(
        graph: Graph,
        cliques: [Vec<usize>; 3],
        lists: [BTreeSet<usize>; 3],
        designated: [usize; 3],
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        let mut owner = vec![None; graph.n()];
        for (i, q) in cliques.iter().enumerate() {
            for &v in q {
                graph.check_vertex(v)?;
                if owner[v].replace(i).is_some() {
                    return Err(Error::OverlappingSets(v));
                }
            }
            if !graph.is_clique(q) {
                return bad(format!("Q{i} is not a clique"));
            }
            if lists[i].len() < q.len() {
                return bad(format!(
                    "list {i} has {} colors for {} vertices",
                    lists[i].len(),
                    q.len()
                ));
            }
            if !lists[i].contains(&designated[i]) {
                return bad(format!("designated color {} is not in list {i}", designated[i]));
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return bad(format!("vertex {v} lies in no clique"));
        }
        if designated[0] == designated[1] || designated[1] == designated[2] || designated[0] == designated[2] {
            return bad(format!("designated colors {designated:?} are not distinct"));
        }
        if let Some(c) = lists[0].iter().find(|c| lists[1].contains(c) && lists[2].contains(c)) {
            return bad(format!("color {c} lies in all three lists"));
        }
        for (v, slot) in owner.iter().enumerate() {
            let i = slot.unwrap();
            let mut across = Vec::new();
            for (j, q) in cliques.iter().enumerate().filter(|&(j, _)| j != i) {
                let nb: Vec<usize> = q.iter().copied().filter(|&u| graph.has_edge(v, u)).collect();
                if nb.len() > 1 {
                    return bad(format!("vertex {v} has {} neighbours in Q{j}", nb.len()));
                }
                across.extend(nb);
            }
            if let [b, c] = across[..] {
                if !graph.has_edge(b, c) {
                    return bad(format!("neighbours {b} and {c} of vertex {v} are not adjacent"));
                }
            }
        }
        Ok(ListInstance {
            graph,
            cliques,
            lists,
            designated,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cliques(&self) -> &[Vec<usize>; 3] {
        &self.cliques
    }

    pub fn lists(&self) -> &[BTreeSet<usize>; 3] {
        &self.lists
    }

    pub fn designated(&self) -> [usize; 3] {
        self.designated
    }

    /// The list of vertex `v`.
    pub fn list_of(&self, v: usize) -> &BTreeSet<usize> {
        let i = (0..3)
            .find(|&i| self.cliques[i].contains(&v))
            .expect("vertex in a clique");
        &self.lists[i]
    }

    /// True if `c` is proper and gives every vertex a color from its list.
    pub fn accepts(&self, c: &Coloring) -> bool {
        c.is_proper(&self.graph) && (0..self.graph.n()).all(|v| self.list_of(v).contains(&c.color(v)))
    }
}

/// A list coloring of `inst`. Colors are the list entries themselves.
///
/// Follows the induction on the number of colors: a lone vertex takes its
/// designated color (possibly together with a non-neighbour in a clique
/// sharing that color); once every clique has two vertices, a color outside
/// the designated ones is spent on one vertex or on a non-adjacent pair. The
/// remaining cases (an empty clique, or three pairs with only designated
/// colors left) are finished by backtracking.
pub fn l_color_three_cliques(inst: &ListInstance) -> Result<Coloring> {
    let g = &inst.graph;
    let mut state = State {
        q: inst.cliques.clone(),
        l: inst.lists.clone(),
        d: inst.designated,
        colors: vec![None; g.n()],
    };
    loop {
        if state.q.iter().any(Vec::is_empty) || state.only_designated_left() {
            state.finish(g)?;
            break;
        }
        state.step(g);
    }
    let c = Coloring::new(state.colors.into_iter().map(Option::unwrap).collect());
    if !inst.accepts(&c) {
        return Err(Error::violation(
            "l_color_three_cliques",
            "result is not a list coloring",
            Vec::new(),
        ));
    }
    Ok(c)
}

struct State {
    q: [Vec<usize>; 3],
    l: [BTreeSet<usize>; 3],
    d: [usize; 3],
    colors: Vec<Option<usize>>,
}

impl State {
    fn only_designated_left(&self) -> bool {
        self.q.iter().all(|q| q.len() >= 2) && self.l.iter().flatten().all(|c| self.d.contains(c))
    }

    fn color(&mut self, i: usize, v: usize, c: usize) {
        self.colors[v] = Some(c);
        self.q[i].retain(|&u| u != v);
    }

    /// One inductive step; every clique is non-empty on entry.
    fn step(&mut self, g: &Graph) {
        let sizes = [self.q[0].len(), self.q[1].len(), self.q[2].len()];
        if sizes == [1, 1, 1] {
            for i in 0..3 {
                let v = self.q[i][0];
                let c = self.d[i];
                self.color(i, v, c);
            }
            return;
        }
        for i in (0..3).filter(|&i| sizes[i] == 1) {
            let (j, k) = others(i);
            let (v, di) = (self.q[i][0], self.d[i]);
            if !self.l[j].contains(&di) && !self.l[k].contains(&di) {
                self.color(i, v, di);
                return;
            }
        }
        for i in (0..3).filter(|&i| sizes[i] == 1) {
            let (v, di) = (self.q[i][0], self.d[i]);
            let Some(j) = [others(i).0, others(i).1]
                .into_iter()
                .find(|&j| self.l[j].contains(&di))
            else {
                continue;
            };
            if sizes[j] >= 2 {
                let b = *self.q[j]
                    .iter()
                    .find(|&&b| !g.has_edge(v, b))
                    .expect("at most one neighbour");
                self.color(i, v, di);
                self.color(j, b, di);
            } else {
                self.color(i, v, di);
            }
            self.l[j].remove(&di);
            return;
        }
        // Every clique has at least two vertices.
        let c = *self
            .l
            .iter()
            .flatten()
            .find(|c| !self.d.contains(c))
            .expect("a non-designated color remains");
        let holders: Vec<usize> = (0..3).filter(|&i| self.l[i].contains(&c)).collect();
        match holders[..] {
            [i] => {
                let v = self.q[i][0];
                self.color(i, v, c);
                self.l[i].remove(&c);
            }
            [i, j] => {
                let a = self.q[i][0];
                let b = *self.q[j]
                    .iter()
                    .find(|&&b| !g.has_edge(a, b))
                    .expect("at most one neighbour");
                self.color(i, a, c);
                self.color(j, b, c);
                self.l[i].remove(&c);
                self.l[j].remove(&c);
            }
            _ => unreachable!("no color lies in all three lists"),
        }
    }

    /// Colors the remaining vertices by backtracking over their lists.
    fn finish(&mut self, g: &Graph) -> Result<()> {
        let mut order: Vec<(usize, usize)> = (0..3).flat_map(|i| self.q[i].iter().map(move |&v| (i, v))).collect();
        order.sort_by_key(|&(i, _)| self.l[i].len());
        let mut nodes = 0;
        if !self.backtrack(g, &order, &mut nodes)? {
            return Err(Error::violation(
                "l_color_three_cliques",
                "remaining vertices admit no list coloring",
                order.iter().map(|&(_, v)| v).collect(),
            ));
        }
        Ok(())
    }

    fn backtrack(&mut self, g: &Graph, order: &[(usize, usize)], nodes: &mut u64) -> Result<bool> {
        let Some((&(i, v), rest)) = order.split_first() else {
            return Ok(true);
        };
        *nodes += 1;
        if *nodes > BACKTRACK_BUDGET {
            return Err(Error::BudgetExceeded {
                budget: BACKTRACK_BUDGET,
            });
        }
        let options: Vec<usize> = self.l[i].iter().copied().collect();
        for c in options {
            if g.neighbor_iter(v).all(|u| self.colors[u] != Some(c)) {
                self.colors[v] = Some(c);
                if self.backtrack(g, rest, nodes)? {
                    return Ok(true);
                }
                self.colors[v] = None;
            }
        }
        Ok(false)
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}
