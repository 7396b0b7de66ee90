//! Optimal colorings around a C5 whose only non-empty X-sets sit at
//! positions `{i, i+1, i+3}` and which has no 0-vertices.

use std::collections::BTreeSet;

use crate::coloring::exact::exact_color;
use crate::coloring::lists::{l_color_three_cliques, ListInstance};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::recognition::clique_number;
use crate::structure::C5Structure;

/// The first `i` with `X[i+2]` and `X[i+4]` empty.
pub(crate) fn three_set_offset(s: &C5Structure) -> Option<usize> {
    (0..5).find(|&i| s.x[(i + 2) % 5].is_empty() && s.x[(i + 4) % 5].is_empty())
}

fn require_layout(s: &C5Structure, op: &str) -> Result<usize> {
    if !s.r.is_empty() {
        return Err(Error::Precondition(format!("{op} needs R to be empty")));
    }
    three_set_offset(s)
        .ok_or_else(|| Error::Precondition(format!("{op} needs the non-empty X-sets at positions i, i+1, i+3")))
}

/// A stable set `S` inside `X` with `omega(g - S) = omega(g) - 1`.
///
/// Candidates take at most one vertex from each non-empty X-set. Those that
/// take a vertex from every X-set of size at least two are tried first, in
/// lexicographic order; then all remaining candidates, also in lexicographic
/// order. Each candidate is checked for stability and for the clique drop with
/// an exact clique computation.
pub fn good_stable_set(g: &Graph, s: &C5Structure) -> Result<Vec<usize>> {
    require_layout(s, "good_stable_set")?;
    if s.x.iter().all(|x| x.len() < 2) {
        return Err(Error::Precondition(
            "good_stable_set needs an X-set with two or more vertices".into(),
        ));
    }
    let omega = clique_number(g).0;
    let sets: Vec<&Vec<usize>> = s.x.iter().filter(|x| !x.is_empty()).collect();

    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let mut pick = Vec::new();
    choices(&sets, 0, &mut pick, &mut candidates);
    let mut candidates: Vec<(bool, Vec<usize>)> = candidates
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|mut c| {
            let covers = sets.iter().all(|x| x.len() < 2 || x.iter().any(|v| c.contains(v)));
            c.sort_unstable();
            (!covers, c)
        })
        .collect();
    candidates.sort();

    for (_, cand) in candidates {
        if !g.is_stable(&cand) {
            continue;
        }
        let rest = g.without(&cand)?;
        if clique_number(&rest.graph).0 + 1 == omega {
            return Ok(cand);
        }
    }
    Err(Error::violation(
        "good_stable_set",
        format!("no stable set in X lowers the clique number {omega}"),
        s.x_union(),
    ))
}

/// Every way to take at most one vertex from each set.
fn choices(sets: &[&Vec<usize>], k: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == sets.len() {
        out.push(pick.clone());
        return;
    }
    choices(sets, k + 1, pick, out);
    for &v in sets[k].iter() {
        pick.push(v);
        choices(sets, k + 1, pick, out);
        pick.pop();
    }
}

/// `s` restricted to the subgraph whose vertex `k` is `origin[k]`.
fn restrict(s: &C5Structure, origin: &[usize]) -> C5Structure {
    let mut local = vec![usize::MAX; origin.iter().max().map_or(0, |m| m + 1)];
    for (k, &v) in origin.iter().enumerate() {
        local[v] = k;
    }
    let map = |vs: &Vec<usize>| -> Vec<usize> {
        vs.iter()
            .filter(|&&v| v < local.len() && local[v] != usize::MAX)
            .map(|&v| local[v])
            .collect()
    };
    C5Structure {
        cycle: s.cycle.map(|v| local[v]),
        x: s.x.clone().map(|x| map(&x)),
        y: s.y.clone().map(|y| map(&y)),
        r: map(&s.r),
    }
}

/// Colors `g - S` with `peel`, then gives `S` one new color.
fn peel_stable_set(
    g: &Graph,
    s: &C5Structure,
    budget: u64,
    peel: fn(&Graph, &C5Structure, u64) -> Result<Coloring>,
) -> Result<Coloring> {
    let stable = good_stable_set(g, s)?;
    let rest = g.without(&stable)?;
    let inner = peel(&rest.graph, &restrict(s, &rest.origin), budget)?.normalized();
    let fresh = inner.color_count();
    let mut colors = vec![fresh; g.n()];
    for (k, &v) in rest.origin.iter().enumerate() {
        colors[v] = inner.color(k);
    }
    Ok(Coloring::new(colors))
}

fn expect_omega(g: &Graph, c: Coloring, stage: &'static str) -> Result<Coloring> {
    let (omega, clique) = clique_number(g);
    if let Err(edge) = c.verify(g) {
        return Err(Error::violation(
            stage,
            "coloring is not proper",
            edge.map_or(Vec::new(), |(a, b)| vec![a, b]),
        ));
    }
    if c.color_count() != omega {
        return Err(Error::violation(
            stage,
            format!("used {} colors, clique number is {omega}", c.color_count()),
            clique,
        ));
    }
    Ok(c)
}

/// Optimal coloring when `R`, `Y`, `X[i+2]` and `X[i+4]` are all empty.
///
/// With every X-set of size at most two the graph has at most eleven vertices
/// and is colored exactly; otherwise a good stable set is peeled off. The
/// result uses clique-number many colors, except for the bare C5, which needs
/// three colors against a clique number of two.
pub fn color_three_xi_case(g: &Graph, s: &C5Structure, budget: u64) -> Result<Coloring> {
    require_layout(s, "color_three_xi_case")?;
    if s.y.iter().any(|y| !y.is_empty()) {
        return Err(Error::Precondition("color_three_xi_case needs Y to be empty".into()));
    }
    if s.x.iter().all(Vec::is_empty) {
        return exact_color(g, budget);
    }
    let c = if s.x.iter().all(|x| x.len() <= 2) {
        exact_color(g, budget)?
    } else {
        peel_stable_set(g, s, budget, color_three_xi_case)?
    };
    expect_omega(g, c, "color_three_xi_case")
}

/// Optimal coloring with `omega(g)` colors when `R`, `X[i+2]` and `X[i+4]` are
/// empty and `omega(g) >= 5`.
///
/// At `omega = 5` the cycle takes colors `0..5` in order, `y[j]` takes
/// `j + 4`, and the X-sets are list colored: a singleton `X[j]` gets the list
/// `{j + 3}`, a pair gets `{j + 3}` plus the color of the missing one of
/// `y[j]`, `y[j+3]`, and a triple gets `{j + 2, j + 3, j + 4}`, all modulo 5.
/// Larger clique numbers peel off a good stable set first.
pub fn color_k_colorable_case(g: &Graph, s: &C5Structure, budget: u64) -> Result<Coloring> {
    let i = require_layout(s, "color_k_colorable_case")?;
    let omega = clique_number(g).0;
    if omega < 5 {
        return Err(Error::Precondition(format!(
            "color_k_colorable_case needs clique number at least 5, found {omega}"
        )));
    }
    let c = if omega == 5 {
        five_coloring(g, s, i)?
    } else {
        peel_stable_set(g, s, budget, color_k_colorable_case)?
    };
    expect_omega(g, c, "color_k_colorable_case")
}

fn five_coloring(g: &Graph, s: &C5Structure, i: usize) -> Result<Coloring> {
    let mut colors = vec![usize::MAX; g.n()];
    for (p, &v) in s.cycle.iter().enumerate() {
        colors[v] = p;
    }
    for j in 0..5 {
        for &y in &s.y[j] {
            colors[y] = (j + 4) % 5;
        }
    }
    let positions = [i, (i + 1) % 5, (i + 3) % 5];
    let mut lists: [BTreeSet<usize>; 3] = Default::default();
    for (slot, &j) in positions.iter().enumerate() {
        let x = &s.x[j];
        let at = |k: usize| (j + k) % 5;
        lists[slot] = match x.len() {
            0 | 1 => [at(3)].into(),
            2 => {
                let missing = if s.y[j].is_empty() {
                    at(4)
                } else if s.y[at(3)].is_empty() {
                    at(2)
                } else {
                    return Err(Error::violation(
                        "color_k_colorable_case",
                        format!("X[{j}] has two vertices but y[{j}] and y[{}] both exist", at(3)),
                        x.clone(),
                    ));
                };
                [at(3), missing].into()
            }
            3 => [at(2), at(3), at(4)].into(),
            k => {
                return Err(Error::violation(
                    "color_k_colorable_case",
                    format!("X[{j}] has {k} vertices at clique number 5"),
                    x.clone(),
                ))
            }
        };
    }
    let xs: Vec<usize> = positions.iter().flat_map(|&j| s.x[j].clone()).collect();
    let sub = g.induced_subgraph(&xs)?;
    let mut start = 0;
    let cliques = positions.map(|j| {
        let q: Vec<usize> = (start..start + s.x[j].len()).collect();
        start += s.x[j].len();
        q
    });
    let designated = positions.map(|j| (j + 3) % 5);
    let inst = ListInstance::new(sub.graph, cliques, lists, designated).map_err(|e| {
        Error::violation(
            "color_k_colorable_case",
            format!("list conditions fail: {e}"),
            xs.clone(),
        )
    })?;
    let xc = l_color_three_cliques(&inst)?;
    for (k, &v) in sub.origin.iter().enumerate() {
        colors[v] = xc.color(k);
    }
    if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
        return Err(Error::violation(
            "color_k_colorable_case",
            "vertex outside C5, X and Y",
            vec![v],
        ));
    }
    Ok(Coloring::new(colors))
}
