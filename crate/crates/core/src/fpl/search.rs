//! Backtracking over edge states with degree propagation.
//!
//! Every edge is unknown, chosen or excluded. A vertex with two chosen edges
//! excludes the rest, a vertex with two excluded edges chooses the rest, and
//! this runs to a fixpoint after each decision. Decisions pick the 2-subset
//! at the first vertex (row-major) that still has an undecided edge.

use rayon::prelude::*;

use super::grid::GridModel;
use super::Parity;

pub(crate) const UNKNOWN: u8 = 0;
pub(crate) const IN: u8 = 1;
pub(crate) const OUT: u8 = 2;

/// The six 2-subsets of a vertex's four incident edges, in a fixed order.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn set(model: &GridModel, states: &mut [u8], edge: usize, value: u8, queue: &mut Vec<usize>) {
    states[edge] = value;
    let e = model.edge(edge);
    for p in [e.a, e.b] {
        if let Some(v) = model.vertex(p) {
            queue.push(v);
        }
    }
}

/// Runs the degree rules to a fixpoint; `false` on contradiction.
fn propagate(model: &GridModel, states: &mut [u8], mut queue: Vec<usize>) -> bool {
    while let Some(v) = queue.pop() {
        let inc = model.incident(v);
        let (mut chosen, mut excluded) = (0, 0);
        for &e in inc {
            match states[e] {
                IN => chosen += 1,
                OUT => excluded += 1,
                _ => {}
            }
        }
        if chosen > 2 || excluded > 2 {
            return false;
        }
        if chosen + excluded == 4 {
            continue;
        }
        let fill = match (chosen, excluded) {
            (2, _) => OUT,
            (_, 2) => IN,
            _ => continue,
        };
        for &e in inc {
            if states[e] == UNKNOWN {
                set(model, states, e, fill, &mut queue);
            }
        }
    }
    true
}

/// Initial edge states for a parity, propagated; `None` if already infeasible.
pub(crate) fn root(model: &GridModel, parity: Parity) -> Option<Vec<u8>> {
    let mut states = vec![UNKNOWN; model.edges().len()];
    let mut queue = Vec::new();
    for label in 1..=4 * model.n() as u32 {
        let chosen = parity.matches_label(label);
        set(
            model,
            &mut states,
            model.external(label),
            if chosen { IN } else { OUT },
            &mut queue,
        );
    }
    propagate(model, &mut states, queue).then_some(states)
}

fn next_vertex(model: &GridModel, states: &[u8], from: usize) -> Option<usize> {
    (from..model.vertex_count()).find(|&v| model.incident(v).iter().any(|&e| states[e] == UNKNOWN))
}

/// Children of a partial state at vertex `v`, in branching order.
fn children(model: &GridModel, states: &[u8], v: usize) -> Vec<Vec<u8>> {
    let inc = model.incident(v);
    let mut out = Vec::new();
    for (i, j) in PAIRS {
        let want = |k: usize| if k == i || k == j { IN } else { OUT };
        if (0..4).any(|k| states[inc[k]] != UNKNOWN && states[inc[k]] != want(k)) {
            continue;
        }
        let mut child = states.to_vec();
        let mut queue = Vec::new();
        for (k, &e) in inc.iter().enumerate() {
            if child[e] == UNKNOWN {
                set(model, &mut child, e, want(k), &mut queue);
            }
        }
        if propagate(model, &mut child, queue) {
            out.push(child);
        }
    }
    out
}

/// Depth-first walk from `states`, calling `visit` on every complete state.
pub(crate) fn walk(model: &GridModel, states: Vec<u8>, from: usize, visit: &mut dyn FnMut(&[u8])) {
    match next_vertex(model, &states, from) {
        None => visit(&states),
        Some(v) => {
            for child in children(model, &states, v) {
                walk(model, child, v, visit);
            }
        }
    }
}

/// Expands the search tree `depth` decisions deep. Subtrees come back in
/// depth-first order, so concatenating their results reproduces the
/// sequential order.
pub(crate) fn frontier(model: &GridModel, parity: Parity, depth: usize) -> Vec<(Vec<u8>, usize)> {
    let Some(start) = root(model, parity) else {
        return Vec::new();
    };
    let mut level = vec![(start, 0usize)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (states, from) in level {
            match next_vertex(model, &states, from) {
                None => next.push((states, from)),
                Some(v) => next.extend(children(model, &states, v).into_iter().map(|c| (c, v))),
            }
        }
        level = next;
    }
    level
}

/// Folds every complete state of every subtree in parallel, returning one
/// accumulator per subtree in depth-first order.
pub(crate) fn fold_subtrees<T, I, F>(
    model: &GridModel,
    parity: Parity,
    depth: usize,
    init: I,
    fold: F,
) -> Vec<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &[u8]) + Sync,
{
    frontier(model, parity, depth)
        .into_par_iter()
        .map(|(states, from)| {
            let mut acc = init();
            walk(model, states, from, &mut |s| fold(&mut acc, s));
            acc
        })
        .collect()
}
