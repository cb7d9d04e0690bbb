//! Backtracking over edge subsets of the triangle with degree propagation.
//!
//! This enumerates *undirected* edge sets satisfying the local degree rules;
//! path structure and orientation are judged afterwards by
//! [`super::orient`]. It is the slow reference path that the frontier
//! counter in [`super::frontier`] is checked against.

use super::model::{EdgeKind, TriangleModel, VertexRole};

const UNKNOWN: i8 = -1;
const ABSENT: i8 = 0;
const PRESENT: i8 = 1;

/// Boundary letters, 0-based slices of length `2n`. `None` leaves that side
/// free: every compatible choice of letters is explored.
#[derive(Debug, Clone, Copy)]
pub struct BoundarySpec<'a> {
    pub sigma: Option<&'a [u8]>,
    pub tau: Option<&'a [u8]>,
}

struct Search<'m> {
    model: &'m TriangleModel,
    state: Vec<i8>,
    /// Target degree for constrained vertices (`None` on the boundary, whose
    /// edges are fixed up front or left free).
    target: Vec<Option<u8>>,
    trail: Vec<usize>,
}

impl<'m> Search<'m> {
    fn set(&mut self, e: usize, value: i8) -> bool {
        match self.state[e] {
            UNKNOWN => {
                self.state[e] = value;
                self.trail.push(e);
                true
            }
            current => current == value,
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail above mark");
            self.state[e] = UNKNOWN;
        }
    }

    /// Degree propagation to fixpoint, starting from the given vertices.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            let Some(target) = self.target[v] else {
                continue;
            };
            let (mut present, mut unknown) = (0u8, 0u8);
            for &e in self.model.incident(v) {
                match self.state[e] {
                    PRESENT => present += 1,
                    UNKNOWN => unknown += 1,
                    _ => {}
                }
            }
            if present > target || present + unknown < target {
                return false;
            }
            if unknown == 0 {
                continue;
            }
            let fill = if present == target {
                ABSENT
            } else if present + unknown == target {
                PRESENT
            } else {
                continue;
            };
            for &e in self.model.incident(v) {
                if self.state[e] == UNKNOWN {
                    self.set(e, fill);
                    let edge = self.model.edge(e);
                    queue.push(edge.upper);
                    if let Some(l) = edge.lower {
                        queue.push(l);
                    }
                }
            }
        }
        true
    }

    fn run<F: FnMut(&[bool])>(&mut self, next: usize, visit: &mut F) {
        let Some(e) = (next..self.state.len()).find(|&e| self.state[e] == UNKNOWN) else {
            let present: Vec<bool> = self.state.iter().map(|&s| s == PRESENT).collect();
            visit(&present);
            return;
        };
        let edge = *self.model.edge(e);
        for value in [PRESENT, ABSENT] {
            let mark = self.trail.len();
            self.set(e, value);
            let mut queue = vec![edge.upper];
            if let Some(l) = edge.lower {
                queue.push(l);
            }
            if self.propagate(queue) {
                self.run(e + 1, visit);
            }
            self.undo_to(mark);
        }
    }
}

/// Calls `visit` with the presence vector of every edge set in which
/// internal vertices have degree 2, the apex is isolated, every bottom
/// half-edge is used, each boundary vertex keeps the edge pointing into the
/// triangle's interior along the boundary, and the edge below a boundary
/// vertex follows the boundary letter (present iff `sigma_i = 0`, resp.
/// `tau_k = 1`) when that side is fixed.
pub fn for_each_edge_set<F: FnMut(&[bool])>(
    model: &TriangleModel,
    boundary: BoundarySpec<'_>,
    mut visit: F,
) {
    let n = model.n();
    let mut search = Search {
        model,
        state: vec![UNKNOWN; model.edges().len()],
        target: vec![None; model.vertex_count()],
        trail: Vec::new(),
    };
    let mut ok = true;
    for v in 0..model.vertex_count() {
        match model.role(v) {
            VertexRole::Internal => search.target[v] = Some(2),
            VertexRole::Top => {
                for &e in model.incident(v) {
                    ok &= search.set(e, ABSENT);
                }
            }
            VertexRole::Left(_) | VertexRole::Right(_) => {
                // The edge along the boundary towards the interior is always used.
                for &e in model.incident(v) {
                    if model.edge(e).kind == EdgeKind::Horizontal {
                        ok &= search.set(e, PRESENT);
                    }
                }
            }
        }
    }
    for i in 1..=2 * n {
        ok &= search.set(model.external_edge(i), PRESENT);
    }
    if let Some(sigma) = boundary.sigma {
        ok &= sigma[2 * n - 1] == 1;
        for i in 1..2 * n {
            let value = if sigma[i - 1] == 0 { PRESENT } else { ABSENT };
            ok &= search.set(model.left_down_edge(i), value);
        }
    }
    if let Some(tau) = boundary.tau {
        ok &= tau[0] == 0;
        for k in 2..=2 * n {
            let value = if tau[k - 1] == 1 { PRESENT } else { ABSENT };
            ok &= search.set(model.right_down_edge(k), value);
        }
    }
    if !ok {
        return;
    }
    let all: Vec<usize> = (0..model.vertex_count()).collect();
    if !search.propagate(all) {
        return;
    }
    search.run(0, &mut visit);
}

/// Reads the boundary words off an edge set produced by [`for_each_edge_set`].
pub fn boundary_words(model: &TriangleModel, present: &[bool]) -> (Vec<u8>, Vec<u8>) {
    let n = model.n();
    let mut sigma = vec![1u8; 2 * n];
    let mut tau = vec![0u8; 2 * n];
    for i in 1..2 * n {
        sigma[i - 1] = u8::from(!present[model.left_down_edge(i)]);
    }
    for k in 2..=2 * n {
        tau[k - 1] = u8::from(present[model.right_down_edge(k)]);
    }
    (sigma, tau)
}
