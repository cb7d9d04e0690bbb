//! Splitting an edge set into paths and loops, and deciding which
//! orientations of each component respect the boundary data.

use super::model::{Dir, EdgeKind, TriangleModel, VertexRole};

/// Where an open path leaves the triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnd {
    /// Bottom half-edge `i`, 1-based.
    Bottom(usize),
    /// Left boundary vertex carrying `sigma_i = 1`.
    Left(usize),
    /// Right boundary vertex carrying `tau_k = 0`.
    Right(usize),
}

impl PathEnd {
    fn is_source(self, pi: &[u8]) -> bool {
        match self {
            PathEnd::Bottom(i) => pi[i - 1] == 0,
            PathEnd::Left(_) => true,
            PathEnd::Right(_) => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    Path {
        start: PathEnd,
        end: PathEnd,
    },
    /// `clockwise` refers to the traversal order stored in `steps`.
    Loop {
        clockwise: bool,
    },
}

/// One connected component, listed as the edges met while walking it.
/// `steps[k].1` is the direction in which edge `steps[k].0` is traversed.
#[derive(Debug, Clone)]
pub struct Component {
    pub kind: ComponentKind,
    pub steps: Vec<(usize, Dir)>,
}

impl Component {
    /// Directions respecting every forced boundary orientation and making
    /// each open path run from a source to a sink. Returns the admissible
    /// reversal flags (`false` = as traversed), canonical choice first.
    pub fn orientations(&self, model: &TriangleModel, pi: &[u8]) -> Vec<bool> {
        let consistent = |reverse: bool| {
            self.steps.iter().all(|&(e, d)| {
                let d = if reverse { d.flip() } else { d };
                model.forced_direction(e, pi).is_none_or(|f| f == d)
            })
        };
        match self.kind {
            ComponentKind::Path { start, end } => {
                let reverse = match (start.is_source(pi), end.is_source(pi)) {
                    (true, false) => false,
                    (false, true) => true,
                    _ => return Vec::new(),
                };
                if consistent(reverse) {
                    vec![reverse]
                } else {
                    Vec::new()
                }
            }
            ComponentKind::Loop { clockwise } => {
                // Clockwise first: that is the canonical orientation.
                let order = if clockwise {
                    [false, true]
                } else {
                    [true, false]
                };
                order.into_iter().filter(|&r| consistent(r)).collect()
            }
        }
    }

    /// Whether the canonical orientation of this component is admissible.
    pub fn canonical_ok(&self, model: &TriangleModel, pi: &[u8]) -> bool {
        let choices = self.orientations(model, pi);
        match self.kind {
            ComponentKind::Path { .. } => !choices.is_empty(),
            ComponentKind::Loop { clockwise } => choices.first() == Some(&!clockwise),
        }
    }
}

/// Splits a degree-valid edge set (as produced by
/// [`super::search::for_each_edge_set`]) into components.
pub fn components(model: &TriangleModel, present: &[bool]) -> Vec<Component> {
    let n = model.n();
    let mut used = vec![false; present.len()];
    let mut out = Vec::new();

    let degree = |v: usize| model.incident(v).iter().filter(|&&e| present[e]).count();

    // Open paths, started from every terminal in turn.
    let mut starts: Vec<(PathEnd, Option<usize>, usize)> = Vec::new();
    for i in 1..=2 * n {
        let e = model.external_edge(i);
        starts.push((PathEnd::Bottom(i), Some(e), model.edge(e).upper));
    }
    for v in 0..model.vertex_count() {
        match model.role(v) {
            VertexRole::Left(i) if degree(v) == 1 => starts.push((PathEnd::Left(i), None, v)),
            VertexRole::Right(k) if degree(v) == 1 => starts.push((PathEnd::Right(k), None, v)),
            _ => {}
        }
    }
    for (start, first, v0) in starts {
        let first_used = match first {
            Some(e) => used[e],
            None => model.incident(v0).iter().any(|&e| present[e] && used[e]),
        };
        if first_used {
            continue;
        }
        let mut steps = Vec::new();
        if let Some(e) = first {
            used[e] = true;
            steps.push((e, Dir::Up));
        }
        let mut v = v0;
        let end = loop {
            let next = model
                .incident(v)
                .iter()
                .copied()
                .find(|&e| present[e] && !used[e]);
            let Some(e) = next else {
                break match model.role(v) {
                    VertexRole::Left(i) => PathEnd::Left(i),
                    VertexRole::Right(k) => PathEnd::Right(k),
                    role => unreachable!("path stopped at {role:?} vertex {:?}", model.coords(v)),
                };
            };
            used[e] = true;
            let edge = model.edge(e);
            if let EdgeKind::External(i) = edge.kind {
                steps.push((e, Dir::Down));
                break PathEnd::Bottom(i);
            }
            let w = edge.other(v).expect("internal edge");
            steps.push((e, if edge.upper == w { Dir::Up } else { Dir::Down }));
            v = w;
        };
        out.push(Component {
            kind: ComponentKind::Path { start, end },
            steps,
        });
    }

    // Whatever remains lies on closed loops.
    for e0 in 0..present.len() {
        if !present[e0] || used[e0] {
            continue;
        }
        let edge0 = model.edge(e0);
        let start = edge0.lower.expect("loops avoid half-edges");
        let mut steps = Vec::new();
        let mut polygon = vec![model.coords(start)];
        let mut v = start;
        let mut e = e0;
        loop {
            used[e] = true;
            let edge = model.edge(e);
            let w = edge.other(v).expect("internal edge");
            steps.push((e, if edge.upper == w { Dir::Up } else { Dir::Down }));
            v = w;
            if v == start {
                break;
            }
            polygon.push(model.coords(v));
            e = model
                .incident(v)
                .iter()
                .copied()
                .find(|&f| present[f] && !used[f])
                .expect("loop vertex has a second edge");
        }
        out.push(Component {
            kind: ComponentKind::Loop {
                clockwise: signed_area2(&polygon) < 0,
            },
            steps,
        });
    }
    out
}

/// Twice the signed area of a closed polygon; positive when counterclockwise.
fn signed_area2(points: &[(i32, i32)]) -> i64 {
    let k = points.len();
    (0..k)
        .map(|i| {
            let (x1, y1) = points[i];
            let (x2, y2) = points[(i + 1) % k];
            x1 as i64 * y2 as i64 - x2 as i64 * y1 as i64
        })
        .sum()
}

/// Whether the open paths realize the plain TFPL connectivity: bottom ends
/// paired exactly as in `pi`, left sources joined to right sinks.
pub fn paths_match(components: &[Component], pi_partner: &[usize]) -> bool {
    components.iter().all(|c| match c.kind {
        ComponentKind::Path { start, end } => match (start, end) {
            (PathEnd::Bottom(i), PathEnd::Bottom(j)) => pi_partner[i - 1] == j,
            (PathEnd::Left(_), PathEnd::Right(_)) | (PathEnd::Right(_), PathEnd::Left(_)) => true,
            _ => false,
        },
        ComponentKind::Loop { .. } => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_orientation() {
        let ccw = [(0, 0), (1, 0), (1, 1), (0, 1)];
        assert!(signed_area2(&ccw) > 0);
        let cw: Vec<_> = ccw.iter().rev().copied().collect();
        assert!(signed_area2(&cw) < 0);
    }
}
