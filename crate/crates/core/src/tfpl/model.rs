use std::collections::HashMap;

/// Role a vertex plays in the boundary conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Internal,
    /// Left boundary vertex `(i-1, i-1)` carrying letter `sigma_i` (1-based),
    /// `i < 2n`.
    Left(usize),
    /// Right boundary vertex `(2n-1+j, 2n-1-j)` carrying letter `tau_{j+1}`
    /// (stored 1-based), `j >= 1`.
    Right(usize),
    /// The apex `(2n-1, 2n-1)`; it carries `sigma_{2n}` and `tau_1` and is
    /// isolated in every configuration.
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
    /// Bottom half-edge below `(2i-2, 0)`, `i` 1-based.
    External(usize),
}

/// An edge between consecutive diagonals `x+y = d` and `d+1`.
///
/// `lower` is on diagonal `d` (`None` for a bottom half-edge, whose other end
/// is outside the triangle) and `upper` on `d+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleEdge {
    pub lower: Option<usize>,
    pub upper: usize,
    pub kind: EdgeKind,
}

impl TriangleEdge {
    pub fn other(&self, v: usize) -> Option<usize> {
        if v == self.upper {
            self.lower
        } else {
            Some(self.upper)
        }
    }
}

/// Direction of an oriented edge relative to the diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// From the lower diagonal to the upper one: right or up. For a bottom
    /// half-edge, into the triangle.
    Up,
    /// Left or down; for a bottom half-edge, out of the triangle.
    Down,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

/// The triangle `T^n`: points `(x, y)` with `x >= y >= 0` and `x + y <= 4n-2`,
/// plus `2n` bottom half-edges below `(2i-2, 0)`.
///
/// Vertices are numbered diagonal by diagonal (`x + y` increasing), bottom to
/// top within a diagonal; `E_i` is diagonal `2i-2` and `O_i` diagonal `2i-1`.
#[derive(Debug, Clone)]
pub struct TriangleModel {
    n: usize,
    coords: Vec<(i32, i32)>,
    roles: Vec<VertexRole>,
    index: HashMap<(i32, i32), usize>,
    edges: Vec<TriangleEdge>,
    incident: Vec<Vec<usize>>,
    /// Per left letter `i` (1-based, `i < 2n`): the edge below `(i-1, i-1)`.
    left_down: Vec<usize>,
    /// Per right letter `k` (1-based, `k >= 2`): the edge below the boundary
    /// vertex carrying `tau_k`.
    right_down: Vec<usize>,
    external: Vec<usize>,
}

impl TriangleModel {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "triangle size must be positive");
        let top = 4 * n as i32 - 2;
        let mut coords = Vec::new();
        for d in 0..=top {
            for y in 0..=d / 2 {
                coords.push((d - y, y));
            }
        }
        let index: HashMap<(i32, i32), usize> =
            coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let apex = 2 * n as i32 - 1;
        let roles = coords
            .iter()
            .map(|&(x, y)| {
                if (x, y) == (apex, apex) {
                    VertexRole::Top
                } else if x == y {
                    VertexRole::Left(x as usize + 1)
                } else if x + y == top {
                    // (2n-1+j, 2n-1-j) carries tau_{j+1}.
                    VertexRole::Right((x - apex) as usize + 1)
                } else {
                    VertexRole::Internal
                }
            })
            .collect();

        let mut edges = Vec::new();
        for (v, &(x, y)) in coords.iter().enumerate() {
            if let Some(&u) = index.get(&(x + 1, y)) {
                edges.push(TriangleEdge {
                    lower: Some(v),
                    upper: u,
                    kind: EdgeKind::Horizontal,
                });
            }
            if let Some(&u) = index.get(&(x, y + 1)) {
                edges.push(TriangleEdge {
                    lower: Some(v),
                    upper: u,
                    kind: EdgeKind::Vertical,
                });
            }
        }
        for i in 1..=2 * n {
            let v = index[&(2 * i as i32 - 2, 0)];
            edges.push(TriangleEdge {
                lower: None,
                upper: v,
                kind: EdgeKind::External(i),
            });
        }
        // Sort by the diagonal of the upper end, then bottom to top.
        edges.sort_by_key(|e| {
            let (x, y) = coords[e.upper];
            (x + y, y, e.lower.is_some())
        });

        let mut incident = vec![Vec::new(); coords.len()];
        for (id, e) in edges.iter().enumerate() {
            incident[e.upper].push(id);
            if let Some(l) = e.lower {
                incident[l].push(id);
            }
        }

        let find = |pred: &dyn Fn(&TriangleEdge) -> bool| -> usize {
            edges.iter().position(pred).expect("edge present in model")
        };
        let mut left_down = vec![usize::MAX; 2 * n];
        for i in 1..2 * n {
            let v = index[&(i as i32 - 1, i as i32 - 1)];
            left_down[i] = find(&|e| e.upper == v && e.kind != EdgeKind::Horizontal);
        }
        let mut right_down = vec![usize::MAX; 2 * n + 1];
        for (k, slot) in right_down.iter_mut().enumerate().skip(2) {
            let j = k as i32 - 1;
            let v = index[&(apex + j, apex - j)];
            *slot = find(&|e| e.upper == v && e.kind != EdgeKind::Horizontal);
        }
        let external = (0..=2 * n)
            .map(|i| {
                if i == 0 {
                    usize::MAX
                } else {
                    find(&|e| e.kind == EdgeKind::External(i))
                }
            })
            .collect();

        TriangleModel {
            n,
            coords,
            roles,
            index,
            edges,
            incident,
            left_down,
            right_down,
            external,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self, v: usize) -> (i32, i32) {
        self.coords[v]
    }

    pub fn vertex_at(&self, x: i32, y: i32) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }

    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    pub fn edges(&self) -> &[TriangleEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &TriangleEdge {
        &self.edges[id]
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.incident[a]
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(a) == Some(b))
    }

    /// The edge below the left boundary vertex carrying `sigma_i`, `1 <= i < 2n`.
    pub fn left_down_edge(&self, i: usize) -> usize {
        self.left_down[i]
    }

    /// The edge below the right boundary vertex carrying `tau_k`, `2 <= k <= 2n`.
    pub fn right_down_edge(&self, k: usize) -> usize {
        self.right_down[k]
    }

    /// Bottom half-edge `i`, 1-based.
    pub fn external_edge(&self, i: usize) -> usize {
        self.external[i]
    }

    /// Diagonal index `x + y` of a vertex.
    pub fn diagonal(&self, v: usize) -> i32 {
        let (x, y) = self.coords[v];
        x + y
    }

    /// Orientation an edge must carry whenever it is present, from the
    /// boundary rules: left boundary edges point right and up, right boundary
    /// edges point right and down, bottom half-edge `i` points in iff
    /// `pi_i = 0`.
    pub fn forced_direction(&self, id: usize, pi: &[u8]) -> Option<Dir> {
        let e = &self.edges[id];
        if let EdgeKind::External(i) = e.kind {
            return Some(if pi[i - 1] == 0 { Dir::Up } else { Dir::Down });
        }
        let lower = e.lower.expect("internal edge has two ends");
        match (self.roles[lower], self.roles[e.upper]) {
            // Leaving a left boundary vertex to the right.
            (VertexRole::Left(_), _) => Some(Dir::Up),
            // Entering a left boundary vertex from below.
            (_, VertexRole::Left(_)) => Some(Dir::Up),
            (_, VertexRole::Right(_)) => {
                if e.kind == EdgeKind::Horizontal {
                    Some(Dir::Up)
                } else {
                    Some(Dir::Down)
                }
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_sizes() {
        for n in 1..=4 {
            let t = TriangleModel::new(n);
            assert_eq!(t.vertex_count(), 4 * n * n);
            for i in 1..=2 * n as i32 {
                let e = (0..t.vertex_count())
                    .filter(|&v| t.diagonal(v) == 2 * i - 2)
                    .count();
                assert_eq!(e, i as usize);
                if i < 2 * n as i32 {
                    let o = (0..t.vertex_count())
                        .filter(|&v| t.diagonal(v) == 2 * i - 1)
                        .count();
                    assert_eq!(o, i as usize);
                }
            }
        }
    }

    #[test]
    fn boundary_vertices() {
        let n = 3;
        let t = TriangleModel::new(n);
        for i in 0..2 * n as i32 {
            let left = t.vertex_at(i, i).unwrap();
            let right = t
                .vertex_at(2 * n as i32 - 1 + i, 2 * n as i32 - 1 - i)
                .unwrap();
            if i == 2 * n as i32 - 1 {
                assert_eq!(t.role(left), VertexRole::Top);
            } else {
                assert_eq!(t.role(left), VertexRole::Left(i as usize + 1));
            }
            if i == 0 {
                assert_eq!(t.role(right), VertexRole::Top);
            } else {
                assert_eq!(t.role(right), VertexRole::Right(i as usize + 1));
            }
        }
        // Internal vertices have four neighbours (half-edges included).
        for v in 0..t.vertex_count() {
            if t.role(v) == VertexRole::Internal {
                let (x, y) = t.coords(v);
                let expected = if y == 0 && x % 2 == 1 { 3 } else { 4 };
                assert_eq!(t.incident(v).len(), expected, "{:?}", (x, y));
            }
        }
    }
}
