use std::collections::HashMap;

/// A lattice point; grid vertices are `(col, row)` in `0..n`, points one step
/// outside carry the far ends of external half-edges.
pub type Point = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridEdgeKind {
    Horizontal,
    Vertical,
    /// External half-edge with its label, `1..=4n`.
    External(u32),
}

/// A unit segment of the grid; `a < b` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridEdge {
    pub a: Point,
    pub b: Point,
    pub kind: GridEdgeKind,
}

/// The grid `G_n` with bottom-left origin, `x` to the right and `y` upwards.
///
/// Edge indices: horizontal edges row by row (bottom row first, left to
/// right), then vertical edges the same way, then external half-edges by
/// label. External labels run counterclockwise from the leftmost bottom
/// edge: bottom `1..=n` left to right, right side `n+1..=2n` bottom to top,
/// top `2n+1..=3n` right to left, left side `3n+1..=4n` top to bottom.
#[derive(Debug, Clone)]
pub struct GridModel {
    n: usize,
    edges: Vec<GridEdge>,
    by_segment: HashMap<(Point, Point), usize>,
    incident: Vec<Vec<usize>>,
}

impl GridModel {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "grid size must be positive");
        let m = n as i32;
        let mut edges = Vec::new();
        for r in 0..m {
            for c in 0..m - 1 {
                edges.push(GridEdge {
                    a: (c, r),
                    b: (c + 1, r),
                    kind: GridEdgeKind::Horizontal,
                });
            }
        }
        for r in 0..m - 1 {
            for c in 0..m {
                edges.push(GridEdge {
                    a: (c, r),
                    b: (c, r + 1),
                    kind: GridEdgeKind::Vertical,
                });
            }
        }
        for label in 1..=4 * n as u32 {
            let (inside, outside) = external_geometry(n, label);
            let (a, b) = if inside < outside {
                (inside, outside)
            } else {
                (outside, inside)
            };
            edges.push(GridEdge {
                a,
                b,
                kind: GridEdgeKind::External(label),
            });
        }
        let by_segment = edges
            .iter()
            .enumerate()
            .map(|(i, e)| ((e.a, e.b), i))
            .collect();
        let mut incident = vec![Vec::with_capacity(4); n * n];
        let model_index = |p: Point| -> Option<usize> {
            (p.0 >= 0 && p.1 >= 0 && p.0 < m && p.1 < m).then(|| (p.1 * m + p.0) as usize)
        };
        for (i, e) in edges.iter().enumerate() {
            for p in [e.a, e.b] {
                if let Some(v) = model_index(p) {
                    incident[v].push(i);
                }
            }
        }
        GridModel {
            n,
            edges,
            by_segment,
            incident,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.n
    }

    /// Row-major vertex index.
    pub fn vertex(&self, p: Point) -> Option<usize> {
        let m = self.n as i32;
        (p.0 >= 0 && p.1 >= 0 && p.0 < m && p.1 < m).then(|| (p.1 * m + p.0) as usize)
    }

    pub fn point(&self, v: usize) -> Point {
        ((v % self.n) as i32, (v / self.n) as i32)
    }

    pub fn edges(&self) -> &[GridEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &GridEdge {
        &self.edges[id]
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// The edge joining two adjacent points, if it belongs to the grid.
    pub fn segment(&self, p: Point, q: Point) -> Option<usize> {
        let key = if p < q { (p, q) } else { (q, p) };
        self.by_segment.get(&key).copied()
    }

    pub fn external(&self, label: u32) -> usize {
        self.edges.len() - 4 * self.n + label as usize - 1
    }

    pub fn label_of(&self, id: usize) -> Option<u32> {
        match self.edges[id].kind {
            GridEdgeKind::External(l) => Some(l),
            _ => None,
        }
    }

    /// The grid vertex an edge leaves from when walked away from `v`.
    pub fn other_end(&self, id: usize, v: usize) -> Option<usize> {
        let e = &self.edges[id];
        let here = self.point(v);
        let there = if e.a == here { e.b } else { e.a };
        self.vertex(there)
    }
}

/// `(vertex, outer point)` of external label `label` on `G_n`.
pub fn external_geometry(n: usize, label: u32) -> (Point, Point) {
    let m = n as i32;
    let l = label as i32;
    assert!(
        l >= 1 && l <= 4 * m,
        "label {label} out of range for n = {n}"
    );
    if l <= m {
        let c = l - 1;
        ((c, 0), (c, -1))
    } else if l <= 2 * m {
        let r = l - m - 1;
        ((m - 1, r), (m, r))
    } else if l <= 3 * m {
        let c = 3 * m - l;
        ((c, m - 1), (c, m))
    } else {
        let r = 4 * m - l;
        ((0, r), (-1, r))
    }
}
