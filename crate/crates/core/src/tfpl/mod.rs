//! Triangle fully packed loops.
//!
//! A configuration lives on the triangle `T^n` (see [`TriangleModel`]) with
//! boundary words `sigma` (left side, read bottom to top), `pi` (bottom
//! half-edges, left to right) and `tau` (right side, read top to bottom).
//! Plain configurations are undirected; their validity is decided through
//! the canonical orientation, which makes the oriented model the single
//! source of truth for the boundary rules.

mod frontier;
mod lgv;
mod model;
pub mod orient;
pub mod search;
mod table;

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::words::BinaryWord;

pub use frontier::{
    count_by_backtracking, count_by_boundary, BoundaryCounts, SweepMode, MAX_SWEEP_SIZE,
};
pub use lgv::{
    bareiss_determinant, binomial, corollary_values, lgv_count, lgv_determinants, reverse_shape,
    tau_window, CorollaryCase, CorollaryValue, ReverseShape,
};
pub use model::{Dir, EdgeKind, TriangleEdge, TriangleModel, VertexRole};
pub use table::{
    cached_t_table, t_table, t_table_with_limit, TTable, TTableEntry, DEFAULT_TABLE_LIMIT,
    MAX_TABLE_FILE_SIZE,
};

use orient::{components, paths_match};
use search::{for_each_edge_set, BoundarySpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TfplError {
    #[error("boundary words {0}, {1}, {2} must have one common even length")]
    LengthMismatch(BinaryWord, BinaryWord, BinaryWord),
    #[error("boundary word {0} must have as many 0s as 1s")]
    Unbalanced(BinaryWord),
    #[error("size {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("{sigma} and {pi} do not form a reverse shape")]
    NotReverseShape { sigma: BinaryWord, pi: BinaryWord },
    #[error("{tau} lies outside the window 0^{zeros} ... 1^{ones}")]
    TauOutsideWindow {
        tau: BinaryWord,
        zeros: usize,
        ones: usize,
    },
    #[error("{sigma} is not below {pi}")]
    NotComparable { sigma: BinaryWord, pi: BinaryWord },
    #[error("malformed t-table: {0}")]
    Table(String),
}

/// The three boundary words of a triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Boundary {
    pub sigma: BinaryWord,
    pub pi: BinaryWord,
    pub tau: BinaryWord,
}

impl Boundary {
    pub fn new(sigma: BinaryWord, pi: BinaryWord, tau: BinaryWord) -> Result<Self, TfplError> {
        let len = sigma.len();
        if len == 0 || len % 2 == 1 || pi.len() != len || tau.len() != len {
            return Err(TfplError::LengthMismatch(sigma, pi, tau));
        }
        for w in [&sigma, &pi, &tau] {
            if w.count_zeros() != w.count_ones() {
                return Err(TfplError::Unbalanced(w.clone()));
            }
        }
        Ok(Boundary { sigma, pi, tau })
    }

    pub fn n(&self) -> usize {
        self.sigma.len() / 2
    }
}

/// Partner of each bottom label under the matching of `pi`, or `None` when
/// `pi` is not a Dyck word.
fn partners(pi: &[u8]) -> Option<Vec<usize>> {
    let mut partner = vec![0; pi.len()];
    let mut stack = Vec::new();
    for (i, &c) in pi.iter().enumerate() {
        if c == 0 {
            stack.push(i);
        } else {
            let j = stack.pop()?;
            partner[i] = j + 1;
            partner[j] = i + 1;
        }
    }
    stack.is_empty().then_some(partner)
}

fn coords_of(model: &TriangleModel, e: usize) -> ((i32, i32), (i32, i32)) {
    let edge = model.edge(e);
    let upper = model.coords(edge.upper);
    let lower = match edge.lower {
        Some(l) => model.coords(l),
        None => (upper.0, upper.1 - 1),
    };
    (lower, upper)
}

/// An undirected TFPL. Edges are indexed as in the shared [`TriangleModel`].
#[derive(Debug, Clone)]
pub struct TfplConfiguration {
    model: Arc<TriangleModel>,
    boundary: Boundary,
    present: Vec<bool>,
}

impl TfplConfiguration {
    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn model(&self) -> &TriangleModel {
        &self.model
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.present[edge]
    }

    /// Edges as coordinate pairs, lower diagonal end first. A bottom
    /// half-edge at `(x, 0)` is reported as `((x, -1), (x, 0))`.
    pub fn edges(&self) -> Vec<((i32, i32), (i32, i32))> {
        (0..self.present.len())
            .filter(|&e| self.present[e])
            .map(|e| coords_of(&self.model, e))
            .collect()
    }

    /// The orientation `or(f)`: open paths from source to sink, loops clockwise.
    pub fn canonical_orientation(&self) -> OrientedTfpl {
        let pi = self.boundary.pi.letters();
        let mut directions = vec![None; self.present.len()];
        for comp in components(&self.model, &self.present) {
            let reverse = comp.orientations(&self.model, pi)[0];
            for &(e, d) in &comp.steps {
                directions[e] = Some(if reverse { d.flip() } else { d });
            }
        }
        OrientedTfpl {
            model: self.model.clone(),
            boundary: self.boundary.clone(),
            directions,
        }
    }
}

/// A TFPL with every edge oriented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedTfpl {
    model: Arc<TriangleModel>,
    boundary: Boundary,
    directions: Vec<Option<Dir>>,
}

impl PartialEq for TriangleModel {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n()
    }
}
impl Eq for TriangleModel {}

impl OrientedTfpl {
    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn model(&self) -> &TriangleModel {
        &self.model
    }

    pub fn direction(&self, edge: usize) -> Option<Dir> {
        self.directions[edge]
    }

    /// Directed edges as `(tail, head)` coordinate pairs; bottom half-edges
    /// use `(x, -1)` for their outer end.
    pub fn directed_edges(&self) -> Vec<((i32, i32), (i32, i32))> {
        (0..self.directions.len())
            .filter_map(|e| {
                let d = self.directions[e]?;
                let (lo, up) = coords_of(&self.model, e);
                Some(if d == Dir::Up { (lo, up) } else { (up, lo) })
            })
            .collect()
    }

    /// The underlying undirected configuration.
    pub fn underlying(&self) -> TfplConfiguration {
        TfplConfiguration {
            model: self.model.clone(),
            boundary: self.boundary.clone(),
            present: self.directions.iter().map(Option::is_some).collect(),
        }
    }

    /// `(N_1, ..., N_{2n-1})`: edges directed from `O_i` back down to `E_i`.
    pub fn n_stats(&self) -> Vec<i64> {
        let n = self.model.n();
        let mut stats = vec![0i64; 2 * n - 1];
        for (e, d) in self.directions.iter().enumerate() {
            if *d != Some(Dir::Down) {
                continue;
            }
            let edge = self.model.edge(e);
            let Some(lower) = edge.lower else { continue };
            let diag = self.model.diagonal(lower);
            if diag % 2 == 0 {
                stats[(diag / 2) as usize] += 1;
            }
        }
        stats
    }

    /// Whether this is `or(f)` for a plain TFPL `f`.
    pub fn is_well_oriented(&self) -> bool {
        let plain = self.underlying();
        is_valid_plain(&plain.model, &plain.boundary, &plain.present)
            && plain.canonical_orientation() == *self
    }
}

/// Shared models, one per size.
pub fn triangle(n: usize) -> Arc<TriangleModel> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TriangleModel>>>> = OnceLock::new();
    let mut cache = CACHE
        .get_or_init(Default::default)
        .lock()
        .expect("model cache");
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(TriangleModel::new(n)))
        .clone()
}

fn is_valid_plain(model: &TriangleModel, boundary: &Boundary, present: &[bool]) -> bool {
    let Some(partner) = partners(boundary.pi.letters()) else {
        return false;
    };
    let comps = components(model, present);
    paths_match(&comps, &partner)
        && comps
            .iter()
            .all(|c| c.canonical_ok(model, boundary.pi.letters()))
}

/// Calls `visit` on every plain TFPL with the given boundary.
pub fn for_each_tfpl<F: FnMut(&TfplConfiguration)>(boundary: &Boundary, mut visit: F) {
    let model = triangle(boundary.n());
    let spec = BoundarySpec {
        sigma: Some(boundary.sigma.letters()),
        tau: Some(boundary.tau.letters()),
    };
    for_each_edge_set(&model, spec, |present| {
        if is_valid_plain(&model, boundary, present) {
            visit(&TfplConfiguration {
                model: model.clone(),
                boundary: boundary.clone(),
                present: present.to_vec(),
            });
        }
    });
}

/// Calls `visit` on every oriented TFPL with the given boundary.
pub fn for_each_oriented<F: FnMut(&OrientedTfpl)>(boundary: &Boundary, mut visit: F) {
    let model = triangle(boundary.n());
    let pi = boundary.pi.letters();
    let spec = BoundarySpec {
        sigma: Some(boundary.sigma.letters()),
        tau: Some(boundary.tau.letters()),
    };
    for_each_edge_set(&model, spec, |present| {
        let comps = components(&model, present);
        let choices: Vec<Vec<bool>> = comps.iter().map(|c| c.orientations(&model, pi)).collect();
        if choices.iter().any(Vec::is_empty) {
            return;
        }
        // Odometer over the per-component choices.
        let mut pick = vec![0usize; comps.len()];
        loop {
            let mut directions = vec![None; present.len()];
            for (k, comp) in comps.iter().enumerate() {
                let reverse = choices[k][pick[k]];
                for &(e, d) in &comp.steps {
                    directions[e] = Some(if reverse { d.flip() } else { d });
                }
            }
            visit(&OrientedTfpl {
                model: model.clone(),
                boundary: boundary.clone(),
                directions,
            });
            let Some(k) = (0..comps.len()).find(|&k| pick[k] + 1 < choices[k].len()) else {
                break;
            };
            pick[k] += 1;
            pick[..k].fill(0);
        }
    });
}

pub fn enumerate_tfpl(
    sigma: &BinaryWord,
    pi: &BinaryWord,
    tau: &BinaryWord,
) -> Result<Vec<TfplConfiguration>, TfplError> {
    let boundary = Boundary::new(sigma.clone(), pi.clone(), tau.clone())?;
    let mut out = Vec::new();
    for_each_tfpl(&boundary, |f| out.push(f.clone()));
    Ok(out)
}

pub fn enumerate_oriented(
    sigma: &BinaryWord,
    pi: &BinaryWord,
    tau: &BinaryWord,
) -> Result<Vec<OrientedTfpl>, TfplError> {
    let boundary = Boundary::new(sigma.clone(), pi.clone(), tau.clone())?;
    let mut out = Vec::new();
    for_each_oriented(&boundary, |f| out.push(f.clone()));
    Ok(out)
}

/// `t_{sigma,tau}^pi`, counted by the frontier sweep.
pub fn t_count(sigma: &BinaryWord, pi: &BinaryWord, tau: &BinaryWord) -> Result<BigInt, TfplError> {
    let boundary = Boundary::new(sigma.clone(), pi.clone(), tau.clone())?;
    if boundary.n() > MAX_SWEEP_SIZE {
        return Err(TfplError::LimitExceeded {
            n: boundary.n(),
            limit: MAX_SWEEP_SIZE,
        });
    }
    if partners(pi.letters()).is_none() {
        return Ok(BigInt::from(0));
    }
    let counts = count_by_boundary(
        &triangle(boundary.n()),
        pi,
        Some(sigma),
        Some(tau),
        SweepMode::PlainOnly,
    );
    Ok(counts.plain(sigma, tau))
}

/// Number of oriented TFPLs with the given boundary, counted by the sweep.
pub fn oriented_count(
    sigma: &BinaryWord,
    pi: &BinaryWord,
    tau: &BinaryWord,
) -> Result<BigInt, TfplError> {
    let boundary = Boundary::new(sigma.clone(), pi.clone(), tau.clone())?;
    if boundary.n() > MAX_SWEEP_SIZE {
        return Err(TfplError::LimitExceeded {
            n: boundary.n(),
            limit: MAX_SWEEP_SIZE,
        });
    }
    let counts = count_by_boundary(
        &triangle(boundary.n()),
        pi,
        Some(sigma),
        Some(tau),
        SweepMode::PlainAndOriented,
    );
    Ok(counts.oriented(sigma, tau).expect("oriented sweep"))
}

#[cfg(test)]
mod tests;
