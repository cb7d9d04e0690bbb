//! Fully packed loops on the square grid `G_n`.
//!
//! Configurations are enumerated by a propagating backtracker (see
//! [`search`]), classified by link pattern, rotated with Wieland's bijection
//! and counted per refined pattern `X(pi, m, k)`.

mod census;
pub mod grid;
mod search;
mod wieland;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use census::{
    cached_census, pattern_census, pattern_census_with, PatternCensus, MAX_CENSUS_SIZE,
};
pub use grid::{external_geometry, GridEdge, GridEdgeKind, GridModel, Point};
pub use wieland::{cell_is_even, cell_sides, reflect, wieland, wieland_inverse};

use crate::words::{LinkPattern, WordError};

/// Default bound on `n + m` for direct refined counts.
pub const DEFAULT_DIRECT_LIMIT: usize = 7;

/// Decisions taken sequentially before the search fans out across threads.
pub const DEFAULT_SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FplError {
    #[error("grid size {size} exceeds the enumeration limit {limit}")]
    LimitExceeded { size: usize, limit: usize },
    #[error("configuration does not have degree 2 at every vertex with {0} external edges")]
    NotFullyPacked(Parity),
    #[error("invalid census: {0}")]
    Census(String),
    #[error(transparent)]
    Pattern(#[from] WordError),
}

/// Which external edges an FPL uses: the odd labels or the even ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Odd => Parity::Even,
            Parity::Even => Parity::Odd,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn matches_label(self, label: u32) -> bool {
        (label % 2 == 1) == self.is_odd()
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

impl std::str::FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(format!("unknown parity {other:?} (expected odd or even)")),
        }
    }
}

/// Shared grid models, one per size.
pub fn grid_model(n: usize) -> Arc<GridModel> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GridModel>>>> = OnceLock::new();
    CACHE
        .get_or_init(Default::default)
        .lock()
        .expect("grid cache poisoned")
        .entry(n)
        .or_insert_with(|| Arc::new(GridModel::new(n)))
        .clone()
}

/// An FPL: a set of grid edges, one bit per edge in [`GridModel`] order.
#[derive(Clone)]
pub struct FplConfiguration {
    grid: Arc<GridModel>,
    bits: Vec<u64>,
    parity: Parity,
}

impl PartialEq for FplConfiguration {
    fn eq(&self, other: &Self) -> bool {
        self.grid.n() == other.grid.n() && self.bits == other.bits && self.parity == other.parity
    }
}

impl Eq for FplConfiguration {}

impl fmt::Debug for FplConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FplConfiguration")
            .field("n", &self.grid.n())
            .field("parity", &self.parity)
            .field("edges", &self.chosen_edges())
            .finish()
    }
}

impl FplConfiguration {
    /// Validates degree 2 everywhere and the external edges of `parity`.
    pub fn from_chosen(
        grid: Arc<GridModel>,
        chosen: &[bool],
        parity: Parity,
    ) -> Result<Self, FplError> {
        assert_eq!(
            chosen.len(),
            grid.edges().len(),
            "edge vector has the wrong length"
        );
        let externals_ok =
            (1..=4 * grid.n() as u32).all(|l| chosen[grid.external(l)] == parity.matches_label(l));
        let degrees_ok = (0..grid.vertex_count())
            .all(|v| grid.incident(v).iter().filter(|&&e| chosen[e]).count() == 2);
        if !externals_ok || !degrees_ok {
            return Err(FplError::NotFullyPacked(parity));
        }
        let mut bits = vec![0u64; chosen.len().div_ceil(64)];
        for (i, _) in chosen.iter().enumerate().filter(|(_, &c)| c) {
            bits[i / 64] |= 1 << (i % 64);
        }
        Ok(FplConfiguration { grid, bits, parity })
    }

    fn from_states(grid: Arc<GridModel>, states: &[u8], parity: Parity) -> Self {
        let mut bits = vec![0u64; states.len().div_ceil(64)];
        for (i, _) in states.iter().enumerate().filter(|(_, &s)| s == search::IN) {
            bits[i / 64] |= 1 << (i % 64);
        }
        FplConfiguration { grid, bits, parity }
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn grid(&self) -> &GridModel {
        &self.grid
    }

    pub fn grid_arc(&self) -> Arc<GridModel> {
        self.grid.clone()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.bits[edge / 64] >> (edge % 64) & 1 == 1
    }

    pub fn chosen_edges(&self) -> Vec<usize> {
        (0..self.grid.edges().len())
            .filter(|&e| self.contains(e))
            .collect()
    }

    pub fn chosen_vec(&self) -> Vec<bool> {
        (0..self.grid.edges().len())
            .map(|e| self.contains(e))
            .collect()
    }
}

/// Traces the path leaving every chosen external edge. Paths never revisit a
/// vertex (each has degree 2) and closed loops are never entered.
pub(crate) fn trace_pattern(model: &GridModel, chosen: impl Fn(usize) -> bool) -> LinkPattern {
    let total = 4 * model.n() as u32;
    let mut done = vec![false; total as usize + 1];
    let mut pairs = Vec::with_capacity(2 * model.n());
    for start in 1..=total {
        if done[start as usize] || !chosen(model.external(start)) {
            continue;
        }
        let mut edge = model.external(start);
        let mut v = model
            .vertex(external_geometry(model.n(), start).0)
            .expect("inner end");
        let mut steps = 0;
        let end = loop {
            edge = model
                .incident(v)
                .iter()
                .copied()
                .find(|&e| e != edge && chosen(e))
                .expect("degree 2");
            if let Some(label) = model.label_of(edge) {
                break label;
            }
            v = model.other_end(edge, v).expect("internal edge");
            steps += 1;
            debug_assert!(steps <= model.vertex_count(), "path revisits a vertex");
        };
        done[start as usize] = true;
        done[end as usize] = true;
        pairs.push((start, end));
    }
    LinkPattern::new(pairs).expect("planar paths give a noncrossing matching")
}

/// `X(F)`: external labels joined by the paths of `F`.
pub fn link_pattern(f: &FplConfiguration) -> LinkPattern {
    trace_pattern(f.grid(), |e| f.contains(e))
}

/// The open paths of `f` as vertex sequences, each starting at its smaller
/// external label.
pub fn open_paths(f: &FplConfiguration) -> Vec<(u32, u32, Vec<usize>)> {
    let model = f.grid();
    let mut out = Vec::new();
    for &(a, b) in link_pattern(f).pairs() {
        let mut edge = model.external(a);
        let mut v = model
            .vertex(external_geometry(model.n(), a).0)
            .expect("inner end");
        let mut vertices = vec![v];
        loop {
            edge = model
                .incident(v)
                .iter()
                .copied()
                .find(|&e| e != edge && f.contains(e))
                .expect("degree 2");
            if model.label_of(edge).is_some() {
                break;
            }
            v = model.other_end(edge, v).expect("internal edge");
            vertices.push(v);
        }
        out.push((a, b, vertices));
    }
    out
}

/// Calls `visit` on every FPL of size `n` and the given parity, in the
/// deterministic depth-first order of the search.
pub fn for_each_fpl(n: usize, parity: Parity, mut visit: impl FnMut(FplConfiguration)) {
    assert!(n >= 1, "grid size must be positive");
    let model = grid_model(n);
    if let Some(root) = search::root(&model, parity) {
        search::walk(&model, root, 0, &mut |s| {
            visit(FplConfiguration::from_states(model.clone(), s, parity))
        });
    }
}

/// All FPLs of size `n` and the given parity, in [`for_each_fpl`] order;
/// subtrees are explored in parallel.
pub fn enumerate_fpl(n: usize, parity: Parity) -> Vec<FplConfiguration> {
    assert!(n >= 1, "grid size must be positive");
    let model = grid_model(n);
    search::fold_subtrees(&model, parity, DEFAULT_SPLIT_DEPTH, Vec::new, |acc, s| {
        acc.push(FplConfiguration::from_states(model.clone(), s, parity))
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Number of FPLs of size `n` and the given parity.
pub fn count_fpl(n: usize, parity: Parity) -> u64 {
    count_fpl_with(n, parity, DEFAULT_SPLIT_DEPTH)
}

pub fn count_fpl_with(n: usize, parity: Parity, split_depth: usize) -> u64 {
    assert!(n >= 1, "grid size must be positive");
    let model = grid_model(n);
    search::fold_subtrees(&model, parity, split_depth, || 0u64, |acc, _| *acc += 1)
        .into_iter()
        .sum()
}

/// `X(pi, m, k)`: `pi` nested in `m` arches, label `i` sent to
/// `k + 2i - 1` modulo `4(n + m)`.
pub fn build_link_pattern(pi: &LinkPattern, m: usize, k: u32) -> Result<LinkPattern, FplError> {
    let nested = pi.nest(m)?;
    let modulus = 4 * nested.size() as u32;
    Ok(nested.relabel(|i| (k + 2 * i - 2) % modulus + 1)?)
}

/// [`a_pi_direct_with`] for `k = 0` and the default size limit.
pub fn a_pi_direct(pi: &LinkPattern, m: usize) -> Result<u64, FplError> {
    a_pi_direct_with(pi, m, 0, DEFAULT_DIRECT_LIMIT)
}

/// `A_pi(m)` counted on `G_{n+m}` as the number of FPLs with link pattern
/// `X(pi, m, k)`.
pub fn a_pi_direct_with(pi: &LinkPattern, m: usize, k: u32, limit: usize) -> Result<u64, FplError> {
    let size = pi.size() + m;
    if size > limit {
        return Err(FplError::LimitExceeded { size, limit });
    }
    let target = build_link_pattern(pi, m, k)?;
    let parity = if k.is_multiple_of(2) {
        Parity::Odd
    } else {
        Parity::Even
    };
    Ok(cached_census(size, parity).count(&target))
}

/// `FPL(n)`, the product `prod_{i<n} (3i+1)! / (n+i)!`.
pub fn fpl_total_formula(n: usize) -> BigInt {
    let factorial = |k: usize| (1..=k).fold(BigInt::one(), |acc, j| acc * j);
    let (num, den) = (0..n).fold((BigInt::one(), BigInt::one()), |(num, den), i| {
        (num * factorial(3 * i + 1), den * factorial(n + i))
    });
    num / den
}
