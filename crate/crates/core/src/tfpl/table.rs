use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::frontier::{count_by_boundary, SweepMode};
use super::{triangle, TfplError};
use crate::words::{enumerate_dyck, BinaryWord};

/// Largest size [`t_table`] accepts without an explicit override.
pub const DEFAULT_TABLE_LIMIT: usize = 4;

/// Largest size a t-table file may describe. The table is stored densely,
/// `Cat(n)^3` entries, so this also bounds what a hostile file can allocate.
pub const MAX_TABLE_FILE_SIZE: usize = 6;

/// All `t_{sigma,tau}^pi` over `D_n^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TTable {
    n: usize,
    dyck: Vec<BinaryWord>,
    index: BTreeMap<BinaryWord, usize>,
    /// `values[pi][sigma][tau]`, positions in `dyck`.
    values: Vec<Vec<Vec<BigInt>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TTableEntry {
    pub sigma: BinaryWord,
    pub tau: BinaryWord,
    pub pi: BinaryWord,
    /// Decimal string.
    pub t: String,
}

#[derive(Serialize, Deserialize)]
struct TTableJson {
    n: usize,
    entries: Vec<TTableEntry>,
}

impl TTable {
    fn zeros(n: usize) -> Self {
        let dyck = enumerate_dyck(n);
        let index = dyck
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let k = dyck.len();
        TTable {
            n,
            dyck,
            index,
            values: vec![vec![vec![BigInt::zero(); k]; k]; k],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `D_n` in lexicographic order; the order every matrix view uses.
    pub fn dyck_words(&self) -> &[BinaryWord] {
        &self.dyck
    }

    pub fn position(&self, w: &BinaryWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `t_{sigma,tau}^pi`; zero for words outside `D_n`.
    pub fn get(&self, sigma: &BinaryWord, tau: &BinaryWord, pi: &BinaryWord) -> BigInt {
        match (self.position(sigma), self.position(tau), self.position(pi)) {
            (Some(s), Some(t), Some(p)) => self.values[p][s][t].clone(),
            _ => BigInt::zero(),
        }
    }

    /// The matrix `t^pi`, rows `sigma`, columns `tau`.
    pub fn matrix_for(&self, pi: &BinaryWord) -> Option<&Vec<Vec<BigInt>>> {
        self.position(pi).map(|p| &self.values[p])
    }

    /// Every `(sigma, tau, pi, t)`, zeros included, in table order.
    pub fn entries(
        &self,
    ) -> impl Iterator<Item = (&BinaryWord, &BinaryWord, &BinaryWord, &BigInt)> {
        let d = &self.dyck;
        (0..d.len()).flat_map(move |p| {
            (0..d.len()).flat_map(move |s| {
                (0..d.len()).map(move |t| (&d[s], &d[t], &d[p], &self.values[p][s][t]))
            })
        })
    }

    pub fn to_json(&self) -> String {
        let entries = self
            .entries()
            .map(|(s, t, p, v)| TTableEntry {
                sigma: s.clone(),
                tau: t.clone(),
                pi: p.clone(),
                t: v.to_string(),
            })
            .collect();
        serde_json::to_string_pretty(&TTableJson { n: self.n, entries })
            .expect("t-table serializes")
    }

    /// Parses the JSON interchange form. Missing entries read as zero;
    /// duplicates, words outside `D_n` and negative counts are rejected.
    pub fn from_json(text: &str) -> Result<Self, TfplError> {
        let raw: TTableJson =
            serde_json::from_str(text).map_err(|e| TfplError::Table(e.to_string()))?;
        if raw.n == 0 || raw.n > MAX_TABLE_FILE_SIZE {
            return Err(TfplError::Table(format!("unsupported size {}", raw.n)));
        }
        let mut table = TTable::zeros(raw.n);
        let mut seen = std::collections::BTreeSet::new();
        for e in raw.entries {
            let pos = |w: &BinaryWord| {
                table
                    .position(w)
                    .ok_or_else(|| TfplError::Table(format!("{w} is not in D_{}", raw.n)))
            };
            let (s, t, p) = (pos(&e.sigma)?, pos(&e.tau)?, pos(&e.pi)?);
            let value: BigInt =
                e.t.parse()
                    .map_err(|_| TfplError::Table(format!("bad count {:?}", e.t)))?;
            if value < BigInt::zero() {
                return Err(TfplError::Table(format!("negative count {value}")));
            }
            if !seen.insert((s, t, p)) {
                return Err(TfplError::Table(format!(
                    "duplicate entry ({}, {}, {})",
                    e.sigma, e.tau, e.pi
                )));
            }
            table.values[p][s][t] = value;
        }
        Ok(table)
    }
}

/// [`t_table_with_limit`] with [`DEFAULT_TABLE_LIMIT`].
pub fn t_table(n: usize) -> Result<TTable, TfplError> {
    t_table_with_limit(n, DEFAULT_TABLE_LIMIT)
}

/// Memoized [`t_table`]: each size is computed once per process.
pub fn cached_t_table(n: usize) -> Result<Arc<TTable>, TfplError> {
    type Memo = Mutex<HashMap<usize, Arc<OnceLock<Arc<TTable>>>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    if n == 0 || n > DEFAULT_TABLE_LIMIT {
        return Err(TfplError::LimitExceeded {
            n,
            limit: DEFAULT_TABLE_LIMIT,
        });
    }
    let slot = MEMO
        .get_or_init(Default::default)
        .lock()
        .expect("table memo poisoned")
        .entry(n)
        .or_default()
        .clone();
    Ok(slot
        .get_or_init(|| Arc::new(t_table(n).expect("size checked above")))
        .clone())
}

/// Builds the full table; one boundary-free sweep per `pi`, run in parallel.
pub fn t_table_with_limit(n: usize, limit: usize) -> Result<TTable, TfplError> {
    let limit = limit.min(super::MAX_SWEEP_SIZE);
    if n == 0 || n > limit {
        return Err(TfplError::LimitExceeded { n, limit });
    }
    let mut table = TTable::zeros(n);
    let model = triangle(n);
    let dyck = table.dyck.clone();
    let per_pi: Vec<Vec<Vec<BigInt>>> = dyck
        .par_iter()
        .map(|pi| {
            let counts = count_by_boundary(&model, pi, None, None, SweepMode::PlainOnly);
            dyck.iter()
                .map(|s| dyck.iter().map(|t| counts.plain(s, t)).collect())
                .collect()
        })
        .collect();
    table.values = per_pi;
    Ok(table)
}
