use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::search::{fold_subtrees, IN};
use super::{grid_model, trace_pattern, FplError, Parity, DEFAULT_SPLIT_DEPTH};
use crate::words::LinkPattern;

/// Number of FPLs of one parity per link pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternCensus {
    pub n: usize,
    pub parity: Parity,
    pub counts: BTreeMap<LinkPattern, u64>,
}

#[derive(Serialize, Deserialize)]
struct CensusEntry {
    pattern: LinkPattern,
    count: Count,
}

/// Written as a decimal string; a bare JSON integer is accepted on input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Count {
    Text(String),
    Number(u64),
}

impl Count {
    fn value(&self) -> Result<u64, FplError> {
        match self {
            Count::Number(v) => Ok(*v),
            Count::Text(s) => s
                .parse()
                .map_err(|_| FplError::Census(format!("bad count {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CensusJson {
    n: usize,
    parity: Parity,
    counts: Vec<CensusEntry>,
}

/// Largest grid a census file may describe.
pub const MAX_CENSUS_SIZE: usize = 16;

impl PatternCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `A_X`; zero for patterns that never occur.
    pub fn count(&self, pattern: &LinkPattern) -> u64 {
        self.counts.get(pattern).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        let counts = self
            .counts
            .iter()
            .map(|(p, &c)| CensusEntry {
                pattern: p.clone(),
                count: Count::Text(c.to_string()),
            })
            .collect();
        serde_json::to_string_pretty(&CensusJson {
            n: self.n,
            parity: self.parity,
            counts,
        })
        .expect("census serializes")
    }

    /// Parses a census, checking that every pattern lives on the external
    /// labels of the stated parity and appears once.
    pub fn from_json(text: &str) -> Result<Self, FplError> {
        let raw: CensusJson =
            serde_json::from_str(text).map_err(|e| FplError::Census(e.to_string()))?;
        if raw.n == 0 || raw.n > MAX_CENSUS_SIZE {
            return Err(FplError::Census(format!("unsupported size {}", raw.n)));
        }
        let expected: Vec<u32> = (1..=4 * raw.n as u32)
            .filter(|&l| raw.parity.matches_label(l))
            .collect();
        let mut counts = BTreeMap::new();
        for entry in raw.counts {
            if entry.pattern.labels() != expected {
                return Err(FplError::Census(format!(
                    "pattern {} does not use the {} labels of G_{}",
                    entry.pattern, raw.parity, raw.n
                )));
            }
            if counts
                .insert(entry.pattern.clone(), entry.count.value()?)
                .is_some()
            {
                return Err(FplError::Census(format!(
                    "duplicate pattern {}",
                    entry.pattern
                )));
            }
        }
        Ok(PatternCensus {
            n: raw.n,
            parity: raw.parity,
            counts,
        })
    }
}

/// [`pattern_census_with`] at the default split depth.
pub fn pattern_census(n: usize, parity: Parity) -> PatternCensus {
    pattern_census_with(n, parity, DEFAULT_SPLIT_DEPTH)
}

/// Counts FPLs by link pattern, running the subtrees below `split_depth`
/// decisions in parallel.
pub fn pattern_census_with(n: usize, parity: Parity, split_depth: usize) -> PatternCensus {
    let model = grid_model(n);
    let parts = fold_subtrees(&model, parity, split_depth, HashMap::new, |acc, states| {
        let pattern = trace_pattern(&model, |e| states[e] == IN);
        *acc.entry(pattern).or_insert(0u64) += 1;
    });
    let mut counts = BTreeMap::new();
    for part in parts {
        for (p, c) in part {
            *counts.entry(p).or_insert(0) += c;
        }
    }
    PatternCensus { n, parity, counts }
}

/// Shared, memoized censuses; repeated refined counts on one grid reuse a
/// single enumeration.
pub fn cached_census(n: usize, parity: Parity) -> Arc<PatternCensus> {
    type Memo = Mutex<HashMap<(usize, Parity), Arc<OnceLock<Arc<PatternCensus>>>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let slot = MEMO
        .get_or_init(Default::default)
        .lock()
        .expect("census memo poisoned")
        .entry((n, parity))
        .or_default()
        .clone();
    slot.get_or_init(|| Arc::new(pattern_census(n, parity)))
        .clone()
}
