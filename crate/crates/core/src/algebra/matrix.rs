use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;
use crate::words::{enumerate_dyck, BinaryWord};

/// The lexicographic order on `D_n` shared by every matrix of one size.
#[derive(Debug, PartialEq, Eq)]
pub struct DyckOrder {
    n: usize,
    words: Vec<BinaryWord>,
    index: BTreeMap<BinaryWord, usize>,
}

impl DyckOrder {
    pub fn new(n: usize) -> Arc<Self> {
        let words = enumerate_dyck(n);
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        Arc::new(DyckOrder { n, words, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &BinaryWord) -> Option<usize> {
        self.index.get(w).copied()
    }
}

/// A square integer matrix with rows and columns indexed by `D_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    order: Arc<DyckOrder>,
    entries: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    order: Vec<BinaryWord>,
    /// Decimal strings, row-major.
    entries: Vec<Vec<String>>,
}

impl ExactMatrix {
    pub fn zeros(order: Arc<DyckOrder>) -> Self {
        let k = order.len();
        ExactMatrix {
            order,
            entries: vec![vec![BigInt::zero(); k]; k],
        }
    }

    pub fn identity(order: Arc<DyckOrder>) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..m.dim() {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix entry by entry from the words indexing it.
    pub fn from_fn(
        order: Arc<DyckOrder>,
        mut f: impl FnMut(&BinaryWord, &BinaryWord) -> BigInt,
    ) -> Self {
        let entries = order
            .words()
            .iter()
            .map(|r| order.words().iter().map(|c| f(r, c)).collect())
            .collect();
        ExactMatrix { order, entries }
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    pub fn order(&self) -> &Arc<DyckOrder> {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    /// Entry at `(row, column)` words; `None` for words outside `D_n`.
    pub fn get(&self, row: &BinaryWord, col: &BinaryWord) -> Option<&BigInt> {
        let i = self.order.position(row)?;
        let j = self.order.position(col)?;
        Some(&self.entries[i][j])
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.order, rhs.order, "matrices over different orders");
        let k = self.dim();
        let mut out = ExactMatrix::zeros(self.order.clone());
        for i in 0..k {
            for l in 0..k {
                let a = &self.entries[i][l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..k {
                    let b = &rhs.entries[l][j];
                    if !b.is_zero() {
                        out.entries[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: usize) -> ExactMatrix {
        (0..e).fold(ExactMatrix::identity(self.order.clone()), |acc, _| {
            acc.mul(self)
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == ExactMatrix::identity(self.order.clone())
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.dim())
            .all(|i| self.entries[i][i].is_one() && (0..i).all(|j| self.entries[i][j].is_zero()))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.dim()).all(|i| {
            self.entries[i][i].is_one() && (i + 1..self.dim()).all(|j| self.entries[i][j].is_zero())
        })
    }

    pub fn transpose(&self) -> ExactMatrix {
        let k = self.dim();
        let mut out = ExactMatrix::zeros(self.order.clone());
        for i in 0..k {
            for j in 0..k {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    /// CSV with the words as header row and first column.
    pub fn to_csv(&self) -> String {
        let words = self.order.words();
        let mut out = String::from("word");
        for w in words {
            write!(out, ",{w}").expect("string write");
        }
        out.push('\n');
        for (w, row) in words.iter().zip(&self.entries) {
            out.push_str(&w.to_string());
            for v in row {
                write!(out, ",{v}").expect("string write");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = MatrixJson {
            n: self.n(),
            order: self.order.words().to_vec(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("matrix serializes")
    }

    /// Parses [`ExactMatrix::to_json`] output; the stored order must be the
    /// canonical one for its size.
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        let raw: MatrixJson =
            serde_json::from_str(text).map_err(|e| AlgebraError::Format(e.to_string()))?;
        if raw.n == 0 || raw.n > super::MAX_MATRIX_SIZE {
            return Err(AlgebraError::Format(format!("unsupported size {}", raw.n)));
        }
        let order = DyckOrder::new(raw.n);
        if raw.order != order.words() {
            return Err(AlgebraError::Format(
                "row order is not the lexicographic D_n order".into(),
            ));
        }
        if raw.entries.len() != order.len() || raw.entries.iter().any(|r| r.len() != order.len()) {
            return Err(AlgebraError::Format("matrix is not square over D_n".into()));
        }
        let entries = raw
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        v.parse()
                            .map_err(|_| AlgebraError::Format(format!("bad entry {v:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Ok(ExactMatrix { order, entries })
    }
}

/// Inverse of a unitriangular matrix (upper or lower) by substitution;
/// exact over the integers.
pub fn unitriangular_inverse(m: &ExactMatrix) -> Result<ExactMatrix, AlgebraError> {
    if m.is_upper_unitriangular() {
        let k = m.dim();
        let mut inv = ExactMatrix::identity(m.order.clone());
        // Column j of the inverse solves M x = e_j from the bottom up.
        for j in 0..k {
            for i in (0..j).rev() {
                let mut acc = BigInt::zero();
                for l in i + 1..=j {
                    acc += &m.entries[i][l] * &inv.entries[l][j];
                }
                inv.entries[i][j] = -acc;
            }
        }
        Ok(inv)
    } else if m.is_lower_unitriangular() {
        Ok(unitriangular_inverse(&m.transpose())?.transpose())
    } else {
        Err(AlgebraError::NotUnitriangular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(n: usize, rows: &[&[i64]]) -> ExactMatrix {
        let order = DyckOrder::new(n);
        let mut m = ExactMatrix::zeros(order);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.entries[i][j] = v.into();
            }
        }
        m
    }

    #[test]
    fn two_by_two_inverse() {
        let m = from_rows(2, &[&[1, 2], &[0, 1]]);
        assert_eq!(
            unitriangular_inverse(&m).unwrap(),
            from_rows(2, &[&[1, -2], &[0, 1]])
        );
        let id = ExactMatrix::identity(DyckOrder::new(3));
        assert_eq!(unitriangular_inverse(&id).unwrap(), id);
        let bad = from_rows(2, &[&[2, 0], &[0, 1]]);
        assert!(matches!(
            unitriangular_inverse(&bad),
            Err(AlgebraError::NotUnitriangular)
        ));
    }

    #[test]
    fn lower_inverse_and_powers() {
        let m = from_rows(2, &[&[1, 0], &[3, 1]]);
        let inv = unitriangular_inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.pow(3), from_rows(2, &[&[1, 0], &[9, 1]]));
        assert!(m.pow(0).is_identity());
    }

    #[test]
    fn csv_and_json() {
        let m = from_rows(2, &[&[1, 2], &[0, 1]]);
        assert_eq!(m.to_csv(), "word,0011,0101\n0011,1,2\n0101,0,1\n");
        assert_eq!(ExactMatrix::from_json(&m.to_json()).unwrap(), m);
        assert!(ExactMatrix::from_json(r#"{"n":1,"order":["01"],"entries":[["x"]]}"#).is_err());
        assert!(ExactMatrix::from_json(
            r#"{"n":2,"order":["0101","0011"],"entries":[["1","0"],["0","1"]]}"#
        )
        .is_err());
    }
}
