use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{matrix_b, matrix_b_tilde, matrix_t, matrix_t_pi, unitriangular_inverse, AlgebraError};
use crate::poly::ExactPolynomial;
use crate::tableaux::ssyt_polynomial_of;
use crate::tfpl::TTable;
use crate::words::BinaryWord;

/// `A_pi(m)` as a polynomial in `m`:
/// `sum_{sigma,tau} SSYT(sigma, m - 2n + 1) t_{sigma,tau}^pi SSYT(tau*, n)`.
pub fn a_polynomial(pi: &BinaryWord, table: &TTable) -> Result<ExactPolynomial, AlgebraError> {
    table
        .position(pi)
        .ok_or_else(|| AlgebraError::NotInTable(pi.clone()))?;
    let n = table.n() as i64;
    let words = table.dyck_words();
    let mut total = ExactPolynomial::zero();
    for sigma in words {
        let left = ssyt_polynomial_of(sigma).shift(1 - 2 * n);
        for tau in words {
            let t = table.get(sigma, tau, pi);
            if t.is_zero() {
                continue;
            }
            let right = ssyt_polynomial_of(&tau.conjugate()).eval_integer(n);
            let weight = ExactPolynomial::constant((t * right).into());
            total = &total + &(&left * &weight);
        }
    }
    Ok(total)
}

/// `A_pi(m)` for every `pi` of the table, in `D_n` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialTable {
    pub n: usize,
    pub polynomials: BTreeMap<BinaryWord, ExactPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialEntry {
    pi: BinaryWord,
    polynomial: ExactPolynomial,
}

#[derive(Serialize, Deserialize)]
struct PolynomialTableJson {
    n: usize,
    polynomials: Vec<PolynomialEntry>,
}

impl PolynomialTable {
    pub fn get(&self, pi: &BinaryWord) -> Option<&ExactPolynomial> {
        self.polynomials.get(pi)
    }

    pub fn to_json(&self) -> String {
        let polynomials = self
            .polynomials
            .iter()
            .map(|(pi, p)| PolynomialEntry {
                pi: pi.clone(),
                polynomial: p.clone(),
            })
            .collect();
        serde_json::to_string_pretty(&PolynomialTableJson {
            n: self.n,
            polynomials,
        })
        .expect("polynomial table serializes")
    }

    /// Parses [`PolynomialTable::to_json`] output; keys must be distinct Dyck
    /// words of length `2n`.
    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        let raw: PolynomialTableJson =
            serde_json::from_str(text).map_err(|e| AlgebraError::Format(e.to_string()))?;
        if raw.n == 0 || raw.n > super::MAX_MATRIX_SIZE {
            return Err(AlgebraError::Format(format!("unsupported size {}", raw.n)));
        }
        let mut polynomials = BTreeMap::new();
        for e in raw.polynomials {
            if e.pi.len() != 2 * raw.n || !e.pi.is_dyck() {
                return Err(AlgebraError::Format(format!(
                    "{} is not in D_{}",
                    e.pi, raw.n
                )));
            }
            if polynomials.insert(e.pi.clone(), e.polynomial).is_some() {
                return Err(AlgebraError::Format(format!(
                    "duplicate entry for {}",
                    e.pi
                )));
            }
        }
        Ok(PolynomialTable {
            n: raw.n,
            polynomials,
        })
    }
}

pub fn a_polynomial_table(table: &TTable) -> PolynomialTable {
    let polynomials = table
        .dyck_words()
        .par_iter()
        .map(|pi| {
            (
                pi.clone(),
                a_polynomial(pi, table).expect("pi taken from the table"),
            )
        })
        .collect();
    PolynomialTable {
        n: table.n(),
        polynomials,
    }
}

fn zero_index(table: &TTable) -> usize {
    let n = table.n();
    table
        .position(&BinaryWord::zeros_then_ones(n, n))
        .expect("0_n is a Dyck word")
}

/// `(b^{m-n+1} t)_{0_n, pi}`; negative exponents use `b^{-1}`.
pub fn matrix_form_reduced(
    pi: &BinaryWord,
    m: usize,
    table: &TTable,
) -> Result<BigInt, AlgebraError> {
    let p = table
        .position(pi)
        .ok_or_else(|| AlgebraError::NotInTable(pi.clone()))?;
    let n = table.n();
    let b = matrix_b(n);
    let power = if m + 1 >= n {
        b.pow(m + 1 - n)
    } else {
        unitriangular_inverse(&b)?.pow(n - m - 1)
    };
    let z = zero_index(table);
    Ok(power.mul(&matrix_t(table)).at(z, p).clone())
}

/// `(b^{n+k} t^pi b~^{m-2n-k+1})_{0_n, 0_n}`, defined for `m >= 2n + k - 1`.
pub fn matrix_form_with_k(
    pi: &BinaryWord,
    m: usize,
    k: usize,
    table: &TTable,
) -> Result<BigInt, AlgebraError> {
    let n = table.n();
    let right = (m + 1)
        .checked_sub(2 * n + k)
        .ok_or_else(|| AlgebraError::Format(format!("m = {m} is too small for k = {k}")))?;
    let product = matrix_b(n)
        .pow(n + k)
        .mul(&matrix_t_pi(table, pi)?)
        .mul(&matrix_b_tilde(n).pow(right));
    let z = zero_index(table);
    Ok(product.at(z, z).clone())
}

/// `sum_{sigma,tau} SSYT(sigma, n+k) t_{sigma,tau}^pi SSYT(tau*, m-2n-k+1)`.
pub fn decomposition_sum(
    pi: &BinaryWord,
    m: usize,
    k: usize,
    table: &TTable,
) -> Result<BigInt, AlgebraError> {
    table
        .position(pi)
        .ok_or_else(|| AlgebraError::NotInTable(pi.clone()))?;
    let n = table.n();
    let right = (m + 1)
        .checked_sub(2 * n + k)
        .ok_or_else(|| AlgebraError::Format(format!("m = {m} is too small for k = {k}")))?;
    let words = table.dyck_words();
    let mut total = BigInt::zero();
    for sigma in words {
        let p = ssyt_polynomial_of(sigma).eval_integer((n + k) as i64);
        for tau in words {
            let t = table.get(sigma, tau, pi);
            if !t.is_zero() {
                total += &p * t * ssyt_polynomial_of(&tau.conjugate()).eval_integer(right as i64);
            }
        }
    }
    Ok(total)
}
