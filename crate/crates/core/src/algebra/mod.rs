//! Matrices over `D_n` built from strip relations and TFPL counts, the
//! linearization coefficients `c = t^{-1} b t`, the polynomials `A_pi(m)`
//! and the verification suite tying them to direct FPL enumeration.

mod checks;
mod matrix;
mod polys;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use checks::{
    run_check, run_check_with, CheckId, CheckParams, CheckReport, CheckStatus, ALL_CHECKS,
};
pub use matrix::{unitriangular_inverse, DyckOrder, ExactMatrix};
pub use polys::{
    a_polynomial, a_polynomial_table, decomposition_sum, matrix_form_reduced, matrix_form_with_k,
    PolynomialTable,
};

use crate::tfpl::{TTable, TfplError};
use crate::words::{BinaryWord, WordError};

/// Largest `n` accepted when parsing matrices and polynomial tables.
pub const MAX_MATRIX_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is not unitriangular")]
    NotUnitriangular,
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("{what} needs size at most {limit}, got {size}")]
    LimitExceeded {
        what: String,
        size: usize,
        limit: usize,
    },
    #[error("{0} is not a Dyck word of the table's size")]
    NotInTable(BinaryWord),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Tfpl(#[from] TfplError),
    #[error(transparent)]
    Word(#[from] WordError),
}

fn indicator(b: bool) -> BigInt {
    if b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `b_{sigma tau} = 1` iff `tau / sigma` is a horizontal strip.
pub fn matrix_b(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(DyckOrder::new(n), |s, t| {
        indicator(s.horizontal_strip_to(t).expect("same length"))
    })
}

/// `b~_{sigma tau} = 1` iff `sigma* / tau*` is a horizontal strip.
pub fn matrix_b_tilde(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(DyckOrder::new(n), |s, t| {
        indicator(
            t.conjugate()
                .horizontal_strip_to(&s.conjugate())
                .expect("same length"),
        )
    })
}

/// `t_{sigma pi} = t_{sigma, 0_n}^pi`.
pub fn matrix_t(table: &TTable) -> ExactMatrix {
    let zero = BinaryWord::zeros_then_ones(table.n(), table.n());
    ExactMatrix::from_fn(DyckOrder::new(table.n()), |s, p| table.get(s, &zero, p))
}

/// `(t^pi)_{sigma tau} = t_{sigma, tau}^pi`.
pub fn matrix_t_pi(table: &TTable, pi: &BinaryWord) -> Result<ExactMatrix, AlgebraError> {
    table
        .position(pi)
        .ok_or_else(|| AlgebraError::NotInTable(pi.clone()))?;
    Ok(ExactMatrix::from_fn(DyckOrder::new(table.n()), |s, t| {
        table.get(s, t, pi)
    }))
}

/// `c = t^{-1} b t`.
pub fn matrix_c(table: &TTable) -> Result<ExactMatrix, AlgebraError> {
    let t = matrix_t(table);
    let t_inv = unitriangular_inverse(&t)?;
    Ok(t_inv.mul(&matrix_b(table.n())).mul(&t))
}

/// All `c_{gamma pi}` for one `pi` through the recurrence
/// `c_{alpha pi} = sum_{alpha -> beta != alpha} t_{beta,0}^pi
///                 - sum_{alpha < gamma < pi} c_{gamma pi} t_{alpha,0}^gamma`,
/// with `c_{pi pi} = 1` and `c_{alpha pi} = 0` unless `alpha <= pi`.
pub fn c_column_by_recurrence(
    pi: &BinaryWord,
    table: &TTable,
) -> Result<HashMap<BinaryWord, BigInt>, AlgebraError> {
    let words = table.dyck_words();
    table
        .position(pi)
        .ok_or_else(|| AlgebraError::NotInTable(pi.clone()))?;
    let n = table.n();
    let zero = BinaryWord::zeros_then_ones(n, n);
    let leq = |x: &BinaryWord, y: &BinaryWord| x.leq(y).expect("same length");
    let mut column: HashMap<BinaryWord, BigInt> = HashMap::new();
    // Lexicographic order extends inclusion, so walking it backwards visits
    // every gamma > alpha before alpha.
    for alpha in words.iter().rev() {
        let value = if alpha == pi {
            BigInt::one()
        } else if !leq(alpha, pi) {
            BigInt::zero()
        } else {
            let strips: BigInt = words
                .iter()
                .filter(|beta| {
                    *beta != alpha && alpha.horizontal_strip_to(beta).expect("same length")
                })
                .map(|beta| table.get(beta, &zero, pi))
                .sum();
            let between: BigInt = words
                .iter()
                .filter(|g| *g != alpha && *g != pi && leq(alpha, g) && leq(g, pi))
                .map(|g| &column[g] * table.get(alpha, &zero, g))
                .sum();
            strips - between
        };
        column.insert(alpha.clone(), value);
    }
    Ok(column)
}

/// One coefficient `c_{alpha pi}` through [`c_column_by_recurrence`].
pub fn c_by_recurrence(
    alpha: &BinaryWord,
    pi: &BinaryWord,
    table: &TTable,
) -> Result<BigInt, AlgebraError> {
    table
        .position(alpha)
        .ok_or_else(|| AlgebraError::NotInTable(alpha.clone()))?;
    Ok(c_column_by_recurrence(pi, table)?
        .remove(alpha)
        .expect("every word visited"))
}
