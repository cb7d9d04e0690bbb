//! Determinant formulas for reverse shapes.
//!
//! When `sigma = u s v` and `pi = u 1^b 0^a v` with `s` holding `a` zeros and
//! `b` ones, the TFPL count is a determinant of binomials (nonintersecting
//! lattice paths in a rhombus tiling). Two encodings of the paths give two
//! matrices: one indexed by the positions of the 1s of `s` and of `tau'`,
//! the other by the positions of the 0s.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TfplError;
use crate::words::BinaryWord;

/// The factorization `sigma = u sigma' v`, `pi = u 1^b 0^a v` with `a` zeros
/// and `b` ones in `sigma'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseShape {
    pub u: BinaryWord,
    pub sigma_prime: BinaryWord,
    pub v: BinaryWord,
    pub a: usize,
    pub b: usize,
}

/// Longest common prefix, then longest common suffix of what remains.
fn common_factors(sigma: &BinaryWord, pi: &BinaryWord) -> (usize, usize) {
    let (s, p) = (sigma.letters(), pi.letters());
    let prefix = s.iter().zip(p).take_while(|(x, y)| x == y).count();
    let suffix = s[prefix..]
        .iter()
        .rev()
        .zip(p[prefix..].iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    (prefix, suffix)
}

/// The maximal reverse-shape factorization of `(sigma, pi)`, if any.
pub fn reverse_shape(sigma: &BinaryWord, pi: &BinaryWord) -> Option<ReverseShape> {
    if sigma.len() != pi.len() || !sigma.is_dyck() || !pi.is_dyck() || !sigma.leq(pi).ok()? {
        return None;
    }
    let len = sigma.len();
    let (prefix, suffix) = common_factors(sigma, pi);
    let sigma_prime = sigma.slice(prefix, len - suffix);
    let pi_prime = pi.slice(prefix, len - suffix);
    let (a, b) = (sigma_prime.count_zeros(), sigma_prime.count_ones());
    if pi_prime != BinaryWord::from_bits(std::iter::repeat_n(1, b).chain(std::iter::repeat_n(0, a)))
    {
        return None;
    }
    Some(ReverseShape {
        u: sigma.slice(0, prefix),
        sigma_prime,
        v: sigma.slice(len - suffix, len),
        a,
        b,
    })
}

/// `(a, b)` such that `t_{sigma,tau}^pi = 0` unless `tau = 0^{n-a} tau' 1^{n-b}`.
pub fn tau_window(sigma: &BinaryWord, pi: &BinaryWord) -> Result<(usize, usize), TfplError> {
    let comparable = sigma.len() == pi.len() && sigma.leq(pi).unwrap_or(false);
    if !comparable || sigma.len() % 2 == 1 {
        return Err(TfplError::NotComparable {
            sigma: sigma.clone(),
            pi: pi.clone(),
        });
    }
    let n = sigma.len() / 2;
    let (prefix, suffix) = common_factors(sigma, pi);
    let len = sigma.len();
    let outside = sigma
        .slice(0, prefix)
        .concat(&sigma.slice(len - suffix, len));
    Ok((n - outside.count_zeros(), n - outside.count_ones()))
}

/// `C(p, q)`, zero when `q < 0`, `q > p` or `p < 0`.
pub fn binomial(p: i64, q: i64) -> BigInt {
    if p < 0 || q < 0 || q > p {
        return BigInt::zero();
    }
    let q = q.min(p - q);
    let mut acc = BigInt::one();
    for i in 0..q {
        acc = acc * (p - i) / (i + 1);
    }
    acc
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let k = matrix.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..k {
        if m[col][col].is_zero() {
            let Some(r) = (col + 1..k).find(|&r| !m[r][col].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(col, r);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let value = &m[r][c] * &m[col][col] - &m[r][col] * &m[col][c];
                m[r][c] = value / &prev;
            }
        }
        prev = m[col][col].clone();
    }
    sign * &m[k - 1][k - 1]
}

fn positions(word: &[u8], letter: u8) -> Vec<i64> {
    word.iter()
        .enumerate()
        .filter(|(_, &c)| c == letter)
        .map(|(i, _)| i as i64 + 1)
        .collect()
}

/// `(det M_0, det M_1)` for a reverse shape and a `tau` inside its window.
pub fn lgv_determinants(
    sigma: &BinaryWord,
    pi: &BinaryWord,
    tau: &BinaryWord,
) -> Result<(BigInt, BigInt), TfplError> {
    let shape = reverse_shape(sigma, pi).ok_or_else(|| TfplError::NotReverseShape {
        sigma: sigma.clone(),
        pi: pi.clone(),
    })?;
    let n = sigma.len() / 2;
    let (a, b) = (shape.a, shape.b);
    let t = tau.letters();
    let inside = t.len() == 2 * n
        && t[..n - a].iter().all(|&c| c == 0)
        && t[n + b..].iter().all(|&c| c == 1);
    if !inside {
        return Err(TfplError::TauOutsideWindow {
            tau: tau.clone(),
            zeros: n - a,
            ones: n - b,
        });
    }
    let tau_prime = &t[n - a..n + b];
    let s = shape.sigma_prime.letters();
    let (n, u1, ab) = (n as i64, shape.u.count_ones() as i64, (a + b) as i64);

    // Columns run in decreasing order; with both index sets increasing the
    // determinants pick up a sign (-1)^{k(k-1)/2}.
    let (i1, mut j1) = (positions(s, 1), positions(tau_prime, 1));
    let (i0, mut j0) = (positions(s, 0), positions(tau_prime, 0));
    j1.reverse();
    j0.reverse();
    if i1.len() != j1.len() {
        // tau' has the wrong letter counts; no configuration exists.
        return Ok((BigInt::zero(), BigInt::zero()));
    }
    let m1: Vec<Vec<BigInt>> = i1
        .iter()
        .map(|&i| {
            j1.iter()
                .map(|&j| binomial(2 * n - u1 - 2 - ab + j, i + j - (ab + 1)))
                .collect()
        })
        .collect();
    let m0: Vec<Vec<BigInt>> = i0
        .iter()
        .map(|&i| {
            j0.iter()
                .map(|&j| binomial(2 * n - u1 - 1 - i, ab + 1 - i - j))
                .collect()
        })
        .collect();
    Ok((bareiss_determinant(&m0), bareiss_determinant(&m1)))
}

/// `t_{sigma,tau}^pi` through the determinant formula (`det M_0`; use
/// [`lgv_determinants`] to compare both encodings).
pub fn lgv_count(
    sigma: &BinaryWord,
    pi: &BinaryWord,
    tau: &BinaryWord,
) -> Result<BigInt, TfplError> {
    lgv_determinants(sigma, pi, tau).map(|(d0, _)| d0)
}

/// Which one-row/one-column reverse shape a corollary instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorollaryCase {
    /// `sigma = u 0^b 1 v`, `pi = u 1 0^b v`.
    SingleOne { b: usize },
    /// `sigma = u 0 1^a v`, `pi = u 1^a 0 v`.
    SingleZero { a: usize },
}

/// The closed-form value of a one-row/one-column reverse shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryValue {
    pub case: CorollaryCase,
    /// `None` when `tau` is outside the allowed family (value 0).
    pub k: Option<usize>,
    /// The competing closed form `binom(2n - |u|_1 - 2 - a, a - k)` for
    /// the single-zero case; equal to `derived` for the single-one case.
    pub alternative: BigInt,
    /// The binomial obtained by specializing `M_0`; this is the one that
    /// equals `t`.
    pub derived: BigInt,
}

/// Closed forms for every case that applies to `(sigma, pi)`; empty when the
/// pair is not a reverse shape with a single 0 or a single 1 in `sigma'`.
pub fn corollary_values(
    sigma: &BinaryWord,
    pi: &BinaryWord,
    tau: &BinaryWord,
) -> Vec<CorollaryValue> {
    let Some(shape) = reverse_shape(sigma, pi) else {
        return Vec::new();
    };
    let n = sigma.len() / 2;
    let s = shape.sigma_prime.letters();
    let u1 = shape.u.count_ones() as i64;
    let top = 2 * n as i64 - u1 - 2;
    let word = |parts: &[(u8, usize)]| {
        BinaryWord::from_bits(parts.iter().flat_map(|&(c, k)| std::iter::repeat_n(c, k)))
    };
    let mut out = Vec::new();
    if shape.b == 1 && shape.a >= 1 && s.last() == Some(&1) {
        let b = shape.a;
        let k = (0..=b).find(|&k| *tau == word(&[(0, n - k), (1, 1), (0, k), (1, n - 1)]));
        let value = k.map_or_else(BigInt::zero, |k| binomial(top - k as i64, (b - k) as i64));
        out.push(CorollaryValue {
            case: CorollaryCase::SingleOne { b },
            k,
            alternative: value.clone(),
            derived: value,
        });
    }
    if shape.a == 1 && shape.b >= 1 && s.first() == Some(&0) {
        let a = shape.b;
        let k = (0..=a).find(|&k| *tau == word(&[(0, n - 1), (1, k), (0, 1), (1, n - k)]));
        let (alternative, derived) = match k {
            Some(k) => (
                binomial(top - a as i64, (a - k) as i64),
                binomial(top, (a - k) as i64),
            ),
            None => (BigInt::zero(), BigInt::zero()),
        };
        out.push(CorollaryValue {
            case: CorollaryCase::SingleZero { a },
            k,
            alternative,
            derived,
        });
    }
    out
}
