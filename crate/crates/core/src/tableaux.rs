//! Hook lengths, contents and semistandard tableau counts.

use num_bigint::BigInt;
use num_traits::One;

pub use crate::poly::ExactPolynomial;
use crate::words::{BinaryWord, FerrersDiagram};

/// Per-box data of a diagram. `cell` is `(row, column)`, 1-based from the
/// top-left box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeCellData {
    pub cell: (usize, usize),
    /// `column - row`.
    pub content: i64,
    pub hook: usize,
}

pub fn hooks_and_contents(shape: &FerrersDiagram) -> Vec<ShapeCellData> {
    let rows = shape.rows();
    let cols = shape.column_lengths();
    shape
        .cells()
        .map(|(k, l)| {
            let arm = rows[k - 1] - l;
            let leg = cols[l - 1] - k;
            ShapeCellData {
                cell: (k, l),
                content: l as i64 - k as i64,
                hook: arm + leg + 1,
            }
        })
        .collect()
}

/// `H(shape)`, the product of all hook lengths (1 for the empty shape).
pub fn hook_product(shape: &FerrersDiagram) -> BigInt {
    hooks_and_contents(shape)
        .iter()
        .fold(BigInt::one(), |acc, c| acc * c.hook)
}

/// Hook content formula as a polynomial in the bound `N`:
/// `prod (N + c(u)) / h(u)`.
pub fn ssyt_polynomial(shape: &FerrersDiagram) -> ExactPolynomial {
    hooks_and_contents(shape)
        .iter()
        .fold(ExactPolynomial::one(), |acc, c| {
            &acc * &ExactPolynomial::linear(c.content, c.hook as i64)
        })
}

/// [`ssyt_polynomial`] of the diagram of a word.
pub fn ssyt_polynomial_of(word: &BinaryWord) -> ExactPolynomial {
    ssyt_polynomial(&word.diagram())
}

/// Brute-force count of fillings with entries in `1..=bound`, rows weakly
/// increasing to the right and columns strictly increasing downwards.
pub fn ssyt_enumerate(shape: &FerrersDiagram, bound: usize) -> u64 {
    let rows: Vec<usize> = shape.rows().iter().copied().filter(|&r| r > 0).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(k, &r)| (0..r).map(move |l| (k, l)))
        .collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();

    fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut [Vec<usize>], bound: usize) -> u64 {
        let Some(&(k, l)) = cells.get(idx) else {
            return 1;
        };
        let left = if l > 0 { grid[k][l - 1] } else { 1 };
        let above = if k > 0 { grid[k - 1][l] + 1 } else { 1 };
        let mut total = 0;
        for v in left.max(above)..=bound {
            grid[k][l] = v;
            total += fill(idx + 1, cells, grid, bound);
        }
        total
    }

    fill(0, &cells, &mut grid, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_dyck;
    use num_rational::BigRational;

    fn shape(parts: &[usize]) -> FerrersDiagram {
        FerrersDiagram::from_partition(parts).unwrap()
    }

    #[test]
    fn hooks_small_shapes() {
        assert_eq!(
            hooks_and_contents(&shape(&[1])),
            vec![ShapeCellData {
                cell: (1, 1),
                content: 0,
                hook: 1
            }]
        );
        let data = hooks_and_contents(&shape(&[2, 1]));
        let mut hooks: Vec<_> = data.iter().map(|c| c.hook).collect();
        let mut contents: Vec<_> = data.iter().map(|c| c.content).collect();
        hooks.sort();
        contents.sort();
        assert_eq!(hooks, vec![1, 1, 3]);
        assert_eq!(contents, vec![-1, 0, 1]);
        assert!(hooks_and_contents(&shape(&[])).is_empty());
    }

    #[test]
    fn hook_products() {
        assert_eq!(hook_product(&shape(&[])), BigInt::from(1));
        assert_eq!(hook_product(&shape(&[1])), BigInt::from(1));
        assert_eq!(hook_product(&shape(&[2, 1])), BigInt::from(3));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(ssyt_polynomial(&shape(&[])), ExactPolynomial::one());
        assert_eq!(ssyt_polynomial(&shape(&[1])), ExactPolynomial::x());
        let p = ssyt_polynomial(&shape(&[2, 1]));
        // (N-1) N (N+1) / 3
        let expected = ExactPolynomial::from_integers([0, -1, 0, 1])
            .scale(&BigRational::new(1.into(), 3.into()));
        assert_eq!(p, expected);
        assert_eq!(p.eval_integer(2), BigInt::from(2));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(ssyt_enumerate(&shape(&[2, 1]), 2), 2);
        assert_eq!(ssyt_enumerate(&shape(&[2, 1]), 3), 8);
        assert_eq!(ssyt_enumerate(&shape(&[1, 1, 1]), 2), 0);
        assert_eq!(ssyt_enumerate(&shape(&[]), 0), 1);
        assert_eq!(ssyt_enumerate(&shape(&[1]), 0), 0);
    }

    #[test]
    fn formula_matches_enumeration_inside_staircase() {
        for word in enumerate_dyck(4) {
            let d = word.diagram();
            let p = ssyt_polynomial(&d);
            assert_eq!(p.degree().unwrap_or(0), word.degree());
            let lead = BigRational::new(1.into(), hook_product(&d));
            assert_eq!(p.leading_coefficient(), lead);
            for n in 0..=4 {
                assert_eq!(
                    p.eval_integer(n as i64),
                    BigInt::from(ssyt_enumerate(&d, n)),
                    "{word} N={n}"
                );
            }
        }
    }
}
