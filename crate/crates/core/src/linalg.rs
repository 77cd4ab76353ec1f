//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Rational matrices are first scaled row by row to integer matrices. Row
//! scaling preserves rank, the solution set of a system (when the right-hand
//! side is scaled with it) and the nullspace, and changes the determinant by
//! the known product of scale factors.
//!
//! Pivots are chosen as the first nonzero entry in column order. After each
//! step every entry is a minor of the input, so the Bareiss division by the
//! previous pivot is exact even when columns without a pivot are skipped.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::geometry::Scalar;

/// Row-echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of every pivot, in order.
    pub pivots: Vec<(usize, usize)>,
    pub swaps: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Scales each rational row by the lcm of its denominators. Returns the
/// integer rows and the scale factors.
pub fn integer_rows(rows: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
            let ints = row.iter().map(|s| s.numer() * (&l / s.denom())).collect();
            (ints, l)
        })
        .unzip()
}

/// Bareiss elimination of `m`, searching for pivots only in the first
/// `pivot_columns` columns (the remaining columns ride along, e.g. as
/// right-hand sides).
pub fn fraction_free_echelon(mut m: Vec<Vec<BigInt>>, pivot_columns: usize) -> Echelon {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..pivot_columns.min(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let (upper, lower) = m.split_at_mut(r + 1);
        let pivot_row = &upper[r];
        let pivot = &pivot_row[c];
        for row in lower.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        // entries left of the pivot column in rows below are already zero
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon {
        rows: m,
        pivots,
        swaps,
    }
}

/// Exact determinant of a square rational matrix.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let (ints, scales) = integer_rows(m);
    let e = fraction_free_echelon(ints, n);
    if e.rank() < n {
        return Scalar::zero();
    }
    let mut det = e.rows[n - 1][n - 1].clone();
    if e.swaps % 2 == 1 {
        det = -det;
    }
    let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Scalar::new(det, denom)
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    fraction_free_echelon(integer_rows(m).0, cols).rank()
}

/// Solves `a X = B` for a square nonsingular `a` and right-hand sides given as
/// the columns of `rhs` (`rhs[i]` is row `i`). Returns the solution columns,
/// or `None` when `a` is singular.
pub fn solve(a: &[Vec<Scalar>], rhs: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    assert_eq!(rhs.len(), n, "one right-hand-side row per equation");
    let k = rhs.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<Scalar>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n, "matrix must be square");
            row.iter().chain(b).cloned().collect()
        })
        .collect();
    let (ints, _) = integer_rows(&augmented);
    let e = fraction_free_echelon(ints, n);
    if e.rank() < n {
        return None;
    }
    let m = &e.rows;
    let mut solutions = vec![vec![Scalar::zero(); n]; k];
    for (col, x) in solutions.iter_mut().enumerate() {
        for r in (0..n).rev() {
            let mut acc = Scalar::from_integer(m[r][n + col].clone());
            for j in (r + 1)..n {
                if !m[r][j].is_zero() {
                    acc -= Scalar::from_integer(m[r][j].clone()) * &x[j];
                }
            }
            x[r] = acc / Scalar::from_integer(m[r][r].clone());
        }
    }
    Some(solutions)
}

/// Basis of the right nullspace `{v : m v = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let cols = m.first().map_or(0, Vec::len);
    let e = fraction_free_echelon(integer_rows(m).0, cols);
    let pivot_cols: Vec<usize> = e.pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for &(r, c) in e.pivots.iter().rev() {
                let mut acc = Scalar::zero();
                for j in (c + 1)..cols {
                    if !e.rows[r][j].is_zero() && !v[j].is_zero() {
                        acc -= Scalar::from_integer(e.rows[r][j].clone()) * &v[j];
                    }
                }
                v[c] = acc / Scalar::from_integer(e.rows[r][c].clone());
            }
            v
        })
        .collect()
}
