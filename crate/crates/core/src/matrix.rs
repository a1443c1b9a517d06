//! Dense integer matrices and exact rank.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rows and columns reordered: row `i` of the result is row `row_perm[i]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, &ri) in row_perm.iter().enumerate() {
            for (j, &cj) in col_perm.iter().enumerate() {
                out.set(i, j, self.get(ri, cj).clone());
            }
        }
        out
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        self.data.iter().map(ToPrimitive::to_i128).collect()
    }
}

/// Plain-text dump: one line per row, entries separated by single spaces.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Runs in `i128` with overflow checks first and restarts in `BigInt` if any
/// intermediate value does not fit.
pub fn matrix_rank(m: &IntMatrix) -> usize {
    if let Some(small) = m.to_i128() {
        if let Some(r) = bareiss_i128(small, m.rows, m.cols) {
            return r;
        }
    }
    bareiss_big(m.data.clone(), m.rows, m.cols)
}

fn bareiss_i128(mut a: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c];
        for r in rank + 1..rows {
            let lead = a[r * cols + c];
            for j in c + 1..cols {
                let x = pivot
                    .checked_mul(a[r * cols + j])?
                    .checked_sub(lead.checked_mul(a[rank * cols + j])?)?;
                a[r * cols + j] = x / prev;
            }
            a[r * cols + c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for r in rank + 1..rows {
            let lead = std::mem::take(&mut a[r * cols + c]);
            for j in c + 1..cols {
                let x = &pivot * &a[r * cols + j] - &lead * &a[rank * cols + j];
                debug_assert!(x.is_multiple_of(&prev));
                a[r * cols + j] = x / &prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// 2^61 - 1.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// Rank over `Z/pZ` for a prime `p < 2^63`. Never exceeds the rank over the
/// rationals.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let modulus = BigInt::from(p);
    let mut a: Vec<u64> = m
        .data
        .iter()
        .map(|x| x.mod_floor(&modulus).to_u64().expect("reduced below p"))
        .collect();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(a[rank * cols + c], p - 2, p);
        for r in rank + 1..rows {
            let f = mul(a[r * cols + c], inv);
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul(f, a[rank * cols + j]);
                a[r * cols + j] = (a[r * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Exact rank, using a modular computation as a certificate when it already
/// reaches `min(rows, cols)`.
pub fn rank_with_certificate(m: &IntMatrix) -> usize {
    let full = m.rows.min(m.cols);
    if full == 0 {
        return 0;
    }
    if rank_mod_p(m, MERSENNE_61) == full {
        return full;
    }
    matrix_rank(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(matrix_rank(&IntMatrix::identity(3)), 3);
        assert_eq!(matrix_rank(&IntMatrix::zeros(3, 4)), 0);
        assert_eq!(
            matrix_rank(&IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]])),
            1
        );
        assert_eq!(matrix_rank(&IntMatrix::zeros(0, 5)), 0);
        assert_eq!(matrix_rank(&IntMatrix::zeros(5, 0)), 0);
    }

    #[test]
    fn skipped_pivot_columns() {
        let m = IntMatrix::from_rows(&[vec![0, 2, 4, 1], vec![0, 1, 2, 3], vec![0, 3, 6, 4]]);
        assert_eq!(matrix_rank(&m), 2);
        assert_eq!(rank_mod_p(&m, MERSENNE_61), 2);
    }

    #[test]
    fn big_path_agrees() {
        let huge = BigInt::from(1u128 << 100);
        let mut m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        for c in 0..3 {
            let v = m.get(0, c) * &huge;
            m.set(0, c, v);
        }
        assert_eq!(matrix_rank(&m), 3);
        assert_eq!(bareiss_big(m.data.clone(), 3, 3), 3);
    }

    #[test]
    fn modular_rank_can_drop() {
        // determinant 7
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 4]]);
        assert_eq!(rank_mod_p(&m, 7), 1);
        assert_eq!(matrix_rank(&m), 2);
        assert_eq!(rank_with_certificate(&m), 2);
    }

    #[test]
    fn negative_entries_mod_p() {
        let m = IntMatrix::from_rows(&[vec![-1, 1], vec![1, -1]]);
        assert_eq!(rank_mod_p(&m, MERSENNE_61), 1);
        assert_eq!(matrix_rank(&m), 1);
    }

    #[test]
    fn dump_format() {
        let m = IntMatrix::from_rows(&[vec![1, 0], vec![-2, 3]]);
        assert_eq!(m.to_string(), "1 0\n-2 3\n");
    }
}
