//! Smith normal form over Z, used to read H₁ off a presentation matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Full diagonal d₁ | d₂ | … | d_r (all positive).
    pub diagonal: Vec<BigInt>,
    /// Invariant factors greater than one.
    pub factors: Vec<BigInt>,
    pub rank: usize,
    /// rows − rank: the free rank of the cokernel.
    pub corank: usize,
}

impl SmithForm {
    /// Order of the cokernel if it is finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.corank > 0 {
            None
        } else {
            Some(self.factors.iter().fold(BigInt::one(), |acc, f| acc * f))
        }
    }
}

/// Position of the smallest nonzero |entry| in the trailing block.
fn min_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let v = &m[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < m[(bi, bj)].abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &-q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &-q);
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared in row/column t; pivot on it
                let (pi, pj) = min_pivot_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // pivot must divide the rest of the block
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => a.add_row_multiple(t, i, &BigInt::one()),
                None => break,
            }
        }
        diagonal.push(a[(t, t)].abs());
        t += 1;
    }
    let rank = diagonal.len();
    let factors = diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
    SmithForm { diagonal, factors, rank, corank: rows - rank }
}

/// Smallest nonzero entry in row t or column t (from position t on).
fn min_pivot_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs: Option<BigInt> = None;
    let mut consider = |i: usize, j: usize, v: &BigInt| {
        if !v.is_zero() && best_abs.as_ref().is_none_or(|b| &v.abs() < b) {
            best = (i, j);
            best_abs = Some(v.abs());
        }
    };
    for i in t..a.rows() {
        consider(i, t, &a[(i, t)]);
    }
    for j in t..a.cols() {
        consider(t, j, &a[(t, j)]);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> SmithForm {
        smith_normal_form(&IntMatrix::from_rows(rows))
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn empty_matrix() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 0));
        assert!(s.factors.is_empty());
        assert_eq!((s.rank, s.corank), (0, 0));
        assert_eq!(s.order(), Some(BigInt::one()));
    }

    #[test]
    fn lens_matrices() {
        // (k+1)×(k+1), zero diagonal, −1 elsewhere → Z/k
        for k in 1..8usize {
            let rows: Vec<Vec<i64>> =
                (0..=k).map(|i| (0..=k).map(|j| if i == j { 0 } else { -1 }).collect()).collect();
            let s = snf(&rows);
            let expected: Vec<BigInt> = if k == 1 { vec![] } else { big(&[k as i64]) };
            assert_eq!(s.factors, expected, "k={k}");
            assert_eq!(s.corank, 0);
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(snf(&[vec![-2, 1], vec![1, -2]]).factors, big(&[3]));
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]).factors, big(&[6]));
        assert_eq!(snf(&[vec![2, 0], vec![0, 4]]).factors, big(&[2, 4]));
        assert_eq!(snf(&[vec![6, 4], vec![4, 6]]).diagonal, big(&[2, 10]));
        let z = snf(&[vec![0, 0], vec![0, 5]]);
        assert_eq!((z.rank, z.corank), (1, 1));
        assert_eq!(z.order(), None);
        assert_eq!(snf(&[vec![0]]).corank, 1);
    }

    #[test]
    fn rectangular() {
        let s = snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(s.diagonal, big(&[2, 6, 12]));
        let s = snf(&[vec![3, 6, 9]]);
        assert_eq!((s.diagonal.clone(), s.corank), (big(&[3]), 0));
    }
}
