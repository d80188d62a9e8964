//! Signature of a symmetric integer matrix by exact congruence diagonalization.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::matrix::IntMatrix;

/// #positive − #negative eigenvalues. Zero eigenvalues do not count.
///
/// Panics on non-square input; symmetry is the caller's contract.
pub fn signature(m: &IntMatrix) -> i64 {
    assert!(m.is_square(), "signature of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut sig = 0i64;
    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_sym(&mut a, k, i);
            let d = a[k][k].clone();
            sig += if d.is_positive() { 1 } else { -1 };
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &d;
                for c in k + 1..n {
                    let delta = &f * &a[k][c];
                    a[r][c] -= delta;
                }
            }
            for r in k + 1..n {
                a[r][k] = BigRational::zero();
                a[k][r] = BigRational::zero();
            }
            k += 1;
            continue;
        }
        // Zero diagonal: pivot on a hyperbolic block [[0, b], [b, 0]].
        let Some((i, j)) = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        swap_sym(&mut a, k, i);
        swap_sym(&mut a, k + 1, j);
        let b = a[k][k + 1].clone();
        for r in k + 2..n {
            for c in k + 2..n {
                let delta = (&a[r][k] * &a[k + 1][c] + &a[r][k + 1] * &a[k][c]) / &b;
                a[r][c] -= delta;
            }
        }
        for r in k + 2..n {
            for pivot in [k, k + 1] {
                a[r][pivot] = BigRational::zero();
                a[pivot][r] = BigRational::zero();
            }
        }
        k += 2;
    }
    sig
}

fn swap_sym(a: &mut [Vec<BigRational>], x: usize, y: usize) {
    if x == y {
        return;
    }
    a.swap(x, y);
    for row in a.iter_mut() {
        row.swap(x, y);
    }
}
