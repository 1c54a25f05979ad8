//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Computes the Smith normal form diagonal of an integer matrix.
///
/// Returns `min(rows, cols)` nonnegative entries where each divides the
/// next and trailing entries are zero. Panics on ragged input; an empty
/// matrix (or one with zero columns) yields an empty diagonal.
pub fn smith_normal_form(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    assert!(mat.iter().all(|r| r.len() == cols), "ragged matrix");
    let n = rows.min(cols);
    if n == 0 {
        return Vec::new();
    }

    let mut a = mat.to_vec();
    let mut diag = Vec::with_capacity(n);

    for t in 0..n {
        loop {
            // Pivot: minimal |entry| among nonzero entries of the submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if a[pi][pj].abs() <= a[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            if a[t][t].is_negative() {
                for j in t..cols {
                    a[t][j] = -&a[t][j];
                }
            }

            // Clear the pivot column; a nonzero remainder becomes the new,
            // strictly smaller pivot, so restart the elimination pass.
            let mut restarted = false;
            for i in (t + 1)..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let sub = &q * &a[t][j];
                    a[i][j] -= sub;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    restarted = true;
                    break;
                }
            }
            if restarted {
                continue;
            }
            for j in (t + 1)..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let sub = &q * &a[i][t];
                    a[i][j] -= sub;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    restarted = true;
                    break;
                }
            }
            if restarted {
                continue;
            }

            // Divisibility: the pivot must divide every remaining entry.
            // Folding an offending row into row t shrinks the pivot.
            let mut fixed = true;
            'scan: for i in (t + 1)..rows {
                for j in (t + 1)..cols {
                    if !a[i][j].mod_floor(&a[t][t]).is_zero() {
                        for col in t..cols {
                            let add = a[i][col].clone();
                            a[t][col] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(a[t][t].clone());
    }
    diag
}

/// Rank of an integer matrix: the count of nonzero Smith diagonal entries.
pub fn rank(mat: &[Vec<BigInt>]) -> usize {
    smith_normal_form(mat).iter().filter(|d| !d.is_zero()).count()
}
