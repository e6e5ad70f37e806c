//! Exact integer and rational linear algebra.
//!
//! Determinants use fraction-free Bareiss elimination on `i128` and fall back
//! to big integers on overflow. Rank and row-space tests use Gaussian
//! elimination over `BigRational`. [`feasible`] decides `Ax = b, x ≥ 0` with a
//! phase-one simplex under Bland's rule and returns either a solution or a
//! Farkas certificate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    match bareiss_i128(m) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(m),
    }
}

fn bareiss_i128(m: &[Vec<i64>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

fn bareiss_big(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

pub fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// True if `v` is a rational combination of `rows`.
pub fn in_row_space(rows: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == rank(rows)
}

/// Outcome of [`feasible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution of `Ax = b`.
    Feasible(Vec<BigRational>),
    /// A vector `y` with `yᵀA ≤ 0` and `yᵀb > 0`, proving infeasibility.
    Infeasible(Vec<BigRational>),
}

/// Decides whether `Ax = b` has a solution with `x ≥ 0`.
///
/// # Panics
/// If the rows of `a` have inconsistent lengths or `b` has the wrong length.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> Feasibility {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length");
    let nv = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == nv), "ragged constraint matrix");

    // Tableau columns: structural variables, then one artificial per row,
    // then the right-hand side.
    let width = nv + m + 1;
    let rhs = nv + m;
    let mut flip = vec![false; m];
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        flip[i] = b[i].is_negative();
        let mut row = vec![BigRational::zero(); width];
        for j in 0..nv {
            row[j] = if flip[i] {
                -a[i][j].clone()
            } else {
                a[i][j].clone()
            };
        }
        row[nv + i] = BigRational::one();
        row[rhs] = b[i].abs();
        t.push(row);
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![BigRational::zero(); width];
    for i in 0..m {
        for j in 0..nv {
            cost[j] -= &t[i][j];
        }
        cost[rhs] -= &t[i][rhs];
    }
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    loop {
        let Some(enter) = (0..nv + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let lhs = &t[i][rhs] * &t[l][enter];
                    let rhs_v = &t[l][rhs] * &t[i][enter];
                    lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let leave = leave.expect("phase-one objective is bounded below");
        pivot(&mut t, &mut cost, leave, enter);
        basis[leave] = enter;
    }

    if cost[rhs].is_zero() {
        let mut x = vec![BigRational::zero(); nv];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < nv {
                x[bv] = t[i][rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // y' = 1 - reduced cost of each artificial; undo the row flips.
        let y = (0..m)
            .map(|i| {
                let yi = BigRational::one() - &cost[nv + i];
                if flip[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = t[r][c].clone();
    for v in t[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pr) in row.iter_mut().zip(&pivot_row) {
            if !pr.is_zero() {
                *v -= &f * pr;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pr) in cost.iter_mut().zip(&pivot_row) {
            if !pr.is_zero() {
                *v -= &f * pr;
            }
        }
    }
}

/// Checks a feasibility outcome against the original system.
pub fn verify(a: &[Vec<BigRational>], b: &[BigRational], outcome: &Feasibility) -> bool {
    match outcome {
        Feasibility::Feasible(x) => {
            x.iter().all(|v| !v.is_negative())
                && a.iter().zip(b).all(|(row, bi)| {
                    let s: BigRational = row.iter().zip(x).map(|(p, q)| p * q).sum();
                    &s == bi
                })
        }
        Feasibility::Infeasible(y) => {
            let nv = a.first().map_or(0, Vec::len);
            let cols_ok = (0..nv).all(|j| {
                let s: BigRational = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
                !s.is_positive()
            });
            let yb: BigRational = y.iter().zip(b).map(|(p, q)| p * q).sum();
            cols_ok && yb.is_positive()
        }
    }
}
