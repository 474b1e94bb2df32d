//! Small exact linear-algebra kernel: Gaussian elimination over the
//! rationals for the fixed-size systems the root-system code needs.

use crate::Rat;
use num_traits::Zero;

/// Solve `a * x = b` for square invertible `a`. Panics if `a` is singular;
/// every call site passes a Cartan-type matrix known to be invertible.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Vec<Rat> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("singular matrix in exact solve");
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry = &*entry / &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let sub = &factor * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n].clone()).collect()
}

/// Inverse of a square invertible rational matrix.
pub fn invert(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let cols: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let e: Vec<Rat> = (0..n)
                .map(|i| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() })
                .collect();
            solve(a, &e)
        })
        .collect();
    (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect()
}

/// Particular solution of a full-row-rank underdetermined system
/// `a * x = b` (rows <= cols). Free variables are set to zero.
pub fn solve_underdetermined(a: &[Vec<Rat>], b: &[Rat]) -> Vec<Rat> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        if let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, p);
            let inv = m[r][c].clone();
            for entry in m[r].iter_mut() {
                *entry = &*entry / &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let factor = m[i][c].clone();
                    for k in c..=cols {
                        let sub = &factor * &m[r][k];
                        m[i][k] = &m[i][k] - &sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    assert_eq!(r, rows, "row-deficient system in solve_underdetermined");
    let mut x = vec![Rat::zero(); cols];
    for (row, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = m[row][cols].clone();
    }
    x
}
