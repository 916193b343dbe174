//! Small exact linear algebra over the scalar field: rank and particular
//! solutions by reduced row echelon form.

use crate::algebra::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < row {
                    let (a, b) = m.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d = &*d - &(&f * s);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of the matrix whose rows are given.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(cols, Scalar::zero());
            r
        })
        .collect();
    rref(&mut m, cols).len()
}

/// Solution of `M x = rhs` with free variables set to zero, plus the
/// dimension of the solution set. `None` when the system is inconsistent.
pub fn solve(rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<(Vec<Scalar>, usize)> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.resize(cols, Scalar::zero());
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some((x, cols - pivots.len()))
}
