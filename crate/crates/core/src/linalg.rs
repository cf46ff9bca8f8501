//! Small dense linear algebra over a [`Field`].

use std::cmp::Ordering;

use crate::scalar::Field;

/// Pivot tolerance for the float backend.
pub const PIVOT_TOL: f64 = 1e-9;

fn pick_pivot<F: Field>(m: &[Vec<F>], col: usize, from: usize) -> Option<usize> {
    if F::EXACT {
        (from..m.len()).find(|&r| !m[r][col].is_zero())
    } else {
        (from..m.len())
            .filter(|&r| m[r][col].sign_tol(PIVOT_TOL) != Ordering::Equal)
            .max_by(|&a, &b| m[a][col].abs().cmp_total(&m[b][col].abs()))
    }
}

/// Reduces `m` in place to row echelon form, searching for pivots in the
/// first `cols` columns, and returns the pivot columns.
fn echelon<F: Field>(m: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let width = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = pick_pivot(m, col, row) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        for x in &mut m[row][col..width] {
            *x = x.clone() * &inv;
        }
        let pivot = m[row][col..width].to_vec();
        for below in &mut m[row + 1..] {
            if below[col].is_zero() {
                continue;
            }
            let factor = below[col].clone();
            for (x, p) in below[col..width].iter_mut().zip(&pivot) {
                *x = x.clone() - factor.clone() * p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    echelon(&mut m, cols).len()
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = a.len();
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for i in (0..n).rev() {
        let mut acc = m[i][n].clone();
        for j in i + 1..n {
            acc = acc - m[i][j].clone() * &x[j];
        }
        x[i] = acc;
    }
    Some(x)
}

/// Inverse of a square matrix; `None` when singular.
pub fn inverse<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut columns = vec![Vec::with_capacity(n); n];
    for j in 0..n {
        let mut e = vec![F::zero(); n];
        e[j] = F::one();
        let x = solve(a, &e)?;
        for (i, v) in x.into_iter().enumerate() {
            columns[i].push(v);
        }
    }
    Some(columns)
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::scalar::rational;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| rational(v, 1)).collect())
            .collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank::<BigRational>(&[]), 0);
    }

    #[test]
    fn solve_and_invert() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[rational(3, 1), rational(5, 1)]).unwrap();
        assert_eq!(x, vec![rational(4, 5), rational(7, 5)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0], vec![rational(3, 5), rational(-1, 5)]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[rational(1, 1), rational(1, 1)]).is_none());
    }

    #[test]
    fn float_rank_with_noise() {
        let rows = vec![vec![1.0, 1.0], vec![1.0 + 1e-13, 1.0]];
        assert_eq!(rank(&rows), 1);
    }
}
