//! Dense exact linear algebra over ℚ.
//!
//! Matrices are row-major `Vec<Vec<Q>>`. Everything here is small (rank ≤ 8
//! in practice) so the routines favour clarity over speed.

use num_traits::{One, Zero};

use crate::rational::{q, Q};

/// Reduced row echelon form. Returns the nonzero rows (pivot entries equal
/// to one) and the pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows).1.len()
}

pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    rank(&to_q(rows))
}

pub fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Canonical basis of `{x : rows · x = 0}` in `ncols` unknowns: one vector per
/// free column, with a one in that column and zeros in the other free columns.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Canonical basis of the row space (reduced echelon form).
pub fn canonical_row_space(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    rref(rows).0
}

pub fn is_independent(vectors: &[Vec<Q>]) -> bool {
    rank(vectors) == vectors.len()
}

pub fn in_span(vectors: &[Vec<Q>], v: &[Q]) -> bool {
    let base = rank(vectors);
    let mut ext = vectors.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == base
}

/// Solves `Σ c_k vectors[k] = target`. Returns one solution if any exists; the
/// solution is unique when the vectors are independent.
pub fn solve_combination(vectors: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = vectors.len();
    let n = target.len();
    // Augmented system: one row per coordinate, one column per vector.
    let rows: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| crate::rational::dot(row, v)).collect()
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let s = &f * &a[c][j];
                    a[i][j] -= s;
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_single_form() {
        let ns = nullspace(&m(&[&[1, 1]]), 2);
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
        assert!(nullspace(&m(&[&[1, 0], &[0, 1]]), 2).is_empty());
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, -1], &[-1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![frac(2, 3), frac(1, 3)], vec![frac(1, 3), frac(2, 3)]]);
        assert_eq!(det(&a), q(3));
        let x = solve_combination(&m(&[&[1, 0], &[1, 1]]), &[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
        assert!(solve_combination(&m(&[&[1, 0]]), &[q(0), q(1)]).is_none());
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }
}
