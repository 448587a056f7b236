//! Oracles shared by the integration tests. They recompute quantities from
//! the Gram matrix alone, without the library's coordinate conversions.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rootint::{Parameter, RootSystem};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn fr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Solves `M x = b` for square invertible `M` by Gaussian elimination.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Vec<Q> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("invertible");
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n].clone()).collect()
}

/// Determinant of an integer matrix by cofactor expansion (small sizes).
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
            .collect();
        let term = BigInt::from(m[0][j]) * det_int(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn inner(g: &[Vec<Q>], a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for i in 0..a.len() {
        for j in 0..b.len() {
            s += &a[i] * &g[i][j] * &b[j];
        }
    }
    s
}

/// Simple-root coordinates of a functional given by its values on the
/// simple coroots: `⟨λ, α_i⟩ = λ_i (α_i, α_i) / 2`.
pub fn to_simple(rs: &RootSystem, weight: &[Q]) -> Vec<Q> {
    let g = rs.gram();
    let rhs: Vec<Q> = (0..weight.len()).map(|i| &weight[i] * &g[i][i] / q(2)).collect();
    solve(g, &rhs)
}

/// `(Re λ(β^∨), Im λ(β^∨))` from `2⟨λ,β⟩/⟨β,β⟩`.
pub fn pairing(rs: &RootSystem, lambda: &Parameter, beta: &[i64]) -> (Q, Q) {
    let g = rs.gram();
    let b: Vec<Q> = beta.iter().map(|&x| q(x)).collect();
    let l = inner(g, &b, &b);
    let re = q(2) * inner(g, &to_simple(rs, &lambda.re), &b) / &l;
    let im = q(2) * inner(g, &to_simple(rs, &lambda.im), &b) / &l;
    (re, im)
}

pub fn is_integral(p: &(Q, Q), n: &BigInt) -> bool {
    p.1.is_zero() && (&p.0 * Q::from_integer(n.clone())).is_integer()
}

/// Fourier–Motzkin feasibility of `c·t + d (< or ≤) 0` rows, one row per
/// `(coefficients, constant, strict)`.
pub fn fm_feasible(mut rows: Vec<(Vec<Q>, Q, bool)>) -> bool {
    let nvars = rows.first().map_or(0, |r| r.0.len());
    for v in 0..nvars {
        let (pos, rest): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| r.0[v].is_positive());
        let (neg, zero): (Vec<_>, Vec<_>) = rest.into_iter().partition(|r| r.0[v].is_negative());
        let mut next = zero;
        for p in &pos {
            for n in &neg {
                // scale so the v coefficients cancel: p/|p_v| + n/|n_v|
                let sp = Q::one() / &p.0[v];
                let sn = Q::one() / (-n.0[v].clone());
                let coeffs: Vec<Q> = p.0.iter().zip(&n.0).map(|(a, b)| a * &sp + b * &sn).collect();
                let d = &p.1 * &sp + &n.1 * &sn;
                next.push((coeffs, d, p.2 || n.2));
            }
        }
        rows = next;
    }
    rows.iter().all(|(_, d, strict)| if *strict { d.is_negative() } else { !d.is_positive() })
}

/// Rank and determinant of a big-integer matrix by rational elimination.
pub fn rank_det(m: &[Vec<BigInt>]) -> (usize, Q) {
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut det = Q::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            det = Q::zero();
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            det = -det;
        }
        det *= &a[rank][c];
        for i in rank + 1..rows {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rank][c];
                for j in c..cols {
                    let d = &f * &a[rank][j];
                    a[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    if rows != cols {
        det = Q::zero();
    }
    (rank, det)
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}
