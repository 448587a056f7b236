//! Smith normal form over ℤ and finite quotients of lattices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{lcm_denominators, Q};

/// A dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    entries: Vec<Vec<BigInt>>,
    cols: usize,
}

impl IntegerMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.is_empty() || cols == 0 {
            return Err(Error::input("matrix must have at least one row and one column"));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::input("matrix rows have different lengths"));
        }
        Ok(IntegerMatrix { entries, cols })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        IntegerMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        IntegerMatrix { entries, cols: n }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        let entries = (0..self.rows())
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        (0..self.cols).fold(BigInt::zero(), |acc, k| {
                            acc + &self.entries[i][k] * &other.entries[k][j]
                        })
                    })
                    .collect()
            })
            .collect();
        IntegerMatrix { entries, cols: other.cols }
    }

    pub fn to_q(&self) -> Vec<Vec<Q>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect())
            .collect()
    }

    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows() != self.cols {
            return Err(Error::input("determinant of a non-square matrix"));
        }
        Ok(linalg::det(&self.to_q()).to_integer())
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.to_q())
    }
}

/// Parses the literal `"a,b;c,d"` (rows separated by `;`).
impl FromStr for IntegerMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::input(format!("invalid integer {x:?} in matrix")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerMatrix::new(rows)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    /// Diagonal of `D`: nonnegative, each dividing the next, zeros last.
    pub divisors: Vec<BigInt>,
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.v.iter_mut()) {
            r.swap(i, j);
        }
    }

    /// row_i += c·row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(src) {
                *x += c * y;
            }
        }
    }

    /// col_i += c·col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.v] {
            for r in m.iter_mut() {
                let y = r[j].clone();
                r[i] += c * y;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

pub fn smith_normal_form(a: &IntegerMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.entries.clone(),
        u: IntegerMatrix::identity(m).entries,
        v: IntegerMatrix::identity(n).entries,
    };
    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !w.a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if !w.a[i][t].is_zero() {
                    let quo = w.a[i][t].div_floor(&w.a[t][t]);
                    w.add_row(i, t, &-quo);
                    dirty |= !w.a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !w.a[t][j].is_zero() {
                    let quo = w.a[t][j].div_floor(&w.a[t][t]);
                    w.add_col(j, t, &-quo);
                    dirty |= !w.a[t][j].is_zero();
                }
            }
            if dirty {
                // a remainder smaller than the pivot exists in row or column t
                let mut best = (t, t);
                for i in t + 1..m {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < w.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < w.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    w.swap_rows(t, best.0);
                } else if best.1 != t {
                    w.swap_cols(t, best.1);
                }
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            let offending = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !(&w.a[i][j] % &w.a[t][t]).is_zero())
            });
            match offending {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    let divisors = (0..m.min(n)).map(|i| w.a[i][i].clone()).collect();
    SnfResult {
        u: IntegerMatrix { entries: w.u, cols: m },
        d: IntegerMatrix { entries: w.a, cols: n },
        v: IntegerMatrix { entries: w.v, cols: n },
        divisors,
    }
}

/// A lattice given by a basis of rational vectors in a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<Vec<Q>>,
    ambient_dim: usize,
}

impl Lattice {
    pub fn new(basis: Vec<Vec<Q>>, ambient_dim: usize) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::input("basis vector has wrong dimension"));
        }
        if !linalg::is_independent(&basis) {
            return Err(Error::input("lattice basis is linearly dependent"));
        }
        Ok(Lattice { basis, ambient_dim })
    }

    pub fn from_i64(basis: &[Vec<i64>], ambient_dim: usize) -> Result<Self> {
        Lattice::new(linalg::to_q(basis), ambient_dim)
    }

    /// The lattice spanned by arbitrary (possibly dependent) generators.
    pub fn from_generators(gens: &[Vec<Q>], ambient_dim: usize) -> Result<Self> {
        if gens.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::input("generator has wrong dimension"));
        }
        if gens.is_empty() || ambient_dim == 0 {
            return Ok(Lattice { basis: Vec::new(), ambient_dim });
        }
        // Clear denominators, then read a basis off the Smith form:
        // rowspace(G) = rowspace(D·V^{-1}).
        let scale = Q::from_integer(lcm_denominators(gens.iter().flatten()));
        let rows: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| g.iter().map(|x| (x * &scale).to_integer()).collect())
            .collect();
        let snf = smith_normal_form(&IntegerMatrix::new(rows)?);
        let vinv = linalg::inverse(&snf.v.to_q()).ok_or_else(|| Error::internal("singular V"))?;
        let basis = snf
            .divisors
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| {
                let d = Q::from_integer(d.clone());
                vinv[i].iter().map(|x| x * &d / &scale).collect()
            })
            .collect();
        Lattice::new(basis, ambient_dim)
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<BigInt>> {
        let c = linalg::solve_combination(&self.basis, v)?;
        c.iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        v.len() == self.ambient_dim && self.coordinates(v).is_some()
    }
}

/// Elementary divisors of `sup / sub`. Requires `sub ⊆ sup` of equal rank.
pub fn quotient_divisors(sub: &Lattice, sup: &Lattice) -> Result<Vec<BigInt>> {
    if sub.ambient_dim != sup.ambient_dim {
        return Err(Error::input("lattices live in different ambient spaces"));
    }
    if sub.rank() != sup.rank() {
        return Err(Error::input(format!(
            "rank mismatch: sublattice rank {} vs lattice rank {}",
            sub.rank(),
            sup.rank()
        )));
    }
    if sub.rank() == 0 {
        return Ok(Vec::new());
    }
    let rows = sub
        .basis
        .iter()
        .map(|v| {
            sup.coordinates(v)
                .ok_or_else(|| Error::input("sublattice is not contained in the lattice"))
        })
        .collect::<Result<Vec<_>>>()?;
    let snf = smith_normal_form(&IntegerMatrix::new(rows)?);
    if snf.divisors.iter().any(Zero::is_zero) {
        return Err(Error::internal("degenerate change of basis"));
    }
    Ok(snf.divisors)
}

/// `[sup : sub]`.
pub fn lattice_index(sub: &Lattice, sup: &Lattice) -> Result<BigInt> {
    Ok(quotient_divisors(sub, sup)?.iter().product())
}

pub fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x))
}
