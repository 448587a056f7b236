//! Exact two-phase simplex over ℚ with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Q>, value: Q },
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Q {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Q::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj · x` from the current feasible basis. Columns with
    /// `allowed[j] == false` never enter. Returns `false` when unbounded.
    fn optimize(&mut self, obj: &[Q], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.ncols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && {
                    let reduced = self
                        .rows
                        .iter()
                        .zip(&self.basis)
                        .fold(obj[j].clone(), |acc, (row, &b)| acc - &obj[b] * &row[j]);
                    reduced.is_positive()
                }
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
        }
    }

    fn solution(&self, n: usize) -> Vec<Q> {
        let mut x = vec![Q::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}

/// Maximizes `c · x` subject to `A x ≤ b` and `x ≥ 0`.
pub fn maximize(c: &[Q], a: &[Vec<Q>], b: &[Q]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "one bound per constraint row");
    assert!(a.iter().all(|row| row.len() == n), "constraint rows must match the objective");
    // Columns: x (n), slacks (m), artificials (one per row with b < 0).
    let needs_art: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let ncols = n + m + needs_art.len();
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Q::zero(); ncols + 1];
        let neg = b[i].is_negative();
        let sign = if neg { -Q::one() } else { Q::one() };
        for j in 0..n {
            row[j] = &a[i][j] * &sign;
        }
        row[n + i] = sign.clone();
        row[ncols] = &b[i] * &sign;
        if neg {
            let k = n + m + needs_art.iter().position(|&r| r == i).expect("listed");
            row[k] = Q::one();
            basis.push(k);
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, ncols };
    let all = vec![true; ncols];

    if !needs_art.is_empty() {
        let mut phase1 = vec![Q::zero(); ncols];
        for j in n + m..ncols {
            phase1[j] = -Q::one();
        }
        t.optimize(&phase1, &all);
        let infeasibility = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &bcol)| bcol >= n + m)
            .fold(Q::zero(), |acc, (i, _)| acc + t.rhs(i));
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n + m {
                match (0..n + m).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut obj = vec![Q::zero(); ncols];
    obj[..n].clone_from_slice(c);
    let allowed: Vec<bool> = (0..ncols).map(|j| j < n + m).collect();
    if !t.optimize(&obj, &allowed) {
        return LpOutcome::Unbounded;
    }
    let x = t.solution(n);
    let value = x.iter().zip(c).fold(Q::zero(), |acc, (xi, ci)| acc + xi * ci);
    LpOutcome::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn textbook_optimum() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → (2, 6), 36
        let out = maximize(&v(&[3, 5]), &[v(&[1, 0]), v(&[0, 2]), v(&[3, 2])], &v(&[4, 12, 18]));
        assert_eq!(out, LpOutcome::Optimal { x: v(&[2, 6]), value: q(36) });
    }

    #[test]
    fn negative_bounds_need_phase_one() {
        // max -x - y, x + y ≥ 1 (as -x - y ≤ -1), x ≤ 1/2
        let out = maximize(&v(&[-1, -1]), &[v(&[-1, -1]), v(&[1, 0])], &v(&[-1, 0]));
        match out {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, q(-1));
                assert_eq!(&x[0] + &x[1], q(1));
            }
            other => panic!("{other:?}"),
        }
        let bounded = maximize(&v(&[1]), &[v(&[1]), v(&[-2])], &[frac(1, 2), q(-1)]);
        assert_eq!(bounded, LpOutcome::Optimal { x: vec![frac(1, 2)], value: frac(1, 2) });
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(maximize(&v(&[1]), &[v(&[1]), v(&[-1])], &v(&[1, -2])), LpOutcome::Infeasible);
        assert_eq!(maximize(&v(&[1, 0]), &[v(&[-1, 1])], &v(&[0])), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook rule; Bland's rule ends.
        let c = vec![frac(3, 4), q(-150), frac(1, 50), q(-6)];
        let a = vec![
            vec![frac(1, 4), q(-60), frac(-1, 25), q(9)],
            vec![frac(1, 2), q(-90), frac(-1, 50), q(3)],
            vec![q(0), q(0), q(1), q(0)],
        ];
        let out = maximize(&c, &a, &v(&[0, 0, 1]));
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, frac(1, 20)),
            other => panic!("{other:?}"),
        }
    }
}
