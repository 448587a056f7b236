use std::collections::HashMap;

use num_traits::Zero;

use super::{Parameter, Root, RootSystem};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, Q};

/// Largest Weyl group that will be enumerated explicitly.
pub const MAX_WEYL_ORDER: u128 = 1_000_000;

/// A Weyl group element stored by the images `w(α_i)` of the simple roots.
/// Two elements are equal iff these images agree, and `w` is identified with
/// the chamber `w(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    images: Vec<i64>,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `w(α_i)` in simple-root coordinates.
    pub fn image(&self, i: usize) -> &[i64] {
        &self.images[i * self.rank..(i + 1) * self.rank]
    }

    pub fn images(&self) -> Vec<Root> {
        (0..self.rank).map(|i| Root(self.image(i).to_vec())).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank).all(|i| {
            self.image(i)
                .iter()
                .enumerate()
                .all(|(j, &x)| x == i64::from(i == j))
        })
    }

    fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(self.image(k)) {
                    *o += c * x;
                }
            }
        }
        out
    }
}

/// An explicitly enumerated Weyl group.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    words: Vec<Vec<usize>>,
    index: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    /// Elements in breadth-first order from the identity, extending by simple
    /// reflections on the right in index order.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// A reduced word for each element (simple-reflection indices,
    /// `w = s_{i_1} ⋯ s_{i_k}`).
    pub fn word(&self, idx: usize) -> &[usize] {
        &self.words[idx]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        let r = self.rank();
        let mut images = vec![0; r * r];
        for i in 0..r {
            images[i * r + i] = 1;
        }
        WeylElement { rank: r, images }
    }

    /// `s_i(v) = v − v(α_i^∨) α_i` on simple-root coordinates.
    pub(crate) fn reflect_simple(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank()).map(|j| v[j] * self.cartan()[i][j]).sum();
        let mut out = v.to_vec();
        out[i] -= pairing;
        out
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.left_mul_simple(i, &self.identity())
    }

    /// `w · s_i`.
    pub fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let r = self.rank();
        let mut images = Vec::with_capacity(r * r);
        let wi = w.image(i).to_vec();
        for j in 0..r {
            let a = self.cartan()[i][j];
            images.extend(w.image(j).iter().zip(&wi).map(|(x, y)| x - a * y));
        }
        WeylElement { rank: r, images }
    }

    /// `s_i · w`.
    pub fn left_mul_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut images = Vec::with_capacity(r * r);
        for j in 0..r {
            images.extend(self.reflect_simple(i, w.image(j)));
        }
        WeylElement { rank: r, images }
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut images = Vec::with_capacity(r * r);
        for i in 0..r {
            images.extend(a.apply(b.image(i)));
        }
        WeylElement { rank: r, images }
    }

    /// `w^{-1} = G^{-1} M^T G` where `M` has the images as columns and `G` is
    /// the Gram matrix; `w` is orthogonal for `G`.
    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let r = self.rank();
        let g = self.gram();
        let ginv = linalg::inverse(g).expect("Gram matrix is positive definite");
        // (M^T G)[i][j] = Σ_k M[k][i] G[k][j] = Σ_k w(α_i)_k G[k][j]
        let mtg: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        (0..r).fold(Q::zero(), |acc, k| acc + q(w.image(i)[k]) * &g[k][j])
                    })
                    .collect()
            })
            .collect();
        let mut images = vec![0i64; r * r];
        for i in 0..r {
            for j in 0..r {
                // column j of the inverse = w^{-1}(α_j); entry i
                let v = (0..r).fold(Q::zero(), |acc, k| acc + &ginv[i][k] * &mtg[k][j]);
                images[j * r + i] = v.to_integer().try_into().expect("integral inverse");
            }
        }
        WeylElement { rank: r, images }
    }

    pub fn act_root(&self, w: &WeylElement, beta: &Root) -> Root {
        Root(w.apply(&beta.0))
    }

    /// Linear action on parameters (fundamental-weight coordinates).
    pub fn act_parameter(&self, w: &WeylElement, lambda: &Parameter) -> Parameter {
        let act = |x: &[Q]| -> Vec<Q> {
            let c = self.simple_coords(x);
            let r = self.rank();
            let mut out = vec![Q::zero(); r];
            for (k, ck) in c.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(w.image(k)) {
                    if *y != 0 {
                        *o += ck * q(*y);
                    }
                }
            }
            self.weight_coords(&out)
        };
        Parameter { re: act(&lambda.re), im: act(&lambda.im) }
    }

    /// `s_i λ = λ − λ(α_i^∨) α_i` in fundamental-weight coordinates.
    pub fn reflect_parameter(&self, i: usize, lambda: &Parameter) -> Parameter {
        let col: Vec<Q> = (0..self.rank()).map(|j| q(self.cartan()[j][i])).collect();
        let sub = |x: &[Q]| -> Vec<Q> {
            let c = x[i].clone();
            x.iter().zip(&col).map(|(a, b)| a - &c * b).collect()
        };
        Parameter { re: sub(&lambda.re), im: sub(&lambda.im) }
    }

    /// Action on points in coweight coordinates:
    /// `α_i(wX) = (w^{-1}α_i)(X)`.
    pub fn act_coweight(&self, w: &WeylElement, x: &[Q]) -> Vec<Q> {
        let winv = self.inverse(w);
        (0..self.rank())
            .map(|i| crate::rational::dot_int(winv.image(i), x))
            .collect()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|a| self.is_indivisible(&a.0) && !self.act_root(w, a).is_positive())
            .count()
    }

    /// Breadth-first closure of the simple reflections. Refused when the
    /// group order exceeds [`MAX_WEYL_ORDER`].
    pub fn weyl_group(&self) -> Result<WeylGroup> {
        let order = self.weyl_order();
        if order > MAX_WEYL_ORDER {
            return Err(Error::capacity(format!(
                "Weyl group of {} has order {order}, above the enumeration limit {MAX_WEYL_ORDER}",
                self.spec()
            )));
        }
        let e = self.identity();
        let mut elements = vec![e.clone()];
        let mut words = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(e, 0);
        let mut head = 0;
        while head < elements.len() {
            for i in 0..self.rank() {
                let next = self.right_mul_simple(&elements[head], i);
                if !index.contains_key(&next) {
                    let mut word = words[head].clone();
                    word.push(i);
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    words.push(word);
                }
            }
            head += 1;
        }
        if elements.len() as u128 != order {
            return Err(Error::internal(format!(
                "enumerated {} Weyl group elements, expected {order}",
                elements.len()
            )));
        }
        Ok(WeylGroup { elements, words, index })
    }
}
