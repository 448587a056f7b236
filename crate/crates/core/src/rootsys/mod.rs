//! Finite root systems in exact coordinates.
//!
//! Roots are integer vectors in the basis of simple roots. Parameters
//! (elements of the complexified dual) are rational vectors in the basis of
//! fundamental weights, so `λ(α_i^∨)` is the `i`-th coordinate. Points of the
//! real space on which roots act are written in the basis of fundamental
//! coweights, so `α(X)` is the dot product of integer root coordinates with
//! the coweight coordinates of `X`.

mod spec;
mod weyl;

use std::collections::HashMap;

use num_traits::Zero;

pub use spec::{ComponentSpec, Family, RootSystemSpec};
pub use weyl::{WeylElement, WeylGroup, MAX_WEYL_ORDER};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{dot_int, frac, q, ComplexQ, Q};

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

/// A point of the complexified dual space in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parameter {
    pub re: Vec<Q>,
    pub im: Vec<Q>,
}

impl Parameter {
    pub fn new(re: Vec<Q>, im: Vec<Q>) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::input(format!(
                "real part has {} coordinates but imaginary part has {}",
                re.len(),
                im.len()
            )));
        }
        Ok(Parameter { re, im })
    }

    pub fn real(re: Vec<Q>) -> Self {
        let im = vec![Q::zero(); re.len()];
        Parameter { re, im }
    }

    pub fn zero(rank: usize) -> Self {
        Parameter::real(vec![Q::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.re.len()
    }

    pub fn is_real(&self) -> bool {
        self.im.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Parameter {
        Parameter {
            re: self.re.iter().map(|x| x * c).collect(),
            im: self.im.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Parameter) -> Parameter {
        Parameter {
            re: self.re.iter().zip(&other.re).map(|(a, b)| a + b).collect(),
            im: self.im.iter().zip(&other.im).map(|(a, b)| a + b).collect(),
        }
    }
}

/// An irreducible component: its type and the simple-root indices it owns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub family: Family,
    pub nodes: Vec<usize>,
}

impl Component {
    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_non_reduced(&self) -> bool {
        self.family == Family::BC
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    components: Vec<Component>,
    gram: Vec<Vec<Q>>,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Q>>,
    positive: Vec<Root>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// `doubled[i]` iff `2α_i` is a root.
    doubled: Vec<bool>,
}

/// Simple-root Gram matrix of one irreducible component in the fixed
/// normalization: shortest roots have squared length 2, except for `BC_n`
/// where the shortest root has squared length 1.
fn component_gram(c: ComponentSpec) -> Vec<Vec<Q>> {
    let n = c.rank;
    let mut g = vec![vec![q(0); n]; n];
    let link = |g: &mut Vec<Vec<Q>>, i: usize, j: usize, v: i64| {
        g[i][j] = q(v);
        g[j][i] = q(v);
    };
    match c.family {
        Family::A => {
            for i in 0..n {
                g[i][i] = q(2);
            }
            for i in 1..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        Family::B => {
            if n == 1 {
                g[0][0] = q(2);
            } else {
                for i in 0..n - 1 {
                    g[i][i] = q(4);
                }
                g[n - 1][n - 1] = q(2);
                for i in 1..n {
                    link(&mut g, i - 1, i, -2);
                }
            }
        }
        Family::C => {
            if n == 1 {
                g[0][0] = q(2);
            } else {
                for i in 0..n - 1 {
                    g[i][i] = q(2);
                }
                g[n - 1][n - 1] = q(4);
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
        }
        Family::BC => {
            for i in 0..n - 1 {
                g[i][i] = q(2);
            }
            g[n - 1][n - 1] = q(1);
            for i in 1..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = q(2);
            }
            for i in 1..n - 1 {
                link(&mut g, i - 1, i, -1);
            }
            if n >= 3 {
                link(&mut g, n - 3, n - 1, -1);
            }
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = q(2);
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 3..n {
                link(&mut g, i - 1, i, -1);
            }
        }
        Family::F => {
            g[0][0] = q(4);
            g[1][1] = q(4);
            g[2][2] = q(2);
            g[3][3] = q(2);
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = q(6);
            g[1][1] = q(2);
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Positive roots of the reduced system with Cartan matrix `cartan`, by the
/// root-string criterion: `β + α_i` is a root iff `p − ⟨β, α_i^∨⟩ > 0` where
/// `p` is the length of the `α_i`-string below `β`.
fn reduced_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<i64>> = Default::default();
    let mut level: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    for v in &level {
        seen.insert(v.clone());
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    all
}

/// Deterministic enumeration order: height, then lexicographically
/// descending (so simple roots appear in index order).
fn root_order(a: &Vec<i64>, b: &Vec<i64>) -> std::cmp::Ordering {
    let ha: i64 = a.iter().sum();
    let hb: i64 = b.iter().sum();
    ha.cmp(&hb).then_with(|| b.cmp(a))
}

impl RootSystem {
    /// Builds the root system of the given type.
    pub fn build(spec: &RootSystemSpec) -> Result<RootSystem> {
        let r = spec.rank();
        let mut gram = vec![vec![Q::zero(); r]; r];
        let mut components = Vec::new();
        let mut offset = 0;
        for c in spec.components() {
            if !c.family.rank_is_valid(c.rank) {
                return Err(Error::input(format!("invalid component {c}")));
            }
            let g = component_gram(*c);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    gram[offset + i][offset + j] = g[i][j].clone();
                }
            }
            components.push(Component {
                family: c.family,
                nodes: (offset..offset + c.rank).collect(),
            });
            offset += c.rank;
        }
        RootSystem::from_gram(spec.clone(), components, gram)
    }

    /// Builds a root system from the Gram matrix of a simple system. Each
    /// component flagged `BC` gets its shortest roots doubled.
    pub(crate) fn from_gram(
        spec: RootSystemSpec,
        components: Vec<Component>,
        gram: Vec<Vec<Q>>,
    ) -> Result<RootSystem> {
        let r = gram.len();
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let a = q(2) * &gram[i][j] / &gram[i][i];
                if !a.is_integer() {
                    return Err(Error::internal("non-integral Cartan entry"));
                }
                cartan[i][j] = a.to_integer().try_into().map_err(|_| Error::internal("Cartan entry overflow"))?;
            }
        }
        let cartan_inv = linalg::inverse(&linalg::to_q(&cartan))
            .ok_or_else(|| Error::internal("singular Cartan matrix"))?;

        let mut positive = reduced_positive_roots(&cartan);
        let mut doubled = vec![false; r];
        for comp in components.iter().filter(|c| c.is_non_reduced()) {
            let len = |v: &Vec<i64>| -> Q { root_len2(&gram, v) };
            let in_comp = |v: &Vec<i64>| comp.nodes.iter().any(|&i| v[i] != 0);
            let short = comp
                .nodes
                .iter()
                .map(|&i| gram[i][i].clone())
                .min()
                .expect("nonempty component");
            let extra: Vec<Vec<i64>> = positive
                .iter()
                .filter(|v| in_comp(v) && len(v) == short)
                .map(|v| v.iter().map(|x| 2 * x).collect())
                .collect();
            for &i in &comp.nodes {
                doubled[i] = gram[i][i] == short;
            }
            positive.extend(extra);
        }
        positive.sort_by(root_order);

        let mut roots: Vec<Root> = positive.iter().cloned().map(Root).collect();
        roots.extend(positive.iter().map(|v| Root(v.iter().map(|x| -x).collect())));
        let index = roots.iter().enumerate().map(|(i, a)| (a.0.clone(), i)).collect();
        Ok(RootSystem {
            spec,
            components,
            gram,
            cartan,
            cartan_inv,
            positive: positive.into_iter().map(Root).collect(),
            roots,
            index,
            doubled,
        })
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Inner products of simple roots.
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    /// `cartan[i][j] = α_j(α_i^∨)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Root(v)
    }

    /// Positive roots, graded by height then lexicographically descending.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// All roots: the positive roots followed by their negatives in the same
    /// order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub(crate) fn check_root(&self, beta: &Root) -> Result<usize> {
        if beta.0.len() != self.rank() {
            return Err(Error::input(format!(
                "root has {} coordinates, expected {}",
                beta.0.len(),
                self.rank()
            )));
        }
        self.root_index(&beta.0)
            .ok_or_else(|| Error::input(format!("{:?} is not a root of {}", beta.0, self.spec)))
    }

    /// `2α_i ∈ Σ`.
    pub fn is_doubled_simple(&self, i: usize) -> bool {
        self.doubled[i]
    }

    pub fn is_reduced(&self) -> bool {
        !self.doubled.iter().any(|&d| d)
    }

    /// `α/2 ∉ Σ`.
    pub fn is_indivisible(&self, coords: &[i64]) -> bool {
        if coords.iter().any(|x| x % 2 != 0) {
            return true;
        }
        let half: Vec<i64> = coords.iter().map(|x| x / 2).collect();
        !self.is_root(&half)
    }

    pub fn len2(&self, coords: &[i64]) -> Q {
        root_len2(&self.gram, coords)
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let r = self.rank();
        let mut s = Q::zero();
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                if b[j] != 0 {
                    s += &self.gram[i][j] * q(a[i] * b[j]);
                }
            }
        }
        s
    }

    /// `α(β^∨) = 2(α,β)/(β,β)`, an integer for roots `α, β`.
    pub fn root_pairing(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let v = q(2) * self.inner(alpha, beta) / self.len2(beta);
        debug_assert!(v.is_integer());
        v.to_integer().try_into().expect("small pairing")
    }

    /// Coordinates of `β^∨` in the fundamental coweight basis:
    /// `α_i(β^∨)` for each simple `α_i`.
    pub fn coroot_coweight(&self, beta: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| {
                let mut e = vec![0; self.rank()];
                e[i] = 1;
                self.root_pairing(&e, beta)
            })
            .collect()
    }

    /// Coordinates of `β^∨` in the basis of simple roots of the dual system
    /// (`α_j^∨`, halved when `2α_j` is a root). These are integers and the
    /// dual simple roots form a basis of the coroot lattice `ℤ[Σ^∨]`.
    pub fn coroot_dual_coords(&self, beta: &[i64]) -> Vec<i64> {
        let l = self.len2(beta);
        (0..self.rank())
            .map(|j| {
                let m = if self.doubled[j] { 2 } else { 1 };
                let v = q(beta[j] * m) * &self.gram[j][j] / &l;
                debug_assert!(v.is_integer());
                v.to_integer().try_into().expect("small coordinate")
            })
            .collect()
    }

    /// Fundamental-weight coordinates of an element given in simple-root
    /// coordinates.
    pub fn weight_coords(&self, simple: &[Q]) -> Vec<Q> {
        linalg::mat_vec(&linalg::to_q(&self.cartan), simple)
    }

    /// Simple-root coordinates of an element given in fundamental-weight
    /// coordinates. The `i`-th entry is also its value on `ϖ_i^∨`.
    pub fn simple_coords(&self, weight: &[Q]) -> Vec<Q> {
        linalg::mat_vec(&self.cartan_inv, weight)
    }

    /// The parameter whose real part is the given root.
    pub fn root_as_parameter(&self, beta: &Root) -> Parameter {
        let c: Vec<Q> = beta.0.iter().map(|&x| q(x)).collect();
        Parameter::real(self.weight_coords(&c))
    }

    pub(crate) fn check_parameter(&self, lambda: &Parameter) -> Result<()> {
        if lambda.re.len() != self.rank() || lambda.im.len() != self.rank() {
            return Err(Error::input(format!(
                "parameter has {} coordinates, expected rank {}",
                lambda.re.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// `λ(β^∨) = 2⟨λ,β⟩/⟨β,β⟩` computed exactly.
    pub fn pairing(&self, lambda: &Parameter, beta: &Root) -> Result<ComplexQ> {
        self.check_parameter(lambda)?;
        self.check_root(beta)?;
        Ok(self.pairing_unchecked(lambda, &beta.0))
    }

    pub(crate) fn pairing_unchecked(&self, lambda: &Parameter, beta: &[i64]) -> ComplexQ {
        // β^∨ = Σ_j β_j (α_j,α_j)/(β,β) α_j^∨
        let l = self.len2(beta);
        let coeff: Vec<Q> = (0..self.rank())
            .map(|j| q(beta[j]) * &self.gram[j][j] / &l)
            .collect();
        ComplexQ::new(
            crate::rational::dot(&coeff, &lambda.re),
            crate::rational::dot(&coeff, &lambda.im),
        )
    }

    /// Half the sum of the positive roots (every root counted once).
    pub fn rho(&self) -> Parameter {
        let r = self.rank();
        let mut sum = vec![0i64; r];
        for a in &self.positive {
            for i in 0..r {
                sum[i] += a.0[i];
            }
        }
        let half: Vec<Q> = sum.iter().map(|&x| frac(x, 2)).collect();
        Parameter::real(self.weight_coords(&half))
    }

    /// The dual root system: roots are the coroots, rescaled per component to
    /// the standard normalization. Simple roots keep their index order, so a
    /// root `β` corresponds to the dual root with coordinates
    /// [`RootSystem::coroot_dual_coords`].
    pub fn dual(&self) -> RootSystem {
        let r = self.rank();
        let m = |j: usize| if self.doubled[j] { q(2) } else { q(1) };
        let mut g = vec![vec![Q::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                g[i][j] = q(4) * &self.gram[i][j]
                    / (&self.gram[i][i] * &self.gram[j][j] * m(i) * m(j));
            }
        }
        let mut components = Vec::new();
        for c in &self.components {
            let min = c.nodes.iter().map(|&i| g[i][i].clone()).min().expect("nonempty");
            let target = if c.is_non_reduced() { q(1) } else { q(2) };
            let scale = target / min;
            for &i in &c.nodes {
                for &j in &c.nodes {
                    g[i][j] = &g[i][j] * &scale;
                }
            }
            components.push(Component { family: c.family.dual(), nodes: c.nodes.clone() });
        }
        RootSystem::from_gram(self.spec.dual(), components, g).expect("dual of a valid root system")
    }

    /// Determinant of the Cartan matrix.
    pub fn cartan_determinant(&self) -> Q {
        linalg::det(&linalg::to_q(&self.cartan))
    }

    /// Order of the Weyl group from the classical formulas (saturating).
    pub fn weyl_order(&self) -> u128 {
        self.spec.weyl_order()
    }

    /// `α(X)` for a root in simple coordinates and a point in coweight
    /// coordinates.
    pub fn eval_root(&self, root: &[i64], x: &[Q]) -> Q {
        dot_int(root, x)
    }

    /// Rank of a set of roots.
    pub fn rank_of(&self, roots: &[Root]) -> usize {
        let rows: Vec<Vec<i64>> = roots.iter().map(|a| a.0.clone()).collect();
        linalg::rank_int(&rows)
    }
}

fn root_len2(gram: &[Vec<Q>], v: &[i64]) -> Q {
    let r = gram.len();
    let mut s = Q::zero();
    for i in 0..r {
        if v[i] == 0 {
            continue;
        }
        for j in 0..r {
            if v[j] != 0 {
                s += &gram[i][j] * q(v[i] * v[j]);
            }
        }
    }
    s
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

impl RootSystemSpec {
    /// Order of the Weyl group from the classical formulas (saturating).
    pub fn weyl_order(&self) -> u128 {
        self.components()
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(component_weyl_order(*c)))
    }
}

fn component_weyl_order(c: ComponentSpec) -> u128 {
    let n = c.rank;
    match c.family {
        Family::A => factorial(n + 1),
        Family::B | Family::C | Family::BC => (1u128 << n.min(120)).saturating_mul(factorial(n)),
        Family::D => (1u128 << (n - 1).min(120)).saturating_mul(factorial(n)),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

/// Convenience: parse and build.
pub fn build_root_system(spec: &str) -> Result<RootSystem> {
    RootSystem::build(&spec.parse()?)
}
