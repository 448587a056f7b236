//! Integral roots of a parameter, its equivalence class under the simple
//! reflection moves, the gallery class of the identity chamber, the chamber
//! union `C(λ)` and the edge `𝔢(λ)`.
//!
//! A complex pairing counts as lying in `(1/N)ℤ` only when its imaginary part
//! vanishes. The move rule of the equivalence relation can alternatively test
//! the real part alone ([`MoveRule::RealPart`]).

use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{in_frac_lattice, q, Q};
use crate::rootsys::{Parameter, Root, RootSystem, RootSystemSpec, WeylElement, MAX_WEYL_ORDER};
use crate::subsystems::{subsystem_label, Subsystem};

/// How the move condition `μ(α_i^∨) ∉ (1/N)ℤ` treats complex pairings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MoveRule {
    /// The full complex test: a pairing with nonzero imaginary part is never
    /// in `(1/N)ℤ`, so the move is always allowed.
    #[default]
    Complex,
    /// Only the real part is tested.
    RealPart,
}

impl MoveRule {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveRule::Complex => "complex",
            MoveRule::RealPart => "real-part",
        }
    }
}

fn check_denominator(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::input("denominator must be a positive integer"));
    }
    Ok(())
}

/// `{α ∈ Σ : λ(α^∨) ∈ (1/N)ℤ}` in the ambient root order.
pub fn integral_roots(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<Vec<Root>> {
    rs.check_parameter(lambda)?;
    check_denominator(n)?;
    Ok(rs
        .roots()
        .iter()
        .filter(|a| rs.pairing_unchecked(lambda, &a.0).in_frac_lattice(n))
        .cloned()
        .collect())
}

/// [`integral_roots`] as a negation-closed [`Subsystem`].
pub fn integral_subsystem(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<Subsystem> {
    Subsystem::from_roots(rs, &integral_roots(rs, lambda, n)?)
}

/// A member `μ = wλ` of an equivalence class together with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub w: WeylElement,
    /// `w = s_{word[0]} ⋯ s_{word[k-1]}`.
    pub word: Vec<usize>,
    pub mu: Parameter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterClass {
    pub base: Parameter,
    pub denominator: u64,
    pub rule: MoveRule,
    /// Breadth-first order; the first member is the base with `w = e`.
    pub members: Vec<ClassMember>,
}

impl ParameterClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &Parameter) -> bool {
        self.members.iter().any(|m| &m.mu == mu)
    }

    pub fn member(&self, mu: &Parameter) -> Option<&ClassMember> {
        self.members.iter().find(|m| &m.mu == mu)
    }
}

fn move_allowed(rs: &RootSystem, mu: &Parameter, i: usize, n: u64, rule: MoveRule) -> bool {
    let p = rs.pairing_unchecked(mu, &rs.simple_root(i).0);
    match rule {
        MoveRule::Complex => !p.in_frac_lattice(n),
        MoveRule::RealPart => !in_frac_lattice(&p.re, n),
    }
}

/// `[λ]` with denominator `N` and the default (complex) move rule.
pub fn equivalence_class(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<ParameterClass> {
    equivalence_class_with(rs, lambda, n, MoveRule::Complex)
}

/// Breadth-first closure of `λ` under the moves `μ ↦ s_i μ` allowed when
/// `μ(α_i^∨) ∉ (1/N)ℤ`.
pub fn equivalence_class_with(
    rs: &RootSystem,
    lambda: &Parameter,
    n: u64,
    rule: MoveRule,
) -> Result<ParameterClass> {
    rs.check_parameter(lambda)?;
    check_denominator(n)?;
    let mut members = vec![ClassMember { w: rs.identity(), word: Vec::new(), mu: lambda.clone() }];
    let mut seen: HashSet<Parameter> = HashSet::from([lambda.clone()]);
    let mut head = 0;
    while head < members.len() {
        for i in 0..rs.rank() {
            if !move_allowed(rs, &members[head].mu, i, n, rule) {
                continue;
            }
            let mu = rs.reflect_parameter(i, &members[head].mu);
            if seen.contains(&mu) {
                continue;
            }
            let w = rs.left_mul_simple(i, &members[head].w);
            let mut word = vec![i];
            word.extend_from_slice(&members[head].word);
            seen.insert(mu.clone());
            members.push(ClassMember { w, word, mu });
        }
        head += 1;
    }
    Ok(ParameterClass { base: lambda.clone(), denominator: n, rule, members })
}

/// A set of closed chambers `w(C)`, each represented by `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSet {
    chambers: Vec<WeylElement>,
    words: Vec<Vec<usize>>,
}

impl ChamberSet {
    /// Chambers in the order they were produced.
    pub fn chambers(&self) -> &[WeylElement] {
        &self.chambers
    }

    pub fn word(&self, idx: usize) -> &[usize] {
        &self.words[idx]
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.chambers.contains(w)
    }

    pub fn to_set(&self) -> BTreeSet<WeylElement> {
        self.chambers.iter().cloned().collect()
    }

    /// Equality as sets of chambers.
    pub fn same_chambers(&self, other: &ChamberSet) -> bool {
        self.to_set() == other.to_set()
    }
}

/// `[e]_λ` with `Σ(λ)` taken at denominator 1.
pub fn gallery_class(rs: &RootSystem, lambda: &Parameter) -> Result<ChamberSet> {
    gallery_class_with(rs, lambda, 1)
}

/// Number of chambers in `C(λ)`: `|W| / |W(Σ(λ))|`, since `C(λ)` is one
/// chamber of the arrangement of `Σ(λ)`.
pub fn gallery_class_size(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<u128> {
    let label = subsystem_label(rs, &integral_subsystem(rs, lambda, n)?);
    let local = RootSystemSpec::parse_optional(&label)?.map_or(1, |s| s.weyl_order());
    Ok(rs.weyl_order() / local)
}

/// Breadth-first search over chambers from `C`: `uC` and `u s_i C` share the
/// wall of the indivisible root `u(α_i)`, which may be crossed iff
/// `u(α_i) ∉ Σ(λ)`. Refused up front when the class is larger than
/// [`MAX_WEYL_ORDER`].
pub fn gallery_class_with(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<ChamberSet> {
    rs.check_parameter(lambda)?;
    check_denominator(n)?;
    let size = gallery_class_size(rs, lambda, n)?;
    if size > MAX_WEYL_ORDER {
        return Err(Error::capacity(format!(
            "gallery class has {size} chambers, above the enumeration limit {MAX_WEYL_ORDER}"
        )));
    }
    let e = rs.identity();
    let mut chambers = vec![e.clone()];
    let mut words = vec![Vec::new()];
    let mut seen: HashSet<WeylElement> = HashSet::from([e]);
    let mut head = 0;
    while head < chambers.len() {
        for i in 0..rs.rank() {
            let wall = rs.act_root(&chambers[head], &rs.simple_root(i));
            debug_assert!(rs.is_indivisible(&wall.0));
            if rs.pairing_unchecked(lambda, &wall.0).in_frac_lattice(n) {
                continue;
            }
            let next = rs.right_mul_simple(&chambers[head], i);
            if seen.contains(&next) {
                continue;
            }
            let mut word = words[head].clone();
            word.push(i);
            seen.insert(next.clone());
            chambers.push(next);
            words.push(word);
        }
        head += 1;
    }
    if chambers.len() as u128 != size {
        return Err(Error::internal(format!(
            "gallery search found {} chambers, expected {size}",
            chambers.len()
        )));
    }
    Ok(ChamberSet { chambers, words })
}

/// The chambers contained in `C(λ) = {X : α(X) ≥ 0, α ∈ Σ(λ)^+}`, in Weyl
/// group order. Membership is tested at the interior point `w(Σ_i ϖ_i^∨)`.
pub fn c_lambda(rs: &RootSystem, lambda: &Parameter) -> Result<ChamberSet> {
    c_lambda_with(rs, lambda, 1)
}

pub fn c_lambda_with(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<ChamberSet> {
    let positive: Vec<Root> = integral_roots(rs, lambda, n)?
        .into_iter()
        .filter(Root::is_positive)
        .collect();
    let group = rs.weyl_group()?;
    let interior = vec![q(1); rs.rank()];
    let mut chambers = Vec::new();
    let mut words = Vec::new();
    for (idx, w) in group.elements().iter().enumerate() {
        let x = rs.act_coweight(w, &interior);
        if positive.iter().all(|a| rs.eval_root(&a.0, &x) > Q::zero()) {
            chambers.push(w.clone());
            words.push(group.word(idx).to_vec());
        }
    }
    Ok(ChamberSet { chambers, words })
}

/// A linearly independent family of vectors in coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    vectors: Vec<Vec<Q>>,
    dim: usize,
}

impl SubspaceBasis {
    pub fn new(vectors: Vec<Vec<Q>>, dim: usize) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::input(format!("subspace vectors must have {dim} coordinates")));
        }
        if !linalg::is_independent(&vectors) {
            return Err(Error::input("subspace basis is linearly dependent"));
        }
        Ok(SubspaceBasis { vectors, dim })
    }

    pub fn full(dim: usize) -> Self {
        let vectors = (0..dim)
            .map(|i| (0..dim).map(|j| q(i64::from(i == j))).collect())
            .collect();
        SubspaceBasis { vectors, dim }
    }

    pub fn zero(dim: usize) -> Self {
        SubspaceBasis { vectors: Vec::new(), dim }
    }

    pub fn vectors(&self) -> &[Vec<Q>] {
        &self.vectors
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        v.iter().all(Zero::is_zero) || linalg::in_span(&self.vectors, v)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    /// Reduced echelon basis of the same subspace.
    pub fn canonical(&self) -> SubspaceBasis {
        SubspaceBasis { vectors: linalg::canonical_row_space(&self.vectors), dim: self.dim }
    }
}

/// `𝔢(λ) = {X : α(X) = 0, α ∈ Σ(λ)}` as a nullspace basis. The basis depends
/// only on `Σ(λ)`; use [`SubspaceBasis::canonical`] to compare subspaces.
pub fn edge(rs: &RootSystem, lambda: &Parameter) -> Result<SubspaceBasis> {
    edge_with(rs, lambda, 1)
}

pub fn edge_with(rs: &RootSystem, lambda: &Parameter, n: u64) -> Result<SubspaceBasis> {
    let roots = integral_roots(rs, lambda, n)?;
    Ok(edge_of_roots(rs, &roots))
}

pub(crate) fn edge_of_roots(rs: &RootSystem, roots: &[Root]) -> SubspaceBasis {
    let rows: Vec<Vec<Q>> = roots.iter().map(|a| a.0.iter().map(|&x| q(x)).collect()).collect();
    SubspaceBasis { vectors: linalg::nullspace(&rows, rs.rank()), dim: rs.rank() }
}
