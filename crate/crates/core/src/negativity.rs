//! Integral-negativity deciders, instance checks of the fundamental lemma
//! for a parameter, exponent certificates and the rank-one bound `18d²`.
//!
//! A linear form `f` is `≤ 0` (or `< 0`) on the closed dominant chamber minus
//! a subspace iff it is so on the chamber generators `ϖ_i^∨`, with the usual
//! caveat that the zero set of a nonpositive form on a simplicial cone is the
//! face spanned by its tight generators. Everything reduces to a small exact
//! linear program in the coefficients of `ω ∈ span Σ(λ)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntegerMatrix, Lattice};
use crate::linalg;
use crate::params::{
    edge_of_roots, equivalence_class, gallery_class, integral_roots, ParameterClass, SubspaceBasis,
};
use crate::rational::{dot, dot_int, in_frac_lattice, q, Q};
use crate::rootsys::{Parameter, Root, RootSystem, RootSystemSpec, WeylElement};
use crate::simplex::{maximize, LpOutcome};
use crate::subsystems::{n_of_subsystem, parabolic_closure, Subsystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Weak,
    Integral,
    Strict,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Weak => "weak",
            Mode::Integral => "integral",
            Mode::Strict => "strict",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "weak" => Ok(Mode::Weak),
            "integral" => Ok(Mode::Integral),
            "strict" => Ok(Mode::Strict),
            _ => Err(Error::input(format!("unknown mode {s:?} (expected weak, integral or strict)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One negativity question about a single parameter.
#[derive(Clone, Debug)]
pub struct NegativityQuery {
    pub lambda: Parameter,
    pub mode: Mode,
    /// `𝔞_λ`: required in weak and integral mode, absent in strict mode.
    pub a_lambda: Option<SubspaceBasis>,
    pub denominator: u64,
}

impl NegativityQuery {
    pub fn strict(lambda: Parameter) -> Self {
        NegativityQuery { lambda, mode: Mode::Strict, a_lambda: None, denominator: 1 }
    }

    pub fn with_subspace(lambda: Parameter, mode: Mode, a_lambda: SubspaceBasis) -> Self {
        NegativityQuery { lambda, mode, a_lambda: Some(a_lambda), denominator: 1 }
    }

    fn validate(&self, rs: &RootSystem) -> Result<()> {
        rs.check_parameter(&self.lambda)?;
        if self.denominator == 0 {
            return Err(Error::input("denominator must be a positive integer"));
        }
        match (self.mode, &self.a_lambda) {
            (Mode::Strict, Some(_)) => Err(Error::input("strict mode takes no subspace")),
            (Mode::Weak | Mode::Integral, None) => {
                Err(Error::input(format!("{} mode requires a subspace", self.mode)))
            }
            (_, Some(a)) if a.ambient_dim() != rs.rank() => Err(Error::input(format!(
                "subspace lives in dimension {}, expected {}",
                a.ambient_dim(),
                rs.rank()
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativityVerdict {
    pub feasible: bool,
    /// Basis of `span Σ(λ)` in simple-root coordinates (reduced echelon form).
    pub span_basis: Vec<Vec<Q>>,
    /// Coefficients of `ω` over `span_basis`.
    pub witness_omega: Option<Vec<Q>>,
    /// `ω` in fundamental-weight coordinates.
    pub omega: Option<Vec<Q>>,
    /// `(Re λ − ω)(ϖ_i^∨)` for each generator.
    pub values: Option<Vec<Q>>,
    /// Generators where the form vanishes.
    pub tight_generators: Vec<usize>,
    /// Generators on which strict negativity is required.
    pub strict_generators: Vec<usize>,
    /// Integral mode: whether `Im λ` vanishes on `𝔞_λ`.
    pub im_vanishes_on_subspace: Option<bool>,
}

/// `λ(X)` for a functional in fundamental-weight coordinates and `X` in
/// coweight coordinates.
fn eval_weight(rs: &RootSystem, weight: &[Q], x: &[Q]) -> Q {
    dot(&rs.simple_coords(weight), x)
}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    (0..dim).map(|j| q(i64::from(i == j))).collect()
}

fn roots_span(roots: &[Root]) -> Vec<Vec<Q>> {
    let rows: Vec<Vec<i64>> = roots.iter().map(|a| a.0.clone()).collect();
    linalg::canonical_row_space(&linalg::to_q(&rows))
}

/// Decides the query by exact linear programming. `ω = 0` is tried first so
/// that trivial witnesses stay trivial.
pub fn check_negativity(rs: &RootSystem, query: &NegativityQuery) -> Result<NegativityVerdict> {
    query.validate(rs)?;
    let r = rs.rank();
    let lambda = &query.lambda;
    let roots = integral_roots(rs, lambda, query.denominator)?;
    let span_basis = roots_span(&roots);
    let strict_generators: Vec<usize> = match &query.a_lambda {
        None => (0..r).collect(),
        Some(a) => (0..r).filter(|&i| !a.contains(&unit(r, i))).collect(),
    };
    let im_vanishes_on_subspace = match (query.mode, &query.a_lambda) {
        (Mode::Integral, Some(a)) => Some(
            a.vectors()
                .iter()
                .all(|x| eval_weight(rs, &lambda.im, x).is_zero()),
        ),
        _ => None,
    };
    let mut verdict = NegativityVerdict {
        feasible: false,
        span_basis,
        witness_omega: None,
        omega: None,
        values: None,
        tight_generators: Vec::new(),
        strict_generators,
        im_vanishes_on_subspace,
    };
    if im_vanishes_on_subspace == Some(false) {
        return Ok(verdict);
    }

    let a = rs.simple_coords(&lambda.re);
    let is_strict = |i: usize| verdict.strict_generators.contains(&i);
    let k = verdict.span_basis.len();
    let zero_ok = (0..r).all(|i| if is_strict(i) { a[i].is_negative() } else { !a[i].is_positive() });

    let t = if zero_ok {
        Some(vec![Q::zero(); k])
    } else if k == 0 {
        None
    } else {
        solve_for_omega(&a, &verdict.span_basis, &verdict.strict_generators)
    };
    let Some(t) = t else { return Ok(verdict) };

    let mut omega_simple = vec![Q::zero(); r];
    for (tk, b) in t.iter().zip(&verdict.span_basis) {
        for (o, bi) in omega_simple.iter_mut().zip(b) {
            *o += tk * bi;
        }
    }
    let values: Vec<Q> = a.iter().zip(&omega_simple).map(|(x, y)| x - y).collect();
    let ok = (0..r).all(|i| if is_strict(i) { values[i].is_negative() } else { !values[i].is_positive() });
    if !ok {
        return Err(Error::internal("linear program returned an invalid witness"));
    }
    verdict.tight_generators = (0..r).filter(|&i| values[i].is_zero()).collect();
    verdict.omega = Some(rs.weight_coords(&omega_simple));
    verdict.witness_omega = Some(t);
    verdict.values = Some(values);
    verdict.feasible = true;
    Ok(verdict)
}

/// Finds `t` with `a_i − Σ_k t_k b_{k,i}` negative on strict rows and
/// nonpositive elsewhere: maximize a slack `s ≤ 1` added to the strict rows.
fn solve_for_omega(a: &[Q], basis: &[Vec<Q>], strict: &[usize]) -> Option<Vec<Q>> {
    let r = a.len();
    let k = basis.len();
    // Variables: t⁺ (k), t⁻ (k), s.
    let nvars = 2 * k + 1;
    let mut rows = Vec::with_capacity(r + 1);
    let mut bounds = Vec::with_capacity(r + 1);
    for i in 0..r {
        let mut row = vec![Q::zero(); nvars];
        for kk in 0..k {
            row[kk] = -basis[kk][i].clone();
            row[k + kk] = basis[kk][i].clone();
        }
        if strict.contains(&i) {
            row[2 * k] = Q::one();
        }
        rows.push(row);
        bounds.push(-a[i].clone());
    }
    let mut cap = vec![Q::zero(); nvars];
    cap[2 * k] = Q::one();
    rows.push(cap.clone());
    bounds.push(Q::one());
    match maximize(&cap, &rows, &bounds) {
        LpOutcome::Optimal { x, value } if strict.is_empty() || value.is_positive() => {
            Some((0..k).map(|kk| &x[kk] - &x[k + kk]).collect())
        }
        _ => None,
    }
}

/// Subspaces `𝔞_μ` assigned to the members of a class.
#[derive(Clone, Debug)]
pub enum Subspaces {
    /// Strict mode.
    None,
    /// The same subspace for every member.
    Uniform(SubspaceBasis),
    PerMember(Vec<(Parameter, SubspaceBasis)>),
}

impl Subspaces {
    fn for_member(&self, mode: Mode, mu: &Parameter) -> Result<Option<SubspaceBasis>> {
        match (mode, self) {
            (Mode::Strict, Subspaces::None) => Ok(None),
            (Mode::Strict, _) => Err(Error::input("strict mode takes no subspaces")),
            (_, Subspaces::None) => Err(Error::input(format!("{mode} mode requires subspaces"))),
            (_, Subspaces::Uniform(a)) => Ok(Some(a.clone())),
            (_, Subspaces::PerMember(list)) => list
                .iter()
                .find(|(m, _)| m == mu)
                .map(|(_, a)| Some(a.clone()))
                .ok_or_else(|| Error::input("missing subspace for a class member")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub holds: bool,
    pub class: ParameterClass,
    /// One verdict per class member, in class order.
    pub verdicts: Vec<NegativityVerdict>,
}

/// Checks every member of `[λ]` (denominator `n`).
pub fn check_class_negativity(
    rs: &RootSystem,
    lambda: &Parameter,
    mode: Mode,
    subspaces: &Subspaces,
    n: u64,
) -> Result<ClassVerdict> {
    let class = equivalence_class(rs, lambda, n)?;
    let mut verdicts = Vec::with_capacity(class.len());
    for m in &class.members {
        let query = NegativityQuery {
            lambda: m.mu.clone(),
            mode,
            a_lambda: subspaces.for_member(mode, &m.mu)?,
            denominator: n,
        };
        verdicts.push(check_negativity(rs, &query)?);
    }
    let holds = verdicts.iter().all(|v| v.feasible);
    Ok(ClassVerdict { holds, class, verdicts })
}

/// The class member whose subspace contains the edge after transport.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainingMember {
    pub w: WeylElement,
    pub word: Vec<usize>,
    pub mu: Parameter,
    pub subspace: SubspaceBasis,
}

#[derive(Clone, Debug)]
pub struct FundamentalLemmaReport {
    pub mode: Mode,
    /// Whether every member of `[λ]` passed the negativity check. When false
    /// the remaining fields are computed but carry no promise.
    pub hypothesis: bool,
    pub integral_roots: Subsystem,
    pub edge_basis: SubspaceBasis,
    pub containing_member: Option<ContainingMember>,
    pub re_lambda_on_edge_zero: bool,
    pub parabolic_closure: Subsystem,
    /// Elementary divisors of the weight lattice of `Σ(λ)` over the root
    /// lattice of its parabolic closure.
    pub lattice_divisors: Vec<BigInt>,
    pub n_lattice: BigInt,
    pub integrality_ok: bool,
    /// `N(Σ(λ))` when `Σ(λ)` has full rank.
    pub n_integral: Option<BigInt>,
    pub im_lambda_on_edge_zero: Option<bool>,
    pub lambda_real: Option<bool>,
    pub edge_trivial: Option<bool>,
}

/// Instance check of the fundamental lemma at `λ` (denominator 1).
pub fn verify_fundamental_lemma(
    rs: &RootSystem,
    lambda: &Parameter,
    mode: Mode,
    subspaces: &Subspaces,
) -> Result<FundamentalLemmaReport> {
    let class_verdict = check_class_negativity(rs, lambda, mode, subspaces, 1)?;
    let roots = integral_roots(rs, lambda, 1)?;
    let integral = Subsystem::from_roots(rs, &roots)?;
    let edge = edge_of_roots(rs, &roots);

    let containing_member = find_containing_member(rs, lambda, mode, subspaces, &class_verdict.class, &edge)?;
    let re_on_edge = |x: &Vec<Q>| eval_weight(rs, &lambda.re, x);
    let im_on_edge = |x: &Vec<Q>| eval_weight(rs, &lambda.im, x);
    let re_lambda_on_edge_zero = edge.vectors().iter().all(|x| re_on_edge(x).is_zero());

    let closure = parabolic_closure(rs, &roots)?;
    let lattice_divisors = weight_over_root_divisors(rs, &roots, &closure)?;
    let n_lattice: BigInt = lattice_divisors.iter().product();
    let n_u64: u64 = n_lattice
        .clone()
        .try_into()
        .map_err(|_| Error::capacity("lattice index does not fit in 64 bits"))?;
    let integrality_ok = rs
        .roots()
        .iter()
        .all(|a| in_frac_lattice(&rs.pairing_unchecked(lambda, &a.0).re, n_u64));
    let full_rank = rs.rank_of(&roots) == rs.rank();
    let n_integral = if full_rank { Some(n_of_subsystem(rs, &integral)?) } else { None };

    let (im_lambda_on_edge_zero, lambda_real) = match mode {
        Mode::Integral => (
            Some(edge.vectors().iter().all(|x| im_on_edge(x).is_zero())),
            Some(lambda.is_real()),
        ),
        _ => (None, None),
    };
    let edge_trivial = (mode == Mode::Strict).then(|| edge.dim() == 0 && full_rank);

    Ok(FundamentalLemmaReport {
        mode,
        hypothesis: class_verdict.holds,
        integral_roots: integral,
        edge_basis: edge,
        containing_member,
        re_lambda_on_edge_zero,
        parabolic_closure: closure,
        lattice_divisors,
        n_lattice,
        integrality_ok,
        n_integral,
        im_lambda_on_edge_zero,
        lambda_real,
        edge_trivial,
    })
}

/// First `w` (gallery order over `w^{-1} ∈ [e]_λ`) with `𝔢 ⊆ w^{-1}𝔞_{wλ}`.
/// Strict mode uses `𝔞_μ = {0}`.
fn find_containing_member(
    rs: &RootSystem,
    lambda: &Parameter,
    mode: Mode,
    subspaces: &Subspaces,
    class: &ParameterClass,
    edge: &SubspaceBasis,
) -> Result<Option<ContainingMember>> {
    let gallery = gallery_class(rs, lambda)?;
    for (idx, u) in gallery.chambers().iter().enumerate() {
        let w = rs.inverse(u);
        let mu = rs.act_parameter(&w, lambda);
        if !class.contains(&mu) {
            return Err(Error::internal("gallery element outside the parameter class"));
        }
        let subspace = match subspaces.for_member(mode, &mu)? {
            Some(a) => a,
            None => SubspaceBasis::zero(rs.rank()),
        };
        // 𝔢 ⊆ w^{-1}𝔞_μ ⟺ w𝔢 ⊆ 𝔞_μ
        if edge.vectors().iter().all(|x| subspace.contains(&rs.act_coweight(&w, x))) {
            let mut word = gallery.word(idx).to_vec();
            word.reverse();
            return Ok(Some(ContainingMember { w, word, mu, subspace }));
        }
    }
    Ok(None)
}

/// Divisors of the weight lattice of `Σ(λ)` (the dual of `ℤ[Σ(λ)^∨]` inside
/// `span Σ(λ)`) over the root lattice of the parabolic closure. With `b` a
/// basis of the root lattice and `c` one of the coroot lattice, the index is
/// read off the pairing matrix `M_ij = b_i(c_j)`.
fn weight_over_root_divisors(
    rs: &RootSystem,
    roots: &[Root],
    closure: &Subsystem,
) -> Result<Vec<BigInt>> {
    let r = rs.rank();
    let coroots: Vec<Vec<Q>> = roots
        .iter()
        .map(|a| rs.coroot_coweight(&a.0).into_iter().map(q).collect())
        .collect();
    let closure_roots: Vec<Vec<Q>> = closure
        .roots()
        .iter()
        .map(|a| a.0.iter().map(|&x| q(x)).collect())
        .collect();
    let c = Lattice::from_generators(&coroots, r)?;
    let b = Lattice::from_generators(&closure_roots, r)?;
    if b.rank() != c.rank() {
        return Err(Error::internal("parabolic closure and coroots differ in rank"));
    }
    if b.rank() == 0 {
        return Ok(Vec::new());
    }
    let m: Vec<Vec<BigInt>> = b
        .basis()
        .iter()
        .map(|bi| {
            c.basis()
                .iter()
                .map(|cj| {
                    let v = dot(bi, cj);
                    if !v.is_integer() {
                        return Err(Error::internal("root paired non-integrally with a coroot"));
                    }
                    Ok(v.to_integer())
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let snf = smith_normal_form(&IntegerMatrix::new(m)?);
    Ok(snf.divisors)
}

/// Outcome of [`certify_exponent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentCertificate {
    /// `c_α` with `Re μ − ρ_Q = Σ c_α α`; `None` when no such expansion exists.
    pub coefficients: Option<Vec<Q>>,
    pub nu: Vec<Q>,
    /// Basis of the edge `𝔞_{Z,E}` of the compression cone.
    pub edge_basis: Vec<Vec<Q>>,
    /// Generators of the compression cone modulo its edge, one per spherical
    /// root: `α(X_β) = −δ_{αβ}`, chosen in the span of the roots.
    pub cone_generators: Vec<Vec<Q>>,
    /// `(Re μ − ρ_Q)(X_β)`.
    pub generator_values: Vec<Q>,
    pub lattice_ok: bool,
    pub ds1_ok: bool,
    pub ds2_ok: bool,
}

/// Expands `μ = ρ_Q + Σ c_α α + iν` over independent spherical roots and
/// checks `c_α ∈ (1/N)ℕ` (with `ℕ = {1, 2, …}`), strict negativity on the
/// cone generators and vanishing on the edge. `mu` is the real part of `μ`;
/// `nu` is stored for the record.
#[allow(clippy::too_many_arguments)]
pub fn certify_exponent(
    rank_z: usize,
    spherical_roots: &[Vec<Q>],
    edge_dim: Option<usize>,
    mu: &[Q],
    rho_q: &[Q],
    nu: &[Q],
    n: u64,
) -> Result<ExponentCertificate> {
    if rank_z == 0 {
        return Err(Error::input("rank must be positive"));
    }
    if n == 0 {
        return Err(Error::input("denominator must be a positive integer"));
    }
    for (name, v) in [("mu", mu), ("rho_q", rho_q), ("nu", nu)] {
        if v.len() != rank_z {
            return Err(Error::input(format!("{name} has {} coordinates, expected {rank_z}", v.len())));
        }
    }
    if spherical_roots.iter().any(|a| a.len() != rank_z) {
        return Err(Error::input(format!("spherical roots must have {rank_z} coordinates")));
    }
    if !linalg::is_independent(spherical_roots) {
        return Err(Error::input("spherical roots are linearly dependent"));
    }
    let k = spherical_roots.len();
    if let Some(d) = edge_dim {
        if d != rank_z - k {
            return Err(Error::input(format!(
                "edge dimension {d} inconsistent with {k} independent roots in rank {rank_z}"
            )));
        }
    }

    let f: Vec<Q> = mu.iter().zip(rho_q).map(|(a, b)| a - b).collect();
    let coefficients = linalg::solve_combination(spherical_roots, &f);
    let edge_basis = linalg::nullspace(spherical_roots, rank_z);

    // X_β = Σ_k y_k S_k with (S Sᵀ) y = −e_β.
    let gram: Vec<Vec<Q>> = spherical_roots
        .iter()
        .map(|a| spherical_roots.iter().map(|b| dot(a, b)).collect())
        .collect();
    let cone_generators: Vec<Vec<Q>> = if k == 0 {
        Vec::new()
    } else {
        let ginv = linalg::inverse(&gram).ok_or_else(|| Error::internal("singular Gram matrix"))?;
        (0..k)
            .map(|beta| {
                let mut x = vec![Q::zero(); rank_z];
                for (kk, s) in spherical_roots.iter().enumerate() {
                    let y = -ginv[kk][beta].clone();
                    for (xi, si) in x.iter_mut().zip(s) {
                        *xi += &y * si;
                    }
                }
                x
            })
            .collect()
    };
    let generator_values: Vec<Q> = cone_generators.iter().map(|x| dot(&f, x)).collect();

    let ds1_ok = generator_values.iter().all(Signed::is_negative);
    let ds2_ok = edge_basis.iter().all(|x| dot(&f, x).is_zero());
    let lattice_ok = coefficients.as_ref().is_some_and(|c| {
        c.iter().all(|x| x.is_positive() && in_frac_lattice(x, n))
    });
    Ok(ExponentCertificate {
        coefficients,
        nu: nu.to_vec(),
        edge_basis,
        cone_generators,
        generator_values,
        lattice_ok,
        ds1_ok,
        ds2_ok,
    })
}

/// `18 d²` with `d` the product of the Cartan determinants of the components
/// (`d = 1` for the empty type).
pub fn rank_one_bound(m_type: Option<&RootSystemSpec>) -> Result<BigInt> {
    let d = match m_type {
        None => BigInt::one(),
        Some(spec) => {
            let det = RootSystem::build(spec)?.cartan_determinant();
            if !det.is_integer() {
                return Err(Error::internal("non-integral Cartan determinant"));
            }
            det.to_integer().abs()
        }
    };
    Ok(BigInt::from(18) * &d * &d)
}

/// Evaluates a weight at a coweight point; exposed for the verification
/// sweeps.
pub fn weight_at(rs: &RootSystem, weight: &[Q], x: &[Q]) -> Q {
    eval_weight(rs, weight, x)
}

/// `α(X)` for a root; a thin wrapper kept next to [`weight_at`].
pub fn root_at(root: &Root, x: &[Q]) -> Q {
    dot_int(&root.0, x)
}
