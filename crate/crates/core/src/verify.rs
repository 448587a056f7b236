//! Property sweeps over a parameter grid, as run by `rootint verify`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::index::sample;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::negativity::{check_class_negativity, verify_fundamental_lemma, Mode, Subspaces};
use crate::params::{c_lambda, equivalence_class, gallery_class, SubspaceBasis};
use crate::rational::{frac, q, Q};
use crate::rootsys::{build_root_system, Parameter, RootSystem};
use crate::subsystems::{full_rank_subsystems, n_of_subsystem, n_sigma, subsystem_label, Method};

/// Seed of the rank ≥ 3 grid sample.
pub const GRID_SEED: u64 = 0x5eed_2024;
/// Number of sampled parameters in rank ≥ 3.
pub const GRID_SAMPLE: usize = 300;

fn real_values() -> Vec<Q> {
    [(0, 1), (1, 3), (-1, 3), (1, 2), (-1, 2), (1, 1), (-1, 1), (3, 2), (-3, 2)]
        .iter()
        .map(|&(n, d)| frac(n, d))
        .collect()
}

fn imag_values() -> Vec<Q> {
    vec![q(0), frac(1, 2), frac(-1, 2)]
}

fn coordinate_values(rank: usize) -> Vec<(Q, Q)> {
    let re = if rank == 1 { (-36..=36).map(|k| frac(k, 12)).collect() } else { real_values() };
    let mut out = Vec::new();
    for im in imag_values() {
        for r in &re {
            out.push((r.clone(), im.clone()));
        }
    }
    out
}

/// The test grid: every combination of the coordinate values in rank ≤ 2
/// (a denser real grid in rank 1), a seeded sample in higher rank.
pub fn parameter_grid(rank: usize) -> Vec<Parameter> {
    let values = coordinate_values(rank);
    let m = values.len();
    let build = |mut idx: usize| {
        let mut re = Vec::with_capacity(rank);
        let mut im = Vec::with_capacity(rank);
        for _ in 0..rank {
            let (r, i) = &values[idx % m];
            re.push(r.clone());
            im.push(i.clone());
            idx /= m;
        }
        Parameter { re, im }
    };
    let total = m.checked_pow(rank as u32).unwrap_or(usize::MAX);
    if rank <= 2 {
        (0..total).map(build).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(GRID_SEED);
        let mut picks = sample(&mut rng, total, GRID_SAMPLE.min(total)).into_vec();
        picks.sort_unstable();
        picks.into_iter().map(build).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub root_type: String,
    pub checked: usize,
    pub failures: usize,
    /// First failing input, if any.
    pub example: Option<String>,
}

impl PropertyResult {
    fn new(name: &str, root_type: &str) -> Self {
        PropertyResult {
            name: name.to_string(),
            root_type: root_type.to_string(),
            checked: 0,
            failures: 0,
            example: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.example.is_none() {
                self.example = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn show(lambda: &Parameter) -> String {
    let f = |v: &[Q]| v.iter().map(crate::rational::fmt_q).collect::<Vec<_>>().join(",");
    format!("re=({}) im=({})", f(&lambda.re), f(&lambda.im))
}

/// Sweeps the grid of one root system.
pub fn sweep(rs: &RootSystem) -> Result<Vec<PropertyResult>> {
    let t = rs.spec().to_string();
    let mut chamber = PropertyResult::new("chamber-union-equals-gallery-class", &t);
    let mut orbit = PropertyResult::new("class-equals-gallery-orbit", &t);
    let mut strict_edge = PropertyResult::new("strict-class-has-trivial-edge", &t);
    let mut strict_int = PropertyResult::new("strict-class-integrality", &t);
    let mut integral = PropertyResult::new("integral-class-is-real-and-vanishes-on-edge", &t);
    let mut weak = PropertyResult::new("weak-class-vanishes-on-edge", &t);
    let mut type_a = PropertyResult::new("type-a-strict-class-is-singleton", &t);
    let is_type_a = rs.spec().components().iter().all(|c| c.family == crate::rootsys::Family::A);
    let nsig = n_sigma(rs)?;
    let full = Subspaces::Uniform(SubspaceBasis::full(rs.rank()));

    for lambda in parameter_grid(rs.rank()) {
        let gallery = gallery_class(rs, &lambda)?;
        let chambers = c_lambda(rs, &lambda)?;
        chamber.record(gallery.same_chambers(&chambers), || show(&lambda));

        let class = equivalence_class(rs, &lambda, 1)?;
        let from_class: BTreeSet<Parameter> = class.members.iter().map(|m| m.mu.clone()).collect();
        let from_gallery: BTreeSet<Parameter> = gallery
            .chambers()
            .iter()
            .map(|u| rs.act_parameter(&rs.inverse(u), &lambda))
            .collect();
        orbit.record(from_class == from_gallery, || show(&lambda));

        if check_class_negativity(rs, &lambda, Mode::Strict, &Subspaces::None, 1)?.holds {
            let report = verify_fundamental_lemma(rs, &lambda, Mode::Strict, &Subspaces::None)?;
            strict_edge.record(report.edge_trivial == Some(true), || show(&lambda));
            let ok = match &report.n_integral {
                Some(n) => {
                    nsig.is_multiple_of(n)
                        && rs.roots().iter().all(|a| {
                            let p = rs.pairing_unchecked(&lambda, &a.0);
                            p.im.is_zero() && in_frac_lattice_big(&p.re, n)
                        })
                }
                None => false,
            };
            strict_int.record(ok, || show(&lambda));
            if is_type_a {
                let integral_everywhere =
                    rs.roots().iter().all(|a| rs.pairing_unchecked(&lambda, &a.0).in_frac_lattice(1));
                type_a.record(class.len() == 1 && integral_everywhere, || show(&lambda));
            }
        }
        if check_class_negativity(rs, &lambda, Mode::Integral, &full, 1)?.holds {
            let report = verify_fundamental_lemma(rs, &lambda, Mode::Integral, &full)?;
            let ok = lambda.is_real()
                && report.re_lambda_on_edge_zero
                && report.im_lambda_on_edge_zero == Some(true);
            integral.record(ok, || show(&lambda));
        }
        if check_class_negativity(rs, &lambda, Mode::Weak, &full, 1)?.holds {
            let report = verify_fundamental_lemma(rs, &lambda, Mode::Weak, &full)?;
            let ok = report.re_lambda_on_edge_zero && report.integrality_ok && report.containing_member.is_some();
            weak.record(ok, || show(&lambda));
        }
    }
    let mut out = vec![chamber, orbit, strict_edge, strict_int, integral, weak];
    if is_type_a {
        out.push(type_a);
    }
    Ok(out)
}

/// Multiset of `(label, N)` over the full-rank subsystems found by a method.
pub fn subsystem_signature(rs: &RootSystem, method: Method) -> Result<Vec<(String, BigInt)>> {
    let subs = full_rank_subsystems(rs, method)?;
    let mut sig = subs
        .iter()
        .map(|s| Ok((subsystem_label(rs, s), n_of_subsystem(rs, s)?)))
        .collect::<Result<Vec<_>>>()?;
    sig.sort();
    Ok(sig)
}

/// Compares the two enumeration methods on a system of rank ≤ 3.
pub fn bds_vs_brute_force(rs: &RootSystem) -> Result<PropertyResult> {
    let mut r = PropertyResult::new("bds-matches-brute-force", &rs.spec().to_string());
    let a = subsystem_signature(rs, Method::Bds)?;
    let b = subsystem_signature(rs, Method::BruteForce)?;
    r.record(a == b, || format!("bds {a:?} vs brute force {b:?}"));
    Ok(r)
}

/// Default types for `verify`.
pub const DEFAULT_SWEEP_TYPES: &[&str] = &["A1", "A2", "B2", "G2", "BC1"];
pub const DEFAULT_ENUMERATION_TYPES: &[&str] = &["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1", "BC2"];

/// Runs the sweeps on the given types (defaults when empty).
pub fn run_suite(types: &[String]) -> Result<Vec<PropertyResult>> {
    let (sweep_types, enum_types): (Vec<String>, Vec<String>) = if types.is_empty() {
        (
            DEFAULT_SWEEP_TYPES.iter().map(|s| s.to_string()).collect(),
            DEFAULT_ENUMERATION_TYPES.iter().map(|s| s.to_string()).collect(),
        )
    } else {
        (types.to_vec(), types.to_vec())
    };
    let mut out = Vec::new();
    for t in &sweep_types {
        out.extend(sweep(&build_root_system(t)?)?);
    }
    for t in &enum_types {
        let rs = build_root_system(t)?;
        if rs.rank() <= crate::subsystems::BRUTE_FORCE_MAX_RANK {
            out.push(bds_vs_brute_force(&rs)?);
        }
    }
    Ok(out)
}

/// `x ∈ (1/n)ℤ` for a nonnegative big integer `n`; zero never qualifies.
pub fn in_frac_lattice_big(x: &Q, n: &BigInt) -> bool {
    !n.is_zero() && (x * Q::from_integer(n.clone())).is_integer()
}
