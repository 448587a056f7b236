mod common;

use common::{fm_feasible, fr, q, to_simple, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rootint::negativity::{
    certify_exponent, check_class_negativity, check_negativity, rank_one_bound, verify_fundamental_lemma, Mode,
    NegativityQuery, Subspaces,
};
use rootint::params::{integral_roots, SubspaceBasis};
use rootint::{build_root_system, Error, Parameter, RootSystem, RootSystemSpec};

fn rs(t: &str) -> RootSystem {
    build_root_system(t).unwrap()
}

fn real(xs: &[Q]) -> Parameter {
    Parameter::real(xs.to_vec())
}

fn query(l: &Parameter, mode: Mode, a: Option<SubspaceBasis>) -> NegativityQuery {
    match a {
        None => NegativityQuery::strict(l.clone()),
        Some(a) => NegativityQuery::with_subspace(l.clone(), mode, a),
    }
}

/// Fourier–Motzkin decision of the same question, with `ω` ranging over all
/// real combinations of the positive roots of `Σ(λ)` (a redundant spanning set).
fn oracle_feasible(r: &RootSystem, l: &Parameter, a: Option<&SubspaceBasis>) -> bool {
    let n = r.rank();
    let gens: Vec<Vec<i64>> =
        integral_roots(r, l, 1).unwrap().into_iter().filter(|b| b.is_positive()).map(|b| b.0).collect();
    let re = to_simple(r, &l.re);
    let rows = (0..n)
        .map(|i| {
            let unit: Vec<Q> = (0..n).map(|j| q(i64::from(i == j))).collect();
            let strict = a.is_none_or(|a| !a.contains(&unit));
            let coeffs: Vec<Q> = gens.iter().map(|b| q(-b[i])).collect();
            (coeffs, re[i].clone(), strict)
        })
        .collect();
    fm_feasible(rows)
}

fn arb_rational() -> impl Strategy<Value = Q> {
    (-6i64..=6, prop::sample::select(vec![1i64, 2, 3])).prop_map(|(n, d)| fr(n, d))
}

fn arb_real(types: &'static [&'static str]) -> impl Strategy<Value = (RootSystem, Parameter)> {
    (prop::sample::select(types), prop::collection::vec(arb_rational(), 2)).prop_map(|(t, v)| {
        let r = rs(t);
        let n = r.rank();
        (r, real(&v[..n]))
    })
}

fn arb_subspace(n: usize) -> impl Strategy<Value = SubspaceBasis> {
    prop::sample::select(vec![0usize, 1, 2, 3, 4]).prop_map(move |k| match (k, n) {
        (0, _) => SubspaceBasis::zero(n),
        (1, _) => SubspaceBasis::full(n),
        (2, 1) | (3, 1) | (4, 1) => SubspaceBasis::zero(1),
        (2, _) => SubspaceBasis::new(vec![vec![q(1), q(0)]], 2).unwrap(),
        (3, _) => SubspaceBasis::new(vec![vec![q(1), q(-1)]], 2).unwrap(),
        _ => SubspaceBasis::new(vec![vec![q(1), q(1)]], 2).unwrap(),
    })
}

const LOW_RANK: &[&str] = &["A1", "A2", "B2", "G2", "BC1", "BC2", "A1xA1"];

/// A random point of the dominant chamber `C` in coweight coordinates, with
/// some coordinates forced to zero so that faces are hit.
fn random_chamber_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    loop {
        let x: Vec<Q> = (0..n)
            .map(|_| if rng.gen_bool(0.3) { Q::zero() } else { fr(rng.gen_range(1..=20), rng.gen_range(1..=7)) })
            .collect();
        if x.iter().any(|c| !c.is_zero()) {
            return x;
        }
    }
}

#[test]
fn documented_examples() {
    let a1 = rs("A1");
    let v = check_negativity(&a1, &NegativityQuery::strict(real(&[q(-1)]))).unwrap();
    assert!(v.feasible);
    assert_eq!(v.witness_omega, Some(vec![Q::zero()]));
    assert!(!check_negativity(&a1, &NegativityQuery::strict(real(&[fr(1, 2)]))).unwrap().feasible);
    for t in ["A1", "B2", "G2", "A3"] {
        let r = rs(t);
        let zero = Parameter::zero(r.rank());
        let q = NegativityQuery::with_subspace(zero.clone(), Mode::Weak, SubspaceBasis::full(r.rank()));
        let v = check_negativity(&r, &q).unwrap();
        assert!(v.feasible && v.witness_omega.unwrap().iter().all(Zero::is_zero));
        let full = Subspaces::Uniform(SubspaceBasis::full(r.rank()));
        assert!(check_class_negativity(&r, &zero, Mode::Weak, &full, 1).unwrap().holds);
    }
    assert!(!check_class_negativity(&a1, &real(&[fr(1, 2)]), Mode::Strict, &Subspaces::None, 1).unwrap().holds);
    assert!(check_class_negativity(&a1, &real(&[q(-1)]), Mode::Strict, &Subspaces::None, 1).unwrap().holds);
}

#[test]
fn fundamental_lemma_examples() {
    let a1 = rs("A1");
    let rep = verify_fundamental_lemma(&a1, &real(&[q(-1)]), Mode::Strict, &Subspaces::None).unwrap();
    assert!(rep.hypothesis && rep.integrality_ok);
    assert_eq!(rep.edge_trivial, Some(true));
    assert_eq!(rep.n_lattice, BigInt::from(2));
    let a2 = rs("A2");
    let rep = verify_fundamental_lemma(&a2, &real(&[q(-1), q(-1)]), Mode::Strict, &Subspaces::None).unwrap();
    assert_eq!(rep.n_lattice, BigInt::from(3));
    assert_eq!(rep.lattice_divisors, vec![BigInt::one(), BigInt::from(3)]);
    assert!(rep.integrality_ok);
    // λ = 0 in weak mode: trivial edge, index of the full system
    let b2 = rs("B2");
    let full = Subspaces::Uniform(SubspaceBasis::full(2));
    let rep = verify_fundamental_lemma(&b2, &Parameter::zero(2), Mode::Weak, &full).unwrap();
    assert_eq!(rep.edge_basis.dim(), 0);
    assert!(rep.re_lambda_on_edge_zero);
    assert_eq!(rep.n_lattice, BigInt::from(2));
}

#[test]
fn query_validation() {
    let r = rs("A2");
    let l = Parameter::zero(2);
    let bad = [
        NegativityQuery { lambda: l.clone(), mode: Mode::Strict, a_lambda: Some(SubspaceBasis::full(2)), denominator: 1 },
        NegativityQuery { lambda: l.clone(), mode: Mode::Weak, a_lambda: None, denominator: 1 },
        NegativityQuery { lambda: l.clone(), mode: Mode::Weak, a_lambda: Some(SubspaceBasis::full(3)), denominator: 1 },
        NegativityQuery { lambda: l.clone(), mode: Mode::Strict, a_lambda: None, denominator: 0 },
    ];
    for q in bad {
        assert!(matches!(check_negativity(&r, &q), Err(Error::Input(_))));
    }
    assert!(matches!(
        check_class_negativity(&r, &l, Mode::Weak, &Subspaces::PerMember(vec![]), 1),
        Err(Error::Input(_))
    ));
    assert!("loose".parse::<Mode>().is_err());
    assert_eq!("integral".parse::<Mode>().unwrap(), Mode::Integral);
}

#[test]
fn integral_mode_needs_real_values_on_the_subspace() {
    let r = rs("A1");
    let l = Parameter::new(vec![q(-1)], vec![fr(1, 2)]).unwrap();
    let v = check_negativity(&r, &query(&l, Mode::Integral, Some(SubspaceBasis::full(1)))).unwrap();
    assert_eq!(v.im_vanishes_on_subspace, Some(false));
    assert!(!v.feasible);
    let v = check_negativity(&r, &query(&l, Mode::Integral, Some(SubspaceBasis::zero(1)))).unwrap();
    assert_eq!(v.im_vanishes_on_subspace, Some(true));
    // weak mode ignores the imaginary part
    let v = check_negativity(&r, &query(&l, Mode::Weak, Some(SubspaceBasis::full(1)))).unwrap();
    assert!(v.feasible);
}

#[test]
fn rank_one_bounds() {
    for (t, want) in [("A1", 72), ("A2", 162), ("B2", 72), ("G2", 18), ("A1xA1", 288)] {
        let spec: RootSystemSpec = t.parse().unwrap();
        assert_eq!(rank_one_bound(Some(&spec)).unwrap(), BigInt::from(want), "{t}");
    }
    assert_eq!(rank_one_bound(None).unwrap(), BigInt::from(18));
}

#[test]
fn exponent_input_errors() {
    let one = vec![q(1)];
    assert!(certify_exponent(0, &[], None, &[], &[], &[], 1).is_err());
    assert!(certify_exponent(1, std::slice::from_ref(&one), None, &one, &one, &one, 0).is_err());
    assert!(certify_exponent(1, &[one.clone(), vec![q(2)]], None, &one, &one, &one, 1).is_err());
    assert!(certify_exponent(1, std::slice::from_ref(&one), Some(1), &one, &one, &one, 1).is_err());
    assert!(certify_exponent(2, std::slice::from_ref(&one), None, &one, &one, &one, 1).is_err());
}

/// Witnesses of feasible verdicts are checked at 1000 seeded points of the
/// chamber outside the subspace.
#[test]
fn feasible_witnesses_hold_on_sampled_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for t in ["A2", "B2", "G2", "A3", "B3"] {
        let r = rs(t);
        let n = r.rank();
        for trial in 0..200 {
            let l = real(&(0..n).map(|_| fr(rng.gen_range(-6..=2), rng.gen_range(1..=3))).collect::<Vec<_>>());
            let a = if trial % 2 == 0 { None } else { Some(SubspaceBasis::new(vec![(0..n).map(|i| q(i64::from(i == 0))).collect()], n).unwrap()) };
            let mode = if a.is_some() { Mode::Weak } else { Mode::Strict };
            let v = check_negativity(&r, &query(&l, mode, a.clone())).unwrap();
            if !v.feasible {
                continue;
            }
            let omega = v.omega.unwrap();
            let f: Vec<Q> = to_simple(&r, &l.re).iter().zip(to_simple(&r, &omega)).map(|(x, y)| x - y).collect();
            for _ in 0..1000 / 50 {
                let x = random_chamber_point(&mut rng, n);
                if a.as_ref().is_some_and(|a| a.contains(&x)) {
                    continue;
                }
                let val = f.iter().zip(&x).fold(Q::zero(), |s, (c, xi)| s + c * xi);
                assert!(val.is_negative(), "{t} {:?}: value {val} at {x:?}", l.re);
                checked += 1;
            }
        }
    }
    assert!(checked >= 1000, "only {checked} points checked");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strict_verdicts_match_fourier_motzkin((r, l) in arb_real(LOW_RANK)) {
        let v = check_negativity(&r, &NegativityQuery::strict(l.clone())).unwrap();
        prop_assert_eq!(v.feasible, oracle_feasible(&r, &l, None));
    }

    #[test]
    fn weak_verdicts_match_fourier_motzkin((r, l, a) in arb_real(LOW_RANK).prop_flat_map(|(r, l)| {
        let n = r.rank();
        (Just(r), Just(l), arb_subspace(n))
    })) {
        let v = check_negativity(&r, &query(&l, Mode::Weak, Some(a.clone()))).unwrap();
        prop_assert_eq!(v.feasible, oracle_feasible(&r, &l, Some(&a)));
        if let Some(values) = &v.values {
            // tight generators lie in the subspace
            for &i in &v.tight_generators {
                prop_assert!(values[i].is_zero());
                let unit: Vec<Q> = (0..r.rank()).map(|j| q(i64::from(i == j))).collect();
                prop_assert!(a.contains(&unit));
            }
        }
    }

    #[test]
    fn strict_implies_weak((r, l) in arb_real(LOW_RANK)) {
        let strict = check_negativity(&r, &NegativityQuery::strict(l.clone())).unwrap();
        let weak = check_negativity(&r, &query(&l, Mode::Weak, Some(SubspaceBasis::zero(r.rank())))).unwrap();
        prop_assert_eq!(strict.feasible, weak.feasible);
        if strict.feasible {
            let any = check_negativity(&r, &query(&l, Mode::Weak, Some(SubspaceBasis::full(r.rank())))).unwrap();
            prop_assert!(any.feasible);
        }
    }

    #[test]
    fn class_verdict_is_the_conjunction((r, l) in arb_real(LOW_RANK)) {
        let cv = check_class_negativity(&r, &l, Mode::Strict, &Subspaces::None, 1).unwrap();
        prop_assert_eq!(cv.verdicts.len(), cv.class.len());
        for (m, v) in cv.class.members.iter().zip(&cv.verdicts) {
            let direct = check_negativity(&r, &NegativityQuery::strict(m.mu.clone())).unwrap();
            prop_assert_eq!(direct.feasible, v.feasible);
        }
        prop_assert_eq!(cv.holds, cv.verdicts.iter().all(|v| v.feasible));
    }

    #[test]
    fn exponent_expansion_round_trips(
        c in prop::collection::vec((1i64..=6, 1i64..=3), 2),
        rho in prop::collection::vec(-3i64..=3, 2),
        n in 1u64..=3,
    ) {
        let s = vec![vec![q(1), q(1)], vec![q(1), q(-2)]];
        let coeffs: Vec<Q> = c.iter().map(|&(a, b)| fr(a, b)).collect();
        let rho: Vec<Q> = rho.iter().map(|&x| q(x)).collect();
        let mu: Vec<Q> = (0..2).map(|k| &rho[k] + &coeffs[0] * &s[0][k] + &coeffs[1] * &s[1][k]).collect();
        let cert = certify_exponent(2, &s, Some(0), &mu, &rho, &[q(0), q(0)], n).unwrap();
        prop_assert_eq!(cert.coefficients.as_ref(), Some(&coeffs));
        prop_assert!(cert.ds1_ok && cert.ds2_ok);
        let in_lattice = coeffs.iter().all(|x| (x * Q::from_integer(BigInt::from(n))).is_integer());
        prop_assert_eq!(cert.lattice_ok, in_lattice);
        for (beta, x) in cert.cone_generators.iter().enumerate() {
            for (alpha, a) in s.iter().enumerate() {
                let v = a.iter().zip(x).fold(Q::zero(), |acc, (p, r)| acc + p * r);
                prop_assert_eq!(v, if alpha == beta { q(-1) } else { q(0) });
            }
        }
    }
}
