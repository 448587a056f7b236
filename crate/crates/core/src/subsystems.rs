//! Root subsystems: axioms, parabolic closures, full-rank enumeration and
//! the coroot-lattice constants `N(Σ⁰)` and `N_Σ`.
//!
//! A full-rank subsystem is recorded as a subset `S ⊆ Σ`. It qualifies when
//! `S` satisfies both subsystem axioms inside `Σ`, or when its coroots `S^∨`
//! satisfy them inside `Σ^∨`. The two conditions differ in non-simply-laced
//! types: in `B2` the short roots `{±e1, ±e2}` are not sum-closed in `Σ`
//! (`e1 + e2` is a root), while their coroots are the sum-closed long roots
//! of `Σ^∨ ≅ C2`. [`ClosedIn`] records which side holds.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{lcm_all, quotient_divisors, Lattice};
use crate::linalg;
use crate::rational::{q, Q};
use crate::rootsys::{ComponentSpec, Family, Root, RootSystem, RootSystemSpec, WeylGroup};

/// Which subsystem axioms a root set satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedIn {
    /// Root subsystem of `Σ` only.
    Sigma,
    /// `S^∨` is a root subsystem of `Σ^∨`, `S` is not one of `Σ`.
    Dual,
    Both,
}

impl ClosedIn {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosedIn::Sigma => "sigma",
            ClosedIn::Dual => "dual",
            ClosedIn::Both => "both",
        }
    }

    fn from_flags(sigma: bool, dual: bool) -> Option<ClosedIn> {
        match (sigma, dual) {
            (true, true) => Some(ClosedIn::Both),
            (true, false) => Some(ClosedIn::Sigma),
            (false, true) => Some(ClosedIn::Dual),
            (false, false) => None,
        }
    }
}

/// A negation-closed set of roots of a fixed ambient system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subsystem {
    /// Sorted indices into the ambient `roots()`.
    indices: Vec<usize>,
    roots: Vec<Root>,
    pub label: Option<String>,
    pub closed_in: Option<ClosedIn>,
}

impl Subsystem {
    fn from_indices(rs: &RootSystem, mut indices: Vec<usize>) -> Subsystem {
        indices.sort_unstable();
        indices.dedup();
        let roots = indices.iter().map(|&i| rs.roots()[i].clone()).collect();
        Subsystem { indices, roots, label: None, closed_in: None }
    }

    /// Builds a subsystem from roots of `rs`, adding negatives.
    pub fn from_roots(rs: &RootSystem, roots: &[Root]) -> Result<Subsystem> {
        let mut idx = Vec::with_capacity(roots.len() * 2);
        for a in roots {
            idx.push(rs.check_root(a)?);
            idx.push(rs.check_root(&a.neg())?);
        }
        Ok(Subsystem::from_indices(rs, idx))
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|a| a.is_positive())
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subsystem) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }
}

fn index_set(rs: &RootSystem, s: &[Root]) -> Result<HashSet<usize>> {
    s.iter().map(|a| rs.check_root(a)).collect()
}

fn sum_root(rs: &RootSystem, a: &[i64], b: &[i64]) -> Option<usize> {
    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    rs.root_index(&s)
}

fn reflect(rs: &RootSystem, gamma: &[i64], beta: &[i64]) -> Vec<i64> {
    let c = rs.root_pairing(gamma, beta);
    gamma.iter().zip(beta).map(|(g, b)| g - c * b).collect()
}

/// Axiom (a) for a subset of `Σ`: closed under negation and under the
/// reflections in its own elements.
fn is_root_system_in_span(rs: &RootSystem, set: &HashSet<usize>) -> bool {
    let roots = rs.roots();
    set.iter().all(|&i| {
        let a = &roots[i].0;
        rs.root_index(&roots[i].neg().0).is_some_and(|n| set.contains(&n))
            && set.iter().all(|&j| {
                rs.root_index(&reflect(rs, &roots[j].0, a))
                    .is_some_and(|k| set.contains(&k))
            })
    })
}

/// Axiom (b): `α, β ∈ S` and `α + β ∈ Σ` imply `α + β ∈ S` (`α = β` allowed).
fn is_sum_closed(rs: &RootSystem, set: &HashSet<usize>) -> bool {
    let roots = rs.roots();
    set.iter().all(|&i| {
        set.iter().all(|&j| match sum_root(rs, &roots[i].0, &roots[j].0) {
            Some(k) => set.contains(&k),
            None => true,
        })
    })
}

fn check_subsystem(rs: &RootSystem, set: &HashSet<usize>) -> bool {
    is_root_system_in_span(rs, set) && is_sum_closed(rs, set)
}

/// Both subsystem axioms for `S ⊆ Σ`.
pub fn is_root_subsystem(rs: &RootSystem, s: &[Root]) -> Result<bool> {
    let set = index_set(rs, s)?;
    Ok(check_subsystem(rs, &set))
}

/// Maps roots of `rs` to the corresponding roots of `rs.dual()`.
pub struct CorootMap {
    dual: RootSystem,
    to_dual: Vec<usize>,
    from_dual: Vec<usize>,
}

impl CorootMap {
    pub fn new(rs: &RootSystem) -> CorootMap {
        let dual = rs.dual();
        let to_dual: Vec<usize> = rs
            .roots()
            .iter()
            .map(|a| {
                dual.root_index(&rs.coroot_dual_coords(&a.0))
                    .expect("coroot is a root of the dual system")
            })
            .collect();
        let mut from_dual = vec![0; to_dual.len()];
        for (i, &j) in to_dual.iter().enumerate() {
            from_dual[j] = i;
        }
        CorootMap { dual, to_dual, from_dual }
    }

    pub fn dual(&self) -> &RootSystem {
        &self.dual
    }

    fn set_to_dual(&self, s: &HashSet<usize>) -> HashSet<usize> {
        s.iter().map(|&i| self.to_dual[i]).collect()
    }
}

/// `S^∨` is a root subsystem of `Σ^∨`.
pub fn is_coroot_subsystem(rs: &RootSystem, s: &[Root]) -> Result<bool> {
    let set = index_set(rs, s)?;
    let map = CorootMap::new(rs);
    Ok(check_subsystem(&map.dual, &map.set_to_dual(&set)))
}

/// `span(S) ∩ Σ`.
pub fn parabolic_closure(rs: &RootSystem, s: &[Root]) -> Result<Subsystem> {
    index_set(rs, s)?;
    let span: Vec<Vec<Q>> = linalg::canonical_row_space(&linalg::to_q(
        &s.iter().map(|a| a.0.clone()).collect::<Vec<_>>(),
    ));
    let idx: Vec<usize> = rs
        .roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| {
            !span.is_empty() && linalg::in_span(&span, &a.0.iter().map(|&x| q(x)).collect::<Vec<_>>())
        })
        .map(|(i, _)| i)
        .collect();
    let mut sub = Subsystem::from_indices(rs, idx);
    sub.label = Some(subsystem_label(rs, &sub));
    sub.closed_in = Some(ClosedIn::Both);
    Ok(sub)
}

/// Isomorphism type of a negation-closed root set that forms a root system,
/// as a canonical type string (`""` for the empty system). `B2` and `C2` are
/// both reported as `B2`, `B1`/`C1` as `A1`.
pub fn subsystem_label(rs: &RootSystem, s: &Subsystem) -> String {
    let set: HashSet<usize> = s.indices.iter().copied().collect();
    let in_s = |v: &[i64]| rs.root_index(v).is_some_and(|i| set.contains(&i));
    let indiv: Vec<&Root> = s
        .roots
        .iter()
        .filter(|a| {
            a.0.iter().any(|x| x % 2 != 0) || !in_s(&a.0.iter().map(|x| x / 2).collect::<Vec<_>>())
        })
        .collect();
    let pos: Vec<&Root> = indiv.iter().copied().filter(|a| a.is_positive()).collect();
    let pos_set: HashSet<&Vec<i64>> = pos.iter().map(|a| &a.0).collect();
    let simple: Vec<&Root> = pos
        .iter()
        .copied()
        .filter(|a| {
            !pos.iter().any(|b| {
                let d: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect();
                pos_set.contains(&d)
            })
        })
        .collect();
    // components of the simple system
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for st in 0..n {
        if comp[st] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp[st] = id;
        let mut stack = vec![st];
        let mut nodes = vec![];
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for w in 0..n {
                if comp[w] == usize::MAX && !rs.inner(&simple[v].0, &simple[w].0).is_zero() {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        comps.push(nodes);
    }
    let mut specs = Vec::new();
    for nodes in &comps {
        let k = nodes.len();
        let members: Vec<&Root> = pos
            .iter()
            .copied()
            .filter(|a| nodes.iter().any(|&v| !rs.inner(&a.0, &simple[v].0).is_zero()))
            .collect();
        let n_pos = members.len();
        let doubled = members
            .iter()
            .any(|a| in_s(&a.0.iter().map(|x| 2 * x).collect::<Vec<_>>()));
        let lens: Vec<Q> = nodes.iter().map(|&v| rs.len2(&simple[v].0)).collect();
        let min = lens.iter().min().cloned().expect("nonempty");
        let max = lens.iter().max().cloned().expect("nonempty");
        let n_short = lens.iter().filter(|l| **l == min).count();
        let family = if doubled {
            Family::BC
        } else if min == max {
            if n_pos == k * (k + 1) / 2 {
                Family::A
            } else if n_pos == k * (k - 1) {
                Family::D
            } else {
                Family::E
            }
        } else if max == &min * q(3) {
            Family::G
        } else if k == 4 && n_pos == 24 {
            Family::F
        } else if k == 2 || n_short == 1 {
            Family::B
        } else {
            Family::C
        };
        specs.push(ComponentSpec { family, rank: k });
    }
    if specs.is_empty() {
        return String::new();
    }
    RootSystemSpec::new(specs).expect("nonempty").to_string()
}

/// The extended (affine) diagram of one irreducible component of a simple
/// system: the simple roots followed by the lowest root `−θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDiagram {
    /// Simple roots of the component, then `−θ`, in ambient coordinates.
    pub nodes: Vec<Root>,
    /// `bonds[i][j] = nodes[j](nodes[i]^∨)`.
    pub bonds: Vec<Vec<i64>>,
    /// Coefficients of `θ` in the simple roots; the affine node has mark 1.
    pub marks: Vec<u64>,
}

impl AffineDiagram {
    fn new(rs: &RootSystem, simple: &[Root]) -> AffineDiagram {
        let generated = reflection_closure(rs, simple);
        let simple_q: Vec<Vec<Q>> =
            simple.iter().map(|a| a.0.iter().map(|&x| q(x)).collect()).collect();
        let mut best: Option<(Q, Root, Vec<Q>)> = None;
        for &i in &generated {
            let a = &rs.roots()[i];
            let target: Vec<Q> = a.0.iter().map(|&x| q(x)).collect();
            let c = linalg::solve_combination(&simple_q, &target).expect("root in span");
            let h: Q = c.iter().sum();
            if best.as_ref().is_none_or(|(bh, _, _)| h > *bh) {
                best = Some((h, a.clone(), c));
            }
        }
        let (_, theta, coeffs) = best.expect("nonempty component");
        let mut nodes: Vec<Root> = simple.to_vec();
        nodes.push(theta.neg());
        let bonds = nodes
            .iter()
            .map(|a| nodes.iter().map(|b| rs.root_pairing(&b.0, &a.0)).collect())
            .collect();
        let mut marks: Vec<u64> = coeffs
            .iter()
            .map(|c| c.to_integer().try_into().expect("positive mark"))
            .collect();
        marks.push(1);
        AffineDiagram { nodes, bonds, marks }
    }

    /// Reproduces `θ` from the marks (the affine node excluded).
    pub fn highest_root(&self) -> Vec<i64> {
        let r = self.nodes[0].0.len();
        let mut v = vec![0; r];
        for (a, m) in self.nodes.iter().zip(&self.marks).take(self.nodes.len() - 1) {
            for (x, y) in v.iter_mut().zip(&a.0) {
                *x += *m as i64 * y;
            }
        }
        v
    }
}

/// Root indices of `W(Π')·Π'` for a set of roots `Π'`.
fn reflection_closure(rs: &RootSystem, gens: &[Root]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    let mut queue: Vec<usize> = Vec::new();
    for g in gens {
        for v in [g.clone(), g.neg()] {
            let i = rs.root_index(&v.0).expect("generator is a root");
            if set.insert(i) {
                queue.push(i);
            }
        }
    }
    while let Some(i) = queue.pop() {
        for g in gens {
            let img = reflect(rs, &rs.roots()[i].0, &g.0);
            let j = rs.root_index(&img).expect("reflection of a root is a root");
            if set.insert(j) {
                queue.push(j);
            }
        }
    }
    set.into_iter().collect()
}

/// Smallest sum-closed superset inside `Σ`.
fn sum_closure(rs: &RootSystem, idx: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = idx.iter().copied().collect();
    loop {
        let cur: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &i in &cur {
            for &j in &cur {
                if let Some(k) = sum_root(rs, &rs.roots()[i].0, &rs.roots()[j].0) {
                    grew |= set.insert(k);
                }
            }
        }
        if !grew {
            return set.into_iter().collect();
        }
    }
}

/// Splits a simple system into irreducible components.
fn simple_components(rs: &RootSystem, simple: &[Root]) -> Vec<Vec<Root>> {
    let n = simple.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut nodes = Vec::new();
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for w in 0..n {
                if !seen[w] && !rs.inner(&simple[v].0, &simple[w].0).is_zero() {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        out.push(nodes.into_iter().map(|i| simple[i].clone()).collect());
    }
    out
}

/// Extended diagrams of the irreducible components of the indivisible
/// subsystem of `rs`.
pub fn affine_diagrams(rs: &RootSystem) -> Vec<AffineDiagram> {
    simple_components(rs, &rs.simple_roots())
        .iter()
        .map(|c| AffineDiagram::new(rs, c))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Iterated removal of nodes from extended diagrams.
    Bds,
    /// Exhaustive search over negation-closed subsets (rank ≤ 3).
    BruteForce,
}

/// Largest rank accepted by [`Method::BruteForce`].
pub const BRUTE_FORCE_MAX_RANK: usize = 3;
/// Largest rank for which conjugacy is decided by explicit Weyl orbits.
pub const ORBIT_DEDUP_MAX_RANK: usize = 4;

/// Deduplicates subsystems up to `W`-conjugacy.
struct Conjugacy {
    /// For each group element, the induced permutation of root indices.
    perms: Option<Vec<Vec<usize>>>,
}

impl Conjugacy {
    fn new(rs: &RootSystem) -> Result<Conjugacy> {
        if rs.rank() > ORBIT_DEDUP_MAX_RANK {
            return Ok(Conjugacy { perms: None });
        }
        let w: WeylGroup = rs.weyl_group()?;
        let perms = w
            .elements()
            .iter()
            .map(|x| {
                rs.roots()
                    .iter()
                    .map(|a| rs.root_index(&rs.act_root(x, a).0).expect("W permutes roots"))
                    .collect()
            })
            .collect();
        Ok(Conjugacy { perms: Some(perms) })
    }

    /// Canonical representative of the orbit (exact for small rank) together
    /// with the deduplication key.
    fn canonical(&self, rs: &RootSystem, idx: &[usize]) -> (Vec<usize>, String) {
        match &self.perms {
            Some(perms) => {
                let best = perms
                    .iter()
                    .map(|p| {
                        let mut v: Vec<usize> = idx.iter().map(|&i| p[i]).collect();
                        v.sort_unstable();
                        v
                    })
                    .min()
                    .expect("W is nonempty");
                let key = format!("{best:?}");
                (best, key)
            }
            None => {
                let sub = Subsystem::from_indices(rs, idx.to_vec());
                let label = subsystem_label(rs, &sub);
                let mut divs: Vec<String> = coroot_quotient(rs, &sub)
                    .map(|d| d.iter().map(ToString::to_string).collect())
                    .unwrap_or_default();
                divs.sort();
                (sub.indices, format!("{label}|{divs:?}"))
            }
        }
    }
}

/// The other reduced form of a simple-system component in a non-reduced
/// ambient system: every `α` with `2α ∈ Σ` becomes `2α` and every `α` with
/// `α/2 ∈ Σ` becomes `α/2`. `None` when the component has a single form.
fn toggle_form(rs: &RootSystem, comp: &[Root]) -> Option<Vec<Root>> {
    let mut changed = false;
    let out = comp
        .iter()
        .map(|a| {
            let double: Vec<i64> = a.0.iter().map(|x| 2 * x).collect();
            if rs.is_root(&double) {
                changed = true;
                return Root(double);
            }
            if a.0.iter().all(|x| x % 2 == 0) {
                let half: Vec<i64> = a.0.iter().map(|x| x / 2).collect();
                if rs.is_root(&half) {
                    changed = true;
                    return Root(half);
                }
            }
            a.clone()
        })
        .collect();
    changed.then_some(out)
}

/// Iterated node removal on one side (`rs` itself). Results are sum-closed
/// root sets, deduplicated by `key`.
fn bds_one_side(rs: &RootSystem, conj: &Conjugacy) -> Result<Vec<Vec<usize>>> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut queue: Vec<Vec<Root>> = Vec::new();
    let mut queue_seen: HashSet<String> = HashSet::new();
    let start = rs.simple_roots();
    queue_seen.insert(conj.canonical(rs, &reflection_closure(rs, &start)).1);
    queue.push(start);
    let mut head = 0;
    while head < queue.len() {
        let simple = queue[head].clone();
        head += 1;
        let generated = reflection_closure(rs, &simple);
        let closed = sum_closure(rs, &generated);
        let set: HashSet<usize> = closed.iter().copied().collect();
        if is_root_system_in_span(rs, &set) {
            let (rep, key) = conj.canonical(rs, &closed);
            if seen.insert(key) {
                found.push(rep);
            }
        }
        let comps = simple_components(rs, &simple);
        for (ci, comp) in comps.iter().enumerate() {
            let others = || -> Vec<Root> {
                comps
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != ci)
                    .flat_map(|(_, c)| c.iter().cloned())
                    .collect()
            };
            let mut candidates = Vec::new();
            if let Some(toggled) = toggle_form(rs, comp) {
                let mut next = others();
                next.extend(toggled);
                candidates.push(next);
            }
            let diagram = AffineDiagram::new(rs, comp);
            for drop in 0..diagram.nodes.len() {
                let mut next = others();
                next.extend(
                    diagram
                        .nodes
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != drop)
                        .map(|(_, a)| a.clone()),
                );
                candidates.push(next);
            }
            for next in candidates {
                let idx = reflection_closure(rs, &next);
                let (_, key) = conj.canonical(rs, &idx);
                if queue_seen.insert(key) {
                    queue.push(next);
                }
            }
        }
    }
    Ok(found)
}

fn finalize(rs: &RootSystem, map: &CorootMap, idx: Vec<usize>) -> Subsystem {
    let set: HashSet<usize> = idx.iter().copied().collect();
    let sigma = check_subsystem(rs, &set);
    let dual = check_subsystem(&map.dual, &map.set_to_dual(&set));
    let mut sub = Subsystem::from_indices(rs, idx);
    sub.label = Some(subsystem_label(rs, &sub));
    sub.closed_in = ClosedIn::from_flags(sigma, dual);
    sub
}

fn sort_canonically(subs: &mut [Subsystem]) {
    subs.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.label.cmp(&b.label))
            .then_with(|| a.closed_in.cmp(&b.closed_in))
            .then_with(|| a.indices.cmp(&b.indices))
    });
}

fn full_rank_bds(rs: &RootSystem) -> Result<Vec<Subsystem>> {
    let conj = Conjugacy::new(rs)?;
    let map = CorootMap::new(rs);
    let dual_conj = Conjugacy::new(&map.dual)?;
    let mut keys: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    let sigma_side = bds_one_side(rs, &conj)?;
    let dual_side: Vec<Vec<usize>> = bds_one_side(&map.dual, &dual_conj)?
        .into_iter()
        .map(|d| d.into_iter().map(|j| map.from_dual[j]).collect())
        .collect();
    for idx in sigma_side.into_iter().chain(dual_side) {
        let (rep, key) = conj.canonical(rs, &idx);
        if keys.insert(key) {
            out.push(finalize(rs, &map, rep));
        }
    }
    sort_canonically(&mut out);
    Ok(out)
}

fn full_rank_brute_force(rs: &RootSystem) -> Result<Vec<Subsystem>> {
    if rs.rank() > BRUTE_FORCE_MAX_RANK {
        return Err(Error::capacity(format!(
            "brute-force subsystem search is limited to rank {BRUTE_FORCE_MAX_RANK}, {} has rank {}",
            rs.spec(),
            rs.rank()
        )));
    }
    let conj = Conjugacy::new(rs)?;
    let map = CorootMap::new(rs);
    let npos = rs.positive_roots().len();
    let mut keys = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << npos) {
        let mut idx = Vec::new();
        for i in 0..npos {
            if mask & (1 << i) != 0 {
                idx.push(i);
                idx.push(i + npos);
            }
        }
        let rows: Vec<Vec<i64>> = (0..npos)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| rs.roots()[i].0.clone())
            .collect();
        if linalg::rank_int(&rows) != rs.rank() {
            continue;
        }
        let set: HashSet<usize> = idx.iter().copied().collect();
        let ok = check_subsystem(rs, &set) || check_subsystem(&map.dual, &map.set_to_dual(&set));
        if !ok {
            continue;
        }
        let (rep, key) = conj.canonical(rs, &idx);
        if keys.insert(key) {
            out.push(finalize(rs, &map, rep));
        }
    }
    sort_canonically(&mut out);
    Ok(out)
}

type CacheKey = String;

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Vec<Subsystem>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Vec<Subsystem>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cache_key(rs: &RootSystem) -> CacheKey {
    let gram: Vec<String> = rs.gram().iter().flatten().map(ToString::to_string).collect();
    format!("{}|{}", rs.spec(), gram.join(","))
}

/// Full-rank subsystems of `rs` up to Weyl conjugacy, `rs` itself included.
///
/// The affine-diagram route runs on `Σ` and on `Σ^∨` (pulled back through
/// the coroot bijection). In non-reduced systems every component of an
/// intermediate simple system may also switch to its other reduced form
/// (`α ↔ 2α`); divisible roots are re-adjoined by sum-closure.
pub fn full_rank_subsystems(rs: &RootSystem, method: Method) -> Result<Arc<Vec<Subsystem>>> {
    match method {
        Method::BruteForce => Ok(Arc::new(full_rank_brute_force(rs)?)),
        Method::Bds => {
            let key = cache_key(rs);
            if let Some(hit) = cache().lock().expect("cache lock").get(&key) {
                return Ok(hit.clone());
            }
            let computed = Arc::new(full_rank_bds(rs)?);
            let mut guard = cache().lock().expect("cache lock");
            Ok(guard.entry(key).or_insert(computed).clone())
        }
    }
}

/// Elementary divisors of `ℤ[Σ^∨] / ℤ[S^∨]`.
pub fn coroot_quotient(rs: &RootSystem, s: &Subsystem) -> Result<Vec<BigInt>> {
    let r = rs.rank();
    let gens: Vec<Vec<Q>> = s
        .roots
        .iter()
        .map(|a| rs.coroot_dual_coords(&a.0).into_iter().map(q).collect())
        .collect();
    let sub = Lattice::from_generators(&gens, r)?;
    if sub.rank() != r {
        return Err(Error::input(format!(
            "subsystem has rank {}, expected full rank {r}",
            sub.rank()
        )));
    }
    let full = Lattice::new(
        (0..r)
            .map(|i| (0..r).map(|j| q(i64::from(i == j))).collect())
            .collect(),
        r,
    )?;
    quotient_divisors(&sub, &full)
}

/// `N(S) = lcm` of the elementary divisors of `ℤ[Σ^∨]/ℤ[S^∨]`.
pub fn n_of_subsystem(rs: &RootSystem, s: &Subsystem) -> Result<BigInt> {
    Ok(lcm_all(&coroot_quotient(rs, s)?))
}

/// `N_Σ = lcm` of `N(S)` over the full-rank subsystems.
pub fn n_sigma(rs: &RootSystem) -> Result<BigInt> {
    let subs = full_rank_subsystems(rs, Method::Bds)?;
    let ns = subs.iter().map(|s| n_of_subsystem(rs, s)).collect::<Result<Vec<_>>>()?;
    Ok(lcm_all(&ns))
}
