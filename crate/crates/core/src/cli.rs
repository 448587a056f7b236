//! Batch front end. Every command prints one JSON document; rationals are
//! strings `"p"` or `"p/q"`, keys keep a fixed order.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, IntegerMatrix};
use crate::negativity::{
    certify_exponent, check_class_negativity, check_negativity, rank_one_bound, verify_fundamental_lemma,
    FundamentalLemmaReport, Mode, NegativityQuery, NegativityVerdict, Subspaces,
};
use crate::params::{
    c_lambda, edge_with, equivalence_class_with, gallery_class, integral_roots, MoveRule, SubspaceBasis,
};
use crate::rational::{fmt_q, parse_q_vec, Q};
use crate::rootsys::{Parameter, Root, RootSystem, RootSystemSpec};
use crate::subsystems::{coroot_quotient, full_rank_subsystems, n_sigma, Method, Subsystem};

#[derive(Parser, Debug)]
#[command(name = "rootint", version, about = "Exact root-system combinatorics")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root datum of a type.
    Build(TypeArg),
    /// N_Σ and the full-rank subsystems behind it.
    Nsigma {
        #[command(flatten)]
        ty: TypeArg,
        /// Directory holding the N_Σ table `nsigma.json`.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Full-rank subsystems up to conjugacy.
    Subsystems {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Bds)]
        method: MethodArg,
    },
    /// Equivalence class of a parameter.
    Class {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 1)]
        denominator: u64,
        /// Test only the real part in the move condition.
        #[arg(long, value_enum, default_value_t = MoveRuleArg::Complex)]
        move_rule: MoveRuleArg,
    },
    /// Gallery class of the identity chamber.
    Gallery(ParamArgs),
    /// Integral roots and edge.
    Edge {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 1)]
        denominator: u64,
    },
    /// Integral-negativity verdict for a parameter and its class.
    Negativity {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        m: ModeArgs,
        #[arg(long, default_value_t = 1)]
        denominator: u64,
    },
    /// Fundamental-lemma report.
    Fundamental {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        m: ModeArgs,
    },
    /// Exponent certificate.
    Exponent {
        /// Spherical roots as rows, e.g. "1,0;0,1" (empty for none).
        #[arg(long, allow_hyphen_values = true)]
        spherical: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        rhoq: String,
        /// Imaginary part of μ; zero when omitted.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        n: u64,
        /// Expected dimension of the cone edge.
        #[arg(long)]
        edge_dim: Option<usize>,
    },
    /// The constant 18d².
    RankOneBound {
        /// Type of the Levi factor; omit for the abelian case.
        #[arg(long = "type", default_value = "")]
        ty: String,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// Rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Property sweeps with a pass/fail summary.
    Verify {
        /// Types to sweep; defaults to a built-in list.
        #[arg(long = "type")]
        types: Vec<String>,
    },
}

#[derive(Args, Debug)]
struct TypeArg {
    #[arg(long = "type")]
    ty: String,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long = "type")]
    ty: String,
    /// Real part in fundamental-weight coordinates.
    #[arg(long, allow_hyphen_values = true)]
    re: String,
    /// Imaginary part; zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    im: Option<String>,
}

#[derive(Args, Debug)]
struct ModeArgs {
    #[arg(long)]
    mode: String,
    /// Basis of 𝔞_λ in coweight coordinates ("1,0;0,1"). Weak and integral
    /// mode default to the whole space.
    #[arg(long, allow_hyphen_values = true)]
    subspace: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Bds,
    BruteForce,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MoveRuleArg {
    Complex,
    RealPart,
}

/// Runs one invocation: `(exit code, stdout, stderr)`. Exit codes are 0 on
/// success, 2 on input or capacity errors and 3 on internal errors.
pub fn run<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string(), String::new()),
                _ => (2, String::new(), one_line(&e.to_string())),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => {
            let mut out = if cli.pretty {
                serde_json::to_string_pretty(&v).expect("serializable")
            } else {
                serde_json::to_string(&v).expect("serializable")
            };
            out.push('\n');
            (0, out, String::new())
        }
        Err(e) => {
            let code = match e {
                Error::Input(_) | Error::Capacity(_) => 2,
                Error::Internal(_) => 3,
            };
            (code, String::new(), one_line(&e.to_string()))
        }
    }
}

fn one_line(s: &str) -> String {
    let line = s
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("error")
        .trim_start_matches("error: ");
    format!("error: {line}\n")
}

fn dispatch(cmd: Command) -> Result<Value> {
    match cmd {
        Command::Build(t) => cmd_build(&t.ty),
        Command::Nsigma { ty, cache_dir } => cmd_nsigma(&ty.ty, cache_dir.as_deref()),
        Command::Subsystems { ty, method } => cmd_subsystems(&ty.ty, method),
        Command::Class { p, denominator, move_rule } => cmd_class(&p, denominator, move_rule),
        Command::Gallery(p) => cmd_gallery(&p),
        Command::Edge { p, denominator } => cmd_edge(&p, denominator),
        Command::Negativity { p, m, denominator } => cmd_negativity(&p, &m, denominator),
        Command::Fundamental { p, m } => cmd_fundamental(&p, &m),
        Command::Exponent { spherical, mu, rhoq, nu, n, edge_dim } => {
            cmd_exponent(&spherical, &mu, &rhoq, nu.as_deref(), n, edge_dim)
        }
        Command::RankOneBound { ty } => cmd_rank_one_bound(&ty),
        Command::Snf { matrix } => cmd_snf(&matrix),
        Command::Verify { types } => cmd_verify(&types),
    }
}

fn qs(v: &[Q]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(fmt_q(x))).collect())
}

fn qmat(m: &[Vec<Q>]) -> Value {
    Value::Array(m.iter().map(|r| qs(r)).collect())
}

fn ints(v: &[i64]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn bigs(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn roots(v: &[Root]) -> Value {
    Value::Array(v.iter().map(|r| ints(&r.0)).collect())
}

fn param(p: &Parameter) -> Value {
    json!({ "re": qs(&p.re), "im": qs(&p.im) })
}

fn words(w: &[usize]) -> Value {
    Value::Array(w.iter().map(|&i| json!(i + 1)).collect())
}

fn opt_bool(b: Option<bool>) -> Value {
    b.map_or(Value::Null, Value::Bool)
}

fn parse_matrix_rows(s: &str) -> Result<Vec<Vec<Q>>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_q_vec).collect()
}

fn load_system(ty: &str) -> Result<RootSystem> {
    RootSystem::build(&ty.parse()?)
}

fn load_param(rs: &RootSystem, p: &ParamArgs) -> Result<Parameter> {
    let re = parse_q_vec(&p.re)?;
    let im = match &p.im {
        Some(s) => parse_q_vec(s)?,
        None => vec![Q::from_integer(0.into()); re.len()],
    };
    let lambda = Parameter::new(re, im)?;
    rs.check_parameter(&lambda)?;
    Ok(lambda)
}

fn subspaces_for(rs: &RootSystem, m: &ModeArgs) -> Result<(Mode, Subspaces)> {
    let mode: Mode = m.mode.parse()?;
    let subspaces = match (mode, &m.subspace) {
        (Mode::Strict, Some(_)) => return Err(Error::input("strict mode takes no --subspace")),
        (Mode::Strict, None) => Subspaces::None,
        (_, None) => Subspaces::Uniform(SubspaceBasis::full(rs.rank())),
        (_, Some(s)) => Subspaces::Uniform(SubspaceBasis::new(parse_matrix_rows(s)?, rs.rank())?),
    };
    Ok((mode, subspaces))
}

fn cmd_build(ty: &str) -> Result<Value> {
    let rs = load_system(ty)?;
    let cartan: Vec<Value> = rs.cartan().iter().map(|r| ints(r)).collect();
    Ok(json!({
        "type": rs.spec().to_string(),
        "rank": rs.rank(),
        "cartan": cartan,
        "gram": qmat(rs.gram()),
        "simple_roots": roots(&rs.simple_roots()),
        "positive_roots": roots(rs.positive_roots()),
        "root_count": rs.roots().len(),
        "weyl_order": rs.weyl_order().to_string(),
        "rho": param(&rs.rho()),
        "dual_type": rs.spec().dual().to_string(),
    }))
}

fn subsystem_json(rs: &RootSystem, s: &Subsystem) -> Result<Value> {
    let divisors = coroot_quotient(rs, s)?;
    let n = crate::lattice::lcm_all(&divisors);
    let pos: Vec<Root> = s.positive_roots().cloned().collect();
    Ok(json!({
        "label": s.label.clone().unwrap_or_default(),
        "n": n.to_string(),
        "divisors": bigs(&divisors),
        "closed_in": s.closed_in.map_or("", |c| c.as_str()),
        "positive_roots": roots(&pos),
    }))
}

fn nsigma_json(rs: &RootSystem) -> Result<Value> {
    let subs = full_rank_subsystems(rs, Method::Bds)?;
    let list = subs.iter().map(|s| subsystem_json(rs, s)).collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "type": rs.spec().to_string(),
        "n_sigma": n_sigma(rs)?.to_string(),
        "subsystems": list,
    }))
}

const CACHE_FILE: &str = "nsigma.json";

fn read_cache(dir: &Path) -> Result<Map<String, Value>> {
    let path = dir.join(CACHE_FILE);
    match fs::read_to_string(&path) {
        Ok(text) => match serde_json::from_str(&text) {
            Ok(Value::Object(m)) => Ok(m),
            _ => Err(Error::input(format!("cache file {} is not a JSON object", path.display()))),
        },
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Map::new()),
        Err(e) => Err(Error::input(format!("cannot read {}: {e}", path.display()))),
    }
}

/// Writes through a temporary file and a rename so concurrent writers never
/// leave a torn file; the entries are deterministic, so last writer wins.
fn write_cache(dir: &Path, table: &Map<String, Value>) -> Result<()> {
    let io = |e: std::io::Error| Error::input(format!("cannot write cache in {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let tmp = dir.join(format!("{CACHE_FILE}.{}.tmp", std::process::id()));
    let text = serde_json::to_string_pretty(&Value::Object(table.clone())).expect("serializable");
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, dir.join(CACHE_FILE)).map_err(io)
}

fn cmd_nsigma(ty: &str, cache_dir: Option<&Path>) -> Result<Value> {
    let spec: RootSystemSpec = ty.parse()?;
    let key = spec.to_string();
    if let Some(dir) = cache_dir {
        let mut table = read_cache(dir)?;
        if let Some(hit) = table.get(&key) {
            return Ok(hit.clone());
        }
        let value = nsigma_json(&RootSystem::build(&spec)?)?;
        table.insert(key, value.clone());
        write_cache(dir, &table)?;
        return Ok(value);
    }
    nsigma_json(&RootSystem::build(&spec)?)
}

fn cmd_subsystems(ty: &str, method: MethodArg) -> Result<Value> {
    let rs = load_system(ty)?;
    let m = match method {
        MethodArg::Bds => Method::Bds,
        MethodArg::BruteForce => Method::BruteForce,
    };
    let subs = full_rank_subsystems(&rs, m)?;
    let list = subs.iter().map(|s| subsystem_json(&rs, s)).collect::<Result<Vec<_>>>()?;
    Ok(json!({
        "type": rs.spec().to_string(),
        "method": match method { MethodArg::Bds => "bds", MethodArg::BruteForce => "brute-force" },
        "subsystems": list,
    }))
}

fn cmd_class(p: &ParamArgs, n: u64, rule: MoveRuleArg) -> Result<Value> {
    let rs = load_system(&p.ty)?;
    let lambda = load_param(&rs, p)?;
    let rule = match rule {
        MoveRuleArg::Complex => MoveRule::Complex,
        MoveRuleArg::RealPart => MoveRule::RealPart,
    };
    let class = equivalence_class_with(&rs, &lambda, n, rule)?;
    let members: Vec<Value> = class
        .members
        .iter()
        .map(|m| json!({ "word": words(&m.word), "re": qs(&m.mu.re), "im": qs(&m.mu.im) }))
        .collect();
    let gallery = gallery_class(&rs, &lambda)?;
    let chambers = c_lambda(&rs, &lambda)?;
    let edge = edge_with(&rs, &lambda, n)?;
    Ok(json!({
        "type": rs.spec().to_string(),
        "lambda": param(&lambda),
        "denominator": n.to_string(),
        "move_rule": rule.as_str(),
        "class_size": class.len(),
        "members": members,
        "gallery_class_size": gallery.len(),
        "c_lambda_chambers": chambers.len(),
        "edge": qmat(edge.vectors()),
    }))
}

fn cmd_gallery(p: &ParamArgs) -> Result<Value> {
    let rs = load_system(&p.ty)?;
    let lambda = load_param(&rs, p)?;
    let gallery = gallery_class(&rs, &lambda)?;
    let list: Vec<Value> = (0..gallery.len()).map(|i| words(gallery.word(i))).collect();
    Ok(json!({
        "type": rs.spec().to_string(),
        "lambda": param(&lambda),
        "size": gallery.len(),
        "chambers": list,
    }))
}

fn cmd_edge(p: &ParamArgs, n: u64) -> Result<Value> {
    let rs = load_system(&p.ty)?;
    let lambda = load_param(&rs, p)?;
    let integral = integral_roots(&rs, &lambda, n)?;
    let pos: Vec<Root> = integral.iter().filter(|a| a.is_positive()).cloned().collect();
    let edge = edge_with(&rs, &lambda, n)?;
    Ok(json!({
        "type": rs.spec().to_string(),
        "lambda": param(&lambda),
        "denominator": n.to_string(),
        "integral_positive_roots": roots(&pos),
        "edge_dim": edge.dim(),
        "edge": qmat(edge.vectors()),
    }))
}

fn verdict_json(v: &NegativityVerdict) -> Value {
    json!({
        "feasible": v.feasible,
        "span_basis": qmat(&v.span_basis),
        "witness_omega": v.witness_omega.as_deref().map_or(Value::Null, qs),
        "omega": v.omega.as_deref().map_or(Value::Null, qs),
        "values": v.values.as_deref().map_or(Value::Null, qs),
        "tight_generators": v.tight_generators.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        "strict_generators": v.strict_generators.iter().map(|&i| i + 1).collect::<Vec<_>>(),
        "im_vanishes_on_subspace": opt_bool(v.im_vanishes_on_subspace),
    })
}

fn cmd_negativity(p: &ParamArgs, m: &ModeArgs, n: u64) -> Result<Value> {
    let rs = load_system(&p.ty)?;
    let lambda = load_param(&rs, p)?;
    let (mode, subspaces) = subspaces_for(&rs, m)?;
    let a_lambda = match &subspaces {
        Subspaces::Uniform(a) => Some(a.clone()),
        _ => None,
    };
    let query = NegativityQuery { lambda: lambda.clone(), mode, a_lambda, denominator: n };
    let verdict = check_negativity(&rs, &query)?;
    let class = check_class_negativity(&rs, &lambda, mode, &subspaces, n)?;
    let failing: Vec<Value> = class
        .class
        .members
        .iter()
        .zip(&class.verdicts)
        .filter(|(_, v)| !v.feasible)
        .map(|(m, _)| param(&m.mu))
        .collect();
    Ok(json!({
        "type": rs.spec().to_string(),
        "lambda": param(&lambda),
        "mode": mode.as_str(),
        "denominator": n.to_string(),
        "verdict": verdict_json(&verdict),
        "class": {
            "size": class.class.len(),
            "holds": class.holds,
            "failing_members": failing,
        },
    }))
}

fn report_json(rs: &RootSystem, lambda: &Parameter, r: &FundamentalLemmaReport) -> Result<Value> {
    let containing = match &r.containing_member {
        None => Value::Null,
        Some(c) => json!({
            "word": words(&c.word),
            "mu": param(&c.mu),
            "subspace": qmat(c.subspace.vectors()),
        }),
    };
    let integral_pos: Vec<Root> = r.integral_roots.positive_roots().cloned().collect();
    let closure_pos: Vec<Root> = r.parabolic_closure.positive_roots().cloned().collect();
    Ok(json!({
        "type": rs.spec().to_string(),
        "lambda": param(lambda),
        "mode": r.mode.as_str(),
        "hypothesis": r.hypothesis,
        "integral_positive_roots": roots(&integral_pos),
        "edge_basis": qmat(r.edge_basis.vectors()),
        "containing_member": containing,
        "re_lambda_on_edge_zero": r.re_lambda_on_edge_zero,
        "parabolic_closure": {
            "label": r.parabolic_closure.label.clone().unwrap_or_default(),
            "positive_roots": roots(&closure_pos),
        },
        "lattice_divisors": bigs(&r.lattice_divisors),
        "n_lattice": r.n_lattice.to_string(),
        "integrality_ok": r.integrality_ok,
        "n_integral": r.n_integral.as_ref().map_or(Value::Null, |n| Value::String(n.to_string())),
        "n_sigma": n_sigma(rs)?.to_string(),
        "im_lambda_on_edge_zero": opt_bool(r.im_lambda_on_edge_zero),
        "lambda_real": opt_bool(r.lambda_real),
        "edge_trivial": opt_bool(r.edge_trivial),
    }))
}

fn cmd_fundamental(p: &ParamArgs, m: &ModeArgs) -> Result<Value> {
    let rs = load_system(&p.ty)?;
    let lambda = load_param(&rs, p)?;
    let (mode, subspaces) = subspaces_for(&rs, m)?;
    let report = verify_fundamental_lemma(&rs, &lambda, mode, &subspaces)?;
    report_json(&rs, &lambda, &report)
}

fn cmd_exponent(
    spherical: &str,
    mu: &str,
    rhoq: &str,
    nu: Option<&str>,
    n: u64,
    edge_dim: Option<usize>,
) -> Result<Value> {
    let mu = parse_q_vec(mu)?;
    let rho = parse_q_vec(rhoq)?;
    let nu = match nu {
        Some(s) => parse_q_vec(s)?,
        None => vec![Q::from_integer(0.into()); mu.len()],
    };
    let s = parse_matrix_rows(spherical)?;
    let cert = certify_exponent(mu.len(), &s, edge_dim, &mu, &rho, &nu, n)?;
    Ok(json!({
        "rank": mu.len(),
        "n": n.to_string(),
        "coefficients": cert.coefficients.as_deref().map_or(Value::Null, qs),
        "nu": qs(&cert.nu),
        "edge_basis": qmat(&cert.edge_basis),
        "cone_generators": qmat(&cert.cone_generators),
        "generator_values": qs(&cert.generator_values),
        "lattice_ok": cert.lattice_ok,
        "ds1_ok": cert.ds1_ok,
        "ds2_ok": cert.ds2_ok,
    }))
}

fn cmd_rank_one_bound(ty: &str) -> Result<Value> {
    let spec = RootSystemSpec::parse_optional(ty)?;
    let bound = rank_one_bound(spec.as_ref())?;
    Ok(json!({
        "type": spec.map(|s| s.to_string()).unwrap_or_default(),
        "bound": bound.to_string(),
    }))
}

fn cmd_snf(matrix: &str) -> Result<Value> {
    let a: IntegerMatrix = matrix.parse()?;
    let snf = smith_normal_form(&a);
    let m = |x: &IntegerMatrix| -> Value {
        Value::Array(x.entries().iter().map(|r| bigs(r)).collect())
    };
    Ok(json!({
        "matrix": a.to_string(),
        "divisors": bigs(&snf.divisors),
        "u": m(&snf.u),
        "d": m(&snf.d),
        "v": m(&snf.v),
    }))
}

fn cmd_verify(types: &[String]) -> Result<Value> {
    let results = crate::verify::run_suite(types)?;
    let all = results.iter().all(|r| r.passed());
    let list: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "property": r.name,
                "type": r.root_type,
                "checked": r.checked,
                "failures": r.failures,
                "passed": r.passed(),
                "example": r.example.clone().map_or(Value::Null, Value::String),
            })
        })
        .collect();
    Ok(json!({ "passed": all, "properties": list }))
}
