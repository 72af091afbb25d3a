//! Command-line driver.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.
//! JSON reports go to `--out`; a short summary always goes to stdout.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::DEFAULT_SEED;
use crate::duality::{
    annihilator_ideal_check, canonical_e, dual_chain, group_like_unitaries, pontryagin, reconstruct_group,
    reflexivity_of, triple_dual_of, AnnihilatorCheck, CanonicalE, DualConstruction, DualResiduals, Reflexivity,
    TripleDual,
};
use crate::error::Error;
use crate::groups::{function_algebra, group_vn_algebra, twisted_hopf, FiniteGroup, GroupSpec};
use crate::hopf::{verify_hopf, HopfReport, HopfVNAlgebra};
use crate::json::F17;
use crate::linalg::STRUCT_TOL;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "hopfdual", version, about = "Duality of finite-dimensional Hopf-von Neumann algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hopf-von Neumann axioms of one algebra.
    Axioms {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the dual and optionally iterated duals.
    Dualize {
        #[command(flatten)]
        input: InputArgs,
        /// Also compute the double dual.
        #[arg(long)]
        double: bool,
        /// Also compute the triple dual and compare it with the dual.
        #[arg(long)]
        triple: bool,
        /// Decide reflexivity through the canonical map of the double dual.
        #[arg(long)]
        reflexive: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the spectrum group of C(G)^ with the character group of G.
    Pontryagin {
        /// Group spec as a file path or inline JSON.
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Walk through the twisted algebra on Z_n.
    TwistedDemo {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Dualize a list of algebras concurrently.
    Fleet {
        /// JSON array of group specs (file path or inline); defaults to the built-in fleet.
        #[arg(long)]
        spec: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Group spec as a file path or inline JSON, e.g. '{"type":"sym","n":3}'.
    #[arg(long)]
    pub spec: String,
    #[arg(long, value_enum, default_value_t = Side::Function)]
    pub side: Side,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
    /// Residual tolerance, in (0, 1e-3).
    #[arg(long, default_value_t = STRUCT_TOL)]
    pub tol: f64,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock time in the report (makes it non-reproducible).
    #[arg(long)]
    pub timing: bool,
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// C(G), pointwise functions.
    Function,
    /// W*(G), the group von Neumann algebra.
    Groupvn,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

/// Outcome of a subcommand: exit code 1 or 2 with a message.
#[derive(Debug)]
enum Failure {
    Check(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadSpec(_) | Error::NotAbelian => Failure::Input(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Axioms { input, common } => with_common(common, stdout, |c, w| cmd_axioms(input, c, w)),
        Command::Dualize { input, double, triple, reflexive, common } => with_common(common, stdout, |c, w| {
            let depth = if *triple {
                3
            } else if *double || *reflexive {
                2
            } else {
                1
            };
            cmd_dualize(input, depth, *reflexive || *double, *triple, c, w)
        }),
        Command::Pontryagin { spec, common } => with_common(common, stdout, |c, w| cmd_pontryagin(spec, c, w)),
        Command::TwistedDemo { n, common } => with_common(common, stdout, |c, w| cmd_twisted_demo(*n, c, w)),
        Command::Fleet { spec, common } => with_common(common, stdout, |c, w| cmd_fleet(spec.as_deref(), c, w)),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(f) => {
            let (Failure::Check(m) | Failure::Input(m)) = &f;
            eprintln!("error: {m}");
            f.code()
        }
    }
}

fn with_common(
    common: &CommonArgs,
    w: &mut dyn Write,
    f: impl FnOnce(&CommonArgs, &mut dyn Write) -> Outcome,
) -> Outcome {
    if !(common.tol > 0.0 && common.tol < 1e-3) {
        return Err(Failure::Input(format!("--tol must lie in (0, 1e-3), got {}", common.tol)));
    }
    f(common, w)
}

fn read_spec_text(spec: &str) -> std::result::Result<String, Failure> {
    let t = spec.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(spec.to_string())
    } else {
        std::fs::read_to_string(spec).map_err(|e| Failure::Input(format!("cannot read {spec}: {e}")))
    }
}

fn load_spec(spec: &str) -> std::result::Result<GroupSpec, Failure> {
    Ok(GroupSpec::parse(&read_spec_text(spec)?)?)
}

pub fn build_algebra(spec: &GroupSpec, side: Side, seed: u64) -> crate::Result<HopfVNAlgebra> {
    if let GroupSpec::Twisted { n } = spec {
        if *n == 0 {
            return Err(Error::BadSpec("twisted algebra needs n >= 1".into()));
        }
        return twisted_hopf(*n);
    }
    let g = spec.group()?;
    match side {
        Side::Function => Ok(function_algebra(&g)),
        Side::Groupvn => group_vn_algebra(&g, seed),
    }
}

fn emit<R: Serialize>(common: &CommonArgs, report: &R) -> std::result::Result<(), Failure> {
    if let Some(path) = &common.out {
        let mut text = serde_json::to_string_pretty(report).map_err(|e| Failure::Check(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn elapsed_ms(common: &CommonArgs, start: Instant) -> Option<F17> {
    common.timing.then(|| F17(start.elapsed().as_secs_f64() * 1e3))
}

#[derive(Serialize)]
struct InputReport {
    spec: GroupSpec,
    side: Side,
    label: String,
}

#[derive(Serialize)]
struct AxiomsReport {
    schema_version: u32,
    command: &'static str,
    input: InputReport,
    seed: u64,
    tol: F17,
    hopf: HopfReport,
    passes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_clock_ms: Option<F17>,
}

fn cmd_axioms(input: &InputArgs, common: &CommonArgs, w: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let spec = load_spec(&input.spec)?;
    let m = build_algebra(&spec, input.side, common.seed)?;
    let hopf = verify_hopf(&m)?;
    let passes = hopf.passes(common.tol);
    let report = AxiomsReport {
        schema_version: SCHEMA_VERSION,
        command: "axioms",
        input: InputReport { spec, side: input.side, label: m.label().to_string() },
        seed: common.seed,
        tol: F17(common.tol),
        hopf,
        passes,
        wall_clock_ms: elapsed_ms(common, start),
    };
    let _ = writeln!(
        w,
        "{}: dim {} blocks {:?} max residual {:.3e} -> {}",
        m.label(),
        m.dim(),
        m.signature(),
        report.hopf.max_residual(),
        if passes { "pass" } else { "FAIL" }
    );
    emit(common, &report)?;
    Ok(passes)
}

#[derive(Serialize)]
struct StageReport {
    source: String,
    source_signature: Vec<usize>,
    dual: String,
    dual_signature: Vec<usize>,
    ideal_dim: usize,
    irreducibles: usize,
    standard: usize,
    nonstandard: usize,
    selected: usize,
    residuals: DualResiduals,
}

impl StageReport {
    fn new(dc: &DualConstruction) -> Self {
        StageReport {
            source: dc.source.label().to_string(),
            source_signature: dc.source.signature(),
            dual: dc.dual.label().to_string(),
            dual_signature: dc.dual.signature(),
            ideal_dim: dc.ideal.dim(),
            irreducibles: dc.irreps.len(),
            standard: dc.standard.len(),
            nonstandard: dc.nonstandard.len(),
            selected: dc.selected.len(),
            residuals: dc.residuals.clone(),
        }
    }

    fn max_residual(&self) -> f64 {
        let r = &self.residuals;
        [
            r.phi_homomorphism,
            r.phi_star,
            r.ideal,
            r.delta_extension,
            r.kappa_invariance,
            r.kappa_extension,
            r.hopf.max_residual(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    /// `"spectrum"` for a commutative dual, `"group_like"` for a cocommutative one.
    pub method: &'static str,
    pub order: usize,
    pub abelian: bool,
    pub table: Vec<Vec<usize>>,
}

impl GroupReport {
    fn new(method: &'static str, g: &FiniteGroup) -> Self {
        GroupReport { method, order: g.order(), abelian: g.is_abelian(), table: g.table().to_vec() }
    }
}

/// The group behind a commutative or cocommutative algebra, if it is one.
fn group_of(m: &HopfVNAlgebra, seed: u64) -> Option<GroupReport> {
    if m.is_commutative() {
        reconstruct_group(m).ok().map(|g| GroupReport::new("spectrum", &g))
    } else if m.is_cocommutative(STRUCT_TOL) {
        group_like_unitaries(m, seed).ok().map(|g| GroupReport::new("group_like", &g))
    } else {
        None
    }
}

#[derive(Serialize)]
struct DualityReport {
    schema_version: u32,
    command: &'static str,
    input: InputReport,
    seed: u64,
    tol: F17,
    stages: Vec<StageReport>,
    annihilator: AnnihilatorCheck,
    dual_group: Option<GroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reflexivity: Option<Reflexivity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    triple: Option<TripleDual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical_e: Option<CanonicalE>,
    checks_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_clock_ms: Option<F17>,
}

fn cmd_dualize(
    input: &InputArgs,
    depth: usize,
    reflexive: bool,
    triple: bool,
    common: &CommonArgs,
    w: &mut dyn Write,
) -> Outcome {
    let start = Instant::now();
    let spec = load_spec(&input.spec)?;
    let m = build_algebra(&spec, input.side, common.seed)?;
    let label = m.label().to_string();
    let chain = dual_chain(Arc::new(m), depth, common.seed)?;
    let stages: Vec<StageReport> = chain.iter().map(StageReport::new).collect();
    let annihilator = annihilator_ideal_check(&chain[0])?;
    let dual_group = group_of(&chain[0].dual, common.seed);
    let reflexivity =
        if reflexive && chain.len() >= 2 { Some(reflexivity_of(&chain[0], &chain[1], common.seed)?) } else { None };
    let (triple, canonical_e) =
        if triple { (Some(triple_dual_of(&chain, common.seed)?), Some(canonical_e(&chain)?)) } else { (None, None) };

    let mut worst = stages.iter().map(StageReport::max_residual).fold(0.0, f64::max);
    if let Some(r) = &reflexivity {
        worst = worst.max(r.d.extension_residual);
    }
    if let Some(e) = &canonical_e {
        worst = worst.max(e.composition).max(e.e.report.max_residual()).max(e.d.report.max_residual());
    }
    let checks_pass = worst < common.tol;

    for s in &stages {
        let _ = writeln!(
            w,
            "{} {:?} -> {} {:?}  (dim M_*^0 = {}, standard {}/{})",
            s.source, s.source_signature, s.dual, s.dual_signature, s.ideal_dim, s.standard, s.irreducibles
        );
    }
    if let Some(g) = &dual_group {
        let _ = writeln!(w, "dual group ({}): order {}, abelian {}", g.method, g.order, g.abelian);
    }
    if let Some(r) = &reflexivity {
        let _ =
            writeln!(w, "reflexive: {} (D rank {}, residual {:.3e})", r.reflexive, r.d.rank, r.d.report.max_residual());
    }
    if let Some(t) = &triple {
        let _ = writeln!(w, "triple dual equals dual: {}", t.holds);
    }
    if let Some(e) = &canonical_e {
        let _ = writeln!(w, "D E - id: {:.3e}", e.composition);
    }
    if common.verbose > 0 {
        let _ = writeln!(w, "annihilator: {annihilator:?}");
        let _ = writeln!(w, "max residual: {worst:.3e}");
    }

    let report = DualityReport {
        schema_version: SCHEMA_VERSION,
        command: "dualize",
        input: InputReport { spec, side: input.side, label },
        seed: common.seed,
        tol: F17(common.tol),
        stages,
        annihilator,
        dual_group,
        reflexivity,
        triple,
        canonical_e,
        checks_pass,
        wall_clock_ms: elapsed_ms(common, start),
    };
    emit(common, &report)?;
    Ok(checks_pass)
}

#[derive(Serialize)]
struct PontryaginReport {
    schema_version: u32,
    command: &'static str,
    spec: GroupSpec,
    seed: u64,
    group_order: usize,
    dual_group: GroupReport,
    reconstructed: GroupReport,
    isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_clock_ms: Option<F17>,
}

fn cmd_pontryagin(spec: &str, common: &CommonArgs, w: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let spec = load_spec(spec)?;
    let g = spec.group()?;
    let p = pontryagin(&g, common.seed)?;
    let _ = writeln!(
        w,
        "{}: spectrum of C(G)^ has order {}, character group order {}, isomorphic: {}",
        g.name(),
        p.reconstructed.order(),
        p.dual_group.order(),
        p.isomorphic
    );
    let report = PontryaginReport {
        schema_version: SCHEMA_VERSION,
        command: "pontryagin",
        spec,
        seed: common.seed,
        group_order: g.order(),
        dual_group: GroupReport::new("characters", &p.dual_group),
        reconstructed: GroupReport::new("spectrum", &p.reconstructed),
        isomorphic: p.isomorphic,
        wall_clock_ms: elapsed_ms(common, start),
    };
    emit(common, &report)?;
    Ok(p.isomorphic)
}

#[derive(Serialize)]
struct CharacterReport {
    /// `chi_s(t) = exp(2 pi i s t / n)`.
    s: usize,
    standard: bool,
    residual: F17,
}

#[derive(Serialize)]
struct TwistedReport {
    schema_version: u32,
    command: &'static str,
    n: usize,
    seed: u64,
    characters: Vec<CharacterReport>,
    ideal_dim: usize,
    dual_dim: usize,
    double_dual_dim: usize,
    reflexive: bool,
    annihilator: AnnihilatorCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_clock_ms: Option<F17>,
}

/// Label `s` of a character of `C[Z_n]` from its value at the generator.
pub fn character_label(values: &[num_complex::Complex64], n: usize) -> usize {
    if n == 1 {
        return 0;
    }
    let turns = values[1].arg() / std::f64::consts::TAU;
    ((turns * n as f64).round() as i64).rem_euclid(n as i64) as usize
}

fn cmd_twisted_demo(n: usize, common: &CommonArgs, w: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    if n == 0 {
        return Err(Failure::Input("n must be at least 1".into()));
    }
    let chain = dual_chain(Arc::new(twisted_hopf(n)?), 2, common.seed)?;
    let dc = &chain[0];
    let mut characters: Vec<CharacterReport> = dc
        .irreps
        .iter()
        .zip(&dc.standardness)
        .map(|(r, st)| {
            let values: Vec<_> = r.matrices().iter().map(|m| m[(0, 0)]).collect();
            CharacterReport { s: character_label(&values, n), standard: st.standard, residual: F17(st.residual) }
        })
        .collect();
    characters.sort_by_key(|c| c.s);
    let refl = reflexivity_of(&chain[0], &chain[1], common.seed)?;
    for c in &characters {
        let _ = writeln!(
            w,
            "chi_{}: {} (residual {:.3e})",
            c.s,
            if c.standard { "standard" } else { "non-standard" },
            c.residual.0
        );
    }
    let _ = writeln!(
        w,
        "dim M = {n}, dim M_*^0 = {}, dim M^ = {}, dim M^^ = {}, reflexive: {}",
        dc.ideal.dim(),
        dc.dual.dim(),
        chain[1].dual.dim(),
        refl.reflexive
    );
    let report = TwistedReport {
        schema_version: SCHEMA_VERSION,
        command: "twisted-demo",
        n,
        seed: common.seed,
        characters,
        ideal_dim: dc.ideal.dim(),
        dual_dim: dc.dual.dim(),
        double_dual_dim: chain[1].dual.dim(),
        reflexive: refl.reflexive,
        annihilator: annihilator_ideal_check(dc)?,
        wall_clock_ms: elapsed_ms(common, start),
    };
    emit(common, &report)?;
    Ok(true)
}

/// Groups of the built-in fleet, followed by the twisted algebras.
pub fn default_fleet() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut v: Vec<GroupSpec> = (2..=8).map(|n| Cyclic { n }).collect();
    v.push(Product { factors: vec![Cyclic { n: 2 }, Cyclic { n: 2 }] });
    v.push(Product { factors: vec![Cyclic { n: 2 }, Cyclic { n: 4 }] });
    v.push(Sym { n: 3 });
    v.push(Dihedral { n: 4 });
    v.push(Quaternion);
    v.push(Sym { n: 4 });
    v.extend([2, 3, 5, 6].map(|n| Twisted { n }));
    v
}

#[derive(Serialize)]
struct FleetEntry {
    spec: GroupSpec,
    side: Side,
    seed: u64,
    label: Option<String>,
    signature: Option<Vec<usize>>,
    dual_signature: Option<Vec<usize>>,
    double_dual_signature: Option<Vec<usize>>,
    reflexive: Option<bool>,
    structural: Option<bool>,
    error: Option<String>,
}

#[derive(Serialize)]
struct FleetReport {
    schema_version: u32,
    command: &'static str,
    seed: u64,
    tol: F17,
    entries: Vec<FleetEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_clock_ms: Option<F17>,
}

fn fleet_entry(spec: GroupSpec, side: Side, seed: u64) -> FleetEntry {
    let mut e = FleetEntry {
        spec,
        side,
        seed,
        label: None,
        signature: None,
        dual_signature: None,
        double_dual_signature: None,
        reflexive: None,
        structural: None,
        error: None,
    };
    let run = |e: &mut FleetEntry| -> crate::Result<()> {
        let m = build_algebra(&e.spec, side, seed)?;
        e.label = Some(m.label().to_string());
        let chain = dual_chain(Arc::new(m), 2, seed)?;
        let r = reflexivity_of(&chain[0], &chain[1], seed)?;
        e.signature = Some(r.signature.clone());
        e.dual_signature = Some(chain[0].dual.signature());
        e.double_dual_signature = Some(r.double_dual_signature.clone());
        e.reflexive = Some(r.reflexive);
        e.structural = r.structural.map(|s| s.holds);
        Ok(())
    };
    if let Err(err) = run(&mut e) {
        e.error = Some(err.to_string());
    }
    e
}

fn cmd_fleet(spec: Option<&str>, common: &CommonArgs, w: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let specs: Vec<GroupSpec> = match spec {
        None => default_fleet(),
        Some(s) => serde_json::from_str(&read_spec_text(s)?).map_err(|e| Failure::Input(e.to_string()))?,
    };
    let mut jobs = Vec::new();
    for s in specs {
        if matches!(s, GroupSpec::Twisted { .. }) {
            jobs.push((s, Side::Function));
        } else {
            jobs.push((s.clone(), Side::Function));
            jobs.push((s, Side::Groupvn));
        }
    }
    let entries: Vec<FleetEntry> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .enumerate()
            .map(|(i, (s, side))| {
                let seed = common.seed ^ i as u64;
                scope.spawn(move || fleet_entry(s, side, seed))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("fleet worker panicked")).collect()
    });
    let mut ok = true;
    for e in &entries {
        match &e.error {
            Some(err) => {
                ok = false;
                let _ = writeln!(w, "{:?} {:?}: error: {err}", e.spec, e.side);
            }
            None => {
                let _ = writeln!(
                    w,
                    "{}: {:?} -> {:?} -> {:?} reflexive {}",
                    e.label.as_deref().unwrap_or("?"),
                    e.signature.as_deref().unwrap_or_default(),
                    e.dual_signature.as_deref().unwrap_or_default(),
                    e.double_dual_signature.as_deref().unwrap_or_default(),
                    e.reflexive.unwrap_or(false)
                );
            }
        }
    }
    let report = FleetReport {
        schema_version: SCHEMA_VERSION,
        command: "fleet",
        seed: common.seed,
        tol: F17(common.tol),
        entries,
        wall_clock_ms: elapsed_ms(common, start),
    };
    emit(common, &report)?;
    Ok(ok)
}
