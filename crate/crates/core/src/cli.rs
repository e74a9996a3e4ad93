//! Command-line front end. `run` parses nothing itself: it takes a parsed
//! [`Cli`], writes the report to `out` and returns the process exit code.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 input error, 3 enumeration cap hit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::functional::{degrees, Degrees};
use crate::io::read_polytope;
use crate::polytope::{LatticePolytope, VertexReport};
use crate::triangulation::{enumerate_regular, EnumerationOptions, TriangulationKey};
use crate::vectors::{boundary_vector, gkz_vector, hurwitz_vector, VectorKind};
use crate::weight::{CheckStatus, IdentityReport, PolytopeKind, SupportReport, WeightPolytope, WeightPolytopes};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "toric-weights",
    version,
    about = "Regular triangulations, Chow and Hurwitz polytopes of lattice polytopes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the polytope and report volumes, degrees and smoothness
    Check(Common),
    /// Enumerate regular triangulations with witness liftings
    Triangulations(Common),
    /// Characteristic vector of every regular triangulation
    Vectors {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = VectorArg::Gkz)]
        kind: VectorArg,
    },
    /// Chow or Hurwitz polytope
    Polytope {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = PolytopeArg::Chow)]
        kind: PolytopeArg,
    },
    /// Run the identity and support suites
    Verify {
        #[command(flatten)]
        common: Common,
        /// Number of random liftings for the support checks
        #[arg(long, default_value_t = 100)]
        liftings: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    #[arg(long)]
    pub max_triangulations: Option<usize>,
    /// Seconds
    #[arg(long)]
    pub time_budget: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[arg(long)]
    pub skip_delzant_check: bool,
    /// Worker threads; output does not depend on this
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VectorArg {
    Gkz,
    Boundary,
    Hurwitz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolytopeArg {
    Chow,
    Hurwitz,
}

impl From<PolytopeArg> for PolytopeKind {
    fn from(k: PolytopeArg) -> Self {
        match k {
            PolytopeArg::Chow => PolytopeKind::Chow,
            PolytopeArg::Hurwitz => PolytopeKind::Hurwitz,
        }
    }
}

/// Settings echoed into every report.
#[derive(Debug, Serialize)]
struct RunConfig<'a> {
    command: &'a str,
    input: String,
    seed: u64,
    trials: usize,
    max_triangulations: usize,
    time_budget: Option<f64>,
    skip_delzant_check: bool,
}

struct Outcome {
    passed: bool,
    warnings: Vec<String>,
    report: Value,
    human: String,
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Check(c) | Command::Triangulations(c) => c,
            Command::Vectors { common, .. } | Command::Polytope { common, .. } | Command::Verify { common, .. } => {
                common
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Triangulations(_) => "triangulations",
            Command::Vectors { .. } => "vectors",
            Command::Polytope { .. } => "polytope",
            Command::Verify { .. } => "verify",
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    let common = cli.command.common();
    let options = EnumerationOptions {
        max_triangulations: common
            .max_triangulations
            .unwrap_or(EnumerationOptions::default().max_triangulations),
        ..Default::default()
    };
    let config = RunConfig {
        command: cli.command.name(),
        input: common.input.display().to_string(),
        seed: common.seed,
        trials: common.trials,
        max_triangulations: options.max_triangulations,
        time_budget: common.time_budget,
        skip_delzant_check: common.skip_delzant_check,
    };

    let result = match common.workers {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, options)),
            Err(e) => Err(Error::InvalidInput(e.to_string())),
        },
        None => execute(&cli.command, options),
    };

    let (code, text) = match &result {
        Ok(o) => {
            let code = if o.passed { EXIT_PASS } else { EXIT_FAIL };
            let status = if o.passed { "pass" } else { "fail" };
            let text = match common.format {
                Format::Machine => machine(json!({
                    "config": config,
                    "status": status,
                    "warnings": o.warnings,
                    "report": o.report,
                })),
                Format::Human => {
                    let mut s = header(&config);
                    for w in &o.warnings {
                        let _ = writeln!(s, "warning: {w}");
                    }
                    s.push_str(&o.human);
                    let _ = writeln!(s, "status: {status}");
                    s
                }
            };
            (code, text)
        }
        Err(e) => {
            let (code, kind) = match e {
                Error::IncompleteEnumeration { .. } => (EXIT_CAP, "incomplete_enumeration"),
                Error::Parse(_) => (EXIT_INPUT, "parse"),
                Error::Io(_) => (EXIT_INPUT, "io"),
                _ => (EXIT_INPUT, "input"),
            };
            let text = match common.format {
                Format::Machine => machine(json!({
                    "config": config,
                    "status": "error",
                    "error": {"kind": kind, "message": e.to_string()},
                })),
                Format::Human => format!("{}error: {e}\n", header(&config)),
            };
            (code, text)
        }
    };
    let _ = out.write_all(text.as_bytes());
    code
}

fn machine(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("reports serialize");
    s.push('\n');
    s
}

fn header(c: &RunConfig) -> String {
    let cap = c.max_triangulations;
    let budget = c.time_budget.map_or("none".to_string(), |t| format!("{t}s"));
    format!(
        "toric-weights {} {}\nseed {}, trials {}, max triangulations {cap}, time budget {budget}\n",
        c.command, c.input, c.seed, c.trials
    )
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn key_string(k: &TriangulationKey) -> String {
    let parts: Vec<String> = k.iter().map(|s| format!("{s:?}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn execute(command: &Command, mut options: EnumerationOptions) -> Result<Outcome> {
    let common = command.common();
    if let Some(t) = common.time_budget {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::InvalidInput(format!(
                "time budget must be a non-negative number of seconds, got {t}"
            )));
        }
        options.time_budget = Some(Duration::from_secs_f64(t));
    }
    let q = read_polytope(&common.input)?;
    let delzant = q.is_delzant();
    let deg = degrees(&q);
    let mut warnings = Vec::new();
    for v in delzant.singular_vertices() {
        warnings.push(format!(
            "not Delzant: vertex {} is singular{}",
            tuple(&v.vertex),
            match v.determinant {
                Some(d) => format!(" (edge determinant {})", d.abs()),
                None => format!(" ({} edges)", v.edge_directions.len()),
            }
        ));
    }
    if deg.deg_chow < 2 {
        warnings.push(format!(
            "degree {} is below 2, the smallest degree the theory covers",
            deg.deg_chow
        ));
    }

    if !matches!(command, Command::Check(_)) && !delzant.delzant && !common.skip_delzant_check {
        return Err(Error::InvalidInput(
            "polytope is not Delzant; pass --skip-delzant-check to proceed anyway".into(),
        ));
    }

    let mut outcome = match command {
        Command::Check(_) => check(&q, deg, delzant.singular_vertices().cloned().collect(), delzant.delzant),
        Command::Triangulations(_) => triangulations(&q, &options)?,
        Command::Vectors { kind, .. } => vectors(&q, &options, *kind)?,
        Command::Polytope { kind, .. } => {
            let w = WeightPolytopes::compute(q, &options)?;
            polytope(w.get((*kind).into()))
        }
        Command::Verify { liftings, .. } => {
            let w = WeightPolytopes::compute(q, &options)?;
            verify(&w, common.trials, common.seed, *liftings)
        }
    };
    outcome.warnings = warnings;
    Ok(outcome)
}

#[derive(Serialize)]
struct CheckReport {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: usize,
    delzant: bool,
    singular_vertices: Vec<VertexReport>,
    volume: u64,
    boundary_volume: u64,
    facet_volumes: Vec<u64>,
    degrees: Degrees,
    points: usize,
}

fn check(q: &LatticePolytope, deg: Degrees, singular: Vec<VertexReport>, delzant: bool) -> Outcome {
    let r = CheckReport {
        dim: q.dim(),
        vertices: q.vertices().to_vec(),
        facets: q.facets().len(),
        delzant,
        singular_vertices: singular,
        volume: q.volume(),
        boundary_volume: q.boundary_volume(),
        facet_volumes: q.facet_volumes().to_vec(),
        degrees: deg,
        points: q.lattice_points().len(),
    };
    let mut h = String::new();
    let _ = writeln!(h, "dimension: {}", r.dim);
    let verts: Vec<String> = r.vertices.iter().map(|v| tuple(v)).collect();
    let _ = writeln!(h, "vertices: {}", verts.join(" "));
    let _ = writeln!(h, "delzant: {}", r.delzant);
    let _ = writeln!(h, "volume: {}", r.volume);
    let _ = writeln!(h, "boundary volume: {}", r.boundary_volume);
    let _ = writeln!(h, "degrees: chow {}, hurwitz {}", deg.deg_chow, deg.deg_hurwitz);
    let _ = writeln!(h, "lattice points: {}", r.points);
    Outcome {
        passed: true,
        warnings: Vec::new(),
        report: serde_json::to_value(&r).expect("reports serialize"),
        human: h,
    }
}

fn triangulations(q: &LatticePolytope, options: &EnumerationOptions) -> Result<Outcome> {
    let config = q.lattice_points();
    let e = enumerate_regular(&config, options)?;
    let rows: Vec<Value> = e
        .triangulations
        .iter()
        .enumerate()
        .map(|(id, r)| {
            json!({
                "id": id,
                "simplices": r.triangulation.key(),
                "volumes": r.triangulation.simplices().iter().map(|s| s.volume()).collect::<Vec<_>>(),
                "witness": r.witness,
            })
        })
        .collect();
    let mut h = String::new();
    let _ = writeln!(
        h,
        "lattice points: {}",
        config.points().iter().map(|p| tuple(p)).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(h, "circuits: {}", e.circuits.len());
    let _ = writeln!(h, "regular triangulations: {}", e.len());
    for (id, r) in e.triangulations.iter().enumerate() {
        let _ = writeln!(
            h,
            "T{id} {} witness {}",
            key_string(&r.triangulation.key()),
            tuple(r.witness.heights())
        );
    }
    Ok(Outcome {
        passed: true,
        warnings: Vec::new(),
        report: json!({
            "points": config.points(),
            "circuits": e.circuits.len(),
            "count": e.len(),
            "triangulations": rows,
        }),
        human: h,
    })
}

fn vectors(q: &LatticePolytope, options: &EnumerationOptions, kind: VectorArg) -> Result<Outcome> {
    let config = q.lattice_points();
    let e = enumerate_regular(&config, options)?;
    let kind = match kind {
        VectorArg::Gkz => VectorKind::Gkz,
        VectorArg::Boundary => VectorKind::Boundary,
        VectorArg::Hurwitz => VectorKind::Hurwitz,
    };
    let mut h = String::new();
    let _ = writeln!(
        h,
        "{kind:?} vectors over {}",
        config.points().iter().map(|p| tuple(p)).collect::<Vec<_>>().join(" ")
    );
    let mut rows = Vec::new();
    for (id, t) in e.iter().enumerate() {
        let v = match kind {
            VectorKind::Gkz => gkz_vector(t, &config),
            VectorKind::Boundary => boundary_vector(t, q, &config),
            VectorKind::Hurwitz => hurwitz_vector(t, q, &config),
        };
        let _ = writeln!(h, "T{id} {} {}", tuple(&v.entries), key_string(&t.key()));
        rows.push(json!({"id": id, "triangulation": t.key(), "vector": v.entries}));
    }
    Ok(Outcome {
        passed: true,
        warnings: Vec::new(),
        report: json!({"kind": kind, "points": config.points(), "rows": rows}),
        human: h,
    })
}

fn polytope(p: &WeightPolytope) -> Outcome {
    let mut h = String::new();
    let _ = writeln!(h, "{:?} polytope, affine dimension {}", p.kind, p.affine_dim);
    let _ = writeln!(h, "vertices: {}", p.vertices.len());
    for v in &p.vertices {
        let _ = writeln!(h, "  {}", tuple(v));
    }
    let _ = writeln!(h, "generators: {}", p.generators.len());
    for g in &p.generators {
        let ids: Vec<String> = g.triangulations.iter().map(|i| format!("T{i}")).collect();
        let _ = writeln!(h, "  {} from {}", tuple(&g.vector), ids.join(" "));
    }
    Outcome {
        passed: true,
        warnings: Vec::new(),
        report: serde_json::to_value(p).expect("reports serialize"),
        human: h,
    }
}

#[derive(Serialize)]
struct SupportSummary {
    seed: u64,
    requested: usize,
    tested: usize,
    failures: Vec<SupportReport>,
}

#[derive(Serialize)]
struct WitnessSummary {
    checked: usize,
    failures: Vec<usize>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    triangulations: usize,
    degrees: Degrees,
    chow_vertices: &'a [Vec<i64>],
    hurwitz_vertices: &'a [Vec<i64>],
    identities: IdentityReport,
    supports: SupportSummary,
    witnesses: WitnessSummary,
}

fn verify(w: &WeightPolytopes, trials: usize, seed: u64, liftings: usize) -> Outcome {
    let identities = w.verify_identities(trials, seed);
    let range = 2 * w.config.len() as i64;
    let suite = w.verify_random_supports(liftings, seed, range);

    // the witness of T must select exactly eta_T on the Chow side
    let mut witness_failures = Vec::new();
    for (id, r) in w.enumeration.triangulations.iter().enumerate() {
        let eta = gkz_vector(&r.triangulation, &w.config).entries;
        let chow = w.chow.support_min(r.witness.heights());
        let hu = w.verify_hurwitz_support(r.witness.heights());
        if chow.argmin != vec![eta] || hu.status != CheckStatus::Pass {
            witness_failures.push(id);
        }
    }

    let supports = SupportSummary {
        seed,
        requested: liftings,
        tested: suite.tested(),
        failures: suite
            .reports
            .iter()
            .filter(|r| r.status == CheckStatus::Fail)
            .cloned()
            .collect(),
    };
    let passed = identities.passed() && supports.failures.is_empty() && witness_failures.is_empty();
    let r = VerifyReport {
        triangulations: w.enumeration.len(),
        degrees: w.degrees,
        chow_vertices: &w.chow.vertices,
        hurwitz_vertices: &w.hurwitz.vertices,
        identities,
        supports,
        witnesses: WitnessSummary {
            checked: w.enumeration.len(),
            failures: witness_failures,
        },
    };

    let mut h = String::new();
    let _ = writeln!(h, "regular triangulations: {}", r.triangulations);
    let _ = writeln!(
        h,
        "degrees: chow {}, hurwitz {}",
        r.degrees.deg_chow, r.degrees.deg_hurwitz
    );
    let verts = |vs: &[Vec<i64>]| vs.iter().map(|v| tuple(v)).collect::<Vec<_>>().join(" ");
    let _ = writeln!(h, "chow vertices: {}", verts(r.chow_vertices));
    let _ = writeln!(h, "hurwitz vertices: {}", verts(r.hurwitz_vertices));
    let _ = writeln!(
        h,
        "identities: {} checks, {} failures",
        r.identities.checks,
        r.identities.failures.len()
    );
    for f in &r.identities.failures {
        let _ = writeln!(
            h,
            "  {} on T{}: {} != {} for g = ({})",
            f.check,
            f.triangulation,
            f.lhs,
            f.rhs,
            f.g.join(",")
        );
    }
    let _ = writeln!(
        h,
        "support checks: {} liftings tested, {} failures",
        r.supports.tested / 2,
        r.supports.failures.len()
    );
    for f in &r.supports.failures {
        let _ = writeln!(
            h,
            "  {:?} lifting {}: min {:?} != {:?}",
            f.kind,
            tuple(&f.lifting),
            f.polytope_min,
            f.triangulation_value
        );
    }
    let _ = writeln!(
        h,
        "witness checks: {} triangulations, {} failures",
        r.witnesses.checked,
        r.witnesses.failures.len()
    );
    Outcome {
        passed,
        warnings: Vec::new(),
        report: serde_json::to_value(&r).expect("reports serialize"),
        human: h,
    }
}
