//! The `odl` command-line front end.
//!
//! Exit codes: 0 success, 1 computation error (or a failing suite), 2
//! configuration or usage error.

pub mod config;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bott::{
    bott_cohomology, cohomology_on_ambient, format_weight, module_dim, parse_bundle, parse_flag, parse_weight,
    HomogeneousAmbient,
};
use crate::chow::FlagFactor;
use crate::forms::generic::todd_polynomial;
use crate::forms::{closed_form_class, closed_form_schur_cofactor, fundamental_class};
use crate::nilpotent::{self, Construction};
use crate::report::LocusReport;
use crate::verify::{run_suite, Status, SuiteReport, SUITES};

pub use config::{parse_config, to_toml, Locus, LocusKind, RunConfig};

pub const ENGINE: &str = concat!("odl ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("computation error: {0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(_) => 1,
            CliError::Config(_) => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "odl", version, about = "Intersection theory and Bott cohomology for orbital degeneracy loci")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the invariants of the locus described by a config file.
    Compute {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also print the generic fundamental class and Todd polynomial.
        #[arg(long)]
        generic: bool,
    },
    /// Run a built-in verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cohomology of a homogeneous bundle on a flag variety: a weight such as
    /// `1,1|0,0,0` or a bundle expression such as `sym(Q,2)`.
    Bott {
        flag: String,
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
    /// The universal fundamental class of the three-form locus.
    Class {
        #[arg(long)]
        generic: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: String) -> Check {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GenericClass {
    pub class: String,
    pub schur: String,
    pub todd: String,
}

/// Machine-readable output of `odl compute`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub engine: String,
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    pub locus: LocusReport,
    pub assumptions: Vec<String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic: Option<GenericClass>,
}

pub fn generic_class() -> GenericClass {
    let (_, todd) = todd_polynomial();
    GenericClass {
        class: closed_form_class().to_string(),
        schur: closed_form_schur_cofactor().to_string(),
        todd: todd.to_string(),
    }
}

/// Parses, builds and runs a configuration.
pub fn compute(text: &str, generic: bool) -> Result<Report, CliError> {
    let cfg = parse_config(text)?;
    let locus = cfg.build(text)?;
    let compute = |e: &dyn std::fmt::Display| CliError::Compute(e.to_string());
    let (construction, mut report, assumptions, checks) = match &locus {
        Locus::Forms(f) => {
            let report = crate::forms::invariants(f).map_err(|e| compute(&e))?;
            let fc = fundamental_class(f).map_err(|e| compute(&e))?;
            let mut checks = vec![Check::new(
                "fundamental-class",
                true,
                format!("pushforward equals the closed form: {}", fc.class),
            )];
            if let Some(m) = &f.model {
                let t = cohomology_on_ambient(&m.ambient, &parse_bundle("O").expect("O parses"))
                    .map_err(|e| compute(&e))?;
                let hrr = f.x.euler_characteristic(&f.x.trivial(1)).map_err(|e| compute(&e))?;
                checks.push(Check::new(
                    "koszul-hrr",
                    crate::Rat::int(t.euler()) == hrr,
                    format!("χ(O_X): Koszul/Bott {}, HRR {hrr}", t.euler()),
                ));
            }
            let mut assumptions = vec![
                "s is a general section, so D is smooth of the expected dimension away from the deeper orbits".into(),
                "Z(s̃) ⊂ P(E) resolves D, and is isomorphic to D when dim D ≤ 4".into(),
            ];
            if report.hodge.is_some() {
                assumptions
                    .push("Koszul differentials are only bounded, not computed; Hodge numbers are intervals".into());
            }
            (None, report, assumptions, checks)
        }
        Locus::Richardson(n) => {
            let report = nilpotent::invariants(n).map_err(|e| compute(&e))?;
            let construction = n.construction().map_err(|e| compute(&e))?;
            let res = n.resolution().map_err(|e| compute(&e))?;
            let expected = n.expected_dim().map_err(|e| compute(&e))?;
            let canonical = nilpotent::check_canonical(n, &res.f, &res.q);
            let checks = vec![
                Check::new(
                    "dimension",
                    res.z.dim as i64 == expected,
                    format!("dim Z = {}, expected {expected}", res.z.dim),
                ),
                Check::new(
                    "canonical-class",
                    canonical.is_ok(),
                    match canonical {
                        Ok(()) => "adjunction agrees with θ*(K_X + dim P·L)".into(),
                        Err(e) => e.to_string(),
                    },
                ),
            ];
            let mut assumptions = vec!["s is a general section of the twisted nilpotent bundle".to_string()];
            assumptions.push(if construction.delta == 1 {
                "the collapsing map Z(s̃) → D is birational".into()
            } else {
                format!("the collapsing map Z(s̃) → D has degree {}", construction.delta)
            });
            (Some(construction), report, assumptions, checks)
        }
    };
    if !cfg.output.hodge {
        report.hodge = None;
    }
    Ok(Report {
        engine: ENGINE.into(),
        config: cfg,
        construction,
        locus: report,
        assumptions,
        checks,
        generic: generic.then(generic_class),
    })
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn write_json(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

pub fn render_report(r: &Report) -> String {
    let l = &r.locus;
    let mut out =
        format!("{}\n  ambient: {}\n  dimension: {}\n  condition: {}\n", l.label, l.ambient, l.dim, l.condition);
    if let Some(c) = &r.construction {
        out.push_str(&format!(
            "  orbit: partition {}, blocks {:?}, dim G/P {}, dim P {}, degree {}\n",
            c.partition.as_deref().unwrap_or("-"),
            c.blocks,
            c.dim_gp,
            c.dim_p,
            c.delta
        ));
    }
    out.push_str(&format!("  c1(K): {}\n  nonempty: {}\n  class: {}\n", l.canonical, l.nonempty, l.fundamental_class));
    let chis: Vec<String> = l.chi_omega.iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("  χ(O) = {}\n  χ(Ω^p) = [{}]\n", l.chi_o, chis.join(", ")));
    if let Some(d) = &l.anticanonical_degree {
        out.push_str(&format!("  (-K)^{} = {d}\n", l.dim));
    }
    if let Some(h) = &l.h0_anticanonical {
        out.push_str(&format!("  χ(-K) = {h}\n"));
    }
    if let Some(h) = &l.hodge {
        out.push_str(&format!("  h11 = {}, h21 = {}, candidates {:?}\n", h.h11, h.h21, h.candidates));
    }
    for n in &l.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    for c in &r.checks {
        out.push_str(&format!("  [{}] {}: {}\n", c.status, c.name, c.detail));
    }
    if let Some(g) = &r.generic {
        out.push_str(&render_generic(g));
    }
    out
}

fn render_generic(g: &GenericClass) -> String {
    format!("generic class: {}\nSchur form: {}\ntodd polynomial:\n{}\n", g.class, g.schur, g.todd)
}

fn cmd_compute(file: &Path, json: Option<&Path>, generic: bool) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Config(format!("{}: {e}", file.display())))?;
    let start = Instant::now();
    let report = compute(&text, generic).map_err(|e| match e {
        CliError::Config(m) => CliError::Config(format!("{}:{m}", file.display())),
        other => other,
    })?;
    emit(&render_report(&report));
    emit(&format!("  time: {:.2?}\n", start.elapsed()));
    if let Some(p) = json {
        write_json(p, &to_json(&report))?;
    }
    Ok(())
}

fn print_suite(r: &SuiteReport) {
    for row in &r.rows {
        emit(&format!("{:<8} {:<40} {}\n", row.status, row.label, row.detail));
    }
    emit(&format!("{}: {} passed, {} failed, {} skipped\n", r.suite, r.passed, r.failed, r.skipped));
}

/// Runs the named suites; the error side distinguishes unknown names.
pub fn verify(suite: &str) -> Result<Vec<SuiteReport>, CliError> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    names
        .into_iter()
        .map(|n| {
            run_suite(n).ok_or_else(|| {
                CliError::Config(format!("unknown suite {n}; expected one of {} or all", SUITES.join(", ")))
            })
        })
        .collect()
}

fn cmd_verify(suite: &str, json: Option<&Path>) -> Result<(), CliError> {
    let reports = verify(suite)?;
    for r in &reports {
        print_suite(r);
    }
    if let Some(p) = json {
        let text = if reports.len() == 1 { to_json(&reports[0]) } else { to_json(&reports) };
        write_json(p, &text)?;
    }
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    if failed > 0 {
        return Err(CliError::Compute(format!("{failed} row(s) failed")));
    }
    Ok(())
}

/// Text output of `odl bott`.
pub fn bott(flag: &str, weight: &str) -> Result<String, CliError> {
    let flag: Vec<FlagFactor> = parse_flag(flag).map_err(|e| CliError::Config(e.to_string()))?;
    let n: usize = flag.iter().map(|f| f.n).sum();
    if let Ok(w) = parse_weight(weight) {
        if w.len() != n {
            return Err(CliError::Config(format!("weight has {} entries, the flag needs {n}", w.len())));
        }
        let shown = format_weight(&flag, &w);
        return Ok(match bott_cohomology(&flag, &w).map_err(|e| CliError::Compute(e.to_string()))? {
            None => format!("({shown}): all cohomology vanishes\n"),
            Some((deg, l)) => {
                let lam: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                format!("({shown}): H^{deg} = S_({}) V*, dimension {}\n", lam.join(","), module_dim(&flag, &l))
            }
        });
    }
    let e = parse_bundle(weight).map_err(|e| CliError::Config(format!("{weight}: {e}")))?;
    let amb = HomogeneousAmbient::new(flag, Vec::new()).map_err(|e| CliError::Config(e.to_string()))?;
    let t = cohomology_on_ambient(&amb, &e).map_err(|e| CliError::Compute(e.to_string()))?;
    let mut out = String::new();
    for term in &t.terms {
        out.push_str(&format!(
            "H^{} ⊇ {} × S_({}) V*, dimension {}\n",
            term.degree,
            term.mult,
            term.weight.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            term.dim
        ));
    }
    let totals: Vec<String> = t.totals().iter().map(|(d, v)| format!("h^{d} = {v}")).collect();
    out.push_str(&format!(
        "{e}: {}\n",
        if totals.is_empty() { "all cohomology vanishes".into() } else { totals.join(", ") }
    ));
    Ok(out)
}

/// Parses `std::env::args` and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute { file, json, generic } => cmd_compute(file, json.as_deref(), *generic),
        Command::Verify { suite, json } => cmd_verify(suite, json.as_deref()),
        Command::Bott { flag, weight } => bott(flag, weight).map(|s| emit(&s)),
        Command::Class { generic } => {
            if *generic {
                emit(&render_generic(&generic_class()));
                Ok(())
            } else {
                Err(CliError::Config("class currently needs --generic".into()))
            }
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("odl: {e}");
            e.exit_code()
        }
    }
}
