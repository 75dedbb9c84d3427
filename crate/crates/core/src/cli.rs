//! The `duha` command line: presets, custom fields, windows, output formats.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{cyclotomic, parse_poly, Field, FieldError, FieldSpec};
use crate::koszul::Theory;
use crate::pbw::{CaseError, CaseSpec, Family};
use crate::series::{LaurentSeries, Window};
use crate::verify::{
    certify_amended_hh3_basis, certify_cohomology_bases, certify_hh0_basis, certify_hh3_basis,
    compute_hh_dims, verify_against_catalog, verify_algebra_dims, verify_cy_duality, verify_cyclic,
    with_jobs, CaseSummary, CertificateStatus, DimensionTable, VerificationReport, VerifyError,
    DEFAULT_COHOMOLOGY_WINDOW, DEFAULT_HOMOLOGY_WINDOW,
};

pub const PRESETS: [&str; 7] = [
    "f1-rational",
    "f2-generic",
    "f2-root-1",
    "f2-root-2",
    "f2-root-3",
    "f2-root-4",
    "f2-root-6",
];

/// Bound used when classifying parameters (root orders, genericity).
const CLASSIFY_BOUND: u64 = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Case(#[from] CaseError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(e) if e.is_internal() => EXIT_INTERNAL,
            CliError::Verify(VerifyError::Linalg(_) | VerifyError::Koszul(_)) => EXIT_INTERNAL,
            _ => EXIT_CONFIG,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Table,
}

/// Run settings; also the schema of `--config` files.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub preset: Option<String>,
    pub minpoly: Option<String>,
    pub r1: Option<String>,
    pub r2: Option<String>,
    pub min_deg: Option<i64>,
    pub max_deg: Option<i64>,
    pub output: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl Config {
    /// Values set in `over` win.
    pub fn overridden_by(self, over: Config) -> Config {
        Config {
            preset: over.preset.or(self.preset),
            minpoly: over.minpoly.or(self.minpoly),
            r1: over.r1.or(self.r1),
            r2: over.r2.or(self.r2),
            min_deg: over.min_deg.or(self.min_deg),
            max_deg: over.max_deg.or(self.max_deg),
            output: over.output.or(self.output),
            out: over.out.or(self.out),
            jobs: over.jobs.or(self.jobs),
        }
    }

    pub fn window(&self, default: Window) -> Result<Window, CliError> {
        let w = Window::new(
            self.min_deg.unwrap_or(default.lo),
            self.max_deg.unwrap_or(default.hi),
        );
        if w.lo > w.hi {
            return Err(CliError::Config(format!("empty degree window {w}")));
        }
        Ok(w)
    }

    fn has_explicit_field(&self) -> bool {
        self.minpoly.is_some() || self.r1.is_some() || self.r2.is_some()
    }

    /// The case named by the preset or by the explicit field data.
    pub fn case(&self) -> Result<CaseSpec, CliError> {
        match (&self.preset, self.has_explicit_field()) {
            (Some(_), true) => Err(CliError::Config(
                "--preset excludes --minpoly/--r1/--r2".into(),
            )),
            (Some(p), false) => resolve_preset(p),
            (None, true) => {
                let field = match &self.minpoly {
                    Some(m) => Field::new(parse_poly(m)?)?,
                    None => Field::rationals(),
                };
                let root = |s: &Option<String>, name: &str| -> Result<_, CliError> {
                    let s = s
                        .as_ref()
                        .ok_or_else(|| CliError::Config(format!("--{name} is required")))?;
                    Ok(field.from_poly(&parse_poly(s)?))
                };
                let spec = FieldSpec::new(root(&self.r1, "r1")?, root(&self.r2, "r2")?)?;
                Ok(CaseSpec::classify("custom", spec, CLASSIFY_BOUND)?)
            }
            (None, false) => Err(CliError::Config(format!(
                "choose --preset ({}) or give --r1/--r2",
                PRESETS.join(", ")
            ))),
        }
    }
}

/// The named parameter sets.
pub fn resolve_preset(name: &str) -> Result<CaseSpec, CliError> {
    let q = Field::rationals();
    let spec = match name {
        "f1-rational" => FieldSpec::new(q.from_i64(2), q.from_i64(3))?,
        "f2-generic" => FieldSpec::new(q.from_i64(2), q.from_ratio(1, 2))?,
        "f2-root-1" => FieldSpec::new(q.one(), q.one())?,
        "f2-root-2" => FieldSpec::new(q.from_i64(-1), q.from_i64(-1))?,
        _ => {
            let n = name
                .strip_prefix("f2-root-")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|n| [3, 4, 6].contains(n))
                .ok_or_else(|| {
                    CliError::Config(format!(
                        "unknown preset {name:?}; presets: {}",
                        PRESETS.join(", ")
                    ))
                })?;
            let k = Field::new(cyclotomic(n))?;
            let theta = k.generator();
            FieldSpec::new(theta.clone(), theta.pow(n as u64 - 1))?
        }
    };
    Ok(CaseSpec::classify(name, spec, CLASSIFY_BOUND)?)
}

#[derive(Debug, Parser)]
#[command(
    name = "duha",
    version,
    about = "Exact Hochschild and cyclic (co)homology of down-up algebras A(α,β,0)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Bigraded dimensions of the algebra and the Hilbert series check
    Dims,
    /// Hochschild homology dimensions against the closed forms
    Homology,
    /// Hochschild cohomology dimensions against the closed forms
    Cohomology,
    /// Reduced cyclic homology and the Euler characteristic
    Cyclic,
    /// Certificates for the explicit bases
    Certify,
    /// Every check on every preset
    Check,
}

#[derive(Debug, Default, Args)]
pub struct Opts {
    /// One of f1-rational, f2-generic, f2-root-{1,2,3,4,6}
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// Monic minimal polynomial as a coefficient list, lowest degree first, e.g. "[1,0,1]"
    #[arg(long, global = true)]
    pub minpoly: Option<String>,
    /// r1 as a polynomial in θ (coefficient list or rational)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub r1: Option<String>,
    /// r2 as a polynomial in θ (coefficient list or rational)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub r2: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub min_deg: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub max_deg: Option<i64>,
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for per-bidegree jobs
    #[arg(long, global = true, env = "DUHA_JOBS")]
    pub jobs: Option<usize>,
    /// JSON file with the same fields as the flags; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

impl Opts {
    pub fn resolve(self) -> Result<Config, CliError> {
        let flags = Config {
            preset: self.preset,
            minpoly: self.minpoly,
            r1: self.r1,
            r2: self.r2,
            min_deg: self.min_deg,
            max_deg: self.max_deg,
            output: self.output,
            out: self.out,
            jobs: self.jobs,
        };
        let base = match self.config {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Config(format!("reading {}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("parsing {}: {e}", path.display())))?
            }
            None => Config::default(),
        };
        let cfg = Config::default().overridden_by(base).overridden_by(flags);
        if cfg.jobs == Some(0) {
            return Err(CliError::Config("--jobs must be positive".into()));
        }
        Ok(cfg)
    }
}

/// What a command produced.
#[derive(Debug, Serialize)]
pub struct Outcome {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<DimensionTable>,
    pub reports: Vec<VerificationReport>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

fn theory_window(theory: Theory, cfg: &Config) -> Result<Window, CliError> {
    cfg.window(match theory {
        Theory::Homology => DEFAULT_HOMOLOGY_WINDOW,
        Theory::Cohomology => DEFAULT_COHOMOLOGY_WINDOW,
    })
}

fn certify_report(case: &CaseSpec, cfg: &Config) -> Result<VerificationReport, CliError> {
    let hw = theory_window(Theory::Homology, cfg)?;
    let mut report = VerificationReport::new(CaseSummary::of(case), hw);
    report.certificates.extend(certify_hh0_basis(case, hw)?);
    report.certificates.extend(certify_hh3_basis(case, hw)?);
    let amended = certify_amended_hh3_basis(case, hw)?;
    if !amended.is_empty() {
        let ok = amended
            .iter()
            .filter(|c| c.status == CertificateStatus::Certified)
            .count();
        report.notes.push(format!(
            "amended HH_3 basis {{w1^k w2^k | d²u²}}: {ok} of {} bidegrees certified",
            amended.len()
        ));
    }
    if case.family() == Family::F1 {
        report.certificates.extend(certify_cohomology_bases(
            case,
            theory_window(Theory::Cohomology, cfg)?,
        )?);
    } else {
        report
            .notes
            .push("explicit cohomology bases are certified for F1 only".into());
    }
    Ok(report)
}

/// Runs one command; the result carries everything that gets printed.
pub fn execute(command: Command, cfg: &Config) -> Result<Outcome, CliError> {
    let single = |table, report| {
        Ok(Outcome {
            table,
            reports: vec![report],
        })
    };
    match command {
        Command::Dims => {
            let case = cfg.case()?;
            single(
                None,
                verify_algebra_dims(&case, cfg.window(Window::new(0, 16))?)?,
            )
        }
        Command::Homology | Command::Cohomology => {
            let theory = if command == Command::Homology {
                Theory::Homology
            } else {
                Theory::Cohomology
            };
            let case = cfg.case()?;
            let w = theory_window(theory, cfg)?;
            let table = compute_hh_dims(&case, theory, w)?;
            single(Some(table), verify_against_catalog(&case, theory, w)?)
        }
        Command::Cyclic => {
            let case = cfg.case()?;
            single(
                None,
                verify_cyclic(&case, theory_window(Theory::Homology, cfg)?)?,
            )
        }
        Command::Certify => {
            let case = cfg.case()?;
            single(None, certify_report(&case, cfg)?)
        }
        Command::Check => {
            if cfg.preset.is_some() || cfg.has_explicit_field() {
                return Err(CliError::Config(
                    "check runs every preset; drop --preset/--r1/--r2".into(),
                ));
            }
            let mut reports = Vec::new();
            for name in PRESETS {
                let case = resolve_preset(name)?;
                let mut r = verify_algebra_dims(&case, Window::new(0, 16))?;
                r.merge(verify_against_catalog(
                    &case,
                    Theory::Homology,
                    theory_window(Theory::Homology, cfg)?,
                )?);
                r.merge(verify_against_catalog(
                    &case,
                    Theory::Cohomology,
                    theory_window(Theory::Cohomology, cfg)?,
                )?);
                r.merge(verify_cyclic(&case, theory_window(Theory::Homology, cfg)?)?);
                r.merge(certify_report(&case, cfg)?);
                if case.family().is_f2() {
                    r.merge(verify_cy_duality(&case, Window::new(-6, 8))?);
                }
                reports.push(r);
            }
            Ok(Outcome {
                table: None,
                reports,
            })
        }
    }
}

fn render_series_row(out: &mut String, name: &str, s: &LaurentSeries) {
    let cells: Vec<String> = s.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    let _ = writeln!(out, "{name:<8} {}", cells.join(" "));
}

/// Renders an outcome in the requested format.
pub fn render(outcome: &Outcome, format: OutputFormat) -> Result<String, CliError> {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            if outcome.table.is_none() && outcome.reports.len() == 1 {
                out = serde_json::to_string_pretty(&outcome.reports[0])?;
            } else {
                out = serde_json::to_string_pretty(outcome)?;
            }
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("theory,i,deg,sdeg,dim,predicted,match\n");
            if let Some(t) = &outcome.table {
                let theory = serde_json::to_value(t.theory)?
                    .as_str()
                    .unwrap_or_default()
                    .to_string();
                for r in &t.rows {
                    let _ = writeln!(out, "{theory},{},{},{},{},,", r.i, r.deg, r.sdeg, r.dim);
                }
            }
            for report in &outcome.reports {
                for c in &report.comparisons {
                    let _ = writeln!(
                        out,
                        "\"{}\",,{},total,{},{},{}",
                        c.quantity, c.degree, c.computed, c.predicted, c.matches
                    );
                }
            }
        }
        OutputFormat::Table => {
            if let Some(t) = &outcome.table {
                let _ = writeln!(out, "{} {:?} on {}", t.case.name, t.theory, t.window);
                for i in 0..4 {
                    render_series_row(&mut out, &format!("i={i}"), &t.totals(i));
                }
            }
            for report in &outcome.reports {
                let bad = report.failures();
                let certified = report.certificates.len();
                let _ = writeln!(
                    out,
                    "{} [{}]: {} comparisons, {} certificates, {} failures",
                    report.case.name,
                    report.case.family,
                    report.comparisons.len(),
                    certified,
                    bad.len()
                );
                for f in bad {
                    let _ = writeln!(out, "  FAIL {f}");
                }
                for (name, s) in &report.series {
                    render_series_row(&mut out, name, s);
                }
                for n in &report.notes {
                    let _ = writeln!(out, "  note: {n}");
                }
            }
        }
    }
    Ok(out)
}

/// Parses arguments, runs, writes output; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match run_parsed(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("duha: {e}");
            e.exit_code()
        }
    }
}

fn run_parsed(cli: Cli) -> Result<i32, CliError> {
    let cfg = cli.opts.resolve()?;
    let outcome = with_jobs(cfg.jobs, || execute(cli.command, &cfg))??;
    let text = render(&outcome, cfg.output.unwrap_or_default())?;
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(if outcome.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_classify() {
        let f1 = resolve_preset("f1-rational").unwrap();
        assert_eq!(f1.family(), Family::F1);
        assert_eq!(f1.alpha().to_string(), "5");
        assert_eq!(f1.beta().to_string(), "-6");
        assert_eq!(
            resolve_preset("f2-generic").unwrap().family(),
            Family::F2NonRoot
        );
        for n in [1, 2, 3, 4, 6] {
            let c = resolve_preset(&format!("f2-root-{n}")).unwrap();
            assert_eq!(c.family(), Family::F2Root { n });
            assert!(c.beta() == &(-c.algebra().field().one()));
        }
        let r4 = resolve_preset("f2-root-4").unwrap();
        assert!(r4.alpha().is_zero());
        let r1 = resolve_preset("f2-root-1").unwrap();
        assert_eq!(r1.alpha().to_string(), "2");
        assert!(matches!(resolve_preset("f3"), Err(CliError::Config(_))));
    }

    #[test]
    fn config_precedence() {
        let file = Config {
            preset: Some("f1-rational".into()),
            max_deg: Some(4),
            ..Config::default()
        };
        let flags = Config {
            max_deg: Some(6),
            ..Config::default()
        };
        let c = file.overridden_by(flags);
        assert_eq!(c.preset.as_deref(), Some("f1-rational"));
        assert_eq!(c.max_deg, Some(6));
    }

    #[test]
    fn explicit_field() {
        let cfg = Config {
            minpoly: Some("[1, 0, 1]".into()),
            r1: Some("[0, 1]".into()),
            r2: Some("[0, -1]".into()),
            ..Config::default()
        };
        assert_eq!(cfg.case().unwrap().family(), Family::F2Root { n: 4 });
        let both = Config {
            preset: Some("f1-rational".into()),
            ..cfg
        };
        assert!(matches!(both.case(), Err(CliError::Config(_))));
        assert!(matches!(Config::default().case(), Err(CliError::Config(_))));
    }
}
