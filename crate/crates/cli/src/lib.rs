//! Command-line front end for `zetafam`: evaluation grids, real-zero scans,
//! β-curve sweeps, identity checks and rectangle zero counts, written as
//! CSV or JSON.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetafam::dirichlet::{characters_mod, l_function};
use zetafam::zeros::{beta_zero, count_zeros_rectangle, scan_real_zeros, DEFAULT_STEP};
use zetafam::{cpt, eval_family, AlphaParam, EvalSettings, FamilyId, ZetaError};

mod output;
mod range;
mod verify;

pub use output::{BetaRow, CountRow, EvalRow, ScanRow, VerifyRow};
pub use range::Range;
pub use verify::Suite;

use output::Table;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILURE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "zetafam",
    version,
    about = "Hurwitz, periodic and composed zeta functions"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,

    /// Target tolerance of the kernels.
    #[arg(long, env = "ZETAFAM_TOL", global = true)]
    pub tol: Option<f64>,

    #[arg(long, global = true)]
    pub em_shift: Option<usize>,

    #[arg(long, global = true)]
    pub em_order: Option<usize>,

    /// Real part above which the periodic zeta is summed as a series.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub series_threshold: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a family on a grid of points.
    Eval(EvalArgs),
    /// Locate real zeros on an interval.
    Scan(ScanArgs),
    /// β_Z or β_P over a set of a.
    Beta(BetaArgs),
    /// Run identity and relation checks.
    Verify(VerifyArgs),
    /// Count zeros in a rectangle.
    Count(CountArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub family: FamilyId,
    /// `r/q` (exact) or a decimal; not used by RIEMANN and L_CHI.
    #[arg(long)]
    pub a: Option<AlphaParam>,
    /// A value or `lo:hi:step`.
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Range,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub t: Range,
    /// Modulus of the character for L_CHI.
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Index of the character in the ordered list mod `modulus`.
    #[arg(long, default_value_t = 0)]
    pub character: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long)]
    pub a: AlphaParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = DEFAULT_STEP)]
    pub step: f64,
}

#[derive(Debug, Args)]
pub struct BetaArgs {
    /// Z or P.
    #[arg(long)]
    pub family: FamilyId,
    /// Comma-separated values of a.
    #[arg(long, value_delimiter = ',', conflicts_with = "grid")]
    pub a: Vec<AlphaParam>,
    /// Decimal grid `lo:hi:step`.
    #[arg(long)]
    pub grid: Option<Range>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Restrict to one family; all applicable ones otherwise.
    #[arg(long)]
    pub family: Option<FamilyId>,
    #[arg(long)]
    pub a: Option<AlphaParam>,
    /// Modulus for the relation suite.
    #[arg(long)]
    pub q: Option<u64>,
    /// Random points per check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Pass threshold on the scaled residual.
    #[arg(long, default_value_t = 1e-8)]
    pub threshold: f64,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long)]
    pub a: AlphaParam,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma_max: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 128)]
    pub samples: usize,
}

/// Error with the exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }

    /// One JSON object on a single line, for the diagnostic stream.
    pub fn to_line(&self) -> String {
        serde_json::json!({ "error": self.kind, "message": self.message, "exit_code": self.code })
            .to_string()
    }
}

impl From<ZetaError> for CliError {
    fn from(err: ZetaError) -> Self {
        let (code, kind) = match err {
            ZetaError::RefinementFailure { .. } => (EXIT_FAILURE, "non-convergence"),
            ZetaError::Domain(_) | ZetaError::Pole { .. } | ZetaError::GammaPole(_) => {
                (EXIT_USAGE, "domain")
            }
            ZetaError::RepositionRectangle { .. } => (EXIT_USAGE, "reposition-rectangle"),
            _ => (EXIT_USAGE, "invalid-argument"),
        };
        CliError {
            code,
            kind,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError {
            code: EXIT_USAGE,
            kind: "io",
            message: err.to_string(),
        }
    }
}

impl RunConfig {
    pub fn settings(&self) -> Result<EvalSettings, CliError> {
        let mut cfg = EvalSettings::default();
        if let Some(tol) = self.tol {
            cfg.target_abs_tol = tol;
        }
        if let Some(n) = self.em_shift {
            cfg.em_shift = n;
        }
        if let Some(n) = self.em_order {
            cfg.em_order = n;
        }
        if let Some(x) = self.series_threshold {
            cfg.series_sigma_threshold = x;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn eval_rows(args: &EvalArgs, cfg: &EvalSettings) -> Result<Vec<EvalRow>, CliError> {
    let chi = match args.family {
        FamilyId::LChi => {
            let q = args
                .modulus
                .ok_or_else(|| CliError::usage("L_CHI needs --modulus"))?;
            let chars = characters_mod(q)?;
            let n = chars.len();
            Some(chars.into_iter().nth(args.character).ok_or_else(|| {
                CliError::usage(format!(
                    "character index {} out of range (mod {q} has {n})",
                    args.character
                ))
            })?)
        }
        _ => None,
    };
    let a = match (args.family, args.a) {
        (FamilyId::LChi | FamilyId::Riemann, a) => a.unwrap_or(AlphaParam::rational(1, 1)?),
        (_, Some(a)) => a,
        (fam, None) => return Err(CliError::usage(format!("{fam} needs --a"))),
    };
    let mut rows = Vec::new();
    for sigma in args.sigma.values()? {
        for t in args.t.values()? {
            let s = cpt(sigma, t);
            let v = match &chi {
                Some(chi) => l_function(chi, s, cfg)?,
                None => eval_family(args.family, s, &a, cfg)?,
            };
            rows.push(EvalRow {
                sigma,
                t,
                re: v.re,
                im: v.im,
            });
        }
    }
    Ok(rows)
}

fn scan_rows(
    args: &ScanArgs,
    cfg: &EvalSettings,
    diag: &mut dyn Write,
) -> Result<Vec<ScanRow>, CliError> {
    let report = scan_real_zeros(args.family, &args.a, args.from, args.to, args.step, cfg)?;
    for w in &report.warnings {
        writeln!(
            diag,
            "{}",
            serde_json::json!({ "warning": "pole", "at": w.at, "message": w.message })
        )?;
    }
    Ok(report
        .zeros
        .iter()
        .map(|z| ScanRow {
            family: args.family,
            a: args.a.to_string(),
            location: z.location,
            multiplicity_class: z.multiplicity_class.name().to_string(),
            residual: z.residual,
        })
        .collect())
}

fn beta_rows(args: &BetaArgs, cfg: &EvalSettings) -> Result<Vec<BetaRow>, CliError> {
    let alphas: Vec<AlphaParam> = match &args.grid {
        Some(grid) => grid
            .values()?
            .into_iter()
            .map(AlphaParam::new)
            .collect::<Result<_, _>>()?,
        None if !args.a.is_empty() => args.a.clone(),
        None => return Err(CliError::usage("beta needs --a or --grid")),
    };
    alphas
        .iter()
        .map(|a| {
            let p = beta_zero(args.family, a, cfg)?;
            Ok(BetaRow {
                a: a.to_string(),
                family: p.family,
                beta: p.beta,
                prediction: p.asymptotic_prediction,
                deviation: p.deviation,
            })
        })
        .collect()
}

fn count_row(args: &CountArgs, cfg: &EvalSettings) -> Result<CountRow, CliError> {
    let corners = (
        cpt(args.sigma_min, args.t_min),
        cpt(args.sigma_max, args.t_max),
    );
    let r = count_zeros_rectangle(args.family, &args.a, corners, args.samples, cfg)?;
    Ok(CountRow {
        family: args.family,
        a: args.a.to_string(),
        sigma_min: r.corners.0.re,
        t_min: r.corners.0.im,
        sigma_max: r.corners.1.re,
        t_max: r.corners.1.im,
        count: r.count,
        boundary_min_abs: r.boundary_min_abs,
        samples_used: r.samples_used,
    })
}

/// Executes one command, writing results to `out` and warnings to `diag`.
/// Returns the exit status on success paths (0, or 2 for failed checks).
pub fn run(config: &RunConfig, out: &mut dyn Write, diag: &mut dyn Write) -> Result<u8, CliError> {
    let cfg = config.settings()?;
    let fmt = config.format;
    match &config.command {
        Command::Eval(args) => Table::new("eval", eval_rows(args, &cfg)?).write(fmt, out)?,
        Command::Scan(args) => Table::new("scan", scan_rows(args, &cfg, diag)?).write(fmt, out)?,
        Command::Beta(args) => Table::new("beta", beta_rows(args, &cfg)?).write(fmt, out)?,
        Command::Count(args) => {
            Table::new("count", vec![count_row(args, &cfg)?]).write(fmt, out)?
        }
        Command::Verify(args) => {
            let rows = verify::run_suites(args, &cfg)?;
            let failed = rows.iter().filter(|r| !r.pass).count();
            Table::new("verify", rows).write(fmt, out)?;
            if failed > 0 {
                writeln!(diag, "{}", serde_json::json!({ "failed_checks": failed }))?;
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs them; the value
/// is the process exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = write!(out, "{err}");
                return EXIT_OK;
            }
            let rendered = err.render().to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let _ = write!(diag, "{rendered}");
            let _ = writeln!(
                diag,
                "{}",
                CliError::usage(first.trim_start_matches("error: ")).to_line()
            );
            return EXIT_USAGE;
        }
    };
    match run(&config, out, diag) {
        Ok(code) => code,
        Err(err) => {
            let _ = writeln!(diag, "{}", err.to_line());
            err.code
        }
    }
}
