//! One function per subcommand. Each returns the run summary; the verdict
//! inside it decides the exit code.

use std::fs;
use std::path::Path;

use sombrero::oracle::MIN_GRID_POINTS;
use sombrero::{
    derive_trial, jackiw_solutions, solutions_from_lambda, solve_eta, solve_eta_mu,
    verify_potential, Error, PotentialParams, TrialWavefunction, VerifyOptions,
};

use crate::cli::{
    Command, DeriveArgs, EtaMuArgs, FromLambdaArgs, JackiwArgs, OracleArgs, OutputFormat,
    ParamSource, PlotDataArgs, PlotWhat, ScanLambdaArgs, VerifyArgs,
};
use crate::format::write_csv;
use crate::summary::{DatasetSummary, RunSummary, SolutionSummary, Verdict};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    /// Bad flags or unusable paths.
    #[error("{0}")]
    Usage(String),
    /// The computation itself could not produce an answer.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonPositiveCoupling(_)
            | Error::InvalidDimension(_)
            | Error::NonFinite { .. }
            | Error::NonPositiveRadius(_)
            | Error::NonPositiveLambda(_)
            | Error::InvalidInterval { .. }
            | Error::TooFewSubdivisions { .. }
            | Error::NonPositiveRadiusArgument(_)
            | Error::GridTooSmall { .. }
            | Error::InvalidExtent(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Result of a command: the summary plus messages meant for stderr.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub summary: RunSummary,
    pub format: OutputFormat,
    pub diagnostics: Vec<String>,
}

impl Outcome {
    fn new(summary: RunSummary, format: OutputFormat) -> Self {
        Self {
            summary,
            format,
            diagnostics: Vec::new(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.summary.verdict.exit_code()
    }

    pub fn render(&self) -> String {
        match self.format {
            OutputFormat::Human => self.summary.to_human(),
            OutputFormat::Json => self.summary.to_json() + "\n",
        }
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Derive(args) => derive(args),
        Command::FromLambda(args) => from_lambda(args),
        Command::ScanLambda(args) => scan_lambda(args),
        Command::Jackiw(args) => jackiw(args),
        Command::EtaMu(args) => eta_mu(args),
        Command::Verify(args) => verify(args),
        Command::PlotData(args) => plot_data(args),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn finite(flag: &str, value: f64) -> Result<f64, CliError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(usage(format!("--{flag} must be finite, got {value}")))
    }
}

fn positive(flag: &str, value: f64) -> Result<f64, CliError> {
    if finite(flag, value)? > 0.0 {
        Ok(value)
    } else {
        Err(usage(format!("--{flag} must be positive, got {value}")))
    }
}

fn dimension(n_dim: u32) -> Result<u32, CliError> {
    if n_dim >= 1 {
        Ok(n_dim)
    } else {
        Err(usage(format!("--N must be at least 1, got {n_dim}")))
    }
}

fn oracle_options(args: &OracleArgs) -> Result<VerifyOptions, CliError> {
    positive("rmax", args.r_max)?;
    if args.grid < MIN_GRID_POINTS {
        return Err(usage(format!(
            "--grid must be at least {MIN_GRID_POINTS}, got {}",
            args.grid
        )));
    }
    Ok(VerifyOptions {
        r_max: args.r_max,
        n_points: args.grid,
        auto_extend: args.auto_extend,
        ..VerifyOptions::default()
    })
}

fn echo_oracle(summary: &mut RunSummary, args: &OracleArgs) {
    summary
        .input("rmax", args.r_max)
        .input("grid", args.grid)
        .input("auto_extend", args.auto_extend);
}

fn write_dataset(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| usage(format!("cannot write --out {}: {e}", path.display())))
}

fn derive(args: &DeriveArgs) -> Result<Outcome, CliError> {
    positive("g", args.g)?;
    finite("alpha", args.alpha)?;
    finite("beta", args.beta)?;
    finite("A", args.big_a)?;
    dimension(args.n_dim)?;
    let p = PotentialParams::new(args.g, args.alpha, args.beta, args.big_a, args.n_dim)?;

    let mut summary = RunSummary::new("derive");
    summary
        .input("g", args.g)
        .input("alpha", args.alpha)
        .input("beta", args.beta)
        .input("A", args.big_a)
        .input("N", args.n_dim);
    summary.solutions.push(SolutionSummary::new("input", p)?);
    Ok(Outcome::new(summary, args.format.format))
}

fn from_lambda(args: &FromLambdaArgs) -> Result<Outcome, CliError> {
    positive("g", args.g)?;
    finite("lambda", args.lambda)?;
    dimension(args.n_dim)?;

    let mut summary = RunSummary::new("from-lambda");
    summary
        .input("g", args.g)
        .input("lambda", args.lambda)
        .input("N", args.n_dim);
    let solutions = solutions_from_lambda(args.g, args.lambda, args.n_dim)?;
    if solutions.is_empty() {
        summary.verdict = Verdict::NoRoot;
        summary
            .notes
            .push(format!("no η in (0,1) for lambda = {}", args.lambda));
    }
    for (k, sol) in solutions.iter().enumerate() {
        summary.solutions.push(SolutionSummary::new(
            format!("root {}", k + 1),
            sol.potential,
        )?);
    }
    Ok(Outcome::new(summary, args.format.format))
}

fn scan_lambda(args: &ScanLambdaArgs) -> Result<Outcome, CliError> {
    dimension(args.n_dim)?;
    let (from, to) = (finite("from", args.from)?, finite("to", args.to)?);
    if !(1.0 < from && from < to) {
        return Err(usage(format!(
            "require 1 < --from < --to, got --from {from} --to {to}"
        )));
    }
    if args.steps < 2 {
        return Err(usage(format!(
            "--steps must be at least 2, got {}",
            args.steps
        )));
    }

    let step = (to - from) / (args.steps - 1) as f64;
    let mut rows = Vec::with_capacity(args.steps);
    let (mut missing, mut multiple) = (0, 0);
    for k in 0..args.steps {
        let lambda = if k + 1 == args.steps {
            to
        } else {
            from + k as f64 * step
        };
        let roots = solve_eta(lambda, args.n_dim)?;
        missing += usize::from(roots.is_empty());
        multiple += usize::from(roots.len() > 1);
        rows.push(vec![Some(lambda), roots.first().copied()]);
    }
    let mut bytes = Vec::new();
    let count = write_csv(&mut bytes, &["lambda", "eta"], rows).expect("in-memory write");
    write_dataset(&args.out, &bytes)?;

    let mut summary = RunSummary::new("scan-lambda");
    summary
        .input("N", args.n_dim)
        .input("from", from)
        .input("to", to)
        .input("steps", args.steps)
        .input("out", args.out.display().to_string());
    summary.dataset = Some(DatasetSummary {
        path: args.out.display().to_string(),
        columns: vec!["lambda".into(), "eta".into()],
        rows: count,
        missing,
    });
    if multiple > 0 {
        summary.notes.push(format!(
            "{multiple} lambda values have more than one root; the smallest is written"
        ));
    }
    Ok(Outcome::new(summary, args.format.format))
}

fn jackiw(args: &JackiwArgs) -> Result<Outcome, CliError> {
    dimension(args.n_dim)?;
    let opts = oracle_options(&args.oracle)?;

    let mut summary = RunSummary::new("jackiw");
    summary
        .input("N", args.n_dim)
        .input("verify", !args.no_verify);
    if !args.no_verify {
        echo_oracle(&mut summary, &args.oracle);
    }
    let branches = jackiw_solutions(args.n_dim)?;
    let mut diagnostics = Vec::new();
    let mut all_pass = true;
    for (branch, label) in branches.iter().zip(["alpha = 2 r0^2", "alpha = -6 r0^2"]) {
        let mut sol = SolutionSummary::new(label, branch.potential)?;
        if !args.no_verify {
            let report = verify_potential(&branch.potential, &opts)?;
            for check in report
                .failed_checks()
                .filter(|c| matches!(c.name.as_str(), "eigenvalue" | "eigenvector"))
            {
                diagnostics.push(format!(
                    "{label}: check {} failed: {}",
                    check.name, check.detail
                ));
            }
            all_pass &= report.passed;
            sol.verification = Some(report);
        }
        summary.solutions.push(sol);
    }
    summary
        .notes
        .push("both branches have m = 0, so E0 is the exact groundstate energy of V".into());
    if !args.no_verify {
        summary.verdict = if all_pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }
    let mut outcome = Outcome::new(summary, args.format.format);
    outcome.diagnostics = diagnostics;
    Ok(outcome)
}

fn eta_mu(args: &EtaMuArgs) -> Result<Outcome, CliError> {
    positive("g", args.g)?;
    dimension(args.n_dim)?;
    let opts = oracle_options(&args.oracle)?;

    let mut summary = RunSummary::new("eta-mu");
    summary.input("g", args.g).input("N", args.n_dim);
    echo_oracle(&mut summary, &args.oracle);
    let sol = match solve_eta_mu(args.g, args.n_dim) {
        Ok(sol) => sol,
        Err(Error::NoRoot(detail)) => {
            summary.verdict = Verdict::NoRoot;
            summary.notes.push(format!("no η in (0,1): {detail}"));
            return Ok(Outcome::new(summary, args.format.format));
        }
        Err(e) => return Err(e.into()),
    };
    summary
        .notes
        .push("c = (1 - eta) g r0^2 / 2 with r0^4 = (N + 2)/3, mu = 1 - (1 + eta)^2 + 3/g".into());
    verified_outcome(
        summary,
        "eta-mu root",
        sol.potential,
        &opts,
        args.format.format,
    )
}

fn verified_outcome(
    mut summary: RunSummary,
    label: &str,
    p: PotentialParams,
    opts: &VerifyOptions,
    format: OutputFormat,
) -> Result<Outcome, CliError> {
    let report = verify_potential(&p, opts)?;
    let mut sol = SolutionSummary::new(label, p)?;
    let mut diagnostics = Vec::new();
    for check in report.failed_checks() {
        diagnostics.push(format!("check {} failed: {}", check.name, check.detail));
    }
    if !opts.include_correction && sol.trial.m != 0.0 && !sombrero::trial::m_zero_satisfied(&p)? {
        summary.notes.push(format!(
            "m = {} is nonzero: the trial function is the groundstate of V - h, not of V",
            crate::format::sig9(sol.trial.m)
        ));
    }
    summary.verdict = if report.passed {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    sol.verification = Some(report);
    summary.solutions.push(sol);
    let mut outcome = Outcome::new(summary, format);
    outcome.diagnostics = diagnostics;
    Ok(outcome)
}

/// Either a potential or a domain outcome (no root) already recorded in `summary`.
fn resolve_params(
    src: &ParamSource,
    summary: &mut RunSummary,
) -> Result<Option<(String, PotentialParams)>, CliError> {
    positive("g", src.g)?;
    dimension(src.n_dim)?;
    summary.input("g", src.g).input("N", src.n_dim);
    if src.eta_mu {
        summary.input("eta_mu", true);
        return match solve_eta_mu(src.g, src.n_dim) {
            Ok(sol) => Ok(Some(("eta-mu root".into(), sol.potential))),
            Err(Error::NoRoot(detail)) => {
                summary.verdict = Verdict::NoRoot;
                summary.notes.push(format!("no η in (0,1): {detail}"));
                Ok(None)
            }
            Err(e) => Err(e.into()),
        };
    }
    if let Some(lambda) = src.lambda {
        finite("lambda", lambda)?;
        summary.input("lambda", lambda);
        let solutions = solutions_from_lambda(src.g, lambda, src.n_dim)?;
        return match solutions.first() {
            Some(sol) => Ok(Some(("lambda root 1".into(), sol.potential))),
            None => {
                summary.verdict = Verdict::NoRoot;
                summary
                    .notes
                    .push(format!("no η in (0,1) for lambda = {lambda}"));
                Ok(None)
            }
        };
    }
    let missing: Vec<&str> = [
        ("--alpha", src.alpha),
        ("--beta", src.beta),
        ("--A", src.big_a),
    ]
    .iter()
    .filter(|(_, v)| v.is_none())
    .map(|(name, _)| *name)
    .collect();
    if !missing.is_empty() {
        return Err(usage(format!(
            "missing {} (or use --lambda / --eta-mu)",
            missing.join(", ")
        )));
    }
    let (alpha, beta, big_a) = (
        src.alpha.unwrap_or_default(),
        src.beta.unwrap_or_default(),
        src.big_a.unwrap_or_default(),
    );
    finite("alpha", alpha)?;
    finite("beta", beta)?;
    finite("A", big_a)?;
    summary
        .input("alpha", alpha)
        .input("beta", beta)
        .input("A", big_a);
    Ok(Some((
        "input".into(),
        PotentialParams::new(src.g, alpha, beta, big_a, src.n_dim)?,
    )))
}

fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut opts = oracle_options(&args.oracle)?;
    opts.include_correction = args.with_correction;

    let mut summary = RunSummary::new("verify");
    let Some((label, p)) = resolve_params(&args.params, &mut summary)? else {
        return Ok(Outcome::new(summary, args.format.format));
    };
    echo_oracle(&mut summary, &args.oracle);
    summary.input("with_correction", args.with_correction);
    verified_outcome(summary, &label, p, &opts, args.format.format)
}

fn plot_data(args: &PlotDataArgs) -> Result<Outcome, CliError> {
    let (r_from, r_to) = (finite("r-from", args.r_from)?, finite("r-to", args.r_to)?);
    if !(0.0 <= r_from && r_from < r_to) {
        return Err(usage(format!(
            "require 0 <= --r-from < --r-to, got --r-from {r_from} --r-to {r_to}"
        )));
    }
    if args.steps < 2 {
        return Err(usage(format!(
            "--steps must be at least 2, got {}",
            args.steps
        )));
    }

    let mut summary = RunSummary::new("plot-data");
    let what = match args.what {
        PlotWhat::Potential => "potential",
        PlotWhat::Wavefunction => "wavefunction",
    };
    summary.input("what", what);
    let Some((label, p)) = resolve_params(&args.params, &mut summary)? else {
        return Ok(Outcome::new(summary, args.format.format));
    };
    summary
        .input("r_from", r_from)
        .input("r_to", r_to)
        .input("steps", args.steps)
        .input("out", args.out.display().to_string());

    let step = (r_to - r_from) / (args.steps - 1) as f64;
    let radii: Vec<f64> = (0..args.steps)
        .map(|k| {
            if k + 1 == args.steps {
                r_to
            } else {
                r_from + k as f64 * step
            }
        })
        .collect();
    let (column, values): (&str, Vec<f64>) = match args.what {
        PlotWhat::Potential => ("V", radii.iter().map(|&r| p.eval(r)).collect()),
        PlotWhat::Wavefunction => {
            let wave = TrialWavefunction::new(derive_trial(&p)?, p);
            let peak = wave.maxima_radius().global_max;
            let s_peak = wave.eval_s0(peak);
            summary.notes.push(format!(
                "psi normalized to 1 at its global maximum r = {}",
                crate::format::sig9(peak)
            ));
            (
                "psi",
                radii
                    .iter()
                    .map(|&r| (s_peak - wave.eval_s0(r)).exp())
                    .collect(),
            )
        }
    };
    let rows = radii
        .iter()
        .zip(&values)
        .map(|(&r, &v)| vec![Some(r), Some(v)]);
    let mut bytes = Vec::new();
    let count = write_csv(&mut bytes, &["r", column], rows).expect("in-memory write");
    write_dataset(&args.out, &bytes)?;

    summary.solutions.push(SolutionSummary::new(label, p)?);
    summary.dataset = Some(DatasetSummary {
        path: args.out.display().to_string(),
        columns: vec!["r".into(), column.into()],
        rows: count,
        missing: 0,
    });
    Ok(Outcome::new(summary, args.format.format))
}
