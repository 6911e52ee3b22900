//! The machine-readable record of one run and its human rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sombrero::trial::HSign;
use sombrero::{
    derive_trial, m_zero_residual, trial_split, zero_energy_residual, JackiwForm, LambdaForm,
    MaximaLocation, PotentialParams, TrialParams, TrialSplit, TrialWavefunction,
    VerificationReport,
};

use crate::format::sig9;

pub const TOOL_NAME: &str = "sombrero";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Extent over which the sign structure of `h` is sampled.
const H_SIGN_EXTENT: f64 = 8.0;
const H_SIGN_SAMPLES: usize = 801;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The command produced its output; nothing was tested.
    Success,
    Pass,
    Fail,
    NoRoot,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Success | Verdict::Pass => 0,
            Verdict::Fail | Verdict::NoRoot => 1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Success => "success",
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NoRoot => "no root",
        }
    }
}

/// Everything derived for one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSummary {
    pub label: String,
    pub potential: PotentialParams,
    pub lambda_form: Option<LambdaForm>,
    pub jackiw_form: Option<JackiwForm>,
    pub trial: TrialParams,
    pub split: TrialSplit,
    pub h_sign: HSign,
    pub m_zero_residual: f64,
    pub zero_energy_residual: f64,
    pub maxima: MaximaLocation,
    pub verification: Option<VerificationReport>,
}

impl SolutionSummary {
    pub fn new(label: impl Into<String>, potential: PotentialParams) -> sombrero::Result<Self> {
        let trial = derive_trial(&potential)?;
        let split = trial_split(&potential, &trial);
        Ok(Self {
            label: label.into(),
            potential,
            lambda_form: potential.to_lambda_form(),
            jackiw_form: potential.to_jackiw_form().ok(),
            trial,
            split,
            h_sign: split.h_sign(H_SIGN_EXTENT, H_SIGN_SAMPLES),
            m_zero_residual: m_zero_residual(&potential)?,
            zero_energy_residual: zero_energy_residual(&potential)?,
            maxima: TrialWavefunction::new(trial, potential).maxima_radius(),
            verification: None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub path: String,
    pub columns: Vec<String>,
    pub rows: usize,
    /// Rows with an empty value field.
    pub missing: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub solutions: Vec<SolutionSummary>,
    pub dataset: Option<DatasetSummary>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl RunSummary {
    pub fn new(command: &str) -> Self {
        Self {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            command: command.into(),
            inputs: BTreeMap::new(),
            solutions: Vec::new(),
            dataset: None,
            verdict: Verdict::Success,
            notes: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(name.into(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}  {}", self.tool, self.version, self.command);
        if !self.inputs.is_empty() {
            out.push_str("inputs\n");
            for (name, value) in &self.inputs {
                let text = match value {
                    Value::Number(n) => n.as_f64().map(sig9).unwrap_or_else(|| n.to_string()),
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                row(&mut out, name, &text);
            }
        }
        for sol in &self.solutions {
            render_solution(&mut out, sol);
        }
        if let Some(d) = &self.dataset {
            out.push_str("dataset\n");
            row(&mut out, "path", &d.path);
            row(&mut out, "columns", &d.columns.join(","));
            row(&mut out, "rows", &d.rows.to_string());
            row(&mut out, "missing", &d.missing.to_string());
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.label());
        out
    }
}

fn row(out: &mut String, name: &str, value: &str) {
    let _ = writeln!(out, "  {name:<22} {value}");
}

fn num(out: &mut String, name: &str, value: f64) {
    row(out, name, &sig9(value));
}

fn render_solution(out: &mut String, sol: &SolutionSummary) {
    let _ = writeln!(out, "solution: {}", sol.label);
    let p = &sol.potential;
    num(out, "g", p.g);
    num(out, "alpha", p.alpha);
    num(out, "beta", p.beta);
    num(out, "A", p.big_a);
    row(out, "N", &p.n_dim.to_string());
    if let Some(l) = &sol.lambda_form {
        num(out, "lambda", l.lambda);
        num(out, "eta", l.eta);
    }
    if let Some(j) = &sol.jackiw_form {
        num(out, "r0^2", j.r0_sq);
        num(out, "mu", j.mu);
    }
    num(out, "a", sol.trial.a);
    num(out, "c", sol.trial.c);
    num(out, "m", sol.trial.m);
    num(out, "h 1/(r^2+1)^2", sol.split.h_inv_sq);
    num(out, "h 1/(r^2+1)", sol.split.h_inv);
    row(out, "h sign", &format!("{:?}", sol.h_sign).to_lowercase());
    num(out, "E0", sol.split.e0);
    num(out, "m residual (4m)", sol.m_zero_residual);
    num(out, "zero-energy residual", sol.zero_energy_residual);
    num(out, "psi max radius", sol.maxima.global_max);
    row(
        out,
        "psi valley at origin",
        &sol.maxima.valley_at_origin.to_string(),
    );
    if let Some(v) = &sol.verification {
        num(out, "oracle E", v.oracle_energy);
        num(out, "oracle E (dr)", v.richardson_pair.0);
        num(out, "oracle E (dr/2)", v.richardson_pair.1);
        num(out, "|E_oracle - E0|", v.energy_error);
        num(out, "cosine similarity", v.similarity);
        num(out, "max Riccati residual", v.max_residual);
        num(out, "r_max", v.r_max);
        row(out, "grid", &v.n_points.to_string());
        for check in &v.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            row(
                out,
                &format!("check {}", check.name),
                &format!("{status}  {}", check.detail),
            );
        }
        row(
            out,
            "oracle verdict",
            if v.passed { "PASS" } else { "FAIL" },
        );
    }
}
