//! Cross-check of the closed-form groundstate against the numerical oracle.

use serde::{Deserialize, Serialize};

use super::{groundstate, groundstate_auto, radial_weight, DEFAULT_GRID_POINTS, DEFAULT_R_MAX};
use crate::error::Result;
use crate::potential::PotentialParams;
use crate::solvers::ZeroModeSolution;
use crate::trial::{
    derive_trial, m_zero_residual, m_zero_satisfied, trial_split, zero_energy_residual,
    zero_energy_satisfied,
};
use crate::wavefunction::TrialWavefunction;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub r_max: f64,
    pub n_points: usize,
    /// Grow the domain until the energy is insensitive to `r_max`.
    pub auto_extend: bool,
    /// Solve `V − h` instead of `V`, which makes the trial function exact for any `m`.
    pub include_correction: bool,
    pub energy_tol: f64,
    /// Pass requires cosine similarity `> 1 − similarity_tol`.
    pub similarity_tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            r_max: DEFAULT_R_MAX,
            n_points: DEFAULT_GRID_POINTS,
            auto_extend: false,
            include_correction: false,
            energy_tol: 1e-6,
            similarity_tol: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub closed_form_e0: f64,
    pub oracle_energy: f64,
    pub richardson_pair: (f64, f64),
    pub energy_error: f64,
    pub similarity: f64,
    /// Largest `|residual| / max(1, 2|V|, S₀′²)` of the Riccati equation on the grid.
    pub max_residual: f64,
    pub m: f64,
    pub m_zero_residual: f64,
    pub zero_energy_residual: f64,
    pub r_max: f64,
    pub n_points: usize,
    /// Eigenvalue and eigenvector checks decide `passed`; the constraint
    /// checks are reported for diagnosis only.
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn verify_solution(sol: &ZeroModeSolution, opts: &VerifyOptions) -> Result<VerificationReport> {
    verify_potential(&sol.potential, opts)
}

pub fn verify_potential(p: &PotentialParams, opts: &VerifyOptions) -> Result<VerificationReport> {
    let trial = derive_trial(p)?;
    let split = trial_split(p, &trial);
    let wave = TrialWavefunction::new(trial, *p);

    let h = |r: f64| split.h_at(r);
    let extra: Option<&dyn Fn(f64) -> f64> = if opts.include_correction {
        Some(&h)
    } else {
        None
    };
    let eigen = if opts.auto_extend {
        groundstate_auto(p, extra, opts.r_max, opts.n_points)?
    } else {
        groundstate(p, extra, opts.r_max, opts.n_points)?
    };

    let points = eigen.points();
    let s_ref = points
        .iter()
        .map(|&r| wave.eval_s0(r))
        .fold(f64::INFINITY, f64::min);
    let (mut dot, mut vv, mut pp) = (0.0, 0.0, 0.0);
    let mut max_residual = 0.0f64;
    for (&r, &v) in points.iter().zip(&eigen.vector) {
        let w = radial_weight(r, p.n_dim);
        let psi = (-(wave.eval_s0(r) - s_ref)).exp();
        dot += v * psi * w;
        vv += v * v * w;
        pp += psi * psi * w;

        let residual = if opts.include_correction {
            wave.shifted_residual(&split, r)?
        } else {
            wave.schrodinger_residual(split.e0, r)?
        };
        let d1 = wave.derivatives_s0(r).0;
        let scale = 1f64.max(2.0 * p.eval(r).abs()).max(d1 * d1);
        max_residual = max_residual.max(residual.abs() / scale);
    }
    let similarity = dot / (vv * pp).sqrt();
    let energy_error = (eigen.energy - split.e0).abs();

    let m_res = m_zero_residual(p)?;
    let e_res = zero_energy_residual(p)?;
    let energy_ok = energy_error < opts.energy_tol;
    let vector_ok = similarity > 1.0 - opts.similarity_tol;
    let checks = vec![
        Check {
            name: "eigenvalue".into(),
            passed: energy_ok,
            detail: format!(
                "|E_oracle - E0| = {energy_error:.3e} (oracle {:.9e}, closed form {:.9e}, tol {:.1e})",
                eigen.energy, split.e0, opts.energy_tol
            ),
        },
        Check {
            name: "eigenvector".into(),
            passed: vector_ok,
            detail: format!("cosine similarity 1 - {:.3e}", 1.0 - similarity),
        },
        Check {
            name: "m_zero".into(),
            passed: m_zero_satisfied(p)?,
            detail: format!("m = {:.9e}", trial.m),
        },
        Check {
            name: "zero_energy".into(),
            passed: zero_energy_satisfied(p)?,
            detail: format!("closed-form E0 = {:.9e}", split.e0),
        },
    ];

    Ok(VerificationReport {
        closed_form_e0: split.e0,
        oracle_energy: eigen.energy,
        richardson_pair: eigen.richardson_pair,
        energy_error,
        similarity,
        max_residual,
        m: trial.m,
        m_zero_residual: m_res,
        zero_energy_residual: e_res,
        r_max: eigen.grid.r_max,
        n_points: eigen.grid.n_points / 2,
        checks,
        passed: energy_ok && vector_ok,
    })
}
