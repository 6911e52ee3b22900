//! Closed-form trial function `φ = exp(−S₀)` with
//! `S₀(r) = a r⁴ − c r² + m log(r² + 1)`.
//!
//! Matching the `r⁶`, `r⁴` and `r²` terms of the Riccati equation fixes
//! `a = g/4`, `4c = (α − A)g` and
//! `4m = g(β − αA) − ¼g(α − A)² + N + 2`. What is left over is a bounded
//! potential correction `h(r)` and an energy shift `E₀` such that `φ` is the
//! exact groundstate of `V − h` with eigenvalue `E₀`. When `m = 0`, `h`
//! vanishes and `φ` is the exact groundstate of `V` itself.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::potential::PotentialParams;

/// Relative tolerance used by the boolean constraint helpers.
pub const CONSTRAINT_TOL: f64 = 1e-10;

/// Exponent coefficients of the trial function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialParams {
    pub a: f64,
    pub c: f64,
    pub m: f64,
}

/// Potential correction `h(r) = q/(r²+1)² + l/(r²+1)` and shifted eigenvalue `E₀`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialSplit {
    pub e0: f64,
    /// coefficient of `1/(r²+1)²`
    pub h_inv_sq: f64,
    /// coefficient of `1/(r²+1)`
    pub h_inv: f64,
}

impl TrialSplit {
    pub fn h_at(&self, r: f64) -> f64 {
        let s = 1.0 / (r * r + 1.0);
        (self.h_inv_sq * s + self.h_inv) * s
    }

    /// Sign structure of `h` sampled on `[0, r_max]`.
    pub fn h_sign(&self, r_max: f64, samples: usize) -> HSign {
        let samples = samples.max(2);
        let (mut pos, mut neg) = (false, false);
        for k in 0..samples {
            let r = r_max * k as f64 / (samples - 1) as f64;
            let h = self.h_at(r);
            pos |= h > 0.0;
            neg |= h < 0.0;
        }
        match (pos, neg) {
            (false, false) => HSign::Zero,
            (true, false) => HSign::Positive,
            (false, true) => HSign::Negative,
            (true, true) => HSign::Mixed,
        }
    }
}

/// Diagnostic only: mixed-sign `h` is legal input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HSign {
    Zero,
    Positive,
    Negative,
    Mixed,
}

pub fn derive_trial(p: &PotentialParams) -> Result<TrialParams> {
    p.require_confining()?;
    let g = p.g;
    let diff = p.alpha - p.big_a;
    Ok(TrialParams {
        a: 0.25 * g,
        c: 0.25 * diff * g,
        m: 0.25 * m_zero_residual_unchecked(p),
    })
}

/// Correction and eigenvalue shift for a given `t`. `t` is taken as given so
/// that inconsistent trial parameters can be probed.
pub fn trial_split(p: &PotentialParams, t: &TrialParams) -> TrialSplit {
    let n = p.dim();
    let (g, c, m) = (p.g, t.c, t.m);
    TrialSplit {
        e0: 0.5 * p.big_a * g * g * p.beta + 2.0 * m * g - n * c + 4.0 * m * c,
        h_inv_sq: 2.0 * m * (m + 1.0),
        h_inv: (n - 2.0) * m - 2.0 * m * m - 2.0 * m * g - 4.0 * m * c,
    }
}

fn m_zero_residual_unchecked(p: &PotentialParams) -> f64 {
    let diff = p.alpha - p.big_a;
    p.g * (p.beta - p.alpha * p.big_a) - 0.25 * p.g * diff * diff + p.dim() + 2.0
}

/// `g(β − αA) − ¼g(α − A)² + N + 2`, which is `4m`. Zero iff the trial
/// function is the exact groundstate.
pub fn m_zero_residual(p: &PotentialParams) -> Result<f64> {
    p.require_confining()?;
    Ok(m_zero_residual_unchecked(p))
}

/// `½Ag²β − Nc` with `c = (α − A)g/4`. Zero iff `E₀ = 0` given `m = 0`.
pub fn zero_energy_residual(p: &PotentialParams) -> Result<f64> {
    p.require_confining()?;
    let c = 0.25 * (p.alpha - p.big_a) * p.g;
    Ok(0.5 * p.big_a * p.g * p.g * p.beta - p.dim() * c)
}

fn m_zero_scale(p: &PotentialParams) -> f64 {
    let diff = p.alpha - p.big_a;
    [
        1.0,
        (p.g * p.beta).abs(),
        (p.g * p.alpha * p.big_a).abs(),
        0.25 * p.g * diff * diff,
        p.dim() + 2.0,
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

fn zero_energy_scale(p: &PotentialParams) -> f64 {
    let c = 0.25 * (p.alpha - p.big_a) * p.g;
    [
        1.0,
        (0.5 * p.big_a * p.g * p.g * p.beta).abs(),
        (p.dim() * c).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

pub fn m_zero_satisfied(p: &PotentialParams) -> Result<bool> {
    Ok(m_zero_residual(p)?.abs() <= CONSTRAINT_TOL * m_zero_scale(p))
}

pub fn zero_energy_satisfied(p: &PotentialParams) -> Result<bool> {
    Ok(zero_energy_residual(p)?.abs() <= CONSTRAINT_TOL * zero_energy_scale(p))
}
