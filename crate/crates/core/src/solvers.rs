//! Solvers for the parameter sets that give an exact groundstate with zero
//! eigenvalue (`m = 0` and `E₀ = 0`), plus the two-branch `m = 0` family at
//! fixed `r₀⁴ = (N+2)/3`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{from_jackiw_form, JackiwForm, LambdaForm, PotentialParams};
use crate::roots::{find_bracketed_roots, Polynomial, POLISH_TOL};
use crate::trial::{
    derive_trial, m_zero_residual, m_zero_satisfied, trial_split, zero_energy_residual,
    zero_energy_satisfied, TrialParams,
};

pub const DEFAULT_SUBDIVISIONS: usize = 64;
pub const ROOT_TOL: f64 = 1e-14;

/// A potential whose trial function is its exact groundstate with `E = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroModeSolution {
    pub potential: PotentialParams,
    pub trial: TrialParams,
    pub lambda_form: Option<LambdaForm>,
    pub jackiw_form: Option<JackiwForm>,
}

impl ZeroModeSolution {
    /// Checks both constraints and fills in the trial parameters.
    pub fn new(
        potential: PotentialParams,
        lambda_form: Option<LambdaForm>,
        jackiw_form: Option<JackiwForm>,
    ) -> Result<Self> {
        let trial = derive_trial(&potential)?;
        if !(m_zero_satisfied(&potential)? && zero_energy_satisfied(&potential)?) {
            return Err(Error::ConstraintViolated {
                m_residual: m_zero_residual(&potential)?,
                energy_residual: zero_energy_residual(&potential)?,
            });
        }
        Ok(Self {
            potential,
            trial,
            lambda_form,
            jackiw_form,
        })
    }
}

/// One root of the `m = 0` quadratic at `g = 1`, `β = r₀⁴`, `A = 2r₀²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JackiwBranch {
    pub potential: PotentialParams,
    pub trial: TrialParams,
    pub r0_sq: f64,
    pub e0: f64,
}

/// `λNη³ + λNη² + (N + 4 − λN)η + N(1 − λ)`.
pub fn lambda_cubic(lambda: f64, n_dim: u32) -> Polynomial {
    let n = f64::from(n_dim);
    Polynomial::from_descending(&[
        lambda * n,
        lambda * n,
        n + 4.0 - lambda * n,
        n * (1.0 - lambda),
    ])
}

/// All roots of the `(λ, η)` cubic strictly inside `(0, 1)`, ascending.
pub fn solve_eta(lambda: f64, n_dim: u32) -> Result<Vec<f64>> {
    if !lambda.is_finite() {
        return Err(Error::NonFinite {
            name: "lambda",
            value: lambda,
        });
    }
    if n_dim < 1 {
        return Err(Error::InvalidDimension(n_dim));
    }
    let cubic = lambda_cubic(lambda, n_dim);
    let roots = find_bracketed_roots(|x| cubic.eval(x), 0.0, 1.0, DEFAULT_SUBDIVISIONS, ROOT_TOL)?;
    let scale = cubic.max_coefficient().max(1.0);
    Ok(roots
        .into_iter()
        .filter(|&eta| eta > 0.0 && eta < 1.0 && cubic.eval(eta).abs() <= POLISH_TOL * scale)
        .collect())
}

/// Reconstructs `β = N(1 − η)/(2ηg)`, `α = +√(4λβ)`, `A = ηα`.
pub fn params_from_lambda(g: f64, lambda: f64, eta: f64, n_dim: u32) -> Result<ZeroModeSolution> {
    if !(g > 0.0) || !g.is_finite() {
        return Err(Error::NonPositiveCoupling(g));
    }
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::EtaOutOfRange(eta));
    }
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::NonPositiveLambda(lambda));
    }
    let n = f64::from(n_dim);
    let beta = n * (1.0 - eta) / (2.0 * eta * g);
    if !(beta > 0.0) {
        return Err(Error::NonPositiveBeta(beta));
    }
    let alpha = (4.0 * lambda * beta).sqrt();
    let potential = PotentialParams::new(g, alpha, beta, eta * alpha, n_dim)?;
    ZeroModeSolution::new(potential, Some(LambdaForm { lambda, eta }), None)
}

/// Every zero-mode solution for a given `(g, λ, N)`.
pub fn solutions_from_lambda(g: f64, lambda: f64, n_dim: u32) -> Result<Vec<ZeroModeSolution>> {
    solve_eta(lambda, n_dim)?
        .into_iter()
        .map(|eta| params_from_lambda(g, lambda, eta, n_dim))
        .collect()
}

/// Both roots of `α² + 4r₀²α − 12r₀⁴ = 0`: `α = 2r₀²` (`c = 0`,
/// `E₀ = r₀⁶`) and `α = −6r₀²` (`c = −2r₀²`, `E₀ = r₀⁶ + 2Nr₀²`).
pub fn jackiw_solutions(n_dim: u32) -> Result<[JackiwBranch; 2]> {
    if n_dim < 1 {
        return Err(Error::InvalidDimension(n_dim));
    }
    let r0_sq = JackiwForm::reference_r0_sq(n_dim);
    let r0_4 = r0_sq * r0_sq;
    let (b, c) = (4.0 * r0_sq, -12.0 * r0_4);
    let q = -0.5 * (b + b.signum() * (b * b - 4.0 * c).sqrt());
    let (large, small) = (q, c / q);
    let branch = |alpha: f64| -> Result<JackiwBranch> {
        let potential = PotentialParams::new(1.0, alpha, r0_4, 2.0 * r0_sq, n_dim)?;
        let trial = derive_trial(&potential)?;
        let e0 = trial_split(&potential, &trial).e0;
        Ok(JackiwBranch {
            potential,
            trial,
            r0_sq,
            e0,
        })
    };
    // positive root first
    Ok([branch(small.max(large))?, branch(small.min(large))?])
}

/// The `(η, μ)` cubic normalized to leading coefficient 2:
/// `2η³ + 4η² + 2(g − 3 + N/(2r₀⁴))/g · η − N/(g r₀⁴)`.
pub fn eta_mu_cubic(g: f64, n_dim: u32) -> Polynomial {
    let n = f64::from(n_dim);
    let r0_4 = (n + 2.0) / 3.0;
    Polynomial::from_descending(&[
        2.0,
        4.0,
        2.0 * (g - 3.0 + n / (2.0 * r0_4)) / g,
        -n / (g * r0_4),
    ])
}

/// Solves the `(r₀², μ, η)` family at `r₀⁴ = (N+2)/3` for a zero mode.
pub fn solve_eta_mu(g: f64, n_dim: u32) -> Result<ZeroModeSolution> {
    if !(g > 0.0) || !g.is_finite() {
        return Err(Error::NonPositiveCoupling(g));
    }
    if n_dim < 1 {
        return Err(Error::InvalidDimension(n_dim));
    }
    let cubic = eta_mu_cubic(g, n_dim);
    let roots = find_bracketed_roots(|x| cubic.eval(x), 0.0, 1.0, DEFAULT_SUBDIVISIONS, ROOT_TOL)?;
    let eta = roots
        .into_iter()
        .find(|&x| x > 0.0 && x < 1.0)
        .ok_or_else(|| {
            Error::NoRoot(format!(
                "cubic {:?} has no eta root for g = {g}, N = {n_dim} (one exists only for g > 3/4)",
                cubic.descending()
            ))
        })?;
    let mu = 1.0 - (1.0 + eta).powi(2) + 3.0 / g;
    let jackiw = JackiwForm::new(JackiwForm::reference_r0_sq(n_dim), mu, eta)?;
    let potential = from_jackiw_form(&jackiw, g, n_dim)?;
    ZeroModeSolution::new(potential, potential.to_lambda_form(), Some(jackiw))
}

/// `c = ½(1 − η) g r₀²`, the quadratic exponent of the `(η, μ)` solution.
pub fn eta_mu_c(g: f64, eta: f64, r0_sq: f64) -> f64 {
    0.5 * (1.0 - eta) * g * r0_sq
}
