//! Evaluation of the trial wavefunction `ψ = exp(−S₀)`.
//!
//! Everything that involves derivatives is done on `S₀` directly; `ψ` itself
//! is only exponentiated at the end.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::PotentialParams;
use crate::trial::{TrialParams, TrialSplit};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrialWavefunction {
    pub trial: TrialParams,
    pub potential: PotentialParams,
}

/// Where `ψ` peaks. `maxima` holds every local maximum of `ψ` in `r ≥ 0`
/// (`0.0` when the origin is one); `valley_at_origin` is set when the origin
/// is a local minimum of `ψ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaximaLocation {
    pub maxima: Vec<f64>,
    pub valley_at_origin: bool,
    /// radius of the largest maximum
    pub global_max: f64,
}

const NORM_TAIL: f64 = 80.0;
const NORM_REL_TOL: f64 = 1e-10;
const NORM_START_PANELS: usize = 64;
const NORM_MAX_DOUBLINGS: usize = 22;

impl TrialWavefunction {
    pub fn new(trial: TrialParams, potential: PotentialParams) -> Self {
        Self { trial, potential }
    }

    pub fn eval_s0(&self, r: f64) -> f64 {
        let TrialParams { a, c, m } = self.trial;
        let r2 = r * r;
        a * r2 * r2 - c * r2 + m * r2.ln_1p()
    }

    /// `exp(−S₀)`; underflows to 0 instead of failing.
    pub fn eval_psi(&self, r: f64) -> f64 {
        (-self.eval_s0(r)).exp()
    }

    /// `(S₀′, S₀″)` in closed form.
    pub fn derivatives_s0(&self, r: f64) -> (f64, f64) {
        let TrialParams { a, c, m } = self.trial;
        let r2 = r * r;
        let u = r2 + 1.0;
        let d1 = 4.0 * a * r2 * r - 2.0 * c * r + 2.0 * m * r / u;
        let d2 = 12.0 * a * r2 - 2.0 * c + 2.0 * m * (1.0 - r2) / (u * u);
        (d1, d2)
    }

    /// `S₀′² − ((N−1)/r) S₀′ − S₀″`, for `r > 0`.
    pub fn riccati_lhs(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::NonPositiveRadiusArgument(r));
        }
        let (d1, d2) = self.derivatives_s0(r);
        Ok(d1 * d1 - (self.potential.dim() - 1.0) / r * d1 - d2)
    }

    /// The `r → 0` limit of [`riccati_lhs`](Self::riccati_lhs), using
    /// `S₀′(r)/r → S₀″(0) = 2m − 2c`.
    pub fn riccati_lhs_at_origin(&self) -> f64 {
        let curvature = 2.0 * self.trial.m - 2.0 * self.trial.c;
        -self.potential.dim() * curvature
    }

    /// `S₀′² − ((N−1)/r)S₀′ − S₀″ − 2(V(r) − e)`. Zero for an exact
    /// eigenfunction with eigenvalue `e`.
    pub fn schrodinger_residual(&self, e: f64, r: f64) -> Result<f64> {
        Ok(self.riccati_lhs(r)? - 2.0 * (self.potential.eval(r) - e))
    }

    pub fn schrodinger_residual_at_origin(&self, e: f64) -> f64 {
        self.riccati_lhs_at_origin() - 2.0 * (self.potential.eval(0.0) - e)
    }

    /// Same residual against the shifted potential `V − h` at `e = E₀`.
    pub fn shifted_residual(&self, split: &TrialSplit, r: f64) -> Result<f64> {
        Ok(self.riccati_lhs(r)? - 2.0 * (self.potential.eval(r) - split.h_at(r) - split.e0))
    }

    /// Stationary structure of `ψ`.
    ///
    /// Off-center stationary points solve `S₀′(r)/r = 0`, which in `x = r²`
    /// is the quadratic `4a x² + (4a − 2c) x + (2m − 2c) = 0`; for `m = 0` its
    /// positive root reduces to `x = c/(2a) = 2c/g`.
    pub fn maxima_radius(&self) -> MaximaLocation {
        let TrialParams { a, c, m } = self.trial;
        let mut maxima = Vec::new();

        let origin_curvature = 2.0 * m - 2.0 * c;
        let origin_is_max = if origin_curvature != 0.0 {
            origin_curvature > 0.0
        } else {
            4.0 * a - 2.0 * m > 0.0
        };
        if origin_is_max {
            maxima.push(0.0);
        }

        let offcenter: Vec<f64> = if m == 0.0 {
            if c > 0.0 && a > 0.0 {
                vec![(c / (2.0 * a)).sqrt()]
            } else {
                Vec::new()
            }
        } else {
            positive_quadratic_roots(4.0 * a, 4.0 * a - 2.0 * c, 2.0 * m - 2.0 * c)
                .into_iter()
                .map(f64::sqrt)
                .collect()
        };
        for r in offcenter {
            let (_, d2) = self.derivatives_s0(r);
            if d2 > 0.0 {
                maxima.push(r);
            }
        }

        let global_max = maxima
            .iter()
            .copied()
            .min_by(|x, y| self.eval_s0(*x).total_cmp(&self.eval_s0(*y)))
            .unwrap_or(0.0);
        MaximaLocation {
            maxima,
            valley_at_origin: !origin_is_max,
            global_max,
        }
    }

    /// `∫₀^∞ ψ(r)² r^(N−1) dr` by composite Simpson with panel doubling.
    pub fn norm_squared(&self) -> Result<f64> {
        let a = self.trial.a;
        if !(a > 0.0) {
            return Err(Error::NonNormalizable(a));
        }
        let peak = self.maxima_radius().global_max;
        let s_ref = self.eval_s0(peak).min(0.0);
        let n = self.potential.dim();

        let tail = |r: f64| 2.0 * (self.eval_s0(r) - s_ref) - (n - 1.0) * r.max(1.0).ln();
        let mut upper = peak.max(1.0);
        while tail(upper) <= NORM_TAIL {
            upper *= 1.25;
        }

        let integrand = |r: f64| {
            let weight = if self.potential.n_dim == 1 {
                1.0
            } else {
                r.powi(self.potential.n_dim as i32 - 1)
            };
            (-2.0 * (self.eval_s0(r) - s_ref)).exp() * weight
        };

        let mut panels = NORM_START_PANELS;
        let mut previous = simpson(&integrand, upper, panels);
        for _ in 0..NORM_MAX_DOUBLINGS {
            panels *= 2;
            let current = simpson(&integrand, upper, panels);
            if (current - previous).abs() <= NORM_REL_TOL * current.abs() {
                return Ok(current * (-2.0 * s_ref).exp());
            }
            previous = current;
        }
        Ok(previous * (-2.0 * s_ref).exp())
    }
}

fn simpson<F: Fn(f64) -> f64>(f: &F, upper: f64, panels: usize) -> f64 {
    let h = upper / panels as f64;
    let mut sum = f(0.0) + f(upper);
    for k in 1..panels {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(k as f64 * h);
    }
    sum * h / 3.0
}

/// Strictly positive real roots of `p x² + q x + s` (`p > 0`), ascending.
fn positive_quadratic_roots(p: f64, q: f64, s: f64) -> Vec<f64> {
    if !(p > 0.0) {
        return if q != 0.0 && -s / q > 0.0 {
            vec![-s / q]
        } else {
            Vec::new()
        };
    }
    let disc = q * q - 4.0 * p * s;
    if disc < 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    // stable pair: one root from the sign-matched branch, the other from Vieta
    let big = -0.5 * (q + q.signum() * sq);
    let mut roots = if big == 0.0 {
        vec![0.0]
    } else {
        vec![big / p, s / big]
    };
    roots.retain(|x| *x > 0.0);
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    roots
}
