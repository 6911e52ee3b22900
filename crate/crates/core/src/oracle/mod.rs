//! Independent numerical groundstate of the radial Schrödinger operator
//!
//! `H = −½ r^(1−N) d/dr (r^(N−1) d/dr) + V(r)` on `[0, r_max]` with
//! `ψ′(0) = 0` and `ψ(r_max) = 0`.
//!
//! The operator is discretized in flux form on a cell-centered grid
//! `r_j = (j + ½)Δ`, so the coordinate singularity at the origin is never
//! evaluated: the face at `r = 0` simply carries no flux. A similarity
//! transform with `diag(r_j^((N−1)/2))` makes the matrix symmetric
//! tridiagonal. The lowest eigenvalue comes from Sturm bisection at `Δ` and
//! `Δ/2`, combined by Richardson extrapolation to cancel the `O(Δ²)` error.
//!
//! Nothing here touches the closed-form trial machinery; only the potential
//! is shared.

mod tridiag;
mod verify;

pub use tridiag::SymTridiagonal;
pub use verify::{verify_potential, verify_solution, Check, VerificationReport, VerifyOptions};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::PotentialParams;

pub const MIN_GRID_POINTS: usize = 16;
pub const DEFAULT_R_MAX: f64 = 8.0;
pub const DEFAULT_GRID_POINTS: usize = 2000;
/// Relative (to [`energy_scale`]) width the Sturm bisection must reach.
pub const BISECTION_TOL: f64 = 1e-12;
pub const INVERSE_ITERATION_MAX: usize = 50;
pub const INVERSE_ITERATION_TOL: f64 = 1e-12;
/// Relative agreement between `r_max` and `1.25 r_max` required by [`groundstate_auto`].
pub const EXTENSION_TOL: f64 = 1e-9;
pub const MAX_EXTENSIONS: usize = 3;

/// Cell-centered radial grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    pub r_max: f64,
    pub n_points: usize,
}

impl RadialGrid {
    pub fn new(r_max: f64, n_points: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::InvalidExtent(r_max));
        }
        if n_points < MIN_GRID_POINTS {
            return Err(Error::GridTooSmall {
                min: MIN_GRID_POINTS,
                got: n_points,
            });
        }
        Ok(Self { r_max, n_points })
    }

    pub fn spacing(&self) -> f64 {
        self.r_max / self.n_points as f64
    }

    pub fn point(&self, j: usize) -> f64 {
        (j as f64 + 0.5) * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|j| self.point(j)).collect()
    }

    /// Same extent, half the spacing.
    pub fn refined(&self) -> Self {
        Self {
            r_max: self.r_max,
            n_points: 2 * self.n_points,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    /// Richardson-extrapolated groundstate energy.
    pub energy: f64,
    /// `ψ(r_j)` on `grid`, with `Σ ψ_j² r_j^(N−1) Δ = 1` and `ψ ≥ 0`.
    pub vector: Vec<f64>,
    /// The finer of the two grids.
    pub grid: RadialGrid,
    pub n_dim: u32,
    /// Raw eigenvalues at `Δ` and `Δ/2`.
    pub richardson_pair: (f64, f64),
}

impl EigenResult {
    pub fn points(&self) -> Vec<f64> {
        self.grid.points()
    }
}

fn radial_weight(r: f64, n_dim: u32) -> f64 {
    if n_dim == 1 {
        1.0
    } else {
        r.powi(n_dim as i32 - 1)
    }
}

/// Symmetric tridiagonal discretization of `H` for an arbitrary potential.
pub fn discretize_with<V: Fn(f64) -> f64>(
    potential: V,
    n_dim: u32,
    grid: &RadialGrid,
) -> SymTridiagonal {
    let n = grid.n_points;
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let face = |k: usize| {
        if k == 0 {
            0.0
        } else {
            radial_weight(k as f64 * h, n_dim)
        }
    };
    let weights: Vec<f64> = (0..n)
        .map(|j| radial_weight(grid.point(j), n_dim))
        .collect();

    let mut diag = Vec::with_capacity(n);
    for (j, w) in weights.iter().enumerate() {
        let inner = face(j);
        // Dirichlet at the outer face r_max via an antisymmetric ghost cell
        let outer = if j + 1 == n {
            2.0 * face(j + 1)
        } else {
            face(j + 1)
        };
        diag.push(0.5 * (inner + outer) * inv_h2 / w + potential(grid.point(j)));
    }
    let off = (0..n.saturating_sub(1))
        .map(|j| -0.5 * face(j + 1) * inv_h2 / (weights[j] * weights[j + 1]).sqrt())
        .collect();
    SymTridiagonal::new(diag, off)
}

/// Discretizes `V(r) − extra(r)`.
pub fn discretize(
    p: &PotentialParams,
    extra: Option<&dyn Fn(f64) -> f64>,
    grid: &RadialGrid,
) -> SymTridiagonal {
    match extra {
        Some(shift) => discretize_with(|r| p.eval(r) - shift(r), p.n_dim, grid),
        None => discretize_with(|r| p.eval(r), p.n_dim, grid),
    }
}

/// `max(1, |V(0)|, |V(r_max)|^(1/3))`.
pub fn energy_scale<V: Fn(f64) -> f64>(potential: &V, r_max: f64) -> f64 {
    1f64.max(potential(0.0).abs())
        .max(potential(r_max).abs().cbrt())
}

fn lowest_eigenvalue(op: &SymTridiagonal, scale: f64) -> f64 {
    op.smallest_eigenvalue(BISECTION_TOL * scale)
}

/// Groundstate of `H` for an arbitrary potential.
pub fn groundstate_with<V: Fn(f64) -> f64>(
    potential: V,
    n_dim: u32,
    r_max: f64,
    n_points: usize,
) -> Result<EigenResult> {
    if n_dim < 1 {
        return Err(Error::InvalidDimension(n_dim));
    }
    let coarse = RadialGrid::new(r_max, n_points)?;
    let fine = coarse.refined();
    let scale = energy_scale(&potential, r_max);

    let coarse_op = discretize_with(&potential, n_dim, &coarse);
    let fine_op = discretize_with(&potential, n_dim, &fine);
    let e_coarse = lowest_eigenvalue(&coarse_op, scale);
    let e_fine = lowest_eigenvalue(&fine_op, scale);
    if (e_coarse - e_fine).abs() > 0.1 * scale {
        return Err(Error::GridTooCoarse {
            coarse: e_coarse,
            fine: e_fine,
            scale,
        });
    }
    let energy = (4.0 * e_fine - e_coarse) / 3.0;

    let edge = potential(r_max);
    if edge < 10.0 * energy.abs() {
        return Err(Error::DomainTooShort {
            potential: edge,
            bound: 10.0 * energy.abs(),
        });
    }

    let shift = e_fine - 1e3 * BISECTION_TOL * scale;
    let symmetric =
        fine_op.inverse_iteration(shift, INVERSE_ITERATION_MAX, INVERSE_ITERATION_TOL)?;
    let h = fine.spacing();
    let norm = (symmetric.iter().map(|y| y * y).sum::<f64>() * h).sqrt();
    let vector = symmetric
        .iter()
        .enumerate()
        .map(|(j, y)| (y / norm / radial_weight(fine.point(j), n_dim).sqrt()).max(0.0))
        .collect();

    Ok(EigenResult {
        energy,
        vector,
        grid: fine,
        n_dim,
        richardson_pair: (e_coarse, e_fine),
    })
}

/// Groundstate of `V − extra` for a member of the potential family.
pub fn groundstate(
    p: &PotentialParams,
    extra: Option<&dyn Fn(f64) -> f64>,
    r_max: f64,
    n_points: usize,
) -> Result<EigenResult> {
    p.require_confining()?;
    match extra {
        Some(shift) => groundstate_with(|r| p.eval(r) - shift(r), p.n_dim, r_max, n_points),
        None => groundstate_with(|r| p.eval(r), p.n_dim, r_max, n_points),
    }
}

/// [`groundstate`] with domain extension: the extent grows by 1.25× (at fixed
/// spacing) until the energy at `r_max` and `1.25 r_max` agree to
/// [`EXTENSION_TOL`] relative to the energy scale, at most [`MAX_EXTENSIONS`] times.
pub fn groundstate_auto(
    p: &PotentialParams,
    extra: Option<&dyn Fn(f64) -> f64>,
    r_max: f64,
    n_points: usize,
) -> Result<EigenResult> {
    let spacing = r_max / n_points as f64;
    let mut current = groundstate(p, extra, r_max, n_points)?;
    let mut extent = r_max;
    for _ in 0..MAX_EXTENSIONS {
        let next_extent = 1.25 * extent;
        let next_points = (next_extent / spacing).round() as usize;
        let next = groundstate(p, extra, next_points as f64 * spacing, next_points)?;
        let scale = match extra {
            Some(shift) => energy_scale(&|r| p.eval(r) - shift(r), extent),
            None => energy_scale(&|r| p.eval(r), extent),
        };
        if (next.energy - current.energy).abs() <= EXTENSION_TOL * scale {
            return Ok(current);
        }
        current = next;
        extent = next_extent;
    }
    Ok(current)
}
