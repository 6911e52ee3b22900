//! Exact zero-eigenvalue groundstates of generalized sombrero potentials
//! `V(r) = ½g²(r⁴ − αr² + β)(r² + A)` in `N` dimensions.
//!
//! The closed-form side ([`trial`], [`solvers`], [`wavefunction`]) builds the
//! trial function `exp(−g r⁴/4 + c r² − m log(r²+1))` and solves for the
//! parameters that make it an exact groundstate with `E = 0`. The
//! [`oracle`] module solves the radial eigenproblem numerically and shares
//! nothing with that path except the potential itself.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod oracle;
pub mod potential;
pub mod roots;
pub mod solvers;
pub mod trial;
pub mod wavefunction;

pub use error::{Error, Result};
pub use oracle::{
    groundstate, groundstate_auto, groundstate_with, verify_potential, verify_solution,
    EigenResult, RadialGrid, VerificationReport, VerifyOptions,
};
pub use potential::{
    eval_potential, from_jackiw_form, to_jackiw_form, JackiwForm, LambdaForm, PotentialParams,
};
pub use roots::find_bracketed_roots;
pub use solvers::{
    jackiw_solutions, params_from_lambda, solutions_from_lambda, solve_eta, solve_eta_mu,
    JackiwBranch, ZeroModeSolution,
};
pub use trial::{
    derive_trial, m_zero_residual, trial_split, zero_energy_residual, TrialParams, TrialSplit,
};
pub use wavefunction::{MaximaLocation, TrialWavefunction};
