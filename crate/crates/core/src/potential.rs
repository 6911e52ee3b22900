//! The generalized sombrero potential family
//!
//! `V(r) = ½ g² (r⁴ − α r² + β)(r² + A)` in `N` spatial dimensions, together
//! with its two reparametrizations: the shape/shift ratios `(λ, η)` with
//! `α² = 4λβ`, `A = ηα`, and the well form `(r₀², μ, η)` with `α = 2r₀²`,
//! `β = r₀⁴(1 − μ)`, `A = ηα`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical inputs of the potential. All quantities are dimensionless.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    pub g: f64,
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "A")]
    pub big_a: f64,
    #[serde(rename = "N")]
    pub n_dim: u32,
}

impl PotentialParams {
    pub fn new(g: f64, alpha: f64, beta: f64, big_a: f64, n_dim: u32) -> Result<Self> {
        let p = Self {
            g,
            alpha,
            beta,
            big_a,
            n_dim,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks finiteness, `g ≥ 0` and `N ≥ 1`. Solver paths additionally
    /// call [`PotentialParams::require_confining`].
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("g", self.g),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("A", self.big_a),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        if self.g < 0.0 {
            return Err(Error::NonPositiveCoupling(self.g));
        }
        if self.n_dim < 1 {
            return Err(Error::InvalidDimension(self.n_dim));
        }
        Ok(())
    }

    pub fn require_confining(&self) -> Result<()> {
        self.validate()?;
        if self.g <= 0.0 {
            return Err(Error::NonPositiveCoupling(self.g));
        }
        Ok(())
    }

    pub fn dim(&self) -> f64 {
        f64::from(self.n_dim)
    }

    /// `V(r)`, evaluated exactly as the factored product.
    pub fn eval(&self, r: f64) -> f64 {
        eval_potential(self, r)
    }

    /// `V` as a function of `x = r²`.
    pub fn eval_r2(&self, x: f64) -> f64 {
        0.5 * self.g * self.g * (x * x - self.alpha * x + self.beta) * (x + self.big_a)
    }

    pub fn to_jackiw_form(&self) -> Result<JackiwForm> {
        to_jackiw_form(self)
    }

    /// `(λ, η)` with `α² = 4λβ`, `A = ηα`. Undefined when `α = 0` or `β = 0`.
    pub fn to_lambda_form(&self) -> Option<LambdaForm> {
        if self.alpha == 0.0 || self.beta == 0.0 {
            return None;
        }
        Some(LambdaForm {
            lambda: self.alpha * self.alpha / (4.0 * self.beta),
            eta: self.big_a / self.alpha,
        })
    }
}

/// Shape ratio `λ` (`α² = 4λβ`) and shift ratio `η` (`A = ηα`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaForm {
    pub lambda: f64,
    pub eta: f64,
}

/// Well form of the potential, `V = ½g²[(r² − r₀²)² − μr₀⁴](r² − 2ηr₀²)`
/// up to the sign convention of the shift (`A = ηα`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JackiwForm {
    pub r0_sq: f64,
    pub mu: f64,
    pub eta: f64,
}

impl JackiwForm {
    pub fn new(r0_sq: f64, mu: f64, eta: f64) -> Result<Self> {
        let j = Self { r0_sq, mu, eta };
        j.validate()?;
        Ok(j)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("r0_sq", self.r0_sq), ("mu", self.mu), ("eta", self.eta)] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        if self.r0_sq <= 0.0 {
            return Err(Error::NonPositiveRadius(self.r0_sq));
        }
        Ok(())
    }

    /// `r₀⁴ = (N + 2)/3`, the reference radius used by the closed-form families.
    pub fn reference_r0_sq(n_dim: u32) -> f64 {
        ((f64::from(n_dim) + 2.0) / 3.0).sqrt()
    }
}

pub fn eval_potential(p: &PotentialParams, r: f64) -> f64 {
    let r2 = r * r;
    0.5 * p.g * p.g * (r2 * r2 - p.alpha * r2 + p.beta) * (r2 + p.big_a)
}

pub fn from_jackiw_form(j: &JackiwForm, g: f64, n_dim: u32) -> Result<PotentialParams> {
    j.validate()?;
    let alpha = 2.0 * j.r0_sq;
    let beta = j.r0_sq * j.r0_sq * (1.0 - j.mu);
    PotentialParams::new(g, alpha, beta, j.eta * alpha, n_dim)
}

pub fn to_jackiw_form(p: &PotentialParams) -> Result<JackiwForm> {
    if !(p.alpha > 0.0) {
        return Err(Error::NoJackiwForm(p.alpha));
    }
    let r0_sq = 0.5 * p.alpha;
    Ok(JackiwForm {
        r0_sq,
        mu: 1.0 - p.beta / (r0_sq * r0_sq),
        eta: p.big_a / p.alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn worked() -> PotentialParams {
        let alpha = 12f64.sqrt();
        PotentialParams::new(1.5, alpha, 2.0, alpha / 3.0, 3).unwrap()
    }

    #[test]
    fn origin_value_of_worked_example() {
        assert_relative_eq!(worked().eval(0.0), 2.598_076_2, epsilon = 1e-7);
        let p = worked();
        assert_relative_eq!(
            p.eval(0.0),
            0.5 * p.g * p.g * p.beta * p.big_a,
            epsilon = 1e-15
        );
    }

    #[test]
    fn trivial_values() {
        let zero = PotentialParams::new(0.0, 1.3, -0.4, 2.2, 3).unwrap();
        for r in [0.0, 0.5, 3.0, 40.0] {
            assert_eq!(zero.eval(r), 0.0);
        }
        let bare = PotentialParams::new(1.0, 0.0, 0.0, 0.0, 3).unwrap();
        assert_eq!(bare.eval(1.0), 0.5);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(PotentialParams::new(-1.0, 0.0, 0.0, 0.0, 3).is_err());
        assert!(PotentialParams::new(1.0, f64::NAN, 0.0, 0.0, 3).is_err());
        assert_eq!(
            PotentialParams::new(1.0, 0.0, 0.0, 0.0, 0),
            Err(Error::InvalidDimension(0))
        );
        let zero_g = PotentialParams::new(0.0, 1.0, 1.0, 1.0, 3).unwrap();
        assert!(zero_g.require_confining().is_err());
    }

    #[test]
    fn jackiw_form_examples() {
        let r0_sq = (5.0f64 / 3.0).sqrt();
        let p = from_jackiw_form(&JackiwForm::new(r0_sq, 0.0, 1.0).unwrap(), 1.0, 3).unwrap();
        assert_relative_eq!(p.alpha, 2.581_988_9, epsilon = 1e-7);
        assert_relative_eq!(p.beta, 1.666_666_7, epsilon = 1e-7);
        assert_relative_eq!(p.big_a, 2.581_988_9, epsilon = 1e-7);

        let p = from_jackiw_form(&JackiwForm::new(1.0, 1.0, 0.0).unwrap(), 1.0, 3).unwrap();
        assert_eq!((p.alpha, p.beta, p.big_a), (2.0, 0.0, 0.0));

        let p = from_jackiw_form(
            &JackiwForm::new(1.290_994_4, 0.770_765, 0.797_005).unwrap(),
            1.0,
            3,
        )
        .unwrap();
        assert_relative_eq!(p.alpha, 2.581_988_9, epsilon = 1e-7);
        assert_relative_eq!(p.beta, 0.382_058_3, epsilon = 1e-7);
        assert_relative_eq!(p.big_a, 2.057_858_0, epsilon = 1e-7);

        assert_eq!(
            JackiwForm::new(0.0, 0.0, 0.0),
            Err(Error::NonPositiveRadius(0.0))
        );
        assert!(JackiwForm::new(-1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn inverse_jackiw_form() {
        let j = PotentialParams::new(1.0, 2.0, 0.0, 0.0, 3)
            .unwrap()
            .to_jackiw_form()
            .unwrap();
        assert_eq!((j.r0_sq, j.mu, j.eta), (1.0, 1.0, 0.0));

        let j = PotentialParams::new(1.0, 2.581_988_9, 1.666_666_7, 2.581_988_9, 3)
            .unwrap()
            .to_jackiw_form()
            .unwrap();
        assert_relative_eq!(j.r0_sq, 1.290_994_4, epsilon = 1e-7);
        assert_relative_eq!(j.mu, 0.0, epsilon = 1e-7);
        assert_relative_eq!(j.eta, 1.0, epsilon = 1e-12);

        let bad = PotentialParams::new(1.0, -1.0, 1.0, 1.0, 3).unwrap();
        assert_eq!(bad.to_jackiw_form(), Err(Error::NoJackiwForm(-1.0)));
        let flat = PotentialParams::new(1.0, 0.0, 1.0, 1.0, 3).unwrap();
        assert!(flat.to_jackiw_form().is_err());
    }

    #[test]
    fn lambda_form_of_worked_example() {
        let l = worked().to_lambda_form().unwrap();
        assert_relative_eq!(l.lambda, 1.5, epsilon = 1e-14);
        assert_relative_eq!(l.eta, 1.0 / 3.0, epsilon = 1e-14);
    }

    #[test]
    fn sextic_leading_behaviour() {
        let p = worked();
        let big = 50.0;
        assert!(p.eval(big) > 0.0);
        for r in [big, 10.0 * big] {
            let ratio = p.eval(r) / r.powi(6);
            assert!(
                (ratio / (0.5 * p.g * p.g) - 1.0).abs() < 0.01,
                "r={r} ratio={ratio}"
            );
        }
    }

    proptest! {
        #[test]
        fn jackiw_round_trip(
            r0_sq in 1e-3f64..10.0,
            mu in -5.0f64..5.0,
            eta in -3.0f64..3.0,
            g in 0.1f64..4.0,
            n in 1u32..10,
        ) {
            let j = JackiwForm::new(r0_sq, mu, eta).unwrap();
            let back = from_jackiw_form(&j, g, n).unwrap().to_jackiw_form().unwrap();
            prop_assert!((back.r0_sq - j.r0_sq).abs() <= 1e-14 * j.r0_sq.abs());
            prop_assert!((back.mu - j.mu).abs() <= 1e-14 * j.mu.abs().max(1.0));
            prop_assert!((back.eta - j.eta).abs() <= 1e-14 * j.eta.abs().max(1.0));
        }

        #[test]
        fn depends_on_r_only_through_r_squared(
            g in 0.0f64..3.0,
            alpha in -3.0f64..3.0,
            beta in -3.0f64..3.0,
            big_a in -3.0f64..3.0,
            r in 0.0f64..6.0,
        ) {
            let p = PotentialParams::new(g, alpha, beta, big_a, 3).unwrap();
            let direct = p.eval(r);
            let via_r2 = p.eval_r2(r * r);
            prop_assert!((direct - via_r2).abs() <= 1e-15 * direct.abs().max(1.0));
        }
    }
}
