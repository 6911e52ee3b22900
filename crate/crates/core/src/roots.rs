//! Deterministic bracketing root finder shared by the constraint solvers.

use crate::error::{Error, Result};

/// Relative `|f|` a polished root must reach, scaled by the largest
/// coefficient magnitude of the polynomial being solved.
pub const POLISH_TOL: f64 = 1e-13;

const MAX_BISECTIONS: usize = 200;
const MAX_SECANT_STEPS: usize = 60;

/// Real polynomial with coefficients in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial(pub Vec<f64>);

impl Polynomial {
    /// Builds from coefficients in descending order (`c₀xⁿ + … + cₙ`).
    pub fn from_descending(coeffs: &[f64]) -> Self {
        Self(coeffs.iter().rev().copied().collect())
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn descending(&self) -> Vec<f64> {
        self.0.iter().rev().copied().collect()
    }

    pub fn max_coefficient(&self) -> f64 {
        self.0.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

/// Finds every sign change of `f` on `[lo, hi]`.
///
/// The interval is split into `subdivisions` equal panels; each panel whose
/// endpoint values differ in sign is bisected until its width is below `tol`
/// and the midpoint is then polished with safeguarded secant steps. Exact
/// zeros on a panel boundary are reported once. Touching roots (no sign
/// change) are not detected. Output is sorted and identical for identical
/// inputs.
pub fn find_bracketed_roots<F>(
    f: F,
    lo: f64,
    hi: f64,
    subdivisions: usize,
    tol: f64,
) -> Result<Vec<f64>>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if subdivisions < 2 {
        return Err(Error::TooFewSubdivisions {
            min: 2,
            got: subdivisions,
        });
    }
    let width = (hi - lo) / subdivisions as f64;
    let nodes: Vec<f64> = (0..=subdivisions)
        .map(|k| {
            if k == subdivisions {
                hi
            } else {
                lo + k as f64 * width
            }
        })
        .collect();
    let values: Vec<f64> = nodes.iter().map(|&x| f(x)).collect();

    let mut roots = Vec::new();
    for k in 0..subdivisions {
        let (x0, x1) = (nodes[k], nodes[k + 1]);
        let (f0, f1) = (values[k], values[k + 1]);
        if f0 == 0.0 {
            roots.push(x0);
            continue;
        }
        if f1 == 0.0 || f0.signum() == f1.signum() {
            continue;
        }
        let (a, b) = bisect(&f, x0, x1, f0, tol);
        roots.push(polish(&f, a, b));
    }
    if values[subdivisions] == 0.0 {
        roots.push(hi);
    }
    roots.dedup_by(|x, y| (*x - *y).abs() <= tol);
    Ok(roots)
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> (f64, f64) {
    for _ in 0..MAX_BISECTIONS {
        if (b - a).abs() < tol {
            break;
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return (mid, mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// Secant iteration from the bracket endpoints, never leaving `[a, b]`.
fn polish<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    if a == b {
        return a;
    }
    let (lo, hi) = (a, b);
    let (mut x0, mut x1) = (a, b);
    let (mut f0, mut f1) = (f(a), f(b));
    let mut best = if f0.abs() <= f1.abs() {
        (x0, f0)
    } else {
        (x1, f1)
    };
    for _ in 0..MAX_SECANT_STEPS {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !(x2 >= lo && x2 <= hi) {
            break;
        }
        let f2 = f(x2);
        if f2.abs() < best.1.abs() {
            best = (x2, f2);
        }
        if f2 == 0.0 || (x2 - x1).abs() <= 4.0 * f64::EPSILON * x2.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    best.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn eta_mu_cubic(x: f64) -> f64 {
        2.0 * x * x * x + 4.0 * x * x - 2.2 * x - 1.8
    }

    #[test]
    fn square_root_of_two() {
        let roots = find_bracketed_roots(|x| x * x - 2.0, 0.0, 2.0, 64, 1e-12).unwrap();
        assert_eq!(roots.len(), 1);
        assert_relative_eq!(roots[0], 2f64.sqrt(), epsilon = 1e-15);
        assert!((roots[0] * roots[0] - 2.0).abs() < 1e-13);
    }

    #[test]
    fn eta_mu_polynomial() {
        let roots = find_bracketed_roots(eta_mu_cubic, 0.0, 1.0, 64, 1e-12).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - 0.797_005_0).abs() < 1e-6);
        assert!(eta_mu_cubic(roots[0]).abs() < 1e-13 * 4.0);
    }

    #[test]
    fn no_sign_change() {
        assert!(find_bracketed_roots(|x| x * x + 1.0, -1.0, 1.0, 64, 1e-12)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn rejects_bad_interval() {
        assert!(matches!(
            find_bracketed_roots(|x| x, 1.0, 1.0, 64, 1e-12),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(find_bracketed_roots(|x| x, 2.0, 1.0, 64, 1e-12).is_err());
        assert!(find_bracketed_roots(|x| x, 0.0, 1.0, 1, 1e-12).is_err());
    }

    #[test]
    fn boundary_root_counted_once() {
        // root at 0.5, which is a panel boundary for 4 panels on [0, 1]
        let roots = find_bracketed_roots(|x| x - 0.5, 0.0, 1.0, 4, 1e-12).unwrap();
        assert_eq!(roots, vec![0.5]);
        let roots = find_bracketed_roots(|x| x * (x - 1.0), 0.0, 1.0, 8, 1e-12).unwrap();
        assert_eq!(roots, vec![0.0, 1.0]);
    }

    #[test]
    fn several_roots_sorted() {
        let p = Polynomial::from_descending(&[1.0, -0.6, 0.11, -0.006]); // (x−.1)(x−.2)(x−.3)
        let roots = find_bracketed_roots(|x| p.eval(x), -1.0, 1.0, 64, 1e-12).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, want) in roots.iter().zip([0.1, 0.2, 0.3]) {
            assert_relative_eq!(*r, want, epsilon = 1e-13);
        }
    }

    #[test]
    fn stable_under_refinement() {
        let p = Polynomial::from_descending(&[30.0, 30.0, -23.0, -27.0]);
        let base = find_bracketed_roots(|x| p.eval(x), 0.0, 1.0, 64, 1e-12).unwrap();
        for n in [65, 128, 333, 1024] {
            let other = find_bracketed_roots(|x| p.eval(x), 0.0, 1.0, n, 1e-12).unwrap();
            assert_eq!(other.len(), base.len());
            for (a, b) in other.iter().zip(&base) {
                assert!((a - b).abs() < 1e-14, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn polynomial_helpers() {
        let p = Polynomial::from_descending(&[2.0, 4.0, -2.2, -1.8]);
        assert_eq!(p.0, vec![-1.8, -2.2, 4.0, 2.0]);
        assert_eq!(p.descending(), vec![2.0, 4.0, -2.2, -1.8]);
        assert_eq!(p.max_coefficient(), 4.0);
        assert_relative_eq!(p.eval(1.0), 2.0, epsilon = 1e-15);
    }
}
