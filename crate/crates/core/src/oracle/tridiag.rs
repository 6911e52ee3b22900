//! Lowest eigenpair of a real symmetric tridiagonal matrix: Sturm-sequence
//! bisection for the eigenvalue, shifted inverse iteration for the vector.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    /// `off[i]` couples rows `i` and `i + 1`
    pub off: Vec<f64>,
}

/// Pivots smaller than this are nudged away from zero in the Sturm recurrence.
const PIVOT_GUARD: f64 = 1e-300;

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(
            off.len() + 1,
            diag.len().max(1),
            "off-diagonal must be one shorter than diagonal"
        );
        Self { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of `T − xI = LDLᵀ`).
    pub fn sturm_count(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 {
                0.0
            } else {
                self.off[i - 1] * self.off[i - 1] / q
            };
            q = self.diag[i] - x - coupling;
            if q.abs() < PIVOT_GUARD {
                q = -PIVOT_GUARD;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    pub fn gershgorin_lower(&self) -> f64 {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
                let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
                self.diag[i] - left - right
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Smallest eigenvalue, bracketed to width `< tol`.
    pub fn smallest_eigenvalue(&self, tol: f64) -> f64 {
        let mut lo = self.gershgorin_lower();
        // upper bound: smallest diagonal entry
        let mut hi = self.diag.iter().copied().fold(f64::INFINITY, f64::min);
        let mut bump = tol.max(f64::EPSILON * hi.abs().max(1.0));
        while self.sturm_count(hi) == 0 {
            hi += bump;
            bump *= 2.0;
        }
        if self.sturm_count(lo) > 0 {
            lo -= (hi - lo).abs().max(1.0);
        }
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) == 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solves `(T − σI)x = b` by `LDLᵀ` elimination. Only used with `σ`
    /// below the spectrum, where every pivot is positive.
    fn solve_shifted(&self, shift: f64, rhs: &[f64], out: &mut [f64], pivots: &mut [f64]) {
        let n = self.diag.len();
        pivots[0] = self.diag[0] - shift;
        out[0] = rhs[0];
        for i in 1..n {
            let l = self.off[i - 1] / pivots[i - 1];
            pivots[i] = self.diag[i] - shift - l * self.off[i - 1];
            out[i] = rhs[i] - l * out[i - 1];
        }
        out[n - 1] /= pivots[n - 1];
        for i in (0..n - 1).rev() {
            out[i] = (out[i] - self.off[i] * out[i + 1]) / pivots[i];
        }
    }

    /// Eigenvector for the eigenvalue nearest `shift`, unit 2-norm with
    /// non-negative sum. Starts from the constant vector.
    pub fn inverse_iteration(&self, shift: f64, max_iter: usize, tol: f64) -> Result<Vec<f64>> {
        let n = self.diag.len();
        let mut x = vec![1.0 / (n as f64).sqrt(); n];
        let mut y = vec![0.0; n];
        let mut pivots = vec![0.0; n];
        for _ in 0..max_iter {
            self.solve_shifted(shift, &x, &mut y, &mut pivots);
            let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            let sign = if y.iter().sum::<f64>() < 0.0 {
                -1.0
            } else {
                1.0
            };
            let scale = sign / norm;
            let mut change = 0.0f64;
            for (xi, yi) in x.iter_mut().zip(&y) {
                let next = yi * scale;
                change = change.max((next - *xi).abs());
                *xi = next;
            }
            if !change.is_finite() {
                break;
            }
            if change <= tol {
                return Ok(x);
            }
        }
        Err(Error::InverseIterationStagnated(max_iter))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn two_by_two_count() {
        // [[1, −1], [−1, 3]]: eigenvalues 2 ∓ √2
        let t = SymTridiagonal::new(vec![1.0, 3.0], vec![-1.0]);
        assert_eq!(t.sturm_count(0.0), 0);
        assert_eq!(t.sturm_count(1.0), 1);
        assert_eq!(t.sturm_count(4.0), 2);
        assert_relative_eq!(
            t.smallest_eigenvalue(1e-14),
            2.0 - 2f64.sqrt(),
            epsilon = 1e-13
        );
    }

    #[test]
    fn free_chain_spectrum() {
        // d = 2, e = −1: λ_k = 2 − 2cos(kπ/(n+1))
        let n = 300;
        let t = SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]);
        let exact = 2.0 - 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
        let lambda = t.smallest_eigenvalue(1e-15);
        assert_relative_eq!(lambda, exact, epsilon = 1e-13);
        for k in 1..=5 {
            let lk = 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert_eq!(t.sturm_count(lk + 1e-9), k);
            assert_eq!(t.sturm_count(lk - 1e-9), k - 1);
        }

        let v = t.inverse_iteration(lambda - 1e-10, 50, 1e-12).unwrap();
        let norm = (2.0 / (n as f64 + 1.0)).sqrt();
        for (j, vj) in v.iter().enumerate() {
            let want = norm * ((j + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).sin();
            assert!((vj - want).abs() < 1e-10);
        }
    }

    #[test]
    fn single_entry() {
        let t = SymTridiagonal::new(vec![3.5], vec![]);
        assert_relative_eq!(t.smallest_eigenvalue(1e-14), 3.5, epsilon = 1e-13);
        assert_eq!(t.inverse_iteration(3.0, 5, 1e-12).unwrap(), vec![1.0]);
    }

    #[test]
    fn eigenvalue_count_consistency_on_random_matrix() {
        // deterministic pseudo-random entries
        let mut state = 0x2545_f491_u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 10_000) as f64 / 10_000.0 - 0.5
        };
        let n = 80;
        let diag: Vec<f64> = (0..n).map(|_| 4.0 * next()).collect();
        let off: Vec<f64> = (0..n - 1).map(|_| next()).collect();
        let t = SymTridiagonal::new(diag, off);
        let lambda = t.smallest_eigenvalue(1e-13);
        assert_eq!(t.sturm_count(lambda - 1e-10), 0);
        assert!(t.sturm_count(lambda + 1e-10) >= 1);
        assert!(lambda >= t.gershgorin_lower());

        // residual ‖Tv − λv‖ of the inverse-iteration vector
        let v = t.inverse_iteration(lambda - 1e-9, 50, 1e-12).unwrap();
        for i in 0..n {
            let mut tv = t.diag[i] * v[i];
            if i > 0 {
                tv += t.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                tv += t.off[i] * v[i + 1];
            }
            assert!((tv - lambda * v[i]).abs() < 1e-8);
        }
    }
}
