// SPDX-License-Identifier: Apache-2.0

//! Real symmetric tridiagonal eigenproblems: Sturm-count bisection for
//! eigenvalues and inverse iteration for eigenvectors.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    /// `off[i]` couples rows `i` and `i + 1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Usage(format!(
                "tridiagonal matrix needs n diagonal and n-1 off-diagonal entries, got {} and {}",
                diag.len(),
                off.len()
            )));
        }
        if diag.iter().chain(&off).any(|v| !v.is_finite()) {
            return Err(Error::Numeric(
                "tridiagonal matrix has non-finite entries".into(),
            ));
        }
        Ok(Self { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut d = 1.0;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 {
                0.0
            } else {
                self.off[i - 1] * self.off[i - 1] / d
            };
            d = self.diag[i] - x - coupling;
            if d == 0.0 {
                d = -f64::EPSILON * (self.diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    pub fn bounds(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection to full precision.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.bounds();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for the eigenvalue `lambda`, unit Euclidean norm.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let n = self.diag.len();
        let scale = self.bounds().1.abs().max(self.bounds().0.abs()).max(1.0);
        let shift = lambda + 1e-13 * scale;
        let mut x = vec![1.0; n];
        for _ in 0..4 {
            x = self.solve_shifted(shift, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !(norm.is_finite() && norm > 0.0) {
                return Err(Error::Numeric(format!(
                    "inverse iteration failed at {lambda}"
                )));
            }
            x.iter_mut().for_each(|v| *v /= norm);
        }
        Ok(x)
    }

    /// Solves `(T − shift·I) x = b` by Gaussian elimination with partial pivoting.
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        // rows hold (sub, diag, super, super2) after pivoting
        let mut a: Vec<[f64; 3]> = (0..n)
            .map(|i| {
                [
                    self.diag[i] - shift,
                    if i + 1 < n { self.off[i] } else { 0.0 },
                    0.0,
                ]
            })
            .collect();
        let mut sub: Vec<f64> = (0..n)
            .map(|i| if i > 0 { self.off[i - 1] } else { 0.0 })
            .collect();
        let mut rhs = b.to_vec();
        let tiny = f64::EPSILON * self.bounds().1.abs().max(1.0);
        for i in 0..n.saturating_sub(1) {
            let below = sub[i + 1];
            if below.abs() > a[i][0].abs() {
                let next = [below, a[i + 1][0], a[i + 1][1]];
                let cur = a[i];
                a[i] = next;
                a[i + 1] = [cur[1], cur[2], 0.0];
                sub[i + 1] = cur[0];
                rhs.swap(i, i + 1);
            }
            if a[i][0] == 0.0 {
                a[i][0] = tiny;
            }
            let m = sub[i + 1] / a[i][0];
            a[i + 1][0] -= m * a[i][1];
            a[i + 1][1] -= m * a[i][2];
            rhs[i + 1] -= m * rhs[i];
        }
        if a[n - 1][0] == 0.0 {
            a[n - 1][0] = tiny;
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut v = rhs[i];
            if i + 1 < n {
                v -= a[i][1] * x[i + 1];
            }
            if i + 2 < n {
                v -= a[i][2] * x[i + 2];
            }
            x[i] = v / a[i][0];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laplacian(n: usize) -> SymTridiagonal {
        SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]).unwrap()
    }

    #[test]
    fn discrete_laplacian_spectrum() {
        let n = 50;
        let t = laplacian(n);
        for k in 0..n {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((t.eigenvalue(k) - exact).abs() < 1e-13, "k = {k}");
        }
        assert_eq!(t.count_below(0.0), 0);
        assert_eq!(t.count_below(4.1), n);
    }

    #[test]
    fn eigenvectors_are_eigenvectors() {
        let n = 40;
        let t = SymTridiagonal::new(
            (0..n).map(|i| (i as f64).sin() + 3.0).collect(),
            (0..n - 1).map(|i| 0.5 + 0.1 * (i as f64).cos()).collect(),
        )
        .unwrap();
        for k in [0, 7, n - 1] {
            let lambda = t.eigenvalue(k);
            let v = t.eigenvector(lambda).unwrap();
            let mut worst = 0.0_f64;
            for i in 0..n {
                let mut y = t.diag[i] * v[i];
                if i > 0 {
                    y += t.off[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    y += t.off[i] * v[i + 1];
                }
                worst = worst.max((y - lambda * v[i]).abs());
            }
            assert!(worst < 1e-10, "k = {k}: {worst}");
        }
    }

    #[test]
    fn shape_checked() {
        assert!(SymTridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymTridiagonal::new(vec![f64::NAN], vec![]).is_err());
    }
}
