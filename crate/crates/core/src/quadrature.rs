// SPDX-License-Identifier: Apache-2.0

//! Quadrature and numerical differentiation helpers.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 48;
/// Upper bound on integrand evaluations per call.
const MAX_EVALUATIONS: usize = 2_000_000;

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Returns a quadrature error carrying the achieved estimate if the
/// recursion bottoms out before the tolerance is met. `a > b` yields the
/// negated integral.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return adaptive_simpson(f, b, a, tol).map(|v| -v);
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut budget = Budget {
        worst: 0.0,
        remaining: MAX_EVALUATIONS,
    };
    let v = simpson_step(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH, &mut budget);
    let worst = budget.worst;
    if !v.is_finite() {
        return Err(Error::Numeric(format!(
            "integrand not finite on [{a}, {b}]"
        )));
    }
    if worst > tol {
        return Err(Error::Quadrature {
            achieved: worst,
            tolerance: tol,
        });
    }
    Ok(v)
}

struct Budget {
    worst: f64,
    remaining: usize,
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    budget: &mut Budget,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    budget.remaining = budget.remaining.saturating_sub(2);
    let exhausted = depth == 0 || budget.remaining == 0;
    if exhausted || delta.abs() <= 15.0 * tol || !delta.is_finite() {
        if exhausted {
            budget.worst = budget.worst.max(delta.abs() / 15.0);
        }
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget)
}

/// Composite Simpson rule for samples on an arbitrary increasing grid.
///
/// Exact for quadratics on every panel; an odd trailing interval is closed
/// with the three-point end correction. Two points fall back to the trapezoid.
pub fn simpson_samples(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len(), "abscissae and ordinates differ in length");
    let n = x.len();
    match n {
        0 | 1 => return 0.0,
        2 => return 0.5 * (x[1] - x[0]) * (y[0] + y[1]),
        _ => {}
    }
    let intervals = n - 1;
    let paired = intervals - intervals % 2;
    let mut sum = 0.0;
    let mut i = 0;
    while i < paired {
        let h0 = x[i + 1] - x[i];
        let h1 = x[i + 2] - x[i + 1];
        let hs = h0 + h1;
        sum += hs / 6.0
            * ((2.0 - h1 / h0) * y[i]
                + hs * hs / (h0 * h1) * y[i + 1]
                + (2.0 - h0 / h1) * y[i + 2]);
        i += 2;
    }
    if intervals % 2 == 1 {
        let h0 = x[n - 2] - x[n - 3];
        let h1 = x[n - 1] - x[n - 2];
        sum += y[n - 1] * (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1))
            + y[n - 2] * (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0)
            - y[n - 3] * h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    }
    sum
}

/// Step used for numerical derivatives at `r`: `max(1e-5, 1e-5·r)`.
pub fn derivative_step(r: f64) -> f64 {
    (1e-5 * r.abs()).max(1e-5)
}

/// Five-point central first and second derivatives of `f` at `x`.
pub fn central_derivatives<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> (f64, f64) {
    let fm2 = f(x - 2.0 * h);
    let fm1 = f(x - h);
    let f0 = f(x);
    let fp1 = f(x + h);
    let fp2 = f(x + 2.0 * h);
    let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    (d1, d2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_polynomials_exact() {
        let v = adaptive_simpson(|x| 3.0 * x * x + 1.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 10.0).abs() < 1e-12);
        let back = adaptive_simpson(|x| 3.0 * x * x + 1.0, 2.0, 0.0, 1e-12).unwrap();
        assert!((back + 10.0).abs() < 1e-12);
    }

    #[test]
    fn simpson_smooth_function() {
        let v = adaptive_simpson(f64::exp, 0.0, 1.0, 1e-12).unwrap();
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-11);
    }

    #[test]
    fn nonconvergence_is_reported() {
        let err = adaptive_simpson(|x: f64| (1.0 / x).sin(), 1e-9, 1.0, 1e-15).unwrap_err();
        assert!(matches!(err, Error::Quadrature { .. }));
    }

    #[test]
    fn sample_simpson_on_irregular_grid() {
        for n in [3usize, 4, 7, 10, 101] {
            let x: Vec<f64> = (0..n)
                .map(|i| (i as f64 / (n - 1) as f64).powi(2) * 3.0)
                .collect();
            let y: Vec<f64> = x.iter().map(|t| t * t - 2.0 * t + 0.5).collect();
            let exact = 9.0 - 9.0 + 1.5;
            assert!((simpson_samples(&x, &y) - exact).abs() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn derivative_of_cubic() {
        let f = |x: f64| x * x * x;
        let (d1, d2) = central_derivatives(&f, 2.0, 1e-3);
        assert!((d1 - 12.0).abs() < 1e-8);
        assert!((d2 - 12.0).abs() < 1e-5);
    }
}
