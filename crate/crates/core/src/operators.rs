// SPDX-License-Identifier: Apache-2.0

//! Finite-difference representation of `R`, `P` and the so(2,1) generators
//! acting on samples of `f(r) = r·Q(r)`.
//!
//! In `f`-space `p_r = −iħ d/dr`. With `R = r/σ` and `P = σp_r`:
//!
//! ```text
//! T₃ = ½(R P² + τ R⁻¹ + R),   T₁ = T₃ − R,   T₂ = R P,   T± = T₁ ± iT₂.
//! ```
//!
//! Derivatives use fourth-order central stencils with one-sided closures.
//! Residual norms are weighted by `dr` and skip the outer 5 % of points.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{RadialGrid, Spacing};
use crate::units::HBAR;

/// Fraction of points dropped at each end when measuring residuals.
pub const BOUNDARY_FRACTION: f64 = 0.05;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Banded complex matrix bound to a grid.
#[derive(Debug, Clone)]
pub struct GridOperator {
    grid: Arc<RadialGrid>,
    label: String,
    lower: usize,
    upper: usize,
    data: Vec<Complex64>,
}

impl GridOperator {
    fn with_band(
        grid: Arc<RadialGrid>,
        lower: usize,
        upper: usize,
        label: impl Into<String>,
    ) -> Self {
        let n = grid.len();
        let lower = lower.min(n.saturating_sub(1));
        let upper = upper.min(n.saturating_sub(1));
        Self {
            data: vec![ZERO; n * (lower + upper + 1)],
            grid,
            label: label.into(),
            lower,
            upper,
        }
    }

    pub fn zero(grid: Arc<RadialGrid>) -> Self {
        Self::with_band(grid, 0, 0, "0")
    }

    pub fn identity(grid: Arc<RadialGrid>) -> Self {
        Self::diagonal(grid, |_| 1.0, "I")
    }

    pub fn diagonal<F: Fn(f64) -> f64>(
        grid: Arc<RadialGrid>,
        f: F,
        label: impl Into<String>,
    ) -> Self {
        let mut op = Self::with_band(grid, 0, 0, label);
        for i in 0..op.dim() {
            op.data[i] = Complex64::new(f(op.grid.points()[i]), 0.0);
        }
        op
    }

    /// First derivative `d/dr`.
    pub fn derivative(grid: Arc<RadialGrid>) -> Result<Self> {
        grid.require_operator_size()?;
        let n = grid.len();
        let h = grid.step();
        let mut op = Self::with_band(grid, 4, 4, "d/dr");
        const INNER: [f64; 5] = [1.0, -8.0, 0.0, 8.0, -1.0];
        const EDGE0: [f64; 5] = [-25.0, 48.0, -36.0, 16.0, -3.0];
        const EDGE1: [f64; 5] = [-3.0, -10.0, 18.0, -6.0, 1.0];
        for i in 0..n {
            let (start, coeffs, sign) = match i {
                0 => (0, EDGE0, 1.0),
                1 => (0, EDGE1, 1.0),
                _ if i == n - 2 => (n - 5, rev(EDGE1), -1.0),
                _ if i == n - 1 => (n - 5, rev(EDGE0), -1.0),
                _ => (i - 2, INNER, 1.0),
            };
            let jacobian = match op.grid.spacing() {
                Spacing::Uniform => 1.0,
                Spacing::LogUniform => 1.0 / op.grid.points()[i],
            };
            for (k, c) in coeffs.iter().enumerate() {
                op.set(
                    i,
                    start + k,
                    Complex64::new(sign * c * jacobian / (12.0 * h), 0.0),
                );
            }
        }
        Ok(op)
    }

    pub fn grid(&self) -> &Arc<RadialGrid> {
        &self.grid
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.grid.len()
    }

    /// `(lower, upper)` bandwidths.
    pub fn bandwidth(&self) -> (usize, usize) {
        (self.lower, self.upper)
    }

    fn width(&self) -> usize {
        self.lower + self.upper + 1
    }

    fn columns(&self, i: usize) -> std::ops::Range<usize> {
        i.saturating_sub(self.lower)..(i + self.upper + 1).min(self.dim())
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * self.width() + (j + self.lower - i)
    }

    fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let k = self.index(i, j);
        self.data[k] = v;
    }

    /// Matrix entry `(i, j)`; zero outside the band.
    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        if j + self.lower < i || j > i + self.upper || i >= self.dim() || j >= self.dim() {
            return ZERO;
        }
        self.data[self.index(i, j)]
    }

    fn check_grid(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.grid, &other.grid) || self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "operators `{}` and `{}` live on different grids",
                self.label, other.label
            )))
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::Usage(format!(
                "operator `{}` has dimension {}, got {len} samples",
                self.label,
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn apply(&self, f: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_len(f.len())?;
        Ok((0..self.dim())
            .map(|i| self.columns(i).map(|j| self.entry(i, j) * f[j]).sum())
            .collect())
    }

    pub fn apply_real(&self, f: &[f64]) -> Result<Vec<Complex64>> {
        self.apply(&complexify(f))
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_grid(other)?;
        let label = format!("{}·{}", self.label, other.label);
        let mut out = Self::with_band(
            self.grid.clone(),
            self.lower + other.lower,
            self.upper + other.upper,
            label,
        );
        for i in 0..self.dim() {
            for k in self.columns(i) {
                let a = self.entry(i, k);
                if a == ZERO {
                    continue;
                }
                for j in other.columns(k) {
                    let idx = out.index(i, j);
                    out.data[idx] += a * other.entry(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        self.check_grid(other)?;
        let mut out = Self::with_band(
            self.grid.clone(),
            self.lower.max(other.lower),
            self.upper.max(other.upper),
            format!("({}, {})", self.label, other.label),
        );
        for i in 0..self.dim() {
            for j in out.columns(i) {
                let idx = out.index(i, j);
                out.data[idx] = a * self.entry(i, j) + b * other.entry(i, j);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(1.0.into(), other, 1.0.into())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(1.0.into(), other, (-1.0).into())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|v| *v *= c);
        out
    }

    /// Largest entrywise difference, or `None` for operators on different grids.
    pub fn max_abs_diff(&self, other: &Self) -> Option<f64> {
        self.check_grid(other).ok()?;
        let lower = self.lower.max(other.lower);
        let upper = self.upper.max(other.upper);
        let mut worst = 0.0_f64;
        for i in 0..self.dim() {
            let cols = i.saturating_sub(lower)..(i + upper + 1).min(self.dim());
            for j in cols {
                worst = worst.max((self.entry(i, j) - other.entry(i, j)).norm());
            }
        }
        Some(worst)
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }
}

fn rev(c: [f64; 5]) -> [f64; 5] {
    [c[4], c[3], c[2], c[1], c[0]]
}

pub fn complexify(f: &[f64]) -> Vec<Complex64> {
    f.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// `R = r/σ` and `P = −iħσ d/dr`.
pub fn build_observables(
    grid: Arc<RadialGrid>,
    sigma: f64,
) -> Result<(GridOperator, GridOperator)> {
    let r = GridOperator::diagonal(grid.clone(), |x| x / sigma, "R");
    let p = GridOperator::derivative(grid)?
        .scale(Complex64::new(0.0, -HBAR * sigma))
        .labelled("P");
    Ok((r, p))
}

#[derive(Debug, Clone)]
pub struct Generators {
    pub sigma: f64,
    pub tau: f64,
    pub r: GridOperator,
    pub p: GridOperator,
    pub t1: GridOperator,
    pub t2: GridOperator,
    pub t3: GridOperator,
    pub t_plus: GridOperator,
    pub t_minus: GridOperator,
    pub casimir: GridOperator,
}

pub fn build_generators(grid: Arc<RadialGrid>, sigma: f64, tau: f64) -> Result<Generators> {
    if !(tau >= 0.0) {
        return Err(Error::Domain(format!(
            "generators need tau >= 0, got {tau}"
        )));
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::Domain(format!(
            "generators need sigma > 0, got {sigma}"
        )));
    }
    let (r, p) = build_observables(grid.clone(), sigma)?;
    let r_inv = GridOperator::diagonal(grid, |x| sigma / x, "R⁻¹");
    let rp = r.compose(&p)?;
    let rpp = rp.compose(&p)?;
    let half: Complex64 = 0.5.into();
    let t3 = rpp
        .combine(half, &r_inv, (0.5 * tau).into())?
        .combine(1.0.into(), &r, half)?
        .labelled("T3");
    let t1 = t3.sub(&r)?.labelled("T1");
    let t2 = rp.labelled("T2");
    let t_plus = t1.combine(1.0.into(), &t2, I)?.labelled("T+");
    let t_minus = t1.combine(1.0.into(), &t2, -I)?.labelled("T-");
    // −T₁² + T₃² expanded through T₁ = T₃ − R keeps the fourth-derivative
    // terms from cancelling numerically.
    let casimir = t3
        .compose(&r)?
        .add(&r.compose(&t3)?)?
        .sub(&r.compose(&r)?)?
        .sub(&t2.compose(&t2)?)?
        .labelled("T^2");
    let gens = Generators {
        sigma,
        tau,
        r,
        p,
        t1,
        t2,
        t3,
        t_plus,
        t_minus,
        casimir,
    };
    for op in [
        &gens.t1,
        &gens.t2,
        &gens.t3,
        &gens.t_plus,
        &gens.t_minus,
        &gens.casimir,
    ] {
        if !op.is_finite() {
            return Err(Error::Numeric(format!(
                "operator `{}` has non-finite entries",
                op.label()
            )));
        }
    }
    Ok(gens)
}

/// Smooth test functions that vanish at both ends of a grid.
#[derive(Debug, Clone)]
pub struct TestFunctionSet {
    grid: Arc<RadialGrid>,
    members: Vec<(String, Vec<f64>)>,
}

/// Relative size allowed at the boundary samples of a test function.
pub const TEST_FUNCTION_EDGE: f64 = 1e-12;

impl TestFunctionSet {
    pub fn new(grid: Arc<RadialGrid>, members: Vec<(String, Vec<f64>)>) -> Result<Self> {
        for (name, v) in &members {
            if v.len() != grid.len() {
                return Err(Error::Usage(format!(
                    "test function `{name}` has the wrong length"
                )));
            }
            let peak = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
            if !(peak > 0.0 && peak.is_finite()) {
                return Err(Error::Numeric(format!(
                    "test function `{name}` is degenerate"
                )));
            }
            let edge = v[0].abs().max(v[v.len() - 1].abs());
            if edge > TEST_FUNCTION_EDGE * peak {
                return Err(Error::Usage(format!(
                    "test function `{name}` does not vanish at the grid ends ({:e} of its peak)",
                    edge / peak
                )));
            }
        }
        Ok(Self { grid, members })
    }

    /// `rᵖ e^{−cr}` members plus two wide compact bumps in `ln r`.
    pub fn standard(grid: Arc<RadialGrid>) -> Result<Self> {
        Self::scaled(grid, 1.0)
    }

    /// [`TestFunctionSet::standard`] with `r` measured in units of `scale`.
    pub fn scaled(grid: Arc<RadialGrid>, scale: f64) -> Result<Self> {
        let pts: Vec<f64> = grid.points().iter().map(|r| r / scale).collect();
        let mut members = Vec::new();
        for (p, c) in [(2.0, 1.0), (3.0, 1.5), (2.5, 0.8), (4.0, 2.0)] {
            members.push((
                format!("r^{p} exp(-{c} r)"),
                pts.iter()
                    .map(|&r: &f64| r.powf(p) * (-c * r).exp())
                    .collect(),
            ));
        }
        for (lo, hi) in [(0.02_f64, 40.0_f64), (0.05, 40.0)] {
            let (a, b) = (lo.ln(), hi.ln());
            members.push((
                format!("bump[{lo}, {hi}]"),
                pts.iter()
                    .map(|&r| bump((2.0 * r.ln() - a - b) / (b - a)))
                    .collect(),
            ));
        }
        Self::new(grid, members)
    }

    pub fn grid(&self) -> &Arc<RadialGrid> {
        &self.grid
    }

    pub fn members(&self) -> &[(String, Vec<f64>)] {
        &self.members
    }
}

fn bump(t: f64) -> f64 {
    if t.abs() >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - t * t)).exp()
    }
}

/// `(∫ |g|² dr)^{1/2}` over the interior points of `grid`.
pub fn interior_norm(grid: &RadialGrid, g: &[Complex64]) -> f64 {
    let range = grid.interior(BOUNDARY_FRACTION);
    let r = &grid.points()[range.clone()];
    let y: Vec<f64> = g[range].iter().map(|v| v.norm_sqr()).collect();
    let mut sum = 0.0;
    for k in 1..r.len() {
        sum += 0.5 * (r[k] - r[k - 1]) * (y[k] + y[k - 1]);
    }
    sum.sqrt()
}

fn relative(grid: &RadialGrid, diff: &[Complex64], f: &[Complex64]) -> f64 {
    interior_norm(grid, diff) / interior_norm(grid, f)
}

/// Largest `‖(AB − BA − scale·E) f‖ / ‖f‖` over the test set.
pub fn commutator_residual(
    a: &GridOperator,
    b: &GridOperator,
    expected: &GridOperator,
    scale: Complex64,
    tests: &TestFunctionSet,
) -> Result<f64> {
    a.check_grid(b)?;
    a.check_grid(expected)?;
    if !(Arc::ptr_eq(a.grid(), tests.grid()) || **a.grid() == **tests.grid()) {
        return Err(Error::Usage(
            "test functions live on a different grid".into(),
        ));
    }
    let mut worst = 0.0_f64;
    for (_, f) in tests.members() {
        let f = complexify(f);
        let ab = a.apply(&b.apply(&f)?)?;
        let ba = b.apply(&a.apply(&f)?)?;
        let e = expected.apply(&f)?;
        let diff: Vec<Complex64> = (0..f.len()).map(|i| ab[i] - ba[i] - scale * e[i]).collect();
        worst = worst.max(relative(a.grid(), &diff, &f));
    }
    Ok(worst)
}

/// `‖T₋f₀‖ / ‖f₀‖`.
pub fn annihilation_residual(t_minus: &GridOperator, f0: &[f64]) -> Result<f64> {
    let f = complexify(f0);
    let g = t_minus.apply(&f)?;
    Ok(relative(t_minus.grid(), &g, &f))
}

/// `‖Op f − λ f‖ / ‖f‖`.
pub fn eigen_residual(op: &GridOperator, f: &[f64], lambda: f64) -> Result<f64> {
    let f = complexify(f);
    let g = op.apply(&f)?;
    let diff: Vec<Complex64> = g.iter().zip(&f).map(|(a, b)| a - lambda * b).collect();
    Ok(relative(op.grid(), &diff, &f))
}

/// `‖T₊fₙ − c·fₙ₊₁‖ / ‖fₙ‖`.
pub fn ladder_residual(t_plus: &GridOperator, f_n: &[f64], f_next: &[f64], c: f64) -> Result<f64> {
    t_plus.check_len(f_next.len())?;
    let f = complexify(f_n);
    let g = t_plus.apply(&f)?;
    let diff: Vec<Complex64> = g.iter().zip(f_next).map(|(a, b)| a - c * b).collect();
    Ok(relative(t_plus.grid(), &diff, &f))
}

/// Largest disagreement between `T²` and `−T±T∓ + (T₃ ∓ ħ)T₃` on the test set.
pub fn casimir_consistency(g: &Generators, tests: &TestFunctionSet) -> Result<f64> {
    let mut worst = 0.0_f64;
    for (_, f) in tests.members() {
        let f = complexify(f);
        let direct = g.casimir.apply(&f)?;
        let t3f = g.t3.apply(&f)?;
        let t3t3f = g.t3.apply(&t3f)?;
        for (first, second, shift) in [
            (&g.t_plus, &g.t_minus, HBAR),
            (&g.t_minus, &g.t_plus, -HBAR),
        ] {
            let ladder = first.apply(&second.apply(&f)?)?;
            let diff: Vec<Complex64> = (0..f.len())
                .map(|i| direct[i] - (-ladder[i] + t3t3f[i] - shift * t3f[i]))
                .collect();
            worst = worst.max(relative(g.t3.grid(), &diff, &f));
        }
    }
    Ok(worst)
}

/// Observed order `log₂(coarse/fine)` for a residual measured at `h` and `h/2`.
pub fn convergence_order(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}

/// Log-uniform grid on `[1e−7, 60]`, wide enough for the canonical states.
pub fn canonical_grid(points: usize) -> Result<Arc<RadialGrid>> {
    scaled_grid(1.0, 60.0, points)
}

/// Log-uniform grid on `[1e−7·scale, x_hi·scale]`.
pub fn scaled_grid(scale: f64, x_hi: f64, points: usize) -> Result<Arc<RadialGrid>> {
    Ok(Arc::new(RadialGrid::log_uniform(
        1e-7 * scale,
        x_hi * scale,
        points,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sampled(grid: &RadialGrid, f: impl Fn(f64) -> f64) -> Vec<f64> {
        grid.points().iter().map(|&r| f(r)).collect()
    }

    #[test]
    fn derivative_is_fourth_order() {
        for spacing in [Spacing::Uniform, Spacing::LogUniform] {
            let err = |n: usize| {
                let grid = Arc::new(match spacing {
                    Spacing::Uniform => RadialGrid::uniform(0.5, 4.0, n).unwrap(),
                    Spacing::LogUniform => RadialGrid::log_uniform(0.5, 4.0, n).unwrap(),
                });
                let d = GridOperator::derivative(grid.clone()).unwrap();
                let g = d.apply_real(&sampled(&grid, f64::sin)).unwrap();
                grid.points()
                    .iter()
                    .zip(&g)
                    .map(|(r, v)| (v.re - r.cos()).abs())
                    .fold(0.0, f64::max)
            };
            let order = convergence_order(err(200), err(400));
            assert!(order > 3.7, "{spacing:?}: {order}");
        }
    }

    #[test]
    fn band_arithmetic() {
        let grid = Arc::new(RadialGrid::uniform(1.0, 2.0, 64).unwrap());
        let d = GridOperator::derivative(grid.clone()).unwrap();
        assert_eq!(d.bandwidth(), (4, 4));
        let dd = d.compose(&d).unwrap();
        assert_eq!(dd.bandwidth(), (8, 8));
        let id = GridOperator::identity(grid.clone());
        assert_eq!(id.compose(&d).unwrap().max_abs_diff(&d), Some(0.0));
        assert_eq!(
            d.sub(&d).unwrap().max_abs_diff(&GridOperator::zero(grid)),
            Some(0.0)
        );
    }

    #[test]
    fn small_grid_rejected() {
        let grid = Arc::new(RadialGrid::uniform(1.0, 2.0, 63).unwrap());
        assert!(matches!(
            GridOperator::derivative(grid),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn grid_mismatch_is_usage_error() {
        let a = canonical_grid(200).unwrap();
        let b = canonical_grid(201).unwrap();
        let ra = GridOperator::diagonal(a.clone(), |r| r, "R");
        let rb = GridOperator::diagonal(b, |r| r, "R");
        assert!(matches!(ra.compose(&rb), Err(Error::Usage(_))));
        let tests = TestFunctionSet::standard(a).unwrap();
        assert!(matches!(
            commutator_residual(&ra, &rb, &ra, ZERO, &tests),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn observables() {
        let grid = canonical_grid(4000).unwrap();
        let (r, p) = build_observables(grid.clone(), 1.0).unwrap();
        let ones = vec![1.0; grid.len()];
        let rf = r.apply_real(&ones).unwrap();
        assert!(rf
            .iter()
            .zip(grid.points())
            .all(|(v, x)| v.re == *x && v.im == 0.0));

        let tests = TestFunctionSet::standard(grid.clone()).unwrap();
        let id = GridOperator::identity(grid.clone());
        let res = commutator_residual(&r, &p, &id, I * HBAR, &tests).unwrap();
        assert!(res < 1e-6, "[R,P] residual {res}");
        assert_eq!(
            commutator_residual(&r, &r, &GridOperator::zero(grid), ZERO, &tests).unwrap(),
            0.0
        );
    }

    #[test]
    fn test_functions_vanish_at_edges() {
        let grid = canonical_grid(4000).unwrap();
        let set = TestFunctionSet::standard(grid.clone()).unwrap();
        assert!(set.members().len() >= 4);
        let bad = vec![("one".to_string(), vec![1.0; grid.len()])];
        assert!(TestFunctionSet::new(grid, bad).is_err());
    }

    #[test]
    fn generator_structure() {
        let grid = canonical_grid(400).unwrap();
        let g = build_generators(grid, 1.0, 2.0).unwrap();
        assert_eq!(g.t3.sub(&g.r).unwrap().max_abs_diff(&g.t1), Some(0.0));
        assert!(build_generators(canonical_grid(400).unwrap(), 1.0, -1.0).is_err());
    }

    #[test]
    fn canonical_ground_state_relations() {
        let grid = canonical_grid(4000).unwrap();
        let g = build_generators(grid.clone(), 1.0, 2.0).unwrap();
        let f0 = sampled(&grid, |r| r * r * (-r).exp());
        assert!(eigen_residual(&g.t3, &f0, 2.0).unwrap() < 1e-6);
        assert!((eigen_residual(&g.t3, &f0, 0.0).unwrap() - 2.0).abs() < 1e-6);
        assert!(eigen_residual(&g.casimir, &f0, 2.0).unwrap() < 1e-5);
        assert!(annihilation_residual(&g.t_minus, &f0).unwrap() < 1e-5);
        let wrong = build_generators(grid, 1.1, 2.0).unwrap();
        assert!(annihilation_residual(&wrong.t_minus, &f0).unwrap() > 1e-2);
    }

    #[test]
    fn commutation_relations() {
        let grid = canonical_grid(4000).unwrap();
        let g = build_generators(grid.clone(), 1.0, 2.0).unwrap();
        let tests = TestFunctionSet::standard(grid).unwrap();
        let h = HBAR;
        let cases = [
            (&g.t1, &g.t2, &g.t3, -I * h),
            (&g.t2, &g.t3, &g.t1, I * h),
            (&g.t3, &g.t1, &g.t2, I * h),
            (&g.t3, &g.t_plus, &g.t_plus, h.into()),
            (&g.t3, &g.t_minus, &g.t_minus, (-h).into()),
            (&g.t_plus, &g.t_minus, &g.t3, (-2.0 * h).into()),
        ];
        for (a, b, e, s) in cases {
            let res = commutator_residual(a, b, e, s, &tests).unwrap();
            assert!(res < 1e-5, "[{}, {}]: {res}", a.label(), b.label());
        }
        assert!(casimir_consistency(&g, &tests).unwrap() < 1e-5);
    }
}
