// SPDX-License-Identifier: Apache-2.0

//! Closed-form radial bound states.
//!
//! A state is stored in `f = r·Q` form as
//!
//! ```text
//! f(r) = A · p(x) · r^s · e^{−x},   x = r / a,
//! ```
//!
//! with `s = q₀/ħ`, `a` the decay length and `p` a degree-`n` polynomial.
//! The ground state solves the first-order equation `f′ + (1/a − s/r) f = 0`;
//! excited polynomials come from repeatedly applying the raising operator
//! `ħr[d/dr + (qₖ/ħr − 1/a)]`, which in the scaled variable reads
//!
//! ```text
//! p_{k+1}(x) = x p_k′(x) + (2s + k) p_k(x) − 2x p_k(x).
//! ```
//!
//! Physical states use `a = ħσₙ` for state `n`. Ladder states keep one common
//! `σ` for the whole chain; they are the eigenbasis of a single `T₃`.

use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::algebra::q_ground;
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::model::{tau, KratzerParams};
use crate::poly::Polynomial;
use crate::quadrature::adaptive_simpson;
use crate::spectrum::{energy, sigma_n, SpectrumEntry};
use crate::units::HBAR;

/// Inner product a state is normalized in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// `∫ f² dr = ∫ Q² r² dr`, the Schrödinger inner product.
    Radial,
    /// `∫ f² dr/r`, the product under which `T₁, T₂, T₃` are symmetric.
    Dilation,
}

impl Measure {
    /// Power `w` in `∫ p(x)² x^w e^{−2x} dx`.
    fn weight_power(self, s: f64) -> f64 {
        match self {
            Self::Radial => 2.0 * s,
            Self::Dilation => 2.0 * s - 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub n: u32,
    pub l: u32,
    /// `s = q₀/ħ`.
    pub exponent_power: f64,
    /// Decay length `a = ħσ`.
    pub scale: f64,
    /// Polynomial in `x = r/a`, positive at the origin.
    pub poly: Polynomial,
    pub norm_constant: f64,
    pub measure: Measure,
    ln_norm: f64,
}

impl BoundState {
    fn build(
        n: u32,
        l: u32,
        s: f64,
        scale: f64,
        measure: Measure,
        ln_norm: Option<f64>,
    ) -> Result<Self> {
        let poly = ladder_polynomial(s, n);
        let ln_norm = match ln_norm {
            Some(v) => v,
            None => {
                let ln_i = ln_norm_integral(&poly, measure.weight_power(s))?;
                -0.5 * ((measure.weight_power(s) + 1.0) * scale.ln() + ln_i)
            }
        };
        let norm_constant = ln_norm.exp();
        if !(norm_constant.is_finite() && norm_constant > 0.0) {
            return Err(Error::Range {
                what: format!("normalization constant exp({ln_norm})"),
                threshold: f64::MAX.ln(),
            });
        }
        Ok(Self {
            n,
            l,
            exponent_power: s,
            scale,
            poly,
            norm_constant,
            measure,
            ln_norm,
        })
    }

    /// Polynomial coefficients in `r` (ascending), without the normalization constant.
    pub fn poly_coeffs_r(&self) -> Vec<f64> {
        self.poly.rescaled_argument(self.scale).coeffs().to_vec()
    }

    /// `f(r) = r·Q(r)`.
    pub fn f(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let x = r / self.scale;
        self.poly.eval(x) * (self.ln_norm + self.exponent_power * r.ln() - x).exp()
    }

    /// `(f, f′, f″)` at `r`, in closed form.
    pub fn f_with_derivatives(&self, r: f64) -> (f64, f64, f64) {
        if r <= 0.0 {
            return (0.0, 0.0, 0.0);
        }
        let a = self.scale;
        let s = self.exponent_power;
        let x = r / a;
        let envelope = (self.ln_norm + s * r.ln() - x).exp();
        let (p, dp, ddp) = self.poly.eval_with_derivatives(x);
        let g1 = s / r - 1.0 / a;
        let g2 = g1 * g1 - s / (r * r);
        let f = p * envelope;
        let d1 = (dp / a + p * g1) * envelope;
        let d2 = (ddp / (a * a) + 2.0 * dp / a * g1 + p * g2) * envelope;
        (f, d1, d2)
    }

    /// Radial wavefunction `Q(r) = f(r)/r`.
    pub fn q(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        self.f(r) / r
    }

    pub fn nodes(&self) -> Vec<f64> {
        self.poly
            .positive_roots()
            .into_iter()
            .map(|x| x * self.scale)
            .collect()
    }

    pub fn node_count(&self) -> usize {
        self.poly.positive_roots().len()
    }
}

/// Polynomial factor of state `n` in the scaled variable, with `p₀ = 1`.
pub fn ladder_polynomial(s: f64, n: u32) -> Polynomial {
    let mut c = vec![1.0];
    for k in 0..n {
        let shift = 2.0 * s + f64::from(k);
        let mut next = vec![0.0; c.len() + 1];
        for (j, &cj) in c.iter().enumerate() {
            next[j] += (j as f64 + shift) * cj;
            next[j + 1] -= 2.0 * cj;
        }
        c = next;
    }
    Polynomial::new(c)
}

/// `ln ∫₀^∞ p(x)² x^w e^{−2x} dx` by adaptive quadrature on a peak-scaled integrand.
fn ln_norm_integral(poly: &Polynomial, w: f64) -> Result<f64> {
    let deg = poly.degree() as f64;
    let peak = (0.5 * w).max(0.5);
    let shift = w * peak.ln() - 2.0 * peak;
    let g = |x: f64| {
        if x <= 0.0 {
            return if w == 0.0 {
                poly.eval(0.0).powi(2) * (-shift).exp()
            } else {
                0.0
            };
        }
        let p = poly.eval(x);
        let u = x - peak;
        p * p * (w * (u / peak).ln_1p() - 2.0 * u).exp()
    };

    let mut upper = peak + 2.0 * deg + 10.0 + 10.0 * (w + deg + 1.0).sqrt();
    let probe = |hi: f64| {
        (0..=400)
            .map(|i| g(hi * i as f64 / 400.0))
            .fold(0.0_f64, f64::max)
    };
    let mut g_max = probe(upper);
    while g(upper) > 1e-40 * g_max {
        upper *= 1.25;
        g_max = probe(upper);
    }
    let rough: f64 = (0..400)
        .map(|i| g(upper * (i as f64 + 0.5) / 400.0))
        .sum::<f64>()
        * upper
        / 400.0;
    let tol = 1e-13 * rough.max(f64::MIN_POSITIVE);
    let split = (peak + deg).min(0.5 * upper);
    let value = adaptive_simpson(g, 0.0, split, tol)? + adaptive_simpson(g, split, upper, tol)?;
    if !(value > 0.0 && value.is_finite()) {
        return Err(Error::Numeric(format!(
            "norm integral evaluated to {value}"
        )));
    }
    Ok(value.ln() + shift)
}

/// `A = [(2q₀/ħ)(ħσ/2)^{2q₀/ħ+1} Γ(2q₀/ħ)]^{−1/2}`, evaluated through `ln Γ`.
pub fn normalization_constant(q0: f64, sigma: f64) -> Result<f64> {
    if !(q0 >= HBAR) || !(sigma > 0.0) {
        return Err(Error::Domain(format!(
            "normalization needs q0 >= hbar and sigma > 0, got q0 = {q0}, sigma = {sigma}"
        )));
    }
    let a = ln_ground_norm(q0, sigma);
    let v = a.exp();
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::Range {
            what: format!("normalization constant exp({a}) for q0 = {q0}, sigma = {sigma}"),
            threshold: f64::MAX.ln(),
        });
    }
    Ok(v)
}

fn ln_ground_norm(q0: f64, sigma: f64) -> f64 {
    let two_s = 2.0 * q0 / HBAR;
    -0.5 * (two_s.ln() + (two_s + 1.0) * (0.5 * HBAR * sigma).ln() + ln_gamma(two_s))
}

/// Ground state `f₀ = A r^{q₀/ħ} e^{−r/ħσ₀}` of the physical problem.
pub fn ground_state(p: &KratzerParams, l: u32) -> Result<BoundState> {
    let q0 = q_ground(tau(p, l))?;
    let sigma = sigma_n(p, 0, l)?;
    normalization_constant(q0, sigma)?;
    BoundState::build(
        0,
        l,
        q0 / HBAR,
        HBAR * sigma,
        Measure::Radial,
        Some(ln_ground_norm(q0, sigma)),
    )
}

/// Excited physical state `n ≥ 1` with decay length `ħσₙ`, normalized by quadrature.
pub fn excited_state(p: &KratzerParams, n: u32, l: u32) -> Result<BoundState> {
    if n == 0 {
        return Err(Error::Usage("excited_state needs n >= 1".into()));
    }
    let q0 = q_ground(tau(p, l))?;
    let sigma = sigma_n(p, n, l)?;
    BoundState::build(n, l, q0 / HBAR, HBAR * sigma, Measure::Radial, None)
}

pub fn bound_state(p: &KratzerParams, n: u32, l: u32) -> Result<BoundState> {
    if n == 0 {
        ground_state(p, l)
    } else {
        excited_state(p, n, l)
    }
}

/// Physical state described by a spectrum row.
pub fn state_for_entry(entry: &SpectrumEntry) -> Result<BoundState> {
    let s = entry.q0 / HBAR;
    let scale = HBAR * entry.sigma_n;
    let ln_norm = if entry.n == 0 {
        normalization_constant(entry.q0, entry.sigma_n)?;
        Some(ln_ground_norm(entry.q0, entry.sigma_n))
    } else {
        None
    };
    BoundState::build(entry.n, entry.l, s, scale, Measure::Radial, ln_norm)
}

/// Member `n` of the `T₃` eigenchain at a fixed `σ`, normalized in `measure`.
pub fn ladder_state(
    p: &KratzerParams,
    l: u32,
    sigma: f64,
    n: u32,
    measure: Measure,
) -> Result<BoundState> {
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::Domain(format!(
            "sigma must be positive, got {sigma}"
        )));
    }
    let q0 = q_ground(tau(p, l))?;
    BoundState::build(n, l, q0 / HBAR, HBAR * sigma, measure, None)
}

/// Log-spaced grid over `[10⁻³a, x_hi·a]` with `x_hi = max(40, 2(s+n) + 30)`.
pub fn default_grid(state: &BoundState) -> RadialGrid {
    let a = state.scale;
    let x_hi = (2.0 * (state.exponent_power + f64::from(state.n)) + 30.0).max(40.0);
    RadialGrid::log_uniform(1e-3 * a, x_hi * a, 4000).expect("positive scale")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledWaveFunction {
    pub grid: RadialGrid,
    /// Samples of `Q(r)`.
    pub values: Vec<f64>,
    /// `∫ Q² r² dr` over the grid.
    pub norm: f64,
}

pub fn sample(state: &BoundState, grid: &RadialGrid) -> Result<SampledWaveFunction> {
    let values: Vec<f64> = grid.points().iter().map(|&r| state.q(r)).collect();
    if let Some(i) = values.iter().position(|v| v.is_nan()) {
        return Err(Error::Numeric(format!(
            "wavefunction is NaN at r = {}",
            grid.points()[i]
        )));
    }
    let density: Vec<f64> = values
        .iter()
        .zip(grid.points())
        .map(|(q, r)| q * q * r * r)
        .collect();
    Ok(SampledWaveFunction {
        norm: grid.integrate(&density),
        grid: grid.clone(),
        values,
    })
}

/// `∫ Q_a Q_b r² dr` over the shared grid.
pub fn overlap(a: &SampledWaveFunction, b: &SampledWaveFunction) -> Result<f64> {
    if a.grid != b.grid {
        return Err(Error::Usage(
            "overlap needs both samples on the same grid".into(),
        ));
    }
    let y: Vec<f64> = a
        .values
        .iter()
        .zip(&b.values)
        .zip(a.grid.points())
        .map(|((x, y), r)| x * y * r * r)
        .collect();
    Ok(a.grid.integrate(&y))
}

/// `max |f′ + (1/ħσ − q₀/ħr) f| / max |f|` for a nodeless state.
pub fn ground_ode_residual(state: &BoundState, grid: &RadialGrid) -> f64 {
    let mut worst = 0.0_f64;
    let mut f_max = 0.0_f64;
    for &r in grid.points() {
        let (f, d1, _) = state.f_with_derivatives(r);
        let res = d1 + (1.0 / state.scale - state.exponent_power / r) * f;
        worst = worst.max(res.abs());
        f_max = f_max.max(f.abs());
    }
    worst / f_max
}

/// `‖Hf − εf‖ / ‖εf‖` on the grid, with `H = −(ħ²/2μ)d²/dr² + α/r + (β + l(l+1)ħ²/2μ)/r²`.
pub fn schrodinger_residual(
    state: &BoundState,
    p: &KratzerParams,
    grid: &RadialGrid,
) -> Result<f64> {
    let e = energy(p, state.n, state.l)?;
    let kinetic = HBAR * HBAR / (2.0 * p.mu);
    let beta_eff = p.effective_beta(state.l);
    let (mut num, mut den) = (0.0, 0.0);
    for &r in grid.points() {
        let (f, _, d2) = state.f_with_derivatives(r);
        let hf = -kinetic * d2 + (p.alpha / r + beta_eff / (r * r)) * f;
        num += (hf - e * f).powi(2);
        den += (e * f).powi(2);
    }
    Ok((num / den).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_ground_state() {
        let p = KratzerParams::canonical();
        let g = ground_state(&p, 0).unwrap();
        assert_eq!(g.exponent_power, 2.0);
        assert_eq!(g.scale, 1.0);
        assert_eq!(g.poly.coeffs(), &[1.0]);
        let a = 2.0 / 3f64.sqrt();
        assert!((g.norm_constant - a).abs() < 1e-14);
        assert!((g.q(1.0) - a * (-1f64).exp()).abs() < 1e-14);
        assert!((g.q(1.0) - 0.424_790_6).abs() < 1e-7);
    }

    #[test]
    fn coulomb_ground_state_is_hydrogenic() {
        let p = KratzerParams::new(-1.0, 0.0, 1.0).unwrap();
        let g = ground_state(&p, 0).unwrap();
        for r in [0.1, 1.0, 4.0] {
            assert!((g.q(r) - 2.0 * (-r).exp()).abs() < 1e-13);
        }
    }

    #[test]
    fn normalization_constant_examples() {
        assert!((normalization_constant(2.0, 1.0).unwrap() - 2.0 / 3f64.sqrt()).abs() < 1e-14);
        assert!((normalization_constant(1.0, 1.0).unwrap() - 2.0).abs() < 1e-14);
        assert!(normalization_constant(0.5, 1.0).is_err());
        assert!(matches!(
            normalization_constant(1e6, 1e-6),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn first_excited_canonical_shape() {
        let p = KratzerParams::canonical();
        let e = excited_state(&p, 1, 0).unwrap();
        assert_eq!(e.scale, 1.5);
        assert_eq!(e.poly.coeffs(), &[4.0, -2.0]);
        let nodes = e.nodes();
        assert_eq!(nodes.len(), 1);
        assert!((nodes[0] - 3.0).abs() < 1e-12);
        // ∝ (2 − 2r/3) r e^{−2r/3}
        let ratio = |r: f64| e.q(r) / ((2.0 - 2.0 * r / 3.0) * r * (-2.0 * r / 3.0).exp());
        assert!((ratio(0.5) / ratio(5.0) - 1.0).abs() < 1e-12);
        assert!(matches!(excited_state(&p, 0, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn second_excited_has_two_nodes() {
        let p = KratzerParams::canonical();
        let e = excited_state(&p, 2, 0).unwrap();
        let nodes = e.nodes();
        assert_eq!(nodes.len(), 2);
        assert!(nodes.iter().all(|&r| r > 0.0));
        for r in nodes {
            assert!(e.poly.eval(r / e.scale).abs() < 1e-10);
        }
    }

    #[test]
    fn sample_norms_and_overlaps() {
        let p = KratzerParams::canonical();
        let g = ground_state(&p, 0).unwrap();
        let grid = RadialGrid::log_uniform(1e-3, 40.0, 4000).unwrap();
        let s0 = sample(&g, &grid).unwrap();
        assert!((s0.norm - 1.0).abs() < 1e-6);
        assert!(s0.values.iter().all(|&v| v > 0.0));
        assert!((overlap(&s0, &s0).unwrap() - 1.0).abs() < 1e-8);

        let single = RadialGrid::uniform(1.0, 1.0, 1).unwrap();
        let one = sample(&g, &single).unwrap();
        assert_eq!(one.values, vec![g.q(1.0)]);

        let other = RadialGrid::log_uniform(1e-3, 41.0, 4000).unwrap();
        let s_other = sample(&g, &other).unwrap();
        assert!(matches!(overlap(&s0, &s_other), Err(Error::Usage(_))));
    }

    #[test]
    fn ground_state_solves_first_order_equation() {
        let p = KratzerParams::canonical();
        for l in 0..3 {
            let g = ground_state(&p, l).unwrap();
            assert!(ground_ode_residual(&g, &default_grid(&g)) < 1e-8);
        }
    }

    #[test]
    fn quadrature_normalization_matches_gamma_form() {
        let p = KratzerParams::new(-1.3, 0.7, 3.0).unwrap();
        let q0 = q_ground(tau(&p, 2)).unwrap();
        let sigma = sigma_n(&p, 0, 2).unwrap();
        let analytic = normalization_constant(q0, sigma).unwrap();
        let numeric = ladder_state(&p, 2, sigma, 0, Measure::Radial).unwrap();
        assert!((numeric.norm_constant / analytic - 1.0).abs() < 1e-10);
    }

    #[test]
    fn heavy_molecule_states_are_finite() {
        // CO-like: q₀/ħ in the hundreds
        let p = KratzerParams::new(-2.0 * 0.41 * 2.13, 0.41 * 2.13 * 2.13, 12_500.0).unwrap();
        for n in 0..3 {
            let s = bound_state(&p, n, 0).unwrap();
            assert!(s.exponent_power > 85.0);
            let smp = sample(&s, &default_grid(&s)).unwrap();
            assert!((smp.norm - 1.0).abs() < 1e-6, "n = {n}: {}", smp.norm);
            assert_eq!(s.node_count(), n as usize);
        }
    }
}
