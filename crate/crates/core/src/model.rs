// SPDX-License-Identifier: Apache-2.0

//! The Kratzer potential `U(r) = α/r + β/r²`, its centrifugal variant, and the
//! second-order Euler operator whose kernel it spans.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{adaptive_simpson, central_derivatives, derivative_step};
use crate::units::HBAR;

/// Absolute tolerance for the integrals in [`reconstruct_potential`].
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-12;

/// Algebraic coefficients of the Kratzer potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KratzerParams {
    /// Coulomb-like coefficient, hartree·bohr (negative).
    pub alpha: f64,
    /// Centrifugal-like coefficient, hartree·bohr² (non-negative).
    pub beta: f64,
    /// Reduced mass, electron masses.
    pub mu: f64,
}

impl KratzerParams {
    /// Direct constructor; permits `beta = 0` (the Coulomb limit).
    pub fn new(alpha: f64, beta: f64, mu: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && mu.is_finite()) {
            return Err(Error::Numeric(format!(
                "non-finite parameters alpha={alpha}, beta={beta}, mu={mu}"
            )));
        }
        if alpha >= 0.0 {
            return Err(Error::Domain(format!(
                "alpha must be negative for bound states, got {alpha}"
            )));
        }
        if beta < 0.0 {
            return Err(Error::Domain(format!(
                "beta must be non-negative, got {beta}"
            )));
        }
        if mu <= 0.0 {
            return Err(Error::Domain(format!("mu must be positive, got {mu}")));
        }
        Ok(Self { alpha, beta, mu })
    }

    /// α = −2, β = 1, μ = 1: a well of unit depth at unit distance.
    pub fn canonical() -> Self {
        Self {
            alpha: -2.0,
            beta: 1.0,
            mu: 1.0,
        }
    }

    /// Position of the potential minimum, `2β/(−α)`.
    pub fn equilibrium_distance(&self) -> f64 {
        2.0 * self.beta / -self.alpha
    }

    /// Depth `α²/(4β)` of the well (infinite in the Coulomb limit).
    pub fn well_depth(&self) -> f64 {
        self.alpha * self.alpha / (4.0 * self.beta)
    }

    /// Effective 1/r² coefficient `β + l(l+1)ħ²/(2μ)`.
    pub fn effective_beta(&self, l: u32) -> f64 {
        let l = f64::from(l);
        self.beta + l * (l + 1.0) * HBAR * HBAR / (2.0 * self.mu)
    }

    pub fn as_laurent(&self) -> Laurent {
        Laurent::new(vec![(-1, self.alpha), (-2, self.beta)])
    }

    pub(crate) fn require_bound(&self) -> Result<()> {
        if self.alpha >= 0.0 {
            return Err(Error::Domain(format!(
                "alpha = {} admits no bound states",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// `τ = l(l+1)ħ² + 2μβ`, the strength of the `R⁻¹` term in `T₃`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct EffectiveStrength(pub f64);

impl EffectiveStrength {
    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn tau(p: &KratzerParams, l: u32) -> EffectiveStrength {
    let l = f64::from(l);
    EffectiveStrength(l * (l + 1.0) * HBAR * HBAR + 2.0 * p.mu * p.beta)
}

fn require_positive_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "radius must be positive and finite, got {r}"
        )))
    }
}

pub fn potential(p: &KratzerParams, r: f64) -> Result<f64> {
    require_positive_radius(r)?;
    Ok(p.alpha / r + p.beta / (r * r))
}

pub fn effective_potential(p: &KratzerParams, l: u32, r: f64) -> Result<f64> {
    require_positive_radius(r)?;
    Ok(p.alpha / r + p.effective_beta(l) / (r * r))
}

/// A radial function the Euler operator can be applied to.
///
/// Implementors with closed-form derivatives override [`Potential::derivatives`];
/// plain closures fall back to five-point central differences.
pub trait Potential {
    fn value(&self, r: f64) -> f64;

    /// Analytic `(U′, U″)` at `r`, when known.
    fn derivatives(&self, _r: f64) -> Option<(f64, f64)> {
        None
    }

    /// `r²U″ + 4rU′ + 2U` at `r`.
    fn euler_residual(&self, r: f64) -> Result<f64> {
        let (d1, d2) = match self.derivatives(r) {
            Some(d) => d,
            None => central_derivatives(&|x| self.value(x), r, derivative_step(r)),
        };
        let u = self.value(r);
        if !(d1.is_finite() && d2.is_finite() && u.is_finite()) {
            return Err(Error::Numeric(format!("non-finite derivative at r = {r}")));
        }
        Ok(r * r * d2 + 4.0 * r * d1 + 2.0 * u)
    }
}

impl<F: Fn(f64) -> f64> Potential for F {
    fn value(&self, r: f64) -> f64 {
        self(r)
    }
}

/// A finite Laurent polynomial `Σ c_k r^k`.
///
/// The Euler operator maps `r^k` to `(k+1)(k+2) r^k`, so its residual is
/// evaluated term by term with integer prefactors.
#[derive(Debug, Clone, PartialEq)]
pub struct Laurent {
    terms: Vec<(i32, f64)>,
}

impl Laurent {
    pub fn new(terms: Vec<(i32, f64)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(i32, f64)] {
        &self.terms
    }
}

impl Potential for Laurent {
    fn value(&self, r: f64) -> f64 {
        self.terms.iter().map(|&(k, c)| c * r.powi(k)).sum()
    }

    fn derivatives(&self, r: f64) -> Option<(f64, f64)> {
        let (mut d1, mut d2) = (0.0, 0.0);
        for &(k, c) in &self.terms {
            let kf = f64::from(k);
            d1 += c * kf * r.powi(k - 1);
            d2 += c * kf * (kf - 1.0) * r.powi(k - 2);
        }
        Some((d1, d2))
    }

    fn euler_residual(&self, r: f64) -> Result<f64> {
        let mut acc = 0.0;
        for &(k, c) in &self.terms {
            let factor = i64::from(k + 1) * i64::from(k + 2);
            if factor != 0 {
                acc += factor as f64 * c * r.powi(k);
            }
        }
        if acc.is_finite() {
            Ok(acc)
        } else {
            Err(Error::Numeric(format!("non-finite residual at r = {r}")))
        }
    }
}

impl Potential for KratzerParams {
    fn value(&self, r: f64) -> f64 {
        self.alpha / r + self.beta / (r * r)
    }

    fn derivatives(&self, r: f64) -> Option<(f64, f64)> {
        self.as_laurent().derivatives(r)
    }

    fn euler_residual(&self, r: f64) -> Result<f64> {
        self.as_laurent().euler_residual(r)
    }
}

/// Applies `L[U] = r²U″ + 4rU′ + 2U`, whose kernel is `span{1/r, 1/r²}`.
pub fn virial_residual<P: Potential + ?Sized>(u: &P, r: f64) -> Result<f64> {
    require_positive_radius(r)?;
    u.euler_residual(r)
}

/// Solution of `L[U] = W` with `U(rₑ) = Uₑ` and `U′(rₑ) = 0`:
///
/// `U(r) = (1/r)[2rₑUₑ + ∫W] − (1/r²)[rₑ²Uₑ + ∫r′W]`, integrals from `rₑ` to `r`.
pub fn reconstruct_potential<W: Fn(f64) -> f64>(w: W, ue: f64, re: f64, r: f64) -> Result<f64> {
    require_positive_radius(r)?;
    require_positive_radius(re)?;
    let first = adaptive_simpson(&w, re, r, RECONSTRUCTION_TOLERANCE)?;
    let second = adaptive_simpson(|x| x * w(x), re, r, RECONSTRUCTION_TOLERANCE)?;
    Ok((2.0 * re * ue + first) / r - (re * re * ue + second) / (r * r))
}
