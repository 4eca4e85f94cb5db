// SPDX-License-Identifier: Apache-2.0

//! Closed-form eigenvalue bookkeeping for the discrete series of so(2,1):
//! lowest weight `q₀`, the chain `qₙ = q₀ + nħ`, the Casimir value
//! `Q = q₀(q₀ − ħ)` and the ladder coefficients `c± = √(−Q + qₙ(qₙ ± ħ))`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::EffectiveStrength;
use crate::units::HBAR;

/// Radicands more negative than this indicate an inconsistent chain.
const RADICAND_FLOOR: f64 = -1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlgebraEigenvalues {
    pub l: u32,
    pub tau: f64,
    pub q0: f64,
    pub casimir: f64,
}

impl AlgebraEigenvalues {
    pub fn new(l: u32, tau: EffectiveStrength) -> Result<Self> {
        let q0 = q_ground(tau)?;
        Ok(Self {
            l,
            tau: tau.value(),
            q0,
            casimir: casimir_eigenvalue(q0),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LadderCoefficient {
    pub n_from: u32,
    pub direction: Direction,
    pub value: f64,
}

/// Lowest `T₃` eigenvalue, `q₀ = ħ/2 + ħ√(τ/ħ² + 1/4)` (normalizable branch).
pub fn q_ground(tau: EffectiveStrength) -> Result<f64> {
    let t = tau.value();
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("tau must be non-negative, got {t}")));
    }
    Ok(0.5 * HBAR + HBAR * (t / (HBAR * HBAR) + 0.25).sqrt())
}

pub fn q_n(q0: f64, n: u32) -> f64 {
    q0 + f64::from(n) * HBAR
}

pub fn casimir_eigenvalue(q0: f64) -> f64 {
    q0 * (q0 - HBAR)
}

pub fn ladder_coefficient(q0: f64, n: u32, direction: Direction) -> Result<LadderCoefficient> {
    if n == 0 && direction == Direction::Down {
        return Ok(LadderCoefficient {
            n_from: 0,
            direction,
            value: 0.0,
        });
    }
    let qn = q_n(q0, n);
    let shift = match direction {
        Direction::Up => HBAR,
        Direction::Down => -HBAR,
    };
    let radicand = -casimir_eigenvalue(q0) + qn * (qn + shift);
    if radicand < RADICAND_FLOOR || !radicand.is_finite() {
        return Err(Error::Consistency(format!(
            "ladder radicand {radicand:e} for q0 = {q0}, n = {n}, {direction:?}"
        )));
    }
    Ok(LadderCoefficient {
        n_from: n,
        direction,
        value: radicand.max(0.0).sqrt(),
    })
}

/// `Πₖ₌₀ⁿ⁻¹ c₊(k)`: the norm of `T₊ⁿ|Q, q₀⟩`.
pub fn chain_prefactor(q0: f64, n: u32) -> Result<f64> {
    (0..n).try_fold(1.0, |acc, k| {
        Ok(acc * ladder_coefficient(q0, k, Direction::Up)?.value)
    })
}
