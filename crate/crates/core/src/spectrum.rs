// SPDX-License-Identifier: Apache-2.0

//! Closed-form bound-state energies.
//!
//! The scale factor `σₙ` of the canonical map `R = r/σ, P = σp_r` is fixed by
//! `qₙ = −μσₙα`; the energy then follows from `ε = −1/(2μσₙ²)`.

use serde::Serialize;

use crate::algebra::{q_ground, q_n};
use crate::error::Result;
use crate::model::{tau, KratzerParams};
use crate::units::{MolecularParams, HBAR};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub n: u32,
    pub l: u32,
    pub q0: f64,
    pub qn: f64,
    pub sigma_n: f64,
    pub energy: f64,
}

/// `(l + 1/2)² + 2μβ/ħ²` under the square root.
fn radical(p: &KratzerParams, l: u32) -> f64 {
    let lh = f64::from(l) + 0.5;
    (lh * lh + 2.0 * p.mu * p.beta / (HBAR * HBAR)).sqrt()
}

/// `σₙ = −(ħ/μα){n + 1/2 + [(l+1/2)² + 2μβ/ħ²]^{1/2}}`.
pub fn sigma_n(p: &KratzerParams, n: u32, l: u32) -> Result<f64> {
    p.require_bound()?;
    Ok(-(HBAR / (p.mu * p.alpha)) * (f64::from(n) + 0.5 + radical(p, l)))
}

/// `εₙ,ₗ = −1/(2μσₙ²)`.
pub fn energy(p: &KratzerParams, n: u32, l: u32) -> Result<f64> {
    let sigma = sigma_n(p, n, l)?;
    Ok(-1.0 / (2.0 * p.mu * sigma * sigma))
}

/// The energy written directly in the spectroscopic constants:
/// `−2Dₑ²rₑ²μ / (ħ²{n + 1/2 + [(l+1/2)² + 2Dₑrₑ²μ/ħ²]^{1/2}}²)`.
pub fn energy_spectroscopic(m: &MolecularParams, n: u32, l: u32) -> f64 {
    let lh = f64::from(l) + 0.5;
    let s = 2.0 * m.de * m.re * m.re * m.mu / (HBAR * HBAR);
    let d = f64::from(n) + 0.5 + (lh * lh + s).sqrt();
    -2.0 * m.de * m.de * m.re * m.re * m.mu / (HBAR * HBAR * d * d)
}

/// The same expression with `Dₑrₑ = −α/2`, `Dₑrₑ² = β`; valid at `β = 0`.
pub fn energy_expanded(p: &KratzerParams, n: u32, l: u32) -> f64 {
    let d = f64::from(n) + 0.5 + radical(p, l);
    -p.mu * p.alpha * p.alpha / (2.0 * HBAR * HBAR * d * d)
}

pub fn spectrum_entry(p: &KratzerParams, n: u32, l: u32) -> Result<SpectrumEntry> {
    let q0 = q_ground(tau(p, l))?;
    let sigma = sigma_n(p, n, l)?;
    Ok(SpectrumEntry {
        n,
        l,
        q0,
        qn: q_n(q0, n),
        sigma_n: sigma,
        energy: -1.0 / (2.0 * p.mu * sigma * sigma),
    })
}

/// All `(n, l)` with `n ≤ n_max`, `l ≤ l_max`, ordered by `l` then `n`.
pub fn spectrum_table(p: &KratzerParams, n_max: u32, l_max: u32) -> Result<Vec<SpectrumEntry>> {
    let mut out = Vec::with_capacity(((n_max + 1) * (l_max + 1)) as usize);
    for l in 0..=l_max {
        for n in 0..=n_max {
            out.push(spectrum_entry(p, n, l)?);
        }
    }
    Ok(out)
}
