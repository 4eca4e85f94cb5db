// SPDX-License-Identifier: Apache-2.0

//! Independent finite-difference solution of the radial equation
//!
//! ```text
//! −(ħ²/2μ) f″ + [α/r + (β + l(l+1)ħ²/2μ)/r²] f = E f,   f(r_min) = f(r_max) = 0,
//! ```
//!
//! by a three-point discretization on a uniform grid. Energies from two
//! resolutions are Richardson-extrapolated.

use serde::Serialize;

use crate::algebra::q_ground;
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::model::{tau, KratzerParams};
use crate::spectrum::{sigma_n, SpectrumEntry};
use crate::tridiagonal::SymTridiagonal;
use crate::units::HBAR;
use crate::wavefunction::state_for_entry;

/// Box and resolution. Unset bounds are derived from the parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleGrid {
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    /// Intervals on the coarse grid; the fine grid has twice as many.
    pub intervals: usize,
}

impl Default for OracleGrid {
    fn default() -> Self {
        Self {
            r_min: None,
            r_max: None,
            intervals: 20_000,
        }
    }
}

impl OracleGrid {
    pub fn with_intervals(intervals: usize) -> Self {
        Self {
            intervals,
            ..Self::default()
        }
    }

    /// `[1e−4·rₑ_eff, x_hi·ħσ_{count−1}]` with `rₑ_eff = 2β_eff/(−α)` and
    /// `x_hi = max(60, 2(q₀/ħ + count − 1) + 30)`.
    pub fn resolve(&self, p: &KratzerParams, l: u32, count: u32) -> Result<(f64, f64)> {
        let re_eff = 2.0 * p.effective_beta(l) / -p.alpha;
        let r_min = self.r_min.unwrap_or(1e-4 * re_eff);
        let r_max = match self.r_max {
            Some(v) => v,
            None => default_r_max(p, l, count)?,
        };
        if !(r_min >= 0.0 && r_max > r_min && r_max.is_finite()) {
            return Err(Error::Domain(format!(
                "invalid oracle box [{r_min}, {r_max}]"
            )));
        }
        Ok((r_min, r_max))
    }
}

fn default_r_max(p: &KratzerParams, l: u32, count: u32) -> Result<f64> {
    let s = q_ground(tau(p, l))? / HBAR;
    let x_hi = (2.0 * (s + f64::from(count - 1)) + 30.0).max(60.0);
    Ok(x_hi * HBAR * sigma_n(p, count - 1, l)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub l: u32,
    pub energies: Vec<f64>,
    /// Samples of `f = rQ` on `grid`, normalized to `∫ f² dr = 1`.
    #[serde(skip)]
    pub states: Vec<Vec<f64>>,
    #[serde(skip)]
    pub grid: RadialGrid,
    pub estimated_error: Vec<f64>,
    /// Raw eigenvalues on the coarse and fine grids.
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
}

impl OracleResult {
    pub fn node_counts(&self) -> Vec<usize> {
        self.states.iter().map(|s| count_nodes(s)).collect()
    }
}

struct Discretized {
    grid: RadialGrid,
    matrix: SymTridiagonal,
    origin: bool,
}

fn discretize(
    p: &KratzerParams,
    l: u32,
    r_min: f64,
    r_max: f64,
    intervals: usize,
) -> Result<Discretized> {
    if intervals < 4 {
        return Err(Error::Usage(format!(
            "oracle needs at least 4 intervals, got {intervals}"
        )));
    }
    let h = (r_max - r_min) / intervals as f64;
    // with r_min = 0 the origin only carries the boundary zero and is left off the grid
    let origin = r_min == 0.0;
    let grid = if origin {
        RadialGrid::uniform(h, r_max, intervals)?
    } else {
        RadialGrid::uniform(r_min, r_max, intervals + 1)?
    };
    let kinetic = HBAR * HBAR / (2.0 * p.mu * h * h);
    let beta_eff = p.effective_beta(l);
    let skip = usize::from(!origin);
    let interior = &grid.points()[skip..grid.len() - 1];
    let diag = interior
        .iter()
        .map(|&r| 2.0 * kinetic + p.alpha / r + beta_eff / (r * r))
        .collect();
    let off = vec![-kinetic; interior.len() - 1];
    Ok(Discretized {
        matrix: SymTridiagonal::new(diag, off)?,
        grid,
        origin,
    })
}

/// Lowest `count` eigenpairs, Richardson-refined.
pub fn solve_bound_states(
    p: &KratzerParams,
    l: u32,
    count: u32,
    setup: &OracleGrid,
) -> Result<OracleResult> {
    if count == 0 {
        return Err(Error::Usage("count must be at least 1".into()));
    }
    p.require_bound()?;
    let (r_min, r_max) = setup.resolve(p, l, count)?;
    let k = count as usize;

    let coarse = discretize(p, l, r_min, r_max, setup.intervals)?;
    let found = coarse.matrix.count_below(0.0);
    if found < k {
        let wanted = default_r_max(p, l, count)?;
        return Err(Error::BoxTooSmall {
            found,
            requested: k,
            suggested_r_max: wanted.max(2.0 * r_max),
        });
    }
    let e_coarse: Vec<f64> = (0..k).map(|i| coarse.matrix.eigenvalue(i)).collect();

    let fine = discretize(p, l, r_min, r_max, 2 * setup.intervals)?;
    let e_fine: Vec<f64> = (0..k).map(|i| fine.matrix.eigenvalue(i)).collect();
    if fine.matrix.count_below(0.0) < k {
        return Err(Error::BoxTooSmall {
            found: fine.matrix.count_below(0.0),
            requested: k,
            suggested_r_max: 2.0 * r_max,
        });
    }

    let energies: Vec<f64> = e_coarse
        .iter()
        .zip(&e_fine)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect();
    let estimated_error = energies
        .iter()
        .zip(&e_fine)
        .map(|(e, f)| (e - f).abs())
        .collect();

    let mut states = Vec::with_capacity(k);
    for &lambda in &e_fine {
        let v = fine.matrix.eigenvector(lambda)?;
        let mut f = Vec::with_capacity(v.len() + 2);
        if !fine.origin {
            f.push(0.0);
        }
        f.extend(v);
        f.push(0.0);
        let norm = fine
            .grid
            .integrate(&f.iter().map(|x| x * x).collect::<Vec<_>>())
            .sqrt();
        let sign = f
            .iter()
            .copied()
            .find(|x| x.abs() > 1e-8 * norm)
            .map_or(1.0, f64::signum);
        f.iter_mut().for_each(|x| *x *= sign / norm);
        states.push(f);
    }

    let result = OracleResult {
        l,
        energies,
        states,
        grid: fine.grid,
        estimated_error,
        coarse: e_coarse,
        fine: e_fine,
    };
    if result.energies.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Consistency(
            "oracle energies are not strictly increasing".into(),
        ));
    }
    for (i, nodes) in result.node_counts().into_iter().enumerate() {
        if nodes != i {
            return Err(Error::Consistency(format!(
                "oracle state {i} has {nodes} nodes"
            )));
        }
    }
    Ok(result)
}

/// Sign changes among samples above `1e−8` of the peak.
pub fn count_nodes(f: &[f64]) -> usize {
    let peak = f.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let mut prev = 0.0_f64;
    let mut nodes = 0;
    for &v in f {
        if v.abs() <= 1e-8 * peak {
            continue;
        }
        if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
            nodes += 1;
        }
        prev = v;
    }
    nodes
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompareTolerances {
    pub energy: f64,
    pub overlap: f64,
}

impl Default for CompareTolerances {
    fn default() -> Self {
        Self {
            energy: 1e-6,
            overlap: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub n: u32,
    pub l: u32,
    pub closed_form: f64,
    pub oracle: f64,
    pub relative_error: f64,
    /// `1 − |⟨algebraic|oracle⟩|`.
    pub overlap_deficit: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    pub tolerances: CompareTolerances,
    pub pass: bool,
}

impl ComparisonReport {
    pub fn failing(&self) -> impl Iterator<Item = &ComparisonRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

pub fn compare_spectrum(
    table: &[SpectrumEntry],
    oracle: &OracleResult,
    tol: CompareTolerances,
) -> Result<ComparisonReport> {
    let mut rows = Vec::with_capacity(table.len());
    for entry in table {
        if entry.l != oracle.l {
            return Err(Error::Usage(format!(
                "table row has l = {} but the oracle solved l = {}",
                entry.l, oracle.l
            )));
        }
        let n = entry.n as usize;
        let Some(&e_oracle) = oracle.energies.get(n) else {
            return Err(Error::Usage(format!(
                "oracle has {} states, table asks for n = {n}",
                oracle.energies.len()
            )));
        };
        let relative_error = ((entry.energy - e_oracle) / e_oracle).abs();
        let state = state_for_entry(entry)?;
        let y: Vec<f64> = oracle
            .grid
            .points()
            .iter()
            .zip(&oracle.states[n])
            .map(|(&r, v)| state.f(r) * v)
            .collect();
        let overlap_deficit = 1.0 - oracle.grid.integrate(&y).abs();
        rows.push(ComparisonRow {
            n: entry.n,
            l: entry.l,
            closed_form: entry.energy,
            oracle: e_oracle,
            relative_error,
            overlap_deficit,
            pass: relative_error < tol.energy && overlap_deficit.abs() < tol.overlap,
        });
    }
    Ok(ComparisonReport {
        pass: rows.iter().all(|r| r.pass),
        rows,
        tolerances: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::spectrum_table;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn canonical_energies() {
        let p = KratzerParams::canonical();
        let res = solve_bound_states(&p, 0, 3, &OracleGrid::default()).unwrap();
        for (e, want) in res.energies.iter().zip([-0.5, -2.0 / 9.0, -0.125]) {
            assert!(rel(*e, want) < 1e-6, "{e} vs {want}");
        }
        assert_eq!(res.node_counts(), vec![0, 1, 2]);
        assert!(res.estimated_error.iter().all(|e| e.is_finite()));
    }

    #[test]
    fn coulomb_energies() {
        let p = KratzerParams::new(-1.0, 0.0, 1.0).unwrap();
        let res = solve_bound_states(&p, 0, 2, &OracleGrid::default()).unwrap();
        assert!(rel(res.energies[0], -0.5) < 1e-5, "{}", res.energies[0]);
        assert!(rel(res.energies[1], -0.125) < 1e-5, "{}", res.energies[1]);
    }

    #[test]
    fn small_box_reported() {
        let p = KratzerParams::canonical();
        let setup = OracleGrid {
            r_max: Some(3.0),
            intervals: 2000,
            ..OracleGrid::default()
        };
        match solve_bound_states(&p, 0, 3, &setup) {
            Err(Error::BoxTooSmall {
                requested,
                suggested_r_max,
                ..
            }) => {
                assert_eq!(requested, 3);
                assert!(suggested_r_max > 3.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn comparison_flags_corrupted_row() {
        let p = KratzerParams::canonical();
        let res = solve_bound_states(&p, 0, 3, &OracleGrid::default()).unwrap();
        let mut table = spectrum_table(&p, 2, 0).unwrap();
        let report = compare_spectrum(&table, &res, CompareTolerances::default()).unwrap();
        assert!(report.pass, "{report:?}");
        table[1].energy += 1e-3;
        let report = compare_spectrum(&table, &res, CompareTolerances::default()).unwrap();
        let bad: Vec<u32> = report.failing().map(|r| r.n).collect();
        assert_eq!(bad, vec![1]);
    }

    #[test]
    fn heavy_molecule_box_holds_the_well() {
        let p = KratzerParams::new(-2.0 * 0.41 * 2.13, 0.41 * 2.13 * 2.13, 12_500.0).unwrap();
        let res = solve_bound_states(&p, 0, 2, &OracleGrid::default()).unwrap();
        for n in 0..2 {
            let want = crate::spectrum::energy(&p, n, 0).unwrap();
            assert!(rel(res.energies[n as usize], want) < 1e-6);
        }
    }

    #[test]
    fn node_counting() {
        assert_eq!(count_nodes(&[0.0, 1.0, 2.0, -1.0, 0.0, 1.0, 0.0]), 2);
        assert_eq!(count_nodes(&[0.0, 1.0, 1e-12, -1e-12, 1.0]), 0);
    }
}
