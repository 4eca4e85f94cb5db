// SPDX-License-Identifier: Apache-2.0

//! Verification suites: every algebraic relation, closed form and oracle
//! comparison reduced to a named measured value with a tolerance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::adjoint::{
    adjoint_generator, coordinate_commutators, exponential_series, finite_transformation,
    selection_rules, Axis, Coord, CoordinateCommutatorTable, Matrix3,
};
use crate::algebra::{casimir_eigenvalue, ladder_coefficient, q_ground, q_n, Direction};
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::model::{reconstruct_potential, tau, virial_residual, KratzerParams, Potential};
use crate::operators::{
    annihilation_residual, build_generators, casimir_consistency, commutator_residual,
    convergence_order, eigen_residual, ladder_residual, scaled_grid, GridOperator, TestFunctionSet,
};
use crate::oracle::{compare_spectrum, solve_bound_states, CompareTolerances, OracleGrid};
use crate::spectrum::{energy, sigma_n, spectrum_entry};
use crate::units::HBAR;
use crate::wavefunction::{
    bound_state, ground_ode_residual, ladder_state, normalization_constant, schrodinger_residual,
    BoundState, Measure,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Oracle,
    Virial,
    Adjoint,
    Wavefunction,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Algebra,
        Suite::Oracle,
        Suite::Virial,
        Suite::Adjoint,
        Suite::Wavefunction,
    ];

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebra" => Ok(Self::Algebra),
            "oracle" => Ok(Self::Oracle),
            "virial" => Ok(Self::Virial),
            "adjoint" => Ok(Self::Adjoint),
            "wavefunction" => Ok(Self::Wavefunction),
            _ => Err(Error::Usage(format!(
                "unknown suite `{s}` (expected algebra, oracle, virial, adjoint, wavefunction or all)"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Algebra => "algebra",
            Self::Oracle => "oracle",
            Self::Virial => "virial",
            Self::Adjoint => "adjoint",
            Self::Wavefunction => "wavefunction",
        })
    }
}

/// Whether the tolerance caps the measurement from above or below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bound {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjointDetails {
    /// `"[T3,x]" → "y"`.
    pub commutators: BTreeMap<String, String>,
    pub selection_rules: BTreeMap<Coord, Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub pass: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjoint: Option<AdjointDetails>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.suites.iter().flat_map(|s| s.checks.iter())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub params: KratzerParams,
    /// Replaces every tolerance.
    pub tolerance: Option<f64>,
    /// Per-check tolerances by exact name; take precedence over `tolerance`.
    pub overrides: BTreeMap<String, f64>,
    pub operator_points: usize,
    pub oracle: OracleGrid,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            params: KratzerParams::canonical(),
            tolerance: None,
            overrides: BTreeMap::new(),
            operator_points: 4000,
            oracle: OracleGrid::default(),
        }
    }
}

struct Recorder<'a> {
    config: &'a VerifyConfig,
    checks: Vec<Check>,
}

impl<'a> Recorder<'a> {
    fn new(config: &'a VerifyConfig) -> Self {
        Self {
            config,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, measured: f64, tolerance: f64, bound: Bound) {
        let name = name.into();
        let tolerance = self
            .config
            .overrides
            .get(&name)
            .copied()
            .or(self.config.tolerance)
            .unwrap_or(tolerance);
        let pass = match bound {
            Bound::Upper => measured <= tolerance,
            Bound::Lower => measured >= tolerance,
        };
        self.checks.push(Check {
            name,
            measured,
            tolerance,
            bound,
            pass,
        });
    }

    fn upper(&mut self, name: impl Into<String>, measured: f64, tolerance: f64) {
        self.push(name, measured, tolerance, Bound::Upper);
    }

    fn lower(&mut self, name: impl Into<String>, measured: f64, tolerance: f64) {
        self.push(name, measured, tolerance, Bound::Lower);
    }

    fn finish(self, suite: Suite, adjoint: Option<AdjointDetails>) -> SuiteReport {
        SuiteReport {
            suite,
            pass: self.checks.iter().all(|c| c.pass),
            checks: self.checks,
            adjoint,
        }
    }
}

pub fn run(suites: &[Suite], config: &VerifyConfig) -> Result<VerifyReport> {
    let mut reports = Vec::with_capacity(suites.len());
    for &suite in suites {
        reports.push(match suite {
            Suite::Algebra => algebra_suite(config)?,
            Suite::Oracle => oracle_suite(config)?,
            Suite::Virial => virial_suite(config)?,
            Suite::Adjoint => adjoint_suite(config),
            Suite::Wavefunction => wavefunction_suite(config)?,
        });
    }
    Ok(VerifyReport {
        pass: reports.iter().all(|r| r.pass),
        suites: reports,
    })
}

fn samples(state: &BoundState, grid: &RadialGrid) -> Vec<f64> {
    grid.points().iter().map(|&r| state.f(r)).collect()
}

const MIN_ORDER_POINTS: usize = 500;

/// Commutator residuals of the five so(2,1) relations plus `[R,P]`.
fn commutator_set(p: &KratzerParams, points: usize) -> Result<Vec<(String, f64)>> {
    let sigma = sigma_n(p, 0, 0)?;
    let a = HBAR * sigma;
    let s = q_ground(tau(p, 0))? / HBAR;
    let grid = scaled_grid(a, (2.0 * (s + 3.0) + 30.0).max(60.0), points)?;
    let g = build_generators(grid.clone(), sigma, tau(p, 0).value())?;
    let tests = TestFunctionSet::scaled(grid.clone(), a)?;
    let i = num_complex::Complex64::new(0.0, HBAR);
    let h = num_complex::Complex64::new(HBAR, 0.0);
    let identity = GridOperator::identity(grid);
    Ok(vec![
        (
            "[R,P]".into(),
            commutator_residual(&g.r, &g.p, &identity, i, &tests)?,
        ),
        (
            "[T1,T2]".into(),
            commutator_residual(&g.t1, &g.t2, &g.t3, -i, &tests)?,
        ),
        (
            "[T2,T3]".into(),
            commutator_residual(&g.t2, &g.t3, &g.t1, i, &tests)?,
        ),
        (
            "[T3,T1]".into(),
            commutator_residual(&g.t3, &g.t1, &g.t2, i, &tests)?,
        ),
        (
            "[T3,T+]".into(),
            commutator_residual(&g.t3, &g.t_plus, &g.t_plus, h, &tests)?,
        ),
        (
            "[T3,T-]".into(),
            commutator_residual(&g.t3, &g.t_minus, &g.t_minus, -h, &tests)?,
        ),
        (
            "[T+,T-]".into(),
            commutator_residual(&g.t_plus, &g.t_minus, &g.t3, -2.0 * h, &tests)?,
        ),
    ])
}

fn algebra_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let p = &config.params;
    let mut rec = Recorder::new(config);
    let n_pts = config.operator_points;

    for (name, c) in commutator_set(p, n_pts)? {
        let tol = if name == "[R,P]" { 1e-6 } else { 1e-5 };
        rec.upper(format!("algebra.commutator{name}"), c, tol);
    }
    let coarse = commutator_set(p, (n_pts / 4).max(MIN_ORDER_POINTS))?;
    let fine = commutator_set(p, 2 * (n_pts / 4).max(MIN_ORDER_POINTS))?;
    for ((name, c), (_, f)) in coarse.iter().zip(&fine) {
        rec.lower(
            format!("algebra.order{name}"),
            convergence_order(*c, *f),
            3.5,
        );
    }

    let t = tau(p, 0).value();
    let q0 = q_ground(tau(p, 0))?;
    let s = q0 / HBAR;
    let sigma0 = sigma_n(p, 0, 0)?;
    let a0 = HBAR * sigma0;
    let x_hi = (2.0 * (s + 3.0) + 30.0).max(60.0);
    let grid = scaled_grid(a0, x_hi, n_pts)?;
    let g = build_generators(grid.clone(), sigma0, t)?;
    let tests = TestFunctionSet::scaled(grid.clone(), a0)?;
    rec.upper(
        "algebra.casimir-forms",
        casimir_consistency(&g, &tests)?,
        1e-5,
    );
    rec.upper(
        "algebra.casimir-value",
        (casimir_eigenvalue(q0) - t).abs() / t.max(1.0),
        1e-12,
    );

    let f0 = samples(&bound_state(p, 0, 0)?, &grid);
    rec.upper(
        "algebra.casimir-ground",
        eigen_residual(&g.casimir, &f0, casimir_eigenvalue(q0))?,
        1e-5,
    );
    rec.upper(
        "algebra.annihilation",
        annihilation_residual(&g.t_minus, &f0)?,
        1e-5,
    );
    let wrong = build_generators(grid.clone(), 1.1 * sigma0, t)?;
    rec.lower(
        "algebra.annihilation-wrong-sigma",
        annihilation_residual(&wrong.t_minus, &f0)?,
        1e-2,
    );
    let f1 = samples(&bound_state(p, 1, 0)?, &grid);
    rec.lower(
        "algebra.annihilation-excited",
        annihilation_residual(&g.t_minus, &f1)?,
        1e-1,
    );
    rec.lower(
        "algebra.eigen-wrong-value",
        eigen_residual(&g.t3, &f0, 0.0)?,
        0.5,
    );

    for n in 0..3 {
        let sigma = sigma_n(p, n, 0)?;
        let gn = build_generators(grid.clone(), sigma, t)?;
        let fnn = samples(&bound_state(p, n, 0)?, &grid);
        rec.upper(
            format!("algebra.eigen[n={n}]"),
            eigen_residual(&gn.t3, &fnn, q_n(q0, n))?,
            1e-5,
        );
    }

    for n in 0..2 {
        let lo = ladder_state(p, 0, sigma0, n, Measure::Dilation)?;
        let hi = ladder_state(p, 0, sigma0, n + 1, Measure::Dilation)?;
        let c = ladder_coefficient(q0, n, Direction::Up)?.value;
        let res = ladder_residual(&g.t_plus, &samples(&lo, &grid), &samples(&hi, &grid), c)?;
        rec.upper(format!("algebra.ladder[n={n}]"), res, 1e-4);
    }
    Ok(rec.finish(Suite::Algebra, None))
}

fn oracle_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let p = &config.params;
    let mut rec = Recorder::new(config);
    for l in 0..=2 {
        let oracle = solve_bound_states(p, l, 5, &config.oracle)?;
        let table = (0..5)
            .map(|n| spectrum_entry(p, n, l))
            .collect::<Result<Vec<_>>>()?;
        let report = compare_spectrum(&table, &oracle, CompareTolerances::default())?;
        for row in &report.rows {
            rec.upper(
                format!("oracle.energy[n={},l={l}]", row.n),
                row.relative_error,
                1e-6,
            );
            rec.upper(
                format!("oracle.overlap[n={},l={l}]", row.n),
                row.overlap_deficit.abs(),
                1e-6,
            );
        }
        let node_mismatch = oracle
            .node_counts()
            .iter()
            .enumerate()
            .filter(|(i, c)| *i != **c)
            .count();
        rec.upper(format!("oracle.nodes[l={l}]"), node_mismatch as f64, 0.0);

        let finer = OracleGrid {
            intervals: 2 * config.oracle.intervals,
            ..config.oracle
        };
        let refined = solve_bound_states(p, l, 5, &finer)?;
        let drift = oracle
            .energies
            .iter()
            .zip(&refined.energies)
            .map(|(a, b)| ((a - b) / b).abs())
            .fold(0.0, f64::max);
        rec.upper(format!("oracle.halving[l={l}]"), drift, 1e-8);
    }

    // β → 0: the closed form reduces to −μα²/(2ħ²(n+l+1)²)
    let coulomb = KratzerParams::new(p.alpha, 0.0, p.mu)?;
    let mut worst = 0.0_f64;
    for n in 0..=10 {
        for l in 0..=10 {
            let k = f64::from(n + l + 1);
            let want = -coulomb.mu * coulomb.alpha * coulomb.alpha / (2.0 * HBAR * HBAR * k * k);
            worst = worst.max(((energy(&coulomb, n, l)? - want) / want).abs());
        }
    }
    rec.upper("oracle.coulomb-limit", worst, 4.0 * f64::EPSILON);
    Ok(rec.finish(Suite::Oracle, None))
}

fn virial_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let p = &config.params;
    let mut rec = Recorder::new(config);
    let re = p.equilibrium_distance();
    let radii: Vec<f64> = [0.25, 0.5, 1.0, 2.0, 5.0, 20.0]
        .iter()
        .map(|x| if re > 0.0 { x * re } else { *x })
        .collect();

    let mut analytic = 0.0_f64;
    let mut numeric = 0.0_f64;
    let closure = |r: f64| p.alpha / r + p.beta / (r * r);
    for &r in &radii {
        analytic = analytic.max(virial_residual(p, r)?.abs());
        numeric =
            numeric.max(virial_residual(&closure, r)?.abs() / closure.value(r).abs().max(1.0));
    }
    rec.upper("virial.euler-analytic", analytic, 0.0);
    rec.upper("virial.euler-finite-difference", numeric, 1e-4);

    if p.beta > 0.0 {
        let ue = -p.well_depth();
        let mut worst = 0.0_f64;
        for &r in &radii {
            let u = reconstruct_potential(|_| 0.0, ue, re, r)?;
            let want = p.value(r);
            worst = worst.max(((u - want) / want.abs().max(f64::MIN_POSITIVE)).abs());
        }
        rec.upper("virial.reconstruction", worst, 1e-12);
    }
    Ok(rec.finish(Suite::Virial, None))
}

fn matrix_defect(m: &Matrix3<i64>) -> f64 {
    m.0.iter().flatten().map(|v| v.abs()).max().unwrap_or(0) as f64
}

fn adjoint_suite(config: &VerifyConfig) -> SuiteReport {
    let mut rec = Recorder::new(config);
    let t = |a: Axis| adjoint_generator(a);
    let (t1, t2, t3) = (t(Axis::One), t(Axis::Two), t(Axis::Three));
    rec.upper(
        "adjoint.[T1,T2]+T3",
        matrix_defect(&(t1.commutator(&t2) + t3)),
        0.0,
    );
    rec.upper(
        "adjoint.[T2,T3]-T1",
        matrix_defect(&(t2.commutator(&t3) - t1)),
        0.0,
    );
    rec.upper(
        "adjoint.[T3,T1]-T2",
        matrix_defect(&(t3.commutator(&t1) - t2)),
        0.0,
    );
    for axis in Axis::ALL {
        let k = axis.index() + 1;
        rec.upper(
            format!("adjoint.metric[T{k}]"),
            matrix_defect(&t(axis).metric_defect()),
            0.0,
        );
    }

    let table = coordinate_commutators();
    let derived = CoordinateCommutatorTable::from_generators();
    let mismatches = Axis::ALL
        .iter()
        .flat_map(|&a| Coord::ALL.map(|c| (a, c)))
        .filter(|&(a, c)| table.entry(a, c) != derived.entry(a, c))
        .count();
    rec.upper("adjoint.table-vs-group-action", mismatches as f64, 0.0);

    let eps = 1e-3;
    let mut series = 0.0_f64;
    for axis in Axis::ALL {
        let first = finite_transformation(eps, axis).expect("|eps| < 1");
        series = series.max((exponential_series(eps, axis, 2) - first).max_abs());
    }
    rec.upper(
        "adjoint.first-order-transformation",
        series / (eps * eps),
        1.0,
    );

    let rules = selection_rules(&table);
    let expected: BTreeMap<Coord, Vec<i64>> = [
        (Coord::X, vec![-1, 1]),
        (Coord::Y, vec![-1, 1]),
        (Coord::Z, vec![0]),
    ]
    .into_iter()
    .collect();
    let found: BTreeMap<Coord, Vec<i64>> = rules
        .allowed
        .iter()
        .map(|(c, s)| (*c, s.iter().copied().collect()))
        .collect();
    let wrong = Coord::ALL
        .iter()
        .filter(|c| found[c] != expected[c])
        .count();
    rec.upper("adjoint.selection-rules", wrong as f64, 0.0);
    let union: Vec<i64> = rules.union().into_iter().collect();
    rec.upper(
        "adjoint.selection-union",
        if union == [-1, 0, 1] { 0.0 } else { 1.0 },
        0.0,
    );

    let mut commutators = BTreeMap::new();
    for axis in Axis::ALL {
        for c in Coord::ALL {
            commutators.insert(
                format!("[T{},{c}]", axis.index() + 1),
                table.render(axis, c),
            );
        }
    }
    rec.finish(
        Suite::Adjoint,
        Some(AdjointDetails {
            commutators,
            selection_rules: found,
        }),
    )
}

fn wavefunction_suite(config: &VerifyConfig) -> Result<SuiteReport> {
    let p = &config.params;
    let mut rec = Recorder::new(config);
    let q0 = q_ground(tau(p, 0))?;
    let s = q0 / HBAR;
    let sigma0 = sigma_n(p, 0, 0)?;

    let analytic = normalization_constant(q0, sigma0)?;
    let quadrature = ladder_state(p, 0, sigma0, 0, Measure::Radial)?.norm_constant;
    rec.upper(
        "wavefunction.norm-constant",
        (analytic / quadrature - 1.0).abs(),
        1e-10,
    );

    let ground = bound_state(p, 0, 0)?;
    let g0 = crate::wavefunction::default_grid(&ground);
    rec.upper(
        "wavefunction.ground-ode",
        ground_ode_residual(&ground, &g0),
        1e-8,
    );

    let states: Vec<BoundState> = (0..5)
        .map(|n| bound_state(p, n, 0))
        .collect::<Result<_>>()?;
    let a_lo = states[0].scale;
    let a_hi = states[4].scale;
    let common =
        RadialGrid::log_uniform(1e-4 * a_lo, (2.0 * (s + 4.0) + 30.0).max(40.0) * a_hi, 8000)?;
    let sampled: Vec<Vec<f64>> = states.iter().map(|st| samples(st, &common)).collect();
    let mut gram = 0.0_f64;
    for i in 0..5 {
        for j in 0..5 {
            let y: Vec<f64> = sampled[i]
                .iter()
                .zip(&sampled[j])
                .map(|(a, b)| a * b)
                .collect();
            let want = if i == j { 1.0 } else { 0.0 };
            gram = gram.max((common.integrate(&y) - want).abs());
        }
    }
    rec.upper("wavefunction.gram", gram, 1e-6);

    for (n, st) in states.iter().enumerate() {
        rec.upper(
            format!("wavefunction.nodes[n={n}]"),
            (st.node_count() as f64 - n as f64).abs(),
            0.0,
        );
        let grid = crate::wavefunction::default_grid(st);
        rec.upper(
            format!("wavefunction.schrodinger[n={n}]"),
            schrodinger_residual(st, p, &grid)?,
            1e-9,
        );
    }

    // Q₁ = 2[√(q₀/2ħ)/r − (1/σ)√(1/(2q₀ħ))] A r^{q₀/ħ} e^{−r/ħσ} with σ → σ₁
    let sigma1 = sigma_n(p, 1, 0)?;
    let printed = [
        (q0 / (2.0 * HBAR)).sqrt(),
        -(1.0 / (2.0 * q0 * HBAR)).sqrt() / sigma1,
    ];
    let generated = states[1].poly_coeffs_r();
    let mismatch = ((generated[1] / generated[0]) / (printed[1] / printed[0]) - 1.0).abs();
    rec.upper("wavefunction.first-excited-form", mismatch, 1e-12);
    let node = states[1].nodes().first().copied().unwrap_or(f64::NAN);
    let want = q0 * sigma1;
    rec.upper(
        "wavefunction.first-node",
        ((node - want) / want).abs(),
        1e-12,
    );
    Ok(rec.finish(Suite::Wavefunction, None))
}
