// SPDX-License-Identifier: Apache-2.0

//! End-to-end acceptance run. Prints one line per criterion, then fails if
//! any criterion failed.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use kratzer_core::adjoint::{
    adjoint_generator, coordinate_commutators, selection_rules, Axis, Coord, Matrix3,
};
use kratzer_core::oracle::{compare_spectrum, solve_bound_states, CompareTolerances, OracleGrid};
use kratzer_core::spectrum::{energy, spectrum_table};
use kratzer_core::units::HBAR;
use kratzer_core::verify::{self, Suite, VerifyConfig, VerifyReport};
use kratzer_core::wavefunction::{bound_state, normalization_constant};
use kratzer_core::KratzerParams;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Every check whose name starts with one of `prefixes` passes; returns the worst measured value.
fn checks_pass(report: &VerifyReport, prefixes: &[&str]) -> (bool, usize, f64) {
    let mut pass = true;
    let mut count = 0;
    let mut worst = 0.0_f64;
    for c in report
        .checks()
        .filter(|c| prefixes.iter().any(|p| c.name.starts_with(p)))
    {
        count += 1;
        pass &= c.pass;
        if c.measured.is_finite() {
            worst = worst.max(c.measured);
        }
    }
    (pass && count > 0, count, worst)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let p = KratzerParams::canonical();
    let expected = [-0.5, -2.0 / 9.0, -0.125, -2.0 / 25.0, -1.0 / 18.0];
    let mut pass = (0..5).all(|n| rel(energy(&p, n, 0).unwrap(), expected[n as usize]) < 1e-14);
    let table = spectrum_table(&p, 4, 2).unwrap();
    let mut worst = 0.0_f64;
    for l in 0..=2 {
        let oracle = solve_bound_states(&p, l, 5, &OracleGrid::default()).unwrap();
        let rows: Vec<_> = table.iter().copied().filter(|e| e.l == l).collect();
        let report = compare_spectrum(&rows, &oracle, CompareTolerances::default()).unwrap();
        worst = report
            .rows
            .iter()
            .map(|r| r.relative_error)
            .fold(worst, f64::max);
        pass &= report.pass;
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(60);
    outcome(
        pass,
        format!(
            "max relative energy error {worst:.2e} (< 1e-6) in {:.1?}",
            elapsed
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut worst = 0.0_f64;
    for alpha in [-1.0, -0.3, -4.0] {
        for mu in [1.0, 7.5] {
            let p = KratzerParams::new(alpha, 0.0, mu).unwrap();
            for n in 0..=10 {
                for l in 0..=10 {
                    let k = f64::from(n + l + 1);
                    let exact = -mu * alpha * alpha / (2.0 * HBAR * HBAR * k * k);
                    worst = worst.max(rel(energy(&p, n, l).unwrap(), exact));
                }
            }
        }
    }
    outcome(
        worst <= 4.0 * f64::EPSILON,
        format!("max relative deviation {worst:.2e} (<= 4 ulp)"),
    )
}

fn criterion_3(report: &VerifyReport, elapsed: Duration) -> Outcome {
    let (closure, n, worst) = checks_pass(report, &["algebra.commutator"]);
    let (order, m, _) = checks_pass(report, &["algebra.order"]);
    let slowest = report
        .checks()
        .filter(|c| c.name.starts_with("algebra.order"))
        .map(|c| c.measured)
        .fold(f64::INFINITY, f64::min);
    outcome(
        closure && order && n == 7 && m == 7 && elapsed < Duration::from_secs(60),
        format!("{n} residuals, worst {worst:.2e} (< 1e-5); min order {slowest:.2} (>= 3.5); {elapsed:.1?}"),
    )
}

fn criterion_4(report: &VerifyReport) -> Outcome {
    let names = [
        "algebra.annihilation",
        "wavefunction.ground-ode",
        "wavefunction.norm-constant",
    ];
    let found: Vec<_> = names.iter().filter_map(|n| report.check(n)).collect();
    let checks = found.len() == names.len() && found.iter().all(|c| c.pass);
    let measured: Vec<String> = found
        .iter()
        .map(|c| format!("{:.2e}", c.measured))
        .collect();
    let a = normalization_constant(2.0, 1.0).unwrap();
    let a_ok = rel(a, 2.0 / 3.0_f64.sqrt()) < 1e-14;
    outcome(
        checks && a_ok,
        format!(
            "A = {a} (2/sqrt 3); annihilation, ODE, normalization residuals {}",
            measured.join(", ")
        ),
    )
}

fn criterion_5(report: &VerifyReport) -> Outcome {
    let (eigen, _, worst_eigen) = checks_pass(report, &["algebra.eigen["]);
    let (overlap, _, worst_overlap) = checks_pass(report, &["oracle.overlap"]);
    let (gram, _, gram_err) = checks_pass(report, &["wavefunction.gram"]);
    outcome(
        eigen && overlap && gram,
        format!(
            "eigen residual {worst_eigen:.2e}; overlap deficit {worst_overlap:.2e}; gram {gram_err:.2e}"
        ),
    )
}

fn criterion_6(report: &VerifyReport) -> Outcome {
    let (form, _, worst) = checks_pass(report, &["wavefunction.first-excited-form"]);
    let state = bound_state(&KratzerParams::canonical(), 1, 0).unwrap();
    let nodes = state.nodes();
    let node_ok = nodes.len() == 1 && (nodes[0] - 3.0).abs() < 1e-12;
    outcome(
        form && node_ok,
        format!("coefficient mismatch {worst:.2e}; nodes {nodes:?}"),
    )
}

fn criterion_7(report: &VerifyReport) -> Outcome {
    let euler = report.check("virial.euler-analytic").map(|c| c.measured);
    let recon = report.check("virial.reconstruction").map(|c| c.measured);
    let pass = euler == Some(0.0) && recon.is_some_and(|r| r <= 1e-12);
    outcome(
        pass,
        format!("Euler residual {euler:?}; reconstruction {recon:?}"),
    )
}

fn criterion_8() -> Outcome {
    let [t1, t2, t3] = Axis::ALL.map(adjoint_generator);
    let closure =
        t1.commutator(&t2) == t3.scale(-1) && t2.commutator(&t3) == t1 && t3.commutator(&t1) == t2;
    let metric = [t1, t2, t3]
        .iter()
        .all(|t| t.metric_defect() == Matrix3::<i64>::zero());
    let rules = selection_rules(&coordinate_commutators());
    let union = rules.union();
    let z = rules.allowed.get(&Coord::Z).cloned().unwrap_or_default();
    let pass = closure && metric && union == BTreeSet::from([-1, 0, 1]) && z == BTreeSet::from([0]);
    outcome(
        pass,
        format!("closure {closure}; metric {metric}; union {union:?}; z {z:?}"),
    )
}

fn criterion_9(report: &VerifyReport) -> Outcome {
    let (pass, n, worst) = checks_pass(report, &["algebra.ladder["]);
    outcome(
        pass && n == 2,
        format!("worst ladder residual {worst:.2e} (< 1e-4)"),
    )
}

fn criterion_10() -> Outcome {
    let run = || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_kratzer"))
            .args(["verify", "--suite", "all"])
            .output()
            .expect("binary runs");
        (out, start.elapsed())
    };
    let (first, t1) = run();
    let (second, t2) = run();
    let exit_ok = first.status.code() == Some(0) && second.status.code() == Some(0);
    let identical = first.stdout == second.stdout && !first.stdout.is_empty();
    let fast = t1.max(t2) < Duration::from_secs(300);
    outcome(
        exit_ok && identical && fast,
        format!(
            "exit {:?}/{:?}; byte-identical {identical}; slowest run {:.1?}",
            first.status.code(),
            second.status.code(),
            t1.max(t2)
        ),
    )
}

#[test]
fn acceptance() {
    let config = VerifyConfig::default();
    let start = Instant::now();
    let algebra = verify::run(&[Suite::Algebra], &config).unwrap();
    let algebra_time = start.elapsed();
    let rest = verify::run(
        &[Suite::Oracle, Suite::Virial, Suite::Wavefunction],
        &config,
    )
    .unwrap();
    let report = VerifyReport {
        pass: algebra.pass && rest.pass,
        suites: algebra.suites.into_iter().chain(rest.suites).collect(),
    };

    let results = [
        ("closed-form energies match the oracle", criterion_1()),
        ("Coulomb reduction", criterion_2()),
        (
            "algebra closure on the grid",
            criterion_3(&report, algebra_time),
        ),
        ("ground-state definition", criterion_4(&report)),
        ("per-state scale factor", criterion_5(&report)),
        ("first excited state form", criterion_6(&report)),
        ("virial structure", criterion_7(&report)),
        ("adjoint representation", criterion_8()),
        ("ladder chain normalization", criterion_9(&report)),
        ("end-to-end determinism", criterion_10()),
    ];
    for (i, (title, o)) in results.iter().enumerate() {
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            title,
            o.detail
        );
    }
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, (_, o))| !o.pass)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
