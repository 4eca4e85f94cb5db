// SPDX-License-Identifier: Apache-2.0

//! Polynomial factors checked against generalized Laguerre polynomials built
//! from their three-term recurrence.

use kratzer_core::wavefunction::{bound_state, ladder_polynomial};
use kratzer_core::KratzerParams;
use proptest::prelude::*;

/// `L_n^{(a)}(x)` by `(k+1)L_{k+1} = (2k+1+a−x)L_k − (k+a)L_{k−1}`.
fn laguerre(n: u32, a: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn laguerre_at_zero(n: u32, a: f64) -> f64 {
    (1..=n).map(|k| (f64::from(k) + a) / f64::from(k)).product()
}

#[test]
fn first_excited_matches_closed_form() {
    // s = 2: L_1^{(3)}(2x) = 4 − 2x
    let p = ladder_polynomial(2.0, 1);
    for x in [0.0, 0.5, 1.0, 3.0] {
        assert!((p.eval(x) / p.eval(0.0) - (1.0 - x / 2.0)).abs() < 1e-15);
    }
}

proptest! {
    #[test]
    fn ladder_polynomial_is_scaled_laguerre(s in 1.0f64..12.0, n in 0u32..9, x in 0.0f64..20.0) {
        let a = 2.0 * s - 1.0;
        let expected = laguerre(n, a, 2.0 * x) / laguerre_at_zero(n, a);
        let poly = ladder_polynomial(s, n);
        let got = poly.eval(x) / poly.eval(0.0);
        let scale = (0..=n).map(|k| (2.0 * x).powi(k as i32)).sum::<f64>();
        prop_assert!((got - expected).abs() <= 1e-11 * scale, "{got} vs {expected}");
    }

    #[test]
    fn node_count_equals_index(alpha in -5.0f64..-0.2, beta in 0.0f64..5.0, n in 0u32..7, l in 0u32..4) {
        let p = KratzerParams::new(alpha, beta, 1.0).unwrap();
        let state = bound_state(&p, n, l).unwrap();
        prop_assert_eq!(state.node_count(), n as usize);
        prop_assert_eq!(state.f(0.0), 0.0);
        prop_assert!(state.exponent_power >= 1.0);
    }
}
