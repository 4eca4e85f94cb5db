// SPDX-License-Identifier: Apache-2.0

//! Dense real polynomials in ascending-coefficient form, with Sturm-sequence
//! root isolation on the positive half-line.

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::new(vec![0.0]);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// `(p(x), p′(x), p″(x))` by Horner's scheme.
    pub fn eval_with_derivatives(&self, x: f64) -> (f64, f64, f64) {
        let (mut p, mut d1, mut d2) = (0.0, 0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            d2 = d2 * x + 2.0 * d1;
            d1 = d1 * x + p;
            p = p * x + c;
        }
        (p, d1, d2)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Coefficients of `p(x/scale)`.
    pub fn rescaled_argument(&self, scale: f64) -> Self {
        let mut s = 1.0;
        Self::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    let v = c * s;
                    s /= scale;
                    v
                })
                .collect(),
        )
    }

    fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    fn remainder(&self, divisor: &Self) -> Self {
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lead = divisor.leading();
        let norm = self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        while rem.len() > dd && rem.len() > 1 {
            let shift = rem.len() - 1 - dd;
            let q = rem[rem.len() - 1] / lead;
            for (k, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= q * d;
            }
            rem.pop();
        }
        // drop leading coefficients that are pure cancellation noise
        while rem.len() > 1 && rem.last().unwrap().abs() <= 1e-13 * norm {
            rem.pop();
        }
        Self::new(rem)
    }

    fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone(), self.derivative()];
        while seq.last().unwrap().degree() > 0 {
            let k = seq.len();
            let r = seq[k - 2].remainder(&seq[k - 1]).scaled(-1.0);
            if r.coeffs.iter().all(|&c| c == 0.0) {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots_in(&self, a: f64, b: f64) -> usize {
        let seq = self.sturm_sequence();
        sign_changes(&seq, a).saturating_sub(sign_changes(&seq, b))
    }

    /// Distinct real roots in `(0, ∞)`, ascending.
    pub fn positive_roots(&self) -> Vec<f64> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let lead = self.leading().abs();
        let bound = 1.0
            + self.coeffs[..self.degree()]
                .iter()
                .fold(0.0_f64, |m, c| m.max(c.abs() / lead));
        let seq = self.sturm_sequence();
        let mut roots = Vec::new();
        isolate(self, &seq, 0.0, bound, 0, &mut roots);
        roots.sort_by(f64::total_cmp);
        roots
    }
}

fn sign_changes(seq: &[Polynomial], x: f64) -> usize {
    let mut count = 0;
    let mut prev = 0.0_f64;
    for p in seq {
        let v = p.eval(x);
        if v == 0.0 {
            continue;
        }
        if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
            count += 1;
        }
        prev = v;
    }
    count
}

fn isolate(p: &Polynomial, seq: &[Polynomial], a: f64, b: f64, depth: u32, out: &mut Vec<f64>) {
    let count = sign_changes(seq, a).saturating_sub(sign_changes(seq, b));
    match count {
        0 => {}
        1 => out.push(bisect(p, a, b)),
        _ if depth > 200 => out.push(0.5 * (a + b)),
        _ => {
            let m = 0.5 * (a + b);
            isolate(p, seq, a, m, depth + 1, out);
            isolate(p, seq, m, b, depth + 1, out);
        }
    }
}

fn bisect(p: &Polynomial, mut a: f64, mut b: f64) -> f64 {
    let mut fa = p.eval(a);
    if p.eval(b) == 0.0 {
        return b;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = p.eval(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}
