// SPDX-License-Identifier: Apache-2.0

//! The 3×3 adjoint representation of so(2,1) acting on `(x, y, z)`, its
//! commutators with the coordinates, and selection rules derived from them.
//!
//! Generator matrices and commutator tables are integers and are handled
//! exactly; the `iħ` factor of the physical commutators is restored on read.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::units::HBAR;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axis {
    One,
    Two,
    Three,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::One, Axis::Two, Axis::Three];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl TryFrom<u8> for Axis {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(Error::Usage(format!("axis must be 1, 2 or 3, got {v}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coord {
    X,
    Y,
    Z,
}

impl Coord {
    pub const ALL: [Coord; 3] = [Coord::X, Coord::Y, Coord::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::X => "x",
            Self::Y => "y",
            Self::Z => "z",
        })
    }
}

/// Invariant metric `diag(1, 1, −1)` of `x² + y² − z²`.
pub const METRIC: [i64; 3] = [1, 1, -1];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Matrix3<T>(pub [[T; 3]; 3]);

impl<T: Copy + Default + From<i8> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>>
    Matrix3<T>
{
    pub fn zero() -> Self {
        Self([[T::default(); 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][i] = T::from(1);
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn scale(&self, c: T) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|v| *v = *v * c);
        m
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn apply(&self, v: [T; 3]) -> [T; 3] {
        let mut out = [T::default(); 3];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                *o = *o + self.0[i][j] * *vj;
            }
        }
        out
    }
}

impl<T: Copy + Default + Add<Output = T>> Add for Matrix3<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        m
    }
}

impl<T: Copy + Default + Sub<Output = T>> Sub for Matrix3<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j] - rhs.0[i][j];
            }
        }
        m
    }
}

impl<T: Copy + Default + Add<Output = T> + Mul<Output = T>> Mul for Matrix3<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self([[T::default(); 3]; 3]);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    m.0[i][j] = m.0[i][j] + self.0[i][k] * rhs.0[k][j];
                }
            }
        }
        m
    }
}

impl Matrix3<i64> {
    pub fn to_f64(&self) -> Matrix3<f64> {
        let mut m = Matrix3::<f64>::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][j] as f64;
            }
        }
        m
    }

    /// `Tᵀη + ηT`.
    pub fn metric_defect(&self) -> Self {
        let eta = Self([[1, 0, 0], [0, 1, 0], [0, 0, -1]]);
        self.transpose() * eta + eta * *self
    }
}

impl Matrix3<f64> {
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

pub fn adjoint_generator(axis: Axis) -> Matrix3<i64> {
    Matrix3(match axis {
        Axis::One => [[0, 0, 0], [0, 0, -1], [0, -1, 0]],
        Axis::Two => [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        Axis::Three => [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
    })
}

/// `I + εTᵢ`, the first-order group element.
pub fn finite_transformation(epsilon: f64, axis: Axis) -> Result<Matrix3<f64>> {
    if !(epsilon.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "finite transformation is first order and needs |epsilon| < 1, got {epsilon}"
        )));
    }
    Ok(Matrix3::identity() + adjoint_generator(axis).to_f64().scale(epsilon))
}

/// `Σ_{k ≤ order} (εT)ᵏ/k!`.
pub fn exponential_series(epsilon: f64, axis: Axis, order: u32) -> Matrix3<f64> {
    let t = adjoint_generator(axis).to_f64().scale(epsilon);
    let mut term = Matrix3::identity();
    let mut sum = term;
    for k in 1..=order {
        term = (term * t).scale(1.0 / f64::from(k));
        sum = sum + term;
    }
    sum
}

/// `[Tᵢ, xⱼ] = Σₖ cᵢⱼᵏ xₖ` with the `iħ` prefactor stripped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateCommutatorTable {
    coefficients: [[[i64; 3]; 3]; 3],
}

impl CoordinateCommutatorTable {
    pub fn new(coefficients: [[[i64; 3]; 3]; 3]) -> Self {
        Self { coefficients }
    }

    /// Table implied by the group action `rⱼ + ε[rⱼ, Tᵢ] = Σₖ Rⱼₖ rₖ`.
    pub fn from_generators() -> Self {
        let mut c = [[[0; 3]; 3]; 3];
        for axis in Axis::ALL {
            let t = adjoint_generator(axis);
            for j in 0..3 {
                for k in 0..3 {
                    c[axis.index()][j][k] = -t.0[j][k];
                }
            }
        }
        Self::new(c)
    }

    pub fn entry(&self, generator: Axis, coord: Coord) -> [i64; 3] {
        self.coefficients[generator.index()][coord.index()]
    }

    /// Entry with the `iħ` prefactor restored when `with_ihbar` is set.
    pub fn entry_scaled(&self, generator: Axis, coord: Coord, with_ihbar: bool) -> [Complex64; 3] {
        let factor = if with_ihbar {
            Complex64::new(0.0, HBAR)
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.entry(generator, coord).map(|c| factor * c as f64)
    }

    /// `Σₖ cᵢⱼᵏ xₖ` as text, e.g. `-y` or `0`.
    pub fn render(&self, generator: Axis, coord: Coord) -> String {
        let mut out = String::new();
        for (k, &c) in self.entry(generator, coord).iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = Coord::ALL[k];
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            out.push_str(&format!("{sign}{mag}{name}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `[T₁,x]=0, [T₁,y]=z, [T₁,z]=y; [T₂,x]=−z, [T₂,y]=0, [T₂,z]=−x; [T₃,x]=y, [T₃,y]=−x, [T₃,z]=0`.
pub fn coordinate_commutators() -> CoordinateCommutatorTable {
    CoordinateCommutatorTable::new([
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, -1], [0, 0, 0], [-1, 0, 0]],
        [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelectionRules {
    pub allowed: BTreeMap<Coord, BTreeSet<i64>>,
}

impl SelectionRules {
    pub fn union(&self) -> BTreeSet<i64> {
        self.allowed.values().flatten().copied().collect()
    }
}

/// Allowed `Δn` per coordinate for matrix elements between `T₃` eigenstates.
///
/// With `[T₃, c_j] = iħ Σₖ M_jk c_k`, the elements `v_j = ⟨n′|c_j|n⟩` obey
/// `Δn·v = iM v`. An integer `Δn` is admissible when `det(Δn·I − iM) = 0`, and
/// coordinate `j` takes part when some null vector has `v_j ≠ 0`, i.e. when
/// `e_j` is outside the row space of `Δn·I − iM`. All arithmetic is exact
/// over the Gaussian integers.
pub fn selection_rules(table: &CoordinateCommutatorTable) -> SelectionRules {
    let m: [[i64; 3]; 3] = Coord::ALL.map(|c| table.entry(Axis::Three, c));
    let bound = m
        .iter()
        .map(|row| row.iter().map(|v| v.abs()).sum::<i64>())
        .max()
        .unwrap_or(0);
    let mut allowed: BTreeMap<Coord, BTreeSet<i64>> =
        Coord::ALL.iter().map(|&c| (c, BTreeSet::new())).collect();
    for d in -bound..=bound {
        // A = d·I − iM
        let a: Vec<Vec<Gauss>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| Gauss::new(if i == j { d } else { 0 }, -m[i][j]))
                    .collect()
            })
            .collect();
        let base = rank(&a);
        if base == 3 {
            continue;
        }
        for c in Coord::ALL {
            let mut augmented = a.clone();
            augmented.push(
                (0..3)
                    .map(|k| Gauss::new(i64::from(k == c.index()), 0))
                    .collect(),
            );
            if rank(&augmented) > base {
                allowed.get_mut(&c).unwrap().insert(d);
            }
        }
    }
    SelectionRules { allowed }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Gauss {
    re: i128,
    im: i128,
}

impl Gauss {
    fn new(re: i64, im: i64) -> Self {
        Self {
            re: i128::from(re),
            im: i128::from(im),
        }
    }

    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }
}

impl Add for Gauss {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for Gauss {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for Gauss {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

fn det(m: &[Vec<Gauss>], rows: &[usize], cols: &[usize]) -> Gauss {
    match rows.len() {
        0 => Gauss::new(1, 0),
        1 => m[rows[0]][cols[0]],
        _ => {
            let mut sum = Gauss::new(0, 0);
            for (k, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = m[rows[0]][c] * det(m, &rows[1..], &rest);
                sum = if k % 2 == 0 { sum + term } else { sum - term };
            }
            sum
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Rank as the size of the largest non-vanishing minor.
fn rank(m: &[Vec<Gauss>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for r in subsets(rows, k) {
            for c in subsets(cols, k) {
                if !det(m, &r, &c).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}
