// SPDX-License-Identifier: Apache-2.0

//! Radial sample grids.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::simpson_samples;

/// Smallest grid the operator machinery accepts.
pub const MIN_OPERATOR_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Spacing {
    Uniform,
    LogUniform,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialGrid {
    points: Vec<f64>,
    spacing: Spacing,
}

impl RadialGrid {
    pub fn uniform(r_min: f64, r_max: f64, count: usize) -> Result<Self> {
        check_bounds(r_min, r_max, count)?;
        if count == 1 {
            return Ok(Self {
                points: vec![r_min],
                spacing: Spacing::Uniform,
            });
        }
        let h = (r_max - r_min) / (count - 1) as f64;
        let mut points: Vec<f64> = (0..count).map(|i| r_min + i as f64 * h).collect();
        points[count - 1] = r_max;
        Ok(Self {
            points,
            spacing: Spacing::Uniform,
        })
    }

    pub fn log_uniform(r_min: f64, r_max: f64, count: usize) -> Result<Self> {
        check_bounds(r_min, r_max, count)?;
        if count == 1 {
            return Ok(Self {
                points: vec![r_min],
                spacing: Spacing::LogUniform,
            });
        }
        let (a, b) = (r_min.ln(), r_max.ln());
        let h = (b - a) / (count - 1) as f64;
        let mut points: Vec<f64> = (0..count).map(|i| (a + i as f64 * h).exp()).collect();
        points[0] = r_min;
        points[count - 1] = r_max;
        Ok(Self {
            points,
            spacing: Spacing::LogUniform,
        })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    /// Step in the coordinate the grid is uniform in (`r` or `ln r`).
    pub fn step(&self) -> f64 {
        let n = self.points.len();
        if n < 2 {
            return 0.0;
        }
        match self.spacing {
            Spacing::Uniform => (self.points[n - 1] - self.points[0]) / (n - 1) as f64,
            Spacing::LogUniform => (self.points[n - 1] / self.points[0]).ln() / (n - 1) as f64,
        }
    }

    pub fn r_min(&self) -> f64 {
        self.points[0]
    }

    pub fn r_max(&self) -> f64 {
        *self.points.last().unwrap()
    }

    /// `∫ y dr` over the grid.
    pub fn integrate(&self, y: &[f64]) -> f64 {
        simpson_samples(&self.points, y)
    }

    /// Index range `[lo, hi)` with the outer `fraction` of points dropped at each end.
    pub fn interior(&self, fraction: f64) -> std::ops::Range<usize> {
        let n = self.points.len();
        let cut = ((n as f64) * fraction).ceil() as usize;
        if 2 * cut >= n {
            return 0..n;
        }
        cut..n - cut
    }

    pub(crate) fn require_operator_size(&self) -> Result<()> {
        if self.points.len() < MIN_OPERATOR_POINTS {
            return Err(Error::Usage(format!(
                "operator grids need at least {MIN_OPERATOR_POINTS} points, got {}",
                self.points.len()
            )));
        }
        Ok(())
    }
}

fn check_bounds(r_min: f64, r_max: f64, count: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::Usage("grid needs at least one point".into()));
    }
    if !(r_min > 0.0 && r_min.is_finite() && r_max.is_finite()) {
        return Err(Error::Domain(format!(
            "grid bounds must be positive and finite, got [{r_min}, {r_max}]"
        )));
    }
    if count == 1 {
        if r_max != r_min {
            return Err(Error::Usage(
                "a single-point grid needs r_min == r_max".into(),
            ));
        }
        return Ok(());
    }
    if r_max <= r_min {
        return Err(Error::Domain(format!(
            "grid needs r_max > r_min, got [{r_min}, {r_max}]"
        )));
    }
    Ok(())
}
