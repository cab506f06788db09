//! Piecewise-linear scalar functions with exact breakpoint arithmetic.
//!
//! Shaping functions (the class-K regularizer and the directional relaxation)
//! are represented as breakpoint lists plus extrapolation slopes. Evaluation
//! anchors on the nearest breakpoint so values at breakpoints are exact, and
//! the inverse of a strictly increasing function is exact at breakpoints too.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PwlError {
    #[error("breakpoints must be strictly increasing in x")]
    NonMonotoneX,
    #[error("at least one breakpoint is required")]
    Empty,
    #[error("function is not strictly increasing; inverse undefined")]
    NotInvertible,
    #[error("breakpoint coordinates must be finite")]
    NonFinite,
}

/// Piecewise-linear function on all of the real line.
///
/// `xs`/`ys` are the breakpoints; `slopes[0]` extrapolates left of the first
/// breakpoint, `slopes[i]` covers `[xs[i-1], xs[i]]`, and the last slope
/// extrapolates right. Interior slopes are derived from the breakpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    xs: Vec<f64>,
    ys: Vec<f64>,
    slopes: Vec<f64>, // len = xs.len() + 1
}

impl PiecewiseLinear {
    /// Build from breakpoints plus the two extrapolation slopes.
    pub fn from_breakpoints(
        points: &[(f64, f64)],
        left_slope: f64,
        right_slope: f64,
    ) -> Result<Self, PwlError> {
        if points.is_empty() {
            return Err(PwlError::Empty);
        }
        if points
            .iter()
            .any(|(x, y)| !x.is_finite() || !y.is_finite())
            || !left_slope.is_finite()
            || !right_slope.is_finite()
        {
            return Err(PwlError::NonFinite);
        }
        let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
        if xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(PwlError::NonMonotoneX);
        }
        let mut slopes = Vec::with_capacity(xs.len() + 1);
        slopes.push(left_slope);
        for i in 1..xs.len() {
            slopes.push((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
        }
        slopes.push(right_slope);
        Ok(Self { xs, ys, slopes })
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    pub fn slopes(&self) -> &[f64] {
        &self.slopes
    }

    /// Largest absolute slope, i.e. the Lipschitz constant.
    pub fn lipschitz(&self) -> f64 {
        self.slopes.iter().fold(0.0, |acc, s| acc.max(s.abs()))
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.slopes.iter().all(|&s| s > 0.0)
    }

    /// Evaluate at `x`. Exact (no rounding beyond one mul-add) at breakpoints.
    pub fn eval(&self, x: f64) -> f64 {
        // index of first breakpoint >= x
        let idx = self.xs.partition_point(|&bx| bx < x);
        if idx < self.xs.len() && self.xs[idx] == x {
            return self.ys[idx];
        }
        if idx == 0 {
            return self.ys[0] + self.slopes[0] * (x - self.xs[0]);
        }
        // anchor on the left breakpoint of the segment
        self.ys[idx - 1] + self.slopes[idx] * (x - self.xs[idx - 1])
    }

    /// Inverse evaluation for strictly increasing functions.
    pub fn eval_inverse(&self, y: f64) -> Result<f64, PwlError> {
        if !self.is_strictly_increasing() {
            return Err(PwlError::NotInvertible);
        }
        let idx = self.ys.partition_point(|&by| by < y);
        if idx < self.ys.len() && self.ys[idx] == y {
            return Ok(self.xs[idx]);
        }
        if idx == 0 {
            return Ok(self.xs[0] + (y - self.ys[0]) / self.slopes[0]);
        }
        Ok(self.xs[idx - 1] + (y - self.ys[idx - 1]) / self.slopes[idx])
    }

    /// Breakpoint x-coordinates (useful for exact per-segment checks).
    pub fn knots(&self) -> &[f64] {
        &self.xs
    }
}
