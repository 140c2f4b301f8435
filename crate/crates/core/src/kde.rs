//! Gaussian kernel density over occurrence times, with Silverman's
//! rule-of-thumb bandwidth.

use alloc::vec::Vec;
use core::f64::consts::PI;

use serde::Serialize;

use crate::{Error, Result};

/// Number of samples in a density curve.
pub const GRID_POINTS: usize = 512;

/// Bandwidth used when the sample has no spread at all.
pub const FALLBACK_BANDWIDTH: f64 = 1.0 / 12.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityKind {
    Full,
    Reduced,
}

/// Type-7 (linear interpolation) quantile of sorted data.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = libm::floor(h) as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// `0.9 * min(sd, IQR / 1.34) * n^(-1/5)`. When one of the spread measures
/// is zero the other is used; when both are, [`FALLBACK_BANDWIDTH`].
pub fn silverman_bandwidth(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::TooFewValues("time_density", 1));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let n = values.len() as f64;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mean = sorted.iter().sum::<f64>() / n;
    let sd = if values.len() > 1 {
        libm::sqrt(sorted.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0))
    } else {
        0.0
    };
    let iqr = (quantile(&sorted, 0.75) - quantile(&sorted, 0.25)) / 1.34;
    let spread = match (sd > 0.0, iqr > 0.0) {
        (true, true) => sd.min(iqr),
        (true, false) => sd,
        (false, true) => iqr,
        (false, false) => return Ok(FALLBACK_BANDWIDTH),
    };
    Ok(0.9 * spread * libm::pow(n, -0.2))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianKde {
    points: Vec<f64>,
    bandwidth: f64,
}

impl GaussianKde {
    pub fn new(points: &[f64]) -> Result<Self> {
        let bandwidth = silverman_bandwidth(points)?;
        let mut points = points.to_vec();
        points.sort_by(f64::total_cmp);
        Ok(Self { points, bandwidth })
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    /// `[min - 3h, max + 3h]`.
    pub fn support(&self) -> (f64, f64) {
        let lo = self.points[0];
        let hi = self.points[self.points.len() - 1];
        (lo - 3.0 * self.bandwidth, hi + 3.0 * self.bandwidth)
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let h = self.bandwidth;
        let norm = 1.0 / (self.points.len() as f64 * h * libm::sqrt(2.0 * PI));
        norm * self
            .points
            .iter()
            .map(|p| {
                let u = (x - p) / h;
                libm::exp(-0.5 * u * u)
            })
            .sum::<f64>()
    }
}

/// Uniform grid of `points` samples over `[lo, hi]`.
pub fn uniform_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points < 2 {
        return alloc::vec![lo];
    }
    let step = (hi - lo) / (points - 1) as f64;
    (0..points).map(|i| if i + 1 == points { hi } else { lo + step * i as f64 }).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityCurve {
    pub kind: DensityKind,
    pub bandwidth: f64,
    pub grid: Vec<f64>,
    pub density: Vec<f64>,
}

impl DensityCurve {
    /// Trapezoid-rule integral of the samples.
    pub fn integral(&self) -> f64 {
        trapezoid(&self.grid, &self.density)
    }
}

/// Density of `times` sampled on [`GRID_POINTS`] points over the estimator
/// support.
pub fn time_density(times: &[f64], kind: DensityKind) -> Result<DensityCurve> {
    let kde = GaussianKde::new(times)?;
    let (lo, hi) = kde.support();
    Ok(density_on_grid(&kde, kind, uniform_grid(lo, hi, GRID_POINTS)))
}

pub fn density_on_grid(kde: &GaussianKde, kind: DensityKind, grid: Vec<f64>) -> DensityCurve {
    let density = grid.iter().map(|&x| kde.evaluate(x)).collect();
    DensityCurve { kind, bandwidth: kde.bandwidth(), grid, density }
}

pub fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    x.windows(2).zip(y.windows(2)).map(|(xs, ys)| (xs[1] - xs[0]) * (ys[0] + ys[1]) / 2.0).sum()
}
