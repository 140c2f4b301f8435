//! LOWESS: locally weighted linear regression with tricube weights and
//! bisquare robustness iterations.
//!
//! For each point, the `q = floor(fraction * n)` nearest neighbours (at least
//! two) define a bandwidth `h`, the distance to the `q`-th nearest point.
//! Neighbours are weighted by `(1 - (d/h)^3)^3` for `d < h`, and a weighted
//! least-squares line is evaluated at the point. Each robustness iteration
//! downweights points by the bisquare of their residual over six median
//! absolute residuals and refits.

use alloc::vec;
use alloc::vec::Vec;

use crate::util::median;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowessParams {
    /// Share of points in each local neighbourhood, in `(0, 1]`.
    pub fraction: f64,
    /// Number of robustness reweighting passes.
    pub iterations: usize,
}

impl Default for LowessParams {
    fn default() -> Self {
        Self { fraction: 2.0 / 3.0, iterations: 3 }
    }
}

fn tricube(u: f64) -> f64 {
    let t = 1.0 - u * u * u;
    t * t * t
}

fn bisquare(u: f64) -> f64 {
    let t = 1.0 - u * u;
    t * t
}

/// Fitted values at each input `x`, in input order.
pub fn lowess(x: &[f64], y: &[f64], params: LowessParams) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let n = x.len();
    if n < 2 {
        return Err(Error::TooFewValues("lowess", 2));
    }
    if !(params.fraction > 0.0 && params.fraction <= 1.0) {
        return Err(Error::InvalidFraction(params.fraction));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }

    if x.iter().all(|&v| v == x[0]) {
        let mean = y.iter().sum::<f64>() / n as f64;
        return Ok(vec![mean; n]);
    }

    let q = (libm::floor(params.fraction * n as f64 + 1e-7) as usize).clamp(2, n);
    let bandwidths: Vec<f64> = (0..n).map(|i| kth_distance(x, i, q)).collect();

    let mut robustness = vec![1.0; n];
    let mut fitted = fit_all(x, y, &bandwidths, &robustness);
    for _ in 0..params.iterations {
        let residuals: Vec<f64> = y.iter().zip(&fitted).map(|(yi, fi)| yi - fi).collect();
        let abs: Vec<f64> = residuals.iter().map(|r| r.abs()).collect();
        let scale = 6.0 * median(&abs).unwrap_or(0.0);
        let spread = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if scale <= 1e-12 * spread.max(f64::MIN_POSITIVE) {
            break;
        }
        for (w, r) in robustness.iter_mut().zip(&residuals) {
            let u = r / scale;
            *w = if u.abs() < 1.0 { bisquare(u) } else { 0.0 };
        }
        fitted = fit_all(x, y, &bandwidths, &robustness);
    }
    Ok(fitted)
}

/// Distance from `x[i]` to its `k`-th nearest point, counting itself.
fn kth_distance(x: &[f64], i: usize, k: usize) -> f64 {
    let mut d: Vec<f64> = x.iter().map(|v| (v - x[i]).abs()).collect();
    d.sort_by(f64::total_cmp);
    d[k - 1]
}

fn fit_all(x: &[f64], y: &[f64], bandwidths: &[f64], robustness: &[f64]) -> Vec<f64> {
    (0..x.len()).map(|i| fit_at(x, y, x[i], bandwidths[i], robustness).unwrap_or(y[i])).collect()
}

/// Weighted linear fit evaluated at `x0`, `None` when every weight vanishes.
fn fit_at(x: &[f64], y: &[f64], x0: f64, h: f64, robustness: &[f64]) -> Option<f64> {
    let weights: Vec<f64> = x
        .iter()
        .zip(robustness)
        .map(|(&xi, &r)| {
            let d = (xi - x0).abs();
            let w = if h > 0.0 {
                if d < h {
                    tricube(d / h)
                } else {
                    0.0
                }
            } else if d == 0.0 {
                1.0
            } else {
                0.0
            };
            w * r
        })
        .collect();
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return None;
    }
    let x_bar = weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>() / total;
    let y_bar = weights.iter().zip(y).map(|(w, v)| w * v).sum::<f64>() / total;
    let sxx: f64 = weights.iter().zip(x).map(|(w, v)| w * (v - x_bar) * (v - x_bar)).sum();
    let sxy: f64 = weights.iter().zip(x.iter().zip(y)).map(|(w, (xv, yv))| w * (xv - x_bar) * (yv - y_bar)).sum();
    // A local window with no x spread can only fit its weighted mean.
    let range = h.max(f64::MIN_POSITIVE);
    if sxx <= total * (1e-10 * range) * (1e-10 * range) {
        return Some(y_bar);
    }
    Some(y_bar + sxy / sxx * (x0 - x_bar))
}
