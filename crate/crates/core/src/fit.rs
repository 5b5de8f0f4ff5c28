//! Ordinary least squares on a line.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination; 1 for a perfect (or constant) fit.
    pub r2: f64,
    /// Sum of squared residuals.
    pub rss: f64,
}

/// Fits `y ≈ slope·x + intercept`. Returns `None` with fewer than two points
/// or when all `x` coincide.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Option<LineFit> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - slope * x - intercept).powi(2))
        .sum();
    let r2 = if syy > 0.0 { 1.0 - rss / syy } else { 1.0 };
    Some(LineFit {
        slope,
        intercept,
        r2,
        rss,
    })
}

/// Log-log fit of `y` against `1 + r`.
pub fn fit_log_log(rs: &[u32], ys: &[f64]) -> Option<LineFit> {
    let xs: Vec<f64> = rs.iter().map(|&r| (1.0 + r as f64).ln()).collect();
    let ys: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    fit_line(&xs, &ys)
}
