use nalgebra::{DMatrix, DVector};

use super::algebra::{convolve, AlgebraVector};
use crate::error::{Error, Result};

/// `(h^{*n}(e))^{1/(2n)}` for `h = f*f`, `n = 1..=n_max`.
///
/// `h^{*n}(e) = Σ_x h^{*a}(x)·h^{*b}(x⁻¹)` with `a + b = n`, and symmetry of
/// `h` turns the second factor into `h^{*b}(x)`, so only powers up to
/// `⌈n/2⌉` are convolved.
pub fn return_prob_norm(f: &AlgebraVector, n_max: u32) -> Result<Vec<f64>> {
    if !f.is_symmetric() {
        return Err(Error::Usage(
            "return probabilities need a symmetric vector (f = f*)".into(),
        ));
    }
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let h = convolve(f, f)?;
    let mut powers = vec![AlgebraVector::delta(f.group(), f.group().identity()), h.clone()];
    let half = n_max.div_ceil(2) as usize;
    while powers.len() <= half {
        let next = convolve(powers.last().expect("nonempty"), &h)?;
        powers.push(next);
    }
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max as usize {
        let (a, b) = (n.div_ceil(2), n / 2);
        let (small, large) = if powers[a].support_len() <= powers[b].support_len() {
            (&powers[a], &powers[b])
        } else {
            (&powers[b], &powers[a])
        };
        let value: f64 = small.iter().map(|(x, c)| c * large.get(x)).sum();
        out.push(value.max(0.0).powf(1.0 / (2.0 * n as f64)));
    }
    Ok(out)
}

/// Limit of a [`return_prob_norm`] sequence.
///
/// Fits `log h^{*n}(e) = A·n + B·log n + C + D/n` by least squares over
/// `n ≥ 2` and returns `exp(A/2)`.
pub fn extrapolate_return_norm(seq: &[f64]) -> Result<f64> {
    let points: Vec<(f64, f64)> = seq
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &a)| a > 0.0)
        .map(|(i, &a)| {
            let n = (i + 1) as f64;
            (n, 2.0 * n * a.ln())
        })
        .collect();
    if points.len() < 4 {
        return Err(Error::Usage(format!(
            "extrapolation needs at least 4 positive entries beyond the first, got {}",
            points.len()
        )));
    }
    let design = DMatrix::from_fn(points.len(), 4, |i, j| {
        let n = points[i].0;
        match j {
            0 => n,
            1 => n.ln(),
            2 => 1.0,
            _ => 1.0 / n,
        }
    });
    let rhs = DVector::from_iterator(points.len(), points.iter().map(|p| p.1));
    let coef = design
        .svd(true, true)
        .solve(&rhs, 1e-12)
        .map_err(|e| Error::Usage(format!("degenerate extrapolation: {e}")))?;
    Ok((coef[0] / 2.0).exp())
}
