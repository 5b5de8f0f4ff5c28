use nalgebra::DMatrix;
use serde::Serialize;

use super::algebra::{seeded_rng, AlgebraVector};
use super::lanczos::{top_singular_value, KrylovOptions, LinearOperator, SparseOperator};
use crate::error::{Error, Result};
use crate::group::{BallIndex, GroupSpec};
use rand::Rng;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERS: usize = 10_000;
const KRYLOV_DIM: usize = 80;
/// Rough memory budget for the Krylov basis, in `f64` entries.
const BASIS_BUDGET: usize = 50_000_000;

#[derive(Debug, Clone, Copy)]
pub struct OpNormOptions {
    pub max_iters: usize,
    pub tol: f64,
    /// Seed of the fallback start vector.
    pub seed: u64,
    /// Use the sphere-averaged reduction for radial vectors on free groups.
    pub allow_radial: bool,
}

impl Default for OpNormOptions {
    fn default() -> Self {
        OpNormOptions {
            max_iters: DEFAULT_MAX_ITERS,
            tol: DEFAULT_TOL,
            seed: 0,
            allow_radial: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reduction {
    /// Compression to the enumerated ball.
    Ball,
    /// Compression to radial functions on the ball of a free group.
    Radial,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OpNormEstimate {
    pub lower: f64,
    pub upper: f64,
    pub iteration_trace: Vec<f64>,
    pub truncation_radius: u32,
    pub iterations: usize,
    pub converged: bool,
    pub reduction: Reduction,
}

/// `min(‖f‖₁, √γ(ℓ(f))·‖f‖₂)`.
pub fn opnorm_upper_bound(f: &AlgebraVector, growth_at_support: u64) -> f64 {
    f.l1().min((growth_at_support as f64).sqrt() * f.l2())
}

/// Certified bounds for `‖λ(f)‖` from the compression `P_R λ(f) P_R`.
pub fn truncated_opnorm(f: &AlgebraVector, radius: u32, opts: OpNormOptions) -> Result<OpNormEstimate> {
    truncated_opnorm_in(f, radius, opts, None)
}

/// As [`truncated_opnorm`], reusing an enumerated ball of radius at least
/// `radius` when one is at hand.
pub fn truncated_opnorm_in(
    f: &AlgebraVector,
    radius: u32,
    opts: OpNormOptions,
    ball: Option<&BallIndex>,
) -> Result<OpNormEstimate> {
    let support = f.support_radius()?;
    if radius < support {
        return Err(Error::Usage(format!(
            "truncation radius {radius} is below the support radius {support}"
        )));
    }
    if opts.allow_radial {
        if let GroupSpec::Free { rank } = f.group().spec() {
            if let Some(profile) = radial_profile(f, *rank)? {
                return radial_opnorm(f, &profile, *rank, radius, opts);
            }
        }
    }
    let owned;
    let ball = match ball {
        Some(b) if b.radius() >= radius => b,
        _ => {
            owned = f.group().enumerate_ball(radius)?;
            &owned
        }
    };
    let op = compression(f, ball, radius)?;
    let gamma = ball.ball_size(support) as u64;
    let outcome = run_with_fallback(&op, opts);
    Ok(OpNormEstimate {
        lower: outcome.value(),
        upper: opnorm_upper_bound(f, gamma),
        iteration_trace: outcome.trace,
        truncation_radius: radius,
        iterations: outcome.iterations,
        converged: outcome.converged,
        reduction: Reduction::Ball,
    })
}

/// The matrix of `ξ ↦ f*ξ` restricted to `B(radius)`, in ball order.
pub fn compression(f: &AlgebraVector, ball: &BallIndex, radius: u32) -> Result<SparseOperator> {
    let n = ball.ball_size(radius);
    let cap = f.group().options().cap;
    let budget = cap.saturating_mul(4);
    if n.saturating_mul(f.support_len()) > budget {
        return Err(Error::capacity_at(
            radius,
            format!(
                "compression to a ball of {n} elements with {} support terms exceeds {budget} entries",
                f.support_len()
            ),
        ));
    }
    let group = f.group();
    let terms: Vec<_> = f.iter().map(|(y, c)| (y.clone(), c)).collect();
    let columns = (0..n).map(|j| {
        let t = ball.element(j);
        terms
            .iter()
            .filter_map(|(y, c)| {
                let k = ball.index_of(&group.multiply(y, t))?;
                (k < n).then_some((k as u32, *c))
            })
            .collect::<Vec<_>>()
    });
    Ok(SparseOperator::from_columns(n, columns))
}

fn krylov_options(n: usize, opts: OpNormOptions) -> KrylovOptions {
    KrylovOptions {
        max_iters: opts.max_iters,
        tol: opts.tol,
        krylov_dim: KRYLOV_DIM.min((BASIS_BUDGET / n.max(1)).max(2)),
    }
}

/// Starts from `δ_e`, then from a seeded random vector if that start never
/// leaves the tolerance floor.
fn run_with_fallback(op: &dyn LinearOperator, opts: OpNormOptions) -> super::lanczos::KrylovOutcome {
    let n = op.dim();
    let kopts = krylov_options(n, opts);
    let mut start = vec![0.0; n];
    if n > 0 {
        start[0] = 1.0;
    }
    let first = top_singular_value(op, &start, kopts);
    if first.value() >= opts.tol || n == 0 {
        return first;
    }
    let mut rng = seeded_rng(opts.seed, u64::MAX);
    let random: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let second = top_singular_value(op, &random, kopts);
    if second.value() > first.value() {
        second
    } else {
        first
    }
}

/// Sphere sizes `|S_n|` in the free group of rank `k`.
fn free_sphere_size(rank: usize, n: u32) -> f64 {
    if n == 0 {
        1.0
    } else {
        2.0 * rank as f64 * (2.0 * rank as f64 - 1.0).powi(n as i32 - 1)
    }
}

/// Per-sphere coefficients when `f` is constant on each sphere it meets
/// and covers those spheres completely.
fn radial_profile(f: &AlgebraVector, rank: usize) -> Result<Option<Vec<f64>>> {
    let radius = f.support_radius()?;
    let mut values: Vec<Option<f64>> = vec![None; radius as usize + 1];
    let mut counts = vec![0usize; radius as usize + 1];
    for (x, c) in f.iter() {
        let n = f.group().word_length(x)? as usize;
        match values[n] {
            None => values[n] = Some(c),
            Some(v) if v == c => {}
            Some(_) => return Ok(None),
        }
        counts[n] += 1;
    }
    for n in 0..=radius {
        let size = free_sphere_size(rank, n);
        if counts[n as usize] != 0 && counts[n as usize] as f64 != size {
            return Ok(None);
        }
    }
    Ok(Some(values.into_iter().map(|v| v.unwrap_or(0.0)).collect()))
}

/// `λ(1_{S_1})` on sphere-coefficient vectors: each vertex of `S_n`, `n ≥ 1`,
/// has one neighbour in `S_{n−1}` and `2k−1` in `S_{n+1}`.
fn apply_sphere_one(c: &[f64], rank: usize) -> Vec<f64> {
    let q = 2.0 * rank as f64 - 1.0;
    let len = c.len();
    let mut out = vec![0.0; len];
    for n in 0..len {
        let up = if n + 1 < len { c[n + 1] } else { 0.0 };
        out[n] = if n == 0 {
            2.0 * rank as f64 * up
        } else {
            c[n - 1] + q * up
        };
    }
    out
}

/// `λ(f)c` for radial `f` with sphere values `profile`, via the recursion
/// `1_{S_1} * 1_{S_1} = 1_{S_2} + 2k·δ_e` and
/// `1_{S_1} * 1_{S_m} = 1_{S_{m+1}} + (2k−1)·1_{S_{m−1}}` for `m ≥ 2`.
fn apply_radial(profile: &[f64], c: &[f64], rank: usize) -> Vec<f64> {
    let len = c.len();
    let q = 2.0 * rank as f64 - 1.0;
    let mut out = vec![0.0; len];
    let mut prev: Vec<f64> = c.to_vec();
    let mut cur = apply_sphere_one(c, rank);
    for (m, &w) in profile.iter().enumerate() {
        if m == 0 {
            out.iter_mut().zip(&prev).for_each(|(o, x)| *o += w * x);
            continue;
        }
        if m >= 2 {
            let factor = if m == 2 { 2.0 * rank as f64 } else { q };
            let next: Vec<f64> = apply_sphere_one(&cur, rank)
                .iter()
                .zip(&prev)
                .map(|(a, b)| a - factor * b)
                .collect();
            prev = std::mem::replace(&mut cur, next);
        }
        out.iter_mut().zip(&cur).for_each(|(o, x)| *o += w * x);
    }
    out
}

/// Dense matrix of the radial compression in the orthonormal basis
/// `1_{S_n}/√|S_n|`, `n ≤ radius`.
pub(crate) fn radial_matrix(profile: &[f64], rank: usize, radius: u32) -> DMatrix<f64> {
    let dim = radius as usize + 1;
    let work = dim + profile.len();
    let scale: Vec<f64> = (0..work).map(|n| free_sphere_size(rank, n as u32).sqrt()).collect();
    let mut m = DMatrix::zeros(dim, dim);
    for j in 0..dim {
        let mut c = vec![0.0; work];
        c[j] = 1.0 / scale[j];
        let image = apply_radial(profile, &c, rank);
        for i in 0..dim {
            m[(i, j)] = image[i] * scale[i];
        }
    }
    m
}

fn radial_opnorm(
    f: &AlgebraVector,
    profile: &[f64],
    rank: usize,
    radius: u32,
    opts: OpNormOptions,
) -> Result<OpNormEstimate> {
    let m = radial_matrix(profile, rank, radius);
    let outcome = run_with_fallback(&m, opts);
    let support = profile.len() as u32 - 1;
    let gamma: f64 = (0..=support).map(|n| free_sphere_size(rank, n)).sum();
    Ok(OpNormEstimate {
        lower: outcome.value(),
        upper: opnorm_upper_bound(f, gamma as u64),
        iteration_trace: outcome.trace,
        truncation_radius: radius,
        iterations: outcome.iterations,
        converged: outcome.converged,
        reduction: Reduction::Radial,
    })
}
