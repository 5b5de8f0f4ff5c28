//! Oracles shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use std::sync::Arc;

use nalgebra::DMatrix;
use rd_core::spectral::AlgebraVector;
use rd_core::{Element, GroupHandle, GroupSpec};

pub fn group(spec: &str) -> Arc<GroupHandle> {
    Arc::new(GroupHandle::new(GroupSpec::parse(spec).unwrap()).unwrap())
}

/// Largest singular value of `[f(xᵢ·xⱼ⁻¹)]` over `elements`, from a dense
/// eigendecomposition of `MᵀM`.
pub fn dense_opnorm(f: &AlgebraVector, elements: &[Element]) -> f64 {
    let g = f.group();
    let inverses: Vec<Element> = elements.iter().map(|x| g.invert(x)).collect();
    let n = elements.len();
    let m = DMatrix::from_fn(n, n, |i, j| f.get(&g.multiply(&elements[i], &inverses[j])));
    let gram = m.transpose() * &m;
    let top = gram.symmetric_eigenvalues().max();
    top.max(0.0).sqrt()
}

/// Closed walks of length `2n` at the root of the `2k`-regular tree, for
/// `n = 1..=n_max`, by dynamic programming on the distance to the root.
pub fn tree_closed_walks(k: u32, n_max: u32) -> Vec<f64> {
    let degree = 2.0 * k as f64;
    let len = 2 * n_max as usize;
    let mut at = vec![0.0; len + 2];
    at[0] = 1.0;
    let mut out = Vec::new();
    for step in 1..=len {
        let mut next = vec![0.0; len + 2];
        for d in 0..=len {
            if at[d] == 0.0 {
                continue;
            }
            if d == 0 {
                next[1] += degree * at[0];
            } else {
                next[d - 1] += at[d];
                next[d + 1] += (degree - 1.0) * at[d];
            }
        }
        at = next;
        if step % 2 == 0 {
            out.push(at[0]);
        }
    }
    out
}

/// `ζ(s)` for `s > 1`: a partial sum with an Euler–Maclaurin tail.
pub fn zeta(s: f64) -> f64 {
    let n = 10_000.0f64;
    let partial: f64 = (1..10_000).map(|k| (k as f64).powf(-s)).sum();
    partial + n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s * n.powf(-s - 1.0) / 12.0
}
