use std::collections::HashMap;

use serde::Serialize;

use super::algebra::{convolve, sobolev_norm, AlgebraVector};
use super::opnorm::{truncated_opnorm, OpNormOptions};
use crate::error::{Error, Result};
use crate::group::Element;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KestenGap {
    pub l1: f64,
    pub op_lower: f64,
    pub gap: f64,
}

/// `‖f‖₁ − ‖f‖_op` for nonnegative `f`, with the operator norm replaced by
/// its certified lower bound on `B(R)`.
pub fn kesten_gap(f: &AlgebraVector, radius: u32, iters: usize) -> Result<KestenGap> {
    if !f.is_nonnegative() {
        return Err(Error::Usage(
            "the Kesten gap is defined for nonnegative vectors".into(),
        ));
    }
    let est = truncated_opnorm(
        f,
        radius,
        OpNormOptions {
            max_iters: iters,
            ..Default::default()
        },
    )?;
    let l1 = f.l1();
    Ok(KestenGap {
        l1,
        op_lower: est.lower,
        gap: (l1 - est.lower).max(0.0),
    })
}

/// Matrix coefficients `x ↦ ⟨λ(x)ξ, η⟩` over the finite set where they can
/// be nonzero.
pub fn matrix_coefficients(xi: &AlgebraVector, eta: &AlgebraVector) -> Result<HashMap<Element, f64>> {
    if xi.group().spec() != eta.group().spec() {
        return Err(Error::Usage("ξ and η live on different groups".into()));
    }
    let group = xi.group();
    let mut coeffs = HashMap::new();
    for (u, a) in xi.iter() {
        let u_inv = group.invert(u);
        for (t, b) in eta.iter() {
            *coeffs.entry(group.multiply(t, &u_inv)).or_insert(0.0) += a * b;
        }
    }
    Ok(coeffs)
}

/// `Σ_{ℓ(x) ≤ R} |⟨λ(x)ξ, η⟩|² / (1+ℓ(x))^s`.
pub fn coeff_decay_sum(xi: &AlgebraVector, eta: &AlgebraVector, s: f64, radius: u32) -> Result<f64> {
    let coeffs = matrix_coefficients(xi, eta)?;
    let mut terms = Vec::with_capacity(coeffs.len());
    for (x, c) in coeffs {
        let len = xi.group().word_length(&x)?;
        if len <= radius && c != 0.0 {
            terms.push((x, c * c / (1.0 + len as f64).powf(s)));
        }
    }
    // summation order fixed for reproducibility
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(terms.iter().map(|t| t.1).sum())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub const ALGEBRA_CHECK_TOL: f64 = 1e-9;

/// Compares `‖f*g‖_{ℓ,2s}` with `‖f_s * g_s‖₂`, `f_s(x) = |f(x)|(1+ℓ(x))^s`.
pub fn convolution_algebra_check(f: &AlgebraVector, g: &AlgebraVector, s: f64) -> Result<AlgebraCheck> {
    let lhs = sobolev_norm(&convolve(f, g)?, 2.0 * s)?;
    let weight = |v: &AlgebraVector| {
        let group = v.group().clone();
        v.map_coefficients(move |x, c| Ok(c.abs() * (1.0 + group.word_length(x)? as f64).powf(s)))
    };
    let rhs = convolve(&weight(f)?, &weight(g)?)?.l2();
    Ok(AlgebraCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + ALGEBRA_CHECK_TOL * rhs.max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupHandle, GroupSpec};
    use std::sync::Arc;

    fn group(s: &str) -> Arc<GroupHandle> {
        Arc::new(GroupHandle::new(GroupSpec::parse(s).unwrap()).unwrap())
    }

    #[test]
    fn kesten_examples() {
        let g = group("zd:1");
        let e = AlgebraVector::delta(&g, g.identity());
        assert!(kesten_gap(&e, 3, 100).unwrap().gap < 1e-12);
        let neg = AlgebraVector::from_pairs(&g, [(g.identity(), -1.0)]);
        assert!(matches!(kesten_gap(&neg, 3, 100), Err(Error::Usage(_))));
    }

    #[test]
    fn coeff_decay_examples() {
        let f2 = group("free:2");
        let e = AlgebraVector::delta(&f2, f2.identity());
        for s in [0.0, 1.0, 3.5] {
            assert_eq!(coeff_decay_sum(&e, &e, s, 0).unwrap(), 1.0);
            assert_eq!(coeff_decay_sum(&e, &e, s, 7).unwrap(), 1.0);
        }
        let g = AlgebraVector::delta(&f2, f2.parse_word("ab").unwrap());
        assert!((coeff_decay_sum(&e, &g, 2.0, 5).unwrap() - 1.0 / 9.0).abs() < 1e-15);
        assert_eq!(coeff_decay_sum(&e, &g, 2.0, 1).unwrap(), 0.0);
    }

    #[test]
    fn matrix_coefficient_convention() {
        // ⟨λ(x)δ_u, δ_t⟩ = 1 exactly when x·u = t
        let f2 = group("free:2");
        let u = f2.parse_word("a").unwrap();
        let t = f2.parse_word("ba").unwrap();
        let c = matrix_coefficients(
            &AlgebraVector::delta(&f2, u),
            &AlgebraVector::delta(&f2, t),
        )
        .unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&f2.parse_word("b").unwrap()], 1.0);
    }

    #[test]
    fn algebra_check_examples() {
        let f2 = group("free:2");
        let e = AlgebraVector::delta(&f2, f2.identity());
        let r = convolution_algebra_check(&e, &e, 1.0).unwrap();
        assert_eq!((r.lhs, r.rhs, r.holds), (1.0, 1.0, true));
        let a = AlgebraVector::delta(&f2, f2.parse_word("a").unwrap());
        let r = convolution_algebra_check(&a, &a, 1.0).unwrap();
        assert!((r.lhs - 3.0).abs() < 1e-15);
        assert!((r.rhs - 4.0).abs() < 1e-15);
        assert!(r.holds);
    }
}
