mod common;

use std::sync::Arc;

use common::{dense_opnorm, group, tree_closed_walks, zeta};
use proptest::prelude::*;
use rd_core::spectral::{
    adjoint, coeff_decay_sum, convolution_algebra_check, convolve, extrapolate_return_norm, opnorm_upper_bound,
    return_prob_norm, sobolev_norm, truncated_opnorm, AlgebraVector, OpNormOptions, Reduction,
};
use rd_core::{Element, GroupHandle};

fn random_vector(g: &Arc<GroupHandle>, radius: u32, seed: u64) -> AlgebraVector {
    let ball = g.enumerate_ball(radius).unwrap();
    AlgebraVector::random_uniform(g, &ball, radius, seed).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_identities(fam in 0usize..3, seed in 0u64..1000) {
        let g = group(["zd:2", "free:2", "heisenberg"][fam]);
        let f = random_vector(&g, 2, seed);
        let h = random_vector(&g, 2, seed + 1);
        let k = random_vector(&g, 1, seed + 2);
        let fh = convolve(&f, &h).unwrap();
        // Young
        prop_assert!(fh.l2() <= f.l1() * h.l2() * (1.0 + 1e-12));
        prop_assert!(fh.l1() <= f.l1() * h.l1() * (1.0 + 1e-12));
        let left = convolve(&fh, &k).unwrap();
        let right = convolve(&f, &convolve(&h, &k).unwrap()).unwrap();
        for (x, c) in left.iter() {
            prop_assert!(close(c, right.get(x), 1e-12));
        }
        prop_assert_eq!(left.support_len(), right.support_len());
        let star = adjoint(&fh);
        let swapped = convolve(&adjoint(&h), &adjoint(&f)).unwrap();
        for (x, c) in star.iter() {
            prop_assert!(close(c, swapped.get(x), 1e-12));
        }
        prop_assert_eq!(adjoint(&star), fh);
    }

    #[test]
    fn sobolev_norms_are_monotone(seed in 0u64..1000) {
        let g = group("free:2");
        let f = random_vector(&g, 3, seed);
        let s0 = sobolev_norm(&f, 0.0).unwrap();
        prop_assert!(close(s0, f.l2(), 1e-14));
        prop_assert!(f.l2() <= f.l1());
        let mut prev = s0;
        for s in [0.5, 1.0, 2.0, 3.0] {
            let next = sobolev_norm(&f, s).unwrap();
            prop_assert!(next >= prev);
            prev = next;
        }
    }

    #[test]
    fn algebra_closure_on_lattices(seed in 0u64..1000, s in 1.0f64..3.0) {
        let g = group("zd:2");
        let f = random_vector(&g, 3, seed);
        let h = random_vector(&g, 3, seed + 7);
        prop_assert!(convolution_algebra_check(&f, &h, s).unwrap().holds);
    }
}

#[test]
fn bounds_sandwich_the_norm() {
    for (spec, radius) in [("zd:1", 30), ("zd:2", 8), ("free:2", 5), ("heisenberg", 5), ("lamplighter", 6)] {
        let g = group(spec);
        let f = random_vector(&g, 2, 11);
        let mut prev = 0.0;
        for r in 2..=radius {
            let est = truncated_opnorm(&f, r, OpNormOptions::default()).unwrap();
            assert!(f.l2() <= est.lower * (1.0 + 1e-9), "{spec} R={r}");
            assert!(est.lower <= est.upper * (1.0 + 1e-9), "{spec} R={r}");
            assert!(est.upper <= f.l1() * (1.0 + 1e-12));
            // compressions to larger balls dilate smaller ones
            assert!(est.lower >= prev - 1e-9, "{spec} R={r}");
            prev = est.lower;
        }
        let gamma = g.growth(2).unwrap()[2];
        assert_eq!(opnorm_upper_bound(&f, gamma), f.l1().min((gamma as f64).sqrt() * f.l2()));
    }
}

#[test]
fn truncated_norm_matches_dense_oracle() {
    for (spec, radius) in [("zd:2", 6), ("free:2", 4), ("heisenberg", 4), ("lamplighter", 5), ("raag:path:3", 3)] {
        let g = group(spec);
        let ball = g.enumerate_ball(radius).unwrap();
        for seed in [1, 2] {
            let f = random_vector(&g, 2, seed);
            let est = truncated_opnorm(&f, radius, OpNormOptions::default()).unwrap();
            let dense = dense_opnorm(&f, ball.elements());
            assert!((est.lower - dense).abs() < 1e-8, "{spec}: {} vs {dense}", est.lower);
        }
    }
}

#[test]
fn radial_reduction_matches_dense_oracle() {
    let g = group("free:3");
    let ball = g.enumerate_ball(4).unwrap();
    let f = AlgebraVector::sphere_indicator(&g, &ball, 2).unwrap();
    let est = truncated_opnorm(&f, 4, OpNormOptions::default()).unwrap();
    assert_eq!(est.reduction, Reduction::Radial);
    assert!((est.lower - dense_opnorm(&f, ball.elements())).abs() < 1e-8);
}

#[test]
fn lattice_norm_obeys_the_sobolev_embedding() {
    // on ℤ, Σ (1+|x|)^{-s} = 2ζ(s) − 1
    let g = group("zd:1");
    for seed in 0..5 {
        let f = random_vector(&g, 6, seed);
        let est = truncated_opnorm(&f, 60, OpNormOptions::default()).unwrap();
        for s in [1.5, 2.0, 3.0] {
            let c = (2.0 * zeta(s) - 1.0).sqrt();
            assert!(est.lower <= c * sobolev_norm(&f, s).unwrap() + 1e-12, "seed {seed} s {s}");
        }
    }
    assert!((zeta(2.0) - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
}

fn brute_force_decay(xi: &AlgebraVector, eta: &AlgebraVector, s: f64, radius: u32) -> f64 {
    let g = xi.group();
    let ball = g.enumerate_ball(radius).unwrap();
    let mut total = 0.0;
    for (x, &len) in ball.elements().iter().zip(ball.lengths()) {
        let x_inv = g.invert(x);
        // ⟨λ(x)ξ, η⟩ = Σ_t ξ(x⁻¹t) η(t)
        let c: f64 = eta.iter().map(|(t, b)| xi.get(&g.multiply(&x_inv, t)) * b).sum();
        total += c * c / (1.0 + len as f64).powf(s);
    }
    total
}

#[test]
fn coefficient_decay_matches_brute_force() {
    for (spec, radius) in [("zd:1", 20), ("zd:2", 8), ("free:2", 6)] {
        let g = group(spec);
        let xi = random_vector(&g, 3, 5);
        let eta = random_vector(&g, 3, 6);
        let mut prev = 0.0;
        for r in [0, 2, 4, radius] {
            let fast = coeff_decay_sum(&xi, &eta, 2.0, r).unwrap();
            assert!(close(fast, brute_force_decay(&xi, &eta, 2.0, r), 1e-12), "{spec} R={r}");
            assert!(fast >= prev);
            prev = fast;
        }
    }
    // on ℤ the coefficients are a Fourier pairing: Σ|c|² ≤ ‖ξ‖₁²‖η‖₂²
    let g = group("zd:1");
    let xi = random_vector(&g, 5, 1);
    let eta = random_vector(&g, 5, 2);
    let total = coeff_decay_sum(&xi, &eta, 2.0, 20).unwrap();
    assert!(total <= (xi.l1() * eta.l2()).powi(2));
}

#[test]
fn return_norms_match_tree_walk_counts() {
    for k in [2, 3] {
        let g = group(&format!("free:{k}"));
        let f = AlgebraVector::generator_sum(&g);
        let seq = return_prob_norm(&f, 8).unwrap();
        let walks = tree_closed_walks(k, 16);
        for (n, value) in seq.iter().enumerate() {
            // h = f*f, so h^{*n}(e) counts closed walks of length 2n
            let expected = walks[n].powf(1.0 / (2.0 * (n + 1) as f64));
            assert!(close(*value, expected, 1e-12), "k={k} n={}", n + 1);
        }
        let oracle: Vec<f64> = walks
            .iter()
            .enumerate()
            .map(|(n, w)| w.powf(1.0 / (2.0 * (n + 1) as f64)))
            .collect();
        let limit = 2.0 * ((2 * k - 1) as f64).sqrt();
        assert!((extrapolate_return_norm(&oracle).unwrap() - limit).abs() < 0.01 * limit);
    }
}

#[test]
fn lattice_return_norms_are_central_binomials() {
    let g = group("zd:1");
    let seq = return_prob_norm(&AlgebraVector::generator_sum(&g), 10).unwrap();
    let mut binom = 1.0;
    for n in 1..=10u32 {
        // C(2n, n) from C(2n-2, n-1)
        binom *= (2 * n * (2 * n - 1)) as f64 / (n * n) as f64;
        let expected = binom.powf(1.0 / (2 * n) as f64);
        assert!(close(seq[n as usize - 1], expected, 1e-12));
    }
    let e = g.identity();
    assert_eq!(AlgebraVector::delta(&g, e.clone()).get(&e), 1.0);
    assert_eq!(AlgebraVector::delta(&g, e).get(&Element::Lattice(vec![1])), 0.0);
}
