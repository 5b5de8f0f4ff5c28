use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{BallIndex, Element, GroupHandle};

/// Seeded generator for stream `stream` of `seed`. Distinct streams of the
/// same seed are independent, so families of random vectors can be drawn
/// reproducibly in any order.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A finitely supported real function on a group. Zero coefficients are
/// never stored.
#[derive(Debug, Clone)]
pub struct AlgebraVector {
    group: Arc<GroupHandle>,
    coeffs: BTreeMap<Element, f64>,
}

impl PartialEq for AlgebraVector {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

fn same_group(a: &Arc<GroupHandle>, b: &Arc<GroupHandle>) -> bool {
    Arc::ptr_eq(a, b) || a.spec() == b.spec()
}

impl AlgebraVector {
    pub fn zero(group: &Arc<GroupHandle>) -> Self {
        AlgebraVector {
            group: Arc::clone(group),
            coeffs: BTreeMap::new(),
        }
    }

    /// Sums repeated elements and drops zeros.
    pub fn from_pairs(
        group: &Arc<GroupHandle>,
        pairs: impl IntoIterator<Item = (Element, f64)>,
    ) -> Self {
        let mut coeffs = BTreeMap::new();
        for (x, c) in pairs {
            *coeffs.entry(x).or_insert(0.0) += c;
        }
        coeffs.retain(|_, c| *c != 0.0);
        AlgebraVector {
            group: Arc::clone(group),
            coeffs,
        }
    }

    pub fn delta(group: &Arc<GroupHandle>, x: Element) -> Self {
        AlgebraVector::from_pairs(group, [(x, 1.0)])
    }

    /// Sum of the point masses at the symmetric generators.
    pub fn generator_sum(group: &Arc<GroupHandle>) -> Self {
        AlgebraVector::from_pairs(group, group.generators().iter().map(|s| (s.clone(), 1.0)))
    }

    /// `1_{B(r)}`, read off an enumerated ball of radius at least `r`.
    pub fn ball_indicator(group: &Arc<GroupHandle>, ball: &BallIndex, r: u32) -> Result<Self> {
        check_ball(ball, r)?;
        let n = ball.ball_size(r);
        Ok(AlgebraVector::from_pairs(
            group,
            ball.elements()[..n].iter().map(|x| (x.clone(), 1.0)),
        ))
    }

    /// `1_{S(r)}` for the sphere of radius `r`.
    pub fn sphere_indicator(group: &Arc<GroupHandle>, ball: &BallIndex, r: u32) -> Result<Self> {
        check_ball(ball, r)?;
        Ok(AlgebraVector::from_pairs(
            group,
            ball.sphere(r).iter().map(|x| (x.clone(), 1.0)),
        ))
    }

    /// Independent uniformly random signs on `B(r)`, drawn from stream `r`
    /// of `seed`.
    pub fn random_signs(
        group: &Arc<GroupHandle>,
        ball: &BallIndex,
        r: u32,
        seed: u64,
    ) -> Result<Self> {
        check_ball(ball, r)?;
        let mut rng = seeded_rng(seed, r as u64);
        let n = ball.ball_size(r);
        Ok(AlgebraVector::from_pairs(
            group,
            ball.elements()[..n]
                .iter()
                .map(|x| (x.clone(), if rng.gen::<bool>() { 1.0 } else { -1.0 })),
        ))
    }

    /// Independent uniform coefficients in `[-1, 1]` on `B(r)`.
    pub fn random_uniform(
        group: &Arc<GroupHandle>,
        ball: &BallIndex,
        r: u32,
        seed: u64,
    ) -> Result<Self> {
        check_ball(ball, r)?;
        let mut rng = seeded_rng(seed, r as u64);
        let n = ball.ball_size(r);
        Ok(AlgebraVector::from_pairs(
            group,
            ball.elements()[..n]
                .iter()
                .map(|x| (x.clone(), rng.gen_range(-1.0..=1.0))),
        ))
    }

    pub fn group(&self) -> &Arc<GroupHandle> {
        &self.group
    }

    pub fn get(&self, x: &Element) -> f64 {
        self.coeffs.get(x).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Element, f64)> + '_ {
        self.coeffs.iter().map(|(x, &c)| (x, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, by: f64) -> Self {
        AlgebraVector::from_pairs(&self.group, self.iter().map(|(x, c)| (x.clone(), c * by)))
    }

    pub fn map_coefficients(&self, f: impl Fn(&Element, f64) -> Result<f64>) -> Result<Self> {
        let mut pairs = Vec::with_capacity(self.coeffs.len());
        for (x, c) in self.iter() {
            pairs.push((x.clone(), f(x, c)?));
        }
        Ok(AlgebraVector::from_pairs(&self.group, pairs))
    }

    pub fn l1(&self) -> f64 {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    pub fn l2(&self) -> f64 {
        self.coeffs.values().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `ℓ(f) = max{ℓ(x) : f(x) ≠ 0}`; zero for the zero vector.
    pub fn support_radius(&self) -> Result<u32> {
        let mut r = 0;
        for x in self.coeffs.keys() {
            r = r.max(self.group.word_length(x)?);
        }
        Ok(r)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0.0)
    }

    /// `f(x) = f(x⁻¹)` for all `x`.
    pub fn is_symmetric(&self) -> bool {
        self.iter()
            .all(|(x, c)| self.get(&self.group.invert(x)) == c)
    }
}

fn check_ball(ball: &BallIndex, r: u32) -> Result<()> {
    if r > ball.radius() {
        return Err(Error::Usage(format!(
            "radius {r} exceeds the enumerated ball of radius {}",
            ball.radius()
        )));
    }
    Ok(())
}

fn check_same_group(f: &AlgebraVector, g: &AlgebraVector) -> Result<()> {
    if !same_group(&f.group, &g.group) {
        return Err(Error::Usage(format!(
            "cannot combine vectors over {} and {}",
            f.group.spec(),
            g.group.spec()
        )));
    }
    Ok(())
}

/// `(f*g)(x) = Σ_y f(y) g(y⁻¹x)`, computed exactly over the product of
/// supports.
pub fn convolve(f: &AlgebraVector, g: &AlgebraVector) -> Result<AlgebraVector> {
    check_same_group(f, g)?;
    let group = &f.group;
    let cap = group.options().cap;
    let mut acc: HashMap<Element, f64> = HashMap::new();
    for (y, a) in f.iter() {
        for (z, b) in g.iter() {
            *acc.entry(group.multiply(y, z)).or_insert(0.0) += a * b;
        }
        if acc.len() > cap {
            return Err(Error::capacity(format!(
                "convolution support exceeds the cap of {cap} elements"
            )));
        }
    }
    Ok(AlgebraVector::from_pairs(group, acc))
}

/// `f*(x) = f(x⁻¹)` (real coefficients).
pub fn adjoint(f: &AlgebraVector) -> AlgebraVector {
    AlgebraVector::from_pairs(
        &f.group,
        f.iter().map(|(x, c)| (f.group.invert(x), c)),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SobolevNorm {
    pub s: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormReport {
    pub l1: f64,
    pub l2: f64,
    pub sobolev: Vec<SobolevNorm>,
    pub support_radius: u32,
}

impl NormReport {
    pub fn sobolev_at(&self, s: f64) -> Option<f64> {
        self.sobolev.iter().find(|n| n.s == s).map(|n| n.value)
    }
}

/// `‖f‖_{ℓ,s} = (Σ |f(x)|² (1+ℓ(x))^s)^{1/2}`.
pub fn sobolev_norm(f: &AlgebraVector, s: f64) -> Result<f64> {
    let mut sum = 0.0;
    for (x, c) in f.iter() {
        let len = f.group.word_length(x)? as f64;
        sum += c * c * (1.0 + len).powf(s);
    }
    Ok(sum.sqrt())
}

pub fn norms(f: &AlgebraVector, s_values: &[f64]) -> Result<NormReport> {
    let mut lengths = Vec::with_capacity(f.support_len());
    for (x, c) in f.iter() {
        lengths.push((f.group.word_length(x)? as f64, c));
    }
    let sobolev = s_values
        .iter()
        .map(|&s| SobolevNorm {
            s,
            value: lengths
                .iter()
                .map(|(len, c)| c * c * (1.0 + len).powf(s))
                .sum::<f64>()
                .sqrt(),
        })
        .collect();
    Ok(NormReport {
        l1: f.l1(),
        l2: f.l2(),
        sobolev,
        support_radius: lengths.iter().map(|(l, _)| *l as u32).max().unwrap_or(0),
    })
}
