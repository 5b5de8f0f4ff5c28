//! Centroid maps `m: G × G → G` for the action of a group on its own Cayley
//! graph, and the empirical check of the three cardinality conditions
//!
//! 1. `|m(B(r) × {h})|`,
//! 2. `|m({g} × G)|` for `g ∈ B(r)`,
//! 3. `|{g⁻¹·m(g, gh) : g ∈ B(r)}|`,
//!
//! each of which should grow polynomially in `r`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::index;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fit::fit_log_log;
use crate::group::{Element, GroupHandle};
use crate::spectral::seeded_rng;

/// A group acting on its Cayley graph by left multiplication, with the
/// identity as basepoint.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub group: Arc<GroupHandle>,
}

impl ActionSpec {
    pub fn cayley_self(group: Arc<GroupHandle>) -> Self {
        ActionSpec { group }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentroidStrategy {
    /// `median(o, g·o, h·o)`.
    Median,
    /// The point of the ShortLex-first geodesic `[o, h·o]` at distance
    /// `⌊(g|h)⌋` from `o`.
    Gromov,
}

impl fmt::Display for CentroidStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CentroidStrategy::Median => "median",
            CentroidStrategy::Gromov => "gromov",
        })
    }
}

impl FromStr for CentroidStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "median" => Ok(CentroidStrategy::Median),
            "gromov" | "gromov-product" => Ok(CentroidStrategy::Gromov),
            _ => Err(Error::Usage(format!(
                "unknown strategy {s:?} (expected median or gromov)"
            ))),
        }
    }
}

/// `[e, c]` in the Cayley graph, grown layer by layer from `e`.
fn interval_from_identity(group: &GroupHandle, c: &Element) -> Result<Vec<Element>> {
    let total = group.word_length(c)?;
    let mut layer: BTreeSet<Element> = BTreeSet::from([group.identity()]);
    let mut all: Vec<Element> = layer.iter().cloned().collect();
    for k in 1..=total {
        let mut next = BTreeSet::new();
        for x in &layer {
            for s in group.generators() {
                let y = group.multiply(x, s);
                if next.contains(&y) {
                    continue;
                }
                if group.word_length(&y)? == k && group.distance(&y, c)? == total - k {
                    next.insert(y);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    Ok(all)
}

/// `[a, b]`, the translate `a·[e, a⁻¹b]`.
pub fn cayley_interval(group: &GroupHandle, a: &Element, b: &Element) -> Result<Vec<Element>> {
    let c = group.multiply(&group.invert(a), b);
    Ok(interval_from_identity(group, &c)?
        .iter()
        .map(|x| group.multiply(a, x))
        .collect())
}

fn in_interval(group: &GroupHandle, a: &Element, x: &Element, b: &Element) -> Result<bool> {
    Ok(group.distance(a, x)? + group.distance(x, b)? == group.distance(a, b)?)
}

/// The median of `u, v, w` in the Cayley graph, found by filtering the
/// shortest of the three intervals.
pub fn cayley_median(group: &GroupHandle, u: &Element, v: &Element, w: &Element) -> Result<Element> {
    let pairs = [(u, v, w), (v, w, u), (w, u, v)];
    let mut best: Option<(u32, &Element, &Element, &Element)> = None;
    for (a, b, c) in pairs {
        let d = group.distance(a, b)?;
        if best.is_none_or(|(bd, ..)| d < bd) {
            best = Some((d, a, b, c));
        }
    }
    let (_, a, b, c) = best.expect("three pairs");
    let mut meet = Vec::new();
    for x in cayley_interval(group, a, b)? {
        if in_interval(group, b, &x, c)? && in_interval(group, c, &x, a)? {
            meet.push(x);
        }
    }
    match meet.len() {
        1 => Ok(meet.pop().expect("one element")),
        _ => Err(Error::MedianViolation {
            triple: [u.to_string(), v.to_string(), w.to_string()],
            intersection: meet.iter().map(|x| x.to_string()).collect(),
        }),
    }
}

fn median_from_identity(group: &GroupHandle, g: &Element, h: &Element) -> Result<Element> {
    match (g, h) {
        (Element::Lattice(a), Element::Lattice(b)) => Ok(Element::Lattice(
            a.iter()
                .zip(b)
                .map(|(&x, &y)| {
                    let mut t = [0, x, y];
                    t.sort_unstable();
                    t[1]
                })
                .collect(),
        )),
        (Element::Word(a), Element::Word(b)) if group.spec().is_free() => {
            let k = a.iter().zip(b).take_while(|(x, y)| x == y).count();
            Ok(Element::Word(a[..k].to_vec()))
        }
        _ => cayley_median(group, &group.identity(), g, h),
    }
}

/// `m(g, h)` as a vertex of the Cayley graph.
pub fn centroid(action: &ActionSpec, strategy: CentroidStrategy, g: &Element, h: &Element) -> Result<Element> {
    let group = &action.group;
    match strategy {
        CentroidStrategy::Median => median_from_identity(group, g, h),
        CentroidStrategy::Gromov => {
            let lg = group.word_length(g)?;
            let lh = group.word_length(h)?;
            let d = group.distance(g, h)?;
            group.geodesic_prefix(h, (lg + lh - d) / 2)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub h_radius: u32,
    pub sample_size: usize,
    pub seed: u64,
    /// Whether every element of `B(h_radius)` was used.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionFit {
    pub degrees: [f64; 3],
    pub r2: [f64; 3],
    pub deg_rd_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentroidReport {
    pub group: String,
    pub strategy: CentroidStrategy,
    pub r_values: Vec<u32>,
    pub cond1_max: Vec<usize>,
    pub cond2_max: Vec<usize>,
    pub cond3_max: Vec<usize>,
    /// Present when at least three radii `r ≥ 2` are available.
    pub fit: Option<ConditionFit>,
    pub sampling: Sampling,
}

impl CentroidReport {
    pub fn fitted_degrees(&self) -> Option<[f64; 3]> {
        self.fit.as_ref().map(|f| f.degrees)
    }

    pub fn deg_rd_bound(&self) -> Option<f64> {
        self.fit.as_ref().map(|f| f.deg_rd_bound)
    }
}

/// Sorted indices of the sampled elements of a ball with `len` elements.
fn sample_indices(len: usize, sample: usize, seed: u64) -> (Vec<usize>, bool) {
    if sample >= len {
        return ((0..len).collect(), true);
    }
    let mut rng = seeded_rng(seed, 0);
    let mut picked = index::sample(&mut rng, len, sample).into_vec();
    picked.sort_unstable();
    (picked, false)
}

/// Radii `r = 0..=r_max` at which ball prefixes end.
fn ball_prefix_ends(group: &GroupHandle, r_max: u32) -> Result<(Vec<Element>, Vec<usize>)> {
    let ball = group.enumerate_ball(r_max)?;
    let ends = (0..=r_max).map(|r| ball.ball_size(r)).collect();
    Ok((ball.elements().to_vec(), ends))
}

struct Maxima {
    cond1: Vec<usize>,
    cond2: Vec<usize>,
    cond3: Vec<usize>,
}

/// Runs the three conditions with a pluggable centroid so that the direct
/// and translated forms share one implementation.
fn condition_maxima(
    group: &GroupHandle,
    gs: &[Element],
    ends: &[usize],
    hs: &[Element],
    mut m: impl FnMut(usize, &Element, &Element) -> Result<Element>,
    mut m3: impl FnMut(usize, &Element, &Element) -> Result<Element>,
) -> Result<Maxima> {
    let radii = ends.len();
    let mut cond1 = vec![0; radii];
    let mut cond3 = vec![0; radii];
    let mut per_g: Vec<HashSet<Element>> = vec![HashSet::new(); gs.len()];
    for (hi, h) in hs.iter().enumerate() {
        let mut set1 = HashSet::new();
        let mut set3 = HashSet::new();
        let mut r = 0;
        for (gi, g) in gs.iter().enumerate() {
            let c = m(hi, g, h)?;
            per_g[gi].insert(c.clone());
            set1.insert(c);
            let gh = group.multiply(g, h);
            let c3 = m3(hi, g, &gh)?;
            set3.insert(group.multiply(&group.invert(g), &c3));
            while r < radii && gi + 1 == ends[r] {
                cond1[r] = cond1[r].max(set1.len());
                cond3[r] = cond3[r].max(set3.len());
                r += 1;
            }
        }
    }
    let mut cond2 = vec![0; radii];
    let mut best = 0;
    let mut r = 0;
    for (gi, set) in per_g.iter().enumerate() {
        best = best.max(set.len());
        while r < radii && gi + 1 == ends[r] {
            cond2[r] = best;
            r += 1;
        }
    }
    Ok(Maxima { cond1, cond2, cond3 })
}

/// Maxima of the three condition sets for `r = 0..=r_max`, with `h` drawn
/// from `B(h_radius)`: all of it when `sample` covers the ball, otherwise
/// `sample` elements uniformly without replacement.
pub fn verify_centroid_conditions(
    action: &ActionSpec,
    strategy: CentroidStrategy,
    r_max: u32,
    h_radius: u32,
    sample: usize,
    seed: u64,
) -> Result<CentroidReport> {
    if r_max > h_radius {
        return Err(Error::Usage(format!(
            "r_max {r_max} exceeds the sampling radius {h_radius}"
        )));
    }
    let group = &action.group;
    let (gs, ends) = ball_prefix_ends(group, r_max)?;
    let hball = group.enumerate_ball(h_radius)?;
    let (picked, exhaustive) = sample_indices(hball.len(), sample, seed);
    let hs: Vec<Element> = picked.iter().map(|&i| hball.element(i).clone()).collect();
    drop(hball);
    let maxima = condition_maxima(
        group,
        &gs,
        &ends[..=r_max as usize],
        &hs,
        |_, g, h| centroid(action, strategy, g, h),
        |_, g, gh| centroid(action, strategy, g, gh),
    )?;
    let mut report = CentroidReport {
        group: group.spec().to_string(),
        strategy,
        r_values: (0..=r_max).collect(),
        cond1_max: maxima.cond1,
        cond2_max: maxima.cond2,
        cond3_max: maxima.cond3,
        fit: None,
        sampling: Sampling {
            h_radius,
            sample_size: hs.len(),
            seed,
            exhaustive,
        },
    };
    report.fit = fit_condition_degrees(&report).ok();
    Ok(report)
}

/// Log-log slopes of the three maxima against `1 + r` over `r ≥ 2`; the
/// bound is their sum.
pub fn fit_condition_degrees(report: &CentroidReport) -> Result<ConditionFit> {
    let idx: Vec<usize> = (0..report.r_values.len())
        .filter(|&i| report.r_values[i] >= 2)
        .collect();
    if idx.len() < 3 {
        return Err(Error::Usage(format!(
            "need at least 3 radii r ≥ 2 to fit, have {}",
            idx.len()
        )));
    }
    let rs: Vec<u32> = idx.iter().map(|&i| report.r_values[i]).collect();
    let mut degrees = [0.0; 3];
    let mut r2 = [0.0; 3];
    for (k, series) in [&report.cond1_max, &report.cond2_max, &report.cond3_max]
        .into_iter()
        .enumerate()
    {
        let ys: Vec<f64> = idx.iter().map(|&i| series[i] as f64).collect();
        let fit = fit_log_log(&rs, &ys).ok_or_else(|| Error::Usage("degenerate radii".into()))?;
        degrees[k] = fit.slope;
        r2[k] = fit.r2;
    }
    Ok(ConditionFit {
        degrees,
        r2,
        deg_rd_bound: degrees.iter().sum(),
    })
}

/// Largest number of `g ∈ B(radius)` fixing a sampled vertex.
pub fn stabilizer_bound(action: &ActionSpec, vertices: &[Element], radius: u32) -> Result<usize> {
    let group = &action.group;
    let ball = group.enumerate_ball(radius)?;
    let mut worst = 0;
    for v in vertices {
        let fixed = ball
            .elements()
            .iter()
            .filter(|g| group.multiply(g, v) == *v)
            .count();
        worst = worst.max(fixed);
    }
    Ok(worst)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivarianceReport {
    pub triples_checked: usize,
    pub direct: [Vec<usize>; 3],
    pub translated: [Vec<usize>; 3],
    /// First triple `(g₀, g₁, g₂)` where the extension failed, if any.
    pub violation: Option<[String; 3]>,
    pub passed: bool,
}

/// `m̃(g₀, g₁, g₂) = g₀·m(g₀⁻¹g₁, g₀⁻¹g₂)`.
pub fn extended_centroid(
    action: &ActionSpec,
    strategy: CentroidStrategy,
    g0: &Element,
    g1: &Element,
    g2: &Element,
) -> Result<Element> {
    let group = &action.group;
    let inv = group.invert(g0);
    let m = centroid(action, strategy, &group.multiply(&inv, g1), &group.multiply(&inv, g2))?;
    Ok(group.multiply(g0, &m))
}

/// Checks on `samples` seeded triples from `B(2·r_max)` that the extension
/// `m̃` commutes with left translation (and, for medians, lands in all three
/// intervals), then compares the condition maxima over `B(r_max)` computed
/// directly and through randomly translated triples.
pub fn equivariance_check(
    action: &ActionSpec,
    strategy: CentroidStrategy,
    r_max: u32,
    samples: usize,
    seed: u64,
) -> Result<EquivarianceReport> {
    let group = &action.group;
    let big = group.enumerate_ball(2 * r_max)?;
    let mut rng = seeded_rng(seed, 1);
    let pick = |rng: &mut rand_chacha::ChaCha8Rng| big.element(rng.gen_range(0..big.len())).clone();
    let mut violation = None;
    for _ in 0..samples {
        let (g0, g1, g2, k) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let base = extended_centroid(action, strategy, &g0, &g1, &g2)?;
        let moved = extended_centroid(
            action,
            strategy,
            &group.multiply(&k, &g0),
            &group.multiply(&k, &g1),
            &group.multiply(&k, &g2),
        )?;
        let mut ok = moved == group.multiply(&k, &base);
        if ok && strategy == CentroidStrategy::Median {
            ok = in_interval(group, &g0, &base, &g1)?
                && in_interval(group, &g1, &base, &g2)?
                && in_interval(group, &g2, &base, &g0)?;
        }
        if !ok {
            violation = Some([g0.to_string(), g1.to_string(), g2.to_string()]);
            break;
        }
    }

    let (gs, ends) = ball_prefix_ends(group, r_max)?;
    let (picked, _) = sample_indices(big.len(), samples, seed);
    let hs: Vec<Element> = picked.iter().map(|&i| big.element(i).clone()).collect();
    let shifts: Vec<Element> = (0..hs.len()).map(|_| pick(&mut rng)).collect();
    let direct = condition_maxima(
        group,
        &gs,
        &ends,
        &hs,
        |_, g, h| centroid(action, strategy, g, h),
        |_, g, gh| centroid(action, strategy, g, gh),
    )?;
    let translated_m = |hi: usize, g: &Element, h: &Element| -> Result<Element> {
        let k = &shifts[hi];
        let m = extended_centroid(action, strategy, k, &group.multiply(k, g), &group.multiply(k, h))?;
        Ok(group.multiply(&group.invert(k), &m))
    };
    let translated = condition_maxima(group, &gs, &ends, &hs, translated_m, translated_m)?;
    let direct = [direct.cond1, direct.cond2, direct.cond3];
    let translated = [translated.cond1, translated.cond2, translated.cond3];
    let passed = violation.is_none() && direct == translated;
    Ok(EquivarianceReport {
        triples_checked: samples,
        direct,
        translated,
        violation,
        passed,
    })
}
