use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use super::algebra::AlgebraVector;
use super::opnorm::{truncated_opnorm_in, OpNormOptions};
use crate::error::{Error, Result};
use crate::fit::fit_log_log;
use crate::group::GroupHandle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    Balls,
    Spheres,
    RandomSigns,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::Balls => "balls",
            FamilyTag::Spheres => "spheres",
            FamilyTag::RandomSigns => "random-signs",
        })
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "balls" => Ok(FamilyTag::Balls),
            "spheres" => Ok(FamilyTag::Spheres),
            "random" | "random-signs" => Ok(FamilyTag::RandomSigns),
            _ => Err(Error::Usage(format!(
                "unknown family {s:?} (expected balls, spheres or random)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfilePoint {
    pub r: u32,
    pub l2: f64,
    pub op_lower: f64,
    pub op_upper: f64,
}

impl ProfilePoint {
    pub fn ratio(&self) -> f64 {
        self.op_lower / self.l2
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RDProfile {
    pub family: FamilyTag,
    pub points: Vec<ProfilePoint>,
    pub seed: u64,
    /// The operator for `f_r` is compressed to `B(r + truncation_slack)`.
    pub truncation_slack: u32,
}

#[derive(Debug, Clone, Copy)]
pub struct ProfileOptions {
    pub truncation_slack: u32,
    pub opnorm: OpNormOptions,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            truncation_slack: 0,
            opnorm: OpNormOptions::default(),
        }
    }
}

pub fn rd_profile(group: &Arc<GroupHandle>, family: FamilyTag, r_max: u32, seed: u64) -> Result<RDProfile> {
    rd_profile_with(group, family, r_max, seed, ProfileOptions::default())
}

pub fn rd_profile_with(
    group: &Arc<GroupHandle>,
    family: FamilyTag,
    r_max: u32,
    seed: u64,
    opts: ProfileOptions,
) -> Result<RDProfile> {
    let slack = opts.truncation_slack;
    let ball = group.enumerate_ball(r_max + slack).map_err(|e| match e {
        Error::Capacity {
            radius: Some(rho),
            detail,
        } => {
            let r = rho.saturating_sub(slack);
            Error::capacity_at(r, format!("profile radius {r}: {detail}"))
        }
        other => other,
    })?;
    let mut points = Vec::with_capacity(r_max as usize + 1);
    for r in 0..=r_max {
        let f = match family {
            FamilyTag::Balls => AlgebraVector::ball_indicator(group, &ball, r)?,
            FamilyTag::Spheres => AlgebraVector::sphere_indicator(group, &ball, r)?,
            FamilyTag::RandomSigns => AlgebraVector::random_signs(group, &ball, r, seed)?,
        };
        let est = truncated_opnorm_in(&f, r + slack, opts.opnorm, Some(&ball)).map_err(|e| match e {
            Error::Capacity { detail, .. } => Error::capacity_at(r, format!("profile radius {r}: {detail}")),
            other => other,
        })?;
        points.push(ProfilePoint {
            r,
            l2: f.l2(),
            op_lower: est.lower,
            op_upper: est.upper,
        });
    }
    Ok(RDProfile {
        family,
        points,
        seed,
        truncation_slack: slack,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Twice the slope: the Sobolev exponent matching the fitted polynomial.
    pub s_hat: f64,
    pub r2: f64,
    pub window: (u32, u32),
}

/// Least-squares slope of `log(op_lower/l2)` against `log(1+r)` over the
/// profile points with `r` in the inclusive window.
pub fn fit_rd_degree(profile: &RDProfile, window: (u32, u32)) -> Result<DegreeFit> {
    let (lo, hi) = window;
    let pts: Vec<&ProfilePoint> = profile
        .points
        .iter()
        .filter(|p| p.r >= lo && p.r <= hi)
        .collect();
    if pts.len() < 3 {
        return Err(Error::Usage(format!(
            "window {lo}:{hi} holds {} profile points, need at least 3",
            pts.len()
        )));
    }
    if let Some(p) = pts.iter().find(|p| !(p.ratio() > 0.0)) {
        return Err(Error::Usage(format!("non-positive ratio at r = {}", p.r)));
    }
    let rs: Vec<u32> = pts.iter().map(|p| p.r).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.ratio()).collect();
    let fit = fit_log_log(&rs, &ys)
        .ok_or_else(|| Error::Usage(format!("degenerate window {lo}:{hi}")))?;
    Ok(DegreeFit {
        slope: fit.slope,
        intercept: fit.intercept,
        s_hat: 2.0 * fit.slope,
        r2: fit.r2,
        window,
    })
}
