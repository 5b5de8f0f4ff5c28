use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::algebra::AlgebraVector;
use crate::error::{Error, Result};
use crate::group::GroupHandle;

/// A named vector: `ball:R`, `sphere:R`, `gen-sum`, `delta:<word>` or
/// `random:R,seed` (independent ±1 signs on `B(R)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnSpec {
    Ball(u32),
    Sphere(u32),
    GenSum,
    Delta(String),
    Random { radius: u32, seed: u64 },
}

fn number<T: FromStr>(text: &str, what: &str) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| Error::Usage(format!("bad {what} {text:?} in function spec")))
}

impl FromStr for FnSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (head, arg) = match text.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (text, None),
        };
        match (head, arg) {
            ("ball", Some(r)) => Ok(FnSpec::Ball(number(r, "radius")?)),
            ("sphere", Some(r)) => Ok(FnSpec::Sphere(number(r, "radius")?)),
            ("gen-sum", None) => Ok(FnSpec::GenSum),
            ("delta", Some(w)) => Ok(FnSpec::Delta(w.to_string())),
            ("random", Some(args)) => {
                let (r, seed) = args
                    .split_once(',')
                    .ok_or_else(|| Error::Usage(format!("expected random:R,seed, got {text:?}")))?;
                Ok(FnSpec::Random {
                    radius: number(r, "radius")?,
                    seed: number(seed, "seed")?,
                })
            }
            _ => Err(Error::Usage(format!(
                "unknown function spec {text:?} (expected ball:R, sphere:R, gen-sum, delta:<word> or random:R,seed)"
            ))),
        }
    }
}

impl fmt::Display for FnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnSpec::Ball(r) => write!(f, "ball:{r}"),
            FnSpec::Sphere(r) => write!(f, "sphere:{r}"),
            FnSpec::GenSum => write!(f, "gen-sum"),
            FnSpec::Delta(w) => write!(f, "delta:{w}"),
            FnSpec::Random { radius, seed } => write!(f, "random:{radius},{seed}"),
        }
    }
}

impl FnSpec {
    pub fn build(&self, group: &Arc<GroupHandle>) -> Result<AlgebraVector> {
        match self {
            FnSpec::Ball(r) => AlgebraVector::ball_indicator(group, &group.enumerate_ball(*r)?, *r),
            FnSpec::Sphere(r) => AlgebraVector::sphere_indicator(group, &group.enumerate_ball(*r)?, *r),
            FnSpec::GenSum => Ok(AlgebraVector::generator_sum(group)),
            FnSpec::Delta(w) => Ok(AlgebraVector::delta(group, group.parse_word(w)?)),
            FnSpec::Random { radius, seed } => {
                AlgebraVector::random_signs(group, &group.enumerate_ball(*radius)?, *radius, *seed)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn round_trip() {
        for s in ["ball:3", "sphere:0", "gen-sum", "delta:aba'", "random:4,17"] {
            assert_eq!(s.parse::<FnSpec>().unwrap().to_string(), s);
        }
        for bad in ["ball", "ball:x", "random:3", "cube:2", "gen-sum:1"] {
            assert!(matches!(bad.parse::<FnSpec>(), Err(Error::Usage(_))), "{bad}");
        }
    }

    #[test]
    fn builds_vectors() {
        let g = Arc::new(GroupHandle::new(GroupSpec::parse("free:2").unwrap()).unwrap());
        let build = |s: &str| s.parse::<FnSpec>().unwrap().build(&g).unwrap();
        assert_eq!(build("ball:2").support_len(), 17);
        assert_eq!(build("sphere:2").support_len(), 12);
        assert_eq!(build("gen-sum").l1(), 4.0);
        assert_eq!(build("delta:aba'").support_radius().unwrap(), 3);
        assert_eq!(build("random:2,5"), build("random:2,5"));
    }
}
