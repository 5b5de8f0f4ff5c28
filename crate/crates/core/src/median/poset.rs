use serde::Serialize;

use super::{interval, Bits, Hyperplane};
use crate::error::{Error, Result};
use crate::graph::FiniteGraph;

/// The hyperplanes separating `v` from `w`, ordered by nesting:
/// `h₁ < h₂` when the `w`-halfspace of `h₂` lies inside that of `h₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplanePoset {
    /// Hyperplane ids, ascending.
    pub ground: Vec<usize>,
    /// `less[i][j]` for ground positions `i`, `j`.
    less: Vec<Vec<bool>>,
}

impl HyperplanePoset {
    /// An abstract poset on `ground`; `less` must be irreflexive and
    /// transitive.
    pub fn from_relation(ground: Vec<usize>, less: Vec<Vec<bool>>) -> Result<Self> {
        let n = ground.len();
        if less.len() != n || less.iter().any(|row| row.len() != n) {
            return Err(Error::Usage(format!("relation must be {n}×{n}")));
        }
        for i in 0..n {
            if less[i][i] {
                return Err(Error::Usage(format!("relation is reflexive at {}", ground[i])));
            }
            for j in 0..n {
                for k in 0..n {
                    if less[i][j] && less[j][k] && !less[i][k] {
                        return Err(Error::Usage("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(HyperplanePoset { ground, less })
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// Order on ground positions.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less[i][j] || self.less[j][i]
    }
}

pub fn hyperplane_poset(walls: &[Hyperplane], v: usize, w: usize) -> HyperplanePoset {
    let separating: Vec<&Hyperplane> = walls.iter().filter(|h| h.separates(v, w)).collect();
    let plus: Vec<Bits> = separating.iter().map(|h| h.halfspace_of(w)).collect();
    let n = separating.len();
    let less = (0..n)
        .map(|i| (0..n).map(|j| i != j && plus[j].is_subset(&plus[i])).collect())
        .collect();
    HyperplanePoset {
        ground: separating.iter().map(|h| h.id).collect(),
        less,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCover {
    /// Each chain lists hyperplane ids in increasing order.
    pub chains: Vec<Vec<usize>>,
    pub width: usize,
}

fn augment(i: usize, poset: &HyperplanePoset, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for j in 0..poset.len() {
        if poset.less(i, j) && !seen[j] {
            seen[j] = true;
            if match_right[j].is_none_or(|k| augment(k, poset, seen, match_right)) {
                match_right[j] = Some(i);
                return true;
            }
        }
    }
    false
}

/// Minimum chain cover from a maximum matching of the comparability
/// relation; the number of chains is the width.
pub fn chain_cover(poset: &HyperplanePoset) -> ChainCover {
    let n = poset.len();
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut seen = vec![false; n];
        augment(i, poset, &mut seen, &mut match_right);
    }
    let mut next = vec![None; n];
    for (j, m) in match_right.iter().enumerate() {
        if let Some(i) = m {
            next[*i] = Some(j);
        }
    }
    let mut chains = Vec::new();
    for start in (0..n).filter(|&j| match_right[j].is_none()) {
        let mut chain = vec![poset.ground[start]];
        let mut cur = start;
        while let Some(j) = next[cur] {
            chain.push(poset.ground[j]);
            cur = j;
        }
        chains.push(chain);
    }
    ChainCover {
        width: chains.len(),
        chains,
    }
}

/// `c_i(u)`: hyperplanes of chain `i` separating `u` from `v`.
pub fn interval_coordinates(
    graph: &FiniteGraph,
    walls: &[Hyperplane],
    v: usize,
    w: usize,
    cover: &ChainCover,
    u: usize,
) -> Result<Vec<usize>> {
    if interval(graph, v, w)?.binary_search(&u).is_err() {
        return Err(Error::Usage(format!(
            "{} is not in the interval [{}, {}]",
            graph.label(u),
            graph.label(v),
            graph.label(w)
        )));
    }
    Ok(cover
        .chains
        .iter()
        .map(|chain| chain.iter().filter(|&&h| walls[h].separates(u, v)).count())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub r: u32,
    pub count: usize,
    /// `(r+1)^N` for the cover width `N`.
    pub bound: u64,
    pub holds: bool,
}

/// `|[v,w] ∩ B(v,r)|` against `(r+1)^N`, `r = 0..=r_max`.
pub fn interval_growth_check(
    graph: &FiniteGraph,
    walls: &[Hyperplane],
    v: usize,
    w: usize,
    r_max: u32,
) -> Result<(ChainCover, Vec<GrowthRow>)> {
    let members = interval(graph, v, w)?;
    let cover = chain_cover(&hyperplane_poset(walls, v, w));
    let dv = graph.bfs(v);
    let rows = (0..=r_max)
        .map(|r| {
            let count = members.iter().filter(|&&x| dv[x] <= r).count();
            let bound = (r as u64 + 1).saturating_pow(cover.width as u32);
            GrowthRow {
                r,
                count,
                bound,
                holds: count as u64 <= bound,
            }
        })
        .collect();
    Ok((cover, rows))
}
