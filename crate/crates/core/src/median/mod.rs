//! Median graphs: intervals, medians, hyperplanes (Θ-classes), the order
//! on hyperplanes separating two vertices, and its chain decompositions.

mod hyperplanes;
mod poset;

pub use hyperplanes::{hyperplanes, wall_distance_check, Hyperplane, WallDistance};
pub use poset::{
    chain_cover, hyperplane_poset, interval_coordinates, interval_growth_check, ChainCover, GrowthRow,
    HyperplanePoset,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, UNREACHABLE};

/// Largest graph accepted by [`is_median`].
pub const MEDIAN_CHECK_CAP: usize = 5000;

/// Fixed-size bitset over vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn check_vertex(graph: &FiniteGraph, v: usize) -> Result<()> {
    if v >= graph.len() {
        return Err(Error::Usage(format!(
            "vertex {v} out of range for a graph on {} vertices",
            graph.len()
        )));
    }
    Ok(())
}

fn interval_from(du: &[u32], dv: &[u32], target: u32) -> Vec<usize> {
    (0..du.len())
        .filter(|&x| du[x] != UNREACHABLE && dv[x] != UNREACHABLE && du[x] + dv[x] == target)
        .collect()
}

/// `[u,v] = {w : d(u,w) + d(w,v) = d(u,v)}`, sorted.
pub fn interval(graph: &FiniteGraph, u: usize, v: usize) -> Result<Vec<usize>> {
    check_vertex(graph, u)?;
    check_vertex(graph, v)?;
    let du = graph.bfs(u);
    if du[v] == UNREACHABLE {
        return Err(Error::Usage(format!(
            "{} and {} lie in different components",
            graph.label(u),
            graph.label(v)
        )));
    }
    let dv = graph.bfs(v);
    Ok(interval_from(&du, &dv, du[v]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MedianViolation {
    pub triple: [usize; 3],
    pub intersection: Vec<usize>,
}

impl MedianViolation {
    pub fn into_error(self, graph: &FiniteGraph) -> Error {
        Error::MedianViolation {
            triple: self.triple.map(|v| graph.label(v)),
            intersection: self.intersection.iter().map(|&v| graph.label(v)).collect(),
        }
    }
}

/// `Ok(None)` when every triple has exactly one median, otherwise the
/// lexicographically first offending triple `u < v < w`.
pub fn is_median(graph: &FiniteGraph) -> Result<Option<MedianViolation>> {
    let n = graph.len();
    if n > MEDIAN_CHECK_CAP {
        return Err(Error::capacity(format!(
            "median check limited to {MEDIAN_CHECK_CAP} vertices, graph has {n}"
        )));
    }
    if !graph.is_connected() {
        return Err(Error::Usage("median check needs a connected graph".into()));
    }
    let dist = graph.all_pairs();
    for u in 0..n {
        let du = dist.row(u);
        let intervals: Vec<Bits> = (0..n)
            .map(|v| {
                let dv = dist.row(v);
                let mut b = Bits::new(n);
                for x in 0..n {
                    if du[x] + dv[x] == du[v] {
                        b.set(x);
                    }
                }
                b
            })
            .collect();
        for v in u + 1..n {
            let dv = dist.row(v);
            for w in v + 1..n {
                let dw = dist.row(w);
                let both = intervals[v].0.iter().zip(&intervals[w].0).map(|(a, b)| a & b);
                let mut meet = Vec::new();
                for (k, word) in both.enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        let x = 64 * k + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        if dv[x] + dw[x] == dv[w] {
                            meet.push(x);
                        }
                    }
                }
                if meet.len() != 1 {
                    return Ok(Some(MedianViolation {
                        triple: [u, v, w],
                        intersection: meet,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// The unique vertex of `[u,v] ∩ [v,w] ∩ [w,u]`.
pub fn median(graph: &FiniteGraph, u: usize, v: usize, w: usize) -> Result<usize> {
    for x in [u, v, w] {
        check_vertex(graph, x)?;
    }
    let (du, dv, dw) = (graph.bfs(u), graph.bfs(v), graph.bfs(w));
    if du[v] == UNREACHABLE || du[w] == UNREACHABLE {
        return Err(Error::Usage("median of vertices in different components".into()));
    }
    let meet: Vec<usize> = (0..graph.len())
        .filter(|&x| du[x] + dv[x] == du[v] && dv[x] + dw[x] == dv[w] && dw[x] + du[x] == dw[u])
        .collect();
    match meet.as_slice() {
        [m] => Ok(*m),
        _ => Err(MedianViolation {
            triple: [u, v, w],
            intersection: meet,
        }
        .into_error(graph)),
    }
}
