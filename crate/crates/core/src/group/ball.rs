use std::collections::HashMap;

use super::{Element, GroupHandle};
use crate::error::{Error, Result};

/// Marks a generator move that leaves the ball.
pub const OUTSIDE: u32 = u32::MAX;

/// An enumerated Cayley ball `B(R)`.
///
/// Elements are sorted by `(length, canonical form)`, so every sub-ball
/// `B(r)`, `r ≤ R`, is a prefix of the element list.
#[derive(Debug, Clone)]
pub struct BallIndex {
    radius: u32,
    elements: Vec<Element>,
    lengths: Vec<u32>,
    /// `shells[n]` is the index of the first element of length `n`;
    /// `shells[R + 1]` is the ball size.
    shells: Vec<usize>,
    index: HashMap<Element, u32>,
    /// Row-major `len × generators`: index of `x·s`, or [`OUTSIDE`].
    adjacency: Vec<u32>,
    generators: usize,
}

impl BallIndex {
    pub(super) fn enumerate(group: &GroupHandle, radius: u32, cap: usize) -> Result<Self> {
        let gens = group.generators();
        let mut elements = vec![group.identity()];
        let mut index: HashMap<Element, u32> = HashMap::new();
        index.insert(group.identity(), 0);
        let mut shells = vec![0usize, 1];
        for r in 1..=radius {
            let frontier = shells[r as usize - 1]..shells[r as usize];
            let mut shell = Vec::new();
            for i in frontier {
                for s in gens {
                    let y = group.multiply(&elements[i], s);
                    if index.contains_key(&y) {
                        continue;
                    }
                    if elements.len() + shell.len() >= cap {
                        return Err(Error::capacity_at(
                            r,
                            format!(
                                "ball of radius {r} in {} exceeds the cap of {cap} elements",
                                group.spec()
                            ),
                        ));
                    }
                    index.insert(y.clone(), u32::MAX);
                    shell.push(y);
                }
            }
            shell.sort_unstable();
            elements.extend(shell);
            shells.push(elements.len());
        }
        for (i, x) in elements.iter().enumerate() {
            *index.get_mut(x).expect("indexed during search") = i as u32;
        }
        let mut lengths = Vec::with_capacity(elements.len());
        for n in 0..=radius as usize {
            lengths.extend(std::iter::repeat_n(n as u32, shells[n + 1] - shells[n]));
        }
        let mut adjacency = Vec::with_capacity(elements.len() * gens.len());
        for x in &elements {
            for s in gens {
                let y = group.multiply(x, s);
                adjacency.push(index.get(&y).copied().unwrap_or(OUTSIDE));
            }
        }
        Ok(BallIndex {
            radius,
            elements,
            lengths,
            shells,
            index,
            adjacency,
            generators: gens.len(),
        })
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn length_of(&self, x: &Element) -> Option<u32> {
        self.index_of(x).map(|i| self.lengths[i])
    }

    /// Number of elements of length at most `r` (clamped to the radius).
    pub fn ball_size(&self, r: u32) -> usize {
        self.shells[r.min(self.radius) as usize + 1]
    }

    /// Elements of length exactly `r`.
    pub fn sphere(&self, r: u32) -> &[Element] {
        if r > self.radius {
            return &[];
        }
        &self.elements[self.shells[r as usize]..self.shells[r as usize + 1]]
    }

    /// Index of `x·s` for the `s`-th generator, if inside the ball.
    pub fn neighbor(&self, i: usize, generator: usize) -> Option<usize> {
        let j = self.adjacency[i * self.generators + generator];
        (j != OUTSIDE).then_some(j as usize)
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    /// `γ(n)` for `n = 0..=R`.
    pub fn growth(&self) -> Vec<u64> {
        self.shells[1..].iter().map(|&s| s as u64).collect()
    }

    /// The Cayley graph induced on the ball, labelled by elements.
    pub fn cayley_graph(&self) -> crate::graph::FiniteGraph {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for s in 0..self.generators {
                if let Some(j) = self.neighbor(i, s) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let labels = self.elements.iter().map(|x| x.to_string()).collect();
        crate::graph::FiniteGraph::from_edges(self.len(), &edges)
            .expect("cayley graphs of the built-in families are simple")
            .with_labels(labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn ball(spec: &str, r: u32) -> BallIndex {
        GroupHandle::new(GroupSpec::parse(spec).unwrap())
            .unwrap()
            .enumerate_ball(r)
            .unwrap()
    }

    #[test]
    fn small_ball_sizes() {
        assert_eq!(ball("zd:1", 3).len(), 7);
        assert_eq!(ball("free:2", 2).len(), 17);
        assert_eq!(ball("zd:2", 2).len(), 13);
    }

    #[test]
    fn growth_closed_forms() {
        assert_eq!(ball("zd:1", 6).growth(), vec![1, 3, 5, 7, 9, 11, 13]);
        let f2: Vec<u64> = (0..7).map(|n| 2 * 3u64.pow(n) - 1).collect();
        assert_eq!(ball("free:2", 6).growth(), f2);
    }

    #[test]
    fn order_is_by_length_then_form() {
        let b = ball("free:2", 3);
        for w in b.elements().windows(2).zip(b.lengths().windows(2)) {
            let (xs, ls) = w;
            assert!((ls[0], &xs[0]) < (ls[1], &xs[1]));
        }
    }

    #[test]
    fn cap_names_the_radius() {
        let g = GroupHandle::new(GroupSpec::Free { rank: 2 }).unwrap();
        let err = BallIndex::enumerate(&g, 6, 100).unwrap_err();
        assert_eq!(
            err,
            Error::capacity_at(4, "ball of radius 4 in free:2 exceeds the cap of 100 elements")
        );
    }

    #[test]
    fn adjacency_is_right_multiplication() {
        let g = GroupHandle::new(GroupSpec::Free { rank: 2 }).unwrap();
        let b = g.enumerate_ball(2).unwrap();
        for i in 0..b.len() {
            for (s, gen) in g.generators().iter().enumerate() {
                let y = g.multiply(b.element(i), gen);
                assert_eq!(b.neighbor(i, s), b.index_of(&y));
            }
        }
    }
}
