use serde::Serialize;

use super::Bits;
use crate::error::{Error, Result};
use crate::graph::FiniteGraph;

/// A class of edges under the transitive closure of "opposite sides of a
/// 4-cycle", with the two halfspaces left after deleting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub id: usize,
    /// Edge ids into [`FiniteGraph::edges`], ascending.
    pub edges: Vec<usize>,
    /// Vertices on the side of the larger endpoint of the first edge.
    upper: Bits,
    n: usize,
}

impl Hyperplane {
    pub fn side(&self, v: usize) -> bool {
        self.upper.get(v)
    }

    pub fn separates(&self, u: usize, v: usize) -> bool {
        self.side(u) != self.side(v)
    }

    /// `(lower, upper)` vertex sets.
    pub fn halfspaces(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.n).partition(|&v| !self.side(v))
    }

    /// The halfspace containing `v`, as a bitset.
    pub(crate) fn halfspace_of(&self, v: usize) -> Bits {
        if self.side(v) {
            self.upper.clone()
        } else {
            let mut b = Bits::new(self.n);
            for x in (0..self.n).filter(|&x| !self.side(x)) {
                b.set(x);
            }
            b
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        // keep the smaller root so class ids follow the edge order
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
    }
}

/// Θ-classes of a graph, numbered in order of their first edge.
///
/// Each class must split the graph into exactly two components with every
/// class edge running between them; otherwise a median-violation error
/// names the first offending edge.
pub fn hyperplanes(graph: &FiniteGraph) -> Result<Vec<Hyperplane>> {
    let edges = graph.edges();
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    for (id, &(u, v)) in edges.iter().enumerate() {
        for &x in graph.neighbors(u) {
            if x == v {
                continue;
            }
            for &y in graph.neighbors(v) {
                if y != u && y != x && graph.has_edge(x, y) {
                    let other = graph.edge_id(x, y).expect("edge present");
                    union(&mut parent, id, other);
                }
            }
        }
    }
    let mut class_of_root = vec![usize::MAX; edges.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for id in 0..edges.len() {
        let root = find(&mut parent, id);
        if class_of_root[root] == usize::MAX {
            class_of_root[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[class_of_root[root]].push(id);
    }
    let n = graph.len();
    let mut out = Vec::with_capacity(classes.len());
    for (cid, class) in classes.into_iter().enumerate() {
        let mut removed = vec![false; edges.len()];
        for &e in &class {
            removed[e] = true;
        }
        let (a, b) = edges[class[0]];
        let upper = component_avoiding(graph, b, &removed);
        let lower = component_avoiding(graph, a, &removed);
        let violation = |u: usize, v: usize, detail: &str| Error::MedianViolation {
            triple: [graph.label(u), graph.label(v), format!("hyperplane {cid}")],
            intersection: vec![detail.to_string()],
        };
        if upper.get(a) {
            return Err(violation(a, b, "class does not separate its own edge"));
        }
        for x in 0..n {
            if upper.get(x) == lower.get(x) {
                return Err(violation(a, b, &format!("vertex {} lies in neither halfspace", graph.label(x))));
            }
        }
        for &e in &class {
            let (u, v) = edges[e];
            if upper.get(u) == upper.get(v) {
                return Err(violation(u, v, "class edge inside one halfspace"));
            }
        }
        out.push(Hyperplane {
            id: cid,
            edges: class,
            upper,
            n,
        });
    }
    Ok(out)
}

fn component_avoiding(graph: &FiniteGraph, start: usize, removed: &[bool]) -> Bits {
    let mut seen = Bits::new(graph.len());
    seen.set(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in graph.neighbors(u) {
            let e = graph.edge_id(u, w).expect("adjacent");
            if !removed[e] && !seen.get(w) {
                seen.set(w);
                stack.push(w);
            }
        }
    }
    seen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WallDistance {
    pub d: u32,
    pub separating: usize,
    pub equal: bool,
}

/// Compares `d(u,v)` with the number of hyperplanes separating `u` and `v`.
pub fn wall_distance_check(graph: &FiniteGraph, walls: &[Hyperplane], u: usize, v: usize) -> Result<WallDistance> {
    for x in [u, v] {
        if x >= graph.len() {
            return Err(Error::Usage(format!("vertex {x} out of range")));
        }
    }
    let d = graph.bfs(u)[v];
    let separating = walls.iter().filter(|h| h.separates(u, v)).count();
    Ok(WallDistance {
        d,
        separating,
        equal: d as usize == separating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(hyperplanes(&FiniteGraph::path(4)).unwrap().len(), 3);
        let c4 = hyperplanes(&FiniteGraph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.len(), 2);
        assert!(c4.iter().all(|h| h.edges.len() == 2));
        let grid = hyperplanes(&FiniteGraph::grid(5, 5)).unwrap();
        assert_eq!(grid.len(), 8);
        assert!(grid.iter().all(|h| h.edges.len() == 5));
    }

    #[test]
    fn classes_partition_edges() {
        let g = FiniteGraph::hypercube(4);
        let walls = hyperplanes(&g).unwrap();
        assert_eq!(walls.len(), 4);
        let mut all: Vec<usize> = walls.iter().flat_map(|h| h.edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..g.edges().len()).collect::<Vec<_>>());
        for h in &walls {
            let (lo, hi) = h.halfspaces();
            assert_eq!((lo.len(), hi.len()), (8, 8));
        }
    }

    #[test]
    fn six_cycle_fails_separation() {
        let c6 = FiniteGraph::cycle(6).unwrap();
        assert!(matches!(hyperplanes(&c6), Err(Error::MedianViolation { .. })));
    }

    #[test]
    fn wall_distance_examples() {
        let g = FiniteGraph::grid(5, 5);
        let walls = hyperplanes(&g).unwrap();
        let at = |s: &str| g.find_label(s).unwrap();
        let same = wall_distance_check(&g, &walls, at("2,2"), at("2,2")).unwrap();
        assert_eq!(same, WallDistance { d: 0, separating: 0, equal: true });
        let far = wall_distance_check(&g, &walls, at("0,0"), at("3,2")).unwrap();
        assert_eq!(far, WallDistance { d: 5, separating: 5, equal: true });
        let cube = FiniteGraph::hypercube(3);
        let cw = hyperplanes(&cube).unwrap();
        let anti = wall_distance_check(&cube, &cw, 0, 7).unwrap();
        assert_eq!(anti, WallDistance { d: 3, separating: 3, equal: true });
    }
}
