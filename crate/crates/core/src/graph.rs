//! Finite simple undirected graphs with BFS distances.
//!
//! Text format shared by graph files and raag defining graphs: a first line
//! `n m`, followed by `m` lines `u v` with 0-based vertex indices. Blank lines
//! and lines starting with `#` are ignored.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl FiniteGraph {
    /// Builds a simple graph. Loops, repeated edges and out-of-range indices
    /// are configuration errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Config(format!(
                    "edge {u}-{v} references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Config(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Config(format!("repeated edge {u}-{v}")));
            }
        }
        let edges: Vec<(usize, usize)> = seen.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(FiniteGraph {
            adjacency,
            edges,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Edges as `(u, v)` with `u < v`, sorted. An edge's position in this
    /// list is its identifier.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Single-source BFS distances; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.len()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn all_pairs(&self) -> DistanceMatrix {
        let n = self.len();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(self.bfs(s));
        }
        DistanceMatrix { n, data }
    }

    /// Parses the `n m` + edge-list text format.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, edges) = parse_edge_list(text)?;
        FiniteGraph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteGraph::from_edges(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Config(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        FiniteGraph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        FiniteGraph::from_edges(a + b, &edges).expect("complete bipartite graph is simple")
    }

    /// The `width × height` grid; vertex `(x, y)` has index `x + width * y`
    /// and label `x,y`.
    pub fn grid(width: usize, height: usize) -> Self {
        let mut edges = Vec::new();
        for y in 0..height {
            for x in 0..width {
                let v = x + width * y;
                if x + 1 < width {
                    edges.push((v, v + 1));
                }
                if y + 1 < height {
                    edges.push((v, v + width));
                }
            }
        }
        let labels = (0..width * height)
            .map(|v| format!("{},{}", v % width, v / width))
            .collect();
        FiniteGraph::from_edges(width * height, &edges)
            .expect("grid is simple")
            .with_labels(labels)
    }

    /// The `d`-dimensional hypercube on bit strings.
    pub fn hypercube(d: u32) -> Self {
        let n = 1usize << d;
        let mut edges = Vec::new();
        for v in 0..n {
            for bit in 0..d {
                let w = v ^ (1 << bit);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        FiniteGraph::from_edges(n, &edges).expect("hypercube is simple")
    }

    /// A uniformly random recursive tree: vertex `i` attaches to a random
    /// earlier vertex.
    pub fn random_tree(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
        FiniteGraph::from_edges(n, &edges).expect("tree is simple")
    }

    /// Named generators accepted on the command line: `grid:WxH`, `cube:d`,
    /// `cycle:n`, `path:n`, `tree:n,seed`, `k23`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown graph name `{name}`"));
        let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        match kind {
            "k23" if arg.is_empty() => Ok(FiniteGraph::complete_bipartite(2, 3)),
            "grid" => {
                let (w, h) = arg.split_once(['x', 'X']).ok_or_else(bad)?;
                Ok(FiniteGraph::grid(num(w)?, num(h)?))
            }
            "cube" => {
                let d = num(arg)?;
                if d > 12 {
                    return Err(Error::Config(format!("cube:{d} is too large")));
                }
                Ok(FiniteGraph::hypercube(d as u32))
            }
            "cycle" => FiniteGraph::cycle(num(arg)?),
            "path" => Ok(FiniteGraph::path(num(arg)?)),
            "tree" => {
                let (n, seed) = arg.split_once(',').ok_or_else(bad)?;
                Ok(FiniteGraph::random_tree(num(n)?, num(seed)? as u64))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FiniteGraph {
    /// Writes the `n m` + edge-list format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.len(), self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses `n m` followed by `m` edge lines, without simplicity checks.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Config("empty graph description".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Config(format!(
            "header announces {m} edges but {} were given",
            edges.len()
        )));
    }
    Ok((n, edges))
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Config(format!("malformed line `{line}`")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::Config(format!("malformed line `{line}`")));
    }
    Ok(pair)
}

/// Row-major all-pairs distance table.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}
