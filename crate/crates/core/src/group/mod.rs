//! Exact arithmetic, word lengths and Cayley balls for the built-in group
//! families.
//!
//! Each family has a fixed standard symmetric generating set:
//!
//! | family            | generators                                   |
//! |-------------------|----------------------------------------------|
//! | `zd:d`            | `±e_i`, written `a, a', b, b', …`            |
//! | `free:k`          | `a, a', b, b', …`                            |
//! | `heisenberg`      | `a = (1,0,0)`, `b = (0,1,0)` and inverses    |
//! | `lamplighter`     | lamp toggle `a`, shift `t`, `t'`             |
//! | `raag:…`          | one letter per vertex of the defining graph  |
//!
//! Free-abelian, free and raag word lengths have closed forms. Heisenberg and
//! lamplighter lengths are read from a breadth-first memo of fixed radius and
//! queries beyond it fail with a capacity error.

mod ball;
mod length;
mod words;

use std::fmt;
use std::path::Path;

pub use ball::BallIndex;
pub use length::{CayleyAction, LengthFunction};
pub use words::Letter;

use words::Commutation;

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, FiniteGraph};

/// Default element cap for ball enumeration and convolution supports.
pub const DEFAULT_CAP: usize = 10_000_000;
/// Default radius of the breadth-first length memo.
pub const DEFAULT_MEMO_RADIUS: u32 = 12;

const MAX_GENERATORS: usize = 26;

/// The defining graph of a right-angled Artin group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl DefiningGraph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::Config("raag defining graph needs a vertex".into()));
        }
        if vertices > MAX_GENERATORS {
            return Err(Error::Config(format!(
                "raag defining graph has {vertices} vertices; at most {MAX_GENERATORS} are supported"
            )));
        }
        let graph = FiniteGraph::from_edges(vertices, edges)?;
        Ok(DefiningGraph {
            vertices,
            edges: graph.edges().to_vec(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (n, edges) = parse_edge_list(text)?;
        DefiningGraph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        DefiningGraph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Config(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        DefiningGraph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        DefiningGraph::new(n, &edges)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn commutation_masks(&self) -> Vec<u32> {
        let mut masks = vec![0u32; self.vertices];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    /// Size of the largest clique, the dimension of the associated cube
    /// complex. Brute force over vertex subsets.
    pub fn clique_number(&self) -> usize {
        let masks = self.commutation_masks();
        let n = self.vertices;
        (0u32..1 << n)
            .filter(|&set| {
                (0..n).all(|i| set & (1 << i) == 0 || (set & !(1 << i)) & !masks[i] == 0)
            })
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// A group family instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    FreeAbelian { rank: usize },
    Free { rank: usize },
    Heisenberg,
    Lamplighter,
    Raag(DefiningGraph),
}

impl GroupSpec {
    /// Parses `zd:d`, `free:k`, `heisenberg`, `lamplighter`, or
    /// `raag:<graph>` where `<graph>` is `path:n`, `cycle:n`, `complete:n`,
    /// `empty:n`, or a path to a defining-graph file.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Config(format!("unknown group spec `{text}`"));
        let (family, arg) = text.split_once(':').unwrap_or((text, ""));
        let rank = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        let spec = match family {
            "zd" | "z" => GroupSpec::FreeAbelian { rank: rank(arg)? },
            "free" | "f" => GroupSpec::Free { rank: rank(arg)? },
            "heisenberg" if arg.is_empty() => GroupSpec::Heisenberg,
            "lamplighter" if arg.is_empty() => GroupSpec::Lamplighter,
            "raag" => {
                let (kind, n) = arg.split_once(':').unwrap_or((arg, ""));
                let graph = match kind {
                    "path" => DefiningGraph::path(rank(n)?)?,
                    "cycle" => DefiningGraph::cycle(rank(n)?)?,
                    "complete" => DefiningGraph::complete(rank(n)?)?,
                    "empty" => DefiningGraph::new(rank(n)?, &[])?,
                    _ => {
                        let path = Path::new(arg);
                        let text = std::fs::read_to_string(path).map_err(|e| {
                            Error::Config(format!("cannot read defining graph `{arg}`: {e}"))
                        })?;
                        DefiningGraph::parse(&text)?
                    }
                };
                GroupSpec::Raag(graph)
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::FreeAbelian { rank } | GroupSpec::Free { rank } => {
                if *rank == 0 {
                    return Err(Error::Config("rank must be at least 1".into()));
                }
                if *rank > MAX_GENERATORS {
                    return Err(Error::Config(format!(
                        "rank {rank} exceeds the supported {MAX_GENERATORS} generators"
                    )));
                }
                Ok(())
            }
            GroupSpec::Raag(graph) => DefiningGraph::new(graph.vertices, &graph.edges).map(|_| ()),
            GroupSpec::Heisenberg | GroupSpec::Lamplighter => Ok(()),
        }
    }

    /// Whether the standard Cayley graph is a tree.
    pub fn is_free(&self) -> bool {
        matches!(self, GroupSpec::Free { .. })
            || matches!(self, GroupSpec::FreeAbelian { rank: 1 })
            || matches!(self, GroupSpec::Raag(g) if g.edges.is_empty())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::FreeAbelian { rank } => write!(f, "zd:{rank}"),
            GroupSpec::Free { rank } => write!(f, "free:{rank}"),
            GroupSpec::Heisenberg => write!(f, "heisenberg"),
            GroupSpec::Lamplighter => write!(f, "lamplighter"),
            GroupSpec::Raag(g) => {
                write!(f, "raag:n={}", g.vertices)?;
                for (i, (u, v)) in g.edges.iter().enumerate() {
                    write!(f, "{}{u}-{v}", if i == 0 { ";" } else { "," })?;
                }
                Ok(())
            }
        }
    }
}

/// Canonical form of a group element. Equality of forms is equality of
/// elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// Integer vector in ℤ^d.
    Lattice(Vec<i64>),
    /// Reduced word (free groups) or lexicographic normal form (raags).
    Word(Vec<Letter>),
    /// Upper unitriangular matrix `[[1, x, z], [0, 1, y], [0, 0, 1]]`.
    Heisenberg([i64; 3]),
    /// Finitely many lit lamps and the lamplighter's position.
    Lamplighter { lamps: Vec<i64>, pos: i64 },
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        }
        match self {
            Element::Lattice(v) => {
                write!(f, "(")?;
                list(f, v)?;
                write!(f, ")")
            }
            Element::Word(w) if w.is_empty() => write!(f, "e"),
            Element::Word(w) => w.iter().try_for_each(|l| write!(f, "{l}")),
            Element::Heisenberg([x, y, z]) => write!(f, "({x},{y},{z})"),
            Element::Lamplighter { lamps, pos } => {
                write!(f, "({{")?;
                list(f, lamps)?;
                write!(f, "}},{pos})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupOptions {
    /// Maximum number of elements any enumeration may hold.
    pub cap: usize,
    /// Radius of the breadth-first word-length memo (Heisenberg and
    /// lamplighter only).
    pub memo_radius: u32,
}

impl Default for GroupOptions {
    fn default() -> Self {
        GroupOptions {
            cap: DEFAULT_CAP,
            memo_radius: DEFAULT_MEMO_RADIUS,
        }
    }
}

/// An explicit group: identity, product, inverse, generators and an exact
/// word-length oracle. Immutable after construction.
#[derive(Debug)]
pub struct GroupHandle {
    spec: GroupSpec,
    options: GroupOptions,
    generators: Vec<Element>,
    generator_names: Vec<String>,
    masks: Vec<u32>,
    memo: Option<BallIndex>,
}

impl GroupHandle {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        GroupHandle::with_options(spec, GroupOptions::default())
    }

    pub fn with_options(spec: GroupSpec, options: GroupOptions) -> Result<Self> {
        spec.validate()?;
        let mut masks = Vec::new();
        let add_pair = |gens: &mut (Vec<Element>, Vec<String>), g: Element, inv: Element, name: String| {
            gens.0.push(g);
            gens.0.push(inv);
            gens.1.push(format!("{name}'"));
            gens.1.insert(gens.1.len() - 1, name);
        };
        let mut gens = (Vec::new(), Vec::new());
        match &spec {
            GroupSpec::FreeAbelian { rank } => {
                for i in 0..*rank {
                    let mut v = vec![0; *rank];
                    v[i] = 1;
                    let w: Vec<i64> = v.iter().map(|x| -x).collect();
                    let name = words::letter_symbol(i as u16).to_string();
                    add_pair(&mut gens, Element::Lattice(v), Element::Lattice(w), name);
                }
            }
            GroupSpec::Free { rank } => {
                for i in 0..*rank as u16 {
                    let l = Letter::new(i, false);
                    let name = l.to_string();
                    add_pair(
                        &mut gens,
                        Element::Word(vec![l]),
                        Element::Word(vec![l.inv()]),
                        name,
                    );
                }
            }
            GroupSpec::Raag(graph) => {
                masks = graph.commutation_masks();
                for i in 0..graph.vertices as u16 {
                    let l = Letter::new(i, false);
                    let name = l.to_string();
                    add_pair(
                        &mut gens,
                        Element::Word(vec![l]),
                        Element::Word(vec![l.inv()]),
                        name,
                    );
                }
            }
            GroupSpec::Heisenberg => {
                add_pair(
                    &mut gens,
                    Element::Heisenberg([1, 0, 0]),
                    Element::Heisenberg([-1, 0, 0]),
                    "a".into(),
                );
                add_pair(
                    &mut gens,
                    Element::Heisenberg([0, 1, 0]),
                    Element::Heisenberg([0, -1, 0]),
                    "b".into(),
                );
            }
            GroupSpec::Lamplighter => {
                gens.0.push(Element::Lamplighter {
                    lamps: vec![0],
                    pos: 0,
                });
                gens.1.push("a".into());
                add_pair(
                    &mut gens,
                    Element::Lamplighter {
                        lamps: vec![],
                        pos: 1,
                    },
                    Element::Lamplighter {
                        lamps: vec![],
                        pos: -1,
                    },
                    "t".into(),
                );
            }
        }
        let (generators, generator_names) = gens;
        let mut handle = GroupHandle {
            spec,
            options,
            generators,
            generator_names,
            masks,
            memo: None,
        };
        if matches!(handle.spec, GroupSpec::Heisenberg | GroupSpec::Lamplighter) {
            handle.memo = Some(handle.enumerate_ball(options.memo_radius)?);
        }
        Ok(handle)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn options(&self) -> GroupOptions {
        self.options
    }

    pub fn identity(&self) -> Element {
        match &self.spec {
            GroupSpec::FreeAbelian { rank } => Element::Lattice(vec![0; *rank]),
            GroupSpec::Free { .. } | GroupSpec::Raag(_) => Element::Word(Vec::new()),
            GroupSpec::Heisenberg => Element::Heisenberg([0; 3]),
            GroupSpec::Lamplighter => Element::Lamplighter {
                lamps: Vec::new(),
                pos: 0,
            },
        }
    }

    /// The symmetric generating set, each generator followed by its inverse
    /// (self-inverse generators appear once).
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    fn commutation(&self) -> Commutation<'_> {
        Commutation { masks: &self.masks }
    }

    /// Canonical form of `g·h`.
    ///
    /// Panics when the elements belong to different families.
    pub fn multiply(&self, g: &Element, h: &Element) -> Element {
        match (g, h) {
            (Element::Lattice(a), Element::Lattice(b)) => {
                Element::Lattice(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Element::Word(a), Element::Word(b)) => {
                Element::Word(self.commutation().multiply(a, b))
            }
            (Element::Heisenberg([x, y, z]), Element::Heisenberg([u, v, w])) => {
                Element::Heisenberg([x + u, y + v, z + w + x * v])
            }
            (
                Element::Lamplighter { lamps: f, pos: p },
                Element::Lamplighter { lamps: g, pos: q },
            ) => Element::Lamplighter {
                lamps: symmetric_difference(f, g, *p),
                pos: p + q,
            },
            _ => panic!("multiply: elements {g} and {h} belong to different families"),
        }
    }

    pub fn invert(&self, g: &Element) -> Element {
        match g {
            Element::Lattice(a) => Element::Lattice(a.iter().map(|x| -x).collect()),
            Element::Word(w) => Element::Word(self.commutation().invert(w)),
            Element::Heisenberg([x, y, z]) => Element::Heisenberg([-x, -y, x * y - z]),
            Element::Lamplighter { lamps, pos } => Element::Lamplighter {
                lamps: lamps.iter().map(|i| i - pos).collect(),
                pos: -pos,
            },
        }
    }

    /// Exact word length with respect to the standard generators.
    pub fn word_length(&self, g: &Element) -> Result<u32> {
        match g {
            Element::Lattice(a) => Ok(a.iter().map(|x| x.unsigned_abs()).sum::<u64>() as u32),
            Element::Word(w) => Ok(w.len() as u32),
            Element::Heisenberg(_) | Element::Lamplighter { .. } => {
                let memo = self.memo.as_ref().expect("memo exists for bfs families");
                memo.length_of(g).ok_or_else(|| {
                    Error::capacity_at(
                        memo.radius() + 1,
                        format!(
                            "{g} lies outside the word-length memo of radius {}",
                            memo.radius()
                        ),
                    )
                })
            }
        }
    }

    /// Word-metric distance `ℓ(g⁻¹h)` between two vertices of the Cayley
    /// graph.
    pub fn distance(&self, g: &Element, h: &Element) -> Result<u32> {
        match (g, h) {
            (Element::Lattice(a), Element::Lattice(b)) => Ok(a
                .iter()
                .zip(b)
                .map(|(x, y)| (y - x).unsigned_abs())
                .sum::<u64>() as u32),
            (Element::Word(a), Element::Word(b)) => {
                Ok(self.commutation().distance(a, b) as u32)
            }
            _ => self.word_length(&self.multiply(&self.invert(g), h)),
        }
    }

    /// Parses a word in generator letters, `'` marking an inverse
    /// (`aba'`). `e` and the empty string denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Element> {
        let text = text.trim();
        let mut g = self.identity();
        if text.is_empty() || text == "e" || text == "1" {
            return Ok(g);
        }
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            let inverse = chars.next_if_eq(&'\'').is_some();
            let name = c.to_string();
            let idx = self
                .generator_names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| {
                    Error::Usage(format!("`{c}` is not a generator of {}", self.spec))
                })?;
            let mut s = self.generators[idx].clone();
            if inverse {
                s = self.invert(&s);
            }
            g = self.multiply(&g, &s);
        }
        Ok(g)
    }

    /// The vertex at distance `k` from the identity along the ShortLex-first
    /// geodesic to `h` (generators compared in the order of
    /// [`GroupHandle::generators`]). `k` is clamped to `ℓ(h)`.
    pub fn geodesic_prefix(&self, h: &Element, k: u32) -> Result<Element> {
        if let Element::Word(w) = h {
            // normal forms of free groups and raags are ShortLex-least
            let k = (k as usize).min(w.len());
            return Ok(Element::Word(w[..k].to_vec()));
        }
        let mut rest_len = self.word_length(h)?;
        let mut prefix = self.identity();
        let mut rest = h.clone();
        for _ in 0..k.min(rest_len) {
            let mut stepped = false;
            for s in &self.generators {
                let candidate = self.multiply(&self.invert(s), &rest);
                if self.word_length(&candidate)? + 1 == rest_len {
                    prefix = self.multiply(&prefix, s);
                    rest = candidate;
                    rest_len -= 1;
                    stepped = true;
                    break;
                }
            }
            assert!(stepped, "some generator always shortens a nontrivial element");
        }
        Ok(prefix)
    }

    /// Enumerates `B(R) = {x : ℓ(x) ≤ R}` by breadth-first search.
    pub fn enumerate_ball(&self, radius: u32) -> Result<BallIndex> {
        BallIndex::enumerate(self, radius, self.options.cap)
    }

    /// Growth function `γ(0..=n)` from a fresh enumeration.
    pub fn growth(&self, n: u32) -> Result<Vec<u64>> {
        Ok(self.enumerate_ball(n)?.growth())
    }
}

/// `f Δ (g shifted by p)`, both sorted.
fn symmetric_difference(f: &[i64], g: &[i64], p: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < f.len() || j < g.len() {
        let a = f.get(i).copied();
        let b = g.get(j).map(|x| x + p);
        match (a, b) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(x);
                i += 1;
            }
            (Some(_), Some(y)) | (None, Some(y)) => {
                out.push(y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(x);
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> GroupHandle {
        GroupHandle::new(GroupSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn geodesic_prefixes() {
        let z2 = group("zd:2");
        let h = Element::Lattice(vec![2, -3]);
        assert_eq!(z2.geodesic_prefix(&h, 3).unwrap(), Element::Lattice(vec![2, -1]));
        assert_eq!(z2.geodesic_prefix(&h, 9).unwrap(), h);
        let f2 = group("free:2");
        let w = f2.parse_word("ab'a").unwrap();
        assert_eq!(f2.geodesic_prefix(&w, 2).unwrap(), f2.parse_word("ab'").unwrap());
        let heis = group("heisenberg");
        let c = Element::Heisenberg([0, 0, 1]);
        for k in 0..=4 {
            let p = heis.geodesic_prefix(&c, k).unwrap();
            assert_eq!(heis.word_length(&p).unwrap(), k);
            assert_eq!(heis.distance(&p, &c).unwrap(), 4 - k);
        }
    }

    #[test]
    fn make_group_generators() {
        assert_eq!(group("zd:1").generators().len(), 2);
        assert_eq!(group("free:2").generator_names(), &["a", "a'", "b", "b'"]);
        assert_eq!(group("raag:path:3").generators().len(), 6);
        assert_eq!(group("lamplighter").generator_names(), &["a", "t", "t'"]);
    }

    #[test]
    fn malformed_specs() {
        assert!(matches!(GroupSpec::parse("zd:0"), Err(Error::Config(_))));
        assert!(matches!(GroupSpec::parse("free:x"), Err(Error::Config(_))));
        assert!(matches!(GroupSpec::parse("raag:/nonexistent"), Err(Error::Config(_))));
        assert!(matches!(DefiningGraph::parse("2 1\n0 0"), Err(Error::Config(_))));
        assert!(matches!(
            DefiningGraph::parse("3 2\n0 1\n1 0"),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn multiply_examples() {
        let f2 = group("free:2");
        let x = f2.parse_word("ab").unwrap();
        let y = f2.parse_word("b'a").unwrap();
        assert_eq!(f2.multiply(&x, &y), f2.parse_word("aa").unwrap());

        let z2 = group("zd:2");
        let p = z2.multiply(&Element::Lattice(vec![3, -1]), &Element::Lattice(vec![-1, 4]));
        assert_eq!(p, Element::Lattice(vec![2, 3]));
    }

    #[test]
    fn heisenberg_commutator_is_central_unit() {
        let h = group("heisenberg");
        let a = h.parse_word("a").unwrap();
        let b = h.parse_word("b").unwrap();
        let Element::Heisenberg(ab) = h.multiply(&a, &b) else { unreachable!() };
        let Element::Heisenberg(ba) = h.multiply(&b, &a) else { unreachable!() };
        assert_eq!((ab[0], ab[1]), (ba[0], ba[1]));
        assert_eq!(ab[2] - ba[2], 1);
    }

    #[test]
    fn invert_examples() {
        let f2 = group("free:2");
        assert_eq!(
            f2.invert(&f2.parse_word("ab'").unwrap()),
            f2.parse_word("ba'").unwrap()
        );
        assert_eq!(f2.invert(&f2.identity()), f2.identity());
        let l = group("lamplighter");
        let g = Element::Lamplighter {
            lamps: vec![0],
            pos: 1,
        };
        assert_eq!(
            l.invert(&g),
            Element::Lamplighter {
                lamps: vec![-1],
                pos: -1
            }
        );
    }

    #[test]
    fn word_length_examples() {
        let z2 = group("zd:2");
        assert_eq!(z2.word_length(&Element::Lattice(vec![3, -4])).unwrap(), 7);
        let f2 = group("free:2");
        assert_eq!(f2.word_length(&f2.parse_word("aba'").unwrap()).unwrap(), 3);
        let h = group("heisenberg");
        assert_eq!(h.word_length(&Element::Heisenberg([0, 0, 1])).unwrap(), 4);
    }

    #[test]
    fn memo_overflow_is_a_capacity_error() {
        let h = GroupHandle::with_options(
            GroupSpec::Heisenberg,
            GroupOptions {
                memo_radius: 3,
                ..GroupOptions::default()
            },
        )
        .unwrap();
        let err = h.word_length(&Element::Heisenberg([5, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::Capacity { radius: Some(4), .. }));
    }

    #[test]
    fn parse_word_rejects_unknown_letters() {
        assert!(matches!(group("free:2").parse_word("ac"), Err(Error::Usage(_))));
    }

    #[test]
    fn spec_display_round_trips_for_builtins() {
        for s in ["zd:3", "free:2", "heisenberg", "lamplighter"] {
            assert_eq!(GroupSpec::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(
            GroupSpec::parse("raag:path:3").unwrap().to_string(),
            "raag:n=3;0-1,1-2"
        );
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(DefiningGraph::path(3).unwrap().clique_number(), 2);
        assert_eq!(DefiningGraph::complete(4).unwrap().clique_number(), 4);
        assert_eq!(DefiningGraph::new(3, &[]).unwrap().clique_number(), 1);
        assert_eq!(DefiningGraph::cycle(5).unwrap().clique_number(), 2);
    }
}
