use super::{BallIndex, Element, GroupHandle};
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, UNREACHABLE};

/// A length function on a group: the word length, or the orbit length
/// `ℓ_p(x) = d(p, x·p)` of an isometric action.
pub enum LengthFunction<'a> {
    Word(&'a GroupHandle),
    Action {
        action: &'a CayleyAction<'a>,
        basepoint: Element,
    },
}

impl LengthFunction<'_> {
    pub fn eval(&self, g: &Element) -> Result<u32> {
        match self {
            LengthFunction::Word(group) => group.word_length(g),
            LengthFunction::Action { action, basepoint } => action.action_length(basepoint, g),
        }
    }
}

/// Left-multiplication action of a group on a finite piece of its own
/// Cayley graph.
pub struct CayleyAction<'a> {
    group: &'a GroupHandle,
    ball: BallIndex,
    graph: FiniteGraph,
}

impl<'a> CayleyAction<'a> {
    /// Loads the Cayley graph induced on `B(radius)`.
    pub fn new(group: &'a GroupHandle, radius: u32) -> Result<Self> {
        let ball = group.enumerate_ball(radius)?;
        let graph = ball.cayley_graph();
        Ok(CayleyAction { group, ball, graph })
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn ball(&self) -> &BallIndex {
        &self.ball
    }

    pub fn group(&self) -> &GroupHandle {
        self.group
    }

    /// `d(p, g·p)` in the loaded graph.
    pub fn action_length(&self, basepoint: &Element, g: &Element) -> Result<u32> {
        let outside = |x: &Element| {
            Error::capacity_at(
                self.ball.radius() + 1,
                format!(
                    "{x} lies outside the loaded Cayley graph of radius {}",
                    self.ball.radius()
                ),
            )
        };
        let p = self.ball.index_of(basepoint).ok_or_else(|| outside(basepoint))?;
        let image = self.group.multiply(g, basepoint);
        let q = self.ball.index_of(&image).ok_or_else(|| outside(&image))?;
        match self.graph.bfs(p)[q] {
            UNREACHABLE => Err(outside(&image)),
            d => Ok(d),
        }
    }
}
