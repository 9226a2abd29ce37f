//! Drawings produced by the layouts and consumed by the verifier.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, Segment};
use crate::model::{DualStructure, Edge, VertexId};
use crate::scalar::{CoordMode, Scalar};

/// Part of the layout an edge plays. Used for the structural checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeRole {
    /// Alternate path edge `(v_i, v_{i+1})`, `i` odd, of the laid-out
    /// instance, or any other path edge without a shape constraint.
    PathOdd,
    /// Remaining path edges. Vertical in every path layout.
    PathEven,
    Matching,
    /// The edge that closes a cycle, and edges reshaped when closing it.
    Closing,
    /// Path edges of uncovered end runs, drawn outside the main layout.
    Staircase,
}

/// Straight-line drawing of a simultaneous instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Drawing<T> {
    /// Position of vertex `i + 1` at index `i`.
    pub positions: Vec<Point<T>>,
    pub edges_a: Vec<Edge>,
    pub edges_b: Vec<Edge>,
    pub roles: BTreeMap<Edge, EdgeRole>,
}

impl<T: Scalar> Drawing<T> {
    pub fn new(positions: Vec<Point<T>>, edges_a: Vec<Edge>, edges_b: Vec<Edge>) -> Self {
        Self { positions, edges_a, edges_b, roles: BTreeMap::new() }
    }

    pub fn mode(&self) -> CoordMode {
        T::MODE
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn pos(&self, v: VertexId) -> Point<T> {
        self.positions[v.index()]
    }

    pub fn segment(&self, e: &Edge) -> Segment<T> {
        Segment::raw(self.pos(e.u), self.pos(e.v))
    }

    /// `(min, max)` corners, or `None` for an empty drawing.
    pub fn bounding_box(&self) -> Option<(Point<T>, Point<T>)> {
        let first = *self.positions.first()?;
        let (mut lo, mut hi) = (first, first);
        for p in &self.positions[1..] {
            if p.x < lo.x {
                lo.x = p.x;
            }
            if p.y < lo.y {
                lo.y = p.y;
            }
            if p.x > hi.x {
                hi.x = p.x;
            }
            if p.y > hi.y {
                hi.y = p.y;
            }
        }
        Some((lo, hi))
    }

    /// Checks that every edge endpoint has a position.
    pub fn check_references(&self) -> Result<()> {
        for e in self.edges_a.iter().chain(&self.edges_b) {
            if e.u.0 == 0 || e.v.index() >= self.positions.len() {
                return Err(Error::usage(format!("edge {e} references a vertex without a position")));
            }
        }
        Ok(())
    }
}

impl Drawing<i64> {
    /// Number of grid columns and rows spanned, counting both ends.
    pub fn grid_extent(&self) -> (i64, i64) {
        match self.bounding_box() {
            Some((lo, hi)) => (hi.x - lo.x + 1, hi.y - lo.y + 1),
            None => (0, 0),
        }
    }

    /// Shifts the drawing so its minimum corner is `(1, 1)`.
    pub fn normalize_origin(&mut self) {
        if let Some((lo, _)) = self.bounding_box() {
            for p in &mut self.positions {
                p.x = p.x - lo.x + 1;
                p.y = p.y - lo.y + 1;
            }
        }
    }
}

/// Simultaneous drawing of an outerplane graph and its weak dual.
#[derive(Clone, Debug, PartialEq)]
pub struct DualDrawing<T> {
    pub positions: Vec<Point<T>>,
    /// Outer edges and chords.
    pub edges: Vec<Edge>,
    pub dual: DualStructure,
    /// Point of face `f` at index `f`.
    pub face_points: Vec<Point<T>>,
}

impl<T: Scalar> DualDrawing<T> {
    pub fn pos(&self, v: VertexId) -> Point<T> {
        self.positions[v.index()]
    }

    pub fn face_polygon(&self, f: usize) -> Vec<Point<T>> {
        self.dual.faces[f].vertices.iter().map(|&v| self.pos(v)).collect()
    }

    pub fn dual_segment(&self, i: usize) -> Segment<T> {
        let d = &self.dual.adjacency[i];
        Segment::raw(self.face_points[d.a], self.face_points[d.b])
    }

    pub fn primal_segment(&self, e: &Edge) -> Segment<T> {
        Segment::raw(self.pos(e.u), self.pos(e.v))
    }
}
