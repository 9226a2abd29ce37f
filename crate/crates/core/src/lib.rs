//! Simultaneous right-angle-crossing drawings.
//!
//! Layouts for a path or cycle together with a matching on an integer grid,
//! a real-coordinate layout of an outerplane graph together with its weak
//! dual, a brute-force verifier, seeded generators and file formats.
//!
//! The geometry is generic over [`Scalar`]. Integer scalars give exact grid
//! arithmetic; floating scalars compare against a [`Tolerance`].

// NaN must fail range checks, so `!(x > 0)` is intended.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod drawing;
pub mod error;
pub mod gen;
pub mod geom;
pub mod io;
pub mod layout;
pub mod model;
pub mod scalar;
pub mod verify;

pub use drawing::{DualDrawing, Drawing, EdgeRole};
pub use error::{Error, Result};
pub use geom::{Point, Segment};
pub use model::{Edge, InstanceKind, OuterplaneEmbedding, SimInstance, VertexId};
pub use scalar::{CoordMode, RealScalar, Scalar, Tolerance};
pub use verify::{verify_all, Profile, Report};

pub type GridPoint = Point<i64>;
pub type RealPoint = Point<f64>;
pub type GridSegment = Segment<i64>;
pub type RealSegment = Segment<f64>;
pub type GridDrawing = Drawing<i64>;
pub type RealDrawing = Drawing<f64>;
pub type RealDualDrawing = DualDrawing<f64>;

/// Crate version recorded in drawing metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
