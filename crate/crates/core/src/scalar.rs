//! Coordinate scalars.
//!
//! Every geometric routine in this crate is written once against [`Scalar`].
//! Integer scalars give exact "grid mode" arithmetic: products are evaluated in
//! a wider integer type so orientation and dot-product signs are never rounded.
//! Floating scalars give "real mode" arithmetic where every comparison against
//! zero goes through an explicit [`Tolerance`].

use std::fmt::{Debug, Display};

use num_traits::{Float, Num, NumCast, Signed};
use serde::{Deserialize, Serialize};

/// Coordinate mode carried by every drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordMode {
    /// Exact integer coordinates.
    Grid,
    /// Floating-point coordinates compared with a tolerance.
    Real,
}

impl CoordMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CoordMode::Grid => "grid",
            CoordMode::Real => "real",
        }
    }
}

/// Tolerances used by real-mode predicates. Ignored in grid mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    /// Maximum distance at which a point counts as lying on a line.
    pub incidence: f64,
    /// Maximum deviation from π/2, in radians, for a right-angle crossing.
    pub angle: f64,
}

impl Tolerance {
    pub const DEFAULT_INCIDENCE: f64 = 1e-9;
    pub const DEFAULT_ANGLE: f64 = 1e-6;

    pub fn new(incidence: f64, angle: f64) -> Self {
        Self { incidence, angle }
    }

    pub fn with_angle(mut self, angle: f64) -> Self {
        self.angle = angle;
        self
    }

    pub fn with_incidence(mut self, incidence: f64) -> Self {
        self.incidence = incidence;
        self
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::new(Self::DEFAULT_INCIDENCE, Self::DEFAULT_ANGLE)
    }
}

/// A coordinate type.
///
/// `Wide` holds products of two coordinates. For `i64` it is `i128`, which
/// keeps cross and dot products exact as long as coordinates stay below 2^62
/// in magnitude.
pub trait Scalar:
    Num + NumCast + Signed + Copy + PartialOrd + Debug + Display + Send + Sync + 'static
{
    type Wide: Num + Signed + Copy + PartialOrd + Debug;

    const MODE: CoordMode;

    fn widen(self) -> Self::Wide;

    fn wide_to_f64(w: Self::Wide) -> f64;

    fn as_f64(self) -> f64 {
        <f64 as NumCast>::from(self).unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        Self::MODE == CoordMode::Grid
    }
}

impl Scalar for i32 {
    type Wide = i64;
    const MODE: CoordMode = CoordMode::Grid;

    fn widen(self) -> i64 {
        self as i64
    }

    fn wide_to_f64(w: i64) -> f64 {
        w as f64
    }
}

impl Scalar for i64 {
    type Wide = i128;
    const MODE: CoordMode = CoordMode::Grid;

    fn widen(self) -> i128 {
        self as i128
    }

    fn wide_to_f64(w: i128) -> f64 {
        w as f64
    }
}

impl Scalar for f32 {
    type Wide = f64;
    const MODE: CoordMode = CoordMode::Real;

    fn widen(self) -> f64 {
        self as f64
    }

    fn wide_to_f64(w: f64) -> f64 {
        w
    }
}

impl Scalar for f64 {
    type Wide = f64;
    const MODE: CoordMode = CoordMode::Real;

    fn widen(self) -> f64 {
        self
    }

    fn wide_to_f64(w: f64) -> f64 {
        w
    }
}

/// Real-mode scalars: the ones that can take square roots.
pub trait RealScalar: Scalar + Float {}

impl RealScalar for f32 {}
impl RealScalar for f64 {}
