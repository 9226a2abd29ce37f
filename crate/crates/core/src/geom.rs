//! Two-dimensional primitives shared by the layouts and the verifier.
//!
//! Predicates are generic over [`Scalar`]: with integer coordinates they are
//! exact, with floating coordinates they compare against a [`Tolerance`].
//! Circles, tangents and semi-strips only exist in real mode.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

use num_traits::{Float, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{RealScalar, Scalar, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point<T> {
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }
}

impl<T: Scalar> Point<T> {
    pub fn to_f64(self) -> Point<f64> {
        Point::new(self.x.as_f64(), self.y.as_f64())
    }

    pub fn dist_f64(self, other: Self) -> f64 {
        let p = self.to_f64();
        let q = other.to_f64();
        (p.x - q.x).hypot(p.y - q.y)
    }
}

impl<T: Scalar> Sub for Point<T> {
    type Output = Point<T>;
    fn sub(self, rhs: Self) -> Self {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Scalar> Add for Point<T> {
    type Output = Point<T>;
    fn add(self, rhs: Self) -> Self {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Scalar> Mul<T> for Point<T> {
    type Output = Point<T>;
    fn mul(self, k: T) -> Self {
        Point::new(self.x * k, self.y * k)
    }
}

impl<T: RealScalar> Point<T> {
    pub fn norm(self) -> T {
        Float::hypot(self.x, self.y)
    }

    pub fn dist(self, other: Self) -> T {
        (self - other).norm()
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// Counter-clockwise rotation by a quarter turn.
    pub fn perp(self) -> Self {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    pub fn rotated(self, angle: T) -> Self {
        let (s, c) = Float::sin_cos(angle);
        Point::new(self.x * c - self.y * s, self.x * s + self.y * c)
    }

    pub fn lerp(self, other: Self, t: T) -> Self {
        self + (other - self) * t
    }
}

/// A segment with distinct endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point<T>, b: Point<T>) -> Result<Self> {
        if a == b {
            return Err(Error::usage(format!("degenerate segment at ({}, {})", a.x, a.y)));
        }
        Ok(Self { a, b })
    }

    pub(crate) fn raw(a: Point<T>, b: Point<T>) -> Self {
        Self { a, b }
    }

    pub fn reversed(self) -> Self {
        Self { a: self.b, b: self.a }
    }

    pub fn length_f64(&self) -> f64 {
        self.a.dist_f64(self.b)
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.y == self.b.y
    }

    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::CounterClockwise => 1,
            Orientation::Collinear => 0,
        }
    }
}

fn sign_of<W: PartialOrd + Zero>(w: W) -> Ordering {
    let z = W::zero();
    if w > z {
        Ordering::Greater
    } else if w < z {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// `(a - o) × (b - o)` evaluated in the wide type.
pub fn cross_wide<T: Scalar>(o: Point<T>, a: Point<T>, b: Point<T>) -> T::Wide {
    let (ox, oy) = (o.x.widen(), o.y.widen());
    (a.x.widen() - ox) * (b.y.widen() - oy) - (a.y.widen() - oy) * (b.x.widen() - ox)
}

/// Dot product of the direction vectors of two segments.
pub fn direction_dot<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> T::Wide {
    let d1x = s1.b.x.widen() - s1.a.x.widen();
    let d1y = s1.b.y.widen() - s1.a.y.widen();
    let d2x = s2.b.x.widen() - s2.a.x.widen();
    let d2y = s2.b.y.widen() - s2.a.y.widen();
    d1x * d2x + d1y * d2y
}

fn direction_cross<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> T::Wide {
    let d1x = s1.b.x.widen() - s1.a.x.widen();
    let d1y = s1.b.y.widen() - s1.a.y.widen();
    let d2x = s2.b.x.widen() - s2.a.x.widen();
    let d2y = s2.b.y.widen() - s2.a.y.widen();
    d1x * d2y - d1y * d2x
}

/// Side of `c` relative to the directed line `a → b`.
///
/// In real mode `c` is collinear when its distance to the line is at most
/// `tol.incidence`.
pub fn orientation<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>, tol: &Tolerance) -> Orientation {
    let w = cross_wide(a, b, c);
    let ord = if T::is_exact() {
        sign_of(w)
    } else {
        let v = T::wide_to_f64(w);
        let len = a.dist_f64(b);
        let reach = if len > 0.0 { tol.incidence * len } else { tol.incidence };
        if v.abs() <= reach {
            Ordering::Equal
        } else if v > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    };
    match ord {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Position of the projection of `p` on `s`: below zero, inside, or past the end.
/// Returns `(t, len²)` in the wide type, where `t = (p - a)·(b - a)`.
fn projection_wide<T: Scalar>(s: &Segment<T>, p: Point<T>) -> (T::Wide, T::Wide) {
    let dx = s.b.x.widen() - s.a.x.widen();
    let dy = s.b.y.widen() - s.a.y.widen();
    let px = p.x.widen() - s.a.x.widen();
    let py = p.y.widen() - s.a.y.widen();
    (px * dx + py * dy, dx * dx + dy * dy)
}

/// True when `p` lies in the open interior of `s` (not at an endpoint).
pub fn point_in_segment_interior<T: Scalar>(p: Point<T>, s: &Segment<T>, tol: &Tolerance) -> bool {
    if orientation(s.a, s.b, p, tol) != Orientation::Collinear {
        return false;
    }
    let (t, len2) = projection_wide(s, p);
    if T::is_exact() {
        t > T::Wide::zero() && t < len2
    } else {
        let len = T::wide_to_f64(len2).sqrt();
        if len == 0.0 {
            return false;
        }
        let along = T::wide_to_f64(t) / len;
        along > tol.incidence && along < len - tol.incidence
    }
}

/// True when `p` lies on the closed segment `s`.
pub fn point_on_segment<T: Scalar>(p: Point<T>, s: &Segment<T>, tol: &Tolerance) -> bool {
    if p.dist_f64(s.a) <= tol_of::<T>(tol) || p.dist_f64(s.b) <= tol_of::<T>(tol) {
        return true;
    }
    point_in_segment_interior(p, s, tol)
}

fn tol_of<T: Scalar>(tol: &Tolerance) -> f64 {
    if T::is_exact() {
        0.0
    } else {
        tol.incidence
    }
}

/// Returns the crossing point when the open interiors of `s1` and `s2` meet in
/// exactly one point.
///
/// Shared endpoints, a vertex touching the other segment, and collinear
/// overlap all return `None`; overlap is reported by [`overlaps`] instead.
/// The location is returned in `f64` for reporting. Detection itself is exact
/// in grid mode.
pub fn proper_crossing<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>, tol: &Tolerance) -> Option<Point<f64>> {
    let o1 = orientation(s1.a, s1.b, s2.a, tol).sign();
    let o2 = orientation(s1.a, s1.b, s2.b, tol).sign();
    let o3 = orientation(s2.a, s2.b, s1.a, tol).sign();
    let o4 = orientation(s2.a, s2.b, s1.b, tol).sign();
    if o1 * o2 >= 0 || o3 * o4 >= 0 {
        return None;
    }
    // locate from a fixed one of the two, so swapping arguments gives the same bits
    let key = |s: &Segment<T>| [s.a.x.as_f64(), s.a.y.as_f64(), s.b.x.as_f64(), s.b.y.as_f64()];
    let (s1, s2) = if key(s2) < key(s1) { (s2, s1) } else { (s1, s2) };
    let denom = T::wide_to_f64(direction_cross(s1, s2));
    let num = T::wide_to_f64(cross_wide(s2.a, s2.b, s1.a));
    // s1.a + t (s1.b - s1.a) with t = ((s2.a - s1.a) × d2) / (d1 × d2)
    let t = num / denom;
    let a = s1.a.to_f64();
    let b = s1.b.to_f64();
    Some(Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
}

/// True when the segments are collinear and share more than one point.
pub fn overlaps<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>, tol: &Tolerance) -> bool {
    let collinear = [
        orientation(s1.a, s1.b, s2.a, tol),
        orientation(s1.a, s1.b, s2.b, tol),
        orientation(s2.a, s2.b, s1.a, tol),
        orientation(s2.a, s2.b, s1.b, tol),
    ]
    .iter()
    .all(|o| *o == Orientation::Collinear);
    if !collinear {
        return false;
    }
    let (tc, len2) = projection_wide(s1, s2.a);
    let (td, _) = projection_wide(s1, s2.b);
    let (lo2, hi2) = if tc < td { (tc, td) } else { (td, tc) };
    let zero = T::Wide::zero();
    let lo = if lo2 > zero { lo2 } else { zero };
    let hi = if hi2 < len2 { hi2 } else { len2 };
    if T::is_exact() {
        lo < hi
    } else {
        let len = T::wide_to_f64(len2).sqrt();
        len > 0.0 && (T::wide_to_f64(hi) - T::wide_to_f64(lo)) / len > tol.incidence
    }
}

/// Acute angle between the carrier lines of two segments, in radians.
pub fn crossing_angle<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>) -> f64 {
    let c = T::wide_to_f64(direction_cross(s1, s2)).abs();
    let d = T::wide_to_f64(direction_dot(s1, s2)).abs();
    c.atan2(d)
}

/// Perpendicularity test for two segments assumed to cross.
///
/// Grid mode: the direction dot product is exactly zero.
/// Real mode: the angle between the lines is within `tol.angle` of π/2.
pub fn is_right_angle<T: Scalar>(s1: &Segment<T>, s2: &Segment<T>, tol: &Tolerance) -> Result<bool> {
    if s1.a == s1.b || s2.a == s2.b {
        return Err(Error::usage("right-angle test on a zero-length segment"));
    }
    if T::is_exact() {
        Ok(direction_dot(s1, s2) == T::Wide::zero())
    } else {
        let deviation = std::f64::consts::FRAC_PI_2 - crossing_angle(s1, s2);
        Ok(deviation.abs() <= tol.angle)
    }
}

/// Twice the signed area of a polygon.
pub fn signed_area2<T: Scalar>(poly: &[Point<T>]) -> T::Wide {
    let mut acc = T::Wide::zero();
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        acc = acc + (p.x.widen() * q.y.widen() - q.x.widen() * p.y.widen());
    }
    acc
}

/// True iff `p` is strictly inside the simple polygon `poly`. Points on the
/// boundary are not interior.
pub fn point_in_polygon<T: Scalar>(p: Point<T>, poly: &[Point<T>], tol: &Tolerance) -> Result<bool> {
    if poly.len() < 3 {
        return Err(Error::domain("polygon needs at least three vertices"));
    }
    let area = T::wide_to_f64(signed_area2(poly)).abs();
    let degenerate = if T::is_exact() {
        area == 0.0
    } else {
        let perimeter: f64 = (0..poly.len()).map(|i| poly[i].dist_f64(poly[(i + 1) % poly.len()])).sum();
        area <= tol.incidence * perimeter
    };
    if degenerate {
        return Err(Error::domain("degenerate polygon with zero area"));
    }
    let mut inside = false;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        if a != b && point_on_segment(p, &Segment::raw(a, b), tol) {
            return Ok(false);
        }
        let turn = cross_wide(a, b, p);
        let zero = T::Wide::zero();
        let upward = a.y <= p.y && p.y < b.y && turn > zero;
        let downward = b.y <= p.y && p.y < a.y && turn < zero;
        if upward || downward {
            inside = !inside;
        }
    }
    Ok(inside)
}

/// Distance from `p` to the closed segment `s`, in `f64`.
pub fn distance_to_segment<T: Scalar>(p: Point<T>, s: &Segment<T>) -> f64 {
    let a = s.a.to_f64();
    let b = s.b.to_f64();
    let q = p.to_f64();
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return q.dist(a);
    }
    let t = (((q.x - a.x) * dx + (q.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    q.dist(Point::new(a.x + t * dx, a.y + t * dy))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Circle<T> {
    pub center: Point<T>,
    pub radius: T,
}

impl<T: RealScalar> Circle<T> {
    pub fn new(center: Point<T>, radius: T) -> Result<Self> {
        if !(radius > T::zero()) {
            return Err(Error::usage("circle radius must be positive"));
        }
        Ok(Self { center, radius })
    }

    pub fn point_at(&self, angle: T) -> Point<T> {
        let (s, c) = Float::sin_cos(angle);
        Point::new(self.center.x + self.radius * c, self.center.y + self.radius * s)
    }
}

/// Which of the two tangents from an external point, seen along the ray from
/// the point towards the circle's center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Tangent from `p` to `c`: the touch point and the segment from `p` to it.
pub fn tangent_from_point<T: RealScalar>(p: Point<T>, c: &Circle<T>, side: Side) -> Result<(Point<T>, Segment<T>)> {
    let to_p = p - c.center;
    let d = to_p.norm();
    let slack = <T as num_traits::NumCast>::from(1e-12).unwrap();
    if d <= c.radius * (T::one() + slack) {
        return Err(Error::domain("tangent requested from a point inside or on the circle"));
    }
    let alpha = Float::acos(c.radius / d);
    let w = to_p.normalized();
    let dir = match side {
        Side::Left => w.rotated(-alpha),
        Side::Right => w.rotated(alpha),
    };
    let touch = c.center + dir * c.radius;
    Ok((touch, Segment::raw(p, touch)))
}

/// Intersection of the ray `ray.a → ray.b` with `c` that lies farthest along
/// the ray.
pub fn ray_circle_far_intersection<T: RealScalar>(ray: &Segment<T>, c: &Circle<T>) -> Result<Point<T>> {
    let dir = (ray.b - ray.a).normalized();
    let rel = ray.a - c.center;
    let half_b = dir.dot(rel);
    let cc = rel.dot(rel) - c.radius * c.radius;
    let disc = half_b * half_b - cc;
    if disc < T::zero() {
        return Err(Error::domain("ray misses the circle"));
    }
    let t = -half_b + Float::sqrt(disc);
    if t < T::zero() {
        return Err(Error::domain("circle lies behind the ray origin"));
    }
    Ok(ray.a + dir * t)
}

/// The open region between two parallel semi-lines that start at
/// `origin_a` and `origin_b` and run along `direction`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SemiStrip<T> {
    pub origin_a: Point<T>,
    pub origin_b: Point<T>,
    pub direction: Point<T>,
}

impl<T: RealScalar> SemiStrip<T> {
    pub fn new(origin_a: Point<T>, origin_b: Point<T>, direction: Point<T>) -> Result<Self> {
        let base = origin_b - origin_a;
        let det = base.x * direction.y - base.y * direction.x;
        if Float::abs(det) <= T::epsilon() {
            return Err(Error::usage("semi-strip direction is parallel to its base"));
        }
        Ok(Self { origin_a, origin_b, direction: direction.normalized() })
    }

    /// Coordinates `(s, t)` of `p` in `origin_a + s·(origin_b − origin_a) + t·direction`.
    pub fn coordinates(&self, p: Point<T>) -> (T, T) {
        let base = self.origin_b - self.origin_a;
        let rel = p - self.origin_a;
        let det = base.x * self.direction.y - base.y * self.direction.x;
        let s = (rel.x * self.direction.y - rel.y * self.direction.x) / det;
        let t = (base.x * rel.y - base.y * rel.x) / det;
        (s, t)
    }

    /// Strict membership: inside both semi-lines and beyond the base.
    pub fn contains(&self, p: Point<T>, tol: &Tolerance) -> bool {
        let (s, t) = self.coordinates(p);
        let width = (self.origin_b - self.origin_a).norm().as_f64();
        let eps = tol.incidence / width.max(f64::MIN_POSITIVE);
        let s = s.as_f64();
        s > eps && s < 1.0 - eps && t.as_f64() > tol.incidence
    }

    /// True when the segment meets the open strip.
    pub fn meets_segment(&self, seg: &Segment<T>, tol: &Tolerance) -> bool {
        // Clip the parameter range of the segment against 0 < s < 1, t > 0.
        let (s0, t0) = self.coordinates(seg.a);
        let (s1, t1) = self.coordinates(seg.b);
        let width = (self.origin_b - self.origin_a).norm().as_f64();
        let eps_s = tol.incidence / width.max(f64::MIN_POSITIVE);
        let eps_t = tol.incidence;
        let (s0, s1, t0, t1) = (s0.as_f64(), s1.as_f64(), t0.as_f64(), t1.as_f64());
        let mut lo = 0.0f64;
        let mut hi = 1.0f64;
        let mut clip = |start: f64, delta: f64, bound: f64, above: bool| -> bool {
            // keep u in [lo, hi] with start + u·delta > bound (above) or < bound
            let (start, delta, bound) = if above { (start, delta, bound) } else { (-start, -delta, -bound) };
            if delta == 0.0 {
                return start > bound;
            }
            let u = (bound - start) / delta;
            if delta > 0.0 {
                lo = lo.max(u);
            } else {
                hi = hi.min(u);
            }
            lo < hi
        };
        clip(s0, s1 - s0, eps_s, true)
            && clip(s0, s1 - s0, 1.0 - eps_s, false)
            && clip(t0, t1 - t0, eps_t, true)
            && lo < hi
    }
}
