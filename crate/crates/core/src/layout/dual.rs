//! An outerplane graph and its weak dual drawn together.
//!
//! A leaf face is drawn as a regular polygon whose internal edge is vertical
//! on its right side. Every other face is placed inside the horizontal
//! semi-strip to the right of the edge it shares with its parent: its face
//! point sits on the perpendicular through the foot of the parent's face
//! point, and its new boundary runs from `u` to `v` strictly increasing in
//! `y`, so the strips of its own children are stacked horizontal bands.
//!
//! Two placements are available. [`Construction::Tangent`] reaches a circle
//! around the face point by tangents from `u` and `v` and spreads the
//! remaining vertices over an outer concentric circle. Its strips shrink by
//! a roughly constant factor per level, so deep dual trees run out of
//! precision. [`Construction::Chord`] (the default) puts all new vertices on
//! the circle through `u` and `v` centred at the face point: every face edge
//! is a chord, every perpendicular foot is a midpoint, and the band is split
//! among the new edges in proportion to the size of the subtree behind each.

use std::collections::BTreeMap;

use num_traits::{Float, NumCast};
use serde::Serialize;

use crate::drawing::DualDrawing;
use crate::error::{Error, Result};
use crate::geom::{self, Circle, Point, SemiStrip, Segment, Side};
use crate::model::{compute_faces_and_dual, DualStructure, Edge, OuterplaneEmbedding, VertexId};
use crate::scalar::RealScalar;

/// Strips lower than this are reported as precision exhaustion.
pub const MIN_STRIP_HEIGHT: f64 = 1e-12;

/// Attempts of the placement loops before giving up.
pub const MAX_TRIANGLE_HALVINGS: usize = 200;

/// How a face is placed inside its strip.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Vertices on the circle through `u` and `v`; bands split by subtree size.
    #[default]
    Chord,
    /// Tangents from `u` and `v` to an inner circle, remaining vertices on an
    /// outer circle, both strictly inside the strip.
    Tangent,
}

impl std::str::FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chord" => Ok(Self::Chord),
            "tangent" => Ok(Self::Tangent),
            other => Err(Error::usage(format!("unknown construction {other:?}, expected chord or tangent"))),
        }
    }
}

fn c<T: RealScalar>(x: f64) -> T {
    <T as NumCast>::from(x).expect("constant fits the scalar")
}

/// One pending face: the edge `(u, v)` it shares with its drawn parent, with
/// the parent on the left of `p_u → p_v` and the empty strip on the right.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecursionFrame<T> {
    pub u: VertexId,
    pub v: VertexId,
    pub p_u: Point<T>,
    pub p_v: Point<T>,
    pub parent_face: usize,
    pub parent_face_point: Point<T>,
    /// Foot of the perpendicular from the parent face point on line `uv`.
    pub foot: Point<T>,
    pub strip: SemiStrip<T>,
    pub child_face: usize,
    pub depth: usize,
}

impl<T: RealScalar> RecursionFrame<T> {
    fn new(
        u: VertexId,
        v: VertexId,
        p_u: Point<T>,
        p_v: Point<T>,
        parent: (usize, Point<T>),
        child_face: usize,
        depth: usize,
    ) -> Result<Self> {
        let strip = SemiStrip::new(p_u, p_v, Point::new(T::one(), T::zero()))
            .map_err(|_| Error::Precision { depth, detail: format!("strip of edge ({u},{v}) has zero height") })?;
        Ok(Self { u, v, p_u, p_v, parent_face: parent.0, parent_face_point: parent.1, foot: foot_on_line(parent.1, p_u, p_v), strip, child_face, depth })
    }

    /// Unit normal of `p_u → p_v` pointing into the strip.
    pub fn normal(&self) -> Point<T> {
        let d = (self.p_v - self.p_u).normalized();
        Point::new(d.y, -d.x)
    }

    pub fn height(&self) -> T {
        self.p_v.y - self.p_u.y
    }
}

fn foot_on_line<T: RealScalar>(p: Point<T>, a: Point<T>, b: Point<T>) -> Point<T> {
    let d = b - a;
    let s = (p - a).dot(d) / d.dot(d);
    a + d * s
}

/// Placement counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct DualStats {
    /// Points computed: vertices, face points, tangent and intersection
    /// points, including discarded triangle attempts.
    pub point_computations: u64,
    /// Sum of face sizes.
    pub total_face_degree: u64,
    /// Deepest frame.
    pub max_depth: usize,
    /// Smallest strip height met.
    pub min_strip_height: f64,
}

/// A drawing under construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialDual<T> {
    pub positions: Vec<Option<Point<T>>>,
    pub face_points: Vec<Option<Point<T>>>,
}

fn tree_adjacency(dual: &DualStructure) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); dual.faces.len()];
    for d in &dual.adjacency {
        adj[d.a].push(d.b);
        adj[d.b].push(d.a);
    }
    adj
}

fn distances(adj: &[Vec<usize>], from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        for &g in &adj[f] {
            if dist[g] == usize::MAX {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
        }
    }
    dist
}

/// The leaf face of least eccentricity in the dual tree (lowest index on
/// ties), which keeps the recursion shallow.
pub fn seed_face(dual: &DualStructure) -> Result<usize> {
    if dual.faces.is_empty() {
        return Err(Error::usage("the dual has no face"));
    }
    let adj = tree_adjacency(dual);
    let d0 = distances(&adj, 0);
    let a = (0..adj.len()).max_by_key(|&f| (d0[f], std::cmp::Reverse(f))).expect("non-empty");
    let da = distances(&adj, a);
    let b = (0..adj.len()).max_by_key(|&f| (da[f], std::cmp::Reverse(f))).expect("non-empty");
    let db = distances(&adj, b);
    (0..adj.len())
        .filter(|&f| adj[f].len() <= 1)
        .min_by_key(|&f| (da[f].max(db[f]), f))
        .ok_or_else(|| Error::usage("the dual has no leaf face"))
}

/// Number of faces in the subtree of each face, rooted at `root`.
pub fn subtree_sizes(dual: &DualStructure, root: usize) -> Vec<usize> {
    let adj = tree_adjacency(dual);
    let mut order = Vec::with_capacity(adj.len());
    let mut parent = vec![usize::MAX; adj.len()];
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(f) = stack.pop() {
        order.push(f);
        for &g in &adj[f] {
            if parent[g] == usize::MAX {
                parent[g] = f;
                stack.push(g);
            }
        }
    }
    let mut size = vec![1; adj.len()];
    for &f in order.iter().rev() {
        if f != root {
            size[parent[f]] += size[f];
        }
    }
    size
}

/// Draws the seed leaf as a regular polygon of circumradius 1 centred at the
/// origin with its internal edge vertical on the right, and returns the frame
/// of its only neighbour, if any.
pub fn seed_leaf_face<T: RealScalar>(dual: &DualStructure, n: usize) -> Result<(PartialDual<T>, Option<RecursionFrame<T>>)> {
    let leaf = seed_face(dual)?;
    let face = &dual.faces[leaf].vertices;
    let k = face.len();
    let mut part = PartialDual { positions: vec![None; n], face_points: vec![None; dual.faces.len()] };
    let neighbour = dual.neighbours(leaf).first().copied();
    // index of u in the face, with v following it
    let j = match neighbour {
        Some((_, e)) => (0..k)
            .find(|&i| Edge::from_ids(face[i], face[(i + 1) % k]) == e)
            .ok_or_else(|| Error::internal("shared chord is not an edge of its face"))?,
        None => 0,
    };
    let pi: T = c(std::f64::consts::PI);
    let kk: T = c(k as f64);
    for t in 0..k {
        let angle = -pi / kk + c::<T>(2.0) * pi * c::<T>(t as f64) / kk;
        let (s, co) = Float::sin_cos(angle);
        part.positions[face[(j + t) % k].index()] = Some(Point::new(co, s));
    }
    part.face_points[leaf] = Some(Point::new(T::zero(), T::zero()));
    let frame = match neighbour {
        None => None,
        Some((g, _)) => {
            let (u, v) = (face[j], face[(j + 1) % k]);
            let p_u = part.positions[u.index()].expect("placed");
            let p_v = part.positions[v.index()].expect("placed");
            Some(RecursionFrame::new(u, v, p_u, p_v, (leaf, Point::new(T::zero(), T::zero())), g, 1)?)
        }
    };
    Ok((part, frame))
}

/// Result of placing one face.
#[derive(Clone, Debug, PartialEq)]
pub struct Placement<T> {
    /// `[p_u, w_1, …, w_{k-2}, p_v]`.
    pub polygon: Vec<Point<T>>,
    pub face_point: Point<T>,
    /// Frames of the chain edges listed in `children`.
    pub frames: Vec<RecursionFrame<T>>,
}

/// Distance along `p + t·n` at which the ray leaves the band
/// `p_u.y < y < p_v.y`, capped at `|uv|` for horizontal rays.
fn free_depth<T: RealScalar>(p: Point<T>, n: Point<T>, frame: &RecursionFrame<T>) -> T {
    let cap = (frame.p_v - frame.p_u).norm();
    if n.y > T::zero() {
        ((frame.p_v.y - p.y) / n.y).min(cap)
    } else if n.y < T::zero() {
        ((frame.p_u.y - p.y) / n.y).min(cap)
    } else {
        cap
    }
}

fn line_intersection<T: RealScalar>(a: Point<T>, da: Point<T>, b: Point<T>, db: Point<T>) -> Option<Point<T>> {
    let den = da.x * db.y - da.y * db.x;
    if den == T::zero() {
        return None;
    }
    let w = b - a;
    let s = (w.x * db.y - w.y * db.x) / den;
    Some(a + da * s)
}

fn cross<T: RealScalar>(a: Point<T>, b: Point<T>, q: Point<T>) -> T {
    (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x)
}

fn strictly_inside<T: RealScalar>(strip: &SemiStrip<T>, p: Point<T>) -> bool {
    let (s, t) = strip.coordinates(p);
    s > T::zero() && s < T::one() && t > T::zero() && p.y > strip.origin_a.y && p.y < strip.origin_b.y
}

/// New vertices strictly inside the strip, the chain strictly increasing in
/// `y`, the face point left of every edge by a margin that survives rounding,
/// and its feet on the new edges interior.
fn admissible<T: RealScalar>(poly: &[Point<T>], p_g: Point<T>, strip: &SemiStrip<T>) -> bool {
    let k = poly.len();
    let margin = Float::sqrt(T::epsilon()) * (poly[k - 1] - poly[0]).norm();
    poly[1..k - 1].iter().all(|&q| strictly_inside(strip, q))
        && poly.windows(2).all(|w| w[0].y < w[1].y)
        && (0..k).all(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % k]);
            cross(a, b, p_g) > margin * (b - a).norm()
        })
        && poly.windows(2).all(|w| {
            let d = w[1] - w[0];
            let s = (p_g - w[0]).dot(d) / d.dot(d);
            s > T::zero() && s < T::one()
        })
}

/// Vertices on the circle around `p_g` through `p_u`, on its arc right of
/// `uv`, at the heights that split the band in proportion to `weights`.
fn chord_polygon<T: RealScalar>(frame: &RecursionFrame<T>, p_g: Point<T>, weights: &[T]) -> Vec<Point<T>> {
    let r2 = (frame.p_u - p_g).dot(frame.p_u - p_g);
    let total = weights.iter().fold(T::zero(), |a, &w| a + w);
    let h = frame.height();
    let mut poly = Vec::with_capacity(weights.len() + 1);
    poly.push(frame.p_u);
    let mut acc = T::zero();
    for &w in &weights[..weights.len() - 1] {
        acc = acc + w;
        let y = frame.p_u.y + h * acc / total;
        let dy = y - p_g.y;
        let dx = Float::sqrt((r2 - dy * dy).max(T::zero()));
        let east = Point::new(p_g.x + dx, y);
        let west = Point::new(p_g.x - dx, y);
        // the point farther to the right of u → v lies on the far arc
        let pick = if cross(frame.p_u, frame.p_v, east) < cross(frame.p_u, frame.p_v, west) { east } else { west };
        poly.push(pick);
    }
    poly.push(frame.p_v);
    poly
}

fn chord_face<T: RealScalar>(frame: &RecursionFrame<T>, weights: &[T], stats: &mut DualStats) -> Result<(Vec<Point<T>>, Point<T>)> {
    let normal = frame.normal();
    let half = (frame.p_v - frame.p_u).norm() / c(2.0);
    let band_limit = if normal.y == T::zero() { half } else { frame.height() / (c::<T>(2.0) * Float::abs(normal.y)) };
    let mut rho = half.min(band_limit) / c(2.0);
    for _ in 0..MAX_TRIANGLE_HALVINGS {
        let p_g = frame.foot + normal * rho;
        let poly = chord_polygon(frame, p_g, weights);
        stats.point_computations += weights.len() as u64;
        if admissible(&poly, p_g, &frame.strip) {
            return Ok((poly, p_g));
        }
        rho = rho / c(2.0);
    }
    Err(Error::Precision { depth: frame.depth, detail: format!("no admissible face point in the strip of ({},{})", frame.u, frame.v) })
}

fn tangent_face<T: RealScalar>(frame: &RecursionFrame<T>, k: usize, stats: &mut DualStats) -> Result<(Vec<Point<T>>, Point<T>)> {
    let depth = frame.depth;
    let precision = |detail: String| Error::Precision { depth, detail };
    let normal = frame.normal();
    let p = frame.foot;
    let two: T = c(2.0);
    let mut t = free_depth(p, normal, frame) / c(3.0);
    for _ in 0..MAX_TRIANGLE_HALVINGS {
        let p_g = p + normal * t;
        stats.point_computations += 1;
        let outer_r = (p_g.y - frame.p_u.y).min(frame.p_v.y - p_g.y).min(t) / two;
        let d_u = (p_g - frame.p_u).norm();
        let d_v = (p_g - frame.p_v).norm();
        // keeps a' below b': each tangent turns by at most gamma past its touch point
        let spread = (Float::asin((t / d_u).min(T::one())) + Float::asin((t / d_v).min(T::one()))) / c(4.0);
        let gamma = spread.min(c(std::f64::consts::FRAC_PI_3));
        let inner_r = Float::cos(gamma) * outer_r;
        let inner = Circle::new(p_g, inner_r).map_err(|_| precision("inner circle vanished".into()))?;
        let outer = Circle::new(p_g, outer_r).map_err(|_| precision("outer circle vanished".into()))?;
        let (a, ray_u) = geom::tangent_from_point(frame.p_u, &inner, Side::Right).map_err(|e| precision(e.to_string()))?;
        let (b, ray_v) = geom::tangent_from_point(frame.p_v, &inner, Side::Left).map_err(|e| precision(e.to_string()))?;
        stats.point_computations += 2;
        if k == 3 {
            stats.point_computations += 1;
            if let Some(q) = line_intersection(frame.p_u, a - frame.p_u, frame.p_v, b - frame.p_v) {
                let poly = vec![frame.p_u, q, frame.p_v];
                if admissible(&poly, p_g, &frame.strip) {
                    return Ok((poly, p_g));
                }
            }
            t = t / two;
            continue;
        }
        let a2 = geom::ray_circle_far_intersection(&ray_u, &outer).map_err(|e| precision(e.to_string()))?;
        let b2 = geom::ray_circle_far_intersection(&ray_v, &outer).map_err(|e| precision(e.to_string()))?;
        stats.point_computations += 2;
        let th_a = Float::atan2(a2.y - p_g.y, a2.x - p_g.x);
        let th_b = Float::atan2(b2.y - p_g.y, b2.x - p_g.x);
        let mut poly = vec![frame.p_u, a2];
        let parts: T = c((k - 3) as f64);
        for j in 1..k - 3 {
            poly.push(outer.point_at(th_a + (th_b - th_a) * c::<T>(j as f64) / parts));
            stats.point_computations += 1;
        }
        poly.push(b2);
        poly.push(frame.p_v);
        if th_a < th_b && admissible(&poly, p_g, &frame.strip) {
            return Ok((poly, p_g));
        }
        return Err(precision(format!("tangent construction degenerates in the strip of ({},{})", frame.u, frame.v)));
    }
    Err(precision(format!("no triangle apex inside the strip of ({},{})", frame.u, frame.v)))
}

/// Places the face of `frame.child_face`, whose vertices are given rotated as
/// `[u, w_1, …, w_{k-2}, v]`. `children` maps chords of the face to the
/// undrawn faces behind them; `weights` gives each of the `k − 1` new edges
/// its share of the band (used by [`Construction::Chord`]).
pub fn place_child_face<T: RealScalar>(
    frame: &RecursionFrame<T>,
    face: &[VertexId],
    children: &BTreeMap<Edge, usize>,
    weights: &[T],
    construction: Construction,
    stats: &mut DualStats,
) -> Result<Placement<T>> {
    let k = face.len();
    let depth = frame.depth;
    if k < 3 || face[0] != frame.u || face[k - 1] != frame.v || weights.len() != k - 1 {
        return Err(Error::internal("face does not run from u to v"));
    }
    let height = frame.height();
    stats.max_depth = stats.max_depth.max(depth);
    stats.min_strip_height = if stats.min_strip_height == 0.0 { height.as_f64() } else { stats.min_strip_height.min(height.as_f64()) };
    if !(height.as_f64() >= MIN_STRIP_HEIGHT) {
        return Err(Error::Precision { depth, detail: format!("strip height {:e} below {MIN_STRIP_HEIGHT:e}", height.as_f64()) });
    }
    if !foot_inside_edge(frame) {
        return Err(Error::internal(format!("perpendicular foot misses edge ({},{})", frame.u, frame.v)));
    }
    let (polygon, p_g) = match construction {
        Construction::Chord => chord_face(frame, weights, stats)?,
        Construction::Tangent => tangent_face(frame, k, stats)?,
    };
    let area = T::wide_to_f64(geom::signed_area2(&polygon)) / 2.0;
    let perimeter: f64 = (0..k).map(|i| (polygon[(i + 1) % k] - polygon[i]).norm().as_f64()).sum();
    if !(area > MIN_STRIP_HEIGHT * perimeter) {
        return Err(Error::Precision { depth, detail: format!("face {} is too thin to resolve (area {area:e})", frame.child_face) });
    }
    stats.total_face_degree += k as u64;
    let mut frames = Vec::new();
    for i in 0..k - 1 {
        let e = Edge::from_ids(face[i], face[i + 1]);
        if let Some(&h) = children.get(&e) {
            frames.push(RecursionFrame::new(
                face[i],
                face[i + 1],
                polygon[i],
                polygon[i + 1],
                (frame.child_face, p_g),
                h,
                depth + 1,
            )?);
        }
    }
    Ok(Placement { polygon, face_point: p_g, frames })
}

/// The foot of the perpendicular from the parent face point lies strictly
/// inside segment `p_u p_v`.
pub fn foot_inside_edge<T: RealScalar>(frame: &RecursionFrame<T>) -> bool {
    let d = frame.p_v - frame.p_u;
    let s = (frame.parent_face_point - frame.p_u).dot(d) / d.dot(d);
    s > T::zero() && s < T::one()
}

/// Segment `p_u p_v` is a drawn edge with nothing drawn just beyond its
/// midpoint on the strip side.
pub fn strip_clear_of_faces<T: RealScalar>(frame: &RecursionFrame<T>, part: &PartialDual<T>, faces: &DualStructure) -> bool {
    if part.positions[frame.u.index()] != Some(frame.p_u) || part.positions[frame.v.index()] != Some(frame.p_v) {
        return false;
    }
    let mid = frame.p_u.lerp(frame.p_v, c(0.5));
    let probe = mid + frame.normal() * (frame.height() * c(1e-6));
    let tol = crate::scalar::Tolerance::default().with_incidence(0.0);
    for (f, face) in faces.faces.iter().enumerate() {
        if part.face_points[f].is_none() {
            continue;
        }
        let poly: Option<Vec<Point<T>>> = face.vertices.iter().map(|v| part.positions[v.index()]).collect();
        if let Some(poly) = poly {
            if geom::point_in_polygon(probe, &poly, &tol).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

/// No drawn point lies in the open strip and no drawn segment meets it.
pub fn strip_clear_of_drawing<T: RealScalar>(frame: &RecursionFrame<T>, part: &PartialDual<T>, faces: &DualStructure, edges: &[Edge]) -> bool {
    let tol = crate::scalar::Tolerance::default().with_incidence(0.0);
    let pts = part.positions.iter().chain(&part.face_points).flatten();
    for p in pts {
        if strictly_inside(&frame.strip, *p) {
            return false;
        }
    }
    for e in edges {
        if let (Some(a), Some(b)) = (part.positions[e.u.index()], part.positions[e.v.index()]) {
            if frame.strip.meets_segment(&Segment::raw(a, b), &tol) {
                return false;
            }
        }
    }
    for d in &faces.adjacency {
        if let (Some(a), Some(b)) = (part.face_points[d.a], part.face_points[d.b]) {
            if frame.strip.meets_segment(&Segment::raw(a, b), &tol) {
                return false;
            }
        }
    }
    true
}

/// Observer called with each frame before its face is placed.
pub type FrameHook<'a, T> = &'a mut dyn FnMut(&RecursionFrame<T>, &PartialDual<T>, &DualStructure) -> Result<()>;

/// Draws `emb` and its weak dual simultaneously with the default construction.
pub fn layout_dual_outerplanar<T: RealScalar>(emb: &OuterplaneEmbedding) -> Result<DualDrawing<T>> {
    layout_dual_outerplanar_with(emb, Construction::default())
}

pub fn layout_dual_outerplanar_with<T: RealScalar>(emb: &OuterplaneEmbedding, construction: Construction) -> Result<DualDrawing<T>> {
    layout_dual_outerplanar_observed(emb, construction, &mut |_, _, _| Ok(())).map(|(d, _)| d)
}

/// [`layout_dual_outerplanar_with`] with counters and a per-frame hook.
pub fn layout_dual_outerplanar_observed<T: RealScalar>(
    emb: &OuterplaneEmbedding,
    construction: Construction,
    hook: FrameHook<'_, T>,
) -> Result<(DualDrawing<T>, DualStats)> {
    let dual = compute_faces_and_dual(emb).map_err(|e| Error::usage(format!("invalid embedding: {e}")))?;
    let n = emb.n();
    let mut stats = DualStats::default();
    let seed = seed_face(&dual)?;
    let sizes = subtree_sizes(&dual, seed);
    let (mut part, first) = seed_leaf_face::<T>(&dual, n)?;
    stats.point_computations += dual.faces[seed].len() as u64 + 1;
    stats.total_face_degree += dual.faces[seed].len() as u64;
    let mut stack: Vec<RecursionFrame<T>> = first.into_iter().collect();
    while let Some(frame) = stack.pop() {
        hook(&frame, &part, &dual)?;
        let g = frame.child_face;
        let verts = &dual.faces[g].vertices;
        let k = verts.len();
        let start = verts.iter().position(|&x| x == frame.u).ok_or_else(|| Error::internal("u is not on the child face"))?;
        let rotated: Vec<VertexId> = (0..k).map(|i| verts[(start + i) % k]).collect();
        let children: BTreeMap<Edge, usize> =
            dual.neighbours(g).into_iter().filter(|&(h, _)| h != frame.parent_face).map(|(h, e)| (e, h)).collect();
        let weights: Vec<T> = rotated
            .windows(2)
            .map(|w| match children.get(&Edge::from_ids(w[0], w[1])) {
                Some(&h) => c((2 * sizes[h] + 1) as f64),
                None => T::one(),
            })
            .collect();
        let placement = place_child_face(&frame, &rotated, &children, &weights, construction, &mut stats)?;
        for (i, v) in rotated.iter().enumerate().skip(1).take(k - 2) {
            part.positions[v.index()] = Some(placement.polygon[i]);
        }
        part.face_points[g] = Some(placement.face_point);
        stack.extend(placement.frames.into_iter().rev());
    }
    let positions: Option<Vec<Point<T>>> = part.positions.into_iter().collect();
    let face_points: Option<Vec<Point<T>>> = part.face_points.into_iter().collect();
    match (positions, face_points) {
        (Some(positions), Some(face_points)) => {
            Ok((DualDrawing { positions, edges: emb.all_edges(), dual, face_points }, stats))
        }
        _ => Err(Error::internal("some vertex or face was never placed")),
    }
}
