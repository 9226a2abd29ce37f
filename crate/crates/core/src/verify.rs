//! Brute-force checker for drawings.
//!
//! Every check compares all pairs of segments (and every vertex against every
//! segment) without sweeps or spatial indices, so it stays independent of the
//! layout code it is used to test.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::drawing::{DualDrawing, Drawing, EdgeRole};
use crate::error::{Error, Result};
use crate::geom::{self, Point, Segment};
use crate::model::{Edge, VertexId};
use crate::scalar::{CoordMode, Scalar, Tolerance};

/// A drawn point: a primal vertex or a face point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Vertex(VertexId),
    Face(usize),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Vertex(v) => write!(f, "{v}"),
            Node::Face(i) => write!(f, "f{i}"),
        }
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationCode {
    SameSetCross,
    Overlap,
    VertexOnEdge,
    VertexCoincident,
    RacViolation,
    WidthExceeded,
    HeightExceeded,
    Structural,
    Containment,
    ExtraCrossing,
    MissingCrossing,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::SameSetCross => "SAME_SET_CROSS",
            ViolationCode::Overlap => "OVERLAP",
            ViolationCode::VertexOnEdge => "VERTEX_ON_EDGE",
            ViolationCode::VertexCoincident => "VERTEX_COINCIDENT",
            ViolationCode::RacViolation => "RAC_VIOLATION",
            ViolationCode::WidthExceeded => "WIDTH_EXCEEDED",
            ViolationCode::HeightExceeded => "HEIGHT_EXCEEDED",
            ViolationCode::Structural => "STRUCTURAL",
            ViolationCode::Containment => "CONTAINMENT",
            ViolationCode::ExtraCrossing => "EXTRA_CROSSING",
            ViolationCode::MissingCrossing => "MISSING_CROSSING",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    /// Involved segments as endpoint pairs.
    pub edges: Vec<[Node; 2]>,
    /// Involved points.
    pub nodes: Vec<Node>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<[f64; 2]>,
    /// Measured quantity: crossing angle in degrees, dot product, or extent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<f64>,
}

impl Violation {
    fn new(code: ViolationCode) -> Self {
        Self { code, edges: Vec::new(), nodes: Vec::new(), location: None, measured: None }
    }

    fn edge(mut self, e: [Node; 2]) -> Self {
        self.edges.push(e);
        self
    }

    fn node(mut self, n: Node) -> Self {
        self.nodes.push(n);
        self
    }

    fn at(mut self, p: Point<f64>) -> Self {
        self.location = Some([p.x, p.y]);
        self
    }

    fn measured(mut self, m: f64) -> Self {
        self.measured = Some(m);
        self
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)?;
        for e in &self.edges {
            write!(f, " ({},{})", e[0], e[1])?;
        }
        for n in &self.nodes {
            write!(f, " {n}")?;
        }
        if let Some([x, y]) = self.location {
            write!(f, " at ({x}, {y})")?;
        }
        if let Some(m) = self.measured {
            write!(f, " measured {m}")?;
        }
        Ok(())
    }
}

/// Which checks [`verify_all`] runs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Profile {
    pub tol: Tolerance,
    pub planarity: bool,
    pub rac: bool,
    /// Maximum `(width, height)` in grid units, counting both end columns/rows.
    pub grid_bound: Option<(i64, i64)>,
    /// Role-based axis checks. Only drawings that carry edge roles are affected.
    pub structural: bool,
    pub containment: bool,
}

impl Default for Profile {
    fn default() -> Self {
        Self { tol: Tolerance::default(), planarity: true, rac: true, grid_bound: None, structural: true, containment: true }
    }
}

impl Profile {
    pub fn with_grid_bound(mut self, w: i64, h: i64) -> Self {
        self.grid_bound = Some((w, h));
        self
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub points: usize,
    pub segments: usize,
    pub crossings: usize,
    /// Violation count per code.
    pub counts: BTreeMap<String, usize>,
    /// Whether the crossing graph is two-colourable. Informational only.
    pub crossing_graph_bipartite: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub mode: CoordMode,
    pub violations: Vec<Violation>,
    pub summary: Summary,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, code: ViolationCode) -> usize {
        self.violations.iter().filter(|v| v.code == code).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug)]
struct SceneSeg<T> {
    a: usize,
    b: usize,
    set: u8,
    seg: Segment<T>,
}

/// Points and labelled segments, flattened from either drawing type.
struct Scene<T> {
    nodes: Vec<(Node, Point<T>)>,
    segs: Vec<SceneSeg<T>>,
}

impl<T: Scalar> Scene<T> {
    fn label(&self, s: &SceneSeg<T>) -> [Node; 2] {
        let (x, y) = (self.nodes[s.a].0, self.nodes[s.b].0);
        if x <= y {
            [x, y]
        } else {
            [y, x]
        }
    }

    fn from_drawing(d: &Drawing<T>) -> Self {
        let nodes = d.positions.iter().enumerate().map(|(i, p)| (Node::Vertex(VertexId::from_index(i)), *p)).collect();
        let mut segs = Vec::new();
        for (set, list) in [(0u8, &d.edges_a), (1u8, &d.edges_b)] {
            for e in list.iter() {
                segs.push(SceneSeg { a: e.u.index(), b: e.v.index(), set, seg: d.segment(e) });
            }
        }
        Self { nodes, segs }
    }

    fn from_dual(d: &DualDrawing<T>) -> Self {
        let n = d.positions.len();
        let mut nodes: Vec<(Node, Point<T>)> =
            d.positions.iter().enumerate().map(|(i, p)| (Node::Vertex(VertexId::from_index(i)), *p)).collect();
        nodes.extend(d.face_points.iter().enumerate().map(|(f, p)| (Node::Face(f), *p)));
        let mut segs: Vec<SceneSeg<T>> = d
            .edges
            .iter()
            .map(|e| SceneSeg { a: e.u.index(), b: e.v.index(), set: 0, seg: d.primal_segment(e) })
            .collect();
        for (i, de) in d.dual.adjacency.iter().enumerate() {
            segs.push(SceneSeg { a: n + de.a, b: n + de.b, set: 1, seg: d.dual_segment(i) });
        }
        Self { nodes, segs }
    }
}

fn boxes_apart<T: Scalar>(s: &Segment<T>, t: &Segment<T>, slack: f64) -> bool {
    let lo = |a: T, b: T| if a < b { a } else { b };
    let hi = |a: T, b: T| if a < b { b } else { a };
    if T::is_exact() {
        hi(s.a.x, s.b.x) < lo(t.a.x, t.b.x)
            || hi(t.a.x, t.b.x) < lo(s.a.x, s.b.x)
            || hi(s.a.y, s.b.y) < lo(t.a.y, t.b.y)
            || hi(t.a.y, t.b.y) < lo(s.a.y, s.b.y)
    } else {
        let f = |v: T| v.as_f64();
        f(hi(s.a.x, s.b.x)) + slack < f(lo(t.a.x, t.b.x))
            || f(hi(t.a.x, t.b.x)) + slack < f(lo(s.a.x, s.b.x))
            || f(hi(s.a.y, s.b.y)) + slack < f(lo(t.a.y, t.b.y))
            || f(hi(t.a.y, t.b.y)) + slack < f(lo(s.a.y, s.b.y))
    }
}

/// One proper crossing found by the pairwise scan.
#[derive(Clone, Copy, Debug)]
struct Crossing {
    i: usize,
    j: usize,
    at: Point<f64>,
}

struct PairScan {
    violations: Vec<Violation>,
    crossings: Vec<Crossing>,
}

fn scan_pairs<T: Scalar>(scene: &Scene<T>, tol: &Tolerance, planarity: bool, rac: bool) -> Result<PairScan> {
    let mut violations = Vec::new();
    let mut crossings = Vec::new();
    let slack = if T::is_exact() { 0.0 } else { tol.incidence };
    let segs = &scene.segs;
    for i in 0..segs.len() {
        let s = &segs[i];
        for (j, t) in segs.iter().enumerate().skip(i + 1) {
            if boxes_apart(&s.seg, &t.seg, slack) {
                continue;
            }
            let shares = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
            if geom::overlaps(&s.seg, &t.seg, tol) {
                if planarity {
                    violations.push(Violation::new(ViolationCode::Overlap).edge(scene.label(s)).edge(scene.label(t)));
                }
                continue;
            }
            if shares {
                continue;
            }
            let Some(at) = geom::proper_crossing(&s.seg, &t.seg, tol) else { continue };
            crossings.push(Crossing { i, j, at });
            if s.set == t.set {
                if planarity {
                    violations.push(
                        Violation::new(ViolationCode::SameSetCross).edge(scene.label(s)).edge(scene.label(t)).at(at),
                    );
                }
            } else if rac && !geom::is_right_angle(&s.seg, &t.seg, tol)? {
                let measured = if T::is_exact() {
                    T::wide_to_f64(geom::direction_dot(&s.seg, &t.seg))
                } else {
                    geom::crossing_angle(&s.seg, &t.seg).to_degrees()
                };
                violations.push(
                    Violation::new(ViolationCode::RacViolation)
                        .edge(scene.label(s))
                        .edge(scene.label(t))
                        .at(at)
                        .measured(measured),
                );
            }
        }
    }
    Ok(PairScan { violations, crossings })
}

fn scan_points<T: Scalar>(scene: &Scene<T>, tol: &Tolerance) -> Vec<Violation> {
    let mut out = Vec::new();
    let close = |p: Point<T>, q: Point<T>| if T::is_exact() { p == q } else { p.dist_f64(q) <= tol.incidence };
    for i in 0..scene.nodes.len() {
        for j in i + 1..scene.nodes.len() {
            let (ni, pi) = scene.nodes[i];
            let (nj, pj) = scene.nodes[j];
            if close(pi, pj) {
                out.push(Violation::new(ViolationCode::VertexCoincident).node(ni).node(nj).at(pi.to_f64()));
            }
        }
    }
    for (k, &(node, p)) in scene.nodes.iter().enumerate() {
        for s in &scene.segs {
            if s.a == k || s.b == k {
                continue;
            }
            if close(p, s.seg.a) || close(p, s.seg.b) {
                // reported as coincident
                continue;
            }
            if geom::point_in_segment_interior(p, &s.seg, tol) {
                out.push(Violation::new(ViolationCode::VertexOnEdge).edge(scene.label(s)).node(node).at(p.to_f64()));
            }
        }
    }
    out
}

fn bipartite(nsegs: usize, crossings: &[Crossing]) -> bool {
    let mut adj = vec![Vec::new(); nsegs];
    for c in crossings {
        adj[c.i].push(c.j);
        adj[c.j].push(c.i);
    }
    let mut color = vec![u8::MAX; nsegs];
    for s in 0..nsegs {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    q.push_back(y);
                } else if color[y] == color[x] {
                    return false;
                }
            }
        }
    }
    true
}

fn finish(mode: CoordMode, scene_points: usize, scene_segs: usize, crossings: usize, bip: bool, mut v: Vec<Violation>) -> Report {
    v.sort_by(|a, b| {
        a.code
            .cmp(&b.code)
            .then_with(|| a.edges.cmp(&b.edges))
            .then_with(|| a.nodes.cmp(&b.nodes))
            .then_with(|| a.location.partial_cmp(&b.location).unwrap_or(std::cmp::Ordering::Equal))
    });
    let mut counts = BTreeMap::new();
    for x in &v {
        *counts.entry(x.code.as_str().to_string()).or_insert(0) += 1;
    }
    Report {
        mode,
        violations: v,
        summary: Summary {
            points: scene_points,
            segments: scene_segs,
            crossings,
            counts,
            crossing_graph_bipartite: bip,
        },
    }
}

/// Same-set crossings, overlaps, coincident points and points on
/// non-incident edges.
pub fn check_simultaneous_planarity<T: Scalar>(d: &Drawing<T>, tol: &Tolerance) -> Result<Vec<Violation>> {
    d.check_references()?;
    let scene = Scene::from_drawing(d);
    let mut v = scan_pairs(&scene, tol, true, false)?.violations;
    v.extend(scan_points(&scene, tol));
    Ok(v)
}

/// Every crossing between the two edge sets must be a right angle.
pub fn check_rac_angles<T: Scalar>(d: &Drawing<T>, tol: &Tolerance) -> Result<Vec<Violation>> {
    d.check_references()?;
    Ok(scan_pairs(&Scene::from_drawing(d), tol, false, true)?.violations)
}

/// The bounding box must span at most `w` columns and `h` rows.
pub fn check_grid_bounds<T: Scalar>(d: &Drawing<T>, w: i64, h: i64) -> Result<Vec<Violation>> {
    if T::MODE != CoordMode::Grid {
        return Err(Error::usage("grid bounds apply to grid-mode drawings only"));
    }
    let mut out = Vec::new();
    if let Some((lo, hi)) = d.bounding_box() {
        let width = (hi.x - lo.x).as_f64() + 1.0;
        let height = (hi.y - lo.y).as_f64() + 1.0;
        if width > w as f64 {
            out.push(Violation::new(ViolationCode::WidthExceeded).measured(width));
        }
        if height > h as f64 {
            out.push(Violation::new(ViolationCode::HeightExceeded).measured(height));
        }
    }
    Ok(out)
}

fn is_horizontal<T: Scalar>(s: &Segment<T>) -> bool {
    s.is_horizontal()
}

fn is_vertical<T: Scalar>(s: &Segment<T>) -> bool {
    s.is_vertical()
}

/// Role-based shape rules for path and cycle layouts: matching edges are
/// horizontal, even path edges vertical, every crossing is horizontal against
/// vertical, and any other edge with a crossing must itself be axis-parallel.
/// The closing edge of a cycle and edges moved by the closing step must be
/// uncrossed.
pub fn check_structural<T: Scalar>(d: &Drawing<T>, tol: &Tolerance) -> Result<Vec<Violation>> {
    d.check_references()?;
    let mut out = Vec::new();
    if d.roles.is_empty() {
        return Ok(out);
    }
    let scene = Scene::from_drawing(d);
    let all: Vec<Edge> = d.edges_a.iter().chain(&d.edges_b).copied().collect();
    let mut crossed = vec![false; all.len()];
    let scan = scan_pairs(&scene, tol, false, false)?;
    for c in &scan.crossings {
        crossed[c.i] = true;
        crossed[c.j] = true;
        let (s, t) = (&scene.segs[c.i].seg, &scene.segs[c.j].seg);
        let hv = (is_horizontal(s) && is_vertical(t)) || (is_vertical(s) && is_horizontal(t));
        if !hv {
            out.push(
                Violation::new(ViolationCode::Structural)
                    .edge(scene.label(&scene.segs[c.i]))
                    .edge(scene.label(&scene.segs[c.j]))
                    .at(c.at),
            );
        }
    }
    for (k, e) in all.iter().enumerate() {
        let s = d.segment(e);
        let ok = match d.roles.get(e) {
            Some(EdgeRole::Matching) => is_horizontal(&s),
            Some(EdgeRole::PathEven) => is_vertical(&s),
            Some(EdgeRole::Closing) => !crossed[k] || is_horizontal(&s) || is_vertical(&s),
            Some(EdgeRole::PathOdd) | Some(EdgeRole::Staircase) | None => true,
        };
        if !ok {
            out.push(Violation::new(ViolationCode::Structural).edge(scene.label(&scene.segs[k])));
        }
    }
    Ok(out)
}

/// Face points strictly inside their faces; every dual edge crosses its
/// shared primal edge and no other primal edge.
pub fn check_dual_containment<T: Scalar>(d: &DualDrawing<T>, tol: &Tolerance) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    for (f, face) in d.dual.faces.iter().enumerate() {
        let poly = d.face_polygon(f);
        let p = d.face_points[f];
        if !geom::point_in_polygon(p, &poly, tol)? {
            out.push(Violation::new(ViolationCode::Containment).node(Node::Face(f)).at(p.to_f64()));
            continue;
        }
        let margin = face.edges().iter().map(|e| geom::distance_to_segment(p, &d.primal_segment(e))).fold(f64::INFINITY, f64::min);
        if !T::is_exact() && margin <= tol.incidence {
            out.push(Violation::new(ViolationCode::Containment).node(Node::Face(f)).at(p.to_f64()).measured(margin));
        }
    }
    for (i, de) in d.dual.adjacency.iter().enumerate() {
        let ds = d.dual_segment(i);
        let label = [Node::Face(de.a), Node::Face(de.b)];
        let mut hit_shared = false;
        for e in &d.edges {
            let ps = d.primal_segment(e);
            if let Some(at) = geom::proper_crossing(&ds, &ps, tol) {
                if *e == de.shared {
                    hit_shared = true;
                } else {
                    out.push(
                        Violation::new(ViolationCode::ExtraCrossing)
                            .edge(label)
                            .edge([Node::Vertex(e.u), Node::Vertex(e.v)])
                            .at(at),
                    );
                }
            }
        }
        if !hit_shared {
            out.push(
                Violation::new(ViolationCode::MissingCrossing)
                    .edge(label)
                    .edge([Node::Vertex(de.shared.u), Node::Vertex(de.shared.v)]),
            );
        }
    }
    Ok(out)
}

/// `m ≤ 4n − 10`, the edge bound of graphs with a right-angle-crossing drawing.
pub fn check_rac_size(n: usize, m: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::usage(format!("the edge bound is stated for n >= 3, got n = {n}")));
    }
    Ok(m + 10 <= 4 * n)
}

/// Something [`verify_all`] can check.
pub trait Verifiable {
    fn verify(&self, profile: &Profile) -> Result<Report>;
}

impl<T: Scalar> Verifiable for Drawing<T> {
    fn verify(&self, profile: &Profile) -> Result<Report> {
        if self.positions.is_empty() {
            return Err(Error::usage("empty drawing"));
        }
        self.check_references()?;
        let tol = &profile.tol;
        let scene = Scene::from_drawing(self);
        let scan = scan_pairs(&scene, tol, profile.planarity, profile.rac)?;
        let mut v = scan.violations;
        if profile.planarity {
            v.extend(scan_points(&scene, tol));
        }
        if let Some((w, h)) = profile.grid_bound {
            v.extend(check_grid_bounds(self, w, h)?);
        }
        if profile.structural {
            v.extend(check_structural(self, tol)?);
        }
        let bip = bipartite(scene.segs.len(), &scan.crossings);
        Ok(finish(T::MODE, scene.nodes.len(), scene.segs.len(), scan.crossings.len(), bip, v))
    }
}

impl<T: Scalar> Verifiable for DualDrawing<T> {
    fn verify(&self, profile: &Profile) -> Result<Report> {
        if self.positions.is_empty() {
            return Err(Error::usage("empty drawing"));
        }
        if self.face_points.len() != self.dual.faces.len() {
            return Err(Error::usage("face point count differs from face count"));
        }
        let tol = &profile.tol;
        let scene = Scene::from_dual(self);
        let scan = scan_pairs(&scene, tol, profile.planarity, profile.rac)?;
        let mut v = scan.violations;
        if profile.planarity {
            v.extend(scan_points(&scene, tol));
        }
        if profile.grid_bound.is_some() {
            return Err(Error::usage("grid bounds apply to path and cycle drawings only"));
        }
        if profile.containment {
            v.extend(check_dual_containment(self, tol)?);
        }
        let bip = bipartite(scene.segs.len(), &scan.crossings);
        Ok(finish(T::MODE, scene.nodes.len(), scene.segs.len(), scan.crossings.len(), bip, v))
    }
}

/// Runs every check enabled in `profile`. Violations are sorted by code,
/// then by the involved edges.
pub fn verify_all<D: Verifiable + ?Sized>(d: &D, profile: &Profile) -> Result<Report> {
    d.verify(profile)
}
