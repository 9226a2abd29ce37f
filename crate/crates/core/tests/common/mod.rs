//! Brute-force reference checker shared by the integration suites.
//!
//! Works on exact rationals and intersects carrier lines parametrically,
//! unlike the library verifier, which uses orientation signs.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::Ratio;
use simrac::model::Edge;
use simrac::verify::{Node, Report, ViolationCode};
use simrac::Drawing;

type Q = Ratio<i128>;

fn q(x: i64) -> Q {
    Q::from_integer(x as i128)
}

#[derive(Clone, Copy)]
struct Seg {
    a: usize,
    b: usize,
    set: u8,
    p: (Q, Q),
    r: (Q, Q),
}

fn cross(u: (Q, Q), v: (Q, Q)) -> Q {
    u.0 * v.1 - u.1 * v.0
}

fn sub(u: (Q, Q), v: (Q, Q)) -> (Q, Q) {
    (u.0 - v.0, u.1 - v.1)
}

fn dot(u: (Q, Q), v: (Q, Q)) -> Q {
    u.0 * v.0 + u.1 * v.1
}

fn is_point(s: &Seg) -> bool {
    s.p == s.r
}

/// Parameter of `x` along `s` when `x` is on the carrier line.
fn param(s: &Seg, x: (Q, Q)) -> Option<Q> {
    let d = sub(s.r, s.p);
    let w = sub(x, s.p);
    if cross(d, w) != q(0) {
        return None;
    }
    Some(dot(w, d) / dot(d, d))
}

fn overlap(s: &Seg, t: &Seg) -> bool {
    if is_point(s) || is_point(t) {
        return false;
    }
    match (param(s, t.p), param(s, t.r)) {
        (Some(u), Some(v)) => {
            let lo = u.min(v).max(q(0));
            let hi = u.max(v).min(q(1));
            lo < hi
        }
        _ => false,
    }
}

/// Interiors meet in one point that is interior to both.
fn proper(s: &Seg, t: &Seg) -> bool {
    if is_point(s) || is_point(t) {
        return false;
    }
    let d1 = sub(s.r, s.p);
    let d2 = sub(t.r, t.p);
    let den = cross(d1, d2);
    if den == q(0) {
        return false;
    }
    let w = sub(t.p, s.p);
    let u = cross(w, d2) / den;
    let v = cross(w, d1) / den;
    u > q(0) && u < q(1) && v > q(0) && v < q(1)
}

fn in_interior(x: (Q, Q), s: &Seg) -> bool {
    !is_point(s) && matches!(param(s, x), Some(t) if t > q(0) && t < q(1))
}

pub type Finding = (ViolationCode, Vec<Node>);

fn vnode(i: usize) -> Node {
    Node::Vertex(simrac::VertexId::from_index(i))
}

fn pair(x: usize, y: usize) -> Vec<Node> {
    let mut v = vec![vnode(x), vnode(y)];
    v.sort();
    v
}

/// Every geometric violation of a grid drawing: crossings within a set,
/// overlaps, non-perpendicular crossings between sets, coincident vertices
/// and vertices inside non-incident edges.
pub fn oracle(d: &Drawing<i64>) -> BTreeSet<Finding> {
    let pts: Vec<(Q, Q)> = d.positions.iter().map(|p| (q(p.x), q(p.y))).collect();
    let mut segs = Vec::new();
    for (set, list) in [(0u8, &d.edges_a), (1u8, &d.edges_b)] {
        for e in list.iter() {
            segs.push(Seg { a: e.u.index(), b: e.v.index(), set, p: pts[e.u.index()], r: pts[e.v.index()] });
        }
    }
    let mut out = BTreeSet::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (s, t) = (&segs[i], &segs[j]);
            let mut nodes = pair(s.a, s.b);
            nodes.extend(pair(t.a, t.b));
            if overlap(s, t) {
                out.insert((ViolationCode::Overlap, nodes));
                continue;
            }
            let shares = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
            if shares || !proper(s, t) {
                continue;
            }
            if s.set == t.set {
                out.insert((ViolationCode::SameSetCross, nodes));
            } else if dot(sub(s.r, s.p), sub(t.r, t.p)) != q(0) {
                out.insert((ViolationCode::RacViolation, nodes));
            }
        }
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i] == pts[j] {
                out.insert((ViolationCode::VertexCoincident, vec![vnode(i), vnode(j)]));
            }
        }
        for s in &segs {
            if s.a != i && s.b != i && pts[i] != s.p && pts[i] != s.r && in_interior(pts[i], s) {
                let mut nodes = pair(s.a, s.b);
                nodes.push(vnode(i));
                out.insert((ViolationCode::VertexOnEdge, nodes));
            }
        }
    }
    out
}

/// The verifier's findings in the oracle's shape. Edge pairs are put in
/// segment order, since the verifier sorts them by label.
pub fn findings(r: &Report) -> BTreeSet<Finding> {
    r.violations
        .iter()
        .filter(|v| !matches!(v.code, ViolationCode::Structural | ViolationCode::WidthExceeded | ViolationCode::HeightExceeded))
        .map(|v| {
            let mut nodes = Vec::new();
            let mut edges: Vec<Vec<Node>> = v.edges.iter().map(|e| {
                let mut p = vec![e[0], e[1]];
                p.sort();
                p
            }).collect();
            if edges.len() == 2 {
                edges.sort();
            }
            for e in edges {
                nodes.extend(e);
            }
            nodes.extend(v.nodes.iter().copied());
            (v.code, nodes)
        })
        .collect()
}

/// Oracle findings with both edge pairs in a canonical order.
pub fn canonical(set: BTreeSet<Finding>) -> BTreeSet<Finding> {
    set.into_iter()
        .map(|(code, nodes)| {
            if matches!(code, ViolationCode::Overlap | ViolationCode::SameSetCross | ViolationCode::RacViolation) {
                let mut halves = [nodes[..2].to_vec(), nodes[2..].to_vec()];
                halves.sort();
                (code, halves.concat())
            } else {
                (code, nodes)
            }
        })
        .collect()
}

pub fn edge_set(list: &[Edge]) -> BTreeSet<Edge> {
    list.iter().copied().collect()
}
