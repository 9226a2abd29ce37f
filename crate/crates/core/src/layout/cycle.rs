//! Cycle plus matching on an `(n + 2) × (n + 2)` grid.
//!
//! The edge `(v_n, v_1)` is removed, the path is laid out, and the cycle is
//! closed by moving `v_1` down `d` units and `v_n` right `r` units. `v_1` is the
//! bottom-left vertex and `v_n` the unique rightmost one, so both moves only
//! stretch their edges into empty space; the smallest `(d, r)` whose closing
//! segment clears the drawing is taken.

use std::collections::BTreeMap;

use serde::Serialize;

use super::path::layout_path_matching;
use crate::drawing::{Drawing, EdgeRole};
use crate::error::{Error, Result};
use crate::geom::{self, Point, Segment};
use crate::model::{self, validate_instance, Edge, InstanceKind, SimInstance, VertexId};
use crate::scalar::Tolerance;
use crate::verify::{verify_all, Profile};

/// Units `v_1` moved down and `v_n` moved right.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Shift {
    pub d: i64,
    pub r: i64,
}

/// Lays out a cycle-matching instance on the integer grid.
pub fn layout_cycle_matching(inst: &SimInstance) -> Result<Drawing<i64>> {
    layout_cycle_matching_with_shift(inst).map(|(d, _)| d)
}

fn check_cycle_instance(inst: &SimInstance) -> Result<()> {
    if inst.kind != InstanceKind::CycleMatching {
        return Err(Error::usage(format!("expected a cycle-matching instance, got {}", inst.kind.as_str())));
    }
    let v = validate_instance(inst);
    if !v.is_empty() {
        let msg: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        return Err(Error::usage(format!("invalid instance: {}", msg.join("; "))));
    }
    Ok(())
}

/// First covered vertex whose cyclic predecessor is uncovered, or 1.
fn rotation_start(n: usize, mates: &[Option<VertexId>]) -> usize {
    (1..=n).find(|&c| mates[c - 1].is_some() && mates[(c + n - 2) % n].is_none()).unwrap_or(1)
}

/// [`layout_cycle_matching`] that also reports the closing shift.
pub fn layout_cycle_matching_with_shift(inst: &SimInstance) -> Result<(Drawing<i64>, Shift)> {
    check_cycle_instance(inst)?;
    let n = inst.n;
    if inst.edges_b.is_empty() {
        let positions = (1..=n as i64).map(|i| if i == 1 { Point::new(1, 1) } else { Point::new(i - 1, 2) }).collect();
        return Ok((Drawing::new(positions, inst.edges_a.clone(), Vec::new()), Shift::default()));
    }
    let perfect = 2 * inst.edges_b.len() == n;
    let start = rotation_start(n, &inst.mates());
    // original vertex v gets label ((v - start) mod n) + 1
    let label = |v: VertexId| VertexId(((v.get() as usize + n - start) % n + 1) as u32);
    let unlabel = |w: VertexId| VertexId(((w.get() as usize - 1 + start - 1) % n + 1) as u32);
    let m: Vec<Edge> = inst.edges_b.iter().map(|e| Edge::from_ids(label(e.u), label(e.v))).collect();
    let path = SimInstance { n, edges_a: model::path_edges(n), edges_b: m, kind: InstanceKind::PathMatching };
    let opened = layout_path_matching(&path)?;
    let (closed, shift) = close_cycle(&opened, perfect)?;

    let mut positions = vec![Point::new(0, 0); n];
    for (i, p) in closed.positions.iter().enumerate() {
        positions[unlabel(VertexId::from_index(i)).index()] = *p;
    }
    let map_edge = |e: &Edge| Edge::from_ids(unlabel(e.u), unlabel(e.v));
    let mut edges_a: Vec<Edge> = closed.edges_a.iter().map(map_edge).collect();
    let mut edges_b: Vec<Edge> = closed.edges_b.iter().map(map_edge).collect();
    edges_a.sort();
    edges_b.sort();
    let roles = closed.roles.iter().map(|(e, r)| (map_edge(e), *r)).collect();
    Ok((Drawing { positions, edges_a, edges_b, roles }, shift))
}

/// Closes a path drawing into a cycle. `v_1` must be the bottom-left vertex
/// and `v_n` the unique rightmost one.
fn close_cycle(opened: &Drawing<i64>, perfect: bool) -> Result<(Drawing<i64>, Shift)> {
    let n = opened.n();
    let tol = Tolerance::default();
    let (w, h) = opened.grid_extent();
    let (dmax, rmax) = if perfect { (n as i64 / 2 + 2, n as i64 / 2 + 1) } else { (h + 2, w + 1) };
    let first = VertexId(1);
    let last = VertexId(n as u32);
    let closing = Edge::from_ids(first, last);
    let p1 = opened.pos(first);
    let pn = opened.pos(last);

    // Segments and points the closing edge must avoid entirely.
    let mut obstacles: Vec<Segment<i64>> = opened
        .edges_a
        .iter()
        .chain(&opened.edges_b)
        .filter(|e| !e.contains(first) && !e.contains(last))
        .map(|e| opened.segment(e))
        .collect();
    let points: Vec<Point<i64>> = (2..n).map(|i| opened.positions[i - 1]).collect();
    let incident: Vec<(Edge, VertexId)> = opened
        .edges_a
        .iter()
        .chain(&opened.edges_b)
        .filter(|e| e.contains(first) || e.contains(last))
        .map(|e| (*e, if e.contains(first) { e.other(first) } else { e.other(last) }))
        .collect();

    for cost in 0..=dmax + rmax {
        for d in (cost - rmax).max(0)..=cost.min(dmax) {
            let r = cost - d;
            let q1 = p1 - Point::new(0, d);
            let qn = pn + Point::new(r, 0);
            let seg = Segment::raw(q1, qn);
            if let Some(k) = obstacles
                .iter()
                .position(|o| geom::overlaps(&seg, o, &tol) || geom::proper_crossing(&seg, o, &tol).is_some())
            {
                obstacles[..=k].rotate_right(1);
                continue;
            }
            if points.iter().any(|p| geom::point_on_segment(*p, &seg, &tol)) {
                continue;
            }
            let moved = |v: VertexId| if v == first { q1 } else if v == last { qn } else { opened.pos(v) };
            if incident.iter().any(|(e, _)| geom::overlaps(&seg, &Segment::raw(moved(e.u), moved(e.v)), &tol)) {
                continue;
            }
            let mut positions = opened.positions.clone();
            positions[0] = q1;
            positions[n - 1] = qn;
            let mut edges_a = opened.edges_a.clone();
            edges_a.push(closing);
            let mut roles: BTreeMap<Edge, EdgeRole> = opened.roles.clone();
            roles.insert(closing, EdgeRole::Closing);
            for (e, _) in &incident {
                let s = Segment::raw(moved(e.u), moved(e.v));
                let reshaped = match roles.get(e) {
                    Some(EdgeRole::Matching) => !s.is_horizontal(),
                    Some(EdgeRole::PathEven) => !s.is_vertical(),
                    _ => false,
                };
                if reshaped {
                    roles.insert(*e, EdgeRole::Closing);
                }
            }
            let mut d2 = Drawing { positions, edges_a, edges_b: opened.edges_b.clone(), roles };
            if verify_all(&d2, &Profile::default())?.is_ok() {
                d2.normalize_origin();
                return Ok((d2, Shift { d, r }));
            }
        }
    }
    Err(Error::internal(format!("no closing shift with d <= {dmax} and r <= {rmax}")))
}

/// Lays out `ham ∪ m` where `ham` is a Hamiltonian path or cycle on `1..=n`
/// and `m` a matching disjoint from it.
pub fn rac_layout_from_decomposition(n: usize, ham: &[Edge], m: &[Edge]) -> Result<Drawing<i64>> {
    if n < 2 {
        return Err(Error::usage("need at least two vertices"));
    }
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for e in ham {
        if e.u.get() == 0 || e.v.index() >= n || e.is_loop() {
            return Err(Error::usage(format!("edge {e} is not on vertices 1..={n}")));
        }
        adj[e.u.index()].push(e.v);
        adj[e.v.index()].push(e.u);
    }
    if adj.iter().any(|a| a.len() > 2) {
        return Err(Error::usage("ham has a vertex of degree above two"));
    }
    let is_cycle = ham.len() == n && n >= 3;
    if !is_cycle && ham.len() + 1 != n {
        return Err(Error::usage("ham is neither a Hamiltonian path nor a Hamiltonian cycle"));
    }
    let start = if is_cycle {
        VertexId(1)
    } else {
        match adj.iter().position(|a| a.len() == 1) {
            Some(i) => VertexId::from_index(i),
            None => return Err(Error::usage("ham path has no endpoint")),
        }
    };
    let mut order = vec![start];
    let mut prev: Option<VertexId> = None;
    let mut cur = start;
    while order.len() < n {
        let mut next: Vec<VertexId> = adj[cur.index()].iter().copied().filter(|&w| Some(w) != prev).collect();
        next.sort();
        let Some(&w) = next.first() else { break };
        if order.contains(&w) {
            break;
        }
        order.push(w);
        prev = Some(cur);
        cur = w;
    }
    if order.len() != n {
        return Err(Error::usage("ham is not Hamiltonian"));
    }
    let mut label = vec![VertexId(0); n];
    for (i, v) in order.iter().enumerate() {
        label[v.index()] = VertexId::from_index(i);
    }
    let relabel = |e: &Edge| Edge::from_ids(label[e.u.index()], label[e.v.index()]);
    let mut mm = Vec::with_capacity(m.len());
    for e in m {
        if e.u.get() == 0 || e.v.index() >= n {
            return Err(Error::usage(format!("matching edge {e} is not on vertices 1..={n}")));
        }
        mm.push(relabel(e));
    }
    let kind = if is_cycle { InstanceKind::CycleMatching } else { InstanceKind::PathMatching };
    let edges_a = if is_cycle { model::cycle_edges(n) } else { model::path_edges(n) };
    let inst = SimInstance { n, edges_a, edges_b: mm, kind };
    let d = if is_cycle { layout_cycle_matching(&inst)? } else { layout_path_matching(&inst)? };
    let unlabel = |e: &Edge| Edge::from_ids(order[e.u.index()], order[e.v.index()]);
    let mut positions = vec![Point::new(0, 0); n];
    for (i, p) in d.positions.iter().enumerate() {
        positions[order[i].index()] = *p;
    }
    Ok(Drawing {
        positions,
        edges_a: d.edges_a.iter().map(unlabel).collect(),
        edges_b: d.edges_b.iter().map(unlabel).collect(),
        roles: d.roles.iter().map(|(e, r)| (unlabel(e), *r)).collect(),
    })
}
