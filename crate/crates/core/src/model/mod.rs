//! Graph data model: simultaneous instances, alternating cycle collections,
//! outerplane embeddings and their weak duals.

mod fixture;
mod outerplanar;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fixture::{fixture_augmented_triangle_antiprism, ANTIPRISM_GRAY_CYCLE, ANTIPRISM_HUB, ANTIPRISM_RIM};
pub use outerplanar::{compute_faces_and_dual, DualEdge, DualStructure, Face, OuterplaneEmbedding};

/// A 1-based vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(i: usize) -> Self {
        VertexId(i as u32 + 1)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge stored with `u < v`. Self-loops are representable so
/// that validation can report them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(a: u32, b: u32) -> Self {
        Self::from_ids(VertexId(a), VertexId(b))
    }

    pub fn from_ids(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            Self { u: a, v: b }
        } else {
            Self { u: b, v: a }
        }
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn shares_endpoint(&self, e: &Edge) -> bool {
        self.contains(e.u) || self.contains(e.v)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u.0, self.v.0].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[u32; 2]>::deserialize(d)?;
        Ok(Edge::new(a, b))
    }
}

pub fn edges(pairs: &[(u32, u32)]) -> Vec<Edge> {
    pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    PathMatching,
    CycleMatching,
    General,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::PathMatching => "path-matching",
            InstanceKind::CycleMatching => "cycle-matching",
            InstanceKind::General => "general",
        }
    }
}

/// Two edge-disjoint graphs on the vertex set `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimInstance {
    pub n: usize,
    pub edges_a: Vec<Edge>,
    pub edges_b: Vec<Edge>,
    pub kind: InstanceKind,
}

impl SimInstance {
    /// The path `1-2-…-n` with matching `m`.
    pub fn path_matching(n: usize, m: &[(u32, u32)]) -> Self {
        Self { n, edges_a: path_edges(n), edges_b: edges(m), kind: InstanceKind::PathMatching }
    }

    /// The cycle `1-2-…-n-1` with matching `m`.
    pub fn cycle_matching(n: usize, m: &[(u32, u32)]) -> Self {
        Self { n, edges_a: cycle_edges(n), edges_b: edges(m), kind: InstanceKind::CycleMatching }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n as u32).map(VertexId)
    }

    pub fn edge_count(&self) -> usize {
        self.edges_a.len() + self.edges_b.len()
    }

    /// Partner of each vertex in `edges_b`, by vertex index.
    pub fn mates(&self) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; self.n];
        for e in &self.edges_b {
            if e.u.index() < self.n && e.v.index() < self.n {
                mate[e.u.index()] = Some(e.v);
                mate[e.v.index()] = Some(e.u);
            }
        }
        mate
    }

    /// Canonical form: both edge lists sorted.
    pub fn canonical(mut self) -> Self {
        self.edges_a.sort();
        self.edges_b.sort();
        self
    }
}

pub fn path_edges(n: usize) -> Vec<Edge> {
    (1..n as u32).map(|i| Edge::new(i, i + 1)).collect()
}

pub fn cycle_edges(n: usize) -> Vec<Edge> {
    let mut e = path_edges(n);
    if n >= 3 {
        e.push(Edge::new(1, n as u32));
    }
    e
}

/// A broken instance invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceViolation {
    VertexOutOfRange { edge: Edge, n: usize },
    SelfLoop(Edge),
    DuplicateEdge(Edge),
    SharedEdge(Edge),
    MatchedTwice(VertexId),
    NotAPath,
    NotACycle,
}

impl fmt::Display for InstanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceViolation::VertexOutOfRange { edge, n } => write!(f, "edge {edge} leaves vertex range 1..={n}"),
            InstanceViolation::SelfLoop(e) => write!(f, "self-loop {e}"),
            InstanceViolation::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            InstanceViolation::SharedEdge(e) => write!(f, "shared edge {e}"),
            InstanceViolation::MatchedTwice(v) => write!(f, "vertex {v} matched twice"),
            InstanceViolation::NotAPath => write!(f, "edges_a is not the path 1-2-...-n"),
            InstanceViolation::NotACycle => write!(f, "edges_a is not the cycle 1-2-...-n-1"),
        }
    }
}

/// Lists every broken invariant of `inst` for its declared kind.
pub fn validate_instance(inst: &SimInstance) -> Vec<InstanceViolation> {
    let mut out = Vec::new();
    let mut sets: [BTreeSet<Edge>; 2] = Default::default();
    for (k, list) in [&inst.edges_a, &inst.edges_b].into_iter().enumerate() {
        for e in list {
            if e.u.0 == 0 || e.v.index() >= inst.n {
                out.push(InstanceViolation::VertexOutOfRange { edge: *e, n: inst.n });
            } else if e.is_loop() {
                out.push(InstanceViolation::SelfLoop(*e));
            } else if !sets[k].insert(*e) {
                out.push(InstanceViolation::DuplicateEdge(*e));
            }
        }
    }
    for e in sets[0].intersection(&sets[1]) {
        out.push(InstanceViolation::SharedEdge(*e));
    }
    match inst.kind {
        InstanceKind::General => {}
        InstanceKind::PathMatching | InstanceKind::CycleMatching => {
            let mut seen = BTreeMap::new();
            for e in &sets[1] {
                for x in [e.u, e.v] {
                    let c = seen.entry(x).or_insert(0usize);
                    *c += 1;
                    if *c == 2 {
                        out.push(InstanceViolation::MatchedTwice(x));
                    }
                }
            }
            let (expected, bad) = if inst.kind == InstanceKind::PathMatching {
                (path_edges(inst.n), InstanceViolation::NotAPath)
            } else {
                (cycle_edges(inst.n), InstanceViolation::NotACycle)
            };
            let expected: BTreeSet<Edge> = expected.into_iter().collect();
            let cycle_too_short = inst.kind == InstanceKind::CycleMatching && inst.n < 3;
            if expected != sets[0] || inst.edges_a.len() != expected.len() || cycle_too_short {
                out.push(bad);
            }
        }
    }
    out
}

/// `{(v_i, v_{i+1}) : i odd}`.
pub fn build_p_odd(n: usize) -> Vec<Edge> {
    (1..n as u32).step_by(2).map(|i| Edge::new(i, i + 1)).collect()
}

/// Which graph an edge of an alternating cycle comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    A,
    B,
}

/// An even cycle whose edges alternate between the matching (`B`) and the
/// alternate path edges (`A`). Stored from its minimum vertex with the
/// matching edge first, so `vertices[0]–vertices[1]` is a `B` edge and the
/// closing edge `last–vertices[0]` is an `A` edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingCycle {
    pub vertices: Vec<VertexId>,
}

impl AlternatingCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    /// Edges in traversal order with their labels.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (Edge, EdgeLabel)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| {
            let e = Edge::from_ids(self.vertices[i], self.vertices[(i + 1) % k]);
            (e, if i % 2 == 0 { EdgeLabel::B } else { EdgeLabel::A })
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCollection {
    pub cycles: Vec<AlternatingCycle>,
}

impl CycleCollection {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }
}

fn matching_map(edges: &[Edge], size: usize, what: &str, ops: &mut u64) -> Result<Vec<Option<VertexId>>> {
    let mut map = vec![None; size];
    for e in edges {
        *ops += 1;
        if e.is_loop() || e.u.0 == 0 {
            return Err(Error::domain(format!("edge {e} in {what} is not a pair of distinct vertices")));
        }
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            if map[x.index()].replace(y).is_some() {
                return Err(Error::domain(format!("vertex {x} has two {what} edges; union is not 2-regular")));
            }
        }
    }
    Ok(map)
}

/// Splits `p_odd ∪ m` into alternating cycles, ordered by first vertex.
pub fn decompose_alternating(p_odd: &[Edge], m: &[Edge]) -> Result<CycleCollection> {
    decompose_counted(p_odd, m, &mut 0)
}

/// [`decompose_alternating`] that adds one to `ops` per edge and vertex visit.
pub(crate) fn decompose_counted(p_odd: &[Edge], m: &[Edge], ops: &mut u64) -> Result<CycleCollection> {
    let size = p_odd.iter().chain(m).map(|e| e.v.0 as usize).max().unwrap_or(0);
    let pa = matching_map(p_odd, size, "p_odd", ops)?;
    let mb = matching_map(m, size, "matching", ops)?;
    for i in 0..size {
        *ops += 1;
        match (pa[i], mb[i]) {
            (None, None) => {}
            (Some(x), Some(y)) if x == y => {
                let e = Edge::from_ids(VertexId::from_index(i), x);
                return Err(Error::domain(format!("edge {e} is in both p_odd and the matching")));
            }
            (Some(_), Some(_)) => {}
            _ => {
                return Err(Error::domain(format!(
                    "vertex {} is not covered by both edge sets; union is not 2-regular",
                    VertexId::from_index(i)
                )))
            }
        }
    }
    let mut seen = vec![false; size];
    let mut cycles = Vec::new();
    for i in 0..size {
        if seen[i] || pa[i].is_none() {
            continue;
        }
        let start = VertexId::from_index(i);
        let mut verts = vec![start];
        seen[i] = true;
        let mut cur = mb[i].expect("checked above");
        let mut use_b = false;
        while cur != start {
            *ops += 1;
            if std::mem::replace(&mut seen[cur.index()], true) {
                return Err(Error::internal("alternating walk revisited a vertex"));
            }
            verts.push(cur);
            let next = if use_b { mb[cur.index()] } else { pa[cur.index()] };
            cur = next.expect("checked above");
            use_b = !use_b;
        }
        cycles.push(AlternatingCycle { vertices: verts });
    }
    Ok(CycleCollection { cycles })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[u32]) -> Vec<VertexId> {
        v.iter().map(|&x| VertexId(x)).collect()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_instance(&SimInstance::path_matching(4, &[(1, 3), (2, 4)])).is_empty());
        let v = validate_instance(&SimInstance::path_matching(4, &[(1, 2)]));
        assert_eq!(v, vec![InstanceViolation::SharedEdge(Edge::new(1, 2))]);
        assert_eq!(v[0].to_string(), "shared edge (1,2)");
        let v = validate_instance(&SimInstance::path_matching(4, &[(1, 3), (3, 4)]));
        assert!(v.contains(&InstanceViolation::MatchedTwice(VertexId(3))));
        assert!(v.iter().any(|x| x.to_string() == "vertex 3 matched twice"));
    }

    #[test]
    fn validate_rejects_wrong_backbone() {
        let mut inst = SimInstance::path_matching(4, &[]);
        inst.edges_a.pop();
        assert_eq!(validate_instance(&inst), vec![InstanceViolation::NotAPath]);
        let mut inst = SimInstance::cycle_matching(5, &[(1, 3)]);
        inst.kind = InstanceKind::PathMatching;
        assert_eq!(validate_instance(&inst), vec![InstanceViolation::NotAPath]);
        assert!(validate_instance(&SimInstance::cycle_matching(5, &[(1, 3)])).is_empty());
        let bad = SimInstance::path_matching(3, &[(1, 4)]);
        assert!(matches!(validate_instance(&bad)[0], InstanceViolation::VertexOutOfRange { .. }));
    }

    #[test]
    fn p_odd_examples() {
        assert_eq!(build_p_odd(6), edges(&[(1, 2), (3, 4), (5, 6)]));
        assert_eq!(build_p_odd(4), edges(&[(1, 2), (3, 4)]));
        assert_eq!(build_p_odd(5), edges(&[(1, 2), (3, 4)]));
    }

    #[test]
    fn decompose_starts_with_matching_edge() {
        let c = decompose_alternating(&build_p_odd(4), &edges(&[(1, 3), (2, 4)])).unwrap();
        assert_eq!(c.cycles, vec![AlternatingCycle { vertices: ids(&[1, 3, 4, 2]) }]);
        let c = decompose_alternating(&build_p_odd(4), &edges(&[(1, 4), (2, 3)])).unwrap();
        assert_eq!(c.cycles, vec![AlternatingCycle { vertices: ids(&[1, 4, 3, 2]) }]);
        let labels: Vec<_> = c.cycles[0].labeled_edges().map(|(_, l)| l).collect();
        assert_eq!(labels, vec![EdgeLabel::B, EdgeLabel::A, EdgeLabel::B, EdgeLabel::A]);
    }

    #[test]
    fn decompose_rejects_overlap() {
        let r = decompose_alternating(&build_p_odd(8), &edges(&[(1, 2), (3, 5), (4, 7), (6, 8)]));
        assert!(matches!(r, Err(Error::Domain(_))));
        let r = decompose_alternating(&build_p_odd(4), &edges(&[(1, 3)]));
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn edge_normalizes() {
        assert_eq!(Edge::new(4, 2), Edge::new(2, 4));
        assert_eq!(Edge::new(4, 2).other(VertexId(4)), VertexId(2));
        let json = serde_json::to_string(&Edge::new(3, 1)).unwrap();
        assert_eq!(json, "[1,3]");
    }
}
