use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Edge, VertexId};
use crate::error::{Error, Result};

/// A biconnected outerplanar graph given by its outer cycle and chords.
///
/// `outer` must list every vertex `1..=n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplaneEmbedding {
    pub outer: Vec<VertexId>,
    pub chords: Vec<Edge>,
}

impl OuterplaneEmbedding {
    pub fn new(outer: &[u32], chords: &[(u32, u32)]) -> Self {
        Self { outer: outer.iter().map(|&v| VertexId(v)).collect(), chords: super::edges(chords) }
    }

    /// The polygon `[1..n]` with the given chords.
    pub fn polygon(n: usize, chords: &[(u32, u32)]) -> Self {
        Self::new(&(1..=n as u32).collect::<Vec<_>>(), chords)
    }

    pub fn n(&self) -> usize {
        self.outer.len()
    }

    pub fn outer_edges(&self) -> Vec<Edge> {
        let k = self.outer.len();
        (0..k).map(|i| Edge::from_ids(self.outer[i], self.outer[(i + 1) % k])).collect()
    }

    /// Outer edges followed by chords.
    pub fn all_edges(&self) -> Vec<Edge> {
        let mut e = self.outer_edges();
        e.extend(self.chords.iter().copied());
        e
    }

    /// Outer position of every vertex, by vertex index.
    fn positions(&self) -> Result<Vec<usize>> {
        let n = self.outer.len();
        if n < 3 {
            return Err(Error::domain(format!("outer cycle has {n} vertices; at least 3 are required")));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, v) in self.outer.iter().enumerate() {
            if v.0 == 0 || v.index() >= n {
                return Err(Error::domain(format!("vertex {v} outside 1..={n}")));
            }
            if pos[v.index()] != usize::MAX {
                return Err(Error::domain(format!("vertex {v} repeats on the outer cycle; graph is not biconnected")));
            }
            pos[v.index()] = i;
        }
        Ok(pos)
    }

    /// Chords as sorted position intervals `(i, j)`, `i < j`.
    fn chord_intervals(&self, pos: &[usize]) -> Result<Vec<(usize, usize)>> {
        let n = self.outer.len();
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(self.chords.len());
        for c in &self.chords {
            if c.u.0 == 0 || c.v.index() >= n || c.is_loop() {
                return Err(Error::domain(format!("chord {c} is not a pair of distinct outer vertices")));
            }
            let (a, b) = (pos[c.u.index()], pos[c.v.index()]);
            let (i, j) = (a.min(b), a.max(b));
            if j - i < 2 || (i == 0 && j == n - 1) {
                return Err(Error::domain(format!("chord {c} joins adjacent outer vertices")));
            }
            if !seen.insert((i, j)) {
                return Err(Error::domain(format!("duplicate chord {c}")));
            }
            out.push((i, j));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        Ok(out)
    }

    /// Checks the embedding invariants.
    pub fn validate(&self) -> Result<()> {
        compute_faces_and_dual(self).map(|_| ())
    }
}

/// An internal face: vertices in outer-cycle order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<VertexId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        (0..k).map(|i| Edge::from_ids(self.vertices[i], self.vertices[(i + 1) % k])).collect()
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.edges().contains(e)
    }
}

/// Weak-dual tree edge between faces `a < b` through the chord `shared`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    pub shared: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualStructure {
    pub faces: Vec<Face>,
    pub adjacency: Vec<DualEdge>,
}

impl DualStructure {
    /// Neighbours of face `f` with the shared chord.
    pub fn neighbours(&self, f: usize) -> Vec<(usize, Edge)> {
        self.adjacency
            .iter()
            .filter_map(|d| {
                if d.a == f {
                    Some((d.b, d.shared))
                } else if d.b == f {
                    Some((d.a, d.shared))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adjacency.iter().filter(|d| d.a == f || d.b == f).count()
    }
}

/// Enumerates the internal faces and the weak-dual tree.
///
/// Faces are sorted lexicographically by the outer positions of their
/// vertices; dual edges are sorted by face indices.
pub fn compute_faces_and_dual(emb: &OuterplaneEmbedding) -> Result<DualStructure> {
    let n = emb.outer.len();
    let pos = emb.positions()?;
    let chords = emb.chord_intervals(&pos)?;

    // Chords plus the root interval form a laminar family; a stack walk finds
    // each interval's parent and rejects interleaving pairs.
    let mut intervals = vec![(0usize, n - 1)];
    intervals.extend(chords.iter().copied());
    let mut parent = vec![usize::MAX; intervals.len()];
    let mut stack: Vec<usize> = vec![0];
    for idx in 1..intervals.len() {
        let (i, j) = intervals[idx];
        while let Some(&top) = stack.last() {
            let (ti, tj) = intervals[top];
            if ti <= i && j <= tj {
                break;
            }
            if i < tj && tj < j {
                let (a, b) = (emb.outer[ti], emb.outer[tj]);
                let (c, d) = (emb.outer[i], emb.outer[j]);
                return Err(Error::domain(format!(
                    "chords {} and {} cross",
                    Edge::from_ids(a, b),
                    Edge::from_ids(c, d)
                )));
            }
            stack.pop();
        }
        parent[idx] = *stack.last().expect("root interval stays on the stack");
        stack.push(idx);
    }

    let mut inside = vec![vec![false; n]; intervals.len()];
    for idx in 1..intervals.len() {
        let (i, j) = intervals[idx];
        for slot in inside[parent[idx]].iter_mut().take(j).skip(i + 1) {
            *slot = true;
        }
    }
    let mut raw: Vec<(Vec<usize>, usize)> = Vec::with_capacity(intervals.len());
    for (idx, &(i, j)) in intervals.iter().enumerate() {
        let verts: Vec<usize> = (i..=j).filter(|&p| !inside[idx][p]).collect();
        raw.push((verts, idx));
    }
    raw.sort();
    let mut face_of = vec![0usize; intervals.len()];
    for (f, (_, idx)) in raw.iter().enumerate() {
        face_of[*idx] = f;
    }
    let faces: Vec<Face> =
        raw.iter().map(|(ps, _)| Face { vertices: ps.iter().map(|&p| emb.outer[p]).collect() }).collect();
    let mut adjacency: Vec<DualEdge> = (1..intervals.len())
        .map(|idx| {
            let (x, y) = (face_of[idx], face_of[parent[idx]]);
            let (i, j) = intervals[idx];
            DualEdge { a: x.min(y), b: x.max(y), shared: Edge::from_ids(emb.outer[i], emb.outer[j]) }
        })
        .collect();
    adjacency.sort();
    Ok(DualStructure { faces, adjacency })
}
