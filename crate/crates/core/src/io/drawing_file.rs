use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{schema, FormatError};
use crate::drawing::{Drawing, DualDrawing, EdgeRole};
use crate::geom::Point;
use crate::layout::Construction;
use crate::model::{DualEdge, DualStructure, Edge, Face, VertexId};
use crate::scalar::CoordMode;
use crate::verify::{verify_all, Profile, Report};

/// `x` with 17 significant digits, enough to read back the same `f64`.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn parse_real(s: &str) -> Result<f64, FormatError> {
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(schema(format!("{s:?} is not a finite decimal number"))),
    }
}

/// One coordinate pair: integers in grid mode, decimal strings in real mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Grid([i64; 2]),
    Real([String; 2]),
}

impl Coord {
    fn grid(&self) -> Result<Point<i64>, FormatError> {
        match self {
            Coord::Grid([x, y]) => Ok(Point::new(*x, *y)),
            Coord::Real(_) => Err(schema("decimal string coordinates in a grid drawing")),
        }
    }

    fn real(&self) -> Result<Point<f64>, FormatError> {
        match self {
            Coord::Real([x, y]) => Ok(Point::new(parse_real(x)?, parse_real(y)?)),
            Coord::Grid(_) => Err(schema("integer coordinates in a real drawing; write them as strings")),
        }
    }

    fn from_real(p: Point<f64>) -> Self {
        Coord::Real([format_real(p.x), format_real(p.y)])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoleEntry {
    pub edge: Edge,
    pub role: EdgeRole,
}

/// Weak dual of an outerplane drawing. Faces are numbered by position in
/// `faces`; `edges` pairs face numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualBlock {
    pub faces: Vec<Vec<u32>>,
    pub face_points: Vec<Coord>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub algorithm: String,
    pub version: String,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
}

impl Metadata {
    pub fn new(algorithm: impl Into<String>) -> Self {
        Self { algorithm: algorithm.into(), version: crate::VERSION.to_string(), seed: None, construction: None }
    }
}

/// A drawing as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub mode: CoordMode,
    /// Vertex id to `[x, y]`.
    pub positions: BTreeMap<u32, Coord>,
    pub edges_a: Vec<Edge>,
    pub edges_b: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub roles: Vec<RoleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualBlock>,
    pub metadata: Metadata,
}

/// A drawing file turned back into the in-memory types.
#[derive(Clone, Debug, PartialEq)]
pub enum LoadedDrawing {
    Grid(Drawing<i64>),
    Real(Drawing<f64>),
    Dual(DualDrawing<f64>),
}

impl LoadedDrawing {
    pub fn verify(&self, profile: &Profile) -> crate::Result<Report> {
        match self {
            LoadedDrawing::Grid(d) => verify_all(d, profile),
            LoadedDrawing::Real(d) => verify_all(d, profile),
            LoadedDrawing::Dual(d) => verify_all(d, profile),
        }
    }
}

fn roles_of(roles: &BTreeMap<Edge, EdgeRole>) -> Vec<RoleEntry> {
    roles.iter().map(|(&edge, &role)| RoleEntry { edge, role }).collect()
}

fn numbered<C>(items: impl IntoIterator<Item = C>) -> BTreeMap<u32, C> {
    items.into_iter().enumerate().map(|(i, c)| (i as u32 + 1, c)).collect()
}

impl DrawingFile {
    pub fn from_grid(d: &Drawing<i64>, metadata: Metadata) -> Self {
        Self {
            mode: CoordMode::Grid,
            positions: numbered(d.positions.iter().map(|p| Coord::Grid([p.x, p.y]))),
            edges_a: d.edges_a.clone(),
            edges_b: d.edges_b.clone(),
            roles: roles_of(&d.roles),
            dual: None,
            metadata,
        }
    }

    pub fn from_real(d: &Drawing<f64>, metadata: Metadata) -> Self {
        Self {
            mode: CoordMode::Real,
            positions: numbered(d.positions.iter().map(|&p| Coord::from_real(p))),
            edges_a: d.edges_a.clone(),
            edges_b: d.edges_b.clone(),
            roles: roles_of(&d.roles),
            dual: None,
            metadata,
        }
    }

    /// Primal edges go to `edges_a`; `edges_b` stays empty.
    pub fn from_dual(d: &DualDrawing<f64>, metadata: Metadata) -> Self {
        let dual = DualBlock {
            faces: d.dual.faces.iter().map(|f| f.vertices.iter().map(|v| v.get()).collect()).collect(),
            face_points: d.face_points.iter().map(|&p| Coord::from_real(p)).collect(),
            edges: d.dual.adjacency.iter().map(|e| [e.a, e.b]).collect(),
        };
        Self {
            mode: CoordMode::Real,
            positions: numbered(d.positions.iter().map(|&p| Coord::from_real(p))),
            edges_a: d.edges.clone(),
            edges_b: Vec::new(),
            roles: Vec::new(),
            dual: Some(dual),
            metadata,
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("drawing serializes");
        out.push('\n');
        out
    }

    fn check_vertex(&self, v: VertexId, what: &str) -> Result<(), FormatError> {
        if self.positions.contains_key(&v.get()) {
            Ok(())
        } else {
            Err(schema(format!("{what} references vertex {v}, which has no position")))
        }
    }

    /// Checks the references and the coordinate form, and builds the drawing.
    pub fn load(&self) -> Result<LoadedDrawing, FormatError> {
        let n = self.positions.len();
        if let Some((&last, _)) = self.positions.last_key_value() {
            if self.positions.first_key_value().map(|(&k, _)| k) != Some(1) || last as usize != n {
                return Err(schema(format!("positions must be given for vertices 1..={n} exactly")));
            }
        }
        for e in self.edges_a.iter().chain(&self.edges_b) {
            self.check_vertex(e.u, "an edge")?;
            self.check_vertex(e.v, "an edge")?;
        }
        let roles: BTreeMap<Edge, EdgeRole> = self.roles.iter().map(|r| (r.edge, r.role)).collect();
        match (self.mode, &self.dual) {
            (CoordMode::Grid, None) => {
                let positions = self.positions.values().map(Coord::grid).collect::<Result<_, _>>()?;
                Ok(LoadedDrawing::Grid(Drawing { positions, edges_a: self.edges_a.clone(), edges_b: self.edges_b.clone(), roles }))
            }
            (CoordMode::Real, None) => {
                let positions = self.positions.values().map(Coord::real).collect::<Result<_, _>>()?;
                Ok(LoadedDrawing::Real(Drawing { positions, edges_a: self.edges_a.clone(), edges_b: self.edges_b.clone(), roles }))
            }
            (CoordMode::Grid, Some(_)) => Err(schema("dual drawings use real coordinates")),
            (CoordMode::Real, Some(block)) => {
                if !self.edges_b.is_empty() || !self.roles.is_empty() {
                    return Err(schema("a dual drawing carries its primal edges in edges_a only"));
                }
                let positions = self.positions.values().map(Coord::real).collect::<Result<_, _>>()?;
                let dual = self.dual_structure(block)?;
                let face_points = block.face_points.iter().map(Coord::real).collect::<Result<_, _>>()?;
                Ok(LoadedDrawing::Dual(DualDrawing { positions, edges: self.edges_a.clone(), dual, face_points }))
            }
        }
    }

    fn dual_structure(&self, block: &DualBlock) -> Result<DualStructure, FormatError> {
        if block.face_points.len() != block.faces.len() {
            return Err(schema(format!("{} faces but {} face points", block.faces.len(), block.face_points.len())));
        }
        let mut faces = Vec::with_capacity(block.faces.len());
        for f in &block.faces {
            if f.len() < 3 {
                return Err(schema("a face needs at least three vertices"));
            }
            let vertices: Vec<VertexId> = f.iter().map(|&v| VertexId(v)).collect();
            for &v in &vertices {
                self.check_vertex(v, "a face")?;
            }
            faces.push(Face { vertices });
        }
        let mut adjacency = Vec::with_capacity(block.edges.len());
        for &[a, b] in &block.edges {
            if a >= faces.len() || b >= faces.len() || a == b {
                return Err(schema(format!("dual edge [{a}, {b}] does not join two distinct faces")));
            }
            let fb = faces[b].edges();
            let shared: Vec<Edge> = faces[a].edges().into_iter().filter(|e| fb.contains(e)).collect();
            match shared[..] {
                [e] => adjacency.push(DualEdge { a: a.min(b), b: a.max(b), shared: e }),
                _ => return Err(schema(format!("faces {a} and {b} do not share exactly one edge"))),
            }
        }
        Ok(DualStructure { faces, adjacency })
    }
}
