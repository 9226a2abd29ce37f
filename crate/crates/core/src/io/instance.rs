use serde::{Deserialize, Serialize};

use super::{schema, FormatError};
use crate::model::{validate_instance, Edge, InstanceKind, OuterplaneEmbedding, SimInstance, VertexId};

/// An input instance as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InstanceFile {
    PathMatching { n: usize, edges_a: Vec<Edge>, edges_b: Vec<Edge> },
    CycleMatching { n: usize, edges_a: Vec<Edge>, edges_b: Vec<Edge> },
    General { n: usize, edges_a: Vec<Edge>, edges_b: Vec<Edge> },
    /// A biconnected outerplane graph: outer cycle and chords.
    Outerplanar { outer: Vec<u32>, chords: Vec<Edge> },
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with edge lists sorted.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.canonical()).expect("instance serializes");
        out.push('\n');
        out
    }

    pub fn canonical(&self) -> Self {
        let sorted = |v: &[Edge]| {
            let mut v = v.to_vec();
            v.sort();
            v
        };
        match self {
            Self::PathMatching { n, edges_a, edges_b } => {
                Self::PathMatching { n: *n, edges_a: sorted(edges_a), edges_b: sorted(edges_b) }
            }
            Self::CycleMatching { n, edges_a, edges_b } => {
                Self::CycleMatching { n: *n, edges_a: sorted(edges_a), edges_b: sorted(edges_b) }
            }
            Self::General { n, edges_a, edges_b } => Self::General { n: *n, edges_a: sorted(edges_a), edges_b: sorted(edges_b) },
            Self::Outerplanar { outer, chords } => Self::Outerplanar { outer: outer.clone(), chords: sorted(chords) },
        }
    }

    /// The `kind` tag as written in the file.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::PathMatching { .. } => "path-matching",
            Self::CycleMatching { .. } => "cycle-matching",
            Self::General { .. } => "general",
            Self::Outerplanar { .. } => "outerplanar",
        }
    }

    pub fn from_instance(inst: &SimInstance) -> Self {
        let (n, edges_a, edges_b) = (inst.n, inst.edges_a.clone(), inst.edges_b.clone());
        match inst.kind {
            InstanceKind::PathMatching => Self::PathMatching { n, edges_a, edges_b },
            InstanceKind::CycleMatching => Self::CycleMatching { n, edges_a, edges_b },
            InstanceKind::General => Self::General { n, edges_a, edges_b },
        }
        .canonical()
    }

    pub fn from_embedding(emb: &OuterplaneEmbedding) -> Self {
        Self::Outerplanar { outer: emb.outer.iter().map(|v| v.get()).collect(), chords: emb.chords.clone() }.canonical()
    }

    /// The validated simultaneous instance. Fails for embeddings and for
    /// edge lists that break the declared kind.
    pub fn to_instance(&self) -> Result<SimInstance, FormatError> {
        let (n, edges_a, edges_b, kind) = match self {
            Self::PathMatching { n, edges_a, edges_b } => (n, edges_a, edges_b, InstanceKind::PathMatching),
            Self::CycleMatching { n, edges_a, edges_b } => (n, edges_a, edges_b, InstanceKind::CycleMatching),
            Self::General { n, edges_a, edges_b } => (n, edges_a, edges_b, InstanceKind::General),
            Self::Outerplanar { .. } => return Err(schema("an outerplanar embedding is not a simultaneous instance")),
        };
        let inst = SimInstance { n: *n, edges_a: edges_a.clone(), edges_b: edges_b.clone(), kind };
        let problems = validate_instance(&inst);
        if problems.is_empty() {
            Ok(inst)
        } else {
            let list: Vec<String> = problems.iter().map(|p| p.to_string()).collect();
            Err(schema(format!("invalid {} instance: {}", kind.as_str(), list.join("; "))))
        }
    }

    /// The validated embedding.
    pub fn to_embedding(&self) -> Result<OuterplaneEmbedding, FormatError> {
        match self {
            Self::Outerplanar { outer, chords } => {
                let emb = OuterplaneEmbedding { outer: outer.iter().map(|&v| VertexId(v)).collect(), chords: chords.clone() };
                emb.validate().map_err(|e| schema(format!("invalid embedding: {e}")))?;
                Ok(emb)
            }
            other => Err(schema(format!("a {} instance is not an outerplanar embedding", other.kind_name()))),
        }
    }
}
