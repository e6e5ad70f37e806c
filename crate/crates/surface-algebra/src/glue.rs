use std::collections::BTreeMap;

use quiver_core::Quiver;
use serde::{Deserialize, Serialize};

use crate::blocks::{BlockDecomposition, BlockInstance, BlockType, Role};
use crate::error::SurfaceError;

/// One block of a glueing spec; `labels[t]` names template vertex `t`.
/// Outlets sharing a label are glued.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(rename = "outlets")]
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueSpec {
    pub blocks: Vec<BlockSpec>,
}

/// The glued quiver. Vertices are numbered by first appearance of their label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub quiver: Quiver,
    pub decomposition: BlockDecomposition,
    pub labels: Vec<String>,
}

pub fn glue_blocks(spec: &GlueSpec) -> Result<Glued, SurfaceError> {
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut outlet_uses: BTreeMap<&str, usize> = BTreeMap::new();
    let mut inner_uses: BTreeMap<&str, usize> = BTreeMap::new();
    let mut blocks = Vec::new();
    for b in &spec.blocks {
        let kind: BlockType = b.kind.parse()?;
        let t = kind.template();
        if b.labels.len() != t.n() {
            return Err(SurfaceError::LabelCount {
                kind: kind.to_string(),
                expected: t.n(),
                found: b.labels.len(),
            });
        }
        let mut vertices = Vec::with_capacity(t.n());
        for (label, role) in b.labels.iter().zip(&t.roles) {
            let v = *index.entry(label).or_insert_with(|| {
                labels.push(label.clone());
                labels.len() - 1
            });
            vertices.push(v);
            match role {
                Role::Outlet => *outlet_uses.entry(label).or_default() += 1,
                Role::Inner => *inner_uses.entry(label).or_default() += 1,
            }
        }
        blocks.push(BlockInstance { kind, vertices });
    }
    for (&label, &count) in &inner_uses {
        if count > 1 || outlet_uses.contains_key(label) {
            return Err(SurfaceError::DuplicateBullet(label.to_string()));
        }
    }
    for (&label, &count) in &outlet_uses {
        match count {
            1 => return Err(SurfaceError::DanglingOutlet(label.to_string())),
            2 => {}
            k => return Err(SurfaceError::OverGlued(label.to_string(), k)),
        }
    }
    let mut arrows = Vec::new();
    for b in &blocks {
        // Outlets of one block may not be glued to each other.
        if let Some((_, &v)) = b
            .vertices
            .iter()
            .enumerate()
            .find(|&(i, v)| b.vertices[..i].contains(v))
        {
            return Err(SurfaceError::OverGlued(labels[v].clone(), 2));
        }
        arrows.extend(b.arrows().into_iter().map(|(s, t)| (s, t, 1u8)));
    }
    let quiver = Quiver::from_arrows(labels.len().max(1), &arrows)?;
    Ok(Glued {
        quiver,
        decomposition: BlockDecomposition { blocks },
        labels,
    })
}

pub fn parse_glue_spec(text: &str) -> Result<GlueSpec, SurfaceError> {
    serde_json::from_str(text).map_err(|e| SurfaceError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

/// `{"blocks":[{"type":"V","vertices":[1,2,3,4,5]},...]}` with 1-based vertices.
pub fn decomposition_to_json(d: &BlockDecomposition) -> serde_json::Value {
    let blocks: Vec<_> = d
        .blocks
        .iter()
        .map(|b| {
            serde_json::json!({
                "type": b.kind.name(),
                "vertices": b.vertices.iter().map(|v| v + 1).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({ "blocks": blocks })
}
