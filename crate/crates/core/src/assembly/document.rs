//! The JSON manifold document.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PieceKind {
    #[serde(rename = "seifert_disk")]
    SeifertDisk,
    #[serde(rename = "seifert_planar")]
    SeifertPlanar,
    #[serde(rename = "seifert_mobius_planar")]
    SeifertMobiusPlanar,
    #[serde(rename = "C2")]
    C2,
    #[serde(rename = "C3")]
    C3,
    #[serde(rename = "solid_torus")]
    SolidTorus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceSpec {
    pub id: String,
    #[serde(rename = "type")]
    pub kind: PieceKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coefficients: Vec<[i64; 2]>,
    /// Boundary count for the planar kinds; fixed by the kind otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ports: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingSpec {
    pub from: (String, usize),
    pub to: (String, usize),
    /// Columns are the `to` basis written in the `from` basis.
    pub matrix: [[i64; 2]; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub pieces: Vec<PieceSpec>,
    #[serde(default)]
    pub gluings: Vec<GluingSpec>,
}

impl PieceSpec {
    pub fn port_count(&self) -> usize {
        match self.kind {
            PieceKind::SeifertDisk | PieceKind::SolidTorus => 1,
            PieceKind::C3 => 3,
            PieceKind::C2 => 2,
            PieceKind::SeifertPlanar | PieceKind::SeifertMobiusPlanar => self.ports.unwrap_or(1),
        }
    }
}

impl ManifoldDocument {
    pub fn from_json(text: &str) -> Result<ManifoldDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Label of the `k`-th gluing: its own label or `e{k+1}`.
    pub fn edge_label(&self, k: usize) -> String {
        self.gluings[k].label.clone().unwrap_or_else(|| format!("e{}", k + 1))
    }

    /// Two pieces glued along one torus.
    pub fn two_piece(a: PieceSpec, b: PieceSpec, matrix: [[i64; 2]; 2]) -> ManifoldDocument {
        let g = GluingSpec { from: (a.id.clone(), 0), to: (b.id.clone(), 0), matrix, label: None };
        ManifoldDocument { name: None, pieces: vec![a, b], gluings: vec![g] }
    }
}

impl PieceSpec {
    pub fn disk(id: &str, coeffs: &[(i64, i64)]) -> PieceSpec {
        PieceSpec {
            id: id.into(),
            kind: PieceKind::SeifertDisk,
            coefficients: coeffs.iter().map(|&(p, q)| [p, q]).collect(),
            ports: None,
        }
    }

    pub fn solid_torus(id: &str, p: i64, q: i64) -> PieceSpec {
        PieceSpec { id: id.into(), kind: PieceKind::SolidTorus, coefficients: vec![[p, q]], ports: None }
    }
}
