//! The JSON arrangement file.
//!
//! ```json
//! {"vertices": 4,
//!  "edges": [{"vertices": [1, 2], "color": "R"},
//!            {"vertices": [2, 3], "color": "B"},
//!            {"vertices": [3, 4], "color": "R"}],
//!  "order": ["R", "B"], "strict": false, "max_degree": 8, "max_page": 4}
//! ```
//!
//! Everything after `edges` is optional. Unknown fields are rejected.

use std::path::Path;

use ecarr_core::{ColorId, EdgeColoredHypergraph};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub vertices: Vec<usize>,
    pub color: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub vertices: usize,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub strict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_page: Option<i64>,
}

/// A validated hypergraph plus the options carried by its file.
#[derive(Debug, Clone)]
pub struct Arrangement {
    pub hypergraph: EdgeColoredHypergraph,
    pub strict: bool,
    pub max_degree: Option<i64>,
    pub max_page: Option<i64>,
}

impl ArrangementFile {
    /// The file describing `h`, colors listed in `h`'s order.
    pub fn from_hypergraph(h: &EdgeColoredHypergraph) -> Self {
        let default_order = {
            let mut sorted = h.colors().to_vec();
            sorted.sort();
            sorted
        };
        Self {
            vertices: h.vertex_count(),
            edges: h
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    vertices: e.vertices.clone(),
                    color: h.color_name(e.color).to_owned(),
                })
                .collect(),
            order: (h.colors() != default_order.as_slice()).then(|| h.colors().to_vec()),
            strict: false,
            max_degree: None,
            max_page: None,
        }
    }

    pub fn into_arrangement(self) -> Result<Arrangement> {
        if self.vertices == 0 {
            return Err(CliError::Input("`vertices` must be positive".into()));
        }
        let mut h = EdgeColoredHypergraph::new(
            self.vertices,
            self.edges.into_iter().map(|e| (e.vertices, e.color)),
        )
        .map_err(|e| CliError::Input(e.to_string()))?;
        if let Some(order) = &self.order {
            h = h
                .with_color_order(order)
                .map_err(|e| CliError::Input(format!("order: {e}")))?;
        }
        if self.strict {
            h.check(true)
                .map_err(|e| CliError::Input(format!("strict: {e}")))?;
        }
        Ok(Arrangement {
            hypergraph: h,
            strict: self.strict,
            max_degree: self.max_degree,
            max_page: self.max_page,
        })
    }
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let file: ArrangementFile = serde_json::from_str(text)?;
    file.into_arrangement()
}

pub fn read_arrangement(path: &Path) -> Result<Arrangement> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_arrangement(&text)
}

/// Color ids in `h`'s order, named.
pub fn color_names(h: &EdgeColoredHypergraph) -> Vec<String> {
    (0..h.color_count())
        .map(|c| h.color_name(ColorId(c)).to_owned())
        .collect()
}
