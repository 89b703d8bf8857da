//! Graph file formats.
//!
//! * JSON: `{"n": 3, "edges": [[0, 1], [1, 2]]}` with an optional `"labels"` array.
//! * Edge list: one `a b` pair per line. Blank lines and `#` comments are
//!   ignored; a line holding a single label declares an isolated vertex.
//!
//! Edge-list labels are arbitrary tokens. They are mapped to dense 0-based
//! indices in numeric order when every label is an unsigned integer and in
//! lexicographic order otherwise, so the mapping depends only on the label
//! set and serialization round-trips exactly.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// A graph together with the external vertex labels it was read with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl LabeledGraph {
    /// Labels `"0"`..`"n-1"`.
    pub fn unlabeled(graph: Graph) -> Self {
        let labels = default_labels(graph.n());
        Self { graph, labels }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels == default_labels(self.graph.n())
    }

    /// Detects the format from the first non-blank character.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_edge_list(text)
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: JsonGraph = serde_json::from_str(text).map_err(|e| Error::GraphParse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let graph = Graph::from_edges(raw.n, raw.edges.iter().map(|&[a, b]| (a, b)))?;
        let labels = match raw.labels {
            Some(labels) if labels.len() != raw.n => {
                return Err(Error::GraphParse {
                    line: 1,
                    msg: format!("{} labels for {} vertices", labels.len(), raw.n),
                })
            }
            Some(labels) => labels,
            None => default_labels(raw.n),
        };
        Ok(Self { graph, labels })
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [v] => {
                    seen.insert(v.to_string());
                }
                [a, b] => {
                    seen.insert(a.to_string());
                    seen.insert(b.to_string());
                    pairs.push((a.to_string(), b.to_string()));
                }
                _ => {
                    return Err(Error::GraphParse {
                        line: idx + 1,
                        msg: format!("expected `a b`, got {} tokens", tokens.len()),
                    })
                }
            }
        }

        let mut labels: Vec<String> = seen.into_iter().collect();
        if labels.iter().all(|l| l.parse::<u64>().is_ok()) {
            labels.sort_by_key(|l| l.parse::<u64>().expect("checked numeric"));
        }
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();

        let mut graph = Graph::new(labels.len());
        for (a, b) in &pairs {
            let (ia, ib) = (index[a.as_str()], index[b.as_str()]);
            match graph.add_edge(ia, ib) {
                Err(Error::SelfLoop(_)) => return Err(Error::SelfLoop(a.clone())),
                Err(Error::DuplicateEdge(..)) => {
                    return Err(Error::DuplicateEdge(a.clone(), b.clone()))
                }
                other => other?,
            }
        }
        Ok(Self { graph, labels })
    }

    /// Single-line JSON; labels are written only when they differ from the defaults.
    pub fn to_json(&self) -> String {
        let raw = JsonGraph {
            n: self.graph.n(),
            edges: self
                .graph
                .edges()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
            labels: (!self.has_default_labels()).then(|| self.labels.clone()),
        };
        let mut out = serde_json::to_string(&raw).expect("plain data serializes");
        out.push('\n');
        out
    }

    /// Sorted edges, then isolated vertices one per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.graph.edges() {
            out.push_str(&format!("{} {}\n", self.labels[a], self.labels[b]));
        }
        for v in self.graph.vertices() {
            if self.graph.is_isolated(v).expect("in range") {
                out.push_str(&self.labels[v]);
                out.push('\n');
            }
        }
        out
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}
