//! Graph file formats: DIMACS `.col`, DOT, and a compact JSON schema
//! `{n, delta?, edges: [[u, v, label?]], roles?}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeLabeledGraph, FiniteGraph, TargetGraph};

/// Writes DIMACS `.col` (1-based vertices).
pub fn write_dimacs(g: &FiniteGraph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Reads DIMACS `.col`. Accepts `p edge` and `p col`; ignores `c` lines.
pub fn read_dimacs(text: &str) -> Result<FiniteGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let mut parts = line.split_whitespace();
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                let kind = parts.next();
                if !matches!(kind, Some("edge") | Some("col") | Some("edges")) {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unsupported problem line kind {kind:?}"),
                    });
                }
                n = Some(parse_num(parts.next(), line_no)?);
            }
            Some("e") => {
                let u = parse_num(parts.next(), line_no)?;
                let v = parse_num(parts.next(), line_no)?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "DIMACS vertices are 1-based".into(),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unexpected line tag `{other}`"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    FiniteGraph::from_edges(n, edges)
}

fn parse_num(tok: Option<&str>, line: usize) -> Result<usize> {
    tok.and_then(|t| t.parse().ok()).ok_or(Error::Parse {
        line,
        msg: "expected a non-negative integer".into(),
    })
}

/// Renders a graph in DOT. `labels` attaches an edge label per edge,
/// `vertex_notes` an extra line per vertex.
pub fn write_dot(
    g: &FiniteGraph,
    labels: Option<&EdgeLabeledGraph>,
    vertex_notes: Option<&[String]>,
) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(notes) = vertex_notes {
        for (v, note) in notes.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{v}\\n{}\"];", note.replace('"', "'"));
        }
    } else {
        for v in 0..g.vertex_count() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        match labels.and_then(|l| l.label(u, v)) {
            Some(l) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"a{l}\", generator={l}];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn labeled_to_dot(g: &EdgeLabeledGraph) -> String {
    write_dot(g.graph(), Some(g), None)
}

/// The JSON graph schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<BTreeMap<String, Vec<usize>>>,
}

impl GraphJson {
    pub fn from_plain(g: &FiniteGraph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            delta: None,
            edges: g.edges().map(|(u, v)| vec![u, v]).collect(),
            roles: None,
        }
    }

    pub fn from_labeled(g: &EdgeLabeledGraph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            delta: Some(g.delta()),
            edges: g.labeled_edges().map(|(u, v, l)| vec![u, v, l]).collect(),
            roles: None,
        }
    }

    pub fn with_roles(mut self, roles: BTreeMap<String, Vec<usize>>) -> Self {
        self.roles = Some(roles);
        self
    }

    pub fn is_labeled(&self) -> bool {
        !self.edges.is_empty() && self.edges.iter().all(|e| e.len() == 3) || self.delta.is_some()
    }

    fn endpoints(&self) -> Result<Vec<(usize, usize, Option<usize>)>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(k, e)| match e.as_slice() {
                [u, v] => Ok((*u, *v, None)),
                [u, v, l] => Ok((*u, *v, Some(*l))),
                _ => Err(Error::Json(format!("edge {k} must have 2 or 3 entries"))),
            })
            .collect()
    }

    /// The underlying unlabeled graph (labels ignored).
    pub fn to_plain(&self) -> Result<FiniteGraph> {
        let edges = self.endpoints()?;
        FiniteGraph::from_edges(self.n, edges.into_iter().map(|(u, v, _)| (u, v)))
    }

    /// Every edge must carry a label. `delta` defaults to the largest label.
    pub fn to_labeled(&self) -> Result<EdgeLabeledGraph> {
        let edges = self.endpoints()?;
        let mut out = Vec::with_capacity(edges.len());
        for (k, (u, v, l)) in edges.into_iter().enumerate() {
            let l = l.ok_or_else(|| Error::Json(format!("edge {k} has no label")))?;
            out.push((u, v, l));
        }
        let delta = self
            .delta
            .unwrap_or_else(|| out.iter().map(|e| e.2).max().unwrap_or(2).max(2));
        EdgeLabeledGraph::from_edges(self.n, delta, out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph json serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Writes DIMACS with the edge labels as `c delta d` and `c label u v l`
/// comment lines, which [`parse_graph`] reads back.
pub fn write_labeled_dimacs(g: &EdgeLabeledGraph, comments: &[&str]) -> String {
    let mut all: Vec<String> = comments.iter().map(|c| c.to_string()).collect();
    all.push(format!("delta {}", g.delta()));
    all.extend(g.labeled_edges().map(|(u, v, l)| format!("label {} {} {l}", u + 1, v + 1)));
    let refs: Vec<&str> = all.iter().map(String::as_str).collect();
    write_dimacs(g.graph(), &refs)
}

type DimacsLabels = (Option<usize>, Vec<(usize, usize, usize)>);

/// The `c delta` and `c label` annotations of a DIMACS file.
fn dimacs_labels(text: &str) -> Result<DimacsLabels> {
    let mut delta = None;
    let mut labels = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("c") {
            continue;
        }
        match parts.next() {
            Some("delta") => delta = Some(parse_num(parts.next(), lineno + 1)?),
            Some("label") => {
                let u = parse_num(parts.next(), lineno + 1)?;
                let v = parse_num(parts.next(), lineno + 1)?;
                let l = parse_num(parts.next(), lineno + 1)?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "DIMACS vertices are 1-based".into(),
                    });
                }
                labels.push((u - 1, v - 1, l));
            }
            _ => {}
        }
    }
    Ok((delta, labels))
}

/// Parses JSON when the text starts with `{`, DIMACS otherwise. DIMACS with
/// `c label` lines yields a labeled graph; every edge must then be labeled.
pub fn parse_graph(text: &str) -> Result<TargetGraph> {
    if text.trim_start().starts_with('{') {
        let j = GraphJson::parse(text)?;
        if j.is_labeled() {
            Ok(TargetGraph::Labeled(j.to_labeled()?))
        } else {
            Ok(TargetGraph::Plain(j.to_plain()?))
        }
    } else {
        let g = read_dimacs(text)?;
        let (delta, labels) = dimacs_labels(text)?;
        if labels.is_empty() && delta.is_none() {
            return Ok(TargetGraph::Plain(g));
        }
        let delta = delta.unwrap_or_else(|| labels.iter().map(|e| e.2).max().unwrap_or(2).max(2));
        let l = EdgeLabeledGraph::from_edges(g.vertex_count(), delta, labels)?;
        if l.graph() != &g {
            return Err(Error::Parse {
                line: 0,
                msg: "`c label` lines must label exactly the `e` edges".into(),
            });
        }
        Ok(TargetGraph::Labeled(l))
    }
}

pub fn load_graph(path: &Path) -> Result<TargetGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_graph(&text)
}
