//! `planegraph v1` text format and its JSON mirror.
//!
//! ```text
//! planegraph v1
//! vertices <n>
//! rot <vertex-id> <dart-id>*
//! edge <edge-id> <tail-dart> <head-dart>
//! T <vertex-id>*
//! ```
//!
//! Vertices and edges are emitted in ascending id order, so serializing a
//! parsed canonical file reproduces it byte for byte.

use super::{DartId, GraphError, PlaneMultigraph, VertexId};
use serde::{Deserialize, Serialize};

pub const HEADER: &str = "planegraph v1";

/// JSON mirror of the text format, with the same field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub planegraph: String,
    pub vertices: usize,
    pub rot: Vec<Vec<DartId>>,
    pub edge: Vec<[usize; 3]>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub terminals: Option<Vec<VertexId>>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<PlaneMultigraph, GraphError> {
        if self.planegraph != "v1" {
            return Err(GraphError::Syntax {
                line: 1,
                msg: format!("unsupported version {:?}", self.planegraph),
            });
        }
        if self.rot.len() != self.vertices {
            return Err(GraphError::Syntax {
                line: 0,
                msg: format!(
                    "{} rotations for {} vertices",
                    self.rot.len(),
                    self.vertices
                ),
            });
        }
        let edges = order_edges(self.edge.iter().map(|&[id, a, b]| (id, [a, b])))?;
        PlaneMultigraph::from_parts(self.rot, edges, self.terminals)
    }
}

fn order_edges(
    items: impl Iterator<Item = (usize, [DartId; 2])>,
) -> Result<Vec<[DartId; 2]>, GraphError> {
    let items: Vec<_> = items.collect();
    let m = items.len();
    let mut edges: Vec<Option<[DartId; 2]>> = vec![None; m];
    for (id, pair) in items {
        let slot = edges.get_mut(id).ok_or(GraphError::EdgeIdRange {
            expected: m,
            found: id,
        })?;
        if slot.is_some() {
            return Err(GraphError::DuplicateEdge(id));
        }
        *slot = Some(pair);
    }
    Ok(edges
        .into_iter()
        .map(|e| e.expect("all slots filled"))
        .collect())
}

/// Parses either the text format or its JSON mirror (detected by a leading `{`).
pub fn parse_plane_graph(text: &str) -> Result<PlaneMultigraph, GraphError> {
    if text.trim_start().starts_with('{') {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Syntax {
            line: e.line(),
            msg: e.to_string(),
        })?;
        return file.into_graph();
    }
    parse_text(text)
}

fn parse_text(text: &str) -> Result<PlaneMultigraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, msg: &str| GraphError::Syntax {
        line,
        msg: msg.to_string(),
    };

    match lines.next() {
        Some((_, l)) if l == HEADER => {}
        Some((n, _)) => return Err(syntax(n, "expected header `planegraph v1`")),
        None => return Err(syntax(1, "empty input")),
    }
    let (n_line, vline) = lines
        .next()
        .ok_or_else(|| syntax(2, "missing `vertices` line"))?;
    let n: usize = match vline.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["vertices", k] => k.parse().map_err(|_| syntax(n_line, "bad vertex count"))?,
        _ => return Err(syntax(n_line, "expected `vertices <n>`")),
    };

    let mut rot: Vec<Option<Vec<DartId>>> = vec![None; n];
    let mut edges = Vec::new();
    let mut terminals = None;
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        let kw = toks.next().unwrap_or_default();
        let nums: Vec<usize> = toks
            .map(|t| {
                t.parse()
                    .map_err(|_| syntax(ln, &format!("bad integer {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        match kw {
            "rot" => {
                let (&v, darts) = nums
                    .split_first()
                    .ok_or_else(|| syntax(ln, "missing vertex id"))?;
                let slot = rot.get_mut(v).ok_or(GraphError::VertexRange(v))?;
                if slot.is_some() {
                    return Err(syntax(ln, &format!("second rotation for vertex {v}")));
                }
                *slot = Some(darts.to_vec());
            }
            "edge" => match nums.as_slice() {
                &[id, a, b] => edges.push((id, [a, b])),
                _ => return Err(syntax(ln, "expected `edge <id> <dart> <dart>`")),
            },
            "T" => {
                if terminals.is_some() {
                    return Err(syntax(ln, "second `T` line"));
                }
                terminals = Some(nums);
            }
            other => return Err(syntax(ln, &format!("unknown keyword {other:?}"))),
        }
    }
    let rot = rot
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(0, &format!("missing rotation for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let edges = order_edges(edges.into_iter())?;
    PlaneMultigraph::from_parts(rot, edges, terminals)
}

pub(super) fn to_text(g: &PlaneMultigraph) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for v in 0..g.vertex_count() {
        write!(out, "rot {v}").unwrap();
        for d in g.rotation(v) {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
    }
    for e in 0..g.edge_count() {
        let [a, b] = g.edge_darts(e);
        writeln!(out, "edge {e} {a} {b}").unwrap();
    }
    if let Some(t) = g.explicit_terminals() {
        out.push('T');
        for v in t {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub(super) fn to_file(g: &PlaneMultigraph) -> GraphFile {
    GraphFile {
        planegraph: "v1".into(),
        vertices: g.vertex_count(),
        rot: g.rotations().to_vec(),
        edge: (0..g.edge_count())
            .map(|e| {
                let [a, b] = g.edge_darts(e);
                [e, a, b]
            })
            .collect(),
        terminals: g.explicit_terminals().map(<[_]>::to_vec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HB6: &str = "planegraph v1\nvertices 2\nrot 0 0 2 4 6 8 10\nrot 1 11 9 7 5 3 1\n\
edge 0 0 1\nedge 1 2 3\nedge 2 4 5\nedge 3 6 7\nedge 4 8 9\nedge 5 10 11\n";

    #[test]
    fn parses_hexabond() {
        let g = parse_plane_graph(HB6).unwrap();
        assert_eq!(
            (g.vertex_count(), g.edge_count(), g.face_count()),
            (2, 6, 6)
        );
        assert_eq!(g.serialize_text(), HB6);
    }

    #[test]
    fn json_mirror_round_trips() {
        let g = parse_plane_graph(HB6).unwrap();
        let json = g.serialize_json();
        let h = parse_plane_graph(&json).unwrap();
        assert_eq!(g, h);
        assert_eq!(h.serialize_json(), json);
    }

    #[test]
    fn duplicate_dart_in_rotation() {
        let bad = HB6.replace("rot 0 0 2 4 6 8 10", "rot 0 0 0 4 6 8 10");
        assert_eq!(
            parse_plane_graph(&bad).unwrap_err(),
            GraphError::DuplicateDart(0)
        );
    }

    #[test]
    fn terminal_line_is_kept() {
        let text = format!("{HB6}T 0 1\n");
        let g = parse_plane_graph(&text).unwrap();
        assert_eq!(g.serialize_text(), text);
        let odd = format!("{HB6}T 0\n");
        assert_eq!(
            parse_plane_graph(&odd).unwrap_err(),
            GraphError::OddTerminals(1)
        );
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let err = parse_plane_graph("planegraph v2\n").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 1, .. }));
        let err = parse_plane_graph("planegraph v1\nvertices x\n").unwrap_err();
        assert!(matches!(err, GraphError::Syntax { line: 2, .. }));
    }
}
