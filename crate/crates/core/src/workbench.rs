//! Named instance generators and the exhaustive coloring oracle.

use crate::coloring::{Color, EdgeColoring};
use crate::plane_graph::{EdgeId, GraphError, PlaneMultigraph, VertexId};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Hard edge cap for [`oracle_coloring`].
pub const ORACLE_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum InstanceSpec {
    /// Two vertices joined by six parallel edges.
    Hexabond,
    /// Doubled K4.
    Dk4,
    /// 4-cycle with every edge tripled.
    C4x3,
    /// Doubled cube.
    Dq3,
    /// Doubled n-prism, n ≥ 3.
    DoubledPrism(usize),
    DoubledDodecahedron,
    /// n-cycle with every edge tripled, n ≥ 2.
    TripledCycle(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WorkbenchError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid parameter for {name}: {msg}")]
    BadParameter { name: &'static str, msg: String },
    #[error("oracle is capped at {cap} edges, graph has {edges}")]
    OracleCap { cap: usize, edges: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl InstanceSpec {
    /// The named corpus: every generator the acceptance checks run over.
    pub fn named() -> Vec<InstanceSpec> {
        let mut v = vec![
            InstanceSpec::Hexabond,
            InstanceSpec::Dk4,
            InstanceSpec::C4x3,
            InstanceSpec::Dq3,
        ];
        v.extend((3..=6).map(InstanceSpec::DoubledPrism));
        v.push(InstanceSpec::DoubledDodecahedron);
        v
    }

    /// Named corpus plus the extra tripled-cycle family members used as
    /// small negative instances.
    pub fn corpus() -> Vec<InstanceSpec> {
        let mut v = Self::named();
        v.push(InstanceSpec::TripledCycle(3));
        v.push(InstanceSpec::TripledCycle(5));
        v
    }

    fn validate(self) -> Result<(), WorkbenchError> {
        match self {
            InstanceSpec::DoubledPrism(n) if n < 3 => Err(WorkbenchError::BadParameter {
                name: "doubled-prism",
                msg: format!("n = {n}, need n ≥ 3"),
            }),
            InstanceSpec::TripledCycle(n) if n < 2 => Err(WorkbenchError::BadParameter {
                name: "tripled-cycle",
                msg: format!("n = {n}, need n ≥ 2"),
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Hexabond => f.write_str("hexabond"),
            InstanceSpec::Dk4 => f.write_str("dk4"),
            InstanceSpec::C4x3 => f.write_str("c4x3"),
            InstanceSpec::Dq3 => f.write_str("dq3"),
            InstanceSpec::DoubledPrism(n) => write!(f, "doubled-prism({n})"),
            InstanceSpec::DoubledDodecahedron => f.write_str("doubled-dodecahedron"),
            InstanceSpec::TripledCycle(n) => write!(f, "tripled-cycle({n})"),
        }
    }
}

impl FromStr for InstanceSpec {
    type Err = WorkbenchError;

    /// Accepts `name`, `name(n)` and `name:n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, arg) = match s.find(['(', ':']) {
            Some(i) => {
                let rest = s[i + 1..].trim_end_matches(')');
                (&s[..i], Some(rest))
            }
            None => (s, None),
        };
        let param = |gen: &'static str| -> Result<usize, WorkbenchError> {
            let raw = arg.ok_or_else(|| WorkbenchError::BadParameter {
                name: gen,
                msg: "missing size".into(),
            })?;
            raw.trim()
                .parse()
                .map_err(|_| WorkbenchError::BadParameter {
                    name: gen,
                    msg: format!("bad size {raw:?}"),
                })
        };
        let spec = match (name.to_ascii_lowercase().as_str(), arg) {
            ("hexabond" | "hb6", None) => InstanceSpec::Hexabond,
            ("dk4", None) => InstanceSpec::Dk4,
            ("c4x3", None) => InstanceSpec::C4x3,
            ("dq3", None) => InstanceSpec::Dq3,
            ("doubled-dodecahedron", None) => InstanceSpec::DoubledDodecahedron,
            ("doubled-prism", _) => InstanceSpec::DoubledPrism(param("doubled-prism")?),
            ("tripled-cycle", _) => InstanceSpec::TripledCycle(param("tripled-cycle")?),
            _ => return Err(WorkbenchError::UnknownGenerator(s.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl TryFrom<String> for InstanceSpec {
    type Error = WorkbenchError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<InstanceSpec> for String {
    fn from(s: InstanceSpec) -> String {
        s.to_string()
    }
}

/// A straight-line drawing with edge multiplicities.
struct Layout {
    points: Vec<(f64, f64)>,
    edges: Vec<(VertexId, VertexId, usize)>,
}

impl Layout {
    /// Rotation at each vertex is its neighbors sorted counterclockwise by
    /// angle. Copies of a simple edge get consecutive ids, listed forward at
    /// the smaller endpoint and backward at the other.
    fn build(&self) -> Result<PlaneMultigraph, GraphError> {
        let n = self.points.len();
        let mut ends = Vec::new();
        let mut copies: Vec<Vec<EdgeId>> = Vec::new();
        for &(u, v, mult) in &self.edges {
            let (a, b) = (u.min(v), u.max(v));
            copies.push((ends.len()..ends.len() + mult).collect());
            ends.extend(std::iter::repeat_n((a, b), mult));
        }
        let mut rot = vec![Vec::new(); n];
        for (v, r) in rot.iter_mut().enumerate() {
            let (x, y) = self.points[v];
            let mut around: Vec<(f64, usize)> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b, _))| a == v || b == v)
                .map(|(i, &(a, b, _))| {
                    let w = if a == v { b } else { a };
                    let (wx, wy) = self.points[w];
                    ((wy - y).atan2(wx - x).rem_euclid(TAU), i)
                })
                .collect();
            around.sort_by(|p, q| p.0.total_cmp(&q.0));
            for (_, i) in around {
                let (a, b, _) = self.edges[i];
                if v == a.min(b) {
                    r.extend(copies[i].iter().copied());
                } else {
                    r.extend(copies[i].iter().rev().copied());
                }
            }
        }
        PlaneMultigraph::from_edge_rotations(&ends, &rot, None)
    }
}

fn ring(n: usize, radius: f64, phase: f64) -> impl Iterator<Item = (f64, f64)> {
    (0..n).map(move |i| {
        let t = phase + TAU * i as f64 / n as f64;
        (radius * t.cos(), radius * t.sin())
    })
}

fn cycle_edges(
    offset: usize,
    n: usize,
    mult: usize,
) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n, mult))
}

fn layout(spec: InstanceSpec) -> Layout {
    match spec {
        InstanceSpec::Hexabond => Layout {
            points: vec![(0.0, 0.0), (1.0, 0.0)],
            edges: vec![(0, 1, 6)],
        },
        InstanceSpec::Dk4 => {
            let mut points: Vec<_> = ring(3, 2.0, TAU / 4.0).collect();
            points.push((0.0, 0.0));
            let mut edges: Vec<_> = cycle_edges(0, 3, 2).collect();
            edges.extend((0..3).map(|i| (i, 3, 2)));
            Layout { points, edges }
        }
        InstanceSpec::C4x3 => layout(InstanceSpec::TripledCycle(4)),
        InstanceSpec::Dq3 => layout(InstanceSpec::DoubledPrism(4)),
        InstanceSpec::TripledCycle(n) => Layout {
            points: ring(n, 2.0, 0.0).collect(),
            edges: if n == 2 {
                vec![(0, 1, 6)]
            } else {
                cycle_edges(0, n, 3).collect()
            },
        },
        InstanceSpec::DoubledPrism(n) => {
            let mut points: Vec<_> = ring(n, 2.0, 0.0).collect();
            points.extend(ring(n, 1.0, 0.0));
            let mut edges: Vec<_> = cycle_edges(0, n, 2).collect();
            edges.extend(cycle_edges(n, n, 2));
            edges.extend((0..n).map(|i| (i, n + i, 2)));
            Layout { points, edges }
        }
        InstanceSpec::DoubledDodecahedron => {
            // a: outer 5-ring, b: middle 10-ring, c: inner 5-ring
            let mut points: Vec<_> = ring(5, 3.0, 0.0).collect();
            points.extend(ring(10, 2.0, 0.0));
            points.extend(ring(5, 1.0, TAU / 10.0));
            let (a, b, c) = (0, 5, 15);
            let mut edges: Vec<_> = cycle_edges(a, 5, 2).collect();
            edges.extend(cycle_edges(b, 10, 2));
            edges.extend(cycle_edges(c, 5, 2));
            edges.extend((0..5).map(|i| (a + i, b + 2 * i, 2)));
            edges.extend((0..5).map(|i| (b + 2 * i + 1, c + i, 2)));
            Layout { points, edges }
        }
    }
}

/// Builds a named instance. Output is deterministic.
pub fn generate(spec: &InstanceSpec) -> Result<PlaneMultigraph, WorkbenchError> {
    spec.validate()?;
    Ok(layout(*spec).build()?)
}

/// Plain backtracking over edges in id order and colors in natural order.
///
/// `Ok(None)` is a proof that no proper 6-edge-coloring exists.
pub fn oracle_coloring(g: &PlaneMultigraph) -> Result<Option<EdgeColoring>, WorkbenchError> {
    let m = g.edge_count();
    if m > ORACLE_CAP {
        return Err(WorkbenchError::OracleCap {
            cap: ORACLE_CAP,
            edges: m,
        });
    }
    let ends: Vec<(VertexId, VertexId)> = (0..m).map(|e| g.endpoints(e)).collect();
    let mut used = vec![0u8; g.vertex_count()];
    let mut colors = vec![0usize; m];

    fn go(e: usize, ends: &[(usize, usize)], used: &mut [u8], colors: &mut [usize]) -> bool {
        if e == ends.len() {
            return true;
        }
        let (u, v) = ends[e];
        for c in 0..6 {
            let bit = 1u8 << c;
            if (used[u] | used[v]) & bit != 0 {
                continue;
            }
            used[u] |= bit;
            used[v] |= bit;
            colors[e] = c;
            if go(e + 1, ends, used, colors) {
                return true;
            }
            used[u] &= !bit;
            used[v] &= !bit;
        }
        false
    }

    Ok(go(0, &ends, &mut used, &mut colors)
        .then(|| EdgeColoring::new(colors.into_iter().map(Color::from_index).collect())))
}
