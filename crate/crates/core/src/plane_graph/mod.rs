//! Dart-based plane multigraphs.
//!
//! Every edge owns two darts, one at each endpoint. A vertex stores the
//! counterclockwise cyclic order of the darts leaving it; that rotation
//! system is the only description of the embedding. Faces are the orbits of
//! `face_next(d) = successor of reverse(d) in the rotation at the head of d`.

mod classify;
mod format;
mod multigon;

pub use classify::{
    classify, BoundarySlot, Classification, ClassifyError, FIncidence, FaceInfo, Neighbor,
};
pub use format::{parse_plane_graph, GraphFile};
pub use multigon::{find_multigons, Multigon, MultigonId};

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type DartId = usize;
pub type FaceId = usize;

/// Which end of its edge a dart sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub id: DartId,
    pub edge: EdgeId,
    pub end: End,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("duplicate dart {0}")]
    DuplicateDart(DartId),
    #[error("dangling dart {0}")]
    DanglingDart(DartId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("edge ids must be 0..{expected}, found {found}")]
    EdgeIdRange { expected: usize, found: EdgeId },
    #[error("vertex id {0} out of range")]
    VertexRange(VertexId),
    #[error("edge {0} is a loop")]
    Loop(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    Empty,
    #[error("Euler check failed: V - E + F = {v} - {e} + {f} != 2")]
    Euler { v: usize, e: usize, f: usize },
    #[error("terminal set has odd size {0}")]
    OddTerminals(usize),
    #[error("duplicate terminal {0}")]
    DuplicateTerminal(VertexId),
}

/// A face: the orbit of darts under [`PlaneMultigraph::face_next`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    pub darts: Vec<DartId>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }
}

/// An immutable, validated plane multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMultigraph {
    rotations: Vec<Vec<DartId>>,
    edges: Vec<[DartId; 2]>,
    dart_edge: Vec<EdgeId>,
    dart_end: Vec<End>,
    dart_vertex: Vec<VertexId>,
    dart_pos: Vec<usize>,
    terminals: Option<Vec<VertexId>>,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
}

impl PlaneMultigraph {
    /// Builds a graph from explicit dart ids.
    ///
    /// `rotations[v]` lists the darts leaving `v` counterclockwise and
    /// `edges[e] = [tail, head]`. Dart ids must cover `0..2E` exactly.
    pub fn from_parts(
        rotations: Vec<Vec<DartId>>,
        edges: Vec<[DartId; 2]>,
        terminals: Option<Vec<VertexId>>,
    ) -> Result<Self, GraphError> {
        let n = rotations.len();
        let m = edges.len();
        if m == 0 {
            return Err(GraphError::Empty);
        }
        let darts = 2 * m;
        let mut dart_edge = vec![usize::MAX; darts];
        let mut dart_end = vec![End::Tail; darts];
        for (e, pair) in edges.iter().enumerate() {
            for (k, &d) in pair.iter().enumerate() {
                if d >= darts {
                    return Err(GraphError::DanglingDart(d));
                }
                if dart_edge[d] != usize::MAX {
                    return Err(GraphError::DuplicateDart(d));
                }
                dart_edge[d] = e;
                dart_end[d] = if k == 0 { End::Tail } else { End::Head };
            }
        }
        let mut dart_vertex = vec![usize::MAX; darts];
        let mut dart_pos = vec![0; darts];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= darts {
                    return Err(GraphError::DanglingDart(d));
                }
                if dart_vertex[d] != usize::MAX {
                    return Err(GraphError::DuplicateDart(d));
                }
                dart_vertex[d] = v;
                dart_pos[d] = i;
            }
        }
        if let Some(d) = dart_vertex.iter().position(|&v| v == usize::MAX) {
            return Err(GraphError::DanglingDart(d));
        }
        for (e, pair) in edges.iter().enumerate() {
            if dart_vertex[pair[0]] == dart_vertex[pair[1]] {
                return Err(GraphError::Loop(e));
            }
        }
        if let Some(t) = &terminals {
            let mut seen = vec![false; n];
            for &v in t {
                if v >= n {
                    return Err(GraphError::VertexRange(v));
                }
                if seen[v] {
                    return Err(GraphError::DuplicateTerminal(v));
                }
                seen[v] = true;
            }
            if t.len() % 2 == 1 {
                return Err(GraphError::OddTerminals(t.len()));
            }
        }

        let mut g = PlaneMultigraph {
            rotations,
            edges,
            dart_edge,
            dart_end,
            dart_vertex,
            dart_pos,
            terminals,
            faces: Vec::new(),
            dart_face: Vec::new(),
        };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        g.trace_faces();
        let (v, e, f) = (n, m, g.faces.len());
        if v + f != e + 2 {
            return Err(GraphError::Euler { v, e, f });
        }
        Ok(g)
    }

    /// Builds a graph with canonical dart ids from edge endpoint pairs and
    /// per-vertex counterclockwise lists of incident edge ids.
    ///
    /// Edge `i` gets darts `2i` (at `ends[i].0`) and `2i + 1` (at `ends[i].1`).
    pub fn from_edge_rotations(
        ends: &[(VertexId, VertexId)],
        rotations: &[Vec<EdgeId>],
        terminals: Option<Vec<VertexId>>,
    ) -> Result<Self, GraphError> {
        let mut rot = Vec::with_capacity(rotations.len());
        for (v, list) in rotations.iter().enumerate() {
            let mut r = Vec::with_capacity(list.len());
            for &e in list {
                let (a, b) = *ends.get(e).ok_or(GraphError::EdgeIdRange {
                    expected: ends.len(),
                    found: e,
                })?;
                if a == b {
                    return Err(GraphError::Loop(e));
                }
                if v == a {
                    r.push(2 * e);
                } else if v == b {
                    r.push(2 * e + 1);
                } else {
                    return Err(GraphError::DanglingDart(2 * e));
                }
            }
            rot.push(r);
        }
        let edges = (0..ends.len()).map(|e| [2 * e, 2 * e + 1]).collect();
        Self::from_parts(rot, edges, terminals)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &d in &self.rotations[v] {
                let w = self.head(d);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn trace_faces(&mut self) {
        let darts = self.dart_count();
        let mut dart_face = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = id;
                cycle.push(d);
                d = self.face_next(d);
                if d == start {
                    break;
                }
            }
            faces.push(Face { id, darts: cycle });
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_edge.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart(&self, d: DartId) -> Dart {
        Dart {
            id: d,
            edge: self.dart_edge[d],
            end: self.dart_end[d],
        }
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<DartId>] {
        &self.rotations
    }

    pub fn edge_darts(&self, e: EdgeId) -> [DartId; 2] {
        self.edges[e]
    }

    /// `(tail vertex, head vertex)` of an edge.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, b] = self.edges[e];
        (self.dart_vertex[a], self.dart_vertex[b])
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    pub fn reverse(&self, d: DartId) -> DartId {
        let [a, b] = self.edges[self.dart_edge[d]];
        if a == d {
            b
        } else {
            a
        }
    }

    /// The vertex a dart leaves from.
    pub fn tail(&self, d: DartId) -> VertexId {
        self.dart_vertex[d]
    }

    /// The vertex a dart points to.
    pub fn head(&self, d: DartId) -> VertexId {
        self.dart_vertex[self.reverse(d)]
    }

    /// Dart at `tail(d)`'s end of `e`, used to walk from a given vertex.
    pub fn dart_at(&self, e: EdgeId, v: VertexId) -> Option<DartId> {
        self.edges[e]
            .into_iter()
            .find(|&d| self.dart_vertex[d] == v)
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn next_ccw(&self, d: DartId) -> DartId {
        let rot = &self.rotations[self.dart_vertex[d]];
        rot[(self.dart_pos[d] + 1) % rot.len()]
    }

    pub fn prev_ccw(&self, d: DartId) -> DartId {
        let rot = &self.rotations[self.dart_vertex[d]];
        rot[(self.dart_pos[d] + rot.len() - 1) % rot.len()]
    }

    pub fn face_next(&self, d: DartId) -> DartId {
        self.next_ccw(self.reverse(d))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn face_of(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    /// Vertices around a face, `v_i = tail(darts[i])`.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].darts.iter().map(|&d| self.tail(d)).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.rotations.iter().all(|r| r.len() == k)
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.rotations[v].iter().map(|&d| self.dart_edge[d])
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.rotations[u]
            .iter()
            .filter(|&&d| self.head(d) == v)
            .map(|&d| self.dart_edge[d])
            .collect()
    }

    /// Explicit terminal list as given, or `None` for the default `T = V`.
    pub fn explicit_terminals(&self) -> Option<&[VertexId]> {
        self.terminals.as_deref()
    }

    pub fn terminals(&self) -> Vec<VertexId> {
        match &self.terminals {
            Some(t) => t.clone(),
            None => (0..self.vertex_count()).collect(),
        }
    }

    pub fn terminal_flags(&self) -> Vec<bool> {
        let mut flags = vec![self.terminals.is_none(); self.vertex_count()];
        if let Some(t) = &self.terminals {
            for &v in t {
                flags[v] = true;
            }
        }
        flags
    }

    /// Same embedding with a different terminal set.
    pub fn with_terminals(&self, terminals: Option<Vec<VertexId>>) -> Result<Self, GraphError> {
        Self::from_parts(self.rotations.clone(), self.edges.clone(), terminals)
    }

    /// Neighbor multiplicities: `(neighbor, number of parallel edges)` sorted by neighbor.
    pub fn weighted_neighbors(&self, v: VertexId) -> Vec<(VertexId, usize)> {
        let mut heads: Vec<VertexId> = self.rotations[v].iter().map(|&d| self.head(d)).collect();
        heads.sort_unstable();
        let mut out: Vec<(VertexId, usize)> = Vec::new();
        for w in heads {
            match out.last_mut() {
                Some((x, c)) if *x == w => *c += 1,
                _ => out.push((w, 1)),
            }
        }
        out
    }

    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count() as isize - self.edge_count() as isize + self.face_count() as isize
    }

    pub fn serialize_text(&self) -> String {
        format::to_text(self)
    }

    pub fn to_file(&self) -> GraphFile {
        format::to_file(self)
    }

    pub fn serialize_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph file is always serializable")
    }
}

/// Convenience free function mirroring [`PlaneMultigraph::faces`].
pub fn trace_faces(g: &PlaneMultigraph) -> Vec<Face> {
    g.faces().to_vec()
}
