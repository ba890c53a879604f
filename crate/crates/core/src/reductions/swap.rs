//! The v1…vk swap: delete the edges v2v3, v4v5, …, vkv1 and draw the edges
//! v1v2, v3v4, … inside declared faces.

use crate::cuts::{all_cut_sizes, CutError};
use crate::plane_graph::{DartId, EdgeId, FaceId, GraphError, PlaneMultigraph, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwapSpec {
    pub vertices: Vec<VertexId>,
    /// Face through which each new edge `v_{2i-1} v_{2i}` is drawn. When
    /// absent, the first face (by id) with both endpoints on its boundary.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchors: Option<Vec<FaceId>>,
    /// Edge ids of `v2v3, v4v5, …, vkv1`. When absent, the copy bounding an
    /// anchor face with the smallest dart is taken.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<Vec<EdgeId>>,
}

impl SwapSpec {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        SwapSpec {
            vertices,
            anchors: None,
            removed: None,
        }
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    /// `(v_{2i-1}, v_{2i})` for each new edge.
    pub fn new_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.vertices.chunks(2).map(|p| (p[0], p[1])).collect()
    }

    /// `(v_{2i}, v_{2i+1})` for each removed edge, wrapping to `v1`.
    pub fn removed_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let k = self.k();
        (0..k / 2)
            .map(|i| (self.vertices[2 * i + 1], self.vertices[(2 * i + 2) % k]))
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwapError {
    #[error("unsupported k = {0}; expected 4, 6 or 8")]
    UnsupportedK(usize),
    #[error("vertex {0} out of range")]
    VertexRange(VertexId),
    #[error("vertex {0} repeats in the sequence")]
    RepeatedVertex(VertexId),
    #[error("expected {expected} anchor faces, got {found}")]
    AnchorCount { expected: usize, found: usize },
    #[error("face {0} out of range")]
    FaceRange(FaceId),
    #[error("face {face} does not have both {u} and {v} on its boundary")]
    NotOnFace {
        face: FaceId,
        u: VertexId,
        v: VertexId,
    },
    #[error("no face contains both {u} and {v}")]
    NoCommonFace { u: VertexId, v: VertexId },
    #[error("new edge {u}-{v} cannot be drawn inside face {face} after the earlier insertions")]
    NotDrawable {
        face: FaceId,
        u: VertexId,
        v: VertexId,
    },
    #[error("expected {expected} removed edges, got {found}")]
    RemovedCount { expected: usize, found: usize },
    #[error("edge {edge} does not join {u} and {v}")]
    WrongRemovedEdge {
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
    },
    #[error("no edge joins {u} and {v}")]
    MissingEdge { u: VertexId, v: VertexId },
    #[error("edge {0} is removed twice")]
    RemovedTwice(EdgeId),
    #[error("swapped graph is invalid: {0}")]
    Graph(#[from] GraphError),
}

/// Fully resolved spec plus the graph after insertion, before deletion.
struct Drawn {
    anchors: Vec<FaceId>,
    removed: Vec<EdgeId>,
    inserted: PlaneMultigraph,
}

fn on_face(g: &PlaneMultigraph, f: FaceId, v: VertexId) -> bool {
    g.face(f).darts.iter().any(|&d| g.tail(d) == v)
}

fn resolve_anchors(g: &PlaneMultigraph, spec: &SwapSpec) -> Result<Vec<FaceId>, SwapError> {
    let pairs = spec.new_pairs();
    match &spec.anchors {
        Some(a) => {
            if a.len() != pairs.len() {
                return Err(SwapError::AnchorCount {
                    expected: pairs.len(),
                    found: a.len(),
                });
            }
            for (&f, &(u, v)) in a.iter().zip(&pairs) {
                if f >= g.face_count() {
                    return Err(SwapError::FaceRange(f));
                }
                if !(on_face(g, f, u) && on_face(g, f, v)) {
                    return Err(SwapError::NotOnFace { face: f, u, v });
                }
            }
            Ok(a.clone())
        }
        None => pairs
            .iter()
            .map(|&(u, v)| {
                (0..g.face_count())
                    .find(|&f| on_face(g, f, u) && on_face(g, f, v))
                    .ok_or(SwapError::NoCommonFace { u, v })
            })
            .collect(),
    }
}

fn resolve_removed(
    g: &PlaneMultigraph,
    spec: &SwapSpec,
    anchors: &[FaceId],
) -> Result<Vec<EdgeId>, SwapError> {
    let pairs = spec.removed_pairs();
    let joins = |e: EdgeId, u: VertexId, v: VertexId| {
        let (a, b) = g.endpoints(e);
        (a == u && b == v) || (a == v && b == u)
    };
    let out: Vec<EdgeId> = match &spec.removed {
        Some(r) => {
            if r.len() != pairs.len() {
                return Err(SwapError::RemovedCount {
                    expected: pairs.len(),
                    found: r.len(),
                });
            }
            for (&e, &(u, v)) in r.iter().zip(&pairs) {
                if e >= g.edge_count() || !joins(e, u, v) {
                    return Err(SwapError::WrongRemovedEdge { edge: e, u, v });
                }
            }
            r.clone()
        }
        None => {
            let m = pairs.len();
            let mut out = Vec::with_capacity(m);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                // the removed edge v_{2i}v_{2i+1} sits between new edges i and i+1
                let near = [anchors[i], anchors[(i + 1) % m]];
                let copies = g.edges_between(u, v);
                let darts = |e: EdgeId| g.edge_darts(e).into_iter();
                let bounding = copies
                    .iter()
                    .flat_map(|&e| darts(e).map(move |d| (d, e)))
                    .filter(|&(d, e)| near.contains(&g.face_of(d)) && !out.contains(&e))
                    .min();
                let any = copies
                    .iter()
                    .flat_map(|&e| darts(e).map(move |d| (d, e)))
                    .filter(|&(_, e)| !out.contains(&e))
                    .min();
                let (_, e) = bounding.or(any).ok_or(SwapError::MissingEdge { u, v })?;
                out.push(e);
            }
            out
        }
    };
    let mut seen = BTreeSet::new();
    for &e in &out {
        if !seen.insert(e) {
            return Err(SwapError::RemovedTwice(e));
        }
    }
    Ok(out)
}

/// Inserts the new edges one by one. Each lands in a current face made of
/// darts that descend from its anchor face, at the corner with the smallest
/// incoming dart at each endpoint.
fn draw(g: &PlaneMultigraph, spec: &SwapSpec) -> Result<Drawn, SwapError> {
    let k = spec.k();
    if !matches!(k, 4 | 6 | 8) {
        return Err(SwapError::UnsupportedK(k));
    }
    let mut seen = BTreeSet::new();
    for &v in &spec.vertices {
        if v >= g.vertex_count() {
            return Err(SwapError::VertexRange(v));
        }
        if !seen.insert(v) {
            return Err(SwapError::RepeatedVertex(v));
        }
    }
    let anchors = resolve_anchors(g, spec)?;
    let removed = resolve_removed(g, spec, &anchors)?;

    let mut label: Vec<FaceId> = (0..g.dart_count()).map(|d| g.face_of(d)).collect();
    let mut h = g.clone();
    for (&(u, v), &anchor) in spec.new_pairs().iter().zip(&anchors) {
        let corner = |face: &crate::plane_graph::Face, x: VertexId| {
            face.darts.iter().copied().filter(|&d| h.head(d) == x).min()
        };
        let spot = h
            .faces()
            .iter()
            .filter(|f| f.darts.iter().all(|&d| label[d] == anchor))
            .find_map(|f| Some((corner(f, u)?, corner(f, v)?)))
            .ok_or(SwapError::NotDrawable { face: anchor, u, v })?;
        let (du, dv) = (h.reverse(spot.0), h.reverse(spot.1));
        let e = h.edge_count();
        let (nu, nv) = (2 * e, 2 * e + 1);
        let mut rot = h.rotations().to_vec();
        for (x, after, nd) in [(u, du, nu), (v, dv, nv)] {
            let p = rot[x].iter().position(|&d| d == after).unwrap();
            rot[x].insert(p + 1, nd);
        }
        let mut edges: Vec<[DartId; 2]> = (0..e).map(|i| h.edge_darts(i)).collect();
        edges.push([nu, nv]);
        h = PlaneMultigraph::from_parts(rot, edges, g.explicit_terminals().map(<[_]>::to_vec))?;
        label.extend([anchor, anchor]);
    }
    Ok(Drawn {
        anchors,
        removed,
        inserted: h,
    })
}

/// Checks that the swap is well defined: k ∈ {4, 6, 8}, distinct vertices,
/// removed edges present, and each new edge drawable inside its face.
pub fn validate_swap(g: &PlaneMultigraph, spec: &SwapSpec) -> Result<(), SwapError> {
    draw(g, spec).map(|_| ())
}

#[derive(Debug, Clone, Serialize)]
pub struct SwapResult {
    #[serde(skip)]
    pub graph: PlaneMultigraph,
    /// Spec with anchors and removed edges filled in.
    pub spec: SwapSpec,
    /// `origin[i]` is the edge of G behind edge `i` of the result, `None` for new edges.
    pub origin: Vec<Option<EdgeId>>,
    /// Ids in the result of the new edges, in pair order.
    pub new_edges: Vec<EdgeId>,
}

/// Applies a swap. Surviving edges keep their relative order; new edges are
/// appended. Dart ids are renumbered canonically (edge `i` owns `2i`, `2i+1`).
pub fn apply_swap(g: &PlaneMultigraph, spec: &SwapSpec) -> Result<SwapResult, SwapError> {
    let drawn = draw(g, spec)?;
    let h = &drawn.inserted;
    let old_edges = g.edge_count();
    let keep: Vec<EdgeId> = (0..h.edge_count())
        .filter(|e| !drawn.removed.contains(e))
        .collect();
    let mut new_dart = vec![usize::MAX; h.dart_count()];
    for (i, &e) in keep.iter().enumerate() {
        let [a, b] = h.edge_darts(e);
        new_dart[a] = 2 * i;
        new_dart[b] = 2 * i + 1;
    }
    let rot: Vec<Vec<DartId>> = h
        .rotations()
        .iter()
        .map(|r| {
            r.iter()
                .filter(|&&d| new_dart[d] != usize::MAX)
                .map(|&d| new_dart[d])
                .collect()
        })
        .collect();
    let edges = (0..keep.len()).map(|i| [2 * i, 2 * i + 1]).collect();
    let graph = PlaneMultigraph::from_parts(rot, edges, g.explicit_terminals().map(<[_]>::to_vec))?;
    let origin: Vec<Option<EdgeId>> = keep.iter().map(|&e| (e < old_edges).then_some(e)).collect();
    let new_edges = (0..keep.len()).filter(|&i| origin[i].is_none()).collect();
    Ok(SwapResult {
        graph,
        spec: SwapSpec {
            vertices: spec.vertices.clone(),
            anchors: Some(drawn.anchors),
            removed: Some(drawn.removed),
        },
        origin,
        new_edges,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutPerturbation {
    pub k: usize,
    pub bound: usize,
    pub subsets: usize,
    pub max_abs_delta: usize,
    /// Up to eight sides attaining `max_abs_delta`, by ascending mask.
    pub extremal: Vec<Vec<VertexId>>,
    pub violations: usize,
    /// Minimum odd cut of the swapped graph.
    pub min_odd_after: Option<usize>,
}

/// Compares every cut of `g` and `swapped` (same vertex set).
pub fn check_swap_cut_property(
    g: &PlaneMultigraph,
    swapped: &PlaneMultigraph,
    k: usize,
    cap: usize,
) -> Result<CutPerturbation, CutError> {
    let before = all_cut_sizes(g, cap)?;
    let after = all_cut_sizes(swapped, cap)?;
    let n = g.vertex_count();
    let bound = if k == 8 { 4 } else { 2 };
    let mut max = 0usize;
    let mut extremal = Vec::new();
    let mut violations = 0;
    let mut min_odd: Option<usize> = None;
    let full = before.len() - 1;
    for r in 0..full {
        let d = before[r].abs_diff(after[r]) as usize;
        if d > bound {
            violations += 1;
        }
        if d > max {
            max = d;
            extremal.clear();
        }
        if d == max && extremal.len() < 8 {
            extremal.push(r);
        }
        let mask = (r as u64) << 1 | 1;
        if mask.count_ones() % 2 == 1 && n.is_multiple_of(2) {
            let s = after[r] as usize;
            min_odd = Some(min_odd.map_or(s, |m| m.min(s)));
        }
    }
    let side = |r: usize| -> Vec<VertexId> {
        let mask = (r as u64) << 1 | 1;
        (0..n).filter(|&v| mask >> v & 1 == 1).collect()
    };
    Ok(CutPerturbation {
        k,
        bound,
        subsets: full,
        max_abs_delta: max,
        extremal: extremal.into_iter().map(side).collect(),
        violations,
        min_odd_after: if n % 2 == 1 { Some(0) } else { min_odd },
    })
}

/// Swap specs found by depth-first search: `v1` ascending, each new pair on
/// a common face, each removed pair joined by an edge. Only specs that
/// apply cleanly (drawable, result connected) are returned, without duplicates.
pub fn enumerate_swaps(g: &PlaneMultigraph, k: usize, limit: usize) -> Vec<SwapSpec> {
    let n = g.vertex_count();
    let mut share_face = vec![vec![false; n]; n];
    for f in 0..g.face_count() {
        let vs: BTreeSet<VertexId> = g.face_vertices(f).into_iter().collect();
        for &a in &vs {
            for &b in &vs {
                share_face[a][b] = true;
            }
        }
    }
    let adjacent = |a: VertexId, b: VertexId| !g.edges_between(a, b).is_empty();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut seq = Vec::with_capacity(k);

    fn dfs(
        seq: &mut Vec<VertexId>,
        k: usize,
        n: usize,
        ok_next: &dyn Fn(&[VertexId], VertexId) -> bool,
        emit: &mut dyn FnMut(&[VertexId]) -> bool,
    ) -> bool {
        if seq.len() == k {
            return emit(seq);
        }
        for v in 0..n {
            if seq.contains(&v) || !ok_next(seq, v) {
                continue;
            }
            seq.push(v);
            let go_on = dfs(seq, k, n, ok_next, emit);
            seq.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    let ok_next = |seq: &[VertexId], v: VertexId| -> bool {
        let Some(&last) = seq.last() else {
            return true;
        };
        let step_ok = if seq.len() % 2 == 1 {
            share_face[last][v]
        } else {
            adjacent(last, v)
        };
        step_ok && (seq.len() + 1 != k || adjacent(v, seq[0]))
    };
    let mut emit = |s: &[VertexId]| -> bool {
        let spec = SwapSpec::new(s.to_vec());
        if apply_swap(g, &spec).is_ok() && seen.insert(s.to_vec()) {
            out.push(spec);
        }
        out.len() < limit
    };
    if k >= 2 {
        dfs(&mut seq, k, n, &ok_next, &mut emit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::{min_odd_cut, DEFAULT_CUT_CAP};
    use crate::workbench::{generate, InstanceSpec};

    fn multiplicities(g: &PlaneMultigraph) -> Vec<((VertexId, VertexId), usize)> {
        let mut m = std::collections::BTreeMap::new();
        for e in 0..g.edge_count() {
            let (a, b) = g.endpoints(e);
            *m.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }

    #[test]
    fn dk4_four_swap() {
        let dk4 = generate(&InstanceSpec::Dk4).unwrap();
        let spec = SwapSpec::new(vec![0, 1, 2, 3]);
        validate_swap(&dk4, &spec).unwrap();
        let out = apply_swap(&dk4, &spec).unwrap();
        let g = &out.graph;
        assert!(g.is_regular(6));
        assert_eq!(g.euler_characteristic(), 2);
        assert_eq!(
            multiplicities(g),
            vec![
                ((0, 1), 3),
                ((0, 2), 2),
                ((0, 3), 1),
                ((1, 2), 1),
                ((1, 3), 2),
                ((2, 3), 3)
            ]
        );
        assert_eq!(min_odd_cut(g, DEFAULT_CUT_CAP).unwrap().min_odd.size, 6);
        let rep = check_swap_cut_property(&dk4, g, 4, DEFAULT_CUT_CAP).unwrap();
        assert_eq!((rep.max_abs_delta, rep.violations), (2, 0));
    }

    #[test]
    fn rejects_bad_specs() {
        let dk4 = generate(&InstanceSpec::Dk4).unwrap();
        let ten = SwapSpec::new((0..10).collect());
        assert_eq!(validate_swap(&dk4, &ten), Err(SwapError::UnsupportedK(10)));
        let p = generate(&InstanceSpec::DoubledPrism(3)).unwrap();
        // 1 and 5 are not adjacent in the prism
        let spec = SwapSpec::new(vec![0, 1, 5, 2]);
        assert!(matches!(
            validate_swap(&p, &spec),
            Err(SwapError::MissingEdge { .. })
        ));
        let mut spec = SwapSpec::new(vec![0, 1, 2, 3]);
        spec.removed = Some(vec![0, 1]);
        assert!(matches!(
            validate_swap(&dk4, &spec),
            Err(SwapError::WrongRemovedEdge { .. })
        ));
    }

    #[test]
    fn six_swap_on_dq3() {
        let dq3 = generate(&InstanceSpec::Dq3).unwrap();
        let specs = enumerate_swaps(&dq3, 6, 5);
        assert!(!specs.is_empty());
        for spec in specs {
            let out = apply_swap(&dq3, &spec).unwrap();
            assert!(out.graph.is_regular(6));
            let rep = check_swap_cut_property(&dq3, &out.graph, 6, DEFAULT_CUT_CAP).unwrap();
            assert_eq!(rep.violations, 0);
        }
    }

    #[test]
    fn untouched_sides_keep_their_size() {
        let p4 = generate(&InstanceSpec::DoubledPrism(4)).unwrap();
        let spec = enumerate_swaps(&p4, 4, 1).remove(0);
        let out = apply_swap(&p4, &spec).unwrap();
        let before = all_cut_sizes(&p4, DEFAULT_CUT_CAP).unwrap();
        let after = all_cut_sizes(&out.graph, DEFAULT_CUT_CAP).unwrap();
        let touched: u64 = spec.vertices.iter().fold(0, |m, &v| m | 1 << v);
        let full = (1u64 << p4.vertex_count()) - 1;
        for r in 0..before.len() - 1 {
            let mask = (r as u64) << 1 | 1;
            // sides containing all or none of the swap vertices
            if mask & touched == 0 || mask & touched == touched || (full & !mask) & touched == 0 {
                assert_eq!(before[r], after[r]);
            }
        }
    }
}
