use super::{EdgeId, FaceId, PlaneMultigraph, VertexId};
use serde::Serialize;

pub type MultigonId = usize;

/// A maximal bundle of parallel edges glued together by bigon faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigon {
    pub id: MultigonId,
    /// Endpoints, smaller id first.
    pub endpoints: (VertexId, VertexId),
    /// Edges in the order the bigons chain them.
    pub edges: Vec<EdgeId>,
    /// `bigons[i]` lies between `edges[i]` and `edges[i + 1]`.
    pub bigons: Vec<FaceId>,
    /// `false` for the closed bundle of a two-vertex graph where every face is a bigon.
    pub linear: bool,
    /// The two non-bigon faces bounding a linear multigon, at `edges[0]` and
    /// at the last edge. `None` for a cyclic bundle.
    pub sides: Option<[FaceId; 2]>,
}

impl Multigon {
    pub fn order(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.endpoints.0 == v || self.endpoints.1 == v
    }

    pub fn shares_vertex(&self, other: &Multigon) -> bool {
        self.contains_vertex(other.endpoints.0) || self.contains_vertex(other.endpoints.1)
    }
}

fn bigon_edges(g: &PlaneMultigraph, f: FaceId) -> Option<(EdgeId, EdgeId)> {
    let face = g.face(f);
    if face.degree() != 2 {
        return None;
    }
    let (a, b) = (g.edge_of(face.darts[0]), g.edge_of(face.darts[1]));
    (a != b).then_some((a, b))
}

/// Detects every multigon, ordered by smallest member edge id.
pub fn find_multigons(g: &PlaneMultigraph) -> Vec<Multigon> {
    let m = g.edge_count();
    let mut adj: Vec<Vec<(EdgeId, FaceId)>> = vec![Vec::new(); m];
    for f in 0..g.face_count() {
        if let Some((a, b)) = bigon_edges(g, f) {
            adj[a].push((b, f));
            adj[b].push((a, f));
        }
    }

    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] || adj[start].is_empty() {
            continue;
        }
        // collect the component
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            for &(n, _) in &adj[comp[i]] {
                if !seen[n] {
                    seen[n] = true;
                    comp.push(n);
                }
            }
            i += 1;
        }
        let first = comp.iter().copied().filter(|&e| adj[e].len() == 1).min();
        let linear = first.is_some();
        let first = first.unwrap_or_else(|| *comp.iter().min().unwrap());

        let mut edges = vec![first];
        let mut bigons = Vec::new();
        let mut prev_face = None;
        let mut cur = first;
        loop {
            let step = adj[cur]
                .iter()
                .copied()
                .find(|&(_, f)| Some(f) != prev_face);
            match step {
                Some((next, f)) if next != first => {
                    bigons.push(f);
                    edges.push(next);
                    prev_face = Some(f);
                    cur = next;
                }
                Some((_, f)) => {
                    // closed bundle: the last bigon returns to the start edge
                    bigons.push(f);
                    break;
                }
                None => break,
            }
        }

        let sides = linear.then(|| {
            let outer = |e: EdgeId, inner: FaceId| {
                let [a, b] = g.edge_darts(e);
                let fa = g.face_of(a);
                if fa == inner {
                    g.face_of(b)
                } else {
                    fa
                }
            };
            let last = *edges.last().unwrap();
            [
                outer(first, bigons[0]),
                outer(last, *bigons.last().unwrap()),
            ]
        });
        let (u, v) = g.endpoints(first);
        out.push(Multigon {
            id: out.len(),
            endpoints: (u.min(v), u.max(v)),
            edges,
            bigons,
            linear,
            sides,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexabond_is_one_closed_bundle() {
        let ends = vec![(0, 1); 6];
        let rot = vec![(0..6).collect(), (0..6).rev().collect()];
        let g = PlaneMultigraph::from_edge_rotations(&ends, &rot, None).unwrap();
        let ms = find_multigons(&g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].order(), 6);
        assert!(!ms[0].linear);
        assert_eq!(ms[0].bigons.len(), 6);
    }
}
