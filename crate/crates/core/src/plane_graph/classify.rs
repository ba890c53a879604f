//! Face bigness, dangerous faces and multigons, and f-incidence.
//!
//! Every face of degree at least three is described by its boundary slots.
//! Slot `i` covers the boundary edge from `v_i` to `v_{i+1}`; across it lies
//! either a multigon (when the edge belongs to one) or a single face. Two
//! neighbors are f-incident when they sit in cyclically consecutive slots
//! of `f`. Every count below is taken over slots, so a neighbor reached
//! through two boundary edges counts twice.

use super::multigon::{find_multigons, Multigon, MultigonId};
use super::{DartId, EdgeId, FaceId, PlaneMultigraph, VertexId};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum Neighbor {
    Face(FaceId),
    Multigon(MultigonId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundarySlot {
    pub dart: DartId,
    pub edge: EdgeId,
    /// Tail of `dart`, i.e. `v_i`.
    pub vertex: VertexId,
    pub neighbor: Neighbor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceInfo {
    pub face: FaceId,
    pub degree: usize,
    pub slots: Vec<BoundarySlot>,
    /// Number of slots whose neighbor is a face of degree at least four.
    pub bigness: usize,
    pub dangerous: bool,
}

impl FaceInfo {
    pub fn neighbor(&self, i: usize) -> Neighbor {
        self.slots[i % self.degree].neighbor
    }

    pub fn prev_slot(&self, i: usize) -> usize {
        (i + self.degree - 1) % self.degree
    }

    pub fn next_slot(&self, i: usize) -> usize {
        (i + 1) % self.degree
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.slots.iter().map(|s| s.vertex)
    }
}

/// Two neighbors of `face` that occupy consecutive slots, meeting at `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FIncidence {
    pub face: FaceId,
    pub vertex: VertexId,
    pub left: Neighbor,
    pub right: Neighbor,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("multigon {0} is a closed bundle; classification needs linear multigons")]
    CyclicMultigon(MultigonId),
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub multigons: Vec<Multigon>,
    pub edge_multigon: Vec<Option<MultigonId>>,
    /// Indexed by face id; `None` for bigon faces.
    pub faces: Vec<Option<FaceInfo>>,
    pub multigon_dangerous: Vec<bool>,
    pub f_incidences: Vec<FIncidence>,
}

pub fn classify(g: &PlaneMultigraph) -> Result<Classification, ClassifyError> {
    let multigons = find_multigons(g);
    if let Some(m) = multigons.iter().find(|m| !m.linear) {
        return Err(ClassifyError::CyclicMultigon(m.id));
    }
    let mut edge_multigon = vec![None; g.edge_count()];
    let mut in_bigon = vec![false; g.face_count()];
    for m in &multigons {
        for &e in &m.edges {
            edge_multigon[e] = Some(m.id);
        }
        for &b in &m.bigons {
            in_bigon[b] = true;
        }
    }

    let mut faces: Vec<Option<FaceInfo>> = Vec::with_capacity(g.face_count());
    for face in g.faces() {
        if in_bigon[face.id] {
            faces.push(None);
            continue;
        }
        let slots = face
            .darts
            .iter()
            .map(|&d| {
                let edge = g.edge_of(d);
                let neighbor = match edge_multigon[edge] {
                    Some(m) => Neighbor::Multigon(m),
                    None => Neighbor::Face(g.face_of(g.reverse(d))),
                };
                BoundarySlot {
                    dart: d,
                    edge,
                    vertex: g.tail(d),
                    neighbor,
                }
            })
            .collect();
        faces.push(Some(FaceInfo {
            face: face.id,
            degree: face.degree(),
            slots,
            bigness: 0,
            dangerous: false,
        }));
    }

    let mut c = Classification {
        multigon_dangerous: vec![false; multigons.len()],
        multigons,
        edge_multigon,
        faces,
        f_incidences: Vec::new(),
    };

    let bigness: Vec<usize> = (0..c.faces.len())
        .map(|f| match &c.faces[f] {
            Some(info) => info
                .slots
                .iter()
                .filter(|s| matches!(s.neighbor, Neighbor::Face(h) if c.degree(h) >= 4))
                .count(),
            None => 0,
        })
        .collect();
    let dangerous: Vec<bool> = (0..c.faces.len())
        .map(|f| match &c.faces[f] {
            Some(info) => {
                let t = c.count_order(f, 3);
                let b = c.count_order(f, 2);
                match info.degree {
                    5 => (t == 2 && b >= 1) || (t == 1 && b >= 3),
                    7 => t == 3 && b == 3,
                    _ => false,
                }
            }
            None => false,
        })
        .collect();
    for (f, info) in c.faces.iter_mut().enumerate() {
        if let Some(info) = info {
            info.bigness = bigness[f];
            info.dangerous = dangerous[f];
        }
    }

    for m in 0..c.multigons.len() {
        c.multigon_dangerous[m] = match c.multigons[m].order() {
            4 => true,
            3 => c.trigon_is_dangerous(m),
            _ => false,
        };
    }

    let mut inc = Vec::new();
    for info in c.faces.iter().flatten() {
        for i in 0..info.degree {
            let j = info.next_slot(i);
            inc.push(FIncidence {
                face: info.face,
                vertex: info.slots[j].vertex,
                left: info.slots[i].neighbor,
                right: info.slots[j].neighbor,
            });
        }
    }
    c.f_incidences = inc;
    Ok(c)
}

impl Classification {
    pub fn face(&self, f: FaceId) -> Option<&FaceInfo> {
        self.faces.get(f).and_then(Option::as_ref)
    }

    /// Faces of degree at least three, in id order.
    pub fn charged_faces(&self) -> impl Iterator<Item = &FaceInfo> {
        self.faces.iter().flatten()
    }

    /// Degree of a face; bigon faces report 2.
    pub fn degree(&self, f: FaceId) -> usize {
        self.face(f).map_or(2, |i| i.degree)
    }

    pub fn bigness(&self, f: FaceId) -> usize {
        self.face(f).map_or(0, |i| i.bigness)
    }

    pub fn is_dangerous_face(&self, f: FaceId) -> bool {
        self.face(f).is_some_and(|i| i.dangerous)
    }

    pub fn order(&self, m: MultigonId) -> usize {
        self.multigons[m].order()
    }

    /// The two faces bounding a multigon.
    pub fn sides(&self, m: MultigonId) -> [FaceId; 2] {
        self.multigons[m]
            .sides
            .expect("classified multigons are linear")
    }

    /// The side of `m` other than `f` (or `f` itself if both sides coincide).
    pub fn other_side(&self, m: MultigonId, f: FaceId) -> FaceId {
        let [a, b] = self.sides(m);
        if a == f {
            b
        } else {
            a
        }
    }

    /// Number of slots of `f` holding a multigon of the given order.
    pub fn count_order(&self, f: FaceId, order: usize) -> usize {
        self.face(f).map_or(0, |info| {
            info.slots
                .iter()
                .filter(|s| matches!(s.neighbor, Neighbor::Multigon(m) if self.order(m) == order))
                .count()
        })
    }

    pub fn count_multigons(&self, f: FaceId) -> usize {
        self.face(f).map_or(0, |info| {
            info.slots
                .iter()
                .filter(|s| matches!(s.neighbor, Neighbor::Multigon(_)))
                .count()
        })
    }

    pub fn count_single_edges(&self, f: FaceId) -> usize {
        self.face(f).map_or(0, |info| info.degree) - self.count_multigons(f)
    }

    /// Slots of `f` that hold the given neighbor.
    pub fn slots_of(&self, f: FaceId, n: Neighbor) -> Vec<usize> {
        self.face(f).map_or(Vec::new(), |info| {
            (0..info.degree)
                .filter(|&i| info.slots[i].neighbor == n)
                .collect()
        })
    }

    pub fn f_incident(&self, f: FaceId, a: Neighbor, b: Neighbor) -> bool {
        let Some(info) = self.face(f) else {
            return false;
        };
        (0..info.degree).any(|i| {
            let (x, y) = (info.neighbor(i), info.neighbor(i + 1));
            (x == a && y == b) || (x == b && y == a)
        })
    }

    /// Neighbors occupying slots next to a slot of `m` in `f`, excluding `m` itself.
    pub fn f_incident_neighbors(&self, f: FaceId, m: MultigonId) -> Vec<Neighbor> {
        let Some(info) = self.face(f) else {
            return Vec::new();
        };
        let me = Neighbor::Multigon(m);
        let mut out = Vec::new();
        for i in self.slots_of(f, me) {
            for j in [info.prev_slot(i), info.next_slot(i)] {
                let n = info.neighbor(j);
                if n != me {
                    out.push(n);
                }
            }
        }
        out
    }

    fn trigon_is_dangerous(&self, t: MultigonId) -> bool {
        let me = Neighbor::Multigon(t);
        let mut sides = self.sides(t).to_vec();
        sides.dedup();
        sides.into_iter().any(|f| {
            let Some(info) = self.face(f).filter(|i| i.dangerous) else {
                return false;
            };
            self.slots_of(f, me).into_iter().any(|i| {
                let around = [
                    info.neighbor(info.prev_slot(i)),
                    info.neighbor(info.next_slot(i)),
                ];
                let multi = around
                    .iter()
                    .filter(|n| matches!(n, Neighbor::Multigon(x) if *x != t))
                    .count();
                match info.degree {
                    5 => multi >= 1,
                    7 => multi == 2,
                    _ => false,
                }
            })
        })
    }

    /// Face-to-neighbor adjacency with slot multiplicity, sorted.
    pub fn adjacency(&self) -> Vec<(FaceId, Neighbor, usize)> {
        let mut out: Vec<(FaceId, Neighbor, usize)> = Vec::new();
        for info in self.charged_faces() {
            let mut ns: Vec<Neighbor> = info.slots.iter().map(|s| s.neighbor).collect();
            ns.sort();
            for n in ns {
                match out.last_mut() {
                    Some((f, x, c)) if *f == info.face && *x == n => *c += 1,
                    _ => out.push((info.face, n, 1)),
                }
            }
        }
        out
    }

    /// Pairs of distinct multigons sharing a vertex.
    pub fn incident_multigon_pairs(&self) -> Vec<(MultigonId, MultigonId)> {
        let ms = &self.multigons;
        let mut out = Vec::new();
        for a in 0..ms.len() {
            for b in a + 1..ms.len() {
                if ms[a].shares_vertex(&ms[b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether `e` lies in a multigon.
    pub fn in_multigon(&self, e: EdgeId) -> bool {
        self.edge_multigon[e].is_some()
    }
}
