//! Matchers for the structural lemmas. Each match records whether the
//! premise holds (always, for emitted matches) and whether the conclusion
//! holds, evaluated literally on the graph. A violated match is a
//! reducible configuration.

use super::swap::{validate_swap, SwapSpec};
use crate::cuts::min_odd_cut;
use crate::plane_graph::{
    classify, find_multigons, Classification, FaceId, FaceInfo, MultigonId, Neighbor,
    PlaneMultigraph, VertexId,
};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    #[serde(rename = "odd-cut")]
    OddCut,
    #[serde(rename = "multigon-order")]
    MultigonOrder,
    #[serde(rename = "face-quadragon")]
    FaceQuadragon,
    #[serde(rename = "face-trigon")]
    FaceTrigon,
    #[serde(rename = "3-face-trigon")]
    ThreeFaceTrigon,
    #[serde(rename = "3-face-23-bigon")]
    ThreeFaceTwoBigons,
    #[serde(rename = "trigon-2big")]
    TrigonTwoBig,
    #[serde(rename = "3-face-1-bigon")]
    ThreeFaceOneBigon,
    #[serde(rename = "35-face-bigon-trigon")]
    ThreeFiveFaces,
    #[serde(rename = "4-face-trigon")]
    FourFaceTrigon,
    #[serde(rename = "4-face-3-bigon")]
    FourFaceThreeBigons,
    #[serde(rename = "5-face-5-multi")]
    FiveFaceFiveMultigons,
    #[serde(rename = "6-face-23")]
    SixFaceTwoThree,
    #[serde(rename = "6-face-32")]
    SixFaceThreeTwo,
    #[serde(rename = "7-face-trigon")]
    SevenFaceTrigon,
    #[serde(rename = "8-face")]
    EightFace,
    #[serde(rename = "danger-A")]
    DangerA,
    #[serde(rename = "danger-B")]
    DangerB,
}

impl LemmaId {
    pub const ALL: [LemmaId; 18] = [
        LemmaId::OddCut,
        LemmaId::MultigonOrder,
        LemmaId::FaceQuadragon,
        LemmaId::FaceTrigon,
        LemmaId::ThreeFaceTrigon,
        LemmaId::ThreeFaceTwoBigons,
        LemmaId::TrigonTwoBig,
        LemmaId::ThreeFaceOneBigon,
        LemmaId::ThreeFiveFaces,
        LemmaId::FourFaceTrigon,
        LemmaId::FourFaceThreeBigons,
        LemmaId::FiveFaceFiveMultigons,
        LemmaId::SixFaceTwoThree,
        LemmaId::SixFaceThreeTwo,
        LemmaId::SevenFaceTrigon,
        LemmaId::EightFace,
        LemmaId::DangerA,
        LemmaId::DangerB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::OddCut => "odd-cut",
            LemmaId::MultigonOrder => "multigon-order",
            LemmaId::FaceQuadragon => "face-quadragon",
            LemmaId::FaceTrigon => "face-trigon",
            LemmaId::ThreeFaceTrigon => "3-face-trigon",
            LemmaId::ThreeFaceTwoBigons => "3-face-23-bigon",
            LemmaId::TrigonTwoBig => "trigon-2big",
            LemmaId::ThreeFaceOneBigon => "3-face-1-bigon",
            LemmaId::ThreeFiveFaces => "35-face-bigon-trigon",
            LemmaId::FourFaceTrigon => "4-face-trigon",
            LemmaId::FourFaceThreeBigons => "4-face-3-bigon",
            LemmaId::FiveFaceFiveMultigons => "5-face-5-multi",
            LemmaId::SixFaceTwoThree => "6-face-23",
            LemmaId::SixFaceThreeTwo => "6-face-32",
            LemmaId::SevenFaceTrigon => "7-face-trigon",
            LemmaId::EightFace => "8-face",
            LemmaId::DangerA => "danger-A",
            LemmaId::DangerB => "danger-B",
        }
    }

    /// Lemmas whose reduction has a coloring lifter; the rest are checked only.
    pub fn has_lifter(self) -> bool {
        matches!(
            self,
            LemmaId::OddCut
                | LemmaId::ThreeFaceTrigon
                | LemmaId::ThreeFaceTwoBigons
                | LemmaId::ThreeFaceOneBigon
                | LemmaId::ThreeFiveFaces
                | LemmaId::FourFaceTrigon
                | LemmaId::FourFaceThreeBigons
                | LemmaId::SixFaceTwoThree
                | LemmaId::SixFaceThreeTwo
                | LemmaId::EightFace
        )
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown lemma `{s}`"))
    }
}

/// Coarse grouping of elements by kind and face degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaFamily {
    #[serde(rename = "multigon")]
    Multigon,
    #[serde(rename = "3-face")]
    ThreeFace,
    #[serde(rename = "4-face")]
    FourFace,
    #[serde(rename = "5-face")]
    FiveFace,
    #[serde(rename = "≥6-face")]
    LargeFace,
}

impl LemmaFamily {
    pub fn of_face_degree(d: usize) -> Self {
        match d {
            0..=3 => LemmaFamily::ThreeFace,
            4 => LemmaFamily::FourFace,
            5 => LemmaFamily::FiveFace,
            _ => LemmaFamily::LargeFace,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigMatch {
    pub lemma: LemmaId,
    /// Faces involved, the face the lemma is about first.
    pub faces: Vec<FaceId>,
    pub multigons: Vec<MultigonId>,
    /// Named vertices of the configuration, in lemma order when it has one.
    pub vertices: Vec<VertexId>,
    pub premise: bool,
    pub conclusion: bool,
    /// Side of the cut, for `odd-cut`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut: Option<Vec<VertexId>>,
    /// Reducing swap, when the lemma has one and it is well defined here.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swap: Option<SwapSpec>,
    pub detail: String,
}

impl ConfigMatch {
    pub fn violated(&self) -> bool {
        self.premise && !self.conclusion
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub lemma: LemmaId,
    pub reason: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Catalog {
    pub matches: Vec<ConfigMatch>,
    pub skipped: Vec<Skipped>,
}

impl Catalog {
    pub fn violations(&self) -> impl Iterator<Item = &ConfigMatch> {
        self.matches.iter().filter(|m| m.violated())
    }
}

struct Ctx<'a> {
    g: &'a PlaneMultigraph,
    c: &'a Classification,
    out: Vec<ConfigMatch>,
}

fn base(lemma: LemmaId, conclusion: bool, detail: String) -> ConfigMatch {
    ConfigMatch {
        lemma,
        faces: Vec::new(),
        multigons: Vec::new(),
        vertices: Vec::new(),
        premise: true,
        conclusion,
        cut: None,
        swap: None,
        detail,
    }
}

fn multigon_at(n: Neighbor) -> Option<MultigonId> {
    match n {
        Neighbor::Multigon(m) => Some(m),
        Neighbor::Face(_) => None,
    }
}

impl Ctx<'_> {
    fn order_of(&self, n: Neighbor) -> usize {
        multigon_at(n).map_or(1, |m| self.c.order(m))
    }

    /// Face across a slot: the face itself, or the far side of a multigon.
    fn across(&self, f: FaceId, n: Neighbor) -> FaceId {
        match n {
            Neighbor::Face(x) => x,
            Neighbor::Multigon(m) => self.c.other_side(m, f),
        }
    }

    fn checked(&self, spec: SwapSpec) -> Option<SwapSpec> {
        validate_swap(self.g, &spec).ok().map(|_| spec)
    }

    /// Swap around a face: new edges in slots `s, s+2, …`, removed edges in
    /// the slots between, all drawn inside the face.
    fn face_swap(&self, info: &FaceInfo, s: usize) -> Option<SwapSpec> {
        let k = info.degree;
        let slot = |j: usize| &info.slots[(s + j) % k];
        self.checked(SwapSpec {
            vertices: (0..k).map(|j| slot(j).vertex).collect(),
            anchors: Some(vec![info.face; k / 2]),
            removed: Some((0..k / 2).map(|i| slot(2 * i + 1).edge).collect()),
        })
    }

    /// Swap `v1 v2 v3 v4` for a 3-face whose slot `j` runs `v1 → v2`. The
    /// face across slot `j + 2` (edge `v3 v1`) holds `v4`, the boundary
    /// neighbor of `v1` there other than `v3`.
    fn three_face_swap(&self, info: &FaceInfo, j: usize) -> (Vec<VertexId>, Option<SwapSpec>) {
        let g = self.g;
        let slot = |i: usize| &info.slots[(j + i) % 3];
        let (v1, v2, v3) = (slot(0).vertex, slot(1).vertex, slot(2).vertex);
        let far = self.across(info.face, slot(2).neighbor);
        let v4 = g.face(far).darts.iter().find_map(|&d| {
            let (a, b) = (g.tail(d), g.head(d));
            let w = if a == v1 {
                b
            } else if b == v1 {
                a
            } else {
                return None;
            };
            (w != v3 && w != v2).then_some((w, g.edge_of(d)))
        });
        let Some((v4, e41)) = v4 else {
            return (vec![v1, v2, v3], None);
        };
        let spec = self.checked(SwapSpec {
            vertices: vec![v1, v2, v3, v4],
            anchors: Some(vec![info.face, far]),
            removed: Some(vec![slot(1).edge, e41]),
        });
        (vec![v1, v2, v3, v4], spec)
    }

    fn push(&mut self, m: ConfigMatch) {
        self.out.push(m);
    }

    fn face_lemmas(&mut self) {
        let c = self.c;
        for info in c.charged_faces() {
            let f = info.face;
            let d = info.degree;
            let seen_multi = {
                let mut v: Vec<MultigonId> = info
                    .slots
                    .iter()
                    .filter_map(|s| multigon_at(s.neighbor))
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            for &m in &seen_multi {
                match c.order(m) {
                    4 => {
                        let ok = info.bigness >= 5;
                        let mut x = base(
                            LemmaId::FaceQuadragon,
                            ok,
                            format!("face {f} is {}-big", info.bigness),
                        );
                        x.faces = vec![f];
                        x.multigons = vec![m];
                        self.push(x);
                    }
                    3 => {
                        let singles = c.count_single_edges(f);
                        let mut x = base(
                            LemmaId::FaceTrigon,
                            singles >= 1,
                            format!("face {f} has {singles} single-edge slots"),
                        );
                        x.faces = vec![f];
                        x.multigons = vec![m];
                        self.push(x);
                    }
                    _ => {}
                }
            }
            let bigons = c.count_order(f, 2);
            let trigons = c.count_order(f, 3);
            let multis = c.count_multigons(f);
            match d {
                3 => self.three_face(info, bigons, multis),
                4 => {
                    for (j, s) in info.slots.iter().enumerate() {
                        if self.order_of(s.neighbor) == 3 {
                            let mut x = base(
                                LemmaId::FourFaceTrigon,
                                multis == 1,
                                format!("4-face {f} has {multis} multigon slots"),
                            );
                            x.faces = vec![f];
                            x.multigons = vec![multigon_at(s.neighbor).unwrap()];
                            x.vertices = info.vertices().collect();
                            x.swap = self.face_swap(info, j);
                            self.push(x);
                        }
                    }
                    if bigons >= 3 {
                        let mut x = base(
                            LemmaId::FourFaceThreeBigons,
                            false,
                            format!("4-face {f} has {bigons} bigons"),
                        );
                        x.faces = vec![f];
                        // three consecutive bigon slots: new edges in the outer two
                        let start = (0..4)
                            .find(|&j| (0..3).all(|i| self.order_of(info.neighbor(j + i)) == 2));
                        if let Some(j) = start {
                            x.vertices = (0..4).map(|i| info.slots[(j + i) % 4].vertex).collect();
                            x.swap = self.face_swap(info, j);
                        }
                        self.push(x);
                    }
                }
                5 if multis == 5 => {
                    let ok = info.slots.iter().all(|s| {
                        let m = multigon_at(s.neighbor).unwrap();
                        c.order(m) == 2 && c.bigness(c.other_side(m, f)) >= 4
                    });
                    let mut x = base(
                        LemmaId::FiveFaceFiveMultigons,
                        ok,
                        format!("5-face {f} with 5 multigon slots"),
                    );
                    x.faces = vec![f];
                    x.multigons = seen_multi.clone();
                    self.push(x);
                }
                6 if (1..=2).contains(&bigons) && trigons == 3 => {
                    let mut x = base(
                        LemmaId::SixFaceTwoThree,
                        false,
                        format!("6-face {f}: {bigons} bigons, 3 trigons"),
                    );
                    x.faces = vec![f];
                    x.multigons = seen_multi.clone();
                    let start = (0..6)
                        .find(|&j| (0..3).all(|i| self.order_of(info.neighbor(j + 2 * i)) == 3));
                    if let Some(j) = start {
                        x.vertices = (0..6).map(|i| info.slots[(j + i) % 6].vertex).collect();
                        x.swap = self.face_swap(info, j);
                    }
                    self.push(x);
                }
                6 if bigons == 3 && trigons == 2 => {
                    let mut x = base(
                        LemmaId::SixFaceThreeTwo,
                        false,
                        format!("6-face {f}: 3 bigons, 2 trigons"),
                    );
                    x.faces = vec![f];
                    x.multigons = seen_multi.clone();
                    // the single edge closes the swap as v6 v1
                    if let Some(s) = (0..6).find(|&j| self.order_of(info.neighbor(j)) == 1) {
                        let j = (s + 1) % 6;
                        x.vertices = (0..6).map(|i| info.slots[(j + i) % 6].vertex).collect();
                        x.swap = self.face_swap(info, j);
                    }
                    self.push(x);
                }
                8 if bigons == 3 && trigons == 4 => {
                    let mut x = base(
                        LemmaId::EightFace,
                        false,
                        format!("8-face {f}: 3 bigons, 4 trigons"),
                    );
                    x.faces = vec![f];
                    x.multigons = seen_multi.clone();
                    let start = (0..8)
                        .find(|&j| (0..4).all(|i| self.order_of(info.neighbor(j + 2 * i)) == 3));
                    if let Some(j) = start {
                        x.vertices = (0..8).map(|i| info.slots[(j + i) % 8].vertex).collect();
                        x.swap = self.face_swap(info, j);
                    }
                    self.push(x);
                }
                _ => {}
            }
        }
    }

    fn three_face(&mut self, info: &FaceInfo, bigons: usize, multis: usize) {
        let c = self.c;
        let f = info.face;
        for j in 0..3 {
            let n = info.neighbor(j);
            let Some(t) = multigon_at(n).filter(|&m| c.order(m) == 3) else {
                continue;
            };
            let others_big = [1, 2].iter().all(|&i| match info.neighbor(j + i) {
                Neighbor::Face(x) => c.bigness(x) >= 5,
                Neighbor::Multigon(_) => false,
            });
            let far = c.other_side(t, f);
            let ok = multis == 1 && others_big && c.bigness(far) >= 5;
            let mut x = base(
                LemmaId::ThreeFaceTrigon,
                ok,
                format!(
                    "{multis} multigon slots, far side of trigon is {}-big",
                    c.bigness(far)
                ),
            );
            x.faces = vec![f, far];
            x.multigons = vec![t];
            (x.vertices, x.swap) = self.three_face_swap(info, j);
            self.push(x);
        }
        if bigons >= 2 {
            let bigon_sides: Vec<usize> = (0..3)
                .filter(|&j| self.order_of(info.neighbor(j)) == 2)
                .map(|j| c.bigness(self.across(f, info.neighbor(j))))
                .collect();
            let ok = bigons == 2 && bigon_sides.iter().all(|&b| b >= 5);
            let mut x = base(
                LemmaId::ThreeFaceTwoBigons,
                ok,
                format!("{bigons} bigons; far sides are {bigon_sides:?}-big"),
            );
            x.faces = vec![f];
            x.multigons = info
                .slots
                .iter()
                .filter_map(|s| multigon_at(s.neighbor))
                .collect();
            // v1 is the vertex between two bigon slots
            let j = (0..3).find(|&j| {
                self.order_of(info.neighbor(j)) == 2 && self.order_of(info.neighbor(j + 2)) == 2
            });
            if let Some(j) = j {
                (x.vertices, x.swap) = self.three_face_swap(info, j);
            }
            self.push(x);
        }
        if bigons == 1 && multis == 1 {
            let j = (0..3)
                .find(|&j| self.order_of(info.neighbor(j)) == 2)
                .unwrap();
            let b = multigon_at(info.neighbor(j)).unwrap();
            let far = c.other_side(b, f);
            if c.bigness(far) <= 2 {
                let ok = [1, 2].iter().all(|&i| match info.neighbor(j + i) {
                    Neighbor::Face(x) => c.bigness(x) >= 3,
                    Neighbor::Multigon(_) => false,
                });
                let mut x = base(
                    LemmaId::ThreeFaceOneBigon,
                    ok,
                    format!("far side of bigon is {}-big", c.bigness(far)),
                );
                x.faces = vec![f, far];
                x.multigons = vec![b];
                (x.vertices, x.swap) = self.three_face_swap(info, j);
                self.push(x);
            }
        }
    }

    fn multigon_lemmas(&mut self) {
        let c = self.c;
        for t in 0..c.multigons.len() {
            let mut sides = c.sides(t).to_vec();
            sides.dedup();
            if c.order(t) == 3 {
                let best = sides.iter().map(|&s| c.bigness(s)).max().unwrap_or(0);
                for &f in &sides {
                    if c.bigness(f) <= 2 {
                        let mut x = base(
                            LemmaId::TrigonTwoBig,
                            best >= 4,
                            format!("sides are at most {best}-big"),
                        );
                        x.faces = sides.clone();
                        x.multigons = vec![t];
                        self.push(x);
                    }
                    if c.degree(f) == 7 && c.is_dangerous_face(f) {
                        let other = c.other_side(t, f);
                        let mut x = base(
                            LemmaId::SevenFaceTrigon,
                            other != f && c.bigness(other) >= 5,
                            format!("other side {other} is {}-big", c.bigness(other)),
                        );
                        x.faces = vec![f, other];
                        x.multigons = vec![t];
                        self.push(x);
                    }
                }
            }
            if !c.multigon_dangerous[t] {
                continue;
            }
            for &f in &sides {
                let Some(info) = c.face(f).filter(|i| i.bigness >= 5) else {
                    continue;
                };
                let me = Neighbor::Multigon(t);
                let far_big = (0..info.degree)
                    .filter(|&i| {
                        let n = info.neighbor(i);
                        matches!(n, Neighbor::Face(x) if c.degree(x) >= 4)
                            && !c.f_incident(f, n, me)
                    })
                    .count();
                let with_bigon = c
                    .f_incident_neighbors(f, t)
                    .into_iter()
                    .any(|n| self.order_of(n) == 2 && multigon_at(n).is_some());
                let mut x = base(
                    LemmaId::DangerA,
                    far_big >= 4,
                    format!("{far_big} slots with ≥4-faces away from the multigon"),
                );
                x.faces = vec![f];
                x.multigons = vec![t];
                self.push(x.clone());
                if with_bigon {
                    x.lemma = LemmaId::DangerB;
                    x.conclusion = far_big >= 5;
                    self.push(x);
                }
            }
        }
    }

    /// The 3-face / dangerous 5-face configuration around a vertex `v1`.
    fn three_five(&mut self) {
        let c = self.c;
        for f5 in c.charged_faces().filter(|i| i.degree == 5 && i.dangerous) {
            for j in 0..5 {
                let Some(t) = multigon_at(f5.neighbor(j)).filter(|&m| c.order(m) == 3) else {
                    continue;
                };
                let near_bigon = [f5.neighbor(j + 4), f5.neighbor(j + 1)]
                    .iter()
                    .any(|&n| multigon_at(n).is_some() && self.order_of(n) == 2);
                if !near_bigon {
                    continue;
                }
                // (v1 at the slot's tail, walking forward) or (v1 at its head, walking back)
                for forward in [true, false] {
                    let slot_of = |i: usize| {
                        if forward {
                            (j + i) % 5
                        } else {
                            (j + 5 - i) % 5
                        }
                    };
                    // vertices v1..v5; slot_of(i) joins v_{i+1} and v_{i+2}
                    let vs: Vec<VertexId> = (0..5)
                        .map(|i| {
                            if forward {
                                f5.slots[(j + i) % 5].vertex
                            } else {
                                f5.slots[(j + 6 - i) % 5].vertex
                            }
                        })
                        .collect();
                    let shared = slot_of(4);
                    let Neighbor::Face(f3) = f5.slots[shared].neighbor else {
                        continue;
                    };
                    let Some(f3i) = c.face(f3).filter(|i| i.degree == 3) else {
                        continue;
                    };
                    let (v1, v5) = (vs[0], vs[4]);
                    let Some(v6) = f3i.vertices().find(|&v| v != v1 && v != v5) else {
                        continue;
                    };
                    let joins = |i: usize, a: VertexId, b: VertexId| {
                        let x = (f3i.slots[i].vertex, f3i.slots[(i + 1) % 3].vertex);
                        x == (a, b) || x == (b, a)
                    };
                    let Some(s61) = (0..3).find(|&i| joins(i, v6, v1)) else {
                        continue;
                    };
                    let Some(s56) = (0..3).find(|&i| joins(i, v5, v6)) else {
                        continue;
                    };
                    let bn = f3i.slots[s61].neighbor;
                    let bigon_ok = matches!(bn, Neighbor::Multigon(b)
                        if c.order(b) == 2 && c.slots_of(f5.face, bn).is_empty());
                    if !bigon_ok {
                        continue;
                    }
                    let e = |s: usize| f5.slots[s].edge;
                    let trigon_34 = self.order_of(f5.neighbor(slot_of(2))) == 3;
                    let spec = if trigon_34 {
                        SwapSpec {
                            vertices: vec![vs[0], vs[1], vs[2], vs[3], vs[4], v6],
                            anchors: Some(vec![f5.face, f5.face, f3]),
                            removed: Some(vec![e(slot_of(1)), e(slot_of(3)), f3i.slots[s61].edge]),
                        }
                    } else {
                        SwapSpec {
                            vertices: vec![vs[1], vs[2], vs[3], vs[4], v6, vs[0]],
                            anchors: Some(vec![f5.face, f5.face, f3]),
                            removed: Some(vec![e(slot_of(2)), f3i.slots[s56].edge, e(slot_of(0))]),
                        }
                    };
                    let mut x = base(
                        LemmaId::ThreeFiveFaces,
                        false,
                        format!(
                            "3-face {f3} and dangerous 5-face {} at vertex {v1}",
                            f5.face
                        ),
                    );
                    x.faces = vec![f3, f5.face];
                    x.multigons = vec![t, multigon_at(bn).unwrap()];
                    x.vertices = vs.iter().copied().chain([v6]).collect();
                    x.swap = self.checked(spec);
                    self.push(x);
                }
            }
        }
    }
}

fn multigon_order_lemma(g: &PlaneMultigraph) -> Vec<ConfigMatch> {
    let ms = find_multigons(g);
    ms.iter()
        .map(|m| {
            let worst = ms
                .iter()
                .filter(|o| o.id != m.id && o.shares_vertex(m))
                .map(|o| o.order())
                .max();
            let ok = m.order() <= 4 && worst.is_none_or(|w| m.order() + w <= 5);
            let mut x = base(
                LemmaId::MultigonOrder,
                ok,
                match worst {
                    Some(w) => format!("order {}, largest incident multigon {w}", m.order()),
                    None => format!("order {}", m.order()),
                },
            );
            x.faces = m.sides.map(|s| s.to_vec()).unwrap_or_default();
            x.multigons = vec![m.id];
            x.vertices = vec![m.endpoints.0, m.endpoints.1];
            x
        })
        .collect()
}

/// Runs every matcher. Cut lemmas are skipped above `cut_cap` vertices, and
/// the face lemmas when the graph has a closed bundle of parallel edges.
pub fn match_catalog(g: &PlaneMultigraph, cut_cap: usize) -> Catalog {
    let mut cat = Catalog::default();
    match min_odd_cut(g, cut_cap) {
        Ok(rep) => {
            if let Some(cut) = rep.min_nontrivial {
                let mut x = base(
                    LemmaId::OddCut,
                    cut.size >= 8,
                    format!("smallest non-trivial odd cut has size {}", cut.size),
                );
                x.cut = Some(cut.side);
                cat.matches.push(x);
            }
        }
        Err(e) => cat.skipped.push(Skipped {
            lemma: LemmaId::OddCut,
            reason: e.to_string(),
        }),
    }
    cat.matches.extend(multigon_order_lemma(g));
    match classify(g) {
        Ok(c) => {
            let mut ctx = Ctx {
                g,
                c: &c,
                out: Vec::new(),
            };
            ctx.face_lemmas();
            ctx.multigon_lemmas();
            ctx.three_five();
            cat.matches.extend(ctx.out);
        }
        Err(e) => {
            for l in &LemmaId::ALL[2..] {
                cat.skipped.push(Skipped {
                    lemma: *l,
                    reason: e.to_string(),
                });
            }
        }
    }
    cat.matches.sort_by_key(|m| m.lemma);
    cat
}
