//! Odd cuts and T-cuts by subset enumeration, and splitting along a 6-cut.
//!
//! Enumeration fixes vertex 0 on side A and walks the remaining vertices in
//! Gray-code order, so each cut is visited once and every step updates the
//! cut size in time proportional to one vertex's degree.

use crate::coloring::{verify_coloring, Color, ColoringViolation, EdgeColoring};
use crate::plane_graph::{DartId, EdgeId, GraphError, PlaneMultigraph, VertexId};
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

pub const DEFAULT_CUT_CAP: usize = 16;
/// Absolute limit of the bitmask representation.
pub const MAX_CUT_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    /// Side A, ascending. Empty only for the odd-vertex-count convention.
    pub side: Vec<VertexId>,
    pub size: usize,
    /// |A| odd.
    pub odd: bool,
    /// |A ∩ T| odd.
    pub t_cut: bool,
    /// One side is a single vertex.
    pub trivial: bool,
}

impl Cut {
    pub fn mask(&self) -> u64 {
        self.side.iter().fold(0, |m, &v| m | 1 << v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("side A is empty")]
    EmptySide,
    #[error("side A is the whole vertex set")]
    FullSide,
    #[error("vertex {0} out of range")]
    VertexRange(VertexId),
    #[error("{vertices} vertices exceed the enumeration cap {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("cut is not odd")]
    NotOdd,
    #[error("cut has size {0}, expected 6")]
    NotSix(usize),
    #[error("cut is trivial")]
    Trivial,
    #[error("side {0} does not induce a connected subgraph")]
    SideDisconnected(char),
    #[error("contracted part is invalid: {0}")]
    Graph(#[from] GraphError),
    #[error("cut edges of part {0} are not rainbow")]
    NotRainbow(char),
    #[error("coloring of part {part} is invalid: {err}")]
    BadColoring { part: char, err: ColoringViolation },
}

fn side_mask(g: &PlaneMultigraph, side: &[VertexId]) -> Result<u64, CutError> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(CutError::CapExceeded {
            vertices: n,
            cap: 64,
        });
    }
    let mut mask = 0u64;
    for &v in side {
        if v >= n {
            return Err(CutError::VertexRange(v));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

fn in_mask(mask: u64, v: VertexId) -> bool {
    mask >> v & 1 == 1
}

/// Edges with exactly one endpoint in the mask, ascending.
pub fn cut_edges(g: &PlaneMultigraph, mask: u64) -> Vec<EdgeId> {
    (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            in_mask(mask, a) != in_mask(mask, b)
        })
        .collect()
}

fn make_cut(g: &PlaneMultigraph, mask: u64, size: usize, t_flags: &[bool]) -> Cut {
    let n = g.vertex_count();
    let side: Vec<VertexId> = (0..n).filter(|&v| in_mask(mask, v)).collect();
    let t = side.iter().filter(|&&v| t_flags[v]).count();
    let k = side.len();
    Cut {
        odd: k % 2 == 1,
        t_cut: t % 2 == 1,
        trivial: k == 1 || k + 1 == n,
        side,
        size,
    }
}

pub fn cut_size(g: &PlaneMultigraph, side: &[VertexId]) -> Result<Cut, CutError> {
    let mask = side_mask(g, side)?;
    let k = mask.count_ones() as usize;
    if k == 0 {
        return Err(CutError::EmptySide);
    }
    if k == g.vertex_count() {
        return Err(CutError::FullSide);
    }
    let size = cut_edges(g, mask).len();
    Ok(make_cut(g, mask, size, &g.terminal_flags()))
}

fn check_cap(g: &PlaneMultigraph, cap: usize) -> Result<(), CutError> {
    let n = g.vertex_count();
    if n > cap.min(MAX_CUT_CAP) {
        return Err(CutError::CapExceeded {
            vertices: n,
            cap: cap.min(MAX_CUT_CAP),
        });
    }
    Ok(())
}

/// Calls `f(mask, size)` once for every proper side containing vertex 0.
pub fn for_each_cut(
    g: &PlaneMultigraph,
    cap: usize,
    mut f: impl FnMut(u64, usize),
) -> Result<(), CutError> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    let nbrs: Vec<Vec<(VertexId, usize)>> = (0..n).map(|v| g.weighted_neighbors(v)).collect();
    let mut w_a = vec![0usize; n];
    for &(w, m) in &nbrs[0] {
        w_a[w] += m;
    }
    let mut mask = 1u64;
    let mut size = g.degree(0);
    let full = (1u64 << n) - 1;
    if mask != full {
        f(mask, size);
    }
    for i in 1u64..1 << (n - 1) {
        let j = i.trailing_zeros() as usize + 1;
        let delta = g.degree(j) as isize - 2 * w_a[j] as isize;
        if in_mask(mask, j) {
            mask &= !(1 << j);
            size = (size as isize - delta) as usize;
            for &(w, m) in &nbrs[j] {
                w_a[w] -= m;
            }
        } else {
            mask |= 1 << j;
            size = (size as isize + delta) as usize;
            for &(w, m) in &nbrs[j] {
                w_a[w] += m;
            }
        }
        if mask != full {
            f(mask, size);
        }
    }
    Ok(())
}

/// Cut sizes for every side containing vertex 0, indexed by `mask >> 1`.
/// Index `2^(n-1) - 1` (the full set) holds 0.
pub fn all_cut_sizes(g: &PlaneMultigraph, cap: usize) -> Result<Vec<u32>, CutError> {
    check_cap(g, cap)?;
    let mut out = vec![0u32; 1 << (g.vertex_count() - 1)];
    for_each_cut(g, cap, |mask, size| out[(mask >> 1) as usize] = size as u32)?;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TCutParity {
    pub t_cuts: usize,
    pub even: usize,
    pub odd: usize,
    /// All T-cuts have sizes of one parity.
    pub uniform: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub vertices: usize,
    /// Smallest odd cut, ties broken by smallest side mask.
    pub min_odd: Cut,
    /// Smallest odd cut with both sides of size at least two.
    pub min_nontrivial: Option<Cut>,
    pub t_cut_parity: TCutParity,
    /// Odd cuts of size at most `max_size`, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub small_odd_cuts: Option<Vec<Cut>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutOptions {
    pub cap: usize,
    pub max_size: Option<usize>,
    pub nontrivial_only: bool,
}

impl Default for CutOptions {
    fn default() -> Self {
        CutOptions {
            cap: DEFAULT_CUT_CAP,
            max_size: None,
            nontrivial_only: false,
        }
    }
}

pub fn analyze_cuts(g: &PlaneMultigraph, opts: &CutOptions) -> Result<CutReport, CutError> {
    check_cap(g, opts.cap)?;
    let n = g.vertex_count();
    let t_flags = g.terminal_flags();
    let t_mask = (0..n).filter(|&v| t_flags[v]).fold(0u64, |m, v| m | 1 << v);

    let mut best: Option<(usize, u64)> = None;
    let mut best_nt: Option<(usize, u64)> = None;
    let mut parity = TCutParity {
        t_cuts: 0,
        even: 0,
        odd: 0,
        uniform: true,
    };
    let mut small = Vec::new();
    for_each_cut(g, opts.cap, |mask, size| {
        if (mask & t_mask).count_ones() % 2 == 1 {
            parity.t_cuts += 1;
            if size % 2 == 0 {
                parity.even += 1;
            } else {
                parity.odd += 1;
            }
        }
        let k = mask.count_ones() as usize;
        if k.is_multiple_of(2) {
            return;
        }
        let key = (size, mask);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
        let nontrivial = k >= 2 && n - k >= 2;
        if nontrivial && best_nt.is_none_or(|b| key < b) {
            best_nt = Some(key);
        }
        if opts.max_size.is_some_and(|m| size <= m) && (nontrivial || !opts.nontrivial_only) {
            small.push(key);
        }
    })?;
    parity.uniform = parity.even == 0 || parity.odd == 0;

    let min_odd = match best {
        Some((size, mask)) if n.is_multiple_of(2) => make_cut(g, mask, size, &t_flags),
        // odd vertex count: the side A = ∅ has odd complement and size 0
        _ => Cut {
            side: Vec::new(),
            size: 0,
            odd: true,
            t_cut: t_mask.count_ones() % 2 == 1,
            trivial: false,
        },
    };
    small.sort_unstable();
    Ok(CutReport {
        vertices: n,
        min_odd,
        min_nontrivial: best_nt.map(|(s, m)| make_cut(g, m, s, &t_flags)),
        t_cut_parity: parity,
        small_odd_cuts: opts.max_size.map(|_| {
            small
                .into_iter()
                .map(|(s, m)| make_cut(g, m, s, &t_flags))
                .collect()
        }),
    })
}

pub fn min_odd_cut(g: &PlaneMultigraph, cap: usize) -> Result<CutReport, CutError> {
    analyze_cuts(
        g,
        &CutOptions {
            cap,
            ..CutOptions::default()
        },
    )
}

/// One side of a split: the original graph with the other side contracted
/// to a single vertex.
#[derive(Debug, Clone, Serialize)]
pub struct Part {
    #[serde(skip)]
    pub graph: PlaneMultigraph,
    /// `vertex_map[i]` is the original vertex behind part vertex `i`, or
    /// `None` for the contracted vertex.
    pub vertex_map: Vec<Option<VertexId>>,
    /// `edge_map[i]` is the original edge behind part edge `i`.
    pub edge_map: Vec<EdgeId>,
    pub contracted: VertexId,
}

impl Part {
    pub fn local_edge(&self, original: EdgeId) -> Option<EdgeId> {
        self.edge_map.iter().position(|&e| e == original)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitResult {
    pub cut: Cut,
    /// Keeps side A; side B is contracted.
    pub part_a: Part,
    /// Keeps side B; side A is contracted.
    pub part_b: Part,
    pub cut_edges: Vec<EdgeId>,
}

fn connected_within(g: &PlaneMultigraph, mask: u64) -> bool {
    let Some(start) = (0..g.vertex_count()).find(|&v| in_mask(mask, v)) else {
        return false;
    };
    let mut seen = 1u64 << start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &d in g.rotation(v) {
            let w = g.head(d);
            if in_mask(mask, w) && !in_mask(seen, w) {
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
    }
    seen == mask
}

/// Contracts the vertices of `mask` to one vertex by contracting a spanning
/// tree edge by edge and then deleting the resulting loops.
fn contract(g: &PlaneMultigraph, mask: u64) -> Result<Part, CutError> {
    let n = g.vertex_count();
    let root = (0..n).find(|&v| in_mask(mask, v)).expect("non-empty side");
    let mut merged = 1u64 << root;
    let mut rot: Vec<DartId> = g.rotation(root).to_vec();
    loop {
        let found = rot.iter().position(|&d| {
            let w = g.head(d);
            in_mask(mask, w) && !in_mask(merged, w)
        });
        let Some(i) = found else { break };
        let d = rot[i];
        let w = g.head(d);
        let r = g.reverse(d);
        let wr = g.rotation(w);
        let p = wr.iter().position(|&x| x == r).unwrap();
        let tail: Vec<DartId> = (1..wr.len()).map(|k| wr[(p + k) % wr.len()]).collect();
        rot.splice(i..=i, tail);
        merged |= 1 << w;
    }
    rot.retain(|&d| !in_mask(mask, g.head(d)));

    let kept: Vec<VertexId> = (0..n).filter(|&v| !in_mask(mask, v)).collect();
    let contracted = kept.len();
    let mut new_vertex = vec![contracted; n];
    for (i, &v) in kept.iter().enumerate() {
        new_vertex[v] = i;
    }
    let edge_map: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.endpoints(e);
            !(in_mask(mask, a) && in_mask(mask, b))
        })
        .collect();
    let mut new_dart = vec![usize::MAX; g.dart_count()];
    for (i, &e) in edge_map.iter().enumerate() {
        let [a, b] = g.edge_darts(e);
        new_dart[a] = 2 * i;
        new_dart[b] = 2 * i + 1;
    }
    let mut rotations: Vec<Vec<DartId>> = kept
        .iter()
        .map(|&v| g.rotation(v).iter().map(|&d| new_dart[d]).collect())
        .collect();
    rotations.push(rot.iter().map(|&d| new_dart[d]).collect());
    let edges = (0..edge_map.len()).map(|i| [2 * i, 2 * i + 1]).collect();
    let terminals = g.explicit_terminals().map(|t| {
        let mut t: Vec<VertexId> = t.iter().map(|&v| new_vertex[v]).collect();
        let inside = t.iter().filter(|&&v| v == contracted).count();
        t.retain(|&v| v != contracted);
        if inside % 2 == 1 {
            t.push(contracted);
        }
        t
    });
    let graph = PlaneMultigraph::from_parts(rotations, edges, terminals)?;
    let mut vertex_map: Vec<Option<VertexId>> = kept.into_iter().map(Some).collect();
    vertex_map.push(None);
    Ok(Part {
        graph,
        vertex_map,
        edge_map,
        contracted,
    })
}

/// Splits along a non-trivial odd cut of size six.
pub fn split_along_cut(g: &PlaneMultigraph, side: &[VertexId]) -> Result<SplitResult, CutError> {
    let cut = cut_size(g, side)?;
    if !cut.odd {
        return Err(CutError::NotOdd);
    }
    if cut.trivial {
        return Err(CutError::Trivial);
    }
    if cut.size != 6 {
        return Err(CutError::NotSix(cut.size));
    }
    let mask = cut.mask();
    let full = u64::MAX >> (64 - g.vertex_count());
    if !connected_within(g, mask) {
        return Err(CutError::SideDisconnected('A'));
    }
    if !connected_within(g, full & !mask) {
        return Err(CutError::SideDisconnected('B'));
    }
    Ok(SplitResult {
        part_a: contract(g, full & !mask)?,
        part_b: contract(g, mask)?,
        cut_edges: cut_edges(g, mask),
        cut,
    })
}

/// Merges colorings of the two parts, permuting the colors of `col_b` so the
/// cut edges agree with `col_a`.
pub fn combine_colorings(
    g: &PlaneMultigraph,
    split: &SplitResult,
    col_a: &EdgeColoring,
    col_b: &EdgeColoring,
) -> Result<EdgeColoring, CutError> {
    verify_coloring(&split.part_a.graph, col_a)
        .map_err(|err| CutError::BadColoring { part: 'A', err })?;
    verify_coloring(&split.part_b.graph, col_b)
        .map_err(|err| CutError::BadColoring { part: 'B', err })?;
    let mut perm: [Option<Color>; 6] = [None; 6];
    let mut seen_a = 0u8;
    for &e in &split.cut_edges {
        let ca = col_a.get(split.part_a.local_edge(e).unwrap());
        let cb = col_b.get(split.part_b.local_edge(e).unwrap());
        if seen_a & 1 << ca.index() != 0 {
            return Err(CutError::NotRainbow('A'));
        }
        seen_a |= 1 << ca.index();
        if perm[cb.index()].is_some() {
            return Err(CutError::NotRainbow('B'));
        }
        perm[cb.index()] = Some(ca);
    }
    let perm: [Color; 6] =
        std::array::from_fn(|i| perm[i].expect("six cut edges cover all colors"));
    let mut out = vec![Color::Alpha; g.edge_count()];
    for (i, &e) in split.part_b.edge_map.iter().enumerate() {
        out[e] = perm[col_b.get(i).index()];
    }
    for (i, &e) in split.part_a.edge_map.iter().enumerate() {
        out[e] = col_a.get(i);
    }
    Ok(EdgeColoring::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{find_six_edge_coloring, SolverConfig};
    use crate::workbench::{generate, InstanceSpec};

    fn g(s: InstanceSpec) -> PlaneMultigraph {
        generate(&s).unwrap()
    }

    #[test]
    fn dk4_cut_sizes() {
        let dk4 = g(InstanceSpec::Dk4);
        let c = cut_size(&dk4, &[0]).unwrap();
        assert_eq!((c.size, c.odd, c.trivial), (6, true, true));
        // three of four vertices: still trivial, its complement is one vertex
        let c = cut_size(&dk4, &[0, 1, 2]).unwrap();
        assert_eq!((c.size, c.odd, c.trivial), (6, true, true));
        assert_eq!(cut_size(&dk4, &[]).unwrap_err(), CutError::EmptySide);
        assert_eq!(
            cut_size(&dk4, &[0, 1, 2, 3]).unwrap_err(),
            CutError::FullSide
        );
    }

    #[test]
    fn c4x3_even_cut() {
        let c4 = g(InstanceSpec::C4x3);
        let c = cut_size(&c4, &[0, 1]).unwrap();
        assert_eq!((c.size, c.odd), (6, false));
    }

    #[test]
    fn minimum_odd_cuts() {
        let r = min_odd_cut(&g(InstanceSpec::Dk4), DEFAULT_CUT_CAP).unwrap();
        assert_eq!(r.min_odd.size, 6);
        assert_eq!(r.min_odd.side, vec![0]);
        assert!(r.min_nontrivial.is_none());
        let r = min_odd_cut(&g(InstanceSpec::Hexabond), DEFAULT_CUT_CAP).unwrap();
        assert_eq!(r.min_odd.size, 6);
        let r = min_odd_cut(&g(InstanceSpec::DoubledPrism(3)), DEFAULT_CUT_CAP).unwrap();
        assert_eq!(r.min_nontrivial.unwrap().size, 6);
        assert!(r.t_cut_parity.uniform);
    }

    #[test]
    fn odd_vertex_count_gives_empty_side() {
        let r = min_odd_cut(&g(InstanceSpec::TripledCycle(3)), DEFAULT_CUT_CAP).unwrap();
        assert!(r.min_odd.side.is_empty());
        assert_eq!(r.min_odd.size, 0);
    }

    #[test]
    fn cap_is_enforced() {
        let dd = g(InstanceSpec::DoubledDodecahedron);
        assert!(matches!(
            min_odd_cut(&dd, DEFAULT_CUT_CAP),
            Err(CutError::CapExceeded { vertices: 20, .. })
        ));
    }

    #[test]
    fn incremental_sizes_match_direct_count() {
        let dq3 = g(InstanceSpec::Dq3);
        for_each_cut(&dq3, DEFAULT_CUT_CAP, |mask, size| {
            assert_eq!(size, cut_edges(&dq3, mask).len());
        })
        .unwrap();
    }

    #[test]
    fn split_and_combine_prism_triangle() {
        let p3 = g(InstanceSpec::DoubledPrism(3));
        let split = split_along_cut(&p3, &[0, 1, 2]).unwrap();
        for part in [&split.part_a, &split.part_b] {
            assert!(part.graph.is_regular(6));
            assert_eq!(part.graph.vertex_count(), 4);
            assert_eq!(part.graph.euler_characteristic(), 2);
        }
        let cfg = SolverConfig::default();
        let ca = find_six_edge_coloring(&split.part_a.graph, &cfg).unwrap();
        let cb = find_six_edge_coloring(&split.part_b.graph, &cfg).unwrap();
        let col =
            combine_colorings(&p3, &split, ca.coloring().unwrap(), cb.coloring().unwrap()).unwrap();
        verify_coloring(&p3, &col).unwrap();
    }

    #[test]
    fn split_rejects_trivial_and_even() {
        let dk4 = g(InstanceSpec::Dk4);
        assert_eq!(split_along_cut(&dk4, &[0]).unwrap_err(), CutError::Trivial);
        assert_eq!(
            split_along_cut(&dk4, &[0, 1, 2]).unwrap_err(),
            CutError::Trivial
        );
        let p3 = g(InstanceSpec::DoubledPrism(3));
        assert_eq!(split_along_cut(&p3, &[0, 1]).unwrap_err(), CutError::NotOdd);
    }

    #[test]
    fn combine_rejects_repeated_cut_color() {
        let p3 = g(InstanceSpec::DoubledPrism(3));
        let split = split_along_cut(&p3, &[0, 1, 2]).unwrap();
        let cfg = SolverConfig::default();
        let ca = find_six_edge_coloring(&split.part_a.graph, &cfg).unwrap();
        let ca = ca.coloring().unwrap();
        let mut bad = ca.clone();
        let e0 = split.part_a.local_edge(split.cut_edges[0]).unwrap();
        let e1 = split.part_a.local_edge(split.cut_edges[1]).unwrap();
        bad.set(e1, bad.get(e0));
        let cb = find_six_edge_coloring(&split.part_b.graph, &cfg).unwrap();
        assert!(combine_colorings(&p3, &split, &bad, cb.coloring().unwrap()).is_err());
    }
}
