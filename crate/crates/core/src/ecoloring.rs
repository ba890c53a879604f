//! e-colorings: parity colorings where one edge carries three or five colors.
//!
//! Every color must meet every vertex an odd number of times, with `e`
//! counted once for each color it carries. Away from the ends of `e` that
//! forces a proper coloring.

use crate::coloring::{
    find_six_edge_coloring, verify_coloring, walk_alternating, Color, ColorSet, EdgeColoring,
    SolveOutcome, SolverConfig, ORACLE_EDGE_CAP,
};
use crate::cuts::{cut_edges, for_each_cut, CutError, DEFAULT_CUT_CAP};
use crate::plane_graph::{find_multigons, EdgeId, PlaneMultigraph, VertexId};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

pub const DEFAULT_ECOLOR_BUDGET: u64 = 1_000_000;
/// Upper bound on rewriting moves in [`canonicalize_trigon`].
pub const MAX_CANON_MOVES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EColoring {
    pub edge: EdgeId,
    pub e_colors: ColorSet,
    /// One color per edge; the entry at `edge` is `None`.
    pub colors: Vec<Option<Color>>,
}

impl EColoring {
    /// Builds from a full color vector, ignoring the entry at `edge`.
    pub fn new(edge: EdgeId, e_colors: ColorSet, colors: &[Color]) -> Self {
        let mut colors: Vec<Option<Color>> = colors.iter().copied().map(Some).collect();
        colors[edge] = None;
        EColoring {
            edge,
            e_colors,
            colors,
        }
    }

    pub fn color(&self, f: EdgeId) -> Option<Color> {
        self.colors[f]
    }

    /// Whether `f` is assigned `c` (for `e`: whether `c` is among its colors).
    pub fn carries(&self, f: EdgeId, c: Color) -> bool {
        if f == self.edge {
            self.e_colors.contains(c)
        } else {
            self.colors[f] == Some(c)
        }
    }

    /// Color multiplicities at `v`, `e` counted once per color it carries.
    pub fn counts_at(&self, g: &PlaneMultigraph, v: VertexId) -> [usize; 6] {
        let mut counts = [0; 6];
        for f in g.incident_edges(v) {
            if f == self.edge {
                for c in self.e_colors.iter() {
                    counts[c.index()] += 1;
                }
            } else if let Some(c) = self.colors[f] {
                counts[c.index()] += 1;
            }
        }
        counts
    }

    /// Multiplicities at `v` over the edges other than `e`.
    fn others_at(&self, g: &PlaneMultigraph, v: VertexId) -> [usize; 6] {
        let mut counts = [0; 6];
        for f in g.incident_edges(v) {
            if let Some(c) = self.colors.get(f).copied().flatten() {
                counts[c.index()] += 1;
            }
        }
        counts
    }
}

impl Serialize for EColoring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let colors: BTreeMap<EdgeId, Color> = self
            .colors
            .iter()
            .enumerate()
            .filter_map(|(f, c)| c.map(|c| (f, c)))
            .collect();
        let mut st = s.serialize_struct("EColoring", 3)?;
        st.serialize_field("edge", &self.edge)?;
        st.serialize_field("e_colors", &self.e_colors)?;
        st.serialize_field("colors", &colors)?;
        st.end()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EColoringViolation {
    #[error("edge {0} is not an edge of the graph")]
    EdgeRange(EdgeId),
    #[error("coloring covers {found} edges, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("edge {0} has no color")]
    Uncolored(EdgeId),
    #[error("distinguished edge carries {0} colors, expected 3 or 5")]
    SetSize(usize),
    #[error("vertex {vertex} meets {color} {count} times")]
    EvenCount {
        vertex: VertexId,
        color: Color,
        count: usize,
    },
}

pub fn verify_e_coloring(g: &PlaneMultigraph, ec: &EColoring) -> Result<(), EColoringViolation> {
    if ec.edge >= g.edge_count() {
        return Err(EColoringViolation::EdgeRange(ec.edge));
    }
    if ec.colors.len() != g.edge_count() {
        return Err(EColoringViolation::WrongLength {
            expected: g.edge_count(),
            found: ec.colors.len(),
        });
    }
    if let Some(f) = (0..g.edge_count()).find(|&f| f != ec.edge && ec.colors[f].is_none()) {
        return Err(EColoringViolation::Uncolored(f));
    }
    let k = ec.e_colors.len();
    if k != 3 && k != 5 {
        return Err(EColoringViolation::SetSize(k));
    }
    for v in 0..g.vertex_count() {
        let counts = ec.counts_at(g, v);
        if let Some(c) = Color::ALL
            .into_iter()
            .find(|c| counts[c.index()].is_multiple_of(2))
        {
            return Err(EColoringViolation::EvenCount {
                vertex: v,
                color: c,
                count: counts[c.index()],
            });
        }
    }
    Ok(())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EColorError {
    #[error("edge {0} is not an edge of the graph")]
    EdgeRange(EdgeId),
    #[error("graph is not 6-regular")]
    NotSixRegular,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum EColorOutcome {
    Found {
        coloring: EColoring,
        nodes: u64,
    },
    /// The search was complete and found nothing.
    NoneExists {
        nodes: u64,
    },
    NoneWithinBudget {
        nodes: u64,
    },
}

/// Odd color sets for `e`: all 3-sets, then all 5-sets, in lexicographic order.
pub fn odd_color_sets() -> Vec<ColorSet> {
    let mut sets: Vec<ColorSet> = (0u8..64)
        .map(ColorSet::from_bits)
        .filter(|s| s.len() == 3 || s.len() == 5)
        .collect();
    let key = |s: &ColorSet| {
        let idx: Vec<usize> = s.iter().map(Color::index).collect();
        (s.len(), idx)
    };
    sets.sort_by_key(key);
    sets
}

struct ParitySearch<'a> {
    g: &'a PlaneMultigraph,
    e: EdgeId,
    order: Vec<EdgeId>,
    /// Bit c set when the count of color c at the vertex is odd.
    odd: Vec<u8>,
    remaining: Vec<usize>,
    colors: Vec<Option<Color>>,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl ParitySearch<'_> {
    fn feasible(&self, v: VertexId) -> bool {
        let deficit = 6 - self.odd[v].count_ones() as usize;
        let r = self.remaining[v];
        deficit <= r && (r - deficit).is_multiple_of(2)
    }

    fn set(&mut self, f: EdgeId, c: Color, on: bool) {
        let (a, b) = self.g.endpoints(f);
        for v in [a, b] {
            self.odd[v] ^= 1 << c.index();
            if on {
                self.remaining[v] -= 1;
            } else {
                self.remaining[v] += 1;
            }
        }
        self.colors[f] = on.then_some(c);
    }

    /// Depth-first over `order`; `visit` returns `false` to stop.
    fn dfs(&mut self, i: usize, visit: &mut dyn FnMut(&[Option<Color>]) -> bool) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return false;
        }
        if i == self.order.len() {
            return visit(&self.colors);
        }
        let f = self.order[i];
        let (a, b) = self.g.endpoints(f);
        for c in Color::ALL {
            self.set(f, c, true);
            if self.feasible(a) && self.feasible(b) && !self.dfs(i + 1, visit) {
                self.set(f, c, false);
                return false;
            }
            self.set(f, c, false);
        }
        true
    }
}

/// Runs the parity search for one color set of `e`; `visit` sees each
/// solution and returns `false` to stop. Returns (completed, nodes).
fn search_with_set(
    g: &PlaneMultigraph,
    e: EdgeId,
    set: ColorSet,
    budget: Option<u64>,
    visit: &mut dyn FnMut(&[Option<Color>]) -> bool,
) -> (bool, bool, u64) {
    let n = g.vertex_count();
    let mut s = ParitySearch {
        g,
        e,
        order: (0..g.edge_count()).filter(|&f| f != e).collect(),
        odd: vec![0; n],
        remaining: (0..n).map(|v| g.degree(v)).collect(),
        colors: vec![None; g.edge_count()],
        nodes: 0,
        budget,
        exhausted: false,
    };
    let (a, b) = g.endpoints(s.e);
    for v in [a, b] {
        s.odd[v] ^= set.bits();
        s.remaining[v] -= 1;
    }
    if !(s.feasible(a) && s.feasible(b)) {
        return (true, false, 0);
    }
    let finished = s.dfs(0, visit);
    (finished || !s.exhausted, s.exhausted, s.nodes)
}

/// Searches color sets of size 3 then 5; edges in id order, colors ascending.
pub fn find_e_coloring(
    g: &PlaneMultigraph,
    e: EdgeId,
    budget: u64,
) -> Result<EColorOutcome, EColorError> {
    if e >= g.edge_count() {
        return Err(EColorError::EdgeRange(e));
    }
    if !g.is_regular(6) {
        return Err(EColorError::NotSixRegular);
    }
    let budget = (g.edge_count() > ORACLE_EDGE_CAP).then_some(budget);
    let mut nodes = 0;
    for set in odd_color_sets() {
        let mut found = None;
        let left = budget.map(|b| b.saturating_sub(nodes));
        let (_, exhausted, n) = search_with_set(g, e, set, left, &mut |cols| {
            found = Some(cols.to_vec());
            false
        });
        nodes += n;
        if let Some(colors) = found {
            return Ok(EColorOutcome::Found {
                coloring: EColoring {
                    edge: e,
                    e_colors: set,
                    colors,
                },
                nodes,
            });
        }
        if exhausted {
            return Ok(EColorOutcome::NoneWithinBudget { nodes });
        }
    }
    Ok(EColorOutcome::NoneExists { nodes })
}

/// Every e-coloring for `e`, in search order, up to `limit`.
pub fn enumerate_e_colorings(g: &PlaneMultigraph, e: EdgeId, limit: usize) -> Vec<EColoring> {
    let mut out = Vec::new();
    for set in odd_color_sets() {
        if out.len() >= limit {
            break;
        }
        search_with_set(g, e, set, None, &mut |cols| {
            out.push(EColoring {
                edge: e,
                e_colors: set,
                colors: cols.to_vec(),
            });
            out.len() < limit
        });
    }
    out
}

/// Shape of an endpoint of `e` in a 3-color e-coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", content = "color", rename_all = "lowercase")]
pub enum EndShape {
    /// A color of `e` appears on two more edges.
    Doubled(Color),
    /// A color outside `e`'s set appears on three edges.
    Tripled(Color),
}

fn end_shape(g: &PlaneMultigraph, ec: &EColoring, v: VertexId) -> Option<EndShape> {
    let others = ec.others_at(g, v);
    if let Some(c) = ec.e_colors.iter().find(|c| others[c.index()] == 2) {
        return Some(EndShape::Doubled(c));
    }
    ec.e_colors
        .complement()
        .iter()
        .find(|c| others[c.index()] == 3)
        .map(EndShape::Tripled)
}

/// `e` carries three colors and one of them sits on exactly two further
/// edges at each end of `e`.
pub fn is_canonical(g: &PlaneMultigraph, ec: &EColoring) -> bool {
    if ec.e_colors.len() != 3 {
        return false;
    }
    let (u, v) = g.endpoints(ec.edge);
    let (cu, cv) = (ec.others_at(g, u), ec.others_at(g, v));
    ec.e_colors
        .iter()
        .any(|c| cu[c.index()] == 2 && cv[c.index()] == 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum CanonMove {
    Recolor {
        edge: EdgeId,
        from: Color,
        to: Color,
    },
    SetEdgeColors {
        colors: ColorSet,
    },
    SwapChain {
        colors: (Color, Color),
        edges: Vec<EdgeId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CanonOutcome {
    Canonical {
        coloring: EColoring,
        moves: Vec<CanonMove>,
    },
    /// A move produced a proper 6-edge-coloring of the whole graph.
    ProperColoring {
        coloring: EdgeColoring,
        moves: Vec<CanonMove>,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("edge {edge} lies in a multigon of order {order} < 3")]
    OrderTooSmall { edge: EdgeId, order: usize },
    #[error("input is not a valid e-coloring: {0}")]
    Invalid(#[from] EColoringViolation),
    #[error("no canonical form within {MAX_CANON_MOVES} moves")]
    MoveBound,
    #[error("unhandled state: {0}")]
    Unhandled(String),
}

struct Rewriter<'a> {
    g: &'a PlaneMultigraph,
    ec: EColoring,
    moves: Vec<CanonMove>,
}

impl Rewriter<'_> {
    fn step(&mut self, m: CanonMove) -> Result<(), CanonError> {
        if self.moves.len() >= MAX_CANON_MOVES {
            return Err(CanonError::MoveBound);
        }
        match &m {
            CanonMove::Recolor { edge, to, .. } => self.ec.colors[*edge] = Some(*to),
            CanonMove::SetEdgeColors { colors } => self.ec.e_colors = *colors,
            CanonMove::SwapChain {
                colors: (a, b),
                edges,
            } => {
                for &f in edges {
                    let c = self.ec.colors[f];
                    self.ec.colors[f] = Some(if c == Some(*a) { *b } else { *a });
                }
            }
        }
        self.moves.push(m);
        Ok(())
    }

    /// Alternating walk in G \ e from `x` along `first`, stopping at `x` or `y`.
    fn chain(
        &self,
        first: EdgeId,
        x: VertexId,
        y: VertexId,
        pair: (Color, Color),
    ) -> (Vec<EdgeId>, VertexId) {
        let ec = &self.ec;
        let (rest, end, _) = walk_alternating(
            self.g,
            |f| ec.colors[f],
            first,
            x,
            pair,
            |w| w == x || w == y,
        );
        let mut edges = vec![first];
        edges.extend(rest);
        (edges, end)
    }

    fn edges_colored(&self, v: VertexId, c: Color) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .g
            .incident_edges(v)
            .filter(|&f| self.ec.colors[f] == Some(c))
            .collect();
        out.sort_unstable();
        out
    }

    fn into_proper(self) -> Result<CanonOutcome, CanonError> {
        let set = self.ec.e_colors;
        let only = set.first().filter(|_| set.len() == 1).ok_or_else(|| {
            CanonError::Unhandled("proper coloring needs a single color on e".into())
        })?;
        let colors: Vec<Color> = (0..self.g.edge_count())
            .map(|f| self.ec.colors[f].unwrap_or(only))
            .collect();
        let coloring = EdgeColoring::new(colors);
        verify_coloring(self.g, &coloring)
            .map_err(|v| CanonError::Unhandled(format!("extracted coloring invalid: {v}")))?;
        Ok(CanonOutcome::ProperColoring {
            coloring,
            moves: self.moves,
        })
    }
}

/// Rewrites an e-coloring with `e` in a multigon of order at least three
/// into the canonical shape, using recolorings inside the multigon,
/// reassignments of `e`'s colors and two-color chain swaps in G \ e.
pub fn canonicalize_trigon(
    g: &PlaneMultigraph,
    ec: &EColoring,
) -> Result<CanonOutcome, CanonError> {
    verify_e_coloring(g, ec)?;
    let e = ec.edge;
    let bundle: Vec<EdgeId> = find_multigons(g)
        .into_iter()
        .find(|m| m.edges.contains(&e))
        .map(|m| m.edges)
        .unwrap_or_else(|| vec![e]);
    if bundle.len() < 3 {
        return Err(CanonError::OrderTooSmall {
            edge: e,
            order: bundle.len(),
        });
    }
    let mut mates: Vec<EdgeId> = bundle.into_iter().filter(|&f| f != e).collect();
    mates.sort_unstable();
    let (v, w) = g.endpoints(e);
    let mut rw = Rewriter {
        g,
        ec: ec.clone(),
        moves: Vec::new(),
    };

    loop {
        let set = rw.ec.e_colors;
        if set.len() == 5 {
            if let Some(f) = mates
                .iter()
                .copied()
                .find(|&f| set.contains(rw.ec.colors[f].unwrap()))
            {
                let eps = rw.ec.colors[f].unwrap();
                let delta = set.without(eps).first().unwrap();
                rw.step(CanonMove::Recolor {
                    edge: f,
                    from: eps,
                    to: delta,
                })?;
                rw.step(CanonMove::SetEdgeColors {
                    colors: set.without(eps).without(delta),
                })?;
            } else {
                let phi = set.complement().first().unwrap();
                let mut picks = set.iter();
                let (c1, c2) = (picks.next().unwrap(), picks.next().unwrap());
                let twins: Vec<EdgeId> = mates.iter().copied().take(2).collect();
                rw.step(CanonMove::Recolor {
                    edge: twins[0],
                    from: phi,
                    to: c1,
                })?;
                rw.step(CanonMove::Recolor {
                    edge: twins[1],
                    from: phi,
                    to: c2,
                })?;
                rw.step(CanonMove::SetEdgeColors {
                    colors: set.without(c1).without(c2),
                })?;
            }
            verify_e_coloring(g, &rw.ec).map_err(|x| CanonError::Unhandled(x.to_string()))?;
            continue;
        }

        if is_canonical(g, &rw.ec) {
            return Ok(CanonOutcome::Canonical {
                coloring: rw.ec,
                moves: rw.moves,
            });
        }

        if let Some(f) = mates
            .iter()
            .copied()
            .find(|&f| set.contains(rw.ec.colors[f].unwrap()))
        {
            let c = rw.ec.colors[f].unwrap();
            let a = set.without(c).first().unwrap();
            let b = set.without(c).without(a).first().unwrap();
            rw.step(CanonMove::Recolor {
                edge: f,
                from: c,
                to: a,
            })?;
            rw.step(CanonMove::SetEdgeColors {
                colors: ColorSet::EMPTY.with(b),
            })?;
            return rw.into_proper();
        }

        let sv = end_shape(g, &rw.ec, v);
        let sw = end_shape(g, &rw.ec, w);
        match (sv, sw) {
            (Some(EndShape::Doubled(a)), Some(EndShape::Doubled(b))) => {
                // a == b is canonical and handled above
                let start = rw.edges_colored(w, b)[0];
                let (edges, end) = rw.chain(start, w, v, (b, a));
                rw.step(CanonMove::SwapChain {
                    colors: (a, b),
                    edges,
                })?;
                if end == v {
                    let third = set.without(a).without(b).first().unwrap();
                    rw.step(CanonMove::SetEdgeColors {
                        colors: ColorSet::EMPTY.with(third),
                    })?;
                    return rw.into_proper();
                }
            }
            (Some(EndShape::Doubled(a)), Some(EndShape::Tripled(phi)))
            | (Some(EndShape::Tripled(phi)), Some(EndShape::Doubled(a))) => {
                let (x, y) = if sv == Some(EndShape::Tripled(phi)) {
                    (v, w)
                } else {
                    (w, v)
                };
                let chains: Vec<(Vec<EdgeId>, VertexId)> = rw
                    .edges_colored(x, phi)
                    .into_iter()
                    .map(|f| rw.chain(f, x, y, (phi, a)))
                    .collect();
                let to_y = chains.iter().find(|(edges, end)| {
                    *end == y && rw.ec.colors[*edges.last().unwrap()] == Some(a)
                });
                if let Some((edges, _)) = to_y {
                    let edges = edges.clone();
                    rw.step(CanonMove::SwapChain {
                        colors: (a, phi),
                        edges,
                    })?;
                    rw.step(CanonMove::SetEdgeColors {
                        colors: set.without(a).with(phi),
                    })?;
                } else if let Some((edges, _)) = chains.iter().find(|(_, end)| *end == x) {
                    let edges = edges.clone();
                    rw.step(CanonMove::SwapChain {
                        colors: (a, phi),
                        edges,
                    })?;
                } else {
                    return Err(CanonError::Unhandled(format!(
                        "no usable {a}/{phi} chain from vertex {x}"
                    )));
                }
            }
            (Some(EndShape::Tripled(phi)), Some(EndShape::Tripled(_))) => {
                let alpha = set.first().unwrap();
                let chain = rw
                    .edges_colored(v, phi)
                    .into_iter()
                    .map(|f| rw.chain(f, v, w, (phi, alpha)))
                    .find(|(_, end)| *end == w);
                let Some((edges, _)) = chain else {
                    return Err(CanonError::Unhandled(format!(
                        "no {alpha}/{phi} chain joins the ends of e"
                    )));
                };
                rw.step(CanonMove::SwapChain {
                    colors: (alpha, phi),
                    edges,
                })?;
                rw.step(CanonMove::SetEdgeColors {
                    colors: set.without(alpha).with(phi),
                })?;
            }
            _ => {
                return Err(CanonError::Unhandled(format!(
                    "endpoint shapes {sv:?} / {sw:?}"
                )))
            }
        }
        verify_e_coloring(g, &rw.ec).map_err(|x| CanonError::Unhandled(x.to_string()))?;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mate {
    pub color: Color,
    /// Odd side of the cut.
    pub side: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// For each color other than `color`, the member edge assigned it.
    pub profile: Vec<(Color, EdgeId)>,
    pub trivial: bool,
    /// Member edges assigned `color`, `e` included when it carries it.
    pub color_edges: usize,
    /// `e` carries five colors; the definition is applied verbatim.
    pub needs_inspection: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum MateOutcome {
    Found {
        mate: Mate,
    },
    /// No mate. Non-trivial cuts with the right profile but fewer than five
    /// edges of the color are listed as witnesses that the graph is not a
    /// minimal counterexample.
    NoneFound {
        short_candidates: Vec<Mate>,
    },
    ProperColoringExtracted {
        coloring: EdgeColoring,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MateError {
    #[error("input is not a valid e-coloring: {0}")]
    Invalid(#[from] EColoringViolation),
    #[error(transparent)]
    Cut(#[from] CutError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MateOptions {
    pub cap: usize,
    /// After an unsuccessful search, look for a proper coloring of the graph.
    pub extract_proper: bool,
}

impl Default for MateOptions {
    fn default() -> Self {
        MateOptions {
            cap: DEFAULT_CUT_CAP,
            extract_proper: false,
        }
    }
}

fn mate_candidate(g: &PlaneMultigraph, ec: &EColoring, c: Color, mask: u64) -> Option<Mate> {
    let edges = cut_edges(g, mask);
    if !edges.contains(&ec.edge) {
        return None;
    }
    let mut counts = [0usize; 6];
    let mut owner: [Option<EdgeId>; 6] = [None; 6];
    for &f in &edges {
        for k in Color::ALL {
            if ec.carries(f, k) {
                counts[k.index()] += 1;
                owner[k.index()] = Some(f);
            }
        }
    }
    if Color::ALL.iter().any(|&k| k != c && counts[k.index()] != 1) {
        return None;
    }
    let n = g.vertex_count();
    let k = mask.count_ones() as usize;
    let odd_mask = if k % 2 == 1 {
        mask
    } else {
        !mask & (u64::MAX >> (64 - n))
    };
    Some(Mate {
        color: c,
        side: (0..n).filter(|&v| odd_mask >> v & 1 == 1).collect(),
        profile: Color::ALL
            .iter()
            .filter(|&&k| k != c)
            .map(|&k| (k, owner[k.index()].unwrap()))
            .collect(),
        trivial: k == 1 || k + 1 == n,
        color_edges: counts[c.index()],
        needs_inspection: ec.e_colors.len() == 5,
        edges,
    })
}

/// Searches the trivial cuts at the ends of `e`, then every other odd cut
/// in ascending side-mask order.
pub fn find_mate(
    g: &PlaneMultigraph,
    ec: &EColoring,
    c: Color,
    opts: &MateOptions,
) -> Result<MateOutcome, MateError> {
    verify_e_coloring(g, ec)?;
    let (u, v) = g.endpoints(ec.edge);
    for x in [u, v] {
        if let Some(mate) = mate_candidate(g, ec, c, 1 << x) {
            return Ok(MateOutcome::Found { mate });
        }
    }
    let n = g.vertex_count();
    let mut masks = Vec::new();
    for_each_cut(g, opts.cap, |mask, _| {
        let k = mask.count_ones() as usize;
        let odd = k % 2 == 1 || (n - k) % 2 == 1;
        if odd && k >= 2 && n - k >= 2 {
            masks.push(mask);
        }
    })?;
    masks.sort_unstable();
    let mut short = Vec::new();
    for mask in masks {
        if let Some(mate) = mate_candidate(g, ec, c, mask) {
            if mate.color_edges >= 5 {
                return Ok(MateOutcome::Found { mate });
            }
            short.push(mate);
        }
    }
    if opts.extract_proper && g.is_regular(6) {
        if let Ok(SolveOutcome::Found { coloring, .. }) =
            find_six_edge_coloring(g, &SolverConfig::default())
        {
            return Ok(MateOutcome::ProperColoringExtracted { coloring });
        }
    }
    Ok(MateOutcome::NoneFound {
        short_candidates: short,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::{generate, InstanceSpec};
    use Color::*;

    fn hb6() -> PlaneMultigraph {
        generate(&InstanceSpec::Hexabond).unwrap()
    }

    fn set(cs: &[Color]) -> ColorSet {
        cs.iter().copied().collect()
    }

    fn ec(e_colors: &[Color], others: &[Color]) -> EColoring {
        let mut all = vec![Alpha];
        all.extend_from_slice(others);
        EColoring::new(0, set(e_colors), &all)
    }

    #[test]
    fn first_hexabond_solution() {
        let out = find_e_coloring(&hb6(), 0, DEFAULT_ECOLOR_BUDGET).unwrap();
        let EColorOutcome::Found { coloring, .. } = out else {
            panic!("expected a coloring");
        };
        assert_eq!(
            coloring,
            ec(&[Alpha, Beta, Gamma], &[Alpha, Alpha, Delta, Epsilon, Phi])
        );
    }

    #[test]
    fn verifier_cases() {
        let g = hb6();
        verify_e_coloring(
            &g,
            &ec(&[Alpha, Beta, Gamma], &[Delta, Epsilon, Phi, Phi, Phi]),
        )
        .unwrap();
        assert_eq!(
            verify_e_coloring(&g, &ec(&[Alpha, Beta], &[Gamma, Delta, Epsilon, Phi, Phi])),
            Err(EColoringViolation::SetSize(2))
        );
        assert_eq!(
            verify_e_coloring(
                &g,
                &ec(&[Alpha, Beta, Gamma, Delta], &[Epsilon, Phi, Phi, Phi, Phi])
            ),
            Err(EColoringViolation::SetSize(4))
        );
        assert!(matches!(
            verify_e_coloring(
                &g,
                &ec(&[Alpha, Beta, Gamma], &[Delta, Epsilon, Phi, Phi, Alpha])
            ),
            Err(EColoringViolation::EvenCount { vertex: 0, .. })
        ));
    }

    #[test]
    fn canonical_input_is_unchanged() {
        let g = hb6();
        let input = ec(&[Alpha, Beta, Gamma], &[Alpha, Alpha, Delta, Epsilon, Phi]);
        assert_eq!(
            canonicalize_trigon(&g, &input).unwrap(),
            CanonOutcome::Canonical {
                coloring: input,
                moves: vec![]
            }
        );
    }

    #[test]
    fn tripled_ends_become_canonical() {
        let g = hb6();
        let input = ec(&[Alpha, Beta, Gamma], &[Delta, Epsilon, Phi, Phi, Phi]);
        let CanonOutcome::Canonical { coloring, moves } = canonicalize_trigon(&g, &input).unwrap()
        else {
            panic!("expected canonical output");
        };
        assert!(is_canonical(&g, &coloring));
        assert!(moves
            .iter()
            .any(|m| matches!(m, CanonMove::SwapChain { .. })));
    }

    #[test]
    fn bigon_edge_is_rejected() {
        let g = generate(&InstanceSpec::Dk4).unwrap();
        let EColorOutcome::Found { coloring, .. } =
            find_e_coloring(&g, 0, DEFAULT_ECOLOR_BUDGET).unwrap()
        else {
            panic!("dk4 has e-colorings");
        };
        assert_eq!(
            canonicalize_trigon(&g, &coloring),
            Err(CanonError::OrderTooSmall { edge: 0, order: 2 })
        );
    }

    #[test]
    fn hexabond_mates() {
        let g = hb6();
        let canon = ec(&[Alpha, Beta, Gamma], &[Alpha, Alpha, Delta, Epsilon, Phi]);
        let MateOutcome::Found { mate } =
            find_mate(&g, &canon, Alpha, &MateOptions::default()).unwrap()
        else {
            panic!("alpha-mate exists");
        };
        assert!(mate.trivial);
        assert_eq!(mate.side, vec![0]);
        assert_eq!(
            find_mate(&g, &canon, Delta, &MateOptions::default()).unwrap(),
            MateOutcome::NoneFound {
                short_candidates: vec![]
            }
        );
        let opts = MateOptions {
            extract_proper: true,
            ..MateOptions::default()
        };
        assert!(matches!(
            find_mate(&g, &canon, Delta, &opts).unwrap(),
            MateOutcome::ProperColoringExtracted { .. }
        ));
    }

    #[test]
    fn odd_sets_order() {
        let sets = odd_color_sets();
        assert_eq!(sets.len(), 26);
        assert_eq!(sets[0], set(&[Alpha, Beta, Gamma]));
        assert_eq!(sets[20].len(), 5);
    }
}
