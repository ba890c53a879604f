//! Six-edge-colorings, Kempe chains, and T-join packings.
//!
//! In a 6-regular graph with `T = V`, six edge-disjoint T-joins are the same
//! thing as a proper 6-edge-coloring: each color class is a perfect matching.

use crate::plane_graph::{DartId, EdgeId, PlaneMultigraph, VertexId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
    Phi,
}

impl Color {
    pub const ALL: [Color; 6] = [
        Color::Alpha,
        Color::Beta,
        Color::Gamma,
        Color::Delta,
        Color::Epsilon,
        Color::Phi,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Color {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["alpha", "beta", "gamma", "delta", "epsilon", "phi"][self.index()]
    }

    fn bit(self) -> u8 {
        1 << self.index()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let found = match lower.as_str() {
            "a" | "α" => Some(Color::Alpha),
            "b" | "β" => Some(Color::Beta),
            "c" | "γ" => Some(Color::Gamma),
            "d" | "δ" => Some(Color::Delta),
            "e" | "ε" => Some(Color::Epsilon),
            "f" | "φ" => Some(Color::Phi),
            _ => Color::ALL.into_iter().find(|c| c.name() == lower),
        };
        found
            .or_else(|| {
                lower
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i < 6)
                    .map(Color::from_index)
            })
            .ok_or_else(|| format!("unknown color {s:?}"))
    }
}

/// A subset of the six colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0x3f);

    pub fn from_bits(bits: u8) -> ColorSet {
        ColorSet(bits & 0x3f)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= c.bit();
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !c.bit();
    }

    pub fn with(mut self, c: Color) -> ColorSet {
        self.insert(c);
        self
    }

    pub fn without(mut self, c: Color) -> ColorSet {
        self.remove(c);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self) -> ColorSet {
        ColorSet(!self.0 & 0x3f)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    pub fn first(self) -> Option<Color> {
        self.iter().next()
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Vec::<Color>::deserialize(d)?.into_iter().collect())
    }
}

/// A total map edge id -> color. Serialized as `{"<edge-id>": "<color>"}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring(Vec<Color>);

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        EdgeColoring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Color {
        self.0[e]
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.0[e] = c;
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    /// Edges of one color, ascending.
    pub fn class(&self, c: Color) -> Vec<EdgeId> {
        (0..self.0.len()).filter(|&e| self.0[e] == c).collect()
    }

    /// Applies a color permutation given as `perm[old.index()] = new`.
    pub fn permuted(&self, perm: &[Color; 6]) -> EdgeColoring {
        EdgeColoring(self.0.iter().map(|c| perm[c.index()]).collect())
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().enumerate())
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<usize, Color>::deserialize(d)?;
        let colors: Vec<Color> = map.values().copied().collect();
        if map.keys().copied().ne(0..colors.len()) {
            return Err(serde::de::Error::custom("edge ids must be 0..E"));
        }
        Ok(EdgeColoring(colors))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringViolation {
    #[error("coloring covers {found} edges, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {vertex} sees {color} on edges {first} and {second}")]
    Conflict {
        vertex: VertexId,
        color: Color,
        first: EdgeId,
        second: EdgeId,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("graph is not 6-regular")]
    NotSixRegular,
    #[error("colors of a Kempe chain must differ")]
    SameColors,
    #[error("start edge {edge} is colored {color}, not one of the chain colors")]
    StartColor { edge: EdgeId, color: Color },
    #[error("invalid coloring: {0}")]
    Invalid(#[from] ColoringViolation),
    #[error("packing needs T = V")]
    TerminalsNotAll,
    #[error("dart {0} out of range")]
    BadDart(DartId),
}

pub fn verify_coloring(g: &PlaneMultigraph, col: &EdgeColoring) -> Result<(), ColoringViolation> {
    if col.len() != g.edge_count() {
        return Err(ColoringViolation::WrongLength {
            expected: g.edge_count(),
            found: col.len(),
        });
    }
    for v in 0..g.vertex_count() {
        let mut seen: [Option<EdgeId>; 6] = [None; 6];
        for e in g.incident_edges(v) {
            let c = col.get(e);
            if let Some(first) = seen[c.index()] {
                return Err(ColoringViolation::Conflict {
                    vertex: v,
                    color: c,
                    first,
                    second: e,
                });
            }
            seen[c.index()] = Some(e);
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainShape {
    Cycle,
    Path,
}

/// A maximal path or cycle of edges alternating between two colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub edges: Vec<EdgeId>,
    pub colors: (Color, Color),
    pub shape: ChainShape,
}

/// Walks from `from` along `first`, alternating the two colors, until the
/// chain stops or returns to `first`. Returns visited edges after `first`
/// and whether the walk closed up.
pub(crate) fn walk_alternating(
    g: &PlaneMultigraph,
    color_of: impl Fn(EdgeId) -> Option<Color>,
    first: EdgeId,
    from: VertexId,
    pair: (Color, Color),
    stop_at: impl Fn(VertexId) -> bool,
) -> (Vec<EdgeId>, VertexId, bool) {
    let mut out = Vec::new();
    let mut prev = first;
    let mut at = g.other_end(first, from);
    loop {
        if stop_at(at) {
            return (out, at, false);
        }
        let want = match color_of(prev) {
            Some(c) if c == pair.0 => pair.1,
            _ => pair.0,
        };
        let next = g
            .incident_edges(at)
            .find(|&e| e != prev && color_of(e) == Some(want));
        match next {
            Some(e) if e == first => return (out, at, true),
            Some(e) => {
                out.push(e);
                at = g.other_end(e, at);
                prev = e;
            }
            None => return (out, at, false),
        }
    }
}

/// The `a`/`b` chain through `start`'s edge in a proper coloring.
pub fn kempe_chain(
    g: &PlaneMultigraph,
    col: &EdgeColoring,
    start: DartId,
    a: Color,
    b: Color,
) -> Result<Chain, ColoringError> {
    if a == b {
        return Err(ColoringError::SameColors);
    }
    if start >= g.dart_count() {
        return Err(ColoringError::BadDart(start));
    }
    let e0 = g.edge_of(start);
    let c0 = col.get(e0);
    if c0 != a && c0 != b {
        return Err(ColoringError::StartColor {
            edge: e0,
            color: c0,
        });
    }
    let color_of = |e: EdgeId| Some(col.get(e));
    let tail = g.tail(start);
    let (fwd, _, closed) = walk_alternating(g, color_of, e0, tail, (a, b), |_| false);
    if closed {
        let mut edges = vec![e0];
        edges.extend(fwd);
        return Ok(Chain {
            edges,
            colors: (a, b),
            shape: ChainShape::Cycle,
        });
    }
    let head = g.head(start);
    let (back, _, _) = walk_alternating(g, color_of, e0, head, (a, b), |_| false);
    let mut edges: Vec<EdgeId> = back.into_iter().rev().collect();
    edges.push(e0);
    edges.extend(fwd);
    Ok(Chain {
        edges,
        colors: (a, b),
        shape: ChainShape::Path,
    })
}

/// Exchanges `a` and `b` along the chain through `start`.
pub fn kempe_swap(
    g: &PlaneMultigraph,
    col: &EdgeColoring,
    start: DartId,
    a: Color,
    b: Color,
) -> Result<(Chain, EdgeColoring), ColoringError> {
    let chain = kempe_chain(g, col, start, a, b)?;
    let mut out = col.clone();
    for &e in &chain.edges {
        out.set(e, if col.get(e) == a { b } else { a });
    }
    Ok((chain, out))
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;
/// Largest edge count at which an exhausted budget falls back to a complete search.
pub const ORACLE_EDGE_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search-node limit; ignored when `exhaustive` is set.
    pub budget: u64,
    pub seed: u64,
    pub exhaustive: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            seed: 0,
            exhaustive: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SolveOutcome {
    Found {
        coloring: EdgeColoring,
        nodes: u64,
    },
    /// A complete search found nothing: the graph has no 6-edge-coloring.
    NoColoring {
        nodes: u64,
    },
    /// Inconclusive.
    NoneWithinBudget {
        nodes: u64,
    },
}

impl SolveOutcome {
    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match self {
            SolveOutcome::Found { coloring, .. } => Some(coloring),
            _ => None,
        }
    }
}

/// Color order used for value selection. Seed 0 keeps the natural order.
fn value_order(seed: u64) -> [Color; 6] {
    let mut order = Color::ALL;
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    order
}

struct Search<'a> {
    g: &'a PlaneMultigraph,
    colors: Vec<Option<Color>>,
    used: Vec<u8>,
    order: [Color; 6],
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a PlaneMultigraph, order: [Color; 6], budget: Option<u64>) -> Self {
        Search {
            g,
            colors: vec![None; g.edge_count()],
            used: vec![0; g.vertex_count()],
            order,
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn available(&self, e: EdgeId) -> u8 {
        let (u, v) = self.g.endpoints(e);
        !(self.used[u] | self.used[v]) & 0x3f
    }

    fn assign(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.g.endpoints(e);
        self.colors[e] = Some(c);
        self.used[u] |= c.bit();
        self.used[v] |= c.bit();
    }

    fn unassign(&mut self, e: EdgeId) {
        let (u, v) = self.g.endpoints(e);
        if let Some(c) = self.colors[e].take() {
            self.used[u] &= !c.bit();
            self.used[v] &= !c.bit();
        }
    }

    /// Uncolored edge with the fewest available colors, lowest id on ties.
    fn pick(&self) -> Option<EdgeId> {
        let mut best: Option<(u32, EdgeId)> = None;
        for e in 0..self.colors.len() {
            if self.colors[e].is_none() {
                let k = self.available(e).count_ones();
                if best.is_none_or(|(bk, _)| k < bk) {
                    best = Some((k, e));
                    if k == 0 {
                        break;
                    }
                }
            }
        }
        best.map(|(_, e)| e)
    }

    /// Makes room for `e = uv` by swapping an alternating chain that starts
    /// at one endpoint and avoids the other. Returns the state to restore.
    fn kempe_repair(&mut self, e: EdgeId) -> Option<(Vec<Option<Color>>, Vec<u8>)> {
        let (u, v) = self.g.endpoints(e);
        for (x, y) in [(u, v), (v, u)] {
            for a in self.order {
                if self.used[x] & a.bit() != 0 {
                    continue;
                }
                for b in self.order {
                    if b == a || self.used[y] & b.bit() != 0 {
                        continue;
                    }
                    // a is free at x and used at y; start at y's a-edge.
                    let Some(start) = self
                        .g
                        .incident_edges(y)
                        .find(|&f| self.colors[f] == Some(a))
                    else {
                        continue;
                    };
                    let colors = &self.colors;
                    let (rest, end, _) =
                        walk_alternating(self.g, |f| colors[f], start, y, (a, b), |_| false);
                    if end == x {
                        continue;
                    }
                    let saved = (self.colors.clone(), self.used.clone());
                    let mut chain = vec![start];
                    chain.extend(rest);
                    for &f in &chain {
                        self.unassign(f);
                    }
                    for &f in &chain {
                        let c = if saved.0[f] == Some(a) { b } else { a };
                        self.assign(f, c);
                    }
                    self.assign(e, a);
                    return Some(saved);
                }
            }
        }
        None
    }

    fn dfs(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return false;
        }
        let Some(e) = self.pick() else {
            return true;
        };
        let avail = self.available(e);
        if avail == 0 {
            if let Some((colors, used)) = self.kempe_repair(e) {
                if self.dfs() {
                    return true;
                }
                self.colors = colors;
                self.used = used;
            }
            return false;
        }
        for c in self.order {
            if avail & c.bit() == 0 {
                continue;
            }
            self.assign(e, c);
            if self.dfs() {
                return true;
            }
            self.unassign(e);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

fn run_search(g: &PlaneMultigraph, order: [Color; 6], budget: Option<u64>) -> SolveOutcome {
    let mut s = Search::new(g, order, budget);
    if s.dfs() {
        let coloring = EdgeColoring(s.colors.into_iter().map(|c| c.unwrap()).collect());
        SolveOutcome::Found {
            coloring,
            nodes: s.nodes,
        }
    } else if s.exhausted {
        SolveOutcome::NoneWithinBudget { nodes: s.nodes }
    } else {
        SolveOutcome::NoColoring { nodes: s.nodes }
    }
}

/// Backtracking search for a proper 6-edge-coloring.
///
/// Edges are taken most-constrained first; a dead end tries one Kempe-chain
/// repair before backtracking. Without a budget the search is complete, so a
/// `NoColoring` verdict is only ever reported by a complete run.
pub fn find_six_edge_coloring(
    g: &PlaneMultigraph,
    config: &SolverConfig,
) -> Result<SolveOutcome, ColoringError> {
    if !g.is_regular(6) {
        return Err(ColoringError::NotSixRegular);
    }
    let order = value_order(config.seed);
    if config.exhaustive {
        return Ok(run_search(g, order, None));
    }
    let first = run_search(g, order, Some(config.budget));
    match first {
        SolveOutcome::NoneWithinBudget { nodes } if g.edge_count() <= ORACLE_EDGE_CAP => {
            Ok(match run_search(g, order, None) {
                SolveOutcome::Found { coloring, nodes: n } => SolveOutcome::Found {
                    coloring,
                    nodes: nodes + n,
                },
                SolveOutcome::NoColoring { nodes: n } => {
                    SolveOutcome::NoColoring { nodes: nodes + n }
                }
                other => other,
            })
        }
        other => Ok(other),
    }
}

/// Six pairwise edge-disjoint edge sets, one per color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TJoinPacking {
    pub terminals: Vec<VertexId>,
    pub classes: Vec<Vec<EdgeId>>,
}

pub fn packing_from_coloring(
    g: &PlaneMultigraph,
    col: &EdgeColoring,
) -> Result<TJoinPacking, ColoringError> {
    verify_coloring(g, col)?;
    let terminals = g.terminals();
    if terminals.len() != g.vertex_count() {
        return Err(ColoringError::TerminalsNotAll);
    }
    Ok(TJoinPacking {
        terminals,
        classes: Color::ALL.iter().map(|&c| col.class(c)).collect(),
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PackingViolation {
    #[error("terminal set has odd size {0}")]
    OddTerminals(usize),
    #[error("terminal {0} is not a vertex")]
    BadTerminal(VertexId),
    #[error("edge {0} is not an edge of the graph")]
    UnknownEdge(EdgeId),
    #[error("not disjoint: edge {edge} appears in classes {first} and {second}")]
    NotDisjoint {
        edge: EdgeId,
        first: usize,
        second: usize,
    },
    #[error("class {class} has degree parity {parity} at vertex {vertex}")]
    WrongParity {
        class: usize,
        vertex: VertexId,
        parity: usize,
    },
}

/// Checks pairwise disjointness and that each class has odd degree exactly on `terminals`.
pub fn verify_packing(
    g: &PlaneMultigraph,
    terminals: &[VertexId],
    packing: &TJoinPacking,
) -> Result<(), PackingViolation> {
    if terminals.len() % 2 == 1 {
        return Err(PackingViolation::OddTerminals(terminals.len()));
    }
    let n = g.vertex_count();
    let mut is_t = vec![false; n];
    for &t in terminals {
        *is_t.get_mut(t).ok_or(PackingViolation::BadTerminal(t))? = true;
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.edge_count()];
    for (k, class) in packing.classes.iter().enumerate() {
        for &e in class {
            let slot = owner.get_mut(e).ok_or(PackingViolation::UnknownEdge(e))?;
            if let Some(first) = *slot {
                return Err(PackingViolation::NotDisjoint {
                    edge: e,
                    first,
                    second: k,
                });
            }
            *slot = Some(k);
        }
    }
    for (k, class) in packing.classes.iter().enumerate() {
        let mut deg = vec![0usize; n];
        for &e in class {
            let (a, b) = g.endpoints(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        if let Some(v) = (0..n).find(|&v| (deg[v] % 2 == 1) != is_t[v]) {
            return Err(PackingViolation::WrongParity {
                class: k,
                vertex: v,
                parity: deg[v] % 2,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::{generate, InstanceSpec};

    fn rainbow(g: &PlaneMultigraph) -> EdgeColoring {
        EdgeColoring::new((0..g.edge_count()).map(Color::from_index).collect())
    }

    #[test]
    fn color_parsing() {
        assert_eq!("phi".parse::<Color>().unwrap(), Color::Phi);
        assert_eq!("β".parse::<Color>().unwrap(), Color::Beta);
        assert!("omega".parse::<Color>().is_err());
    }

    #[test]
    fn hexabond_rainbow_chain_is_two_cycle() {
        let g = generate(&InstanceSpec::Hexabond).unwrap();
        let col = rainbow(&g);
        let (chain, swapped) = kempe_swap(&g, &col, 0, Color::Alpha, Color::Beta).unwrap();
        assert_eq!(chain.shape, ChainShape::Cycle);
        assert_eq!(chain.edges, vec![0, 1]);
        assert_eq!(swapped.get(0), Color::Beta);
        assert_eq!(swapped.get(1), Color::Alpha);
        verify_coloring(&g, &swapped).unwrap();
    }

    #[test]
    fn swap_errors() {
        let g = generate(&InstanceSpec::Hexabond).unwrap();
        let col = rainbow(&g);
        assert_eq!(
            kempe_swap(&g, &col, 0, Color::Alpha, Color::Alpha).unwrap_err(),
            ColoringError::SameColors
        );
        assert!(matches!(
            kempe_swap(&g, &col, 0, Color::Gamma, Color::Delta).unwrap_err(),
            ColoringError::StartColor { .. }
        ));
    }

    #[test]
    fn verifier_names_conflict() {
        let g = generate(&InstanceSpec::Hexabond).unwrap();
        let mut col = rainbow(&g);
        col.set(1, Color::Alpha);
        assert!(matches!(
            verify_coloring(&g, &col),
            Err(ColoringViolation::Conflict {
                color: Color::Alpha,
                ..
            })
        ));
    }

    #[test]
    fn packing_rejects_shared_edge() {
        let g = generate(&InstanceSpec::Hexabond).unwrap();
        let mut p = packing_from_coloring(&g, &rainbow(&g)).unwrap();
        verify_packing(&g, &[0, 1], &p).unwrap();
        p.classes[1].push(0);
        assert!(matches!(
            verify_packing(&g, &[0, 1], &p),
            Err(PackingViolation::NotDisjoint { edge: 0, .. })
        ));
    }

    #[test]
    fn solver_rejects_irregular() {
        let g = generate(&InstanceSpec::TripledCycle(3)).unwrap();
        assert!(find_six_edge_coloring(&g, &SolverConfig::default()).is_ok());
        let ends = vec![(0, 1); 3];
        let rot = vec![vec![0, 1, 2], vec![2, 1, 0]];
        let g3 = PlaneMultigraph::from_edge_rotations(&ends, &rot, None).unwrap();
        assert_eq!(
            find_six_edge_coloring(&g3, &SolverConfig::default()).unwrap_err(),
            ColoringError::NotSixRegular
        );
    }

    #[test]
    fn seeds_change_order_not_validity() {
        let g = generate(&InstanceSpec::Dk4).unwrap();
        for seed in 0..5 {
            let cfg = SolverConfig {
                seed,
                ..Default::default()
            };
            let out = find_six_edge_coloring(&g, &cfg).unwrap();
            verify_coloring(&g, out.coloring().unwrap()).unwrap();
            assert_eq!(out, find_six_edge_coloring(&g, &cfg).unwrap());
        }
    }
}
