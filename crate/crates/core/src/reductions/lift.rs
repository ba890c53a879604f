//! Lifting a 6-edge-coloring of a reduced graph back to the original.
//!
//! For a swap, let `C_i` be the colors on the edges joining `v_{2i-1}` and
//! `v_{2i}` in the reduced graph. A color `c` common to every `C_i` lifts:
//! drop one `c`-edge from each of those bundles and give `c` to the removed
//! edges `v2v3, …, vkv1`. Every vertex of the swap loses one `c`-edge and
//! regains one. When no common color exists the sets are reported.

use super::catalog::{ConfigMatch, LemmaId};
use super::swap::{apply_swap, SwapError, SwapResult, SwapSpec};
use crate::coloring::{
    find_six_edge_coloring, verify_coloring, Color, ColorSet, ColoringError, ColoringViolation,
    EdgeColoring, SolveOutcome, SolverConfig,
};
use crate::cuts::{combine_colorings, split_along_cut, CutError, SplitResult};
use crate::plane_graph::{PlaneMultigraph, VertexId};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("{0} is a checker-only lemma; it has no lifter")]
    CheckerOnly(LemmaId),
    #[error("match of {0} carries no usable swap")]
    NoSwap(LemmaId),
    #[error("odd-cut match carries no cut")]
    NoCut,
    #[error(transparent)]
    Swap(#[from] SwapError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error("coloring of the reduced graph is invalid: {0}")]
    ReducedColoring(ColoringViolation),
    #[error("solver: {0}")]
    Solver(#[from] ColoringError),
    #[error("reduced graph was not colored: {0}")]
    Uncolored(String),
    #[error("lifted coloring failed verification: {0}")]
    Lifted(ColoringViolation),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bundle {
    pub pair: (VertexId, VertexId),
    pub colors: ColorSet,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum LiftOutcome {
    Colored {
        coloring: EdgeColoring,
        #[serde(skip_serializing_if = "Option::is_none")]
        common: Option<Color>,
    },
    /// No color is shared by all bundles; the reduced coloring is one of the
    /// forced patterns the lemma's argument has to break with Kempe changes.
    Forced { bundles: Vec<Bundle> },
}

/// Lifts `col` on `reduced.graph` to a coloring of `g`.
pub fn lift_coloring(
    g: &PlaneMultigraph,
    m: &ConfigMatch,
    reduced: &SwapResult,
    col: &EdgeColoring,
) -> Result<LiftOutcome, LiftError> {
    if !m.lemma.has_lifter() {
        return Err(LiftError::CheckerOnly(m.lemma));
    }
    let h = &reduced.graph;
    verify_coloring(h, col).map_err(LiftError::ReducedColoring)?;
    let spec: &SwapSpec = &reduced.spec;
    let bundles: Vec<Bundle> = spec
        .new_pairs()
        .into_iter()
        .map(|(u, v)| Bundle {
            pair: (u, v),
            colors: h
                .edges_between(u, v)
                .into_iter()
                .map(|e| col.get(e))
                .collect(),
        })
        .collect();
    let common = bundles
        .iter()
        .fold(ColorSet::FULL, |acc, b| acc.intersection(b.colors))
        .first();
    let Some(c) = common else {
        return Ok(LiftOutcome::Forced { bundles });
    };

    let mut out: Vec<Option<Color>> = vec![None; g.edge_count()];
    for (e, origin) in reduced.origin.iter().enumerate() {
        if let Some(o) = origin {
            out[*o] = Some(col.get(e));
        }
    }
    for (i, (u, v)) in spec.new_pairs().into_iter().enumerate() {
        let added = reduced.new_edges[i];
        let dropped = h
            .edges_between(u, v)
            .into_iter()
            .find(|&e| col.get(e) == c)
            .expect("c lies in every bundle");
        // the new edge's color moves onto the original copy that held c
        if dropped != added {
            let o = reduced.origin[dropped].expect("only one new edge per bundle");
            out[o] = Some(col.get(added));
        }
    }
    for &e in spec.removed.as_deref().unwrap_or_default() {
        out[e] = Some(c);
    }
    let coloring = EdgeColoring::new(
        out.into_iter()
            .map(|x| x.expect("every edge lifted"))
            .collect(),
    );
    verify_coloring(g, &coloring).map_err(LiftError::Lifted)?;
    Ok(LiftOutcome::Colored {
        coloring,
        common: Some(c),
    })
}

/// Lifts colorings of the two sides of an odd cut.
pub fn lift_odd_cut(
    g: &PlaneMultigraph,
    split: &SplitResult,
    col_a: &EdgeColoring,
    col_b: &EdgeColoring,
) -> Result<LiftOutcome, LiftError> {
    let coloring = combine_colorings(g, split, col_a, col_b)?;
    verify_coloring(g, &coloring).map_err(LiftError::Lifted)?;
    Ok(LiftOutcome::Colored {
        coloring,
        common: None,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftReport {
    pub lemma: LemmaId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swap: Option<SwapSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut: Option<Vec<VertexId>>,
    /// Edge counts of the reduced graph or of the two parts.
    pub reduced_edges: Vec<usize>,
    pub outcome: LiftOutcome,
}

fn solve(g: &PlaneMultigraph, cfg: &SolverConfig) -> Result<EdgeColoring, LiftError> {
    match find_six_edge_coloring(g, cfg)? {
        SolveOutcome::Found { coloring, .. } => Ok(coloring),
        other => Err(LiftError::Uncolored(format!("{other:?}"))),
    }
}

/// Reduces along the match, colors the smaller graph(s) with the solver and lifts.
pub fn run_lifter(
    g: &PlaneMultigraph,
    m: &ConfigMatch,
    cfg: &SolverConfig,
) -> Result<LiftReport, LiftError> {
    if !m.lemma.has_lifter() {
        return Err(LiftError::CheckerOnly(m.lemma));
    }
    if m.lemma == LemmaId::OddCut {
        let side = m.cut.as_ref().ok_or(LiftError::NoCut)?;
        let split = split_along_cut(g, side)?;
        let col_a = solve(&split.part_a.graph, cfg)?;
        let col_b = solve(&split.part_b.graph, cfg)?;
        let outcome = lift_odd_cut(g, &split, &col_a, &col_b)?;
        return Ok(LiftReport {
            lemma: m.lemma,
            swap: None,
            cut: Some(side.clone()),
            reduced_edges: vec![
                split.part_a.graph.edge_count(),
                split.part_b.graph.edge_count(),
            ],
            outcome,
        });
    }
    let spec = m.swap.as_ref().ok_or(LiftError::NoSwap(m.lemma))?;
    let reduced = apply_swap(g, spec)?;
    let col = solve(&reduced.graph, cfg)?;
    let outcome = lift_coloring(g, m, &reduced, &col)?;
    Ok(LiftReport {
        lemma: m.lemma,
        swap: reduced.spec.clone().into(),
        cut: None,
        reduced_edges: vec![reduced.graph.edge_count()],
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::DEFAULT_CUT_CAP;
    use crate::reductions::match_catalog;
    use crate::workbench::{generate, InstanceSpec};

    #[test]
    fn dk4_lifts_through_its_violation() {
        let g = generate(&InstanceSpec::Dk4).unwrap();
        let cat = match_catalog(&g, DEFAULT_CUT_CAP);
        let m = cat.violations().next().unwrap();
        let rep = run_lifter(&g, m, &SolverConfig::default()).unwrap();
        match rep.outcome {
            LiftOutcome::Colored { coloring, .. } => verify_coloring(&g, &coloring).unwrap(),
            LiftOutcome::Forced { bundles } => {
                assert!(bundles
                    .iter()
                    .fold(ColorSet::FULL, |a, b| a.intersection(b.colors))
                    .is_empty())
            }
        }
    }

    #[test]
    fn odd_cut_lifts_on_the_prism() {
        let g = generate(&InstanceSpec::DoubledPrism(3)).unwrap();
        let cat = match_catalog(&g, DEFAULT_CUT_CAP);
        let m = cat
            .matches
            .iter()
            .find(|m| m.lemma == LemmaId::OddCut)
            .unwrap();
        let rep = run_lifter(&g, m, &SolverConfig::default()).unwrap();
        assert!(matches!(rep.outcome, LiftOutcome::Colored { .. }));
    }

    #[test]
    fn checker_only_lemmas_refuse() {
        let g = generate(&InstanceSpec::C4x3).unwrap();
        let cat = match_catalog(&g, DEFAULT_CUT_CAP);
        let m = cat
            .matches
            .iter()
            .find(|m| m.lemma == LemmaId::TrigonTwoBig)
            .unwrap();
        let err = run_lifter(&g, m, &SolverConfig::default()).unwrap_err();
        assert!(err.to_string().contains("checker-only lemma"));
    }
}
