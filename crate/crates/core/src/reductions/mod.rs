//! Reducible configurations: the swap operation, the catalog of structural
//! lemmas with their matchers, and coloring lifters.

mod catalog;
mod lift;
mod swap;

pub use catalog::{match_catalog, Catalog, ConfigMatch, LemmaFamily, LemmaId, Skipped};
pub use lift::{
    lift_coloring, lift_odd_cut, run_lifter, Bundle, LiftError, LiftOutcome, LiftReport,
};
pub use swap::{
    apply_swap, check_swap_cut_property, enumerate_swaps, validate_swap, CutPerturbation,
    SwapError, SwapResult, SwapSpec,
};
