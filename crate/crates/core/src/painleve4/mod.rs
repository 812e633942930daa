//! Fourth Painlevé equation: exact residuals, rational-solution hierarchies and
//! parameter bookkeeping.

mod classify;
mod hierarchy;
mod params;
mod residual;

pub use classify::{classify_family, TableFamily, TableMatch, SCAN_BOUND};
pub use hierarchy::{
    hierarchy_solution, supported_okamoto_indices, Family, HierarchySolution, P4Params,
};
pub use params::{to_andrianov, AndrianovParams};
pub use residual::{p4_cleared_residual, p4_residual};
