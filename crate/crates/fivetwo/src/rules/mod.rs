//! Local extension and reduction rules on (graph, partial assignment) pairs.
//!
//! Each rule has explicit structural preconditions and a guarantee about which
//! vertices it leaves satisfied; the solver composes them. Rules never touch
//! vertices already assigned unless stated, and every rule checks its own
//! postcondition before returning.

pub mod almost;
pub mod attach;
pub mod cycle;
pub mod join;
pub mod orient;
pub mod path;
pub mod small;
pub mod star;
pub mod trace;

pub use almost::{almost_satisfy_at, almost_satisfy_exceptional};
pub use attach::{attach_path_to_cycle, AttachOutcome};
pub use cycle::{
    add_c5_two_tails, cycle_config, cycle_with_added_path, extend_tailed_cycle, small_extend,
    SmallExtend,
};
pub use join::join_via_path;
pub use orient::{orient_min_indegree, orient_min_outdegree, Orientation};
pub use path::{contract_degree2_path, extend_attached_path, extend_contraction, extend_path3, Contraction};
pub use small::{attach_path_to_small, k24_config};
pub use star::{extend_star, StarSpec};
pub use trace::{ReductionTrace, TraceEntry};

use crate::labeling::{LabelPair, Permutation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("structural mismatch: {0}")]
    Structure(String),
    #[error("no extension exists: {0}")]
    NoExtension(String),
}

pub(crate) fn precondition(msg: impl Into<String>) -> RuleError {
    RuleError::Precondition(msg.into())
}

pub(crate) fn structure(msg: impl Into<String>) -> RuleError {
    RuleError::Structure(msg.into())
}

/// First label permutation (in lexicographic order of image arrays)
/// satisfying the predicate.
pub(crate) fn find_permutation<F: Fn(&Permutation) -> bool>(pred: F) -> Option<Permutation> {
    Permutation::all().into_iter().find(|s| pred(s))
}

/// First permutation mapping each `from` pair onto the corresponding `to`
/// pair (as sets).
pub(crate) fn permutation_mapping_pairs(pairs: &[(LabelPair, LabelPair)]) -> Option<Permutation> {
    find_permutation(|s| pairs.iter().all(|(from, to)| from.map(s) == *to))
}
