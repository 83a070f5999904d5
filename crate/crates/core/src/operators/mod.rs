//! Path-scoped similarity operators.
//!
//! An operator is consulted for every comparison whose rendered left path
//! matches its rule. It either decides the score (`Ok(Some(score))`) or
//! declines (`Ok(None)`), in which case the next matching operator, and
//! finally the default similarity, is tried. Scores are clamped to [0, 1].
//!
//! The built-ins below use nothing beyond this trait and the public
//! [`DiffContext`] API.

mod builtin;

pub use builtin::{
    edit_distance_operator, ignore_operator, l2_distance_operator, levenshtein, string_similarity,
    unordered_operator, EditDistanceOperator, IgnoreOperator, L2DistanceOperator,
    UnorderedOperator, EDIT_DISTANCE_EVENT, L2_DISTANCE_EVENT,
};

use crate::error::DiffError;
use crate::json::{JsonPath, JsonValue, PathRule};
use crate::similarity::DiffContext;

/// The pair under comparison. A side is `None` when the value does not exist
/// there (e.g. a key present in only one object).
#[derive(Debug, Clone, Copy)]
pub struct Level<'p, 'v> {
    pub left: Option<&'v JsonValue>,
    pub right: Option<&'v JsonValue>,
    pub left_path: &'p JsonPath,
    pub right_path: &'p JsonPath,
}

pub trait Operator: Send + Sync {
    /// Unique within one configuration.
    fn name(&self) -> &str;

    fn rule(&self) -> &PathRule;

    /// Report events through [`DiffContext::report`], which drops them while
    /// the context is drilling.
    fn compare<'v>(
        &self,
        level: &Level<'_, 'v>,
        ctx: &mut DiffContext<'_, 'v>,
    ) -> Result<Option<f64>, DiffError>;
}

impl std::fmt::Debug for dyn Operator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Operator")
            .field("name", &self.name())
            .field("path_regex", &self.rule().pattern())
            .finish()
    }
}
