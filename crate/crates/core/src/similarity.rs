//! The similarity function and the per-diff evaluation context.
//!
//! Every comparison goes through [`DiffContext::similarity`], which dispatches
//! in a fixed order: operators whose rule matches the left path, then the
//! absent-operand rule, then the cross-type rule, then the default
//! primitive/object/array similarity.
//!
//! While the context is *drilling* (exploratory evaluation inside array
//! matchers) nothing is recorded, and results are memoized per node pair.

use std::collections::HashMap;

use crate::array::{self, IndexPair, MatchMode};
use crate::engine::{ChangeEvent, DiffConfig, PairRecord, Recorder};
use crate::error::DiffError;
use crate::json::{JsonPath, JsonValue, Map};
use crate::operators::Level;

pub const OBJECT_ADD: &str = "object:add";
pub const OBJECT_REMOVE: &str = "object:remove";
pub const VALUE_CHANGE: &str = "value:change";
pub const ARRAY_ADD: &str = "array:add";
pub const ARRAY_REMOVE: &str = "array:remove";

/// Evaluation state of one diff execution.
///
/// `'v` is the lifetime of the documents being compared; node addresses key
/// the drill-mode memo, so every compared node must outlive the context.
pub struct DiffContext<'c, 'v> {
    config: &'c DiffConfig,
    recorder: Recorder,
    drill: bool,
    depth: usize,
    memo: HashMap<(*const JsonValue, *const JsonValue), f64>,
    _docs: std::marker::PhantomData<&'v JsonValue>,
}

impl<'c, 'v> DiffContext<'c, 'v> {
    pub fn new(config: &'c DiffConfig) -> Self {
        Self {
            config,
            recorder: Recorder::default(),
            drill: false,
            depth: 0,
            memo: HashMap::new(),
            _docs: std::marker::PhantomData,
        }
    }

    pub fn config(&self) -> &'c DiffConfig {
        self.config
    }

    pub fn is_drill(&self) -> bool {
        self.drill
    }

    /// Run `f` with reporting suppressed.
    pub fn with_drill<T>(&mut self, f: impl FnOnce(&mut Self) -> T) -> T {
        let previous = std::mem::replace(&mut self.drill, true);
        let out = f(self);
        self.drill = previous;
        out
    }

    pub fn recorder(&self) -> &Recorder {
        &self.recorder
    }

    pub fn into_recorder(self) -> Recorder {
        self.recorder
    }

    /// Record an event for `level`. A no-op while drilling.
    pub fn report(&mut self, category: &str, level: &Level<'_, 'v>, info: Option<JsonValue>) {
        if self.drill {
            return;
        }
        self.recorder.events.push(ChangeEvent {
            category: category.to_string(),
            left_path: side_path(level.left, level.left_path),
            right_path: side_path(level.right, level.right_path),
            left: level.left.cloned(),
            right: level.right.cloned(),
            info,
        });
    }

    /// Φ(left, right) where `None` stands for a non-existing value.
    pub fn similarity(
        &mut self,
        left: Option<&'v JsonValue>,
        right: Option<&'v JsonValue>,
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        let key = match (left, right) {
            (Some(l), Some(r)) if self.drill => {
                let key = (l as *const JsonValue, r as *const JsonValue);
                if let Some(&score) = self.memo.get(&key) {
                    return Ok(score);
                }
                Some(key)
            }
            _ => None,
        };

        if self.depth >= self.config.max_depth() {
            return Err(DiffError::DepthLimit {
                limit: self.config.max_depth(),
                path: left_path.to_string(),
            });
        }
        self.depth += 1;
        let result = self.dispatch(left, right, left_path, right_path);
        self.depth -= 1;

        let score = result?;
        if let Some(key) = key {
            self.memo.insert(key, score);
        }
        Ok(score)
    }

    fn dispatch(
        &mut self,
        left: Option<&'v JsonValue>,
        right: Option<&'v JsonValue>,
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        let level = Level {
            left,
            right,
            left_path,
            right_path,
        };
        if let Some(score) = self.apply_operators(&level)? {
            return Ok(score);
        }
        let (Some(l), Some(r)) = (left, right) else {
            return Ok(0.0);
        };
        match (l, r) {
            (JsonValue::Object(a), JsonValue::Object(b)) => {
                self.object_similarity(a, b, left_path, right_path)
            }
            (JsonValue::Array(a), JsonValue::Array(b)) => {
                let mode = self.config.default_mode();
                self.array_similarity(a, b, mode, left_path, right_path)
            }
            _ => {
                let score = if l.kind() == r.kind() {
                    primitive_similarity(l, r)
                } else {
                    0.0
                };
                if score < 1.0 {
                    self.report(VALUE_CHANGE, &level, None);
                }
                Ok(score)
            }
        }
    }

    /// Consult the operators whose rule matches the rendered left path, in
    /// registration order. The first one that handles the pair decides.
    pub fn apply_operators(&mut self, level: &Level<'_, 'v>) -> Result<Option<f64>, DiffError> {
        let config = self.config;
        if config.operators().is_empty() {
            return Ok(None);
        }
        let rendered = level.left_path.to_string();
        for op in config.operators() {
            if !op.rule().matches(&rendered) {
                continue;
            }
            if let Some(score) = op.compare(level, self)? {
                return Ok(Some(clamp_score(score)));
            }
        }
        Ok(None)
    }

    /// Average of Φ over the union of keys; a key present on one side only
    /// contributes Φ(value, NONE).
    pub fn object_similarity(
        &mut self,
        left: &'v Map,
        right: &'v Map,
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        let mut keys: Vec<&'v String> = left
            .keys()
            .chain(right.keys().filter(|k| !left.contains_key(*k)))
            .collect();
        if keys.is_empty() {
            return Ok(1.0);
        }
        // fixed summation order keeps Φ exactly symmetric
        keys.sort_unstable();

        let mut total = 0.0;
        for key in &keys {
            let lp = left_path.key(key);
            let rp = right_path.key(key);
            total += match (left.get(*key), right.get(*key)) {
                (Some(l), Some(r)) => self.similarity(Some(l), Some(r), &lp, &rp)?,
                (l, r) => {
                    let category = if l.is_some() {
                        OBJECT_REMOVE
                    } else {
                        OBJECT_ADD
                    };
                    self.one_sided(l, r, &lp, &rp, category)?
                }
            };
        }
        Ok(total / keys.len() as f64)
    }

    fn one_sided(
        &mut self,
        left: Option<&'v JsonValue>,
        right: Option<&'v JsonValue>,
        left_path: &JsonPath,
        right_path: &JsonPath,
        category: &str,
    ) -> Result<f64, DiffError> {
        let level = Level {
            left,
            right,
            left_path,
            right_path,
        };
        if let Some(score) = self.apply_operators(&level)? {
            return Ok(score);
        }
        self.report(category, &level, None);
        Ok(0.0)
    }

    /// Compare two arrays under `mode`: the matcher runs in drill mode, then
    /// the pairs are scored (and, outside drill mode, recorded).
    pub fn array_similarity(
        &mut self,
        left: &'v [JsonValue],
        right: &'v [JsonValue],
        mode: MatchMode,
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        if left.is_empty() && right.is_empty() {
            return Ok(1.0);
        }
        let threshold = self.config.pair_threshold();
        let pairs = self.with_drill(|ctx| -> Result<Vec<IndexPair>, DiffError> {
            let pairs = match (mode.ordered, mode.fuzzy) {
                (true, false) => {
                    let table = array::lcs_table(ctx, left, right, left_path, right_path)?;
                    array::backtrack_lcs(ctx, left, right, &table, left_path, right_path)?
                }
                (true, true) => {
                    let table =
                        array::edit_alignment_table(ctx, left, right, left_path, right_path)?;
                    let mut pairs = array::backtrack_edit_alignment(
                        ctx, left, right, &table, left_path, right_path,
                    )?;
                    pairs.retain(|p| p.score >= threshold);
                    pairs
                }
                (false, false) => {
                    array::brute_force_matching(ctx, left, right, left_path, right_path)?
                }
                (false, true) => {
                    array::unordered_fuzzy_matching(ctx, left, right, left_path, right_path)?
                }
            };
            Ok(pairs)
        })?;
        self.array_similarity_helper(left, right, &pairs, left_path, right_path)
    }

    /// 2·Σ(pair scores) / (len(left) + len(right)); 1 for two empty arrays.
    pub fn array_similarity_helper(
        &mut self,
        left: &'v [JsonValue],
        right: &'v [JsonValue],
        pairs: &[IndexPair],
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        if left.is_empty() && right.is_empty() {
            return Ok(1.0);
        }
        let total = if self.drill {
            pairs.iter().map(|p| p.score).sum()
        } else {
            self.record_array_outcome(left, right, pairs, left_path, right_path)?
        };
        Ok(2.0 * total / (left.len() + right.len()) as f64)
    }

    /// Emit pair records and add/remove events for one array comparison,
    /// descending into every pair. Returns the summed pair scores.
    pub fn record_array_outcome(
        &mut self,
        left: &'v [JsonValue],
        right: &'v [JsonValue],
        pairs: &[IndexPair],
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        let mut left_paired = vec![false; left.len()];
        let mut right_paired = vec![false; right.len()];
        let mut total = 0.0;
        for pair in pairs {
            let (i, j) = (pair.left_index, pair.right_index);
            left_paired[i] = true;
            right_paired[j] = true;
            let lp = left_path.index(i);
            let rp = right_path.index(j);
            let score = self.similarity(Some(&left[i]), Some(&right[j]), &lp, &rp)?;
            if !self.drill {
                self.recorder.pairs.push(PairRecord {
                    left_path: lp.to_string(),
                    right_path: rp.to_string(),
                    score,
                });
            }
            total += score;
        }
        let root = JsonPath::root();
        for (i, item) in left.iter().enumerate().filter(|(i, _)| !left_paired[*i]) {
            let lp = left_path.index(i);
            let level = Level {
                left: Some(item),
                right: None,
                left_path: &lp,
                right_path: &root,
            };
            self.report(ARRAY_REMOVE, &level, None);
        }
        for (j, item) in right.iter().enumerate().filter(|(j, _)| !right_paired[*j]) {
            let rp = right_path.index(j);
            let level = Level {
                left: None,
                right: Some(item),
                left_path: &root,
                right_path: &rp,
            };
            self.report(ARRAY_ADD, &level, None);
        }
        Ok(total)
    }

    /// Φ between two array elements, served from the memo when possible.
    pub(crate) fn element_similarity(
        &mut self,
        left: &'v [JsonValue],
        i: usize,
        right: &'v [JsonValue],
        j: usize,
        left_path: &JsonPath,
        right_path: &JsonPath,
    ) -> Result<f64, DiffError> {
        let (l, r) = (&left[i], &right[j]);
        if self.drill {
            if let Some(&score) = self.memo.get(&(l as *const _, r as *const _)) {
                return Ok(score);
            }
        }
        self.similarity(Some(l), Some(r), &left_path.index(i), &right_path.index(j))
    }
}

fn side_path(value: Option<&JsonValue>, path: &JsonPath) -> String {
    if value.is_some() {
        path.to_string()
    } else {
        String::new()
    }
}

/// Scores outside [0, 1] are clamped; NaN counts as 0.
pub fn clamp_score(score: f64) -> f64 {
    if score.is_nan() {
        0.0
    } else {
        score.clamp(0.0, 1.0)
    }
}

/// 1 for equal primitives, else 0. Numbers compare as `f64`.
pub fn primitive_similarity(left: &JsonValue, right: &JsonValue) -> f64 {
    if left == right {
        1.0
    } else {
        0.0
    }
}

/// Φ under `config`, discarding events.
pub fn similarity(
    left: Option<&JsonValue>,
    right: Option<&JsonValue>,
    config: &DiffConfig,
) -> Result<f64, DiffError> {
    let root = JsonPath::root();
    DiffContext::new(config).with_drill(|ctx| ctx.similarity(left, right, &root, &root))
}
