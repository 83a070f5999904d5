//! Top-level diff: configuration, execution and the serialized result.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use crate::array::MatchMode;
use crate::error::{ConfigError, DiffError, ParseError};
use crate::json::{serialize_number, JsonPath, JsonValue, PathRule, RuleKind};
use crate::operators::{ignore_operator, unordered_operator, Operator};
use crate::similarity::DiffContext;

pub const DEFAULT_PAIR_THRESHOLD: f64 = 0.5;
pub const DEFAULT_MAX_DEPTH: usize = 512;

/// Immutable diff settings. Build with [`DiffConfig::builder`].
///
/// Operators are consulted in this order: ignore rules, explicitly
/// registered operators, unordered rules.
#[derive(Clone)]
pub struct DiffConfig {
    default_mode: MatchMode,
    pair_threshold: f64,
    max_depth: usize,
    ignore_rules: Vec<PathRule>,
    unordered_rules: Vec<(PathRule, bool)>,
    operators: Vec<Arc<dyn Operator>>,
}

impl DiffConfig {
    pub fn builder() -> DiffConfigBuilder {
        DiffConfigBuilder::default()
    }

    pub fn default_mode(&self) -> MatchMode {
        self.default_mode
    }

    pub fn pair_threshold(&self) -> f64 {
        self.pair_threshold
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn ignore_rules(&self) -> &[PathRule] {
        &self.ignore_rules
    }

    pub fn unordered_rules(&self) -> &[(PathRule, bool)] {
        &self.unordered_rules
    }

    pub fn operators(&self) -> &[Arc<dyn Operator>] {
        &self.operators
    }

    pub fn diff(&self, left: &JsonValue, right: &JsonValue) -> Result<DiffResult, DiffError> {
        diff(left, right, self)
    }
}

impl Default for DiffConfig {
    fn default() -> Self {
        DiffConfig::builder()
            .build()
            .expect("default configuration is valid")
    }
}

impl fmt::Debug for DiffConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DiffConfig")
            .field("default_mode", &self.default_mode)
            .field("pair_threshold", &self.pair_threshold)
            .field("max_depth", &self.max_depth)
            .field("operators", &self.operators)
            .finish()
    }
}

pub struct DiffConfigBuilder {
    default_mode: MatchMode,
    pair_threshold: f64,
    max_depth: usize,
    ignore: Vec<String>,
    unordered: Vec<(String, bool)>,
    operators: Vec<Arc<dyn Operator>>,
}

impl Default for DiffConfigBuilder {
    fn default() -> Self {
        Self {
            default_mode: MatchMode::default(),
            pair_threshold: DEFAULT_PAIR_THRESHOLD,
            max_depth: DEFAULT_MAX_DEPTH,
            ignore: Vec::new(),
            unordered: Vec::new(),
            operators: Vec::new(),
        }
    }
}

impl DiffConfigBuilder {
    pub fn mode(mut self, mode: MatchMode) -> Self {
        self.default_mode = mode;
        self
    }

    pub fn pair_threshold(mut self, threshold: f64) -> Self {
        self.pair_threshold = threshold;
        self
    }

    pub fn max_depth(mut self, depth: usize) -> Self {
        self.max_depth = depth;
        self
    }

    pub fn ignore(mut self, pattern: impl Into<String>) -> Self {
        self.ignore.push(pattern.into());
        self
    }

    pub fn unordered(mut self, pattern: impl Into<String>, fuzzy: bool) -> Self {
        self.unordered.push((pattern.into(), fuzzy));
        self
    }

    pub fn operator(mut self, op: impl Operator + 'static) -> Self {
        self.operators.push(Arc::new(op));
        self
    }

    pub fn shared_operator(mut self, op: Arc<dyn Operator>) -> Self {
        self.operators.push(op);
        self
    }

    pub fn build(self) -> Result<DiffConfig, ConfigError> {
        if !(0.0..=1.0).contains(&self.pair_threshold) {
            return Err(ConfigError::Threshold(self.pair_threshold));
        }
        if self.max_depth == 0 {
            return Err(ConfigError::MaxDepth);
        }
        let ignore_rules = self
            .ignore
            .iter()
            .map(|p| PathRule::new(p, RuleKind::Ignore))
            .collect::<Result<Vec<_>, _>>()?;
        let unordered_rules = self
            .unordered
            .iter()
            .map(|(p, fuzzy)| PathRule::new(p, RuleKind::Unordered).map(|r| (r, *fuzzy)))
            .collect::<Result<Vec<_>, _>>()?;

        let mut operators: Vec<Arc<dyn Operator>> = Vec::new();
        operators.extend(
            ignore_rules
                .iter()
                .map(|r| Arc::new(ignore_operator(r.clone())) as Arc<dyn Operator>),
        );
        operators.extend(self.operators);
        operators.extend(unordered_rules.iter().map(|(r, fuzzy)| {
            Arc::new(unordered_operator(r.clone(), *fuzzy)) as Arc<dyn Operator>
        }));

        let mut seen = std::collections::HashSet::new();
        for op in &operators {
            if !seen.insert(op.name()) {
                return Err(ConfigError::DuplicateOperator(op.name().to_string()));
            }
        }

        Ok(DiffConfig {
            default_mode: self.default_mode,
            pair_threshold: self.pair_threshold,
            max_depth: self.max_depth,
            ignore_rules,
            unordered_rules,
            operators,
        })
    }
}

/// Categorized change. A path is empty on the side where the value does
/// not exist.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChangeEvent {
    #[serde(skip)]
    pub category: String,
    pub left_path: String,
    pub right_path: String,
    pub left: Option<JsonValue>,
    pub right: Option<JsonValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info: Option<JsonValue>,
}

/// One matched array element pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub left_path: String,
    pub right_path: String,
    #[serde(serialize_with = "number")]
    pub score: f64,
}

/// Events and pairs in emission order, as collected during one diff.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Recorder {
    pub events: Vec<ChangeEvent>,
    pub pairs: Vec<PairRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffResult {
    #[serde(serialize_with = "number")]
    pub similarity: f64,
    pub identical: bool,
    /// Grouped by category; each group ordered by `(left_path, right_path)`.
    pub events: BTreeMap<String, Vec<ChangeEvent>>,
    pub pairs: Vec<PairRecord>,
}

fn number<S: Serializer>(n: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    serialize_number(*n, serializer)
}

impl DiffResult {
    fn new(similarity: f64, recorder: Recorder) -> Self {
        let mut events: BTreeMap<String, Vec<ChangeEvent>> = BTreeMap::new();
        for event in recorder.events {
            events
                .entry(event.category.clone())
                .or_default()
                .push(event);
        }
        for group in events.values_mut() {
            group.sort_by(|a, b| (&a.left_path, &a.right_path).cmp(&(&b.left_path, &b.right_path)));
        }
        let identical = similarity == 1.0 && events.is_empty();
        Self {
            similarity,
            identical,
            events,
            pairs: recorder.pairs,
        }
    }

    pub fn event_count(&self) -> usize {
        self.events.values().map(Vec::len).sum()
    }

    pub fn events(&self) -> impl Iterator<Item = &ChangeEvent> {
        self.events.values().flatten()
    }
}

/// Compare two documents: the overall similarity of the roots plus every
/// array pairing and change event found along the way.
pub fn diff(
    left: &JsonValue,
    right: &JsonValue,
    config: &DiffConfig,
) -> Result<DiffResult, DiffError> {
    let root = JsonPath::root();
    let mut ctx = DiffContext::new(config);
    let similarity = ctx.similarity(Some(left), Some(right), &root, &root)?;
    Ok(DiffResult::new(similarity, ctx.into_recorder()))
}

/// Compact canonical JSON for a result.
pub fn serialize_result(result: &DiffResult) -> String {
    serde_json::to_string(result).expect("DiffResult serialization is infallible")
}

/// Read a serialized result back. Event categories are restored from the
/// grouping keys.
pub fn parse_result(text: &str) -> Result<DiffResult, ParseError> {
    let mut result: DiffResult = serde_json::from_str(text).map_err(|err| ParseError::Syntax {
        message: err.to_string(),
        line: err.line(),
        column: err.column(),
    })?;
    for (category, group) in result.events.iter_mut() {
        for event in group {
            event.category = category.clone();
        }
    }
    Ok(result)
}
