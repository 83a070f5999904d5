use crate::array::MatchMode;
use crate::error::{ConfigError, DiffError};
use crate::json::{JsonValue, PathRule, RuleKind};
use crate::operators::{Level, Operator};
use crate::similarity::DiffContext;

/// Scores matching paths 1 without looking at either side.
#[derive(Debug, Clone)]
pub struct IgnoreOperator {
    name: String,
    rule: PathRule,
}

impl IgnoreOperator {
    pub fn new(pattern: &str) -> Result<Self, ConfigError> {
        PathRule::new(pattern, RuleKind::Ignore).map(ignore_operator)
    }
}

pub fn ignore_operator(rule: PathRule) -> IgnoreOperator {
    IgnoreOperator {
        name: format!("ignore:{}", rule.pattern()),
        rule,
    }
}

impl Operator for IgnoreOperator {
    fn name(&self) -> &str {
        &self.name
    }

    fn rule(&self) -> &PathRule {
        &self.rule
    }

    fn compare<'v>(
        &self,
        _level: &Level<'_, 'v>,
        _ctx: &mut DiffContext<'_, 'v>,
    ) -> Result<Option<f64>, DiffError> {
        Ok(Some(1.0))
    }
}

/// Compares matching arrays as sets, whatever the configured default mode.
#[derive(Debug, Clone)]
pub struct UnorderedOperator {
    name: String,
    rule: PathRule,
    fuzzy: bool,
}

impl UnorderedOperator {
    pub fn new(pattern: &str, fuzzy: bool) -> Result<Self, ConfigError> {
        PathRule::new(pattern, RuleKind::Unordered).map(|rule| unordered_operator(rule, fuzzy))
    }

    pub fn mode(&self) -> MatchMode {
        MatchMode {
            ordered: false,
            fuzzy: self.fuzzy,
        }
    }
}

pub fn unordered_operator(rule: PathRule, fuzzy: bool) -> UnorderedOperator {
    UnorderedOperator {
        name: format!("unordered:{}", rule.pattern()),
        rule,
        fuzzy,
    }
}

impl Operator for UnorderedOperator {
    fn name(&self) -> &str {
        &self.name
    }

    fn rule(&self) -> &PathRule {
        &self.rule
    }

    fn compare<'v>(
        &self,
        level: &Level<'_, 'v>,
        ctx: &mut DiffContext<'_, 'v>,
    ) -> Result<Option<f64>, DiffError> {
        let (Some(JsonValue::Array(left)), Some(JsonValue::Array(right))) =
            (level.left, level.right)
        else {
            return Ok(None);
        };
        ctx.array_similarity(left, right, self.mode(), level.left_path, level.right_path)
            .map(Some)
    }
}

/// Treats `{"x": .., "y": ..}` objects as points: score 1 when their
/// Euclidean distance is below the threshold, else 0. Reports every
/// comparison with `{distance, distance_threshold, pass}`.
#[derive(Debug, Clone)]
pub struct L2DistanceOperator {
    name: String,
    rule: PathRule,
    distance_threshold: f64,
}

pub const L2_DISTANCE_EVENT: &str = "operator:l2distance";

impl L2DistanceOperator {
    pub fn new(pattern: &str, distance_threshold: f64) -> Result<Self, ConfigError> {
        PathRule::new(pattern, RuleKind::Operator)
            .map(|rule| l2_distance_operator(rule, distance_threshold))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    fn point(&self, value: &JsonValue) -> Result<(f64, f64), DiffError> {
        let coord = |axis: &str| {
            value.get(axis).and_then(JsonValue::as_f64).ok_or_else(|| {
                DiffError::operator(
                    &self.name,
                    format!("expected an object with numeric `x` and `y`, got {value}"),
                )
            })
        };
        Ok((coord("x")?, coord("y")?))
    }
}

pub fn l2_distance_operator(rule: PathRule, distance_threshold: f64) -> L2DistanceOperator {
    L2DistanceOperator {
        name: L2_DISTANCE_EVENT.to_string(),
        rule,
        distance_threshold,
    }
}

impl Operator for L2DistanceOperator {
    fn name(&self) -> &str {
        &self.name
    }

    fn rule(&self) -> &PathRule {
        &self.rule
    }

    fn compare<'v>(
        &self,
        level: &Level<'_, 'v>,
        ctx: &mut DiffContext<'_, 'v>,
    ) -> Result<Option<f64>, DiffError> {
        let (Some(left), Some(right)) = (level.left, level.right) else {
            return Ok(None);
        };
        let (lx, ly) = self.point(left)?;
        let (rx, ry) = self.point(right)?;
        let distance = ((lx - rx).powi(2) + (ly - ry).powi(2)).sqrt();
        let pass = distance < self.distance_threshold;
        let info: JsonValue = serde_json::json!({
            "distance": distance,
            "distance_threshold": self.distance_threshold,
            "pass": pass,
        })
        .into();
        ctx.report(&self.name, level, Some(info));
        Ok(Some(if pass { 1.0 } else { 0.0 }))
    }
}

/// String similarity `1 − levenshtein(a, b) / max(|a|, |b|)`, counted in
/// characters. Differing strings are reported with their distance.
#[derive(Debug, Clone)]
pub struct EditDistanceOperator {
    name: String,
    rule: PathRule,
}

pub const EDIT_DISTANCE_EVENT: &str = "operator:edit_distance";

impl EditDistanceOperator {
    pub fn new(pattern: &str) -> Result<Self, ConfigError> {
        PathRule::new(pattern, RuleKind::Operator).map(edit_distance_operator)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

pub fn edit_distance_operator(rule: PathRule) -> EditDistanceOperator {
    EditDistanceOperator {
        name: EDIT_DISTANCE_EVENT.to_string(),
        rule,
    }
}

pub fn levenshtein(a: &str, b: &str) -> usize {
    strsim::levenshtein(a, b)
}

/// 1 for two empty strings.
pub fn string_similarity(a: &str, b: &str) -> f64 {
    let longest = a.chars().count().max(b.chars().count());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein(a, b) as f64 / longest as f64
}

impl Operator for EditDistanceOperator {
    fn name(&self) -> &str {
        &self.name
    }

    fn rule(&self) -> &PathRule {
        &self.rule
    }

    fn compare<'v>(
        &self,
        level: &Level<'_, 'v>,
        ctx: &mut DiffContext<'_, 'v>,
    ) -> Result<Option<f64>, DiffError> {
        let (Some(JsonValue::String(a)), Some(JsonValue::String(b))) = (level.left, level.right)
        else {
            return Ok(None);
        };
        let score = string_similarity(a, b);
        if a != b {
            let info: JsonValue = serde_json::json!({
                "distance": levenshtein(a, b),
                "similarity": score,
            })
            .into();
            ctx.report(&self.name, level, Some(info));
        }
        Ok(Some(score))
    }
}
