//! Arrow-notation paths: `b->[0]->d` addresses key `d` of the first element
//! of array `b`. The root is the empty path and renders as `""`.
//!
//! Keys are rendered verbatim. A key that itself contains `->`, or looks like
//! `[3]`, makes the rendering ambiguous; there is no escaping.

use std::fmt;

use crate::error::ParseError;
use crate::json::JsonValue;

pub const ARROW: &str = "->";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Segment {
    Key(String),
    Index(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JsonPath {
    segments: Vec<Segment>,
}

impl JsonPath {
    pub fn root() -> Self {
        Self::default()
    }

    pub fn from_segments(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_root(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn key(&self, key: &str) -> Self {
        self.with(Segment::Key(key.to_string()))
    }

    pub fn index(&self, index: usize) -> Self {
        self.with(Segment::Index(index))
    }

    fn with(&self, segment: Segment) -> Self {
        let mut segments = Vec::with_capacity(self.segments.len() + 1);
        segments.extend_from_slice(&self.segments);
        segments.push(segment);
        Self { segments }
    }

    /// Walk this path from `root`.
    pub fn lookup<'v>(&self, root: &'v JsonValue) -> Option<&'v JsonValue> {
        self.segments
            .iter()
            .try_fold(root, |node, segment| match (segment, node) {
                (Segment::Key(k), JsonValue::Object(map)) => map.get(k),
                (Segment::Index(i), JsonValue::Array(items)) => items.get(*i),
                _ => None,
            })
    }
}

impl fmt::Display for JsonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, segment) in self.segments.iter().enumerate() {
            if n > 0 {
                f.write_str(ARROW)?;
            }
            match segment {
                Segment::Key(k) => f.write_str(k)?,
                Segment::Index(i) => write!(f, "[{i}]")?,
            }
        }
        Ok(())
    }
}

pub fn render_path(path: &JsonPath) -> String {
    path.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Step {
    Key(String),
    Index(usize),
    AnyIndex,
}

fn parse_expression(expression: &str) -> Result<Vec<Step>, ParseError> {
    if expression.is_empty() {
        return Ok(Vec::new());
    }
    let malformed = |reason: &str| ParseError::PathExpression {
        expression: expression.to_string(),
        reason: reason.to_string(),
    };
    expression
        .split(ARROW)
        .map(|raw| {
            if !raw.starts_with('[') {
                return Ok(Step::Key(raw.to_string()));
            }
            let inner = raw
                .strip_suffix(']')
                .map(|s| &s[1..])
                .ok_or_else(|| malformed("unterminated `[`"))?;
            if inner == "*" {
                Ok(Step::AnyIndex)
            } else if !inner.is_empty() && inner.bytes().all(|b| b.is_ascii_digit()) {
                inner
                    .parse()
                    .map(Step::Index)
                    .map_err(|_| malformed("index out of range"))
            } else {
                Err(malformed("expected `[<index>]` or `[*]`"))
            }
        })
        .collect()
}

/// Every `(path, value)` addressed by `expression`, in document order.
/// `[*]` expands over all indices of an array.
pub fn resolve_path<'v>(
    root: &'v JsonValue,
    expression: &str,
) -> Result<Vec<(JsonPath, &'v JsonValue)>, ParseError> {
    let steps = parse_expression(expression)?;
    let mut frontier = vec![(JsonPath::root(), root)];
    for step in &steps {
        let mut next = Vec::new();
        for (path, node) in frontier {
            match (step, node) {
                (Step::Key(k), JsonValue::Object(map)) => {
                    if let Some(child) = map.get(k) {
                        next.push((path.key(k), child));
                    }
                }
                (Step::Index(i), JsonValue::Array(items)) => {
                    if let Some(child) = items.get(*i) {
                        next.push((path.index(*i), child));
                    }
                }
                (Step::AnyIndex, JsonValue::Array(items)) => {
                    next.extend(items.iter().enumerate().map(|(i, c)| (path.index(i), c)));
                }
                _ => {}
            }
        }
        frontier = next;
    }
    Ok(frontier)
}
