use regex::Regex;

use crate::error::ConfigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Ignore,
    Unordered,
    Operator,
}

/// A regex over rendered paths. Matching is anchored to the whole string.
#[derive(Debug, Clone)]
pub struct PathRule {
    pattern: String,
    kind: RuleKind,
    regex: Regex,
}

/// The regex crate renders syntax errors over several lines, pointing into
/// the anchored pattern; keep only the final "error: ..." message.
fn regex_reason(err: &regex::Error) -> String {
    let text = err.to_string();
    let last = text
        .lines()
        .rev()
        .find(|l| !l.trim().is_empty())
        .unwrap_or(&text);
    last.trim().trim_start_matches("error: ").to_string()
}

impl PathRule {
    pub fn new(pattern: &str, kind: RuleKind) -> Result<Self, ConfigError> {
        let regex =
            Regex::new(&format!("^(?:{pattern})$")).map_err(|err| ConfigError::InvalidPattern {
                pattern: pattern.to_string(),
                reason: regex_reason(&err),
            })?;
        Ok(Self {
            pattern: pattern.to_string(),
            kind,
            regex,
        })
    }

    pub fn pattern(&self) -> &str {
        &self.pattern
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn matches(&self, rendered: &str) -> bool {
        self.regex.is_match(rendered)
    }
}

pub fn path_matches(rule: &PathRule, rendered: &str) -> bool {
    rule.matches(rendered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule(p: &str) -> PathRule {
        PathRule::new(p, RuleKind::Ignore).unwrap()
    }

    #[test]
    fn anchored_matching() {
        assert!(path_matches(&rule("^meta->timestamp$"), "meta->timestamp"));
        assert!(path_matches(&rule(r".*->\[\d+\]->ts$"), "events->[3]->ts"));
        assert!(!path_matches(&rule("^a$"), "ab"));
        assert!(!path_matches(&rule("a"), "ba"));
        assert!(!path_matches(&rule("a"), "ab"));
        assert!(path_matches(&rule("a|ba"), "ba"));
        assert!(path_matches(&rule(".*"), ""));
    }

    #[test]
    fn invalid_pattern_is_config_error() {
        let err = PathRule::new("a(", RuleKind::Unordered).unwrap_err();
        assert!(matches!(err, ConfigError::InvalidPattern { ref pattern, .. } if pattern == "a("));
    }
}
