//! JSON values, arrow-notation paths and path rules.

mod path;
mod rule;
mod value;

pub use path::{render_path, resolve_path, JsonPath, Segment, ARROW};
pub use rule::{path_matches, PathRule, RuleKind};
pub use value::{parse_json, JsonKind, JsonValue, Map};

pub(crate) use value::serialize_number;
