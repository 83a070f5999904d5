//! Similarity-based structural diff for JSON documents.
//!
//! Two documents are compared by a recursive similarity score in [0, 1]:
//! primitives score 1 when equal, objects average their key-wise scores,
//! and arrays are matched under one of four regimes (ordered or unordered,
//! exact or fuzzy) before their pair scores are normalized. Along the way
//! the engine records which array elements were paired and emits change
//! events (`object:add`, `array:remove`, `value:change`, ...).
//!
//! Rules addressed by regexes over arrow-notation paths (`items->[2]->id`)
//! let callers ignore volatile fields, compare selected arrays as sets, or
//! plug in their own [`Operator`]s.
//!
//! ```
//! use jdiff::{diff, parse_json, DiffConfig};
//!
//! let left = parse_json(r#"{"meta": {"timestamp": 1}, "ids": [1, 2, 3]}"#).unwrap();
//! let right = parse_json(r#"{"meta": {"timestamp": 2}, "ids": [3, 2, 1]}"#).unwrap();
//!
//! let config = DiffConfig::builder()
//!     .ignore("^meta->timestamp$")
//!     .unordered("^ids$", false)
//!     .build()
//!     .unwrap();
//! let result = diff(&left, &right, &config).unwrap();
//! assert!(result.identical);
//! ```

pub mod array;
pub mod cli;
pub mod engine;
pub mod error;
pub mod json;
pub mod operators;
pub mod similarity;

pub use array::{hungarian, DpTable, IndexPair, MatchMode};
pub use engine::{
    diff, parse_result, serialize_result, ChangeEvent, DiffConfig, DiffConfigBuilder, DiffResult,
    PairRecord, Recorder,
};
pub use error::{ConfigError, DiffError, ParseError};
pub use json::{
    parse_json, render_path, resolve_path, JsonPath, JsonValue, PathRule, RuleKind, Segment,
};
pub use operators::{Level, Operator};
pub use similarity::{primitive_similarity, similarity, DiffContext};
