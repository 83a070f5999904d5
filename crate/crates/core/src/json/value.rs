use std::fmt;

use indexmap::IndexMap;
use serde::de::{self, Deserialize, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use crate::error::ParseError;

/// Object members in document order.
pub type Map = IndexMap<String, JsonValue>;

/// A parsed JSON document.
///
/// Numbers are held as `f64`: `1` and `1.0` are the same value. Object key
/// order is kept for rendering, while equality ignores it.
#[derive(Debug, Clone, PartialEq)]
pub enum JsonValue {
    String(String),
    Number(f64),
    Bool(bool),
    Null,
    Object(Map),
    Array(Vec<JsonValue>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JsonKind {
    String,
    Number,
    Bool,
    Null,
    Object,
    Array,
}

impl JsonValue {
    pub fn kind(&self) -> JsonKind {
        match self {
            JsonValue::String(_) => JsonKind::String,
            JsonValue::Number(_) => JsonKind::Number,
            JsonValue::Bool(_) => JsonKind::Bool,
            JsonValue::Null => JsonKind::Null,
            JsonValue::Object(_) => JsonKind::Object,
            JsonValue::Array(_) => JsonKind::Array,
        }
    }

    pub fn is_primitive(&self) -> bool {
        !matches!(self, JsonValue::Object(_) | JsonValue::Array(_))
    }

    pub fn as_object(&self) -> Option<&Map> {
        match self {
            JsonValue::Object(map) => Some(map),
            _ => None,
        }
    }

    pub fn as_array(&self) -> Option<&[JsonValue]> {
        match self {
            JsonValue::Array(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            JsonValue::String(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            JsonValue::Number(n) => Some(*n),
            _ => None,
        }
    }

    /// Member lookup; `None` for non-objects and absent keys.
    pub fn get(&self, key: &str) -> Option<&JsonValue> {
        self.as_object().and_then(|map| map.get(key))
    }

    /// Compact canonical JSON text.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("JsonValue serialization is infallible")
    }
}

impl fmt::Display for JsonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json_string())
    }
}

/// Parse UTF-8 JSON text. Duplicate keys inside one object are rejected.
pub fn parse_json(text: &str) -> Result<JsonValue, ParseError> {
    serde_json::from_str(text).map_err(|err| ParseError::Syntax {
        message: strip_position(&err.to_string()),
        line: err.line(),
        column: err.column(),
    })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(at) => message[..at].to_string(),
        None => message.to_string(),
    }
}

/// Integral values inside this bound are written without a fractional part.
const EXACT_INTEGER_BOUND: f64 = 9_007_199_254_740_992.0;

pub(crate) fn serialize_number<S: Serializer>(n: f64, serializer: S) -> Result<S::Ok, S::Error> {
    if n.is_finite() && n.fract() == 0.0 && n.abs() < EXACT_INTEGER_BOUND {
        serializer.serialize_i64(n as i64)
    } else {
        serializer.serialize_f64(n)
    }
}

impl Serialize for JsonValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            JsonValue::String(s) => serializer.serialize_str(s),
            JsonValue::Number(n) => serialize_number(*n, serializer),
            JsonValue::Bool(b) => serializer.serialize_bool(*b),
            JsonValue::Null => serializer.serialize_unit(),
            JsonValue::Object(map) => {
                let mut out = serializer.serialize_map(Some(map.len()))?;
                for (key, value) in map {
                    out.serialize_entry(key, value)?;
                }
                out.end()
            }
            JsonValue::Array(items) => {
                let mut out = serializer.serialize_seq(Some(items.len()))?;
                for item in items {
                    out.serialize_element(item)?;
                }
                out.end()
            }
        }
    }
}

struct ValueVisitor;

impl<'de> Visitor<'de> for ValueVisitor {
    type Value = JsonValue;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a JSON value")
    }

    fn visit_bool<E: de::Error>(self, v: bool) -> Result<JsonValue, E> {
        Ok(JsonValue::Bool(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonValue, E> {
        Ok(JsonValue::Number(v as f64))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonValue, E> {
        Ok(JsonValue::Number(v as f64))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<JsonValue, E> {
        Ok(JsonValue::Number(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonValue, E> {
        Ok(JsonValue::String(v.to_string()))
    }

    fn visit_string<E: de::Error>(self, v: String) -> Result<JsonValue, E> {
        Ok(JsonValue::String(v))
    }

    fn visit_unit<E: de::Error>(self) -> Result<JsonValue, E> {
        Ok(JsonValue::Null)
    }

    fn visit_none<E: de::Error>(self) -> Result<JsonValue, E> {
        Ok(JsonValue::Null)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<JsonValue, A::Error> {
        let mut items = Vec::with_capacity(seq.size_hint().unwrap_or(0));
        while let Some(item) = seq.next_element()? {
            items.push(item);
        }
        Ok(JsonValue::Array(items))
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<JsonValue, A::Error> {
        let mut map = Map::with_capacity(access.size_hint().unwrap_or(0));
        while let Some(key) = access.next_key::<String>()? {
            if map.contains_key(&key) {
                return Err(de::Error::custom(format_args!("duplicate key `{key}`")));
            }
            let value = access.next_value()?;
            map.insert(key, value);
        }
        Ok(JsonValue::Object(map))
    }
}

impl<'de> Deserialize<'de> for JsonValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<JsonValue, D::Error> {
        deserializer.deserialize_any(ValueVisitor)
    }
}

impl From<serde_json::Value> for JsonValue {
    fn from(value: serde_json::Value) -> Self {
        match value {
            serde_json::Value::Null => JsonValue::Null,
            serde_json::Value::Bool(b) => JsonValue::Bool(b),
            serde_json::Value::Number(n) => JsonValue::Number(n.as_f64().unwrap_or(f64::NAN)),
            serde_json::Value::String(s) => JsonValue::String(s),
            serde_json::Value::Array(items) => {
                JsonValue::Array(items.into_iter().map(JsonValue::from).collect())
            }
            serde_json::Value::Object(map) => JsonValue::Object(
                map.into_iter()
                    .map(|(k, v)| (k, JsonValue::from(v)))
                    .collect(),
            ),
        }
    }
}

impl From<&str> for JsonValue {
    fn from(s: &str) -> Self {
        JsonValue::String(s.to_string())
    }
}

impl From<String> for JsonValue {
    fn from(s: String) -> Self {
        JsonValue::String(s)
    }
}

impl From<f64> for JsonValue {
    fn from(n: f64) -> Self {
        JsonValue::Number(n)
    }
}

impl From<i64> for JsonValue {
    fn from(n: i64) -> Self {
        JsonValue::Number(n as f64)
    }
}

impl From<bool> for JsonValue {
    fn from(b: bool) -> Self {
        JsonValue::Bool(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_object() {
        let v = parse_json(r#"{"a":1}"#).unwrap();
        let mut map = Map::new();
        map.insert("a".into(), JsonValue::Number(1.0));
        assert_eq!(v, JsonValue::Object(map));
    }

    #[test]
    fn parses_image_listing() {
        let text = r#"{
          "Image": {
              "Width":  800,
              "Height": 600,
              "Title":  "View from 15th Floor",
              "Thumbnail": {
                  "Height": 125,
                  "Width":  "100"
              },
              "IDs": [116, 943, 234, 38793]
            }
        }"#;
        let v = parse_json(text).unwrap();
        let image = v.get("Image").unwrap();
        assert!(image.as_object().is_some());
        let ids = image.get("IDs").unwrap().as_array().unwrap();
        assert_eq!(ids.len(), 4);
        assert!(ids.iter().all(|id| id.kind() == JsonKind::Number));
        assert_eq!(
            image.get("Thumbnail").unwrap().get("Width"),
            Some(&JsonValue::String("100".into()))
        );
    }

    #[test]
    fn unterminated_array_is_syntax_error() {
        match parse_json("[") {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_key_rejected_with_position() {
        let err = parse_json("{\n  \"a\": 1,\n  \"a\": 2\n}").unwrap_err();
        match err {
            ParseError::Syntax { message, line, .. } => {
                assert!(message.contains("duplicate key `a`"), "{message}");
                assert_eq!(line, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
        // same key in sibling objects is fine
        assert!(parse_json(r#"[{"a":1},{"a":2}]"#).is_ok());
    }

    #[test]
    fn trailing_garbage_rejected() {
        assert!(parse_json("{} x").is_err());
    }

    #[test]
    fn integers_and_floats_are_one_number_type() {
        assert_eq!(parse_json("1").unwrap(), parse_json("1.0").unwrap());
        assert_eq!(parse_json("1.0").unwrap().to_json_string(), "1");
        assert_eq!(parse_json("0.25").unwrap().to_json_string(), "0.25");
        let big = parse_json("1e300").unwrap();
        assert_eq!(big.to_json_string(), "1e+300");
        assert_eq!(parse_json(&big.to_json_string()).unwrap(), big);
    }

    #[test]
    fn key_order_kept_for_output_but_not_equality() {
        let a = parse_json(r#"{"b":1,"a":2}"#).unwrap();
        let b = parse_json(r#"{"a":2,"b":1}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json_string(), r#"{"b":1,"a":2}"#);
    }

    #[test]
    fn from_serde_value() {
        let v: JsonValue = serde_json::json!({"x": [1, "a", null, true]}).into();
        assert_eq!(v, parse_json(r#"{"x":[1,"a",null,true]}"#).unwrap());
    }
}
