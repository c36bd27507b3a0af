//! Typed literal values and data-property value types.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use chrono::{DateTime, NaiveDate, NaiveDateTime};
use thiserror::Error;

/// Value types a data property may declare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValueType {
    String,
    Number,
    Boolean,
    DateTime,
    Enumerated,
    LiteralAny,
}

impl ValueType {
    /// Keyword used by the fixture format (`type <kw>`).
    pub fn keyword(self) -> &'static str {
        match self {
            ValueType::String => "string",
            ValueType::Number => "number",
            ValueType::Boolean => "boolean",
            ValueType::DateTime => "datetime",
            ValueType::Enumerated => "enum",
            ValueType::LiteralAny => "literal",
        }
    }

    pub fn from_keyword(kw: &str) -> Option<Self> {
        Some(match kw {
            "string" => ValueType::String,
            "number" => ValueType::Number,
            "boolean" => ValueType::Boolean,
            "datetime" => ValueType::DateTime,
            "enum" => ValueType::Enumerated,
            "literal" => ValueType::LiteralAny,
            _ => return None,
        })
    }

    /// Whether a literal of this runtime type may be stored under a property of
    /// type `self`. Enumerated and literal accept any value; membership in an
    /// enumeration is the allowed-values check's job.
    pub fn accepts(self, lit: &Literal) -> bool {
        match self {
            ValueType::Enumerated | ValueType::LiteralAny => true,
            other => other == lit.value_type(),
        }
    }
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("`{0}` is not a finite decimal number")]
    BadNumber(String),
    #[error("`{0}` is not an ISO-8601 date or date-time")]
    BadDateTime(String),
    #[error("`{0}` is not a boolean (expected `true` or `false`)")]
    BadBoolean(String),
}

/// An exact decimal kept as its normalized digit string.
///
/// `1.0`, `01` and `+1` all normalize to `1`; `-0.00` normalizes to `0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decimal(String);

impl Decimal {
    pub fn parse(text: &str) -> Result<Self, LiteralError> {
        let bad = || LiteralError::BadNumber(text.to_string());
        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let (int, frac) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if int.is_empty() || !all_digits(int) || !all_digits(frac) || (body.contains('.') && frac.is_empty()) {
            return Err(bad());
        }
        let int = int.trim_start_matches('0');
        let frac = frac.trim_end_matches('0');
        let int = if int.is_empty() { "0" } else { int };
        let mut out = String::new();
        if negative && !(int == "0" && frac.is_empty()) {
            out.push('-');
        }
        out.push_str(int);
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        Ok(Decimal(out))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn is_datetime(text: &str) -> bool {
    let b = text.as_bytes();
    let date_shape = b.len() >= 10
        && b[..4].iter().all(u8::is_ascii_digit)
        && b[4] == b'-'
        && b[5..7].iter().all(u8::is_ascii_digit)
        && b[7] == b'-'
        && b[8..10].iter().all(u8::is_ascii_digit);
    if !date_shape {
        return false;
    }
    if b.len() == 10 {
        return NaiveDate::parse_from_str(text, "%Y-%m-%d").is_ok();
    }
    if b[10] != b'T' {
        return false;
    }
    DateTime::parse_from_rfc3339(text).is_ok() || NaiveDateTime::parse_from_str(text, "%Y-%m-%dT%H:%M:%S%.f").is_ok()
}

/// A typed literal value.
///
/// Numbers compare by numeric value; everything else compares by exact
/// lexical form. `Ord` and `Hash` follow the same key so literals can live in
/// sorted and hashed sets.
#[derive(Debug, Clone)]
pub struct Literal {
    value_type: ValueType,
    lexical: String,
    numeric: Option<Decimal>,
}

impl Literal {
    pub fn string(s: impl Into<String>) -> Self {
        Literal {
            value_type: ValueType::String,
            lexical: s.into(),
            numeric: None,
        }
    }

    pub fn number(text: &str) -> Result<Self, LiteralError> {
        let numeric = Decimal::parse(text)?;
        Ok(Literal {
            value_type: ValueType::Number,
            lexical: text.to_string(),
            numeric: Some(numeric),
        })
    }

    pub fn boolean(value: bool) -> Self {
        Literal {
            value_type: ValueType::Boolean,
            lexical: value.to_string(),
            numeric: None,
        }
    }

    pub fn datetime(text: &str) -> Result<Self, LiteralError> {
        if !is_datetime(text) {
            return Err(LiteralError::BadDateTime(text.to_string()));
        }
        Ok(Literal {
            value_type: ValueType::DateTime,
            lexical: text.to_string(),
            numeric: None,
        })
    }

    /// Reads an unquoted token the way the fixture format does: booleans,
    /// then date-times, then numbers. Anything else becomes a string.
    pub fn infer(text: &str) -> Self {
        match text {
            "true" => return Literal::boolean(true),
            "false" => return Literal::boolean(false),
            _ => {}
        }
        if let Ok(dt) = Literal::datetime(text) {
            return dt;
        }
        Literal::number(text).unwrap_or_else(|_| Literal::string(text))
    }

    /// Interprets raw text (e.g. a CSV cell) under a declared value type.
    pub fn parse_as(value_type: ValueType, text: &str) -> Result<Self, LiteralError> {
        match value_type {
            ValueType::String | ValueType::Enumerated => Ok(Literal::string(text)),
            ValueType::Number => Literal::number(text),
            ValueType::Boolean => match text {
                "true" => Ok(Literal::boolean(true)),
                "false" => Ok(Literal::boolean(false)),
                _ => Err(LiteralError::BadBoolean(text.to_string())),
            },
            ValueType::DateTime => Literal::datetime(text),
            ValueType::LiteralAny => Ok(Literal::infer(text)),
        }
    }

    /// Runtime type: one of String, Number, Boolean or DateTime.
    pub fn value_type(&self) -> ValueType {
        self.value_type
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn numeric(&self) -> Option<&Decimal> {
        self.numeric.as_ref()
    }

    fn key(&self) -> &str {
        match &self.numeric {
            Some(d) => d.as_str(),
            None => &self.lexical,
        }
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.value_type == other.value_type && self.key() == other.key()
    }
}

impl Eq for Literal {}

impl Hash for Literal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value_type.hash(state);
        self.key().hash(state);
    }
}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.value_type, self.key()).cmp(&(other.value_type, other.key()))
    }
}

/// Fixture-format spelling: strings quoted with `\"` and `\\` escaped,
/// everything else bare.
impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value_type != ValueType::String {
            return f.write_str(&self.lexical);
        }
        f.write_str("\"")?;
        for c in self.lexical.chars() {
            match c {
                '"' => f.write_str("\\\"")?,
                '\\' => f.write_str("\\\\")?,
                c => write!(f, "{c}")?,
            }
        }
        f.write_str("\"")
    }
}
