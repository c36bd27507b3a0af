//! Machine-readable findings shared by the parser, builder, reasoner and validator.

use std::fmt;

/// Severity of a [`Diagnostic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Diagnostic codes emitted by the toolkit.
pub mod codes {
    pub const E_SYNTAX: &str = "E_SYNTAX";
    pub const E_UNKNOWN_REF: &str = "E_UNKNOWN_REF";
    pub const E_KIND_CLASH: &str = "E_KIND_CLASH";
    pub const E_SELF_SUBCLASS: &str = "E_SELF_SUBCLASS";
    pub const E_FACET: &str = "E_FACET";
    pub const E_FACET_CLASH: &str = "E_FACET_CLASH";
    pub const E_DECL_CLASH: &str = "E_DECL_CLASH";
    pub const E_CYCLE: &str = "E_CYCLE";
    pub const E_TYPE_MISMATCH: &str = "E_TYPE_MISMATCH";
    pub const E_ALLOWED_VALUE: &str = "E_ALLOWED_VALUE";
    pub const E_CARD_SINGLE: &str = "E_CARD_SINGLE";
    pub const E_CARD_MULTIPLE: &str = "E_CARD_MULTIPLE";
    pub const E_DOMAIN: &str = "E_DOMAIN";
    pub const E_RANGE: &str = "E_RANGE";
    pub const E_CSV_HEADER: &str = "E_CSV_HEADER";
    pub const E_CSV_SYNTAX: &str = "E_CSV_SYNTAX";
    pub const E_DUP_INDIVIDUAL: &str = "E_DUP_INDIVIDUAL";
    pub const E_UNSUPPORTED_MODE: &str = "E_UNSUPPORTED_MODE";
}

/// A single finding tied to a source position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
    pub file: String,
    /// 1-based.
    pub line: usize,
}

impl Diagnostic {
    pub fn error(code: &'static str, file: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            code,
            message: message.into(),
            file: file.into(),
            line,
        }
    }

    pub fn warning(code: &'static str, file: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            ..Diagnostic::error(code, file, line, message)
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    fn sort_key(&self) -> (&str, usize, &str, &str, Severity) {
        (&self.file, self.line, self.code, &self.message, self.severity)
    }
}

/// `<file>:<line>: <SEV> <CODE> <message>`
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {} {} {}",
            self.file, self.line, self.severity, self.code, self.message
        )
    }
}

/// Sorts by file, line, code, then message, and drops exact duplicates.
pub fn sort_diagnostics(diags: &mut Vec<Diagnostic>) {
    diags.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    diags.dedup();
}

pub fn count_errors(diags: &[Diagnostic]) -> usize {
    diags.iter().filter(|d| d.is_error()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_format() {
        let d = Diagnostic::error(codes::E_SYNTAX, "a.oft", 3, "unknown keyword `clazz`");
        assert_eq!(d.to_string(), "a.oft:3: error E_SYNTAX unknown keyword `clazz`");
        let w = Diagnostic::warning(codes::E_CARD_MULTIPLE, "a.oft", 1, "x");
        assert_eq!(w.to_string(), "a.oft:1: warning E_CARD_MULTIPLE x");
    }

    #[test]
    fn sorting_is_by_file_then_line_then_code() {
        let mut v = vec![
            Diagnostic::error(codes::E_RANGE, "b", 1, "m"),
            Diagnostic::error(codes::E_DOMAIN, "a", 2, "m"),
            Diagnostic::error(codes::E_CARD_SINGLE, "a", 2, "m"),
            Diagnostic::error(codes::E_CARD_SINGLE, "a", 2, "m"),
        ];
        sort_diagnostics(&mut v);
        let keys: Vec<_> = v.iter().map(|d| (d.file.as_str(), d.line, d.code)).collect();
        assert_eq!(
            keys,
            vec![("a", 2, "E_CARD_SINGLE"), ("a", 2, "E_DOMAIN"), ("b", 1, "E_RANGE")]
        );
    }
}
