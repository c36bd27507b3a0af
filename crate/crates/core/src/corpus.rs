//! The bundled date-fruit ontology and its competency-question suite.

use crate::diagnostic::Diagnostic;
use crate::dlquery::QueryMode;
use crate::kb::load_sources;
use crate::model::Ontology;

pub const MAIN_FILE: &str = "corpus/date_fruit.oft";
pub const INSTANCE_FILE: &str = "corpus/date_fruit_instances.oft";
pub const QUERY_FILE: &str = "corpus/queries.tsv";

pub const MAIN_TEXT: &str = include_str!("../../../corpus/date_fruit.oft");
pub const INSTANCE_TEXT: &str = include_str!("../../../corpus/date_fruit_instances.oft");
pub const QUERY_TEXT: &str = include_str!("../../../corpus/queries.tsv");

/// Number of `class` statements in the main fixture, not counting `Thing`.
pub const CLASS_COUNT: usize = 67;

/// The fixture sources as `(file, text)` pairs, main file first.
pub fn sources() -> [(&'static str, &'static str); 2] {
    [(MAIN_FILE, MAIN_TEXT), (INSTANCE_FILE, INSTANCE_TEXT)]
}

/// Builds the bundled ontology.
///
/// # Panics
///
/// If the fixtures do not load cleanly. That is a defect of the build, not
/// of any input.
pub fn load_corpus() -> Ontology {
    match try_load_corpus() {
        Ok(o) => o,
        Err(diags) => {
            let lines: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
            panic!("bundled corpus is broken:\n{}", lines.join("\n"));
        }
    }
}

pub fn try_load_corpus() -> Result<Ontology, Vec<Diagnostic>> {
    let (o, diags) = load_sources(sources());
    match o {
        Some(o) if diags.is_empty() => Ok(o),
        _ => Err(diags),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteQuery {
    /// The competency question this query helps answer.
    pub question: String,
    pub mode: QueryMode,
    pub text: String,
    pub expected: Vec<String>,
    pub line: usize,
}

/// Parses the tab-separated suite: `mode<TAB>query<TAB>expected`, with the
/// expected names comma-joined. `# ? question` lines set the question for the
/// rows that follow; other `#` lines and blank lines are skipped.
pub fn parse_query_suite(text: &str) -> Result<Vec<SuiteQuery>, String> {
    let mut question = String::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.trim_end_matches('\r');
        if let Some(q) = raw.strip_prefix("# ?") {
            question = q.trim().to_string();
            continue;
        }
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        let [mode, query, expected] = fields[..] else {
            return Err(format!(
                "line {line}: expected 3 tab-separated fields, found {}",
                fields.len()
            ));
        };
        let mode = QueryMode::from_name(mode).ok_or_else(|| format!("line {line}: unknown mode `{mode}`"))?;
        let expected = expected
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect();
        out.push(SuiteQuery {
            question: question.clone(),
            mode,
            text: query.to_string(),
            expected,
            line,
        });
    }
    Ok(out)
}

pub fn query_suite() -> Vec<SuiteQuery> {
    parse_query_suite(QUERY_TEXT).expect("bundled query suite is well formed")
}
