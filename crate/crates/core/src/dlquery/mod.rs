//! Class-expression queries over a loaded ontology.
//!
//! Instance answers follow the usual set semantics over the realized ABox.
//! Sub/superclass answers are structural: they read the taxonomy closure and
//! only accept a named class or a conjunction of named classes. Restrictions
//! in a class mode are rejected with `E_UNSUPPORTED_MODE`.

mod ast;
mod modes;
mod parser;

use thiserror::Error;

use crate::diagnostic::codes;
use crate::model::{EntityKind, Ident, Ontology};
use crate::reasoner::{Realization, TaxonomyClosure};
use crate::KnowledgeBase;

pub use ast::ClassExpr;
pub use modes::{resolve, Instances, ModeRegistry, QueryMode, QueryStrategy, Subclasses, Superclasses};
pub use parser::parse_query;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("{}", unknown_ref_message(.name, *.expected, *.found))]
    UnknownRef {
        name: String,
        expected: EntityKind,
        found: Option<EntityKind>,
    },
    #[error("mode `{mode}` only accepts a named class or a conjunction of named classes")]
    UnsupportedMode { mode: QueryMode },
    #[error("unknown query mode `{0}`")]
    UnknownMode(String),
}

fn unknown_ref_message(name: &str, expected: EntityKind, found: Option<EntityKind>) -> String {
    match found {
        None => format!("unknown {expected} `{name}`"),
        Some(k) => format!("`{name}` is declared as {k}, not {expected}"),
    }
}

impl QueryError {
    pub(crate) fn syntax(column: usize, message: impl Into<String>) -> Self {
        QueryError::Syntax {
            column,
            message: message.into(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            QueryError::Syntax { .. } | QueryError::UnknownMode(_) => codes::E_SYNTAX,
            QueryError::UnknownRef { .. } => codes::E_UNKNOWN_REF,
            QueryError::UnsupportedMode { .. } => codes::E_UNSUPPORTED_MODE,
        }
    }
}

/// Borrowed view of the structures a query reads.
#[derive(Clone, Copy)]
pub struct QueryContext<'a> {
    pub ontology: &'a Ontology,
    pub closure: &'a TaxonomyClosure,
    pub realization: &'a Realization,
}

impl<'a> From<&'a KnowledgeBase> for QueryContext<'a> {
    fn from(kb: &'a KnowledgeBase) -> Self {
        QueryContext {
            ontology: &kb.ontology,
            closure: &kb.closure,
            realization: &kb.realization,
        }
    }
}

/// Evaluates `expr` in `mode`. Results are sorted by name.
pub fn eval_query(
    o: &Ontology,
    closure: &TaxonomyClosure,
    realization: &Realization,
    expr: &ClassExpr,
    mode: QueryMode,
) -> Result<Vec<Ident>, QueryError> {
    let ctx = QueryContext {
        ontology: o,
        closure,
        realization,
    };
    eval_with(ModeRegistry::builtin(), &ctx, expr, mode.name())
}

/// Evaluates through a specific registry, selecting the strategy by name.
pub fn eval_with(
    registry: &ModeRegistry,
    ctx: &QueryContext<'_>,
    expr: &ClassExpr,
    mode: &str,
) -> Result<Vec<Ident>, QueryError> {
    let strategy = registry
        .get(mode)
        .ok_or_else(|| QueryError::UnknownMode(mode.to_string()))?;
    resolve(ctx, expr)?;
    Ok(strategy.evaluate(ctx, expr)?.into_iter().collect())
}

/// Parse and evaluate in one step.
pub fn run_query(kb: &KnowledgeBase, text: &str, mode: QueryMode) -> Result<Vec<Ident>, QueryError> {
    let expr = parse_query(text)?;
    eval_query(&kb.ontology, &kb.closure, &kb.realization, &expr, mode)
}
