//! Loading pipeline: text sources → axioms → ontology → closure → realization.

use crate::diagnostic::{sort_diagnostics, Diagnostic};
use crate::model::{build_ontology, Ontology};
use crate::oft::{parse_oft, DEFAULT_ONTOLOGY_NAME};
use crate::reasoner::{compute_closure, realize, Realization, TaxonomyClosure};
use crate::validate::{validate, ValidationReport};

/// An ontology together with its inferred hierarchy and realization.
#[derive(Debug, Clone)]
pub struct KnowledgeBase {
    pub ontology: Ontology,
    pub closure: TaxonomyClosure,
    pub realization: Realization,
}

impl KnowledgeBase {
    pub fn new(ontology: Ontology) -> Result<Self, Vec<Diagnostic>> {
        let closure = compute_closure(&ontology)?;
        let realization = realize(&ontology, &closure);
        Ok(KnowledgeBase {
            ontology,
            closure,
            realization,
        })
    }

    pub fn validate(&self) -> ValidationReport {
        validate(&self.ontology, &self.closure, &self.realization)
    }
}

/// Parses `(file name, text)` sources in order and builds one ontology from
/// the concatenated axiom stream. The ontology takes the first header name.
///
/// Parse diagnostics are returned alongside a successful build; the caller
/// decides whether they are fatal. A failed build returns parse and build
/// diagnostics together.
pub fn load_sources<'a, I>(sources: I) -> (Option<Ontology>, Vec<Diagnostic>)
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut name = None;
    let mut axioms = Vec::new();
    let mut diags = Vec::new();
    for (file, text) in sources {
        let parsed = parse_oft(text, file);
        if parsed.has_header && name.is_none() {
            name = Some(parsed.ontology_name);
        }
        axioms.extend(parsed.axioms);
        diags.extend(parsed.diagnostics);
    }
    let name = name.unwrap_or_else(|| DEFAULT_ONTOLOGY_NAME.to_string());
    let built = match build_ontology(&name, axioms) {
        Ok(o) => Some(o),
        Err(errs) => {
            diags.extend(errs);
            None
        }
    };
    sort_diagnostics(&mut diags);
    (built, diags)
}
