//! Ontology toolkit built around a small line-oriented fixture format.
//!
//! * [`oft`] parses and writes fixture text.
//! * [`model`] holds the axiom model and the immutable [`Ontology`].
//! * [`reasoner`] computes the subclass closure, realizes individuals and
//!   resolves inherited properties.
//! * [`validate`] checks value types, allowed values, cardinality and
//!   domain/range.
//! * [`dlquery`] parses and evaluates class expressions.
//! * [`exchange`] exports DOT, ingests CSV and merges ontologies.
//! * [`corpus`] bundles the date-fruit ontology and its competency queries.

pub mod corpus;
pub mod diagnostic;
pub mod dlquery;
pub mod exchange;
pub mod kb;
pub mod literal;
pub mod model;
pub mod oft;
pub mod reasoner;
pub mod validate;

pub use diagnostic::{Diagnostic, Severity};
pub use kb::{load_sources, KnowledgeBase};
pub use literal::{Literal, ValueType};
pub use model::{
    build_ontology, canonical_axioms, Axiom, Cardinality, EntityKind, FacetSpec, Ident, LocatedAxiom, Ontology,
    SourceLoc, THING,
};
pub use reasoner::{applicable_properties, compute_closure, realize, Realization, TaxonomyClosure};
pub use validate::{validate, ValidationReport};
