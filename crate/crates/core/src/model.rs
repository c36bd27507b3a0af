//! The ontology data model: identifiers, facets, axioms and the immutable
//! [`Ontology`] container every other module consumes.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::diagnostic::{codes, Diagnostic};
use crate::literal::{Literal, ValueType};

/// Name of the implicit root class.
pub const THING: &str = "Thing";

/// What a name denotes. Fixed at declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    DataProperty,
    Individual,
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntityKind::Class => "class",
            EntityKind::ObjectProperty => "object property",
            EntityKind::DataProperty => "data property",
            EntityKind::Individual => "individual",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a valid identifier")]
pub struct IdentError(pub String);

/// A case-sensitive name matching `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ident(String);

impl Ident {
    pub fn new(name: impl Into<String>) -> Result<Self, IdentError> {
        let name = name.into();
        if is_ident(&name) {
            Ok(Ident(name))
        } else {
            Err(IdentError(name))
        }
    }

    pub fn thing() -> Self {
        Ident(THING.to_string())
    }

    pub fn is_thing(&self) -> bool {
        self.0 == THING
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub fn is_ident(s: &str) -> bool {
    let mut bytes = s.bytes();
    matches!(bytes.next(), Some(b) if b.is_ascii_alphabetic() || b == b'_')
        && bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Borrow<str> for Ident {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Ident {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<&str> for Ident {
    type Error = IdentError;

    fn try_from(s: &str) -> Result<Self, Self::Error> {
        Ident::new(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cardinality {
    /// At most one value per individual.
    Single,
    /// At least one value per individual of the domain (checked as a warning).
    Multiple,
}

impl Cardinality {
    pub fn keyword(self) -> &'static str {
        match self {
            Cardinality::Single => "single",
            Cardinality::Multiple => "multiple",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FacetError {
    #[error("allowed-value list is empty")]
    EmptyAllowed,
    #[error("allowed value {0} appears more than once")]
    DuplicateAllowed(String),
    #[error("allowed value {value} does not conform to type {value_type}")]
    NonConforming { value: String, value_type: ValueType },
    #[error("type enum requires an allowed-value list")]
    EnumWithoutAllowed,
}

/// Value type, allowed values and cardinality of a data property.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetSpec {
    value_type: ValueType,
    allowed: Option<Vec<Literal>>,
    cardinality: Cardinality,
}

impl FacetSpec {
    pub fn new(
        value_type: ValueType,
        allowed: Option<Vec<Literal>>,
        cardinality: Cardinality,
    ) -> Result<Self, FacetError> {
        match &allowed {
            None if value_type == ValueType::Enumerated => return Err(FacetError::EnumWithoutAllowed),
            None => {}
            Some(values) => {
                if values.is_empty() {
                    return Err(FacetError::EmptyAllowed);
                }
                let mut seen = BTreeSet::new();
                for v in values {
                    if !value_type.accepts(v) {
                        return Err(FacetError::NonConforming {
                            value: v.to_string(),
                            value_type,
                        });
                    }
                    if !seen.insert(v) {
                        return Err(FacetError::DuplicateAllowed(v.to_string()));
                    }
                }
            }
        }
        Ok(FacetSpec {
            value_type,
            allowed,
            cardinality,
        })
    }

    pub fn value_type(&self) -> ValueType {
        self.value_type
    }

    pub fn allowed(&self) -> Option<&[Literal]> {
        self.allowed.as_deref()
    }

    pub fn cardinality(&self) -> Cardinality {
        self.cardinality
    }

    pub fn permits(&self, value: &Literal) -> bool {
        self.allowed.as_ref().is_none_or(|a| a.contains(value))
    }

    /// Same facet with the allowed list sorted.
    pub fn canonical(&self) -> FacetSpec {
        let mut out = self.clone();
        if let Some(a) = &mut out.allowed {
            a.sort();
        }
        out
    }
}

/// One ontology statement.
///
/// Variant order is the canonical sort order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    ClassDecl(Ident),
    SubClassOf {
        child: Ident,
        parent: Ident,
    },
    ObjPropDecl {
        prop: Ident,
        domain: Option<Ident>,
        range: Option<Ident>,
    },
    DataPropDecl {
        prop: Ident,
        domain: Option<Ident>,
        facet: FacetSpec,
    },
    IndividualDecl {
        individual: Ident,
        types: Vec<Ident>,
    },
    ObjAssertion {
        subject: Ident,
        prop: Ident,
        object: Ident,
    },
    DataAssertion {
        subject: Ident,
        prop: Ident,
        value: Literal,
    },
}

/// Whether an axiom introduces a name or only mentions it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Declares,
    References,
}

impl Axiom {
    /// Every name the axiom touches, with the kind it must have.
    pub fn names(&self) -> Vec<(&Ident, EntityKind, Role)> {
        use EntityKind::*;
        use Role::*;
        match self {
            Axiom::ClassDecl(c) => vec![(c, Class, Declares)],
            Axiom::SubClassOf { child, parent } => {
                vec![(child, Class, References), (parent, Class, References)]
            }
            Axiom::ObjPropDecl { prop, domain, range } => {
                let mut v = vec![(prop, ObjectProperty, Declares)];
                v.extend(domain.iter().map(|d| (d, Class, References)));
                v.extend(range.iter().map(|r| (r, Class, References)));
                v
            }
            Axiom::DataPropDecl { prop, domain, .. } => {
                let mut v = vec![(prop, DataProperty, Declares)];
                v.extend(domain.iter().map(|d| (d, Class, References)));
                v
            }
            Axiom::IndividualDecl { individual, types } => {
                let mut v = vec![(individual, Individual, Declares)];
                v.extend(types.iter().map(|t| (t, Class, References)));
                v
            }
            Axiom::ObjAssertion { subject, prop, object } => vec![
                (subject, Individual, References),
                (prop, ObjectProperty, References),
                (object, Individual, References),
            ],
            Axiom::DataAssertion { subject, prop, .. } => {
                vec![(subject, Individual, References), (prop, DataProperty, References)]
            }
        }
    }

    /// Order-insensitive parts sorted and deduplicated.
    pub fn canonical(&self) -> Axiom {
        match self {
            Axiom::IndividualDecl { individual, types } => {
                let mut types = types.clone();
                types.sort();
                types.dedup();
                Axiom::IndividualDecl {
                    individual: individual.clone(),
                    types,
                }
            }
            Axiom::DataPropDecl { prop, domain, facet } => Axiom::DataPropDecl {
                prop: prop.clone(),
                domain: domain.clone(),
                facet: facet.canonical(),
            },
            other => other.clone(),
        }
    }

    fn is_thing_decl(&self) -> bool {
        matches!(self, Axiom::ClassDecl(c) if c.is_thing())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceLoc {
    pub file: String,
    pub line: usize,
}

impl SourceLoc {
    pub fn new(file: impl Into<String>, line: usize) -> Self {
        SourceLoc {
            file: file.into(),
            line,
        }
    }
}

/// An axiom together with where it was written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedAxiom {
    pub axiom: Axiom,
    pub loc: SourceLoc,
}

impl LocatedAxiom {
    pub fn new(axiom: Axiom, loc: SourceLoc) -> Self {
        LocatedAxiom { axiom, loc }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectProperty {
    pub domain: Option<Ident>,
    pub range: Option<Ident>,
    pub loc: SourceLoc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataProperty {
    pub domain: Option<Ident>,
    pub facet: FacetSpec,
    pub loc: SourceLoc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjFact {
    pub subject: Ident,
    pub prop: Ident,
    pub object: Ident,
    pub loc: SourceLoc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataFact {
    pub subject: Ident,
    pub prop: Ident,
    pub value: Literal,
    pub loc: SourceLoc,
}

/// A loaded ontology. Immutable once built.
#[derive(Debug, Clone)]
pub struct Ontology {
    name: String,
    axioms: Vec<LocatedAxiom>,
    symbols: BTreeMap<Ident, EntityKind>,
    provenance: Vec<String>,
    asserted_parents: BTreeMap<Ident, BTreeSet<Ident>>,
    object_props: BTreeMap<Ident, ObjectProperty>,
    data_props: BTreeMap<Ident, DataProperty>,
    individual_types: BTreeMap<Ident, BTreeSet<Ident>>,
    obj_facts: Vec<ObjFact>,
    data_facts: Vec<DataFact>,
}

/// Validates references and kinds and builds an [`Ontology`].
///
/// All problems are reported in one pass. Classes without an asserted parent
/// sit directly under [`THING`].
pub fn build_ontology(name: &str, axioms: Vec<LocatedAxiom>) -> Result<Ontology, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut symbols: BTreeMap<Ident, EntityKind> = BTreeMap::new();
    symbols.insert(Ident::thing(), EntityKind::Class);

    for la in &axioms {
        for (name, kind, role) in la.axiom.names() {
            if role != Role::Declares {
                continue;
            }
            match symbols.get(name) {
                Some(&existing) if existing != kind => diags.push(Diagnostic::error(
                    codes::E_KIND_CLASH,
                    &la.loc.file,
                    la.loc.line,
                    format!("`{name}` declared as {kind} but already declared as {existing}"),
                )),
                Some(_) => {}
                None => {
                    symbols.insert(name.clone(), kind);
                }
            }
        }
    }

    let mut asserted_parents: BTreeMap<Ident, BTreeSet<Ident>> = symbols
        .iter()
        .filter(|(_, k)| **k == EntityKind::Class)
        .map(|(n, _)| (n.clone(), BTreeSet::new()))
        .collect();
    let mut object_props: BTreeMap<Ident, ObjectProperty> = BTreeMap::new();
    let mut data_props: BTreeMap<Ident, DataProperty> = BTreeMap::new();
    let mut individual_types: BTreeMap<Ident, BTreeSet<Ident>> = BTreeMap::new();
    let mut obj_facts = Vec::new();
    let mut data_facts: Vec<DataFact> = Vec::new();
    let mut seen_obj = BTreeSet::new();
    let mut seen_data = BTreeSet::new();

    for la in &axioms {
        let (file, line) = (&la.loc.file, la.loc.line);
        let mut ok = true;
        for (name, kind, role) in la.axiom.names() {
            if role == Role::Declares {
                continue;
            }
            match symbols.get(name) {
                None => {
                    ok = false;
                    diags.push(Diagnostic::error(
                        codes::E_UNKNOWN_REF,
                        file,
                        line,
                        format!("undeclared {kind} `{name}`"),
                    ));
                }
                Some(&actual) if actual != kind => {
                    ok = false;
                    diags.push(Diagnostic::error(
                        codes::E_KIND_CLASH,
                        file,
                        line,
                        format!("`{name}` used as {kind} but declared as {actual}"),
                    ));
                }
                Some(_) => {}
            }
        }

        match &la.axiom {
            Axiom::ClassDecl(_) => {}
            Axiom::SubClassOf { child, parent } => {
                if child == parent {
                    diags.push(Diagnostic::error(
                        codes::E_SELF_SUBCLASS,
                        file,
                        line,
                        format!("`{child}` cannot be a subclass of itself"),
                    ));
                } else if ok {
                    asserted_parents
                        .entry(child.clone())
                        .or_default()
                        .insert(parent.clone());
                }
            }
            Axiom::ObjPropDecl { prop, domain, range } => {
                let decl = ObjectProperty {
                    domain: domain.clone(),
                    range: range.clone(),
                    loc: la.loc.clone(),
                };
                match object_props.get(prop) {
                    Some(prev) if prev.domain != decl.domain || prev.range != decl.range => {
                        diags.push(Diagnostic::error(
                            codes::E_DECL_CLASH,
                            file,
                            line,
                            format!(
                                "object property `{prop}` redeclared with a different domain/range (first declared at {}:{})",
                                prev.loc.file, prev.loc.line
                            ),
                        ))
                    }
                    Some(_) => {}
                    None if symbols.get(prop) == Some(&EntityKind::ObjectProperty) => {
                        object_props.insert(prop.clone(), decl);
                    }
                    None => {}
                }
            }
            Axiom::DataPropDecl { prop, domain, facet } => {
                let decl = DataProperty {
                    domain: domain.clone(),
                    facet: facet.canonical(),
                    loc: la.loc.clone(),
                };
                match data_props.get(prop) {
                    Some(prev) if prev.facet != decl.facet => diags.push(Diagnostic::error(
                        codes::E_FACET_CLASH,
                        file,
                        line,
                        format!(
                            "data property `{prop}` redeclared with a different facet (first declared at {}:{})",
                            prev.loc.file, prev.loc.line
                        ),
                    )),
                    Some(prev) if prev.domain != decl.domain => diags.push(Diagnostic::error(
                        codes::E_DECL_CLASH,
                        file,
                        line,
                        format!(
                            "data property `{prop}` redeclared with a different domain (first declared at {}:{})",
                            prev.loc.file, prev.loc.line
                        ),
                    )),
                    Some(_) => {}
                    None if symbols.get(prop) == Some(&EntityKind::DataProperty) => {
                        data_props.insert(prop.clone(), decl);
                    }
                    None => {}
                }
            }
            Axiom::IndividualDecl { individual, types } => {
                if types.is_empty() {
                    diags.push(Diagnostic::error(
                        codes::E_SYNTAX,
                        file,
                        line,
                        format!("individual `{individual}` has no type"),
                    ));
                } else if ok {
                    individual_types
                        .entry(individual.clone())
                        .or_default()
                        .extend(types.iter().cloned());
                }
            }
            Axiom::ObjAssertion { subject, prop, object } => {
                if ok && seen_obj.insert((subject.clone(), prop.clone(), object.clone())) {
                    obj_facts.push(ObjFact {
                        subject: subject.clone(),
                        prop: prop.clone(),
                        object: object.clone(),
                        loc: la.loc.clone(),
                    });
                }
            }
            Axiom::DataAssertion { subject, prop, value } => {
                if ok && seen_data.insert((subject.clone(), prop.clone(), value.clone())) {
                    data_facts.push(DataFact {
                        subject: subject.clone(),
                        prop: prop.clone(),
                        value: value.clone(),
                        loc: la.loc.clone(),
                    });
                }
            }
        }
    }

    if !diags.is_empty() {
        crate::diagnostic::sort_diagnostics(&mut diags);
        return Err(diags);
    }

    let mut provenance: Vec<String> = Vec::new();
    for la in &axioms {
        if !provenance.contains(&la.loc.file) {
            provenance.push(la.loc.file.clone());
        }
    }

    Ok(Ontology {
        name: name.to_string(),
        axioms,
        symbols,
        provenance,
        asserted_parents,
        object_props,
        data_props,
        individual_types,
        obj_facts,
        data_facts,
    })
}

impl Ontology {
    pub fn build(name: &str, axioms: Vec<LocatedAxiom>) -> Result<Self, Vec<Diagnostic>> {
        build_ontology(name, axioms)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Axioms in input order.
    pub fn axioms(&self) -> &[LocatedAxiom] {
        &self.axioms
    }

    pub fn symbols(&self) -> &BTreeMap<Ident, EntityKind> {
        &self.symbols
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn kind_of(&self, name: &str) -> Option<EntityKind> {
        self.symbols.get(name).copied()
    }

    fn of_kind(&self, kind: EntityKind) -> impl Iterator<Item = &Ident> + '_ {
        self.symbols.iter().filter(move |(_, k)| **k == kind).map(|(n, _)| n)
    }

    /// All classes, `Thing` included, in name order.
    pub fn classes(&self) -> impl Iterator<Item = &Ident> + '_ {
        self.of_kind(EntityKind::Class)
    }

    pub fn individuals(&self) -> impl Iterator<Item = &Ident> + '_ {
        self.of_kind(EntityKind::Individual)
    }

    pub fn asserted_parents(&self, class: &str) -> Option<&BTreeSet<Ident>> {
        self.asserted_parents.get(class)
    }

    /// Asserted parents, or `{Thing}` when there are none.
    pub fn parents(&self, class: &str) -> BTreeSet<Ident> {
        match self.asserted_parents.get(class) {
            Some(p) if !p.is_empty() => p.clone(),
            _ if class == THING => BTreeSet::new(),
            _ => BTreeSet::from([Ident::thing()]),
        }
    }

    pub fn object_properties(&self) -> &BTreeMap<Ident, ObjectProperty> {
        &self.object_props
    }

    pub fn data_properties(&self) -> &BTreeMap<Ident, DataProperty> {
        &self.data_props
    }

    /// Asserted (not inferred) types of each individual.
    pub fn individual_types(&self) -> &BTreeMap<Ident, BTreeSet<Ident>> {
        &self.individual_types
    }

    /// Distinct object-property assertions, first occurrence kept.
    pub fn obj_facts(&self) -> &[ObjFact] {
        &self.obj_facts
    }

    /// Distinct data-property assertions, first occurrence kept.
    pub fn data_facts(&self) -> &[DataFact] {
        &self.data_facts
    }
}

/// Deduplicated, sorted axioms. Implicit `Thing` edges never appear.
pub fn canonical_axioms(o: &Ontology) -> Vec<Axiom> {
    canonical_located(o).into_iter().map(|la| la.axiom).collect()
}

/// Like [`canonical_axioms`] but keeps the first location of each axiom.
pub fn canonical_located(o: &Ontology) -> Vec<LocatedAxiom> {
    let mut first: BTreeMap<Axiom, SourceLoc> = BTreeMap::new();
    for la in o.axioms() {
        if la.axiom.is_thing_decl() {
            continue;
        }
        first.entry(la.axiom.canonical()).or_insert_with(|| la.loc.clone());
    }
    first
        .into_iter()
        .map(|(axiom, loc)| LocatedAxiom { axiom, loc })
        .collect()
}
