use std::fmt::Write as _;

use crate::model::{canonical_axioms, Axiom, Ontology};

/// Renders one axiom as a fixture statement (no line terminator).
pub fn axiom_to_oft(axiom: &Axiom) -> String {
    let mut s = String::new();
    match axiom {
        Axiom::ClassDecl(c) => write!(s, "class {c}"),
        Axiom::SubClassOf { child, parent } => write!(s, "class {child} sub {parent}"),
        Axiom::ObjPropDecl { prop, domain, range } => {
            s.push_str("objprop ");
            s.push_str(prop.as_str());
            if let Some(d) = domain {
                s.push_str(" domain ");
                s.push_str(d.as_str());
            }
            if let Some(r) = range {
                s.push_str(" range ");
                s.push_str(r.as_str());
            }
            Ok(())
        }
        Axiom::DataPropDecl { prop, domain, facet } => {
            s.push_str("dataprop ");
            s.push_str(prop.as_str());
            if let Some(d) = domain {
                s.push_str(" domain ");
                s.push_str(d.as_str());
            }
            s.push_str(" type ");
            s.push_str(facet.value_type().keyword());
            if let Some(allowed) = facet.allowed() {
                s.push_str(" allowed ");
                let values: Vec<String> = allowed.iter().map(ToString::to_string).collect();
                s.push_str(&values.join(", "));
            }
            write!(s, " card {}", facet.cardinality().keyword())
        }
        Axiom::IndividualDecl { individual, types } => {
            let types: Vec<&str> = types.iter().map(|t| t.as_str()).collect();
            write!(s, "individual {individual} type {}", types.join(", "))
        }
        Axiom::ObjAssertion { subject, prop, object } => write!(s, "rel {subject} {prop} {object}"),
        Axiom::DataAssertion { subject, prop, value } => write!(s, "attr {subject} {prop} {value}"),
    }
    .expect("writing to a String cannot fail");
    s
}

/// Canonical fixture text: `ontology <name>` header, then one canonical
/// axiom per line, LF-terminated.
pub fn serialize_oft(o: &Ontology) -> String {
    let mut out = format!("ontology {}\n", o.name());
    for axiom in canonical_axioms(o) {
        out.push_str(&axiom_to_oft(&axiom));
        out.push('\n');
    }
    out
}
