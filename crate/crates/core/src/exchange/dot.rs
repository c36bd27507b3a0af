//! Graphviz export of the class hierarchy.

use std::collections::BTreeSet;

use crate::model::{Ident, Ontology};
use crate::reasoner::TaxonomyClosure;

/// Minimal edge set with the same reachability as the closure, as
/// `(parent, child)` pairs. For each class only its minimal strict
/// ancestors are kept.
pub fn transitive_reduction(closure: &TaxonomyClosure) -> BTreeSet<(Ident, Ident)> {
    let mut edges = BTreeSet::new();
    for (class, ancestors) in closure.ancestor_map() {
        for a in ancestors {
            let covered = ancestors
                .iter()
                .any(|m| m != a && closure.ancestors(m.as_str()).contains(a));
            if !covered {
                edges.insert((a.clone(), class.clone()));
            }
        }
    }
    edges
}

/// Parent→child edges as asserted, with classes lacking a parent hung off
/// `Thing`.
pub fn asserted_edges(o: &Ontology) -> BTreeSet<(Ident, Ident)> {
    o.classes()
        .flat_map(|c| o.parents(c.as_str()).into_iter().map(move |p| (p, c.clone())))
        .collect()
}

/// Renders `digraph taxonomy { ... }` with quoted node lines, then edge
/// lines, each sorted. Inferred mode draws the transitive reduction.
/// `Thing` appears only when it has children in the drawn edge set.
pub fn export_dot(o: &Ontology, closure: &TaxonomyClosure, inferred: bool) -> String {
    let edges = if inferred {
        transitive_reduction(closure)
    } else {
        asserted_edges(o)
    };
    let thing_drawn = edges.iter().any(|(p, _)| p.is_thing());
    let mut out = String::from("digraph taxonomy {\n");
    for class in o.classes().filter(|c| !c.is_thing() || thing_drawn) {
        out.push_str(&format!("  \"{class}\";\n"));
    }
    for (parent, child) in &edges {
        out.push_str(&format!("  \"{parent}\" -> \"{child}\";\n"));
    }
    out.push_str("}\n");
    out
}
