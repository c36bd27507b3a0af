//! Aggregating two ontologies into one.
//!
//! Conflict policy: the first ontology wins. A name declared under
//! different kinds, or a property redeclared with a different facet or
//! signature, is reported and the second ontology's side is dropped.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagnostic::{codes, sort_diagnostics, Diagnostic};
use crate::model::{build_ontology, canonical_axioms, canonical_located, Axiom, Ident, LocatedAxiom, Ontology, Role};
use crate::reasoner::compute_closure;

#[derive(Debug, Clone)]
pub struct MergeReport {
    pub merged: Ontology,
    /// Canonical axioms of `merged` not already in the first ontology.
    pub added: usize,
    /// Sorted. Includes `E_CYCLE` when the union closes a subclass cycle.
    pub conflicts: Vec<Diagnostic>,
}

impl MergeReport {
    pub fn has_cycle(&self) -> bool {
        self.conflicts.iter().any(|d| d.code == codes::E_CYCLE)
    }
}

pub fn merge(a: &Ontology, b: &Ontology, name: &str) -> Result<MergeReport, Vec<Diagnostic>> {
    let mut conflicts = Vec::new();
    let conflict = |code, la: &LocatedAxiom, msg: String| Diagnostic::error(code, &la.loc.file, la.loc.line, msg);

    let a_axioms = canonical_located(a);
    let b_axioms = canonical_located(b);

    // Names b uses under a different kind than a does.
    let mut clashing: BTreeSet<&Ident> = BTreeSet::new();
    for (n, &kind) in b.symbols() {
        let Some(a_kind) = a.kind_of(n.as_str()) else { continue };
        if a_kind == kind {
            continue;
        }
        clashing.insert(n);
        let decl = b_axioms
            .iter()
            .find(|la| {
                la.axiom
                    .names()
                    .iter()
                    .any(|(m, _, role)| *m == n && *role == Role::Declares)
            })
            .expect("every symbol of a built ontology is declared");
        conflicts.push(conflict(
            codes::E_KIND_CLASH,
            decl,
            format!(
                "`{n}` is a {kind} here but a {a_kind} in `{}`; keeping the latter",
                a.name()
            ),
        ));
    }

    let mut kept: Vec<&LocatedAxiom> = Vec::new();
    for la in &b_axioms {
        if la.axiom.names().iter().any(|(n, _, _)| clashing.contains(n)) {
            continue;
        }
        match &la.axiom {
            Axiom::DataPropDecl { prop, domain, facet } => {
                if let Some(ours) = a.data_properties().get(prop) {
                    if ours.facet != facet.canonical() {
                        conflicts.push(conflict(
                            codes::E_FACET_CLASH,
                            la,
                            format!("facet of `{prop}` differs from `{}`; keeping the latter", a.name()),
                        ));
                        continue;
                    }
                    if &ours.domain != domain {
                        conflicts.push(conflict(
                            codes::E_DECL_CLASH,
                            la,
                            format!("domain of `{prop}` differs from `{}`; keeping the latter", a.name()),
                        ));
                        continue;
                    }
                }
            }
            Axiom::ObjPropDecl { prop, domain, range } => {
                if let Some(ours) = a.object_properties().get(prop) {
                    if &ours.domain != domain || &ours.range != range {
                        conflicts.push(conflict(
                            codes::E_DECL_CLASH,
                            la,
                            format!(
                                "domain/range of `{prop}` differs from `{}`; keeping the latter",
                                a.name()
                            ),
                        ));
                        continue;
                    }
                }
            }
            _ => {}
        }
        kept.push(la);
    }

    // Drop whatever now refers to a name nobody declares.
    loop {
        let mut declared: BTreeMap<&Ident, ()> = BTreeMap::new();
        for n in a.symbols().keys() {
            declared.insert(n, ());
        }
        for la in &kept {
            for (n, _, role) in la.axiom.names() {
                if role == Role::Declares {
                    declared.insert(n, ());
                }
            }
        }
        let before = kept.len();
        kept.retain(|la| la.axiom.names().iter().all(|(n, _, _)| declared.contains_key(n)));
        if kept.len() == before {
            break;
        }
    }

    let mut axioms = a_axioms;
    axioms.extend(kept.into_iter().cloned());
    let merged = build_ontology(name, axioms)?;

    let ours: BTreeSet<Axiom> = canonical_axioms(a).into_iter().collect();
    let added = canonical_axioms(&merged).iter().filter(|ax| !ours.contains(ax)).count();

    if let Err(cycles) = compute_closure(&merged) {
        conflicts.extend(cycles);
    }
    sort_diagnostics(&mut conflicts);
    Ok(MergeReport {
        merged,
        added,
        conflicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::load_sources;

    fn load(file: &str, src: &str) -> Ontology {
        let (o, d) = load_sources([(file, src)]);
        assert!(d.is_empty(), "{d:?}");
        o.unwrap()
    }

    const BASE: &str = "ontology base
class Date_fruit
class Species sub Date_fruit
dataprop has_date_of_origin domain Species type number card single
";

    #[test]
    fn self_merge_adds_nothing() {
        let a = load("a.oft", BASE);
        let r = merge(&a, &a, "m").unwrap();
        assert_eq!(r.added, 0);
        assert!(r.conflicts.is_empty());
        assert_eq!(canonical_axioms(&r.merged), canonical_axioms(&a));
    }

    #[test]
    fn new_species_subclass() {
        let a = load("a.oft", BASE);
        let b = load("b.oft", "class Species\nclass Medjool sub Species\n");
        let r = merge(&a, &b, "m").unwrap();
        assert_eq!(r.added, 2);
        assert!(r.conflicts.is_empty());
    }

    #[test]
    fn facet_clash_keeps_first() {
        let a = load("a.oft", BASE);
        let b = load(
            "b.oft",
            "class Species\ndataprop has_date_of_origin domain Species type string card single\n",
        );
        let r = merge(&a, &b, "m").unwrap();
        assert_eq!(r.conflicts.len(), 1);
        assert_eq!(
            (r.conflicts[0].code, r.conflicts[0].file.as_str(), r.conflicts[0].line),
            (codes::E_FACET_CLASH, "b.oft", 2)
        );
        assert_eq!(r.added, 0);
        let facet = &r.merged.data_properties()["has_date_of_origin"].facet;
        assert_eq!(facet.value_type(), crate::ValueType::Number);
    }

    #[test]
    fn kind_clash_drops_dependent_axioms() {
        let a = load("a.oft", BASE);
        let b = load(
            "b.oft",
            "individual Species type X\nclass X\nobjprop p\nrel Species p Species\nclass Y sub X\n",
        );
        let r = merge(&a, &b, "m").unwrap();
        assert_eq!(r.conflicts.len(), 1);
        assert_eq!(r.conflicts[0].code, codes::E_KIND_CLASH);
        assert_eq!(r.merged.kind_of("Species"), Some(crate::EntityKind::Class));
        // class X, class Y, Y sub X, objprop p survive
        assert_eq!(r.added, 4);
    }

    #[test]
    fn union_cycle_is_reported() {
        let a = load("a.oft", "class A\nclass B sub A\n");
        let b = load("b.oft", "class B\nclass A sub B\n");
        let r = merge(&a, &b, "m").unwrap();
        assert!(r.has_cycle());
        assert_eq!(r.conflicts.len(), 1);
    }
}
