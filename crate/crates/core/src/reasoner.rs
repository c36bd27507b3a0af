//! Structural subsumption: subclass closure, instance realization, and
//! property inheritance down the taxonomy.
//!
//! The taxonomy must be acyclic. Every class other than `Thing` ends up with
//! `Thing` among its ancestors, through explicit or implicit edges.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::diagnostic::{codes, Diagnostic};
use crate::model::{Axiom, EntityKind, Ident, Ontology};

static EMPTY: BTreeSet<Ident> = BTreeSet::new();

/// Inferred class hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaxonomyClosure {
    ancestors: BTreeMap<Ident, BTreeSet<Ident>>,
    descendants: BTreeMap<Ident, BTreeSet<Ident>>,
    direct_parents: BTreeMap<Ident, BTreeSet<Ident>>,
}

impl TaxonomyClosure {
    /// Strict ancestors (never contains `class` itself).
    pub fn ancestors(&self, class: &str) -> &BTreeSet<Ident> {
        self.ancestors.get(class).unwrap_or(&EMPTY)
    }

    /// Strict descendants.
    pub fn descendants(&self, class: &str) -> &BTreeSet<Ident> {
        self.descendants.get(class).unwrap_or(&EMPTY)
    }

    /// Asserted parents only; implicit `Thing` edges are not listed.
    pub fn direct_parents(&self, class: &str) -> &BTreeSet<Ident> {
        self.direct_parents.get(class).unwrap_or(&EMPTY)
    }

    /// `sub ⊑ sup`, reflexive.
    pub fn subsumed_by(&self, sub: &str, sup: &str) -> bool {
        sub == sup || self.ancestors(sub).contains(sup)
    }

    pub fn classes(&self) -> impl Iterator<Item = &Ident> + '_ {
        self.ancestors.keys()
    }

    pub fn ancestor_map(&self) -> &BTreeMap<Ident, BTreeSet<Ident>> {
        &self.ancestors
    }
}

/// Computes the strict ancestor/descendant maps over asserted plus implicit
/// `Thing` edges. A subclass cycle yields one `E_CYCLE` per strongly
/// connected component, naming every class on it.
pub fn compute_closure(o: &Ontology) -> Result<TaxonomyClosure, Vec<Diagnostic>> {
    let classes: Vec<&Ident> = o.classes().collect();
    let parents: BTreeMap<&Ident, BTreeSet<Ident>> = classes.iter().map(|c| (*c, o.parents(c.as_str()))).collect();

    let mut children: BTreeMap<&Ident, Vec<&Ident>> = BTreeMap::new();
    let mut pending: BTreeMap<&Ident, usize> = BTreeMap::new();
    for (c, ps) in &parents {
        pending.insert(c, ps.len());
        for p in ps {
            let (p, _) = parents.get_key_value(p).expect("parents are declared classes");
            children.entry(p).or_default().push(c);
        }
    }

    // Kahn order, parents before children.
    let mut ancestors: BTreeMap<Ident, BTreeSet<Ident>> = BTreeMap::new();
    let mut queue: VecDeque<&Ident> = pending.iter().filter(|(_, n)| **n == 0).map(|(c, _)| *c).collect();
    while let Some(c) = queue.pop_front() {
        let mut anc = BTreeSet::new();
        for p in &parents[c] {
            anc.insert(p.clone());
            anc.extend(ancestors[p].iter().cloned());
        }
        ancestors.insert(c.clone(), anc);
        for &child in children.get(c).map(Vec::as_slice).unwrap_or_default() {
            let n = pending.get_mut(child).expect("child is a class");
            *n -= 1;
            if *n == 0 {
                queue.push_back(child);
            }
        }
    }

    if ancestors.len() < classes.len() {
        return Err(cycle_diagnostics(o, &parents, &ancestors));
    }

    let mut descendants: BTreeMap<Ident, BTreeSet<Ident>> =
        classes.iter().map(|c| ((*c).clone(), BTreeSet::new())).collect();
    for (c, anc) in &ancestors {
        for a in anc {
            descendants.get_mut(a).expect("ancestor is a class").insert(c.clone());
        }
    }
    let direct_parents = classes
        .iter()
        .map(|c| {
            (
                (*c).clone(),
                o.asserted_parents(c.as_str()).cloned().unwrap_or_default(),
            )
        })
        .collect();

    Ok(TaxonomyClosure {
        ancestors,
        descendants,
        direct_parents,
    })
}

fn cycle_diagnostics(
    o: &Ontology,
    parents: &BTreeMap<&Ident, BTreeSet<Ident>>,
    resolved: &BTreeMap<Ident, BTreeSet<Ident>>,
) -> Vec<Diagnostic> {
    let stuck: BTreeSet<&Ident> = parents
        .keys()
        .filter(|c| !resolved.contains_key(**c))
        .copied()
        .collect();

    // Reachability restricted to unresolved classes; sizes here are small.
    let reach = |from: &Ident| -> BTreeSet<&Ident> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        while let Some(c) = stack.pop() {
            for p in &parents[c] {
                if let Some(&p) = stuck.get(p) {
                    if seen.insert(p) {
                        stack.push(p);
                    }
                }
            }
        }
        seen
    };
    let reach: BTreeMap<&Ident, BTreeSet<&Ident>> = stuck.iter().map(|c| (*c, reach(c))).collect();

    let mut assigned = BTreeSet::new();
    let mut diags = Vec::new();
    for &c in &stuck {
        if assigned.contains(c) || !reach[c].contains(c) {
            continue;
        }
        let component: BTreeSet<&Ident> = reach[c].iter().filter(|d| reach[*d].contains(c)).copied().collect();
        assigned.extend(component.iter().copied());

        let loc = o
            .axioms()
            .iter()
            .filter(|la| {
                matches!(&la.axiom, Axiom::SubClassOf { child, parent }
                    if component.contains(child) && component.contains(parent))
            })
            .map(|la| la.loc.clone())
            .min()
            .expect("a cycle is made of asserted edges");
        let names: Vec<&str> = component.iter().map(|c| c.as_str()).collect();
        diags.push(Diagnostic::error(
            codes::E_CYCLE,
            loc.file,
            loc.line,
            format!("subclass cycle through {}", names.join(", ")),
        ));
    }
    crate::diagnostic::sort_diagnostics(&mut diags);
    diags
}

/// Inferred class membership of individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    members_of: BTreeMap<Ident, BTreeSet<Ident>>,
    types_of: BTreeMap<Ident, BTreeSet<Ident>>,
}

impl Realization {
    pub fn members_of(&self, class: &str) -> &BTreeSet<Ident> {
        self.members_of.get(class).unwrap_or(&EMPTY)
    }

    /// All classes of `individual`, asserted types and their ancestors.
    pub fn types_of(&self, individual: &str) -> &BTreeSet<Ident> {
        self.types_of.get(individual).unwrap_or(&EMPTY)
    }

    pub fn is_member(&self, individual: &str, class: &str) -> bool {
        self.types_of(individual).contains(class)
    }
}

/// `typesOf(i)` is the union of each asserted type with its ancestors;
/// `membersOf` is the inverse map.
pub fn realize(o: &Ontology, closure: &TaxonomyClosure) -> Realization {
    let mut members_of: BTreeMap<Ident, BTreeSet<Ident>> = o.classes().map(|c| (c.clone(), BTreeSet::new())).collect();
    let mut types_of = BTreeMap::new();
    for individual in o.individuals() {
        let mut types = BTreeSet::new();
        for t in o.individual_types().get(individual).into_iter().flatten() {
            types.insert(t.clone());
            types.extend(closure.ancestors(t.as_str()).iter().cloned());
        }
        for t in &types {
            members_of.entry(t.clone()).or_default().insert(individual.clone());
        }
        types_of.insert(individual.clone(), types);
    }
    Realization { members_of, types_of }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReasonerError {
    #[error("unknown class `{0}`")]
    UnknownClass(String),
}

/// Properties usable on instances of `class`: those whose domain is `class`,
/// one of its ancestors, or unspecified.
pub fn applicable_properties(
    o: &Ontology,
    closure: &TaxonomyClosure,
    class: &str,
) -> Result<BTreeSet<Ident>, ReasonerError> {
    if o.kind_of(class) != Some(EntityKind::Class) {
        return Err(ReasonerError::UnknownClass(class.to_string()));
    }
    let applies = |domain: &Option<Ident>| domain.as_ref().is_none_or(|d| closure.subsumed_by(class, d.as_str()));
    let object = o
        .object_properties()
        .iter()
        .filter(|(_, p)| applies(&p.domain))
        .map(|(n, _)| n);
    let data = o
        .data_properties()
        .iter()
        .filter(|(_, p)| applies(&p.domain))
        .map(|(n, _)| n);
    Ok(object.chain(data).cloned().collect())
}
