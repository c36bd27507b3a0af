//! Seeded ontology generators and brute-force oracles.
//!
//! The oracles deliberately avoid the library's closure and realization
//! code: they walk raw asserted edges with plain strings.

use std::collections::{BTreeMap, BTreeSet};

use oft_core::dlquery::ClassExpr;
use oft_core::model::{build_ontology, Axiom, Cardinality, FacetSpec, Ident, LocatedAxiom, Ontology, SourceLoc};
use oft_core::{Literal, ValueType, THING};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn id(s: impl Into<String>) -> Ident {
    Ident::new(s).expect("generated names are identifiers")
}

#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub max_classes: usize,
    pub max_parents: usize,
    /// Probability of an extra edge from a class to one of its strict
    /// ancestors.
    pub redundant_edge_prob: f64,
    pub max_individuals: usize,
    pub max_obj_props: usize,
    pub max_data_props: usize,
    pub max_assertions: usize,
}

impl GenConfig {
    pub fn taxonomy(max_classes: usize, max_individuals: usize) -> Self {
        GenConfig {
            max_classes,
            max_parents: 3,
            redundant_edge_prob: 0.2,
            max_individuals,
            max_obj_props: 0,
            max_data_props: 0,
            max_assertions: 0,
        }
    }

    pub fn small() -> Self {
        GenConfig {
            max_classes: 30,
            max_parents: 2,
            redundant_edge_prob: 0.1,
            max_individuals: 50,
            max_obj_props: 4,
            max_data_props: 4,
            max_assertions: 100,
        }
    }
}

/// Random acyclic ontology. Class `Ck` may only have parents `Cj` with
/// `j < k`, so the subclass graph is a DAG by construction.
pub fn gen_axioms(rng: &mut Rng8, cfg: &GenConfig) -> Vec<Axiom> {
    let n_classes = rng.gen_range(0..=cfg.max_classes);
    let classes: Vec<Ident> = (0..n_classes).map(|i| id(format!("C{i}"))).collect();
    let mut axioms = Vec::new();
    let mut parents: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n_classes];

    for i in 0..n_classes {
        axioms.push(Axiom::ClassDecl(classes[i].clone()));
        if i == 0 {
            continue;
        }
        let k = rng.gen_range(0..=cfg.max_parents.min(i));
        for _ in 0..k {
            parents[i].insert(rng.gen_range(0..i));
        }
        if rng.gen_bool(cfg.redundant_edge_prob) {
            let anc = index_ancestors(&parents, i);
            if let Some(&a) = anc.iter().copied().collect::<Vec<_>>().choose(rng) {
                parents[i].insert(a);
            }
        }
        for &p in &parents[i] {
            axioms.push(Axiom::SubClassOf {
                child: classes[i].clone(),
                parent: classes[p].clone(),
            });
        }
    }

    let pick_class = |rng: &mut Rng8| -> Option<Ident> {
        if classes.is_empty() || rng.gen_bool(0.15) {
            None
        } else {
            classes.choose(rng).cloned()
        }
    };

    let n_obj = rng.gen_range(0..=cfg.max_obj_props);
    let obj_props: Vec<Ident> = (0..n_obj).map(|i| id(format!("p{i}"))).collect();
    for p in &obj_props {
        axioms.push(Axiom::ObjPropDecl {
            prop: p.clone(),
            domain: pick_class(rng),
            range: pick_class(rng),
        });
    }

    let n_data = rng.gen_range(0..=cfg.max_data_props);
    let mut data_props: Vec<(Ident, FacetSpec)> = Vec::new();
    for i in 0..n_data {
        let prop = id(format!("d{i}"));
        let facet = gen_facet(rng);
        axioms.push(Axiom::DataPropDecl {
            prop: prop.clone(),
            domain: pick_class(rng),
            facet: facet.clone(),
        });
        data_props.push((prop, facet));
    }

    let n_ind = rng.gen_range(0..=cfg.max_individuals);
    let individuals: Vec<Ident> = (0..n_ind).map(|i| id(format!("i{i}"))).collect();
    for ind in &individuals {
        let k = rng.gen_range(1..=3);
        let mut types = BTreeSet::new();
        for _ in 0..k {
            types.insert(pick_class(rng).unwrap_or_else(Ident::thing));
        }
        axioms.push(Axiom::IndividualDecl {
            individual: ind.clone(),
            types: types.into_iter().collect(),
        });
    }

    if !individuals.is_empty() && (!obj_props.is_empty() || !data_props.is_empty()) {
        let n_assert = rng.gen_range(0..=cfg.max_assertions);
        for _ in 0..n_assert {
            let subject = individuals.choose(rng).unwrap().clone();
            let use_obj = data_props.is_empty() || (!obj_props.is_empty() && rng.gen_bool(0.6));
            if use_obj {
                axioms.push(Axiom::ObjAssertion {
                    subject,
                    prop: obj_props.choose(rng).unwrap().clone(),
                    object: individuals.choose(rng).unwrap().clone(),
                });
            } else {
                let (prop, facet) = data_props.choose(rng).unwrap();
                axioms.push(Axiom::DataAssertion {
                    subject,
                    prop: prop.clone(),
                    value: gen_value(rng, facet),
                });
            }
        }
    }
    axioms
}

fn index_ancestors(parents: &[BTreeSet<usize>], i: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    let mut stack: Vec<usize> = parents[i].iter().copied().collect();
    while let Some(p) = stack.pop() {
        if seen.insert(p) {
            stack.extend(parents[p].iter().copied());
        }
    }
    seen
}

pub fn gen_ontology(rng: &mut Rng8, cfg: &GenConfig) -> Ontology {
    build(gen_axioms(rng, cfg))
}

/// Builds generated axioms, numbering them as lines of `gen.oft`.
pub fn build(axioms: Vec<Axiom>) -> Ontology {
    let located = axioms
        .into_iter()
        .enumerate()
        .map(|(i, a)| LocatedAxiom::new(a, SourceLoc::new("gen.oft", i + 1)))
        .collect();
    build_ontology("gen", located).expect("generated ontologies are well formed")
}

const WORDS: &[&str] = &[
    "honey balls",
    "visitors dates",
    "say \"hi\"",
    "back\\slash",
    "tab\there",
    "x",
    "Tamr",
    "#not a comment",
];

fn gen_literal(rng: &mut Rng8, vt: ValueType) -> Literal {
    match vt {
        ValueType::String | ValueType::Enumerated => Literal::string(*WORDS.choose(rng).unwrap()),
        ValueType::Number => {
            let whole: i32 = rng.gen_range(-3000..3000);
            let text = if rng.gen_bool(0.5) {
                format!("{whole}")
            } else {
                format!("{whole}.{}0", rng.gen_range(0..100))
            };
            Literal::number(&text).unwrap()
        }
        ValueType::Boolean => Literal::boolean(rng.gen_bool(0.5)),
        ValueType::DateTime => {
            let (y, m, d) = (rng.gen_range(1900..2100), rng.gen_range(1..=12), rng.gen_range(1..=28));
            let text = if rng.gen_bool(0.5) {
                format!("{y:04}-{m:02}-{d:02}")
            } else {
                format!(
                    "{y:04}-{m:02}-{d:02}T{:02}:{:02}:00Z",
                    rng.gen_range(0..24),
                    rng.gen_range(0..60)
                )
            };
            Literal::datetime(&text).unwrap()
        }
        ValueType::LiteralAny => {
            let vt = *[
                ValueType::String,
                ValueType::Number,
                ValueType::Boolean,
                ValueType::DateTime,
            ]
            .choose(rng)
            .unwrap();
            gen_literal(rng, vt)
        }
    }
}

fn gen_facet(rng: &mut Rng8) -> FacetSpec {
    use ValueType::*;
    let vt = *[String, Number, Boolean, DateTime, Enumerated, LiteralAny]
        .choose(rng)
        .unwrap();
    let card = if rng.gen_bool(0.5) {
        Cardinality::Single
    } else {
        Cardinality::Multiple
    };
    let allowed = if vt == Enumerated || rng.gen_bool(0.3) {
        let mut vals: Vec<Literal> = (0..rng.gen_range(1..=4)).map(|_| gen_literal(rng, vt)).collect();
        vals.sort();
        vals.dedup();
        Some(vals)
    } else {
        None
    };
    FacetSpec::new(vt, allowed, card).expect("generated facets are valid")
}

/// A value of the facet's type, drawn from its allowed list when it has one.
pub fn gen_value(rng: &mut Rng8, facet: &FacetSpec) -> Literal {
    match facet.allowed() {
        Some(vals) => vals.choose(rng).unwrap().clone(),
        None => gen_literal(rng, facet.value_type()),
    }
}

/// Two ontologies drawn from one common random ontology. They agree on every
/// shared name, so merging them is conflict free.
pub fn gen_pair(rng: &mut Rng8, cfg: &GenConfig) -> (Ontology, Ontology) {
    let universe = gen_axioms(rng, cfg);
    let a = sub_ontology(rng, &universe);
    let b = sub_ontology(rng, &universe);
    (build(a), build(b))
}

fn sub_ontology(rng: &mut Rng8, universe: &[Axiom]) -> Vec<Axiom> {
    let mut declares: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, ax) in universe.iter().enumerate() {
        for (n, _, role) in ax.names() {
            if role == oft_core::model::Role::Declares {
                declares.entry(n.as_str()).or_insert(i);
            }
        }
    }
    let mut chosen: BTreeSet<usize> = (0..universe.len()).filter(|_| rng.gen_bool(0.6)).collect();
    loop {
        let mut needed = BTreeSet::new();
        for &i in &chosen {
            for (n, _, _) in universe[i].names() {
                if let Some(&d) = declares.get(n.as_str()) {
                    needed.insert(d);
                }
            }
        }
        if needed.is_subset(&chosen) {
            break;
        }
        chosen.extend(needed);
    }
    chosen.into_iter().map(|i| universe[i].clone()).collect()
}

// ---------------------------------------------------------------------------
// Oracles

/// `(child, parent)` pairs, with parentless classes hung off `Thing`.
pub fn subclass_edges(o: &Ontology) -> BTreeSet<(String, String)> {
    let mut edges = BTreeSet::new();
    let mut has_parent = BTreeSet::new();
    for ax in o.axioms() {
        if let Axiom::SubClassOf { child, parent } = &ax.axiom {
            edges.insert((child.to_string(), parent.to_string()));
            has_parent.insert(child.to_string());
        }
    }
    for c in o.classes() {
        if c.as_str() != THING && !has_parent.contains(c.as_str()) {
            edges.insert((c.to_string(), THING.to_string()));
        }
    }
    edges
}

type Up = BTreeMap<String, Vec<String>>;

fn up_map(edges: &BTreeSet<(String, String)>) -> Up {
    let mut up: Up = BTreeMap::new();
    for (c, p) in edges {
        up.entry(c.clone()).or_default().push(p.clone());
    }
    up
}

/// Strict ancestors of every class by depth-first search over raw edges.
pub fn reachability_ancestors(o: &Ontology) -> BTreeMap<String, BTreeSet<String>> {
    let up = up_map(&subclass_edges(o));
    o.classes()
        .map(|c| (c.to_string(), reach_up(&up, c.as_str())))
        .collect()
}

fn reach_up(up: &Up, from: &str) -> BTreeSet<String> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![from.to_string()];
    while let Some(c) = stack.pop() {
        for p in up.get(&c).into_iter().flatten() {
            if seen.insert(p.clone()) {
                stack.push(p.clone());
            }
        }
    }
    seen
}

/// Classes of `individual`, found by walking upward paths from each asserted
/// type. A path stops at a class this walk has already reached.
pub fn path_walk_types(o: &Ontology, individual: &str) -> BTreeSet<String> {
    walk_types(o, &up_map(&subclass_edges(o)), individual)
}

fn walk_types(o: &Ontology, up: &Up, individual: &str) -> BTreeSet<String> {
    fn walk(up: &Up, c: &str, out: &mut BTreeSet<String>) {
        if !out.insert(c.to_string()) {
            return;
        }
        for p in up.get(c).into_iter().flatten() {
            walk(up, p, out);
        }
    }
    let mut out = BTreeSet::new();
    for t in o.individual_types().get(individual).into_iter().flatten() {
        walk(up, t.as_str(), &mut out);
    }
    out
}

/// `membersOf` for every class via per-individual path walks.
pub fn path_walk_members(o: &Ontology) -> BTreeMap<String, BTreeSet<String>> {
    let up = up_map(&subclass_edges(o));
    let mut members: BTreeMap<String, BTreeSet<String>> =
        o.classes().map(|c| (c.to_string(), BTreeSet::new())).collect();
    for ind in o.individuals() {
        for c in walk_types(o, &up, ind.as_str()) {
            members.entry(c).or_default().insert(ind.to_string());
        }
    }
    members
}

/// Strict `(descendant, ancestor)` pairs of a `(child, parent)` edge set.
pub fn transitive_pairs(edges: &BTreeSet<(String, String)>) -> BTreeSet<(String, String)> {
    let up = up_map(edges);
    let mut out = BTreeSet::new();
    for n in up.keys() {
        for a in reach_up(&up, n) {
            out.insert((n.clone(), a));
        }
    }
    out
}

/// Transitive reduction by edge removal: drop each edge whose endpoints stay
/// connected without it.
pub fn reduction_by_removal(edges: &BTreeSet<(String, String)>) -> BTreeSet<(String, String)> {
    let mut kept = edges.clone();
    for e in edges {
        kept.remove(e);
        if !reach_up(&up_map(&kept), &e.0).contains(&e.1) {
            kept.insert(e.clone());
        }
    }
    kept
}

/// Instance extension of `expr`, by checking every individual against the
/// expression's definition.
pub fn instances_oracle(o: &Ontology, expr: &ClassExpr) -> BTreeSet<String> {
    let up = up_map(&subclass_edges(o));
    let types: BTreeMap<String, BTreeSet<String>> = o
        .individuals()
        .map(|i| (i.to_string(), walk_types(o, &up, i.as_str())))
        .collect();
    o.individuals()
        .filter(|i| satisfies(o, &types, i.as_str(), expr))
        .map(|i| i.to_string())
        .collect()
}

fn satisfies(o: &Ontology, types: &BTreeMap<String, BTreeSet<String>>, ind: &str, expr: &ClassExpr) -> bool {
    match expr {
        ClassExpr::Named(c) => types[ind].contains(c.as_str()),
        ClassExpr::And(parts) => parts.iter().all(|p| satisfies(o, types, ind, p)),
        ClassExpr::Some { prop, filler } => o
            .obj_facts()
            .iter()
            .any(|f| f.subject.as_str() == ind && f.prop == *prop && satisfies(o, types, f.object.as_str(), filler)),
        ClassExpr::ValueObj { prop, individual } => o
            .obj_facts()
            .iter()
            .any(|f| f.subject.as_str() == ind && f.prop == *prop && f.object == *individual),
        ClassExpr::ValueData { prop, value } => o
            .data_facts()
            .iter()
            .any(|f| f.subject.as_str() == ind && f.prop == *prop && f.value == *value),
    }
}

/// Random instance query over the ontology's vocabulary: conjunctions of
/// named classes and restrictions, nested up to `depth`.
pub fn gen_expr(rng: &mut Rng8, o: &Ontology, depth: usize) -> ClassExpr {
    let classes: Vec<&Ident> = o.classes().collect();
    let obj: Vec<&Ident> = o.object_properties().keys().collect();
    let inds: Vec<&Ident> = o.individuals().collect();
    let facts = o.data_facts();

    let choice = if depth == 0 { 0 } else { rng.gen_range(0..5) };
    match choice {
        1 => {
            let n = rng.gen_range(2..=3);
            ClassExpr::and((0..n).map(|_| gen_expr(rng, o, depth - 1)))
        }
        2 if !obj.is_empty() => ClassExpr::some((*obj.choose(rng).unwrap()).clone(), gen_expr(rng, o, depth - 1)),
        3 if !obj.is_empty() && !inds.is_empty() => ClassExpr::ValueObj {
            prop: (*obj.choose(rng).unwrap()).clone(),
            individual: (*inds.choose(rng).unwrap()).clone(),
        },
        4 if !facts.is_empty() => {
            let f = facts.choose(rng).unwrap();
            ClassExpr::ValueData {
                prop: f.prop.clone(),
                value: f.value.clone(),
            }
        }
        _ => ClassExpr::named((*classes.choose(rng).unwrap()).clone()),
    }
}

/// Sub/superclass answers computed straight from the definitions over
/// reachability. Each returns sorted names.
pub mod class_modes {
    use super::*;

    fn ancestors_refl(anc: &BTreeMap<String, BTreeSet<String>>, c: &str) -> BTreeSet<String> {
        let mut s = anc[c].clone();
        s.insert(c.to_string());
        s
    }

    /// Classes strictly below every named conjunct.
    pub fn subclasses(o: &Ontology, named: &[&str]) -> BTreeSet<String> {
        let anc = reachability_ancestors(o);
        anc.iter()
            .filter(|(d, a)| named.iter().all(|n| a.contains(*n) && d.as_str() != *n))
            .map(|(d, _)| d.clone())
            .collect()
    }

    pub fn superclasses(o: &Ontology, named: &[&str]) -> BTreeSet<String> {
        let anc = reachability_ancestors(o);
        let mut common: Option<BTreeSet<String>> = None;
        for n in named {
            let up = ancestors_refl(&anc, n);
            common = Some(match common {
                None => up,
                Some(c) => c.intersection(&up).cloned().collect(),
            });
        }
        let mut out = common.unwrap_or_default();
        for n in named {
            out.remove(*n);
        }
        out
    }

    pub fn direct_subclasses(o: &Ontology, named: &[&str]) -> BTreeSet<String> {
        let anc = reachability_ancestors(o);
        let all = subclasses(o, named);
        all.iter()
            .filter(|d| !all.iter().any(|e| e != *d && anc[d.as_str()].contains(e)))
            .cloned()
            .collect()
    }

    pub fn direct_superclasses(o: &Ontology, named: &[&str]) -> BTreeSet<String> {
        let anc = reachability_ancestors(o);
        let all = superclasses(o, named);
        all.iter()
            .filter(|s| !all.iter().any(|e| e != *s && anc[e.as_str()].contains(*s)))
            .cloned()
            .collect()
    }
}

/// A CSV table for `ingest_csv`, returned with the number of rows and the
/// number of non-empty mapped cells it contains.
pub fn gen_csv(rng: &mut Rng8, columns: &[&str], rows: usize) -> (String, usize, usize) {
    let mut text = String::from("id");
    for c in columns {
        text.push(',');
        text.push_str(c);
    }
    text.push('\n');
    let mut cells = 0;
    for r in 0..rows {
        text.push_str(&format!("row{r}"));
        for _ in columns {
            text.push(',');
            if rng.gen_bool(0.7) {
                cells += 1;
                text.push_str(&format!("\"v,\"\"{}\"\"\"", rng.gen_range(0..1000)));
            }
        }
        text.push('\n');
    }
    (text, rows, cells)
}
