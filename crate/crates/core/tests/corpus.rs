use std::collections::BTreeSet;

use oft_core::corpus::{self, load_corpus, query_suite, CLASS_COUNT, MAIN_TEXT};
use oft_core::dlquery::run_query;
use oft_core::oft::{parse_oft, serialize_oft};
use oft_core::{applicable_properties, canonical_axioms, KnowledgeBase};
use oft_testkit::path_walk_members;

pub const REQUIRED_CLASSES: &[&str] = &[
    "Date_fruit",
    "Dates",
    "Products_of_dates",
    "Species",
    "Attributes",
    "Color",
    "Shape",
    "Size",
    "Taste",
    "Texture",
    "Benefits",
    "Food",
    "Health",
    "Chain_of_operations",
    "Transport",
    "Additional_treatments",
    "Coating",
    "Dehydration",
    "Glazing",
    "Hydration",
    "Maturation",
    "Pitting",
    "Packing",
    "Sorting_and_cleaning",
    "Storage",
    "Fumigation",
    "Heat_treatment",
    "Irradiation",
    "Refrigeration",
    "Developing_stages",
    "Hababauk",
    "Khalaal",
    "Kimri",
    "Rotab",
    "Tamr",
    "Quality_profile",
    "Defects",
    "Blemishes",
    "Broken_skin",
    "Deformity",
    "Discoloration",
    "Shrivel",
    "Sunburn",
    "Other_particles",
    "Foreign_matter",
    "Insect_infestation",
    "Pesticide_residue",
    "Composition",
    "Enzymes",
    "Vitamins",
    "Minerals",
    "Crude_fibers",
    "Moisture",
    "Proteins",
    "Fats",
    "Sugars",
    "Chemical_substances",
    "Organic_acids",
    "Polyphenols",
    "Date_condiments",
    "Date_deserts",
    "Date_paste",
    "Bakery_products",
    "Mixture",
    "Pure_date_paste",
    "Date_preserves",
    "Whole_pitted_dates",
];

fn kb() -> KnowledgeBase {
    KnowledgeBase::new(load_corpus()).unwrap()
}

#[test]
fn every_listed_class_is_declared() {
    let o = load_corpus();
    let missing: Vec<_> = REQUIRED_CLASSES
        .iter()
        .filter(|c| o.kind_of(c) != Some(oft_core::EntityKind::Class))
        .collect();
    assert!(missing.is_empty(), "missing classes: {missing:?}");
}

#[test]
fn class_count_matches_line_count() {
    let counted = MAIN_TEXT
        .lines()
        .filter(|l| l.trim_start().starts_with("class "))
        .count();
    assert_eq!(counted, CLASS_COUNT);
    assert_eq!(load_corpus().classes().filter(|c| !c.is_thing()).count(), CLASS_COUNT);
    let unique: BTreeSet<_> = REQUIRED_CLASSES.iter().collect();
    assert_eq!(unique.len(), REQUIRED_CLASSES.len());
    assert_eq!(unique.len(), CLASS_COUNT);
}

#[test]
fn main_file_alone_is_clean() {
    let parsed = parse_oft(MAIN_TEXT, corpus::MAIN_FILE);
    assert!(parsed.is_clean(), "{:?}", parsed.diagnostics);
}

#[test]
fn corpus_validates_without_diagnostics() {
    let report = kb().validate();
    assert!(report.ok);
    assert!(report.diagnostics.is_empty(), "{:?}", report.diagnostics);
    assert_eq!(report.checked_assertions, 17);
}

#[test]
fn property_vocabulary() {
    let o = load_corpus();
    let obj: Vec<_> = o.object_properties().keys().map(|k| k.as_str()).collect();
    assert_eq!(
        obj,
        ["has_benefits", "has_composition", "has_deciding_factor", "has_features"]
    );
    let data: Vec<_> = o.data_properties().keys().map(|k| k.as_str()).collect();
    assert_eq!(data, ["has_common_name", "has_country_of_origin", "has_date_of_origin"]);
    let common = &o.data_properties()["has_common_name"].facet;
    assert_eq!(common.cardinality(), oft_core::Cardinality::Single);
    let allowed: Vec<_> = common.allowed().unwrap().iter().map(|l| l.lexical()).collect();
    assert_eq!(allowed, ["honey balls", "visitors dates"]);
    assert_eq!(
        o.data_properties()["has_date_of_origin"].facet.value_type(),
        oft_core::ValueType::Number
    );
}

#[test]
fn barhee_is_a_species_called_honey_balls() {
    let kb = kb();
    assert!(kb.realization.is_member("Barhee", "Species"));
    let names: Vec<_> = run_query(
        &kb,
        "has_common_name value \"honey balls\"",
        oft_core::dlquery::QueryMode::Instances,
    )
    .unwrap()
    .into_iter()
    .map(|i| i.to_string())
    .collect();
    assert_eq!(names, ["Barhee"]);
}

#[test]
fn suite_expectations_hold() {
    let kb = kb();
    for q in query_suite() {
        let got: Vec<String> = run_query(&kb, &q.text, q.mode)
            .unwrap_or_else(|e| panic!("line {}: {e}", q.line))
            .into_iter()
            .map(|i| i.to_string())
            .collect();
        assert_eq!(
            got,
            q.expected,
            "queries.tsv line {}: {} {}",
            q.line,
            q.mode.name(),
            q.text
        );
    }
}

#[test]
fn every_competency_question_has_a_nonempty_answer() {
    let questions = [
        "What are the attributes of date fruit?",
        "What are the benefits of date fruit?",
        "What are the major operations to prepare dates?",
        "What are the developing stages of dates?",
        "How to check the quality of dates?",
        "What are the different products of dates?",
        "What are the compositions of a date fruit?",
    ];
    let suite = query_suite();
    for q in questions {
        assert!(
            suite.iter().any(|s| s.question == q && !s.expected.is_empty()),
            "no non-empty query for {q:?}"
        );
    }
}

#[test]
fn loading_is_deterministic() {
    let a = serialize_oft(&load_corpus());
    let b = serialize_oft(&load_corpus());
    assert_eq!(a, b);
}

#[test]
fn round_trip() {
    let o = load_corpus();
    let text = serialize_oft(&o);
    let parsed = parse_oft(&text, "rt.oft");
    assert!(parsed.is_clean(), "{:?}", parsed.diagnostics);
    assert_eq!(parsed.ontology_name, "date_fruit");
    let o2 = oft_core::build_ontology(&parsed.ontology_name, parsed.axioms).unwrap();
    assert_eq!(canonical_axioms(&o2), canonical_axioms(&o));
}

#[test]
fn membership_matches_path_walk() {
    let kb = kb();
    let oracle = path_walk_members(&kb.ontology);
    for (class, members) in oracle {
        let got: BTreeSet<String> = kb
            .realization
            .members_of(&class)
            .iter()
            .map(|i| i.to_string())
            .collect();
        assert_eq!(got, members, "members of {class}");
    }
}

#[test]
fn properties_are_inherited_downwards() {
    let kb = kb();
    let classes: Vec<_> = kb.ontology.classes().cloned().collect();
    for b in &classes {
        let pb = applicable_properties(&kb.ontology, &kb.closure, b.as_str()).unwrap();
        for a in kb.closure.ancestors(b.as_str()) {
            let pa = applicable_properties(&kb.ontology, &kb.closure, a.as_str()).unwrap();
            assert!(pb.is_superset(&pa), "{b} lacks some of {a}'s properties");
        }
    }
    let kimri = applicable_properties(&kb.ontology, &kb.closure, "Kimri").unwrap();
    assert!(kimri.iter().any(|p| p.as_str() == "has_features"));
    assert!(kimri.iter().any(|p| p.as_str() == "has_composition"));
    assert!(!kimri.iter().any(|p| p.as_str() == "has_common_name"));
}
