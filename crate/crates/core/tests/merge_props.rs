use std::collections::BTreeSet;

use oft_core::corpus::load_corpus;
use oft_core::diagnostic::codes;
use oft_core::exchange::merge;
use oft_core::oft::serialize_oft;
use oft_core::{canonical_axioms, load_sources, Axiom, KnowledgeBase};
use oft_testkit::{gen_pair, rng, GenConfig};

fn set(o: &oft_core::Ontology) -> BTreeSet<Axiom> {
    canonical_axioms(o).into_iter().collect()
}

#[test]
fn corpus_self_merge_is_identity() {
    let o = load_corpus();
    let r = merge(&o, &o, "date_fruit").unwrap();
    assert!(r.conflicts.is_empty());
    assert_eq!(r.added, 0);
    assert_eq!(serialize_oft(&r.merged), serialize_oft(&o));
}

#[test]
fn random_pairs_commute_and_are_idempotent() {
    let mut rg = rng(41);
    for _ in 0..50 {
        let (a, b) = gen_pair(&mut rg, &GenConfig::small());
        let ab = merge(&a, &b, "m").unwrap();
        let ba = merge(&b, &a, "m").unwrap();
        assert!(ab.conflicts.is_empty(), "{:?}", ab.conflicts);
        assert!(ba.conflicts.is_empty());
        assert_eq!(canonical_axioms(&ab.merged), canonical_axioms(&ba.merged));

        let union: BTreeSet<Axiom> = set(&a).union(&set(&b)).cloned().collect();
        assert_eq!(set(&ab.merged), union);
        assert_eq!(ab.added, set(&b).difference(&set(&a)).count());

        let aa = merge(&a, &a, "m").unwrap();
        assert_eq!(set(&aa.merged), set(&a));
        let again = merge(&ab.merged, &b, "m").unwrap();
        assert_eq!(again.added, 0);
    }
}

#[test]
fn medjool_adds_declaration_and_edge() {
    let (b, d) = load_sources([("b.oft", "class Species\nclass Medjool sub Species\n")]);
    assert!(d.is_empty());
    let r = merge(&load_corpus(), &b.unwrap(), "m").unwrap();
    assert_eq!(r.added, 2);
    assert!(r.conflicts.is_empty());
    let kb = KnowledgeBase::new(r.merged).unwrap();
    assert!(kb.closure.subsumed_by("Medjool", "Date_fruit"));
    assert!(kb.validate().ok);
}

#[test]
fn date_of_origin_facet_clash_keeps_number() {
    let (b, d) = load_sources([(
        "b.oft",
        "class Species\ndataprop has_date_of_origin domain Species type string card single\n",
    )]);
    assert!(d.is_empty());
    let r = merge(&load_corpus(), &b.unwrap(), "m").unwrap();
    assert_eq!(r.conflicts.len(), 1);
    assert_eq!(r.conflicts[0].code, codes::E_FACET_CLASH);
    assert_eq!((r.conflicts[0].file.as_str(), r.conflicts[0].line), ("b.oft", 2));
    assert_eq!(
        r.merged.data_properties()["has_date_of_origin"].facet.value_type(),
        oft_core::ValueType::Number
    );
}
