use oft_core::oft::{parse_oft, serialize_oft};
use oft_core::{build_ontology, canonical_axioms, Ontology};
use oft_testkit::{gen_ontology, rng, GenConfig};
use proptest::prelude::*;

fn reparse(o: &Ontology) -> Ontology {
    let text = serialize_oft(o);
    let parsed = parse_oft(&text, "rt.oft");
    assert!(parsed.is_clean(), "{:?}\n{text}", parsed.diagnostics);
    build_ontology(&parsed.ontology_name, parsed.axioms).unwrap()
}

#[test]
fn random_ontologies_round_trip() {
    let mut r = rng(21);
    for _ in 0..100 {
        let o = gen_ontology(&mut r, &GenConfig::small());
        let o2 = reparse(&o);
        assert_eq!(canonical_axioms(&o2), canonical_axioms(&o));
        assert_eq!(serialize_oft(&o2), serialize_oft(&o));
    }
}

#[test]
fn crlf_and_bom_are_accepted() {
    let text = "\u{feff}ontology t\r\nclass A\r\nclass B sub A\r\n";
    let parsed = parse_oft(text, "w.oft");
    assert!(parsed.is_clean());
    let o = build_ontology(&parsed.ontology_name, parsed.axioms).unwrap();
    assert_eq!(serialize_oft(&o), "ontology t\nclass A\nclass B\nclass B sub A\n");
}

const WORDS: &[&str] = &[
    "ontology",
    "class",
    "sub",
    "objprop",
    "dataprop",
    "domain",
    "range",
    "type",
    "allowed",
    "card",
    "single",
    "multiple",
    "individual",
    "rel",
    "attr",
    "string",
    "number",
    "A",
    "B",
    "p",
    ",",
    "\"x\"",
    "\"",
    "1.5",
    "#",
    "9z",
];

fn line() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(WORDS), 0..8).prop_map(|ws| ws.join(" "))
}

proptest! {
    #[test]
    fn parser_never_panics_on_arbitrary_text(s in "\\PC{0,200}") {
        let r = parse_oft(&s, "f.oft");
        for d in &r.diagnostics {
            prop_assert!(d.line >= 1);
        }
    }

    #[test]
    fn keyword_soup_either_parses_or_reports(lines in prop::collection::vec(line(), 0..12)) {
        let text = lines.join("\n");
        let r = parse_oft(&text, "f.oft");
        let bad: usize = r.diagnostics.len();
        prop_assert!(r.axioms.len() + bad <= lines.len().max(1) + lines.len());
        for d in &r.diagnostics {
            prop_assert!(d.line >= 1 && d.line <= lines.len().max(1));
        }
    }
}
