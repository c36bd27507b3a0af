use oft_core::diagnostic::codes;
use oft_core::exchange::ingest_csv;
use oft_core::model::canonical_located;
use oft_core::{build_ontology, load_sources, Axiom, KnowledgeBase, Ontology};
use oft_testkit::{gen_csv, rng};

fn base() -> Ontology {
    let (o, d) = load_sources([(
        "t.oft",
        "class Species\ndataprop a type string\ndataprop b type string\ndataprop c type string\n",
    )]);
    assert!(d.is_empty());
    o.unwrap()
}

fn map(cols: &[&str]) -> Vec<(String, String)> {
    cols.iter().map(|c| (c.to_string(), c.to_string())).collect()
}

#[test]
fn counts_match_generated_tables() {
    let mut r = rng(61);
    let o = base();
    for rows in [0, 1, 7, 40] {
        let (text, n_rows, n_cells) = gen_csv(&mut r, &["a", "b", "c"], rows);
        let out = ingest_csv(&o, &text, "g.csv", "Species", &map(&["a", "b", "c"])).unwrap();
        let decls = out
            .iter()
            .filter(|a| matches!(a.axiom, Axiom::IndividualDecl { .. }))
            .count();
        let attrs = out
            .iter()
            .filter(|a| matches!(a.axiom, Axiom::DataAssertion { .. }))
            .count();
        assert_eq!((decls, attrs), (n_rows, n_cells));

        let mut axioms = canonical_located(&o);
        axioms.extend(out);
        let kb = KnowledgeBase::new(build_ontology("g", axioms).unwrap()).unwrap();
        assert_eq!(kb.realization.members_of("Species").len(), n_rows);
    }
}

#[test]
fn corpus_row_with_disallowed_name_is_caught_by_validation() {
    let o = oft_core::corpus::load_corpus();
    let out = ingest_csv(
        &o,
        "id,name\nKhalas,golden dates\n",
        "rows.csv",
        "Species",
        &[("name".into(), "has_common_name".into())],
    )
    .unwrap();
    let mut axioms = canonical_located(&o);
    axioms.extend(out);
    let kb = KnowledgeBase::new(build_ontology("x", axioms).unwrap()).unwrap();
    let report = kb.validate();
    let found: Vec<_> = report
        .diagnostics
        .iter()
        .map(|d| (d.file.as_str(), d.line, d.code))
        .collect();
    assert_eq!(found, [("rows.csv", 2, codes::E_ALLOWED_VALUE)]);
}
