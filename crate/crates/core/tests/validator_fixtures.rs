use oft_core::corpus::{self, INSTANCE_TEXT, MAIN_TEXT};
use oft_core::diagnostic::codes;
use oft_core::{load_sources, KnowledgeBase};

/// Validates the corpus plus one extra file; returns `(file, line, code)`.
fn check_with(extra: &str) -> Vec<(String, usize, &'static str)> {
    let (o, d) = load_sources([
        (corpus::MAIN_FILE, MAIN_TEXT),
        (corpus::INSTANCE_FILE, INSTANCE_TEXT),
        ("seed.oft", extra),
    ]);
    assert!(d.is_empty(), "{d:?}");
    let kb = KnowledgeBase::new(o.unwrap()).unwrap();
    kb.validate()
        .diagnostics
        .into_iter()
        .map(|d| (d.file, d.line, d.code))
        .collect()
}

fn one(file: &str, line: usize, code: &'static str) -> Vec<(String, usize, &'static str)> {
    vec![(file.to_string(), line, code)]
}

#[test]
fn wrong_value_type_for_date_of_origin() {
    assert_eq!(
        check_with("# seeded\nattr Barhee has_date_of_origin \"ancient\"\n"),
        one("seed.oft", 2, codes::E_TYPE_MISMATCH)
    );
}

#[test]
fn common_name_outside_allowed_set() {
    assert_eq!(
        check_with("individual Khalas type Species\nattr Khalas has_common_name \"golden dates\"\n"),
        one("seed.oft", 2, codes::E_ALLOWED_VALUE)
    );
}

#[test]
fn second_value_for_single_cardinality() {
    assert_eq!(
        check_with("\n\nattr Barhee has_common_name \"visitors dates\"\n"),
        one("seed.oft", 3, codes::E_CARD_SINGLE)
    );
}

#[test]
fn domain_and_range_violations() {
    assert_eq!(
        check_with("attr Calcium has_country_of_origin \"Oman\"\n"),
        one("seed.oft", 1, codes::E_DOMAIN)
    );
    assert_eq!(
        check_with("rel Phoenix_dactylifera has_benefits Iron\n"),
        one("seed.oft", 1, codes::E_RANGE)
    );
}

#[test]
fn removing_an_assertion_never_adds_errors() {
    let extra = "attr Barhee has_common_name \"visitors dates\"\nattr Barhee has_date_of_origin 1800\n";
    let full = check_with(extra);
    for skip in 0..2 {
        let reduced: String = extra
            .lines()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, l)| format!("{l}\n"))
            .collect();
        let fewer = check_with(&reduced);
        assert!(fewer.len() <= full.len());
    }
}
