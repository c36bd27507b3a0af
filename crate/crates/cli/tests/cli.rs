use std::path::PathBuf;
use std::process::Command;

use oft_cli::{run, Output, EXIT_DIAGNOSTICS, EXIT_OK, EXIT_USAGE};
use oft_core::corpus::CLASS_COUNT;

fn corpus(file: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", file]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn corpus_files() -> Vec<String> {
    vec![corpus("date_fruit.oft"), corpus("date_fruit_instances.oft")]
}

fn oft(args: &[&str]) -> Output {
    run(args, "")
}

fn with_corpus(cmd: &str, rest: &[&str]) -> Output {
    let mut args = vec![cmd.to_string()];
    args.extend(corpus_files());
    args.extend(rest.iter().map(|s| s.to_string()));
    run(&args, "")
}

#[test]
fn check_corpus() {
    let out = with_corpus("check", &[]);
    assert_eq!(
        (out.code, out.stdout.as_str(), out.stderr.as_str()),
        (EXIT_OK, "0 errors, 0 warnings\n", "")
    );
}

#[test]
fn check_empty_input() {
    let out = run(&["check", "-"], "");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "0 errors, 0 warnings\n"));
}

#[test]
fn check_reports_sorted_diagnostics() {
    let src = "class A\nclass B sub Nope\nindividual x type A\ndataprop d domain A type number card single\nattr x d \"q\"\nattr x d 3\n";
    let out = run(&["check", "-"], src);
    assert_eq!(out.code, EXIT_DIAGNOSTICS);
    assert_eq!(out.stdout, "1 error, 0 warnings\n");
    assert!(
        out.stderr.starts_with("<stdin>:2: error E_UNKNOWN_REF "),
        "{}",
        out.stderr
    );

    let src = "class A\nindividual x type A\ndataprop d domain A type number card single\nattr x d \"q\"\nattr x d 3\n";
    let out = run(&["check", "-"], src);
    assert_eq!(out.stdout, "2 errors, 0 warnings\n");
    let lines: Vec<&str> = out.stderr.lines().collect();
    assert!(lines[0].starts_with("<stdin>:4: error E_TYPE_MISMATCH"));
    assert!(lines[1].starts_with("<stdin>:5: error E_CARD_SINGLE"));

    let out = run(
        &["check", "-"],
        "class A\ndataprop d domain A type string\nindividual x type A\n",
    );
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "0 errors, 1 warning\n"));
    assert!(out.stderr.starts_with("<stdin>:3: warning E_CARD_MULTIPLE"));
}

#[test]
fn check_reports_cycles() {
    let out = run(&["check", "-"], "class A sub B\nclass B sub A\n");
    assert_eq!(out.code, EXIT_DIAGNOSTICS);
    assert!(out.stderr.contains("E_CYCLE"));
}

#[test]
fn query_developing_stages() {
    let out = with_corpus("query", &["-q", "Developing_stages", "-m", "subclasses"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "Hababauk\nKhalaal\nKimri\nRotab\nTamr\n");
}

#[test]
fn query_default_mode_is_instances() {
    let out = with_corpus("query", &["-q", "has_composition some Minerals"]);
    assert_eq!(out.stdout, "Phoenix_dactylifera\n");
}

#[test]
fn query_errors() {
    let out = with_corpus("query", &["-q", "Dates and and"]);
    assert_eq!(out.code, EXIT_DIAGNOSTICS);
    assert!(
        out.stderr.starts_with("<query>:1: error E_SYNTAX column 11"),
        "{}",
        out.stderr
    );
    let out = with_corpus("query", &["-q", "has_benefits some Health", "-m", "subclasses"]);
    assert!(out.stderr.contains("E_UNSUPPORTED_MODE"));
    let out = with_corpus("query", &["-q", "Dates", "-m", "equivalent"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn stats_corpus() {
    let out = with_corpus("stats", &[]);
    assert_eq!(
        out.stdout,
        format!("classes\t{CLASS_COUNT}\nobject_properties\t4\ndata_properties\t3\nindividuals\t18\nassertions\t17\n")
    );
}

#[test]
fn export_dot_is_deterministic() {
    let a = with_corpus("export-dot", &[]);
    let b = with_corpus("export-dot", &[]);
    assert_eq!(a, b);
    assert!(a.stdout.contains("  \"Developing_stages\" -> \"Kimri\";\n"));
    let inferred = with_corpus("export-dot", &["--inferred"]);
    assert_ne!(inferred.stdout, a.stdout);
}

#[test]
fn usage_and_io_errors() {
    assert_eq!(oft(&[]).code, EXIT_USAGE);
    assert_eq!(oft(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(oft(&["check", "--nope", "x"]).code, EXIT_USAGE);
    let out = oft(&["check", "/definitely/not/here.oft"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("cannot read"));
    assert_eq!(oft(&["--help"]).code, EXIT_OK);
}

#[test]
fn merge_writes_output_and_reports_conflicts() {
    let dir = tempfile::tempdir().unwrap();
    let b = dir.path().join("b.oft");
    let out_path = dir.path().join("m.oft");
    std::fs::write(&b, "class Species\nclass Medjool sub Species\n").unwrap();
    let main = corpus("date_fruit.oft");
    let out = oft(&["merge", &main, b.to_str().unwrap(), "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let merged = std::fs::read_to_string(&out_path).unwrap();
    assert!(merged.starts_with("ontology date_fruit\n"));
    assert!(merged.contains("class Medjool sub Species\n"));
    let recheck = oft(&["check", out_path.to_str().unwrap()]);
    assert_eq!(recheck.code, EXIT_OK);

    std::fs::write(
        &b,
        "class Species\ndataprop has_date_of_origin domain Species type string card single\n",
    )
    .unwrap();
    let out = oft(&["merge", &main, b.to_str().unwrap(), "-o", "-"]);
    assert_eq!(out.code, EXIT_DIAGNOSTICS);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stderr.contains(":2: error E_FACET_CLASH"));
    assert!(out
        .stdout
        .contains("dataprop has_date_of_origin domain Species type number card single\n"));
}

#[test]
fn ingest_barhee_style_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    std::fs::write(&csv, "id,common_name,year\nKhalas,visitors dates,1990\n").unwrap();
    let out = with_corpus(
        "ingest",
        &[
            "--csv",
            csv.to_str().unwrap(),
            "--class",
            "Species",
            "--map",
            "common_name=has_common_name,year=has_date_of_origin",
            "-o",
            "-",
        ],
    );
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("individual Khalas type Species\n"));
    assert!(out.stdout.contains("attr Khalas has_common_name \"visitors dates\"\n"));
    assert!(out.stdout.contains("attr Khalas has_date_of_origin 1990\n"));

    std::fs::write(&csv, "id,year\nBarhee,1990\n").unwrap();
    let out = with_corpus(
        "ingest",
        &[
            "--csv",
            csv.to_str().unwrap(),
            "--class",
            "Species",
            "--map",
            "year=has_date_of_origin",
            "-o",
            "-",
        ],
    );
    assert_eq!(out.code, EXIT_DIAGNOSTICS);
    assert!(out.stderr.contains(":2: error E_DUP_INDIVIDUAL"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_oft");
    let status = Command::new(bin).arg("check").args(corpus_files()).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&status.stdout), "0 errors, 0 warnings\n");
    let status = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
