//! The `oft` command line.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive
//! it in-process.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use oft_core::diagnostic::{count_errors, sort_diagnostics};
use oft_core::dlquery::{eval_query, parse_query, QueryMode};
use oft_core::exchange::{export_dot, ingest_csv, merge, parse_column_map};
use oft_core::model::canonical_located;
use oft_core::oft::serialize_oft;
use oft_core::{build_ontology, load_sources, Diagnostic, KnowledgeBase, Ontology};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIAGNOSTICS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Parser, Debug)]
#[command(name = "oft", version, about = "Check, query, export and merge OFT ontologies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse, build, reason and validate; print diagnostics and a summary.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Evaluate a class expression.
    Query {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short = 'q', long = "query")]
        query: String,
        #[arg(short = 'm', long = "mode", default_value = "instances", value_parser = parse_mode)]
        mode: QueryMode,
    },
    /// Print the class hierarchy as Graphviz DOT.
    ExportDot {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Draw the inferred hierarchy (transitive reduction).
        #[arg(long)]
        inferred: bool,
    },
    /// Print entity and assertion counts.
    Stats {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Merge two ontologies; the first wins on conflicts.
    Merge {
        a: PathBuf,
        b: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Add individuals from a CSV file and write the combined ontology.
    Ingest {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long = "class")]
        class: String,
        #[arg(long = "map", default_value = "")]
        map: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn parse_mode(s: &str) -> Result<QueryMode, String> {
    QueryMode::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = QueryMode::ALL.iter().map(|m| m.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Runs one invocation. `args` excludes the program name; a path of `-`
/// reads `stdin` (or writes stdout, for `-o`).
pub fn run<S: AsRef<str>>(args: &[S], stdin: &str) -> Output {
    let argv = std::iter::once("oft").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stderr: text,
                    code: EXIT_USAGE,
                    ..Output::default()
                }
            } else {
                Output {
                    stdout: text,
                    code: EXIT_OK,
                    ..Output::default()
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        out: Output::default(),
    };
    let result = match cli.command {
        Command::Check { files } => io.check(&files),
        Command::Query { files, query, mode } => io.query(&files, &query, mode),
        Command::ExportDot { files, inferred } => io.export_dot(&files, inferred),
        Command::Stats { files } => io.stats(&files),
        Command::Merge { a, b, output } => io.merge(&a, &b, &output),
        Command::Ingest {
            files,
            csv,
            class,
            map,
            output,
        } => io.ingest(&files, &csv, &class, &map, &output),
    };
    io.out.code = match result {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            io.out.stderr.push_str(&format!("error: {msg}\n"));
            EXIT_USAGE
        }
    };
    io.out
}

/// An IO or usage failure; exits with code 2.
struct Fatal(String);

struct Io<'a> {
    stdin: &'a str,
    out: Output,
}

impl Io<'_> {
    fn read(&self, path: &PathBuf) -> Result<(String, String), Fatal> {
        let name = path.display().to_string();
        if name == "-" {
            return Ok(("<stdin>".to_string(), self.stdin.to_string()));
        }
        fs::read_to_string(path)
            .map(|text| (name.clone(), text))
            .map_err(|e| Fatal(format!("cannot read {name}: {e}")))
    }

    fn write(&mut self, path: &PathBuf, text: &str) -> Result<(), Fatal> {
        if path.as_os_str() == "-" {
            self.out.stdout.push_str(text);
            return Ok(());
        }
        fs::write(path, text).map_err(|e| Fatal(format!("cannot write {}: {e}", path.display())))
    }

    fn report(&mut self, diags: &[Diagnostic]) {
        for d in diags {
            self.out.stderr.push_str(&d.to_string());
            self.out.stderr.push('\n');
        }
    }

    /// Loads files as one axiom stream. Returns `None` after reporting when
    /// any error was found.
    fn load(&mut self, files: &[PathBuf]) -> Result<Option<Ontology>, Fatal> {
        let texts = files.iter().map(|f| self.read(f)).collect::<Result<Vec<_>, _>>()?;
        let (o, diags) = load_sources(texts.iter().map(|(n, t)| (n.as_str(), t.as_str())));
        self.report(&diags);
        Ok(o.filter(|_| count_errors(&diags) == 0))
    }

    fn load_kb(&mut self, files: &[PathBuf]) -> Result<Option<KnowledgeBase>, Fatal> {
        let Some(o) = self.load(files)? else { return Ok(None) };
        match KnowledgeBase::new(o) {
            Ok(kb) => Ok(Some(kb)),
            Err(diags) => {
                self.report(&diags);
                Ok(None)
            }
        }
    }

    fn check(&mut self, files: &[PathBuf]) -> Result<i32, Fatal> {
        let texts = files.iter().map(|f| self.read(f)).collect::<Result<Vec<_>, _>>()?;
        let (o, mut diags) = load_sources(texts.iter().map(|(n, t)| (n.as_str(), t.as_str())));
        if let Some(o) = o {
            match KnowledgeBase::new(o) {
                Ok(kb) => diags.extend(kb.validate().diagnostics),
                Err(cycles) => diags.extend(cycles),
            }
        }
        sort_diagnostics(&mut diags);
        self.report(&diags);
        let errors = count_errors(&diags);
        let warnings = diags.len() - errors;
        self.out.stdout.push_str(&format!(
            "{} {}, {} {}\n",
            errors,
            plural(errors, "error"),
            warnings,
            plural(warnings, "warning")
        ));
        Ok(if errors == 0 { EXIT_OK } else { EXIT_DIAGNOSTICS })
    }

    fn query(&mut self, files: &[PathBuf], text: &str, mode: QueryMode) -> Result<i32, Fatal> {
        let Some(kb) = self.load_kb(files)? else {
            return Ok(EXIT_DIAGNOSTICS);
        };
        let result = parse_query(text).and_then(|e| eval_query(&kb.ontology, &kb.closure, &kb.realization, &e, mode));
        match result {
            Ok(names) => {
                for n in names {
                    self.out.stdout.push_str(n.as_str());
                    self.out.stdout.push('\n');
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                self.report(&[Diagnostic::error(e.code(), "<query>", 1, e.to_string())]);
                Ok(EXIT_DIAGNOSTICS)
            }
        }
    }

    fn export_dot(&mut self, files: &[PathBuf], inferred: bool) -> Result<i32, Fatal> {
        let Some(kb) = self.load_kb(files)? else {
            return Ok(EXIT_DIAGNOSTICS);
        };
        self.out
            .stdout
            .push_str(&export_dot(&kb.ontology, &kb.closure, inferred));
        Ok(EXIT_OK)
    }

    fn stats(&mut self, files: &[PathBuf]) -> Result<i32, Fatal> {
        let Some(o) = self.load(files)? else {
            return Ok(EXIT_DIAGNOSTICS);
        };
        let rows = [
            ("classes", o.classes().filter(|c| !c.is_thing()).count()),
            ("object_properties", o.object_properties().len()),
            ("data_properties", o.data_properties().len()),
            ("individuals", o.individuals().count()),
            ("assertions", o.obj_facts().len() + o.data_facts().len()),
        ];
        for (k, v) in rows {
            self.out.stdout.push_str(&format!("{k}\t{v}\n"));
        }
        Ok(EXIT_OK)
    }

    fn merge(&mut self, a: &PathBuf, b: &PathBuf, output: &PathBuf) -> Result<i32, Fatal> {
        let oa = self.load(std::slice::from_ref(a))?;
        let ob = self.load(std::slice::from_ref(b))?;
        let (Some(oa), Some(ob)) = (oa, ob) else {
            return Ok(EXIT_DIAGNOSTICS);
        };
        let name = oa.name().to_string();
        match merge(&oa, &ob, &name) {
            Ok(report) => {
                self.report(&report.conflicts);
                self.write(output, &serialize_oft(&report.merged))?;
                Ok(if report.conflicts.is_empty() {
                    EXIT_OK
                } else {
                    EXIT_DIAGNOSTICS
                })
            }
            Err(diags) => {
                self.report(&diags);
                Ok(EXIT_DIAGNOSTICS)
            }
        }
    }

    fn ingest(
        &mut self,
        files: &[PathBuf],
        csv: &PathBuf,
        class: &str,
        map: &str,
        output: &PathBuf,
    ) -> Result<i32, Fatal> {
        let columns = parse_column_map(map).map_err(Fatal)?;
        let Some(o) = self.load(files)? else {
            return Ok(EXIT_DIAGNOSTICS);
        };
        let (csv_name, csv_text) = self.read(csv)?;
        let generated = match ingest_csv(&o, &csv_text, &csv_name, class, &columns) {
            Ok(g) => g,
            Err(diags) => {
                self.report(&diags);
                return Ok(EXIT_DIAGNOSTICS);
            }
        };
        let mut axioms = canonical_located(&o);
        axioms.extend(generated);
        match build_ontology(o.name(), axioms) {
            Ok(combined) => {
                self.write(output, &serialize_oft(&combined))?;
                Ok(EXIT_OK)
            }
            Err(diags) => {
                self.report(&diags);
                Ok(EXIT_DIAGNOSTICS)
            }
        }
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        word.to_string()
    } else {
        format!("{word}s")
    }
}
