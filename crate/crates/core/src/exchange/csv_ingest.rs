//! Individuals from tabular extracts.
//!
//! Dialect: comma separated, double-quote quoting with `""` as the escaped
//! quote, one record per line. The header row must contain an `id` column;
//! its cells name the new individuals.

use std::collections::BTreeSet;

use csv::{ReaderBuilder, StringRecord};

use crate::diagnostic::{codes, sort_diagnostics, Diagnostic};
use crate::literal::Literal;
use crate::model::{is_ident, Axiom, EntityKind, FacetSpec, Ident, LocatedAxiom, Ontology, SourceLoc};

pub const ID_COLUMN: &str = "id";

/// Turns CSV rows into `IndividualDecl(id, [target_class])` plus one
/// `DataAssertion` per non-empty mapped cell. Cells are read according to
/// each property's declared value type.
///
/// `column_map` pairs a CSV header with a data property name. All problems
/// are collected before returning.
pub fn ingest_csv(
    o: &Ontology,
    csv_text: &str,
    source_name: &str,
    target_class: &str,
    column_map: &[(String, String)],
) -> Result<Vec<LocatedAxiom>, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let err = |code, line, msg: String| Diagnostic::error(code, source_name, line, msg);

    let target = match (Ident::new(target_class), o.kind_of(target_class)) {
        (Ok(id), Some(EntityKind::Class)) => Some(id),
        _ => {
            diags.push(err(
                codes::E_UNKNOWN_REF,
                1,
                format!("target class `{target_class}` is not a declared class"),
            ));
            None
        }
    };

    let mut props: Vec<(&str, Ident, &FacetSpec)> = Vec::new();
    for (header, prop) in column_map {
        match o.data_properties().get_key_value(prop.as_str()) {
            Some((name, decl)) => props.push((header, name.clone(), &decl.facet)),
            None => diags.push(err(
                codes::E_UNKNOWN_REF,
                1,
                format!("column `{header}` maps to `{prop}`, which is not a declared data property"),
            )),
        }
    }

    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(false)
        .from_reader(csv_text.as_bytes());
    let mut records = reader.records();

    let header: StringRecord = match records.next() {
        Some(Ok(h)) => h,
        Some(Err(e)) => {
            diags.push(err(codes::E_CSV_SYNTAX, error_line(&e), e.to_string()));
            return Err(diags);
        }
        None => {
            diags.push(err(codes::E_CSV_HEADER, 1, "missing header row".to_string()));
            return Err(diags);
        }
    };
    let header_line = header.position().map_or(1, |p| p.line() as usize);
    let column = |name: &str| header.iter().position(|h| h == name);

    let id_col = column(ID_COLUMN);
    if id_col.is_none() {
        diags.push(err(
            codes::E_CSV_HEADER,
            header_line,
            format!("header has no `{ID_COLUMN}` column"),
        ));
    }
    let mut mapped = Vec::new();
    for (h, prop, facet) in &props {
        match column(h) {
            Some(idx) => mapped.push((idx, prop, *facet)),
            None => diags.push(err(
                codes::E_CSV_HEADER,
                header_line,
                format!("mapped column `{h}` is not in the header"),
            )),
        }
    }
    let (Some(id_col), Some(target)) = (id_col, target) else {
        sort_diagnostics(&mut diags);
        return Err(diags);
    };

    let mut out = Vec::new();
    let mut fresh: BTreeSet<String> = BTreeSet::new();
    for record in records {
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                diags.push(err(codes::E_CSV_SYNTAX, error_line(&e), e.to_string()));
                continue;
            }
        };
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().any(|cell| cell.contains(['\n', '\r'])) {
            diags.push(err(
                codes::E_CSV_SYNTAX,
                line,
                "quoted cells may not span lines".to_string(),
            ));
            continue;
        }
        let loc = SourceLoc::new(source_name, line);

        let raw_id = &record[id_col];
        if !is_ident(raw_id) {
            diags.push(err(
                codes::E_SYNTAX,
                line,
                format!("row id `{raw_id}` is not a valid identifier"),
            ));
            continue;
        }
        if o.kind_of(raw_id).is_some() || !fresh.insert(raw_id.to_string()) {
            diags.push(err(
                codes::E_DUP_INDIVIDUAL,
                line,
                format!("`{raw_id}` is already declared"),
            ));
            continue;
        }
        let id = Ident::new(raw_id).expect("checked by is_ident");
        out.push(LocatedAxiom::new(
            Axiom::IndividualDecl {
                individual: id.clone(),
                types: vec![target.clone()],
            },
            loc.clone(),
        ));
        for (idx, prop, facet) in &mapped {
            let cell = &record[*idx];
            if cell.is_empty() {
                continue;
            }
            match Literal::parse_as(facet.value_type(), cell) {
                Ok(value) => out.push(LocatedAxiom::new(
                    Axiom::DataAssertion {
                        subject: id.clone(),
                        prop: (*prop).clone(),
                        value,
                    },
                    loc.clone(),
                )),
                Err(e) => diags.push(err(codes::E_TYPE_MISMATCH, line, format!("column for `{prop}`: {e}"))),
            }
        }
    }

    if diags.is_empty() {
        Ok(out)
    } else {
        sort_diagnostics(&mut diags);
        Err(diags)
    }
}

fn error_line(e: &csv::Error) -> usize {
    e.position().map_or(1, |p| p.line() as usize)
}

/// Parses `header=prop,header=prop`.
pub fn parse_column_map(spec: &str) -> Result<Vec<(String, String)>, String> {
    spec.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| match part.split_once('=') {
            Some((h, p)) if !h.trim().is_empty() && !p.trim().is_empty() => {
                Ok((h.trim().to_string(), p.trim().to_string()))
            }
            _ => Err(format!("bad column mapping `{part}` (expected header=property)")),
        })
        .collect()
}
