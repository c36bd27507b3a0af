//! Statement-level parsing of fixture text.

use crate::diagnostic::{codes, Diagnostic};
use crate::literal::{Literal, ValueType};
use crate::model::{is_ident, Axiom, Cardinality, FacetSpec, Ident, LocatedAxiom, SourceLoc};

use super::lexer::{tokenize, Token, TokenKind};

pub const DEFAULT_ONTOLOGY_NAME: &str = "unnamed";

/// Output of [`parse_oft`]. Parsing always produces one; problems land in
/// `diagnostics` and the offending line contributes no axioms.
#[derive(Debug, Clone, Default)]
pub struct ParseResult {
    pub ontology_name: String,
    /// Whether an `ontology` header was present.
    pub has_header: bool,
    pub axioms: Vec<LocatedAxiom>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ParseResult {
    pub fn is_clean(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

struct SyntaxError {
    column: usize,
    message: String,
}

type Res<T> = Result<T, SyntaxError>;

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    /// Column just past the last token, used for "expected X at end of line".
    end_column: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn column(&self) -> usize {
        self.peek().map_or(self.end_column, |t| t.column)
    }

    fn error<T>(&self, message: impl Into<String>) -> Res<T> {
        Err(SyntaxError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn peek_word(&self) -> Option<&'a str> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Word(w),
                ..
            }) => Some(w),
            _ => None,
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.peek_word() == Some(kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Res<()> {
        if self.eat_keyword(kw) {
            Ok(())
        } else {
            self.error(format!("expected `{kw}`{}", self.found()))
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => " at end of line".to_string(),
            Some(t) => match &t.kind {
                TokenKind::Word(w) => format!(", found `{w}`"),
                TokenKind::Quoted(_) => ", found a quoted string".to_string(),
                TokenKind::Comma => ", found `,`".to_string(),
            },
        }
    }

    fn ident(&mut self, what: &str) -> Res<Ident> {
        match self.peek_word() {
            Some(w) if is_ident(w) => {
                self.pos += 1;
                Ok(Ident::new(w).expect("checked by is_ident"))
            }
            _ => self.error(format!("expected {what}{}", self.found())),
        }
    }

    fn eat_comma(&mut self) -> bool {
        if matches!(
            self.peek(),
            Some(Token {
                kind: TokenKind::Comma,
                ..
            })
        ) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident_list(&mut self, what: &str) -> Res<Vec<Ident>> {
        let mut out = vec![self.ident(what)?];
        while self.eat_comma() {
            out.push(self.ident(what)?);
        }
        Ok(out)
    }

    fn literal(&mut self) -> Res<Literal> {
        let Some(tok) = self.peek() else {
            return self.error("expected a literal at end of line");
        };
        let lit = match &tok.kind {
            TokenKind::Quoted(s) => Literal::string(s.clone()),
            TokenKind::Word(w) => match literal_word(w) {
                Some(lit) => lit,
                None => return self.error(format!("`{w}` is not a literal (strings must be quoted)")),
            },
            TokenKind::Comma => return self.error("expected a literal, found `,`"),
        };
        self.pos += 1;
        Ok(lit)
    }

    fn finish(&self) -> Res<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error(format!("unexpected trailing input{}", self.found())),
        }
    }
}

/// Unquoted literal: boolean, ISO-8601 date/date-time, or decimal number.
fn literal_word(w: &str) -> Option<Literal> {
    match w {
        "true" => Some(Literal::boolean(true)),
        "false" => Some(Literal::boolean(false)),
        _ => Literal::datetime(w).or_else(|_| Literal::number(w)).ok(),
    }
}

enum Statement {
    Header(String),
    Axioms(Vec<Axiom>),
}

fn statement(cur: &mut Cursor<'_>) -> Res<Statement> {
    let Some(keyword) = cur.peek_word() else {
        return cur.error("expected a statement keyword");
    };
    cur.pos += 1;
    let axioms = match keyword {
        "ontology" => {
            let name = cur.ident("an ontology name")?;
            cur.finish()?;
            return Ok(Statement::Header(name.as_str().to_string()));
        }
        "class" => {
            let class = cur.ident("a class name")?;
            let mut out = vec![Axiom::ClassDecl(class.clone())];
            if cur.eat_keyword("sub") {
                for parent in cur.ident_list("a parent class name")? {
                    out.push(Axiom::SubClassOf {
                        child: class.clone(),
                        parent,
                    });
                }
            }
            out
        }
        "objprop" => {
            let prop = cur.ident("a property name")?;
            let domain = if cur.eat_keyword("domain") {
                Some(cur.ident("a domain class")?)
            } else {
                None
            };
            let range = if cur.eat_keyword("range") {
                Some(cur.ident("a range class")?)
            } else {
                None
            };
            vec![Axiom::ObjPropDecl { prop, domain, range }]
        }
        "dataprop" => {
            let prop = cur.ident("a property name")?;
            let domain = if cur.eat_keyword("domain") {
                Some(cur.ident("a domain class")?)
            } else {
                None
            };
            cur.expect_keyword("type")?;
            let type_col = cur.column();
            let value_type = match cur.peek_word().and_then(ValueType::from_keyword) {
                Some(vt) => {
                    cur.pos += 1;
                    vt
                }
                None => {
                    return cur.error(format!(
                        "expected a value type (string, number, boolean, datetime, literal, enum){}",
                        cur.found()
                    ))
                }
            };
            let allowed = if cur.eat_keyword("allowed") {
                let mut values = vec![cur.literal()?];
                while cur.eat_comma() {
                    values.push(cur.literal()?);
                }
                Some(values)
            } else {
                None
            };
            let cardinality = if cur.eat_keyword("card") {
                if cur.eat_keyword("single") {
                    Cardinality::Single
                } else if cur.eat_keyword("multiple") {
                    Cardinality::Multiple
                } else {
                    return cur.error(format!("expected `single` or `multiple`{}", cur.found()));
                }
            } else {
                Cardinality::Multiple
            };
            let facet = FacetSpec::new(value_type, allowed, cardinality).map_err(|e| SyntaxError {
                column: type_col,
                message: format!("invalid facet: {e}"),
            })?;
            vec![Axiom::DataPropDecl { prop, domain, facet }]
        }
        "individual" => {
            let individual = cur.ident("an individual name")?;
            cur.expect_keyword("type")?;
            let types = cur.ident_list("a class name")?;
            vec![Axiom::IndividualDecl { individual, types }]
        }
        "rel" => {
            let subject = cur.ident("a subject individual")?;
            let prop = cur.ident("an object property")?;
            let object = cur.ident("an object individual")?;
            vec![Axiom::ObjAssertion { subject, prop, object }]
        }
        "attr" => {
            let subject = cur.ident("a subject individual")?;
            let prop = cur.ident("a data property")?;
            let value = cur.literal()?;
            vec![Axiom::DataAssertion { subject, prop, value }]
        }
        other => {
            cur.pos -= 1;
            return cur.error(format!("unknown keyword `{other}`"));
        }
    };
    cur.finish()?;
    Ok(Statement::Axioms(axioms))
}

/// Parses fixture text. Never fails; see [`ParseResult`].
pub fn parse_oft(source: &str, file_name: &str) -> ParseResult {
    let mut result = ParseResult {
        ontology_name: DEFAULT_ONTOLOGY_NAME.to_string(),
        ..ParseResult::default()
    };
    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    for (idx, raw) in source.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let syntax = |column: usize, message: String| {
            Diagnostic::error(
                codes::E_SYNTAX,
                file_name,
                line_no,
                format!("column {column}: {message}"),
            )
        };
        let tokens = match tokenize(line) {
            Ok(t) => t,
            Err(e) => {
                result.diagnostics.push(syntax(e.column, e.message));
                continue;
            }
        };
        if tokens.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            tokens: &tokens,
            pos: 0,
            end_column: line.chars().count() + 1,
        };
        match statement(&mut cur) {
            Ok(Statement::Header(name)) => {
                if !result.has_header {
                    result.ontology_name = name;
                    result.has_header = true;
                }
            }
            Ok(Statement::Axioms(axioms)) => {
                let loc = SourceLoc::new(file_name, line_no);
                result
                    .axioms
                    .extend(axioms.into_iter().map(|a| LocatedAxiom::new(a, loc.clone())));
            }
            Err(e) => result.diagnostics.push(syntax(e.column, e.message)),
        }
    }
    result
}
