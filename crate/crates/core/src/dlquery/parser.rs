//! Manchester-style class expression syntax.
//!
//! ```text
//! expr := term ('and' term)*
//! term := IDENT
//!       | IDENT 'some' term
//!       | IDENT 'value' (IDENT | literal)
//!       | '(' expr ')'
//! ```
//!
//! `and`, `some` and `value` are reserved and case-sensitive.

use crate::literal::Literal;
use crate::model::{is_ident, Ident};

use super::{ClassExpr, QueryError};

const RESERVED: [&str; 3] = ["and", "some", "value"];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Word(String),
    Quoted(String),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, QueryError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            '(' => {
                out.push((Tok::Open, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::Close, col));
                i += 1;
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => return Err(QueryError::syntax(col, "unterminated string")),
                        Some('"') => break,
                        Some('\\') => match chars.get(i + 1) {
                            Some(&e @ ('"' | '\\')) => {
                                s.push(e);
                                i += 1;
                            }
                            _ => return Err(QueryError::syntax(i + 1, "unsupported escape")),
                        },
                        Some(&c) => s.push(c),
                    }
                    i += 1;
                }
                i += 1;
                out.push((Tok::Quoted(s), col));
            }
            _ => {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !matches!(chars[i], '(' | ')' | '"') {
                    i += 1;
                }
                out.push((Tok::Word(chars[start..i].iter().collect()), col));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn fail<T>(&self, what: &str) -> Result<T, QueryError> {
        let found = match self.peek() {
            None => "end of query".to_string(),
            Some(Tok::Open) => "`(`".to_string(),
            Some(Tok::Close) => "`)`".to_string(),
            Some(Tok::Word(w)) => format!("`{w}`"),
            Some(Tok::Quoted(_)) => "a quoted string".to_string(),
        };
        Err(QueryError::syntax(
            self.column(),
            format!("expected {what}, found {found}"),
        ))
    }

    fn eat_word(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Word(w)) if w == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<Ident, QueryError> {
        match self.peek() {
            Some(Tok::Word(w)) if is_ident(w) && !RESERVED.contains(&w.as_str()) => {
                let id = Ident::new(w.clone()).expect("checked by is_ident");
                self.pos += 1;
                Ok(id)
            }
            _ => self.fail(what),
        }
    }

    fn expr(&mut self) -> Result<ClassExpr, QueryError> {
        let mut parts = vec![self.term()?];
        while self.eat_word("and") {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one element")
        } else {
            ClassExpr::And(parts)
        })
    }

    fn term(&mut self) -> Result<ClassExpr, QueryError> {
        if self.peek() == Some(&Tok::Open) {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(&Tok::Close) {
                return self.fail("`)`");
            }
            self.pos += 1;
            return Ok(inner);
        }
        let name = self.ident("a class or property name")?;
        if self.eat_word("some") {
            let filler = self.term()?;
            return Ok(ClassExpr::Some {
                prop: name,
                filler: Box::new(filler),
            });
        }
        if self.eat_word("value") {
            return self.value_target(name);
        }
        Ok(ClassExpr::Named(name))
    }

    fn value_target(&mut self, prop: Ident) -> Result<ClassExpr, QueryError> {
        let value = match self.peek() {
            Some(Tok::Quoted(s)) => Literal::string(s.clone()),
            Some(Tok::Word(w)) if w == "true" || w == "false" => Literal::boolean(w == "true"),
            Some(Tok::Word(w)) if is_ident(w) && !RESERVED.contains(&w.as_str()) => {
                let individual = Ident::new(w.clone()).expect("checked by is_ident");
                self.pos += 1;
                return Ok(ClassExpr::ValueObj { prop, individual });
            }
            Some(Tok::Word(w)) => match Literal::datetime(w).or_else(|_| Literal::number(w)) {
                Ok(lit) => lit,
                Err(_) => return self.fail("an individual or literal"),
            },
            _ => return self.fail("an individual or literal"),
        };
        self.pos += 1;
        Ok(ClassExpr::ValueData { prop, value })
    }
}

/// Parses and normalizes a class expression. Name resolution happens at
/// evaluation time.
pub fn parse_query(text: &str) -> Result<ClassExpr, QueryError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count() + 1,
    };
    let expr = p.expr()?;
    if p.pos < p.toks.len() {
        return p.fail("`and` or end of query");
    }
    Ok(expr.normalize())
}
