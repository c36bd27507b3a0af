//! Splits a single fixture line into tokens.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    /// A bare run of characters: keyword, identifier, number, date-time, boolean.
    Word(String),
    /// A double-quoted string with escapes resolved.
    Quoted(String),
    Comma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// 1-based, in characters.
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub column: usize,
    pub message: String,
}

/// Tokenizes one line (without its terminator). A `#` outside a quoted
/// string ends the line.
pub fn tokenize(line: &str) -> Result<Vec<Token>, LexError> {
    let chars: Vec<char> = line.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '#' => break,
            ',' => {
                tokens.push(Token {
                    kind: TokenKind::Comma,
                    column,
                });
                i += 1;
            }
            '"' => {
                let mut value = String::new();
                i += 1;
                loop {
                    match chars.get(i) {
                        None => {
                            return Err(LexError {
                                column,
                                message: "unterminated string".into(),
                            })
                        }
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some('\\') => match chars.get(i + 1) {
                            Some(&e @ ('"' | '\\')) => {
                                value.push(e);
                                i += 2;
                            }
                            other => {
                                return Err(LexError {
                                    column: i + 1,
                                    message: match other {
                                        Some(e) => format!("unsupported escape `\\{e}`"),
                                        None => "unterminated string".into(),
                                    },
                                })
                            }
                        },
                        Some(&ch) => {
                            value.push(ch);
                            i += 1;
                        }
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Quoted(value),
                    column,
                });
            }
            _ => {
                let start = i;
                while i < chars.len() && !matches!(chars[i], ' ' | '\t' | '#' | ',' | '"') {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Word(chars[start..i].iter().collect()),
                    column,
                });
            }
        }
    }
    Ok(tokens)
}
