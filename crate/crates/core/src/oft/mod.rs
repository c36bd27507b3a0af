//! The Ontology Fixture Text (OFT) format: a line-oriented, diffable
//! serialization with one statement per line.
//!
//! ```text
//! ontology date_fruit
//! class Dates sub Date_fruit          # auto-declares Dates
//! objprop has_benefits domain Date_fruit range Benefits
//! dataprop has_date_of_origin domain Species type number card single
//! individual Barhee type Species
//! rel Phoenix_dactylifera has_benefits Weight_gain
//! attr Barhee has_common_name "honey balls"
//! ```

mod lexer;
mod parser;
mod writer;

pub use lexer::{tokenize, LexError, Token, TokenKind};
pub use parser::{parse_oft, ParseResult, DEFAULT_ONTOLOGY_NAME};
pub use writer::{axiom_to_oft, serialize_oft};
