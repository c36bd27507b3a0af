//! Getting knowledge in and out: DOT hierarchy export, CSV instance
//! ingestion, and ontology merge.

mod csv_ingest;
mod dot;
mod merge;

pub use csv_ingest::{ingest_csv, parse_column_map, ID_COLUMN};
pub use dot::{asserted_edges, export_dot, transitive_reduction};
pub use merge::{merge, MergeReport};
