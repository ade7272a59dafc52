//! Input parsing and output serialization.

mod emit;
mod parse;

pub use emit::{csv_table, dot_node_id, hasse_dot, text_table, Table};
pub use parse::{parse_document, Document, NamedModule, Side};
