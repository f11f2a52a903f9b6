//! Text formats for complexes and diagrams.

mod cfk_text;
mod diagram_text;

pub use cfk_text::{emit_cfk_bifiltered, emit_cfk_hat, parse_cfk, ParseError, ParsedComplex};
pub use diagram_text::{emit_diagram, parse_diagram};
