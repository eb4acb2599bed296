//! Text and DOT formats.

mod dot;
mod text;

pub use dot::{automaton_to_dot, cdfa_to_dot};
pub use text::{parse_automaton, parse_document, parse_relation, serialize_automaton, AutomatonDocument, Block};
