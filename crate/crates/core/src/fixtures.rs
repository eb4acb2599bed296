//! Two small reference automata, also shipped as `fixtures/*.fza`.

use crate::automaton::FuzzyAutomaton;
use crate::io::parse_automaton;

/// Goguen automaton with an infinite Nerode automaton and a three-state
/// minimal equivalent.
pub const PRODUCT_EXAMPLE: &str = include_str!("../fixtures/product3.fza");

/// Boolean automaton whose Nerode automaton has 7 states and whose minimal
/// equivalent has 4.
pub const BOOLEAN_EXAMPLE: &str = include_str!("../fixtures/boolean3.fza");

pub fn product_example() -> FuzzyAutomaton {
    parse_automaton(PRODUCT_EXAMPLE).expect("bundled fixture parses")
}

pub fn boolean_example() -> FuzzyAutomaton {
    parse_automaton(BOOLEAN_EXAMPLE).expect("bundled fixture parses")
}
