//! Sanity checks for the test oracles themselves.

mod common;

use common::{minimal_dfa_states, validate_dot, words};
use fuzzydet::{Alphabet, FuzzyAutomaton, FuzzyMatrix, FuzzyVector, LatticeKind, Value};

#[test]
fn validator_rejects_malformed_dot() {
    assert!(validate_dot("digraph g { a; b; a -> b [label=\"x\"]; }").is_ok());
    assert!(validate_dot("digraph { a -> b; }").is_err());
    assert!(validate_dot("digraph g { a; b; a -- b; }").is_err());
    assert!(validate_dot("digraph g { a [label=\"x]; }").is_err());
    assert!(validate_dot("digraph g { a; ").is_err());
    assert!(validate_dot("digraph g { a [label]; }").is_err());
    assert!(validate_dot("digraph g { a; } }").is_err());
}

#[test]
fn oracle_on_known_languages() {
    // one state looping on both symbols, accepting: minimal DFA has 1 state
    let l = LatticeKind::Boolean;
    let one = |n| FuzzyVector::ones(l, n);
    let a = FuzzyAutomaton::new(
        Alphabet::new(["x", "y"]).unwrap(),
        one(1),
        vec![FuzzyMatrix::identity(l, 1), FuzzyMatrix::identity(l, 1)],
        one(1),
    )
    .unwrap();
    assert_eq!(minimal_dfa_states(&a), 1);
    // words with an even number of x: 2 states
    let swap = FuzzyMatrix::from_rows(
        l,
        vec![
            vec![Value::ratio(0, 1), Value::ratio(1, 1)],
            vec![Value::ratio(1, 1), Value::ratio(0, 1)],
        ],
    )
    .unwrap();
    let b = FuzzyAutomaton::new(
        Alphabet::new(["x", "y"]).unwrap(),
        FuzzyVector::unit(l, 2, 0),
        vec![swap, FuzzyMatrix::identity(l, 2)],
        FuzzyVector::unit(l, 2, 0),
    )
    .unwrap();
    assert_eq!(minimal_dfa_states(&b), 2);
    assert_eq!(words(2, 2).len(), 7);
}
