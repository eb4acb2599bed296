//! Fuzzy finite automata over complete residuated lattices, and their
//! conversion into equivalent crisp-deterministic fuzzy automata.
//!
//! All membership degrees are exact: rationals on the unit interval, indices
//! on finite chains. Equality of fuzzy sets is therefore decidable, which the
//! determinization procedures rely on to detect repeated states.
//!
//! ```
//! use fuzzydet::{determinize, fixtures};
//!
//! let a = fixtures::product_example();
//! let minimal = determinize::d_automaton(&a, 100).unwrap().into_cdfa().unwrap();
//! assert_eq!(minimal.states(), 3);
//! assert_eq!(minimal.evaluate(&[0]).unwrap(), a.evaluate(&[0]).unwrap());
//! ```

pub mod algebra;
pub mod automaton;
pub mod cdfa;
pub mod determinize;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod lattice;

pub use algebra::{semiring_closure, Closure, FuzzyMatrix, FuzzyVector, ValueSet};
pub use automaton::{Alphabet, FuzzyAutomaton};
pub use cdfa::{Cdfa, Equivalence, StateLabel};
pub use determinize::{Bounded, DetOutcome, DetStats, Method};
pub use error::{Error, ParseErrorKind, Result};
pub use lattice::{LatticeKind, Value};
