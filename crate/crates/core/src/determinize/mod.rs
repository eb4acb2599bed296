//! Conversions of fuzzy automata into equivalent crisp-deterministic ones.
//!
//! * [`nerode`] builds the accessible automaton of left vectors `σ_u`.
//! * [`reverse_nerode`] builds the automaton of right vectors `τ_u`, which
//!   recognizes the reversed language.
//! * [`d_automaton`] builds the minimal automaton whose states are the
//!   inclusion-degree vectors `d_u(a) = I(τ_a, f_u)`.
//! * [`brzozowski`] applies the reverse construction twice.
//! * [`psi_d_automaton`] runs the inclusion construction over the smaller
//!   family `ψ^w` induced by a reflexive left invariant relation `ψ`.
//!
//! The state space may be infinite, so every construction takes a cap on the
//! number of distinct states and reports [`Bounded::CapExceeded`] when hit.

mod inclusion;
mod nerode;
mod psi;
mod tree;

use std::time::Duration;

use num_bigint::BigUint;

use crate::algebra::{semiring_closure, Closure, FuzzyMatrix, ValueSet};
use crate::automaton::FuzzyAutomaton;
use crate::cdfa::Cdfa;
use crate::error::{Error, Result};

pub use inclusion::{d_automaton, d_epsilon, d_step, inclusion_automaton_over};
pub use nerode::{brzozowski, nerode, reverse_nerode, reverse_nerode_tree};
pub use psi::{check_left_invariant, psi_d_automaton, psi_family_tree, LeftInvariance};
pub use tree::{TransitionTree, TreeVertex};

/// Default cap on the number of states per construction phase.
pub const DEFAULT_CAP: usize = 10_000;

/// Either a finished construction or the point at which the cap stopped it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bounded<T> {
    Complete(T),
    CapExceeded { cap: usize, states_built: usize },
}

impl<T> Bounded<T> {
    pub fn complete(self) -> Option<T> {
        match self {
            Bounded::Complete(t) => Some(t),
            Bounded::CapExceeded { .. } => None,
        }
    }

    pub fn as_ref(&self) -> Bounded<&T> {
        match self {
            Bounded::Complete(t) => Bounded::Complete(t),
            Bounded::CapExceeded { cap, states_built } => Bounded::CapExceeded {
                cap: *cap,
                states_built: *states_built,
            },
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, Bounded::Complete(_))
    }
}

/// Work counters for a construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DetStats {
    /// Tree vertices created, closed ones included.
    pub vertices: usize,
    /// Lookups of a new fuzzy set against the ones already built.
    pub equality_checks: usize,
    pub elapsed: Duration,
}

impl DetStats {
    fn absorb(&mut self, other: &DetStats) {
        self.vertices += other.vertices;
        self.equality_checks += other.equality_checks;
        self.elapsed += other.elapsed;
    }
}

#[derive(Debug, Clone)]
pub struct DetOutcome {
    pub result: Bounded<Cdfa>,
    pub stats: DetStats,
}

impl DetOutcome {
    pub fn cdfa(&self) -> Option<&Cdfa> {
        match &self.result {
            Bounded::Complete(c) => Some(c),
            Bounded::CapExceeded { .. } => None,
        }
    }

    pub fn into_cdfa(self) -> Option<Cdfa> {
        self.result.complete()
    }
}

pub(crate) fn check_cap(cap: usize) -> Result<()> {
    if cap == 0 {
        Err(Error::InvalidCap(cap))
    } else {
        Ok(())
    }
}

/// Termination estimate computed before a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preflight {
    pub closure: Closure,
    pub states: usize,
}

impl Preflight {
    /// `k^n` when the generated subsemiring closed with `k` elements.
    pub fn bound(&self) -> Option<BigUint> {
        self.closure.state_bound(self.states)
    }
}

/// Saturates the membership values of `σ`, `δ` and `τ` under `∨` and `⊗`.
/// When that subsemiring is finite with `k` elements, every construction here
/// has at most `k^n` states.
pub fn preflight(a: &FuzzyAutomaton, cap: usize) -> Preflight {
    let seed = ValueSet::from_values(a.lattice(), a.values().cloned()).expect("automaton values belong to its lattice");
    Preflight {
        closure: semiring_closure(&seed, cap),
        states: a.states(),
    }
}

/// The available constructions, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Nerode,
    ReverseNerode,
    Inclusion,
    Brzozowski,
    Psi,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Nerode,
        Method::ReverseNerode,
        Method::Inclusion,
        Method::Brzozowski,
        Method::Psi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Nerode => "nerode",
            Method::ReverseNerode => "rnerode",
            Method::Inclusion => "incl",
            Method::Brzozowski => "brzozowski",
            Method::Psi => "psi",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == name)
    }
}

/// Runs `method` on `a`. `psi` is only consulted by [`Method::Psi`] and
/// defaults to the identity relation.
pub fn run(a: &FuzzyAutomaton, method: Method, psi: Option<&FuzzyMatrix>, cap: usize) -> Result<DetOutcome> {
    match method {
        Method::Nerode => nerode(a, cap),
        Method::ReverseNerode => reverse_nerode(a, cap),
        Method::Inclusion => d_automaton(a, cap),
        Method::Brzozowski => brzozowski(a, cap),
        Method::Psi => match psi {
            Some(psi) => psi_d_automaton(a, psi, cap),
            None => psi_d_automaton(a, &FuzzyMatrix::identity(a.lattice(), a.states()), cap),
        },
    }
}
