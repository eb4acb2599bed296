//! Crisp-deterministic fuzzy automata: a deterministic transition function,
//! one initial state, and a fuzzy set of terminal states.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::algebra::{FuzzyMatrix, FuzzyVector};
use crate::automaton::{Alphabet, FuzzyAutomaton};
use crate::error::{Error, Result};
use crate::lattice::{LatticeKind, Value};

/// How a state was reached during construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateLabel {
    /// Shortlex-least word leading from the initial state to this one.
    pub word: Vec<usize>,
    /// The fuzzy set this state stands for.
    pub vector: FuzzyVector,
}

type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cdfa {
    lattice: LatticeKind,
    alphabet: Alphabet,
    trans: Vec<Vec<usize>>,
    initial: usize,
    terminal: Vec<Value>,
    labels: Vec<StateLabel>,
}

impl Cdfa {
    /// Builds a cdfa, checking that `trans` is total and every state is
    /// reachable from `initial`.
    pub fn new(
        lattice: LatticeKind,
        alphabet: Alphabet,
        trans: Vec<Vec<usize>>,
        initial: usize,
        terminal: Vec<Value>,
        labels: Vec<StateLabel>,
    ) -> Result<Self> {
        let n = trans.len();
        if n == 0 {
            return Err(Error::InvalidCdfa("no states".into()));
        }
        if terminal.len() != n || labels.len() != n {
            return Err(Error::InvalidCdfa(
                "terminal map or labels do not cover all states".into(),
            ));
        }
        if initial >= n {
            return Err(Error::InvalidCdfa(format!("initial state {initial} out of range")));
        }
        for (q, row) in trans.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(Error::InvalidCdfa(format!("state {q} is missing transitions")));
            }
            if let Some(t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidCdfa(format!("state {q} targets unknown state {t}")));
            }
        }
        for v in &terminal {
            lattice.check(v)?;
        }
        let mut seen = vec![false; n];
        seen[initial] = true;
        let mut stack = vec![initial];
        while let Some(q) = stack.pop() {
            for &t in &trans[q] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        if let Some(q) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidCdfa(format!("state {q} is not accessible")));
        }
        Ok(Self {
            lattice,
            alphabet,
            trans,
            initial,
            terminal,
            labels,
        })
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.trans.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn next(&self, state: usize, x: usize) -> usize {
        self.trans[state][x]
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.trans
    }

    pub fn terminal(&self, state: usize) -> &Value {
        &self.terminal[state]
    }

    pub fn terminals(&self) -> &[Value] {
        &self.terminal
    }

    pub fn label(&self, state: usize) -> &StateLabel {
        &self.labels[state]
    }

    pub fn labels(&self) -> &[StateLabel] {
        &self.labels
    }

    /// State reached from the initial state by reading `word`.
    pub fn run(&self, word: &[usize]) -> Result<usize> {
        self.alphabet.check_word(word)?;
        Ok(word.iter().fold(self.initial, |q, &x| self.trans[q][x]))
    }

    pub fn evaluate(&self, word: &[usize]) -> Result<Value> {
        Ok(self.terminal[self.run(word)?].clone())
    }

    /// Decides language equivalence by breadth-first search over reachable
    /// state pairs. A distinguishing word, when one exists, is shortlex-least.
    pub fn equivalent(&self, other: &Cdfa) -> Result<Equivalence> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch {
                left: self.lattice,
                right: other.lattice,
            });
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let start = (self.initial, other.initial);
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(pair @ (p, q)) = queue.pop_front() {
            if self.terminal[p] != other.terminal[q] {
                let mut word = Vec::new();
                let mut cur = pair;
                while let Some(Some((prev, x))) = parent.get(&cur) {
                    word.push(*x);
                    cur = *prev;
                }
                word.reverse();
                return Ok(Equivalence::Distinguished(word));
            }
            for x in 0..self.alphabet.len() {
                let succ = (self.trans[p][x], other.trans[q][x]);
                if let Entry::Vacant(e) = parent.entry(succ) {
                    e.insert(Some((pair, x)));
                    queue.push_back(succ);
                }
            }
        }
        Ok(Equivalence::Equivalent)
    }

    /// The same automaton as a fuzzy automaton with crisp initial vector and
    /// crisp transition matrices.
    pub fn to_fuzzy(&self) -> FuzzyAutomaton {
        let l = self.lattice;
        let n = self.states();
        let sigma = FuzzyVector::unit(l, n, self.initial);
        let delta = (0..self.alphabet.len())
            .map(|x| {
                let mut m = FuzzyMatrix::zeros(l, n, n);
                for q in 0..n {
                    m.set(q, self.trans[q][x], l.top());
                }
                m
            })
            .collect();
        let tau = FuzzyVector::from_raw(l, self.terminal.clone());
        FuzzyAutomaton::new(self.alphabet.clone(), sigma, delta, tau).expect("cdfa shapes are consistent")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// A shortest word on which the two automata disagree.
    Distinguished(Vec<usize>),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }
}
