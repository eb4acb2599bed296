//! Fuzzy finite automata `(A, σ, δ, τ)`.

use std::fmt;

use crate::algebra::{FuzzyMatrix, FuzzyVector};
use crate::error::{Error, Result};
use crate::lattice::{LatticeKind, Value};

/// An ordered set of input symbols. Words are sequences of symbol indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlphabet(format!("bad symbol {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, symbol: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))
    }

    pub fn word<S: AsRef<str>>(&self, symbols: &[S]) -> Result<Vec<usize>> {
        symbols.iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    pub(crate) fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&x| x >= self.len()) {
            Some(x) => Err(Error::UnknownSymbol(format!("#{x}"))),
            None => Ok(()),
        }
    }

    /// `x.y.x` style rendering; the empty word is `_`.
    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "_".to_string();
        }
        word.iter().map(|&x| self.symbol(x)).collect::<Vec<_>>().join(".")
    }

    /// Inverse of [`Alphabet::format_word`].
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let text = text.trim();
        if text == "_" {
            return Ok(Vec::new());
        }
        text.split('.').map(|s| self.index_of(s)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(" "))
    }
}

/// A fuzzy finite automaton with fuzzy initial vector `σ`, one transition
/// matrix `δ_x` per symbol, and fuzzy terminal vector `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyAutomaton {
    lattice: LatticeKind,
    alphabet: Alphabet,
    sigma: FuzzyVector,
    delta: Vec<FuzzyMatrix>,
    tau: FuzzyVector,
}

impl FuzzyAutomaton {
    pub fn new(alphabet: Alphabet, sigma: FuzzyVector, delta: Vec<FuzzyMatrix>, tau: FuzzyVector) -> Result<Self> {
        let lattice = sigma.lattice();
        let n = sigma.len();
        if delta.len() != alphabet.len() {
            return Err(Error::DimensionMismatch {
                expected: alphabet.len(),
                found: delta.len(),
            });
        }
        let check_lattice = |other: LatticeKind| {
            if other == lattice {
                Ok(())
            } else {
                Err(Error::LatticeMismatch {
                    left: lattice,
                    right: other,
                })
            }
        };
        let check_dim = |found: usize| {
            if found == n {
                Ok(())
            } else {
                Err(Error::DimensionMismatch { expected: n, found })
            }
        };
        check_lattice(tau.lattice())?;
        check_dim(tau.len())?;
        for m in &delta {
            check_lattice(m.lattice())?;
            check_dim(m.rows())?;
            check_dim(m.cols())?;
        }
        Ok(Self {
            lattice,
            alphabet,
            sigma,
            delta,
            tau,
        })
    }

    pub fn lattice(&self) -> LatticeKind {
        self.lattice
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &FuzzyVector {
        &self.sigma
    }

    pub fn tau(&self) -> &FuzzyVector {
        &self.tau
    }

    pub fn delta(&self, x: usize) -> &FuzzyMatrix {
        &self.delta[x]
    }

    pub fn deltas(&self) -> &[FuzzyMatrix] {
        &self.delta
    }

    /// Every membership degree occurring in `σ`, `δ` and `τ`.
    pub fn values(&self) -> impl Iterator<Item = &Value> {
        self.sigma
            .entries()
            .iter()
            .chain(self.delta.iter().flat_map(|m| m.entries()))
            .chain(self.tau.entries())
    }

    /// `σ_u = σ ∘ δ_u`, threaded left to right.
    pub fn left_vector(&self, word: &[usize]) -> Result<FuzzyVector> {
        self.alphabet.check_word(word)?;
        Ok(word
            .iter()
            .fold(self.sigma.clone(), |s, &x| s.compose_raw(&self.delta[x])))
    }

    /// `τ_u = δ_u ∘ τ`, threaded right to left.
    pub fn right_vector(&self, word: &[usize]) -> Result<FuzzyVector> {
        self.alphabet.check_word(word)?;
        Ok(word
            .iter()
            .rev()
            .fold(self.tau.clone(), |t, &x| self.delta[x].apply_raw(&t)))
    }

    /// The degree `σ ∘ δ_u ∘ τ` to which the automaton accepts `word`.
    pub fn evaluate(&self, word: &[usize]) -> Result<Value> {
        Ok(self.left_vector(word)?.dot_raw(&self.tau))
    }

    /// Exchanges `σ` and `τ` and transposes every `δ_x`.
    pub fn reverse(&self) -> FuzzyAutomaton {
        FuzzyAutomaton {
            lattice: self.lattice,
            alphabet: self.alphabet.clone(),
            sigma: self.tau.clone(),
            delta: self.delta.iter().map(FuzzyMatrix::transpose).collect(),
            tau: self.sigma.clone(),
        }
    }

    /// `τ_{xu} = δ_x ∘ τ_u`.
    pub fn right_language_step(&self, x: usize, t: &FuzzyVector) -> Result<FuzzyVector> {
        self.alphabet.check_word(&[x])?;
        self.delta[x].apply(t)
    }

    /// `σ_{ux} = σ_u ∘ δ_x`.
    pub fn left_language_step(&self, s: &FuzzyVector, x: usize) -> Result<FuzzyVector> {
        self.alphabet.check_word(&[x])?;
        s.compose(&self.delta[x])
    }
}
