//! The inclusion-degree construction over the family `ψ^w` of a reflexive
//! left invariant fuzzy relation `ψ`:
//!
//! ```text
//! ψ^ε = ψ ∘ τ        ψ^{xw} = ψ ∘ δ_x ∘ ψ^w
//! ```
//!
//! Only left invariance (`σ ∘ ψ ≤ σ` and `δ_x ∘ ψ ≤ ψ ∘ δ_x`) is checked.
//! Weak left invariance ranges over all words and is not decided here.

use std::fmt;
use std::time::Instant;

use crate::algebra::FuzzyMatrix;
use crate::automaton::FuzzyAutomaton;
use crate::error::{Error, Result};

use super::inclusion::inclusion_automaton_over;
use super::tree::TransitionTree;
use super::{check_cap, Bounded, DetOutcome, DetStats};

/// Outcome of [`check_left_invariant`]. Sites are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftInvariance {
    Holds,
    /// `(σ ∘ ψ)(state) > σ(state)`.
    InitialViolated {
        state: usize,
    },
    /// `(δ_x ∘ ψ)(row, col) > (ψ ∘ δ_x)(row, col)`.
    TransitionViolated {
        symbol: usize,
        row: usize,
        col: usize,
    },
}

impl LeftInvariance {
    pub fn holds(&self) -> bool {
        matches!(self, LeftInvariance::Holds)
    }
}

impl fmt::Display for LeftInvariance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeftInvariance::Holds => f.write_str("left invariant"),
            LeftInvariance::InitialViolated { state } => {
                write!(f, "(σ∘ψ)(a{}) exceeds σ(a{})", state + 1, state + 1)
            }
            LeftInvariance::TransitionViolated { symbol, row, col } => write!(
                f,
                "(δ_{symbol}∘ψ)(a{r}, a{c}) exceeds (ψ∘δ_{symbol})(a{r}, a{c})",
                symbol = symbol,
                r = row + 1,
                c = col + 1
            ),
        }
    }
}

fn check_shape(a: &FuzzyAutomaton, psi: &FuzzyMatrix) -> Result<()> {
    if psi.lattice() != a.lattice() {
        return Err(Error::LatticeMismatch {
            left: a.lattice(),
            right: psi.lattice(),
        });
    }
    for found in [psi.rows(), psi.cols()] {
        if found != a.states() {
            return Err(Error::DimensionMismatch {
                expected: a.states(),
                found,
            });
        }
    }
    Ok(())
}

/// Checks `σ ∘ ψ ≤ σ` and `δ_x ∘ ψ ≤ ψ ∘ δ_x` for every symbol, reporting the
/// first violation found.
pub fn check_left_invariant(a: &FuzzyAutomaton, psi: &FuzzyMatrix) -> Result<LeftInvariance> {
    check_shape(a, psi)?;
    let spsi = a.sigma().compose(psi)?;
    if let Some(state) = (0..a.states()).find(|&j| spsi.get(j) > a.sigma().get(j)) {
        return Ok(LeftInvariance::InitialViolated { state });
    }
    for (symbol, delta) in a.deltas().iter().enumerate() {
        let left = delta.compose(psi)?;
        let right = psi.compose(delta)?;
        for row in 0..a.states() {
            if let Some(col) = (0..a.states()).find(|&c| left.at(row, c) > right.at(row, c)) {
                return Ok(LeftInvariance::TransitionViolated { symbol, row, col });
            }
        }
    }
    Ok(LeftInvariance::Holds)
}

/// Transition tree of the family `ψ^w`.
pub fn psi_family_tree(
    a: &FuzzyAutomaton,
    psi: &FuzzyMatrix,
    cap: usize,
) -> Result<(Bounded<TransitionTree>, DetStats)> {
    check_cap(cap)?;
    check_shape(a, psi)?;
    let start = Instant::now();
    let mut stats = DetStats::default();
    let root = psi.apply(a.tau())?;
    let grown = TransitionTree::grow(root, a.alphabet().len(), cap, &mut stats, |_, v, x| {
        psi.apply_raw(&a.delta(x).apply_raw(v))
    });
    stats.elapsed = start.elapsed();
    Ok((grown, stats))
}

/// The `Δ_u` automaton for a reflexive left invariant `ψ`. With `ψ` the
/// identity this is exactly [`super::d_automaton`].
pub fn psi_d_automaton(a: &FuzzyAutomaton, psi: &FuzzyMatrix, cap: usize) -> Result<DetOutcome> {
    check_cap(cap)?;
    check_shape(a, psi)?;
    let l = a.lattice();
    if let Some(i) = (0..a.states()).find(|&i| !l.is_top(psi.at(i, i))) {
        return Err(Error::PsiNotReflexive(i + 1));
    }
    let invariance = check_left_invariant(a, psi)?;
    if !invariance.holds() {
        return Err(Error::PsiNotLeftInvariant(invariance.to_string()));
    }
    let (grown, mut stats) = psi_family_tree(a, psi, cap)?;
    let family = match grown {
        Bounded::Complete(tree) => tree,
        Bounded::CapExceeded { cap, states_built } => {
            return Ok(DetOutcome {
                result: Bounded::CapExceeded { cap, states_built },
                stats,
            })
        }
    };
    let out = inclusion_automaton_over(a, &family, cap)?;
    stats.absorb(&out.stats);
    Ok(DetOutcome {
        result: out.result,
        stats,
    })
}
