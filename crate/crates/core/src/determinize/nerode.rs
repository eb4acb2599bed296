use std::time::Instant;

use crate::automaton::FuzzyAutomaton;
use crate::error::Result;

use super::tree::TransitionTree;
use super::{check_cap, Bounded, DetOutcome, DetStats};

/// The Nerode automaton: states `σ_u`, transitions `σ_u ↦ σ_u ∘ δ_x`,
/// terminal degrees `σ_u ∘ τ`.
pub fn nerode(a: &FuzzyAutomaton, cap: usize) -> Result<DetOutcome> {
    check_cap(cap)?;
    let start = Instant::now();
    let mut stats = DetStats::default();
    let grown = TransitionTree::grow(a.sigma().clone(), a.alphabet().len(), cap, &mut stats, |_, s, x| {
        s.compose_raw(a.delta(x))
    });
    let result = match grown {
        Bounded::Complete(tree) => {
            let terminal = tree.state_vectors().map(|s| s.dot_raw(a.tau())).collect();
            Bounded::Complete(tree.to_cdfa(a.lattice(), a.alphabet(), terminal))
        }
        Bounded::CapExceeded { cap, states_built } => Bounded::CapExceeded { cap, states_built },
    };
    stats.elapsed = start.elapsed();
    Ok(DetOutcome { result, stats })
}

/// The transition tree of the reverse Nerode automaton: root `τ`, and the
/// x-child of `τ_u` is `τ_{xu} = δ_x ∘ τ_u`.
pub fn reverse_nerode_tree(a: &FuzzyAutomaton, cap: usize) -> Result<(Bounded<TransitionTree>, DetStats)> {
    check_cap(cap)?;
    let start = Instant::now();
    let mut stats = DetStats::default();
    let grown = TransitionTree::grow(a.tau().clone(), a.alphabet().len(), cap, &mut stats, |_, t, x| {
        a.delta(x).apply_raw(t)
    });
    stats.elapsed = start.elapsed();
    Ok((grown, stats))
}

/// The reverse Nerode automaton: states `τ_u`, transitions `τ_u ↦ τ_{xu}`,
/// terminal degrees `σ ∘ τ_u`. It recognizes the reversed language.
pub fn reverse_nerode(a: &FuzzyAutomaton, cap: usize) -> Result<DetOutcome> {
    let (grown, stats) = reverse_nerode_tree(a, cap)?;
    let result = match grown {
        Bounded::Complete(tree) => {
            let terminal = tree.state_vectors().map(|t| a.sigma().dot_raw(t)).collect();
            Bounded::Complete(tree.to_cdfa(a.lattice(), a.alphabet(), terminal))
        }
        Bounded::CapExceeded { cap, states_built } => Bounded::CapExceeded { cap, states_built },
    };
    Ok(DetOutcome { result, stats })
}

/// Double reversal: the reverse Nerode automaton of the reverse Nerode
/// automaton, which is minimal and equivalent to `a`.
pub fn brzozowski(a: &FuzzyAutomaton, cap: usize) -> Result<DetOutcome> {
    let first = reverse_nerode(a, cap)?;
    let mut stats = first.stats.clone();
    let Bounded::Complete(reversed) = first.result else {
        return Ok(first);
    };
    let second = reverse_nerode(&reversed.to_fuzzy(), cap)?;
    stats.absorb(&second.stats);
    Ok(DetOutcome {
        result: second.result,
        stats,
    })
}
