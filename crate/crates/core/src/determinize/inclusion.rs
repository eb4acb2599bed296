//! The canonical automaton of inclusion degrees.
//!
//! With `{μ}` the distinct right vectors of the automaton (the states of its
//! reverse Nerode automaton) and `μ_x` the x-child of `μ`:
//!
//! ```text
//! d_ε(a)  = ⋀_μ  μ(a) → σ ∘ μ
//! d_ux(a) = ⋀_μ  μ(a) → d_u ∘ μ_x
//! ```
//!
//! The states are the distinct `d_u`, `d_u --x--> d_ux`, and the terminal
//! degree of `d_u` is `d_u ∘ τ`.

use std::time::Instant;

use crate::algebra::FuzzyVector;
use crate::automaton::FuzzyAutomaton;
use crate::error::{Error, Result};
use crate::lattice::{LatticeKind, Value};

use super::nerode::reverse_nerode_tree;
use super::tree::TransitionTree;
use super::{check_cap, Bounded, DetOutcome, DetStats};

/// `⋀_μ μ(a) → c_μ` for each state `a`.
fn meet_of_residua<'a, I>(l: LatticeKind, n: usize, family: I) -> FuzzyVector
where
    I: Iterator<Item = (&'a FuzzyVector, &'a Value)> + Clone,
{
    let out = (0..n)
        .map(|a| {
            let mut acc = l.top();
            for (mu, c) in family.clone() {
                let m = mu.get(a);
                if m <= c {
                    continue;
                }
                acc = l.min(&acc, &l.imp(m, c));
                if l.is_bottom(&acc) {
                    break;
                }
            }
            acc
        })
        .collect();
    FuzzyVector::from_raw(l, out)
}

fn check_vector(a: &FuzzyAutomaton, v: &FuzzyVector) -> Result<()> {
    if v.lattice() != a.lattice() {
        return Err(Error::LatticeMismatch {
            left: a.lattice(),
            right: v.lattice(),
        });
    }
    if v.len() != a.states() {
        return Err(Error::DimensionMismatch {
            expected: a.states(),
            found: v.len(),
        });
    }
    Ok(())
}

/// `d_ε(a) = ⋀_μ μ(a) → σ ∘ μ` over the given right vectors.
pub fn d_epsilon(a: &FuzzyAutomaton, rn_states: &[FuzzyVector]) -> Result<FuzzyVector> {
    for mu in rn_states {
        check_vector(a, mu)?;
    }
    let scalars: Vec<Value> = rn_states.iter().map(|mu| a.sigma().dot_raw(mu)).collect();
    Ok(meet_of_residua(a.lattice(), a.states(), rn_states.iter().zip(&scalars)))
}

/// `d_ux(a) = ⋀_μ μ(a) → d_u ∘ μ_x`, reading `μ_x` off the tree.
pub fn d_step(a: &FuzzyAutomaton, d_u: &FuzzyVector, x: usize, rn_tree: &TransitionTree) -> Result<FuzzyVector> {
    if x >= a.alphabet().len() {
        return Err(Error::UnknownSymbol(format!("#{x}")));
    }
    check_vector(a, d_u)?;
    let states = rn_tree.state_count();
    let scalars: Vec<Value> = (0..states)
        .map(|s| d_u.dot_raw(rn_tree.state_vector(rn_tree.successor(s, x))))
        .collect();
    Ok(meet_of_residua(
        a.lattice(),
        a.states(),
        rn_tree.state_vectors().zip(&scalars),
    ))
}

/// Runs the inclusion-degree construction over an arbitrary family tree
/// whose root stands for `ε` and whose x-child of `μ_w` stands for `μ_{xw}`.
///
/// With the reverse Nerode tree this is the canonical automaton; with the
/// `ψ^w` family it is the `Δ_u` variant. The terminal degree of a state `d`
/// is `d ∘ μ_ε`.
pub fn inclusion_automaton_over(a: &FuzzyAutomaton, family: &TransitionTree, cap: usize) -> Result<DetOutcome> {
    check_cap(cap)?;
    if let Some(mu) = family.state_vectors().next() {
        check_vector(a, mu)?;
    }
    let start = Instant::now();
    let l = a.lattice();
    let n = a.states();
    let r = family.state_count();
    let mut stats = DetStats::default();

    let root = {
        let scalars: Vec<Value> = family.state_vectors().map(|mu| a.sigma().dot_raw(mu)).collect();
        meet_of_residua(l, n, family.state_vectors().zip(&scalars))
    };
    let successors = family.transition_table();

    // d_u ∘ μ for every family state μ, computed once per expanded d_u and
    // shared across symbols.
    let mut cached: Option<(usize, Vec<Value>)> = None;
    let grown = TransitionTree::grow(root, a.alphabet().len(), cap, &mut stats, |state, d_u, x| {
        if cached.as_ref().map(|(s, _)| *s) != Some(state) {
            let dots = family.state_vectors().map(|mu| d_u.dot_raw(mu)).collect();
            cached = Some((state, dots));
        }
        let dots = &cached.as_ref().expect("filled above").1;
        let scalars: Vec<&Value> = (0..r).map(|s| &dots[successors[s][x]]).collect();
        meet_of_residua(l, n, family.state_vectors().zip(scalars.iter().copied()))
    });

    let result = match grown {
        Bounded::Complete(tree) => {
            let eps = family.state_vector(0);
            let terminal = tree.state_vectors().map(|d| d.dot_raw(eps)).collect();
            Bounded::Complete(tree.to_cdfa(l, a.alphabet(), terminal))
        }
        Bounded::CapExceeded { cap, states_built } => Bounded::CapExceeded { cap, states_built },
    };
    stats.elapsed = start.elapsed();
    Ok(DetOutcome { result, stats })
}

/// The minimal crisp-deterministic automaton equivalent to `a`, built from
/// the degrees of inclusion of the right languages of `a` into the left
/// derivatives of its language. `cap` bounds both the reverse Nerode phase
/// and the final automaton.
pub fn d_automaton(a: &FuzzyAutomaton, cap: usize) -> Result<DetOutcome> {
    let (grown, mut stats) = reverse_nerode_tree(a, cap)?;
    let rn = match grown {
        Bounded::Complete(tree) => tree,
        Bounded::CapExceeded { cap, states_built } => {
            return Ok(DetOutcome {
                result: Bounded::CapExceeded { cap, states_built },
                stats,
            })
        }
    };
    let out = inclusion_automaton_over(a, &rn, cap)?;
    stats.absorb(&out.stats);
    Ok(DetOutcome {
        result: out.result,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn rn_tree(a: &FuzzyAutomaton) -> TransitionTree {
        reverse_nerode_tree(a, 100).unwrap().0.complete().unwrap()
    }

    #[test]
    fn d_vectors_of_product_example() {
        let a = fixtures::product_example();
        let tree = rn_tree(&a);
        let states: Vec<FuzzyVector> = tree.state_vectors().cloned().collect();
        let d_eps = d_epsilon(&a, &states).unwrap();
        assert_eq!(d_eps.to_string(), "[1, 0, 0.5]");
        let d_x = d_step(&a, &d_eps, 0, &tree).unwrap();
        assert_eq!(d_x.to_string(), "[0.5, 0.5, 1]");
        let d_y = d_step(&a, &d_eps, 1, &tree).unwrap();
        assert_eq!(d_y.to_string(), "[1, 1, 1]");
        assert_eq!(d_step(&a, &d_x, 1, &tree).unwrap(), d_x);
        assert_eq!(d_step(&a, &d_x, 0, &tree).unwrap(), d_y);
        assert!(d_step(&a, &d_x, 2, &tree).is_err());
        assert!(d_epsilon(&a, &[FuzzyVector::zeros(a.lattice(), 2)]).is_err());
    }

    #[test]
    fn all_ones_family_gives_all_ones() {
        let a = fixtures::product_example();
        let l = a.lattice();
        // σ ∘ 1 = 1 here since σ(a_1) = 1.
        assert_eq!(
            d_epsilon(&a, &[FuzzyVector::ones(l, 3)]).unwrap(),
            FuzzyVector::ones(l, 3)
        );
    }

    #[test]
    fn d_automaton_of_product_example() {
        let a = fixtures::product_example();
        let c = d_automaton(&a, 100).unwrap().into_cdfa().unwrap();
        assert_eq!(c.states(), 3);
        let vectors: Vec<String> = c.labels().iter().map(|s| s.vector.to_string()).collect();
        assert_eq!(vectors, ["[1, 0, 0.5]", "[0.5, 0.5, 1]", "[1, 1, 1]"]);
        assert_eq!(c.transitions(), &[vec![1, 2], vec![2, 1], vec![2, 2]]);
        let terminal: Vec<String> = c.terminals().iter().map(|v| a.lattice().format_value(v)).collect();
        assert_eq!(terminal, ["0", "0.5", "1"]);
    }

    #[test]
    fn d_automaton_of_boolean_example() {
        let a = fixtures::boolean_example();
        assert_eq!(d_automaton(&a, 100).unwrap().into_cdfa().unwrap().states(), 4);
    }

    #[test]
    fn silent_automaton_has_one_state() {
        let a = fixtures::product_example();
        let l = a.lattice();
        let silent = FuzzyAutomaton::new(
            a.alphabet().clone(),
            FuzzyVector::zeros(l, 3),
            a.deltas().to_vec(),
            FuzzyVector::zeros(l, 3),
        )
        .unwrap();
        let c = d_automaton(&silent, 10).unwrap().into_cdfa().unwrap();
        assert_eq!(c.states(), 1);
        assert!(l.is_bottom(c.terminal(0)));
    }

    #[test]
    fn cap_applies_to_both_phases() {
        let a = fixtures::product_example();
        let out = d_automaton(&a, 3).unwrap();
        assert_eq!(
            out.result,
            Bounded::CapExceeded {
                cap: 3,
                states_built: 3
            }
        );
        assert!(d_automaton(&a, 4).unwrap().result.is_complete());
    }
}
