//! Input generators for the benchmarks.

use fuzzydet::{Alphabet, FuzzyAutomaton, FuzzyMatrix, FuzzyVector, LatticeKind, Value};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A degree drawn uniformly from a small grid: indices on chains, multiples
/// of `1/grid` on the unit interval.
pub fn random_value(rng: &mut StdRng, l: LatticeKind, grid: i64) -> Value {
    match l {
        LatticeKind::Chain(k) => Value::Index(rng.gen_range(0..=k)),
        LatticeKind::Boolean => Value::ratio(rng.gen_range(0..=1), 1),
        _ => Value::ratio(rng.gen_range(0..=grid), grid),
    }
}

/// A dense random automaton with `n` states over `m` symbols `s0, s1, ...`.
/// Roughly half of all degrees are zero.
pub fn random_automaton(seed: u64, l: LatticeKind, n: usize, m: usize) -> FuzzyAutomaton {
    let mut rng = StdRng::seed_from_u64(seed);
    let value = |rng: &mut StdRng| {
        if rng.gen_bool(0.5) {
            l.bottom()
        } else {
            random_value(rng, l, 4)
        }
    };
    let alphabet = Alphabet::new((0..m).map(|i| format!("s{i}"))).expect("distinct symbols");
    let sigma = FuzzyVector::new(l, (0..n).map(|_| value(&mut rng)).collect()).expect("grid values");
    let tau = FuzzyVector::new(l, (0..n).map(|_| value(&mut rng)).collect()).expect("grid values");
    let delta = (0..m)
        .map(|_| FuzzyMatrix::new(l, n, n, (0..n * n).map(|_| value(&mut rng)).collect()).expect("grid values"))
        .collect();
    FuzzyAutomaton::new(alphabet, sigma, delta, tau).expect("consistent shapes")
}
