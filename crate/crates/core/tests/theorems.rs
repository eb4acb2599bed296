mod common;

use common::{random_automaton, words};
use fuzzydet::determinize::{
    brzozowski, check_left_invariant, d_automaton, nerode, psi_d_automaton, reverse_nerode, reverse_nerode_tree, run,
};
use fuzzydet::{fixtures, Bounded, Cdfa, Equivalence, FuzzyAutomaton, FuzzyMatrix, LatticeKind, Method, Value};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const CAP: usize = 2_000;

fn complete(c: fuzzydet::Result<fuzzydet::DetOutcome>) -> Option<Cdfa> {
    c.unwrap().into_cdfa()
}

fn instances(seed: u64, per_lattice: usize, lattices: &[LatticeKind], max_n: usize) -> Vec<FuzzyAutomaton> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = vec![fixtures::product_example(), fixtures::boolean_example()];
    for &l in lattices {
        for _ in 0..per_lattice {
            let n = rng.gen_range(1..=max_n);
            out.push(random_automaton(&mut rng, l, n, 2));
        }
    }
    out
}

const FINITE: [LatticeKind; 4] = [
    LatticeKind::Godel,
    LatticeKind::Chain(4),
    LatticeKind::Lukasiewicz,
    LatticeKind::Boolean,
];

#[test]
fn inclusion_vectors_are_truncated_meets_over_right_vectors() {
    for a in instances(11, 8, &FINITE, 4) {
        let l = a.lattice();
        let tree = reverse_nerode_tree(&a, CAP).unwrap().0.complete().unwrap();
        let depth = tree.vertices().iter().map(|v| v.word.len()).max().unwrap();
        let ws = words(a.alphabet().len(), depth);
        let c = complete(d_automaton(&a, CAP)).unwrap();
        for label in c.labels() {
            let sigma_u = a.left_vector(&label.word).unwrap();
            for s in 0..a.states() {
                let mut meet = l.top();
                for w in &ws {
                    let tau_w = a.right_vector(w).unwrap();
                    let r = l.resid(tau_w.get(s), &sigma_u.dot(&tau_w).unwrap()).unwrap();
                    meet = l.meet(&meet, &r).unwrap();
                }
                assert_eq!(&meet, label.vector.get(s));
            }
        }
    }
}

#[test]
fn inclusion_automaton_is_no_larger_than_nerode_and_matches_double_reversal() {
    let mut strict = 0;
    for a in instances(12, 15, &FINITE, 4) {
        let d = complete(d_automaton(&a, CAP)).unwrap();
        let b = complete(brzozowski(&a, CAP)).unwrap();
        assert_eq!(d.states(), b.states());
        assert!(d.equivalent(&b).unwrap().is_equivalent());
        if let Some(n) = complete(nerode(&a, CAP)) {
            assert!(d.states() <= n.states());
            assert!(d.equivalent(&n).unwrap().is_equivalent());
            strict += usize::from(d.states() < n.states());
        }
    }
    assert!(strict > 0, "suite never exercises a non-minimal Nerode automaton");
}

#[test]
fn constructions_are_deterministic() {
    for a in instances(13, 5, &FINITE, 4) {
        for m in Method::ALL {
            assert_eq!(
                run(&a, m, None, CAP).unwrap().result,
                run(&a, m, None, CAP).unwrap().result,
                "{}",
                m.name()
            );
        }
    }
}

#[test]
fn reverse_nerode_recognizes_the_reversed_language() {
    for a in instances(14, 6, &FINITE, 4) {
        let r = complete(reverse_nerode(&a, CAP)).unwrap();
        for w in words(2, 5) {
            let rev: Vec<usize> = w.iter().rev().copied().collect();
            assert_eq!(r.evaluate(&w).unwrap(), a.evaluate(&rev).unwrap());
        }
    }
}

#[test]
fn goguen_instances_within_the_cap_agree_with_the_input() {
    let mut rng = StdRng::seed_from_u64(15);
    let mut completed = 0;
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let a = random_automaton(&mut rng, LatticeKind::Goguen, n, 2);
        let Bounded::Complete(d) = d_automaton(&a, 300).unwrap().result else {
            continue;
        };
        completed += 1;
        for w in words(2, 5) {
            assert_eq!(d.evaluate(&w).unwrap(), a.evaluate(&w).unwrap());
        }
        if let Some(n) = complete(nerode(&a, 300)) {
            assert!(d.states() <= n.states());
        }
    }
    assert!(completed >= 10, "only {completed} Goguen instances completed");
}

/// Every reflexive relation over chain(3) on an `n`-state automaton.
fn reflexive_relations(n: usize) -> impl Iterator<Item = FuzzyMatrix> {
    let off = n * n - n;
    (0..4usize.pow(off as u32)).map(move |mut code| {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    entries.push(Value::Index(3));
                } else {
                    entries.push(Value::Index((code % 4) as u32));
                    code /= 4;
                }
            }
        }
        FuzzyMatrix::new(LatticeKind::Chain(3), n, n, entries).unwrap()
    })
}

#[test]
fn every_left_invariant_relation_preserves_the_language() {
    let l = LatticeKind::Chain(3);
    let mut rng = StdRng::seed_from_u64(16);
    let mut non_identity = 0;
    for round in 0..12 {
        let n = if round < 8 { 2 } else { 3 };
        let a = random_automaton(&mut rng, l, n, 2);
        let d = complete(d_automaton(&a, CAP)).unwrap();
        let mut join: Option<FuzzyMatrix> = None;
        for psi in reflexive_relations(n) {
            if !check_left_invariant(&a, &psi).unwrap().holds() {
                assert!(psi_d_automaton(&a, &psi, CAP).is_err());
                continue;
            }
            if psi != FuzzyMatrix::identity(l, n) {
                non_identity += 1;
            }
            let p = complete(psi_d_automaton(&a, &psi, CAP)).unwrap();
            assert_eq!(p.equivalent(&d).unwrap(), Equivalence::Equivalent);
            assert!(p.states() >= d.states());
            join = Some(match join {
                None => psi,
                Some(j) => {
                    let entries = j
                        .entries()
                        .iter()
                        .zip(psi.entries())
                        .map(|(x, y)| l.join(x, y).unwrap())
                        .collect();
                    FuzzyMatrix::new(l, n, n, entries).unwrap()
                }
            });
        }
        // left invariant relations are closed under joins, so the greatest one was enumerated
        let greatest = join.expect("identity is always left invariant");
        assert!(check_left_invariant(&a, &greatest).unwrap().holds());
        let p = complete(psi_d_automaton(&a, &greatest, CAP)).unwrap();
        assert!(p.equivalent(&d).unwrap().is_equivalent());
    }
    assert!(non_identity > 0, "no non-identity relation was exercised");
}

#[test]
fn witnesses_are_shortlex_least() {
    let mut rng = StdRng::seed_from_u64(17);
    let mut distinguished = 0;
    for _ in 0..60 {
        let l = [LatticeKind::Chain(2), LatticeKind::Boolean][rng.gen_range(0..2)];
        let (na, nb) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random_automaton(&mut rng, l, na, 2);
        let b = random_automaton(&mut rng, l, nb, 2);
        let ca = complete(d_automaton(&a, CAP)).unwrap();
        let cb = complete(nerode(&b, CAP)).unwrap();
        match ca.equivalent(&cb).unwrap() {
            Equivalence::Equivalent => {
                for w in words(2, 7) {
                    assert_eq!(a.evaluate(&w).unwrap(), b.evaluate(&w).unwrap());
                }
            }
            Equivalence::Distinguished(witness) => {
                distinguished += 1;
                assert_ne!(a.evaluate(&witness).unwrap(), b.evaluate(&witness).unwrap());
                for w in words(2, witness.len()) {
                    if w == witness {
                        break;
                    }
                    assert_eq!(
                        a.evaluate(&w).unwrap(),
                        b.evaluate(&w).unwrap(),
                        "{w:?} precedes {witness:?}"
                    );
                }
            }
        }
    }
    assert!(distinguished > 0);
}
