//! Seeded random automata for the integration suites. Everything is driven
//! by ChaCha so failures replay exactly.

#![allow(dead_code)]

use flanked::nfa::{Ffa, Nfa, StateId, Symbol};
use flanked::powerset::{self, Flankability, DEFAULT_MAX_CLASSES};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn symbols(k: usize) -> Vec<Symbol> {
    assert!(k <= 26);
    (0..k)
        .map(|i| Symbol::new(((b'a' + i as u8) as char).to_string()).unwrap())
        .collect()
}

/// A random trimmed automaton with 1..=max_states states over the first
/// `nsyms` letters. Density varies per draw so the corpus mixes sparse and
/// near-total automata (the latter are the universal candidates).
pub fn random_nfa(rng: &mut ChaCha8Rng, max_states: usize, nsyms: usize) -> Nfa {
    let syms = symbols(nsyms);
    loop {
        let n = rng.gen_range(1..=max_states);
        let density = rng.gen_range(0.05..0.75);
        let mut transitions = Vec::new();
        for q in 0..n {
            for s in &syms {
                for d in 0..n {
                    if rng.gen_bool(density) {
                        transitions.push((StateId(q), s.clone(), StateId(d)));
                    }
                }
            }
        }
        let mut initial: Vec<StateId> = (0..n).filter(|_| rng.gen_bool(0.3)).map(StateId).collect();
        if initial.is_empty() {
            initial.push(StateId(0));
        }
        let names = (0..n).map(|i| format!("s{i}")).collect();
        let a = Nfa::new(syms.clone(), names, transitions, initial)
            .expect("generated automaton is well-formed")
            .trim();
        if a.state_count() > 0 {
            return a;
        }
    }
}

/// A random automaton paired with a synthesized, verification-passing
/// flanking relation. Non-flankable draws are discarded.
pub fn random_verified_ffa(rng: &mut ChaCha8Rng, max_states: usize, nsyms: usize) -> Ffa {
    loop {
        let a = random_nfa(rng, max_states, nsyms);
        if let Flankability::Flankable(f) =
            powerset::is_flankable(&a, DEFAULT_MAX_CLASSES).expect("small automata stay under the class cap")
        {
            return Ffa::new(a, f).expect("synthesized relation fits its automaton");
        }
    }
}
