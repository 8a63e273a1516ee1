//! Decision procedures that exploit a verified flanking function:
//! universality by inspecting the flank alone, and language inclusion by a
//! product construction that chases the error state `⊥`.
//!
//! Both procedures assume their flanked operand has already been verified
//! (see [`crate::powerset::is_flanked`]); verifying here would reintroduce
//! the subset construction these procedures exist to avoid.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::nfa::{Ffa, Nfa, StateId, Word};

/// Result of an inclusion check. `witness` is present exactly when the
/// inclusion fails, and is then a shortest word accepted by the left
/// automaton but not the right one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionResult {
    pub included: bool,
    pub witness: Option<Word>,
}

/// A verified flanked automaton is universal iff its flanking relation is
/// empty: any missing word would have a shortest rejected extension, which
/// the flank would have to certify.
///
/// Requires a non-empty initial set and every state reachable; both are
/// standing assumptions of the equivalence.
pub fn is_universal(f: &Ffa) -> Result<bool> {
    if f.automaton().initial().is_empty() {
        return Err(Error::EmptyInitial);
    }
    if !f.automaton().is_trimmed() {
        return Err(Error::NotTrimmed);
    }
    Ok(f.flank().is_empty())
}

/// Checks that every word accepted by `left` is accepted by the verified
/// flanked automaton `right`.
///
/// Explores the product of `left` and `right` lazily. A pair `(q1, q2)`
/// steps to all pairs of successors; it steps to the error state `⊥` when
/// `q1` can read a symbol that `q2` flanks. `⊥` is reachable iff the
/// inclusion fails, and the path to it (breadth-first, symbols in order)
/// yields the shortlex-least witness. At most `|Q1| · |Q2|` product pairs
/// exist, so the search is polynomial.
pub fn check_inclusion(left: &Nfa, right: &Ffa) -> Result<InclusionResult> {
    if left.alphabet() != right.automaton().alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let r = right.automaton();
    let nsyms = left.alphabet().len();

    // For each discovered pair, the pair and symbol it was first reached
    // from; None for the initial pairs.
    type Parents = HashMap<(usize, usize), Option<((usize, usize), usize)>>;

    let mut parent: Parents = HashMap::new();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for q1 in left.initial().iter() {
        for q2 in r.initial().iter() {
            let pair = (q1.0, q2.0);
            if let Entry::Vacant(e) = parent.entry(pair) {
                e.insert(None);
                queue.push(pair);
            }
        }
    }

    let witness_to = |pair: (usize, usize), k: usize, parent: &Parents| {
        let mut syms = vec![left.alphabet()[k].clone()];
        let mut cur = pair;
        while let Some(&Some((prev, pk))) = parent.get(&cur) {
            syms.push(left.alphabet()[pk].clone());
            cur = prev;
        }
        syms.reverse();
        Word::new(syms)
    };

    let mut head = 0;
    while head < queue.len() {
        let (q1, q2) = queue[head];
        head += 1;
        for k in 0..nsyms {
            let left_steps = left.has_transition(StateId(q1), k);
            if left_steps && right.flank().contains(StateId(q2), k) {
                let witness = witness_to((q1, q2), k, &parent);
                return Ok(InclusionResult { included: false, witness: Some(witness) });
            }
            if !left_steps {
                continue;
            }
            for s1 in left.successors(StateId(q1), k).iter() {
                for s2 in r.successors(StateId(q2), k).iter() {
                    let pair = (s1.0, s2.0);
                    if let Entry::Vacant(e) = parent.entry(pair) {
                        e.insert(Some(((q1, q2), k)));
                        queue.push(pair);
                    }
                }
            }
        }
    }
    Ok(InclusionResult { included: true, witness: None })
}
