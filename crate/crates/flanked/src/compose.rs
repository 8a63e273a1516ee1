//! Closure constructions on flanked automata: intersection, quotient and
//! union, plus symbol relabeling (which deliberately returns a plain NFA
//! because flankability does not survive non-injective relabeling).
//!
//! All products are built reachable-only by a breadth-first exploration with
//! symbols in canonical order, so the state numbering of each result is
//! deterministic. When a sink state `⊤` is needed it receives the last id.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::nfa::{Ffa, FlankingFunction, Nfa, StateId, Symbol, SymbolMap};

fn require_same_alphabet(a: &Nfa, b: &Nfa) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

/// Appends a counter to duplicated names. Product names are normally unique
/// already; this only matters when input names themselves contain commas.
fn uniquify(names: Vec<String>) -> Vec<String> {
    let mut seen: HashMap<String, usize> = HashMap::new();
    names
        .into_iter()
        .map(|name| match seen.entry(name.clone()) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(0);
                name
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += 1;
                format!("{}_{}", name, e.get())
            }
        })
        .collect()
}

/// Reachable pair exploration shared by the product constructions.
struct PairSpace {
    ids: HashMap<(usize, usize), usize>,
    pairs: Vec<(usize, usize)>,
}

impl PairSpace {
    fn new(a1: &Nfa, a2: &Nfa) -> PairSpace {
        let mut space = PairSpace { ids: HashMap::new(), pairs: Vec::new() };
        for q1 in a1.initial().iter() {
            for q2 in a2.initial().iter() {
                space.intern((q1.0, q2.0));
            }
        }
        space
    }

    fn intern(&mut self, pair: (usize, usize)) -> usize {
        match self.ids.get(&pair) {
            Some(&id) => id,
            None => {
                let id = self.pairs.len();
                self.ids.insert(pair, id);
                self.pairs.push(pair);
                id
            }
        }
    }
}

/// Synchronous product: accepts exactly the words accepted by both inputs.
/// A pair flanks a symbol when either component does. With both inputs
/// verified flanked, the result is flanked; it has at most
/// `|Q1| · |Q2|` states.
pub fn intersect(f1: &Ffa, f2: &Ffa) -> Result<Ffa> {
    let (a1, a2) = (f1.automaton(), f2.automaton());
    require_same_alphabet(a1, a2)?;
    let nsyms = a1.alphabet().len();

    let mut space = PairSpace::new(a1, a2);
    let initial_count = space.pairs.len();
    let mut transitions = Vec::new();
    let mut head = 0;
    while head < space.pairs.len() {
        let (q1, q2) = space.pairs[head];
        for k in 0..nsyms {
            for s1 in a1.successors(StateId(q1), k).iter() {
                for s2 in a2.successors(StateId(q2), k).iter() {
                    let dst = space.intern((s1.0, s2.0));
                    transitions.push((StateId(head), a1.alphabet()[k].clone(), StateId(dst)));
                }
            }
        }
        head += 1;
    }

    let names = uniquify(
        space
            .pairs
            .iter()
            .map(|&(q1, q2)| format!("{},{}", a1.state_name(StateId(q1)), a2.state_name(StateId(q2))))
            .collect(),
    );
    let initial = (0..initial_count).map(StateId).collect();
    let nfa = Nfa::new(a1.alphabet().to_vec(), names, transitions, initial)?;

    let mut flank_pairs = Vec::new();
    for (id, &(q1, q2)) in space.pairs.iter().enumerate() {
        for k in 0..nsyms {
            if f1.flank().contains(StateId(q1), k) || f2.flank().contains(StateId(q2), k) {
                flank_pairs.push((StateId(id), a1.alphabet()[k].clone()));
            }
        }
    }
    let flank = FlankingFunction::new(&nfa, flank_pairs)?;
    Ffa::new(nfa, flank)
}

/// What [`quotient_parts`] hands back: the product automaton, its flank
/// pairs as raw (state, symbol index) pairs, and the id of `⊤` if it was
/// materialized.
type QuotientParts = (Nfa, Vec<(usize, usize)>, Option<usize>);

fn quotient_parts(
    a1: &Nfa,
    left_flank: Option<&FlankingFunction>,
    f2: &Ffa,
) -> Result<QuotientParts> {
    let a2 = f2.automaton();
    require_same_alphabet(a1, a2)?;
    let nsyms = a1.alphabet().len();

    let mut space = PairSpace::new(a1, a2);
    let initial_count = space.pairs.len();
    let mut transitions: Vec<(usize, usize, Option<usize>)> = Vec::new();
    let mut top_used = false;
    let mut head = 0;
    while head < space.pairs.len() {
        let (q1, q2) = space.pairs[head];
        for k in 0..nsyms {
            if f2.flank().contains(StateId(q2), k) {
                // The right side certifies the extension is outside its
                // language, so the quotient may accept anything from here.
                transitions.push((head, k, None));
                top_used = true;
                continue;
            }
            // No rule when the left side flanks the symbol while the right
            // side can step: such extensions leave the quotient.
            for s1 in a1.successors(StateId(q1), k).iter() {
                for s2 in a2.successors(StateId(q2), k).iter() {
                    let dst = space.intern((s1.0, s2.0));
                    transitions.push((head, k, Some(dst)));
                }
            }
        }
        head += 1;
    }

    let mut names: Vec<String> = space
        .pairs
        .iter()
        .map(|&(q1, q2)| format!("{},{}", a1.state_name(StateId(q1)), a2.state_name(StateId(q2))))
        .collect();
    let top = if top_used {
        let id = names.len();
        names.push("top".to_string());
        Some(id)
    } else {
        None
    };
    let names = uniquify(names);

    let mut triples = Vec::new();
    for (src, k, dst) in transitions {
        let dst = dst.unwrap_or_else(|| top.expect("top interned when used"));
        triples.push((StateId(src), a1.alphabet()[k].clone(), StateId(dst)));
    }
    if let Some(t) = top {
        for k in 0..nsyms {
            triples.push((StateId(t), a1.alphabet()[k].clone(), StateId(t)));
        }
    }
    let initial = (0..initial_count).map(StateId).collect();
    let nfa = Nfa::new(a1.alphabet().to_vec(), names, triples, initial)?;

    // Only used when a left flank is supplied.
    let mut flank_pairs = Vec::new();
    if let Some(fl) = left_flank {
        for (id, &(q1, q2)) in space.pairs.iter().enumerate() {
            for k in 0..nsyms {
                if fl.contains(StateId(q1), k) && a2.has_transition(StateId(q2), k) {
                    flank_pairs.push((id, k));
                }
            }
        }
    }
    Ok((nfa, flank_pairs, top))
}

/// Quotient `f1 / f2`: the largest prefix-closed language whose
/// intersection with `f2`'s language stays inside `f1`'s.
///
/// Product of the two automata plus a sink `⊤` entered whenever `f2` flanks
/// a symbol (from there every word is allowed). There is deliberately no
/// transition when `f1` flanks a symbol that `f2` can still read: those
/// extensions are exactly the ones the quotient must exclude, and they make
/// up the result's flanking function. At most `|Q1| · |Q2| + 1` states.
///
/// `f2` must be verified flanked. `f1`'s flank is only used to flank the
/// result; see [`quotient_nfa`] for a left operand without one.
pub fn quotient(f1: &Ffa, f2: &Ffa) -> Result<Ffa> {
    let (nfa, flank_pairs, _top) = quotient_parts(f1.automaton(), Some(f1.flank()), f2)?;
    let pairs = flank_pairs
        .into_iter()
        .map(|(q, k)| (StateId(q), nfa.alphabet()[k].clone()))
        .collect();
    let flank = FlankingFunction::new(&nfa, pairs)?;
    Ffa::new(nfa, flank)
}

/// Quotient of a plain NFA by a verified flanked automaton. Same
/// construction as [`quotient`], but with no left flank there is nothing to
/// flank the result with, and the result may not even be flankable.
pub fn quotient_nfa(left: &Nfa, f2: &Ffa) -> Result<Nfa> {
    Ok(quotient_parts(left, None, f2)?.0)
}

/// Union product: accepts the words accepted by either input. Pairs track
/// both sides while both are alive; once one side dies on a flanked symbol
/// the survivor is paired with the sink `⊤`. The pair `(⊤, ⊤)` can never
/// arise. A pair flanks a symbol when both components do (or the surviving
/// component does, on one-sided pairs). At most `(|Q1|+1) · (|Q2|+1)`
/// states. Both inputs must be verified flanked.
pub fn union(f1: &Ffa, f2: &Ffa) -> Result<Ffa> {
    let (a1, a2) = (f1.automaton(), f2.automaton());
    require_same_alphabet(a1, a2)?;
    let nsyms = a1.alphabet().len();

    // None encodes ⊤ on that side; (None, None) is never created.
    type UState = (Option<usize>, Option<usize>);
    let mut ids: HashMap<UState, usize> = HashMap::new();
    let mut states: Vec<UState> = Vec::new();
    let intern = |ids: &mut HashMap<UState, usize>, states: &mut Vec<UState>, s: UState| {
        match ids.get(&s) {
            Some(&id) => id,
            None => {
                let id = states.len();
                ids.insert(s, id);
                states.push(s);
                id
            }
        }
    };
    for q1 in a1.initial().iter() {
        for q2 in a2.initial().iter() {
            intern(&mut ids, &mut states, (Some(q1.0), Some(q2.0)));
        }
    }
    let initial_count = states.len();

    let mut transitions = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let (l, r) = states[head];
        for k in 0..nsyms {
            match (l, r) {
                (Some(q1), Some(q2)) => {
                    for s1 in a1.successors(StateId(q1), k).iter() {
                        for s2 in a2.successors(StateId(q2), k).iter() {
                            let dst = intern(&mut ids, &mut states, (Some(s1.0), Some(s2.0)));
                            transitions.push((head, k, dst));
                        }
                    }
                    if f2.flank().contains(StateId(q2), k) {
                        for s1 in a1.successors(StateId(q1), k).iter() {
                            let dst = intern(&mut ids, &mut states, (Some(s1.0), None));
                            transitions.push((head, k, dst));
                        }
                    }
                    if f1.flank().contains(StateId(q1), k) {
                        for s2 in a2.successors(StateId(q2), k).iter() {
                            let dst = intern(&mut ids, &mut states, (None, Some(s2.0)));
                            transitions.push((head, k, dst));
                        }
                    }
                }
                (Some(q1), None) => {
                    for s1 in a1.successors(StateId(q1), k).iter() {
                        let dst = intern(&mut ids, &mut states, (Some(s1.0), None));
                        transitions.push((head, k, dst));
                    }
                }
                (None, Some(q2)) => {
                    for s2 in a2.successors(StateId(q2), k).iter() {
                        let dst = intern(&mut ids, &mut states, (None, Some(s2.0)));
                        transitions.push((head, k, dst));
                    }
                }
                (None, None) => unreachable!("(top, top) is never constructed"),
            }
        }
        head += 1;
    }

    let name_of = |side: Option<usize>, a: &Nfa| match side {
        Some(q) => a.state_name(StateId(q)).to_string(),
        None => "top".to_string(),
    };
    let names = uniquify(
        states
            .iter()
            .map(|&(l, r)| format!("{},{}", name_of(l, a1), name_of(r, a2)))
            .collect(),
    );
    let triples = transitions
        .into_iter()
        .map(|(src, k, dst)| (StateId(src), a1.alphabet()[k].clone(), StateId(dst)))
        .collect();
    let initial = (0..initial_count).map(StateId).collect();
    let nfa = Nfa::new(a1.alphabet().to_vec(), names, triples, initial)?;

    let mut flank_pairs = Vec::new();
    for (id, &(l, r)) in states.iter().enumerate() {
        for k in 0..nsyms {
            let flanked = match (l, r) {
                (Some(q1), Some(q2)) => {
                    f1.flank().contains(StateId(q1), k) && f2.flank().contains(StateId(q2), k)
                }
                (Some(q1), None) => f1.flank().contains(StateId(q1), k),
                (None, Some(q2)) => f2.flank().contains(StateId(q2), k),
                (None, None) => unreachable!(),
            };
            if flanked {
                flank_pairs.push((StateId(id), nfa.alphabet()[k].clone()));
            }
        }
    }
    let flank = FlankingFunction::new(&nfa, flank_pairs)?;
    Ffa::new(nfa, flank)
}

/// Applies a symbol substitution to the automaton of `f`. The mapping must
/// be total on the alphabet; the result ranges over the image alphabet.
/// Returns a plain NFA: a non-injective substitution can merge transitions
/// and destroy flankability, so no flank is carried over.
pub fn relabel(f: &Ffa, mapping: &SymbolMap) -> Result<Nfa> {
    let a = f.automaton();
    let mut image: Vec<Symbol> = Vec::new();
    for s in a.alphabet() {
        let to = mapping
            .get(s)
            .ok_or_else(|| Error::Input(format!("relabel mapping is missing symbol {:?}", s.name())))?;
        if !image.contains(to) {
            image.push(to.clone());
        }
    }
    let transitions = a
        .transitions()
        .map(|(src, sym, dst)| (src, mapping[sym].clone(), dst))
        .collect();
    Nfa::new(
        image,
        a.state_names().to_vec(),
        transitions,
        a.initial().iter().collect(),
    )
}
