//! Rabin-Scott subset construction and everything built on top of it:
//! verifying a flanking function, deciding flankability (with synthesis of a
//! flanking function), determinization and DFA minimization.
//!
//! The empty class is never materialized. Because every state is final, the
//! empty set of states is the unique rejecting sink, and a missing entry in
//! the class transition map encodes it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::nfa::{Ffa, FlankingFunction, Nfa, StateId, Symbol, Word};
use crate::stateset::StateSet;

/// Default cap on the number of classes explored before giving up with
/// [`Error::ClassLimit`]. The construction is exponential in the worst case;
/// the cap makes it fail predictably instead of hanging.
pub const DEFAULT_MAX_CLASSES: usize = 1 << 20;

/// Identifies a reachable class (a non-empty subset of states) of the
/// powerset automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId(pub usize);

/// The deterministic class automaton of an NFA: every reachable run set,
/// enumerated breadth-first in symbol order, with a partial transition map.
#[derive(Debug, Clone)]
pub struct PowersetAutomaton {
    alphabet: Vec<Symbol>,
    classes: Vec<StateSet>,
    /// `delta[c][k]`: successor class of class `c` on symbol index `k`,
    /// absent when the successor set is empty.
    delta: Vec<Vec<Option<usize>>>,
    /// Discovery edge of each class (parent class, symbol index); `None`
    /// for the initial class.
    parent: Vec<Option<(usize, usize)>>,
}

impl PowersetAutomaton {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, c: ClassId) -> &StateSet {
        &self.classes[c.0]
    }

    pub fn classes(&self) -> &[StateSet] {
        &self.classes
    }

    pub fn delta(&self, c: ClassId, k: usize) -> Option<ClassId> {
        self.delta[c.0][k].map(ClassId)
    }

    /// A shortest word reaching class `c` (ties broken by symbol order,
    /// which is how classes were discovered).
    pub fn access_word(&self, c: ClassId) -> Word {
        let mut syms = Vec::new();
        let mut cur = c.0;
        while let Some((p, k)) = self.parent[cur] {
            syms.push(self.alphabet[k].clone());
            cur = p;
        }
        syms.reverse();
        Word::new(syms)
    }
}

/// Explores the reachable classes of `a` breadth-first. Classes are numbered
/// in first-discovery order, so the result is canonical given the symbol
/// order. Fails with [`Error::ClassLimit`] beyond `max_classes` classes and
/// with [`Error::EmptyInitial`] when there is no initial state.
pub fn build(a: &Nfa, max_classes: usize) -> Result<PowersetAutomaton> {
    if a.initial().is_empty() {
        return Err(Error::EmptyInitial);
    }
    let nsyms = a.alphabet().len();
    let mut classes = vec![a.initial().clone()];
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    index.insert(a.initial().clone(), 0);
    let mut delta: Vec<Vec<Option<usize>>> = Vec::new();
    let mut parent = vec![None];
    let mut next = 0;
    while next < classes.len() {
        let mut row = vec![None; nsyms];
        for (k, cell) in row.iter_mut().enumerate() {
            let succ = a.step(&classes[next], k);
            if succ.is_empty() {
                continue;
            }
            let id = match index.get(&succ) {
                Some(&id) => id,
                None => {
                    if classes.len() >= max_classes {
                        return Err(Error::ClassLimit(max_classes));
                    }
                    let id = classes.len();
                    index.insert(succ.clone(), id);
                    classes.push(succ);
                    parent.push(Some((next, k)));
                    id
                }
            };
            *cell = Some(id);
        }
        delta.push(row);
        next += 1;
    }
    Ok(PowersetAutomaton {
        alphabet: a.alphabet().to_vec(),
        classes,
        delta,
        parent,
    })
}

/// Which direction of the flanking biconditional failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlankViolation {
    /// Some state of the run set flanks the symbol, yet the extension is
    /// still accepted.
    ForbiddenYetExtendable,
    /// The extension is rejected but no state of the run set flanks it.
    MissingFlank,
}

/// Outcome of [`is_flanked`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlankCheck {
    Flanked,
    Violation {
        /// A shortest word reaching the offending class.
        word: Word,
        symbol: Symbol,
        kind: FlankViolation,
    },
}

impl FlankCheck {
    pub fn is_flanked(&self) -> bool {
        matches!(self, FlankCheck::Flanked)
    }
}

/// Verifies the flanking condition by exploring the class automaton: for
/// every reachable class `C` and symbol `a`, `C` must meet `F⁻¹(a)` exactly
/// when `C` has no successor on `a`. On failure the witness is the
/// shortlex-first offending (word, symbol) pair.
pub fn is_flanked(f: &Ffa, max_classes: usize) -> Result<FlankCheck> {
    let a = f.automaton();
    let p = build(a, max_classes)?;
    for c in 0..p.class_count() {
        for k in 0..a.alphabet().len() {
            let forbidden = p.classes[c].intersects(f.flank().inverse(k));
            let extendable = p.delta[c][k].is_some();
            if forbidden == extendable {
                let kind = if forbidden {
                    FlankViolation::ForbiddenYetExtendable
                } else {
                    FlankViolation::MissingFlank
                };
                return Ok(FlankCheck::Violation {
                    word: p.access_word(ClassId(c)),
                    symbol: a.alphabet()[k].clone(),
                    kind,
                });
            }
        }
    }
    Ok(FlankCheck::Flanked)
}

/// `A⁻¹(a)`: every state reachable by some word that can still be extended
/// by `s`. Computed as the union of the classes that have an outgoing `s`
/// transition in the class automaton.
pub fn extendable_states(a: &Nfa, s: &Symbol, max_classes: usize) -> Result<StateSet> {
    let k = a
        .symbol_index(s)
        .ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))?;
    let p = build(a, max_classes)?;
    Ok(extendable_from(&p, k, a.state_count()))
}

fn extendable_from(p: &PowersetAutomaton, k: usize, nbits: usize) -> StateSet {
    let mut out = StateSet::empty(nbits);
    for (c, row) in p.delta.iter().enumerate() {
        if row[k].is_some() {
            out.union_with(&p.classes[c]);
        }
    }
    out
}

/// Outcome of [`is_flankable`].
#[derive(Debug, Clone)]
pub enum Flankability {
    /// The automaton is flankable; carries a flanking function that
    /// [`is_flanked`] accepts.
    Flankable(FlankingFunction),
    /// A witness that no flanking function exists: `word` is accepted,
    /// `word · symbol` is not, and the run set of `word` lies entirely
    /// inside the extendable states of `symbol`.
    NotFlankable { word: Word, symbol: Symbol },
}

impl Flankability {
    pub fn is_flankable(&self) -> bool {
        matches!(self, Flankability::Flankable(_))
    }
}

/// Decides whether `a` admits a flanking function. An automaton is flankable
/// iff every reachable class that lacks a successor on some symbol `s` also
/// contains a state outside `A⁻¹(s)`; such states can then carry the flank
/// pairs. The synthesized function takes every eligible pair: `(q, s)` for
/// each `q` outside `A⁻¹(s)` that occurs in a class with no `s` successor.
pub fn is_flankable(a: &Nfa, max_classes: usize) -> Result<Flankability> {
    let p = build(a, max_classes)?;
    let nbits = a.state_count();
    let nsyms = a.alphabet().len();
    let mut extendable = Vec::with_capacity(nsyms);
    let mut blocked = Vec::with_capacity(nsyms);
    for k in 0..nsyms {
        extendable.push(extendable_from(&p, k, nbits));
        let mut blk = StateSet::empty(nbits);
        for (c, row) in p.delta.iter().enumerate() {
            if row[k].is_none() {
                blk.union_with(&p.classes[c]);
            }
        }
        blocked.push(blk);
    }
    for c in 0..p.class_count() {
        for (k, ext) in extendable.iter().enumerate() {
            if p.delta[c][k].is_none() && p.classes[c].is_subset(ext) {
                return Ok(Flankability::NotFlankable {
                    word: p.access_word(ClassId(c)),
                    symbol: a.alphabet()[k].clone(),
                });
            }
        }
    }
    let mut pairs = Vec::new();
    for k in 0..nsyms {
        for q in blocked[k].without(&extendable[k]).iter() {
            pairs.push((q, a.alphabet()[k].clone()));
        }
    }
    Ok(Flankability::Flankable(FlankingFunction::new(a, pairs)?))
}

/// Deterministic automaton over the reachable classes; accepts the same
/// language as `a`. State names spell out the underlying class.
pub fn determinize(a: &Nfa, max_classes: usize) -> Result<Nfa> {
    let p = build(a, max_classes)?;
    let names: Vec<String> = p
        .classes
        .iter()
        .map(|c| {
            let members: Vec<&str> = c.iter().map(|q| a.state_name(q)).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let mut transitions = Vec::new();
    for (c, row) in p.delta.iter().enumerate() {
        for (k, succ) in row.iter().enumerate() {
            if let Some(d) = succ {
                transitions.push((StateId(c), a.alphabet()[k].clone(), StateId(*d)));
            }
        }
    }
    Nfa::new(a.alphabet().to_vec(), names, transitions, vec![StateId(0)])
}

/// Minimal DFA for the language of a deterministic, trimmed automaton.
///
/// Moore-style partition refinement. All states are final, so the initial
/// partition is a single block; states are distinguished only by which
/// symbols are defined and by the blocks of their successors. Missing
/// transitions act as edges to an implicit rejecting sink that is never
/// materialized.
pub fn minimize(a: &Nfa) -> Result<Nfa> {
    if !a.is_deterministic() {
        return Err(Error::NotDeterministic);
    }
    if !a.is_trimmed() {
        return Err(Error::NotTrimmed);
    }
    let n = a.state_count();
    if n == 0 {
        return Ok(a.clone());
    }
    let nsyms = a.alphabet().len();
    let succ_of = |q: usize, k: usize| -> Option<usize> {
        a.successors(StateId(q), k).iter().next().map(|s| s.0)
    };
    let mut block = vec![0usize; n];
    loop {
        // Signature: current block plus successor block (or sink) per symbol.
        // New block ids are assigned by first occurrence in state order, so
        // a fixed point compares equal.
        let mut fresh: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let mut next = vec![0usize; n];
        for q in 0..n {
            let sig: Vec<Option<usize>> = (0..nsyms)
                .map(|k| succ_of(q, k).map(|s| block[s]))
                .collect();
            let id = fresh.len();
            next[q] = *fresh.entry((block[q], sig)).or_insert(id);
        }
        if next == block {
            break;
        }
        block = next;
    }
    let nblocks = block.iter().copied().max().unwrap() + 1;
    // Representative = lowest-id member; its name labels the block.
    let mut repr = vec![usize::MAX; nblocks];
    for q in (0..n).rev() {
        repr[block[q]] = q;
    }
    let names = repr.iter().map(|&q| a.state_name(StateId(q)).to_string()).collect();
    let mut transitions = Vec::new();
    for (b, &q) in repr.iter().enumerate() {
        for k in 0..nsyms {
            if let Some(s) = succ_of(q, k) {
                transitions.push((StateId(b), a.alphabet()[k].clone(), StateId(block[s])));
            }
        }
    }
    let initial = a.initial().iter().map(|q| StateId(block[q.0])).collect();
    Nfa::new(a.alphabet().to_vec(), names, transitions, initial)
}
