//! Core automaton types: symbols, words, all-states-final NFAs, flanking
//! functions and the flanked pairs built from them.
//!
//! Every automaton here accepts a prefix-closed language: there is no
//! accepting set because every state is final. A word is accepted exactly
//! when its run set -- the set of states reachable while reading it from the
//! initial states -- is non-empty.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// An alphabet symbol. Equality and ordering follow the name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    /// Creates a symbol. Names must be non-empty and free of whitespace so
    /// they survive the whitespace-separated text format.
    pub fn new(name: impl Into<String>) -> Result<Symbol> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::BadSymbolName(name));
        }
        Ok(Symbol(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Index of a state, dense from 0 within one automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub usize);

/// A finite sequence of symbols; the empty word is `Word::empty()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }

    /// Parses a whitespace-separated list of symbol names. The empty (or
    /// all-whitespace) string is the empty word.
    pub fn parse(text: &str) -> Result<Word> {
        text.split_whitespace().map(Symbol::new).collect::<Result<_>>().map(Word)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Returns `self` extended by one symbol.
    pub fn extended(&self, s: &Symbol) -> Word {
        let mut syms = self.0.clone();
        syms.push(s.clone());
        Word(syms)
    }

    /// Shortlex order: by length first, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    /// Symbols separated by single spaces; the empty word prints as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(s.name())?;
        }
        Ok(())
    }
}

/// A nondeterministic finite automaton in which every state is final.
///
/// The alphabet is explicit and fixed: it may declare symbols that no
/// transition uses, and two automata only compose when their alphabets are
/// identical. Symbols are kept sorted by name, which fixes the canonical
/// order used everywhere (subset construction, printing, witnesses).
#[derive(Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Vec<Symbol>,
    state_names: Vec<String>,
    transitions: BTreeSet<(usize, usize, usize)>,
    initial: StateSet,
    /// Successor bitset per `state * |Σ| + symbol`.
    succ: Vec<StateSet>,
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::BadStateName(name.to_string()));
    }
    Ok(())
}

impl Nfa {
    /// Builds an automaton, validating that every transition and initial
    /// state refers to declared states and symbols. Unreachable states are
    /// accepted here; use [`Nfa::trim`] before running the algorithms that
    /// assume reachability.
    pub fn new(
        alphabet: Vec<Symbol>,
        state_names: Vec<String>,
        transitions: Vec<(StateId, Symbol, StateId)>,
        initial: Vec<StateId>,
    ) -> Result<Nfa> {
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut sorted = alphabet;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateSymbol(pair[0].name().to_string()));
            }
        }
        let mut seen = BTreeSet::new();
        for name in &state_names {
            check_name(name)?;
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateStateName(name.clone()));
            }
        }
        let n = state_names.len();
        let check_state = |q: StateId| {
            if q.0 >= n {
                Err(Error::StateOutOfRange { index: q.0, count: n })
            } else {
                Ok(())
            }
        };
        let mut triples = BTreeSet::new();
        for (src, sym, dst) in transitions {
            check_state(src)?;
            check_state(dst)?;
            let k = sorted
                .binary_search(&sym)
                .map_err(|_| Error::UnknownSymbol(sym.name().to_string()))?;
            triples.insert((src.0, k, dst.0));
        }
        let mut init = StateSet::empty(n);
        for q in initial {
            check_state(q)?;
            init.insert(q);
        }
        let mut succ = vec![StateSet::empty(n); n * sorted.len()];
        for &(src, k, dst) in &triples {
            succ[src * sorted.len() + k].insert(StateId(dst));
        }
        Ok(Nfa {
            alphabet: sorted,
            state_names,
            transitions: triples,
            initial: init,
            succ,
        })
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn symbol_index(&self, s: &Symbol) -> Option<usize> {
        self.alphabet.binary_search(s).ok()
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.state_names[q.0]
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn initial(&self) -> &StateSet {
        &self.initial
    }

    /// Transition triples in canonical `(source, symbol, target)` order.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, &Symbol, StateId)> + '_ {
        self.transitions
            .iter()
            .map(|&(src, k, dst)| (StateId(src), &self.alphabet[k], StateId(dst)))
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    /// Successors of `q` on the symbol with index `k`.
    pub fn successors(&self, q: StateId, k: usize) -> &StateSet {
        &self.succ[q.0 * self.alphabet.len() + k]
    }

    /// One simultaneous step of a set of states on symbol index `k`.
    pub fn step(&self, set: &StateSet, k: usize) -> StateSet {
        let mut out = StateSet::empty(self.state_count());
        for q in set.iter() {
            out.union_with(self.successors(q, k));
        }
        out
    }

    /// The run set `A(u)`: states reachable from the initial states by
    /// reading `u`. Defined inductively: the run set of the empty word is
    /// the initial set, and each symbol steps the whole set at once.
    pub fn run_set(&self, u: &Word) -> Result<StateSet> {
        let mut cur = self.initial.clone();
        for s in u.symbols() {
            let k = self
                .symbol_index(s)
                .ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))?;
            cur = self.step(&cur, k);
        }
        Ok(cur)
    }

    /// A word is accepted iff its run set is non-empty.
    pub fn accepts(&self, u: &Word) -> Result<bool> {
        Ok(!self.run_set(u)?.is_empty())
    }

    fn reachable(&self) -> StateSet {
        let mut seen = self.initial.clone();
        let mut queue: Vec<StateId> = self.initial.iter().collect();
        while let Some(q) = queue.pop() {
            for k in 0..self.alphabet.len() {
                for q2 in self.successors(q, k).iter() {
                    if !seen.contains(q2) {
                        seen.insert(q2);
                        queue.push(q2);
                    }
                }
            }
        }
        seen
    }

    /// True when every state is reachable from the initial set.
    pub fn is_trimmed(&self) -> bool {
        self.reachable().len() == self.state_count()
    }

    /// Removes unreachable states, renumbering the survivors densely while
    /// preserving their relative order. Also returns the old-to-new id map.
    pub(crate) fn trim_with_map(&self) -> (Nfa, Vec<Option<usize>>) {
        let keep = self.reachable();
        let mut map = vec![None; self.state_count()];
        let mut names = Vec::new();
        for q in keep.iter() {
            map[q.0] = Some(names.len());
            names.push(self.state_names[q.0].clone());
        }
        let transitions = self
            .transitions
            .iter()
            .filter_map(|&(src, k, dst)| {
                Some((StateId(map[src]?), self.alphabet[k].clone(), StateId(map[dst]?)))
            })
            .collect();
        let initial = self.initial.iter().map(|q| StateId(map[q.0].unwrap())).collect();
        let trimmed = Nfa::new(self.alphabet.clone(), names, transitions, initial)
            .expect("trimming preserves well-formedness");
        (trimmed, map)
    }

    /// Removes unreachable states.
    pub fn trim(&self) -> Nfa {
        self.trim_with_map().0
    }

    /// Deterministic: at most one initial state and at most one successor
    /// per state and symbol.
    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1 && self.succ.iter().all(|s| s.len() <= 1)
    }

    pub fn has_transition(&self, q: StateId, k: usize) -> bool {
        !self.successors(q, k).is_empty()
    }

    /// Returns the same automaton over the alphabet extended with `extra`
    /// symbols (which no transition uses). Useful before composing automata
    /// whose alphabets differ only by unused symbols.
    pub fn extend_alphabet(&self, extra: &[Symbol]) -> Result<Nfa> {
        let mut alphabet = self.alphabet.clone();
        for s in extra {
            if !alphabet.contains(s) {
                alphabet.push(s.clone());
            }
        }
        let transitions = self
            .transitions()
            .map(|(src, sym, dst)| (src, sym.clone(), dst))
            .collect();
        Nfa::new(
            alphabet,
            self.state_names.clone(),
            transitions,
            self.initial.iter().collect(),
        )
    }
}

impl fmt::Debug for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Nfa")
            .field("alphabet", &self.alphabet)
            .field("states", &self.state_names)
            .field("initial", &self.initial)
            .field("transitions", &self.transitions)
            .finish()
    }
}

/// The flanking relation `F ⊆ Q × Σ`. A pair `(q, a)` certifies that no
/// accepted word whose run set contains `q` can be extended by `a`.
#[derive(Clone, PartialEq, Eq)]
pub struct FlankingFunction {
    nbits: usize,
    nsyms: usize,
    pairs: BTreeSet<(usize, usize)>,
    /// `inverse[k]` is the set of states that forbid symbol `k`.
    inverse: Vec<StateSet>,
}

impl FlankingFunction {
    /// Builds the relation, validating every pair against `a`.
    pub fn new(a: &Nfa, pairs: Vec<(StateId, Symbol)>) -> Result<FlankingFunction> {
        let n = a.state_count();
        let nsyms = a.alphabet().len();
        let mut set = BTreeSet::new();
        let mut inverse = vec![StateSet::empty(n); nsyms];
        for (q, sym) in pairs {
            if q.0 >= n {
                return Err(Error::StateOutOfRange { index: q.0, count: n });
            }
            let k = a
                .symbol_index(&sym)
                .ok_or_else(|| Error::UnknownSymbol(sym.name().to_string()))?;
            set.insert((q.0, k));
            inverse[k].insert(q);
        }
        Ok(FlankingFunction { nbits: n, nsyms, pairs: set, inverse })
    }

    pub fn empty(a: &Nfa) -> FlankingFunction {
        FlankingFunction::new(a, Vec::new()).expect("empty relation is always valid")
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains(&self, q: StateId, k: usize) -> bool {
        self.pairs.contains(&(q.0, k))
    }

    /// `F⁻¹(a)` for the symbol with index `k`.
    pub fn inverse(&self, k: usize) -> &StateSet {
        &self.inverse[k]
    }

    /// Pairs in canonical `(state, symbol)` order, as raw indices.
    pub fn raw_pairs(&self) -> impl Iterator<Item = (StateId, usize)> + '_ {
        self.pairs.iter().map(|&(q, k)| (StateId(q), k))
    }

    fn fits(&self, a: &Nfa) -> bool {
        self.nbits == a.state_count() && self.nsyms == a.alphabet().len()
    }
}

impl fmt::Debug for FlankingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs.iter()).finish()
    }
}

/// A candidate flanked automaton: an all-states-final NFA paired with a
/// flanking relation.
///
/// Constructing an `Ffa` does not verify the flanking condition (that check
/// costs a subset construction); use [`crate::powerset::is_flanked`] to
/// verify a candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ffa {
    automaton: Nfa,
    flank: FlankingFunction,
}

impl Ffa {
    pub fn new(automaton: Nfa, flank: FlankingFunction) -> Result<Ffa> {
        if !flank.fits(&automaton) {
            return Err(Error::FlankMismatch);
        }
        Ok(Ffa { automaton, flank })
    }

    pub fn automaton(&self) -> &Nfa {
        &self.automaton
    }

    pub fn flank(&self) -> &FlankingFunction {
        &self.flank
    }

    pub fn into_parts(self) -> (Nfa, FlankingFunction) {
        (self.automaton, self.flank)
    }

    /// Flank pairs with symbols resolved, in canonical order.
    pub fn flank_pairs(&self) -> impl Iterator<Item = (StateId, &Symbol)> + '_ {
        self.flank
            .raw_pairs()
            .map(|(q, k)| (q, &self.automaton.alphabet()[k]))
    }

    /// `F⁻¹(a)`: the states that forbid `a`.
    pub fn inverse_flank(&self, a: &Symbol) -> Result<&StateSet> {
        let k = self
            .automaton
            .symbol_index(a)
            .ok_or_else(|| Error::UnknownSymbol(a.name().to_string()))?;
        Ok(self.flank.inverse(k))
    }

    /// Symbols forbidden after the accepted word `u`: those flanked by some
    /// state of the run set `A(u)`.
    pub fn forbidden_after(&self, u: &Word) -> Result<BTreeSet<Symbol>> {
        let run = self.automaton.run_set(u)?;
        if run.is_empty() {
            return Err(Error::NotAccepted);
        }
        let mut out = BTreeSet::new();
        for (k, sym) in self.automaton.alphabet().iter().enumerate() {
            if run.intersects(self.flank.inverse(k)) {
                out.insert(sym.clone());
            }
        }
        Ok(out)
    }

    /// Trims the automaton and restricts the flank to surviving states.
    pub fn trim(&self) -> Ffa {
        let (nfa, map) = self.automaton.trim_with_map();
        let pairs = self
            .flank
            .raw_pairs()
            .filter_map(|(q, k)| {
                Some((StateId(map[q.0]?), self.automaton.alphabet()[k].clone()))
            })
            .collect();
        let flank = FlankingFunction::new(&nfa, pairs).expect("trimmed pairs stay valid");
        Ffa { automaton: nfa, flank }
    }
}

/// Relabel mapping used by [`crate::compose::relabel`]: total map over an
/// alphabet, given as source-to-image symbol pairs.
pub type SymbolMap = BTreeMap<Symbol, Symbol>;
