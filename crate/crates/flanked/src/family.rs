//! A family of flanked automata that are exponentially more succinct than
//! any equivalent DFA.
//!
//! The `n`-th instance accepts, over the symbols `1..n` plus the markers
//! `#1..#n`, every marker-free word together with every word that ends in
//! `#i` after mentioning `i` at least once. A (2n+2)-state flanked automaton
//! recognizes this, while a DFA must remember the subset of symbols seen so
//! far and therefore needs at least `2^n` states.

use crate::error::{Error, Result};
use crate::nfa::{Ffa, FlankingFunction, Nfa, StateId, Symbol, Word};

/// Generation is linear, but the determinization-based checks downstream
/// blow up; the cap keeps the CLI at desk scale.
pub const MAX_FAMILY_N: usize = 12;

/// One instance of the succinctness family.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    n: usize,
    ffa: Ffa,
}

impl FamilyInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ffa(&self) -> &Ffa {
        &self.ffa
    }

    pub fn into_ffa(self) -> Ffa {
        self.ffa
    }
}

fn digit(i: usize) -> Symbol {
    Symbol::new(i.to_string()).expect("numerals are valid symbol names")
}

fn marker(i: usize) -> Symbol {
    Symbol::new(format!("#{i}")).expect("markers are valid symbol names")
}

/// Builds the `n`-th instance: initial state `p`, guess states `p_i`
/// (symbol `i` not seen yet) and `q_i` (seen), and a sink `r` entered on the
/// matching marker. The flank forbids `#i` at `p` and `p_i`, and everything
/// at `r`.
///
/// For `n = 1` the guess state `p1` is unreachable (there is no second
/// symbol to loop on), so the instance is not trimmed; the flank check
/// ignores unreachable states and still accepts it.
pub fn generate(n: usize) -> Result<FamilyInstance> {
    if n < 1 {
        return Err(Error::Input("family index must be at least 1".into()));
    }
    if n > MAX_FAMILY_N {
        return Err(Error::Input(format!(
            "family index {n} exceeds the cap of {MAX_FAMILY_N}"
        )));
    }
    let alphabet: Vec<Symbol> = (1..=n).map(digit).chain((1..=n).map(marker)).collect();

    // State layout: p = 0, p_i = i, q_i = n + i, r = 2n + 1.
    let p = StateId(0);
    let p_ = |i: usize| StateId(i);
    let q_ = |i: usize| StateId(n + i);
    let r = StateId(2 * n + 1);
    let mut names = vec!["p".to_string()];
    names.extend((1..=n).map(|i| format!("p{i}")));
    names.extend((1..=n).map(|i| format!("q{i}")));
    names.push("r".to_string());

    let mut transitions = Vec::new();
    for i in 1..=n {
        transitions.push((p, digit(i), q_(i)));
        transitions.push((p_(i), digit(i), q_(i)));
        transitions.push((q_(i), digit(i), q_(i)));
        for j in (1..=n).filter(|&j| j != i) {
            transitions.push((p, digit(j), p_(i)));
            transitions.push((p_(i), digit(j), p_(i)));
            transitions.push((q_(i), digit(j), q_(i)));
        }
        transitions.push((q_(i), marker(i), r));
    }

    let nfa = Nfa::new(alphabet.clone(), names, transitions, vec![p])?;

    let mut flank_pairs = Vec::new();
    for i in 1..=n {
        flank_pairs.push((p, marker(i)));
        flank_pairs.push((p_(i), marker(i)));
    }
    for s in &alphabet {
        flank_pairs.push((r, s.clone()));
    }
    let flank = FlankingFunction::new(&nfa, flank_pairs)?;
    Ok(FamilyInstance { n, ffa: Ffa::new(nfa, flank)? })
}

/// Definitional membership test, independent of the automaton: a word is in
/// the language iff it is marker-free, or ends in its single marker `#i`
/// with `i` occurring among the leading plain symbols.
pub fn membership_reference(n: usize, u: &Word) -> Result<bool> {
    if !(1..=MAX_FAMILY_N).contains(&n) {
        return Err(Error::Input(format!("family index {n} out of range")));
    }
    let plain: Vec<Symbol> = (1..=n).map(digit).collect();
    let markers: Vec<Symbol> = (1..=n).map(marker).collect();
    for s in u.symbols() {
        if !plain.contains(s) && !markers.contains(s) {
            return Err(Error::UnknownSymbol(s.name().to_string()));
        }
    }
    let syms = u.symbols();
    match syms.iter().position(|s| markers.contains(s)) {
        None => Ok(true),
        Some(pos) => {
            if pos != syms.len() - 1 {
                return Ok(false);
            }
            let i = markers.iter().position(|m| m == &syms[pos]).unwrap() + 1;
            Ok(syms[..pos].contains(&digit(i)))
        }
    }
}
