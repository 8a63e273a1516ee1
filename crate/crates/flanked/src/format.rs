//! Line-oriented text format for automata and flanked automata.
//!
//! ```text
//! ffa v1                      (or: nfa v1)
//! alphabet a b
//! states q0 q1
//! initial q0
//! trans q0 a q1
//! trans q1 b q0
//! flank q0 b                  (ffa documents only)
//! ```
//!
//! Lines whose first non-blank character is `#` are comments; blank lines
//! are ignored. Symbol names may themselves start with `#` (the succinctness
//! family uses `#1`, `#2`, ...), so `#` only starts a comment at the start
//! of a line. Printing is canonical -- alphabet sorted, states in id order,
//! transitions sorted by (source, symbol, target), flank pairs by (state,
//! symbol) -- so equal automata print byte-identically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::nfa::{Ffa, FlankingFunction, Nfa, StateId, Symbol};

/// A parsed document: either a plain automaton or a flanked pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Nfa(Nfa),
    Ffa(Ffa),
}

impl Document {
    /// The automaton part, for commands that accept either kind.
    pub fn automaton(&self) -> &Nfa {
        match self {
            Document::Nfa(a) => a,
            Document::Ffa(f) => f.automaton(),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses a document. Errors carry the 1-based line number of the offending
/// line.
pub fn parse(text: &str) -> Result<Document> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_no, header) = lines.next().ok_or_else(|| err(0, "empty document"))?;
    let is_ffa = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["nfa", "v1"] => false,
        ["ffa", "v1"] => true,
        _ => return Err(err(header_no, "expected header `nfa v1` or `ffa v1`")),
    };

    let mut alphabet: Option<(usize, Vec<Symbol>)> = None;
    let mut states: Option<BTreeMap<String, usize>> = None;
    let mut state_order: Vec<String> = Vec::new();
    let mut initial: Option<Vec<StateId>> = None;
    let mut transitions: Vec<(StateId, Symbol, StateId)> = Vec::new();
    let mut seen_trans: BTreeSet<(usize, String, usize)> = BTreeSet::new();
    let mut flank: Vec<(StateId, Symbol)> = Vec::new();
    let mut seen_flank: BTreeSet<(usize, String)> = BTreeSet::new();

    for (no, line) in lines {
        let mut tokens = line.split_whitespace();
        let directive = tokens.next().expect("blank lines are filtered");
        let rest: Vec<&str> = tokens.collect();
        match directive {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(no, "duplicate alphabet declaration"));
                }
                if rest.is_empty() {
                    return Err(err(no, "alphabet must declare at least one symbol"));
                }
                let mut syms = Vec::new();
                for name in &rest {
                    let s = Symbol::new(*name).map_err(|e| err(no, e.to_string()))?;
                    if syms.contains(&s) {
                        return Err(err(no, format!("duplicate symbol {name:?}")));
                    }
                    syms.push(s);
                }
                alphabet = Some((no, syms));
            }
            "states" => {
                if states.is_some() {
                    return Err(err(no, "duplicate states declaration"));
                }
                let mut map = BTreeMap::new();
                for (i, name) in rest.iter().enumerate() {
                    if map.insert(name.to_string(), i).is_some() {
                        return Err(err(no, format!("duplicate state {name:?}")));
                    }
                    state_order.push(name.to_string());
                }
                states = Some(map);
            }
            "initial" => {
                if initial.is_some() {
                    return Err(err(no, "duplicate initial declaration"));
                }
                let map = states
                    .as_ref()
                    .ok_or_else(|| err(no, "initial before states declaration"))?;
                let mut ids = Vec::new();
                for name in &rest {
                    let id = map
                        .get(*name)
                        .ok_or_else(|| err(no, format!("undeclared state {name:?}")))?;
                    ids.push(StateId(*id));
                }
                initial = Some(ids);
            }
            "trans" => {
                let map = states
                    .as_ref()
                    .ok_or_else(|| err(no, "trans before states declaration"))?;
                let (_, syms) = alphabet
                    .as_ref()
                    .ok_or_else(|| err(no, "trans before alphabet declaration"))?;
                let [src, sym, dst] = rest[..] else {
                    return Err(err(no, "trans expects: trans <state> <symbol> <state>"));
                };
                let src_id = *map
                    .get(src)
                    .ok_or_else(|| err(no, format!("undeclared state {src:?}")))?;
                let dst_id = *map
                    .get(dst)
                    .ok_or_else(|| err(no, format!("undeclared state {dst:?}")))?;
                let s = Symbol::new(sym).map_err(|e| err(no, e.to_string()))?;
                if !syms.contains(&s) {
                    return Err(err(no, format!("undeclared symbol {sym:?}")));
                }
                if !seen_trans.insert((src_id, sym.to_string(), dst_id)) {
                    return Err(err(no, "duplicate trans line"));
                }
                transitions.push((StateId(src_id), s, StateId(dst_id)));
            }
            "flank" => {
                if !is_ffa {
                    return Err(err(no, "flank line in an nfa document"));
                }
                let map = states
                    .as_ref()
                    .ok_or_else(|| err(no, "flank before states declaration"))?;
                let (_, syms) = alphabet
                    .as_ref()
                    .ok_or_else(|| err(no, "flank before alphabet declaration"))?;
                let [state, sym] = rest[..] else {
                    return Err(err(no, "flank expects: flank <state> <symbol>"));
                };
                let id = *map
                    .get(state)
                    .ok_or_else(|| err(no, format!("undeclared state {state:?}")))?;
                let s = Symbol::new(sym).map_err(|e| err(no, e.to_string()))?;
                if !syms.contains(&s) {
                    return Err(err(no, format!("undeclared symbol {sym:?}")));
                }
                if !seen_flank.insert((id, sym.to_string())) {
                    return Err(err(no, "duplicate flank line"));
                }
                flank.push((StateId(id), s));
            }
            other => return Err(err(no, format!("unknown directive {other:?}"))),
        }
    }

    let (alpha_line, alphabet) = alphabet.ok_or_else(|| err(0, "missing alphabet declaration"))?;
    if states.is_none() {
        return Err(err(0, "missing states declaration"));
    }
    let initial = initial.ok_or_else(|| err(0, "missing initial declaration"))?;

    let nfa = Nfa::new(alphabet, state_order, transitions, initial)
        .map_err(|e| err(alpha_line, e.to_string()))?;
    if is_ffa {
        let flank = FlankingFunction::new(&nfa, flank).expect("flank pairs were validated");
        Ok(Document::Ffa(Ffa::new(nfa, flank)?))
    } else {
        Ok(Document::Nfa(nfa))
    }
}

fn print_body(out: &mut String, header: &str, a: &Nfa) {
    let _ = writeln!(out, "{header} v1");
    let syms: Vec<&str> = a.alphabet().iter().map(Symbol::name).collect();
    let _ = writeln!(out, "alphabet {}", syms.join(" "));
    let _ = writeln!(out, "states {}", a.state_names().join(" "));
    let init: Vec<&str> = a.initial().iter().map(|q| a.state_name(q)).collect();
    let _ = writeln!(out, "initial {}", init.join(" "));
    for (src, sym, dst) in a.transitions() {
        let _ = writeln!(out, "trans {} {} {}", a.state_name(src), sym, a.state_name(dst));
    }
}

/// Canonical document for a plain automaton.
pub fn print_nfa(a: &Nfa) -> String {
    let mut out = String::new();
    print_body(&mut out, "nfa", a);
    out
}

/// Canonical document for a flanked pair.
pub fn print_ffa(f: &Ffa) -> String {
    let mut out = String::new();
    print_body(&mut out, "ffa", f.automaton());
    for (q, sym) in f.flank_pairs() {
        let _ = writeln!(out, "flank {} {}", f.automaton().state_name(q), sym);
    }
    out
}

pub fn print(doc: &Document) -> String {
    match doc {
        Document::Nfa(a) => print_nfa(a),
        Document::Ffa(f) => print_ffa(f),
    }
}
