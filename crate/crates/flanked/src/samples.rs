//! Small automata used throughout the guide and the test-suite.

use crate::format::{self, Document};
use crate::nfa::{Ffa, FlankingFunction, Nfa, Symbol};

fn parse_nfa(text: &str) -> Nfa {
    match format::parse(text).expect("sample documents are valid") {
        Document::Nfa(a) => a,
        Document::Ffa(_) => unreachable!("sample is an nfa document"),
    }
}

fn parse_ffa(text: &str) -> Ffa {
    match format::parse(text).expect("sample documents are valid") {
        Document::Ffa(f) => f,
        Document::Nfa(_) => unreachable!("sample is an ffa document"),
    }
}

/// The classic witness that nondeterminism can defeat flanking: a four-state
/// diamond over `{a, b}` where `b` leads to a state (`q1`) that is also
/// reached by `a`, so no flank pair can separate "after b" from "after a".
pub fn non_flankable_nfa() -> Nfa {
    parse_nfa(
        "nfa v1\n\
         alphabet a b\n\
         states q0 q1 q2 q3\n\
         initial q0\n\
         trans q0 a q1\n\
         trans q0 a q2\n\
         trans q0 b q1\n\
         trans q2 b q3\n",
    )
}

/// A two-state flanked automaton accepting strictly alternating words
/// `(a b)*` and their prefixes.
pub fn alternating_ffa() -> Ffa {
    parse_ffa(
        "ffa v1\n\
         alphabet a b\n\
         states q0 q1\n\
         initial q0\n\
         trans q0 a q1\n\
         trans q1 b q0\n\
         flank q0 b\n\
         flank q1 a\n",
    )
}

/// A two-state flanked automaton accepting words with at most one `a`
/// (`b* a? b*`): after the single `a` a second one is flanked.
pub fn single_a_ffa() -> Ffa {
    parse_ffa(
        "ffa v1\n\
         alphabet a b\n\
         states q0 q1\n\
         initial q0\n\
         trans q0 a q1\n\
         trans q0 b q0\n\
         trans q1 b q1\n\
         flank q1 a\n",
    )
}

/// A deterministic (hence flanked) automaton over `{a, b, c}` that loses
/// flankability when `c` is relabeled to `a`: the result is exactly
/// [`non_flankable_nfa`] up to state naming.
pub fn relabel_sensitive_ffa() -> Ffa {
    parse_ffa(
        "ffa v1\n\
         alphabet a b c\n\
         states q0 q1 q2 q3\n\
         initial q0\n\
         trans q0 a q1\n\
         trans q0 b q1\n\
         trans q0 c q2\n\
         trans q2 b q3\n\
         flank q1 a\n\
         flank q1 b\n\
         flank q1 c\n\
         flank q2 a\n\
         flank q2 c\n\
         flank q3 a\n\
         flank q3 b\n\
         flank q3 c\n",
    )
}

/// The universal flanked automaton over `alphabet`: one state, a self-loop
/// per symbol, empty flank.
pub fn universal_ffa(alphabet: &[Symbol]) -> Ffa {
    use crate::nfa::StateId;
    let transitions = alphabet
        .iter()
        .map(|s| (StateId(0), s.clone(), StateId(0)))
        .collect();
    let nfa = Nfa::new(alphabet.to_vec(), vec!["u".into()], transitions, vec![StateId(0)])
        .expect("universal automaton is well-formed");
    let flank = FlankingFunction::empty(&nfa);
    Ffa::new(nfa, flank).expect("empty flank fits")
}
