//! Flanked finite automata: prefix-closed NFAs paired with a flanking
//! relation that certifies, at each state, which symbols would leave the
//! language.
//!
//! A prefix-closed automaton (every state accepting) describes the set of
//! well-formed histories of some system. On its own, deciding questions like
//! universality or inclusion for such an NFA is as hard as for general NFAs.
//! The flanking relation `F ⊆ Q × Σ` changes that: it is *verified* when for
//! every accepted word `u` and symbol `a`,
//!
//! ```text
//! u is accepted and u·a is not   ⇔   some state reached by u flanks a
//! ```
//!
//! With a verified flank in hand, universality becomes a constant-time check
//! ([`decide::is_universal`]) and inclusion a polynomial product search
//! ([`decide::check_inclusion`]), while the pair stays as compact as an NFA
//! ([`family`] exhibits an exponential gap to DFAs).
//!
//! Module map:
//!
//! * [`nfa`] -- symbols, words, automata, flanking relations, and the
//!   [`Ffa`](nfa::Ffa) pair.
//! * [`powerset`] -- subset construction, flank verification, flankability
//!   with synthesis, determinization, minimization.
//! * [`decide`] -- universality and inclusion for verified pairs.
//! * [`compose`] -- intersection, quotient, union, relabeling.
//! * [`family`] -- the succinctness family.
//! * [`oracle`] -- brute-force reference implementations over bounded word
//!   sets, used to cross-check everything else.
//! * [`format`] -- the line-oriented text format read and written by the
//!   `flanked` CLI.
//! * [`samples`] -- small named automata used in the guide and tests.

pub mod cli;
pub mod compose;
pub mod decide;
pub mod error;
pub mod family;
pub mod format;
pub mod nfa;
pub mod oracle;
pub mod powerset;
pub mod samples;
pub mod stateset;

pub use error::{Error, Result};
pub use nfa::{Ffa, FlankingFunction, Nfa, StateId, Symbol, SymbolMap, Word};
pub use stateset::StateSet;
