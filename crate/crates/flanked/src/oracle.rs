//! Brute-force reference semantics used to cross-check the fast algorithms
//! at desk scale.
//!
//! Everything here works on explicit word sets and direct run-set stepping
//! from [`crate::nfa`]; nothing reuses the class automaton of
//! [`crate::powerset`], which is exactly what makes the agreement tests
//! meaningful. Costs are exponential by design.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::nfa::{Ffa, Nfa, Symbol, Word};
use crate::stateset::StateSet;

/// All words of a language up to a length bound, as an explicit set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLanguage {
    alphabet: Vec<Symbol>,
    depth: usize,
    words: BTreeSet<Word>,
}

impl BoundedLanguage {
    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn words(&self) -> &BTreeSet<Word> {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// Every word of length at most `depth` over `alphabet`.
    pub fn full(alphabet: &[Symbol], depth: usize) -> BoundedLanguage {
        let mut words = BTreeSet::new();
        let mut layer = vec![Word::empty()];
        words.insert(Word::empty());
        for _ in 0..depth {
            let mut next = Vec::new();
            for w in &layer {
                for s in alphabet {
                    let ext = w.extended(s);
                    words.insert(ext.clone());
                    next.push(ext);
                }
            }
            layer = next;
        }
        BoundedLanguage { alphabet: alphabet.to_vec(), depth, words }
    }

    pub fn is_prefix_closed(&self) -> bool {
        self.words.iter().all(|w| {
            w.is_empty() || {
                let prefix = Word::new(w.symbols()[..w.len() - 1].to_vec());
                self.words.contains(&prefix)
            }
        })
    }

    fn compatible(&self, other: &BoundedLanguage) -> Result<()> {
        if self.depth != other.depth || self.alphabet != other.alphabet {
            return Err(Error::BoundsMismatch);
        }
        Ok(())
    }

    pub fn intersection(&self, other: &BoundedLanguage) -> Result<BoundedLanguage> {
        self.compatible(other)?;
        Ok(BoundedLanguage {
            alphabet: self.alphabet.clone(),
            depth: self.depth,
            words: self.words.intersection(&other.words).cloned().collect(),
        })
    }

    pub fn union(&self, other: &BoundedLanguage) -> Result<BoundedLanguage> {
        self.compatible(other)?;
        Ok(BoundedLanguage {
            alphabet: self.alphabet.clone(),
            depth: self.depth,
            words: self.words.union(&other.words).cloned().collect(),
        })
    }

    /// True when every word of `self` is a word of `other`.
    pub fn included_in(&self, other: &BoundedLanguage) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.words.is_subset(&other.words))
    }
}

/// Every accepted word of length at most `depth`, found by breadth-first
/// search over (word, run set) pairs. The result is prefix-closed because
/// all states are final.
pub fn enumerate(a: &Nfa, depth: usize) -> BoundedLanguage {
    let mut words = BTreeSet::new();
    let mut queue: VecDeque<(Word, StateSet)> = VecDeque::new();
    if !a.initial().is_empty() {
        words.insert(Word::empty());
        queue.push_back((Word::empty(), a.initial().clone()));
    }
    while let Some((w, set)) = queue.pop_front() {
        if w.len() == depth {
            continue;
        }
        for (k, s) in a.alphabet().iter().enumerate() {
            let next = a.step(&set, k);
            if !next.is_empty() {
                let ext = w.extended(s);
                words.insert(ext.clone());
                queue.push_back((ext, next));
            }
        }
    }
    BoundedLanguage { alphabet: a.alphabet().to_vec(), depth, words }
}

/// Checks the flanking condition literally, word by word, for every
/// accepted `u` with `|u| ≤ depth` and every symbol: the extension `u·a`
/// must be rejected exactly when a state of the run set flanks `a`. Returns
/// the shortlex-first violation, or `None`. Rejected words satisfy the
/// condition vacuously (their run set is empty), so only accepted words are
/// visited. With `depth` at least the class count of the subset automaton
/// the check is exact.
pub fn check_flanked_bounded(f: &Ffa, depth: usize) -> Option<(Word, Symbol)> {
    let a = f.automaton();
    let mut queue: VecDeque<(Word, StateSet)> = VecDeque::new();
    if !a.initial().is_empty() {
        queue.push_back((Word::empty(), a.initial().clone()));
    }
    while let Some((w, set)) = queue.pop_front() {
        for (k, s) in a.alphabet().iter().enumerate() {
            let next = a.step(&set, k);
            let rejected = next.is_empty();
            let flagged = set.intersects(f.flank().inverse(k));
            if rejected != flagged {
                return Some((w, s.clone()));
            }
            if !rejected && w.len() < depth {
                queue.push_back((w.extended(s), next));
            }
        }
    }
    None
}

/// True (with `None`) iff every word of length at most `depth` accepted by
/// `left` is accepted by `right`; otherwise returns the shortest witness.
/// Search state is the pair of run sets, memoized, so the walk is exact and
/// terminates after at most `2^|Q1| · 2^|Q2|` distinct pairs.
pub fn check_inclusion_bounded(left: &Nfa, right: &Nfa, depth: usize) -> Result<Option<Word>> {
    if left.alphabet() != right.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let mut seen: HashSet<(StateSet, StateSet)> = HashSet::new();
    let mut queue: VecDeque<(Word, StateSet, StateSet)> = VecDeque::new();
    let start = (left.initial().clone(), right.initial().clone());
    if !start.0.is_empty() && start.1.is_empty() {
        return Ok(Some(Word::empty()));
    }
    seen.insert(start.clone());
    queue.push_back((Word::empty(), start.0, start.1));
    while let Some((w, s1, s2)) = queue.pop_front() {
        if w.len() == depth {
            continue;
        }
        for (k, s) in left.alphabet().iter().enumerate() {
            let n1 = left.step(&s1, k);
            if n1.is_empty() {
                continue; // left rejects every extension from here
            }
            let n2 = right.step(&s2, k);
            if n2.is_empty() {
                return Ok(Some(w.extended(s)));
            }
            if seen.insert((n1.clone(), n2.clone())) {
                queue.push_back((w.extended(s), n1, n2));
            }
        }
    }
    Ok(None)
}

/// The largest prefix-closed set `X` of words of length at most the shared
/// depth with `X ∩ l2 ⊆ l1`: a word survives iff none of its prefixes is in
/// `l2` without being in `l1`.
pub fn quotient_bounded(l1: &BoundedLanguage, l2: &BoundedLanguage) -> Result<BoundedLanguage> {
    l1.compatible(l2)?;
    let bad = |w: &Word| l2.words.contains(w) && !l1.words.contains(w);
    let mut words = BTreeSet::new();
    let mut layer = Vec::new();
    if !bad(&Word::empty()) {
        words.insert(Word::empty());
        layer.push(Word::empty());
    }
    for _ in 0..l1.depth {
        let mut next = Vec::new();
        for w in &layer {
            for s in &l1.alphabet {
                let ext = w.extended(s);
                if !bad(&ext) {
                    words.insert(ext.clone());
                    next.push(ext);
                }
            }
        }
        layer = next;
    }
    Ok(BoundedLanguage {
        alphabet: l1.alphabet.clone(),
        depth: l1.depth,
        words,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn word(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn enumerate_diamond_depth_two() {
        let lang = enumerate(&samples::non_flankable_nfa(), 2);
        let expected: BTreeSet<Word> =
            [word(""), word("a"), word("b"), word("a b")].into_iter().collect();
        assert_eq!(lang.words(), &expected);
        assert!(lang.is_prefix_closed());
    }

    #[test]
    fn enumerate_depth_zero() {
        let lang = enumerate(samples::alternating_ffa().automaton(), 0);
        assert_eq!(lang.words().len(), 1);
        assert!(lang.contains(&Word::empty()));
    }

    #[test]
    fn enumerate_is_prefix_closed() {
        for a in [
            samples::non_flankable_nfa(),
            samples::alternating_ffa().automaton().clone(),
            samples::single_a_ffa().automaton().clone(),
            samples::relabel_sensitive_ffa().automaton().clone(),
        ] {
            assert!(enumerate(&a, 5).is_prefix_closed());
        }
    }

    #[test]
    fn check_flanked_bounded_agrees_on_samples() {
        assert_eq!(check_flanked_bounded(&samples::alternating_ffa(), 6), None);
        assert_eq!(check_flanked_bounded(&samples::single_a_ffa(), 6), None);
        assert_eq!(check_flanked_bounded(&samples::relabel_sensitive_ffa(), 6), None);
    }

    #[test]
    fn check_flanked_bounded_finds_bad_pair() {
        use crate::nfa::{Ffa, FlankingFunction, StateId, Symbol};
        let a = samples::non_flankable_nfa();
        let flank =
            FlankingFunction::new(&a, vec![(StateId(1), Symbol::new("b").unwrap())]).unwrap();
        let f = Ffa::new(a, flank).unwrap();
        let (w, s) = check_flanked_bounded(&f, 2).expect("diamond pair is not flanked");
        // Witness validity: the pair's claim and the automaton disagree on
        // the extension of w by s.
        let run = f.automaton().run_set(&w).unwrap();
        let accepted = f.automaton().accepts(&w.extended(&s)).unwrap();
        let k = f.automaton().symbol_index(&s).unwrap();
        let flagged = run.intersects(f.flank().inverse(k));
        assert_eq!(accepted, flagged);
    }

    #[test]
    fn universal_with_empty_flank_checks_out() {
        use crate::nfa::Symbol;
        let u = samples::universal_ffa(&[Symbol::new("a").unwrap()]);
        assert_eq!(check_flanked_bounded(&u, 8), None);
    }

    #[test]
    fn inclusion_bounded_reflexive() {
        let a = samples::non_flankable_nfa();
        assert_eq!(check_inclusion_bounded(&a, &a, 6).unwrap(), None);
    }

    #[test]
    fn inclusion_bounded_finds_shortest_witness() {
        let left = samples::alternating_ffa();
        let right = samples::single_a_ffa();
        let w = check_inclusion_bounded(left.automaton(), right.automaton(), 6)
            .unwrap()
            .expect("alternating words escape the at-most-one-a language");
        assert_eq!(w, word("a b a"));
    }

    #[test]
    fn quotient_bounded_trivial_cases() {
        let sigma = samples::alternating_ffa().automaton().alphabet().to_vec();
        let l = enumerate(samples::alternating_ffa().automaton(), 4);
        // l / l is unconstrained.
        let full = BoundedLanguage::full(&sigma, 4);
        assert_eq!(quotient_bounded(&l, &l).unwrap().words(), full.words());
        // Quotient by the full language pins X to l itself.
        assert_eq!(quotient_bounded(&l, &full).unwrap().words(), l.words());
        // ε always survives.
        assert!(quotient_bounded(&l, &full).unwrap().contains(&Word::empty()));
    }

    #[test]
    fn quotient_bounded_matches_quotient_automaton() {
        let f1 = samples::alternating_ffa();
        let f2 = samples::single_a_ffa();
        let q = crate::compose::quotient(&f1, &f2).unwrap();
        let depth = 3;
        let l1 = enumerate(f1.automaton(), depth);
        let l2 = enumerate(f2.automaton(), depth);
        let expected = quotient_bounded(&l1, &l2).unwrap();
        let actual = enumerate(q.automaton(), depth);
        assert_eq!(actual.words(), expected.words());
    }

    #[test]
    fn bounds_mismatch_is_rejected() {
        let a = samples::alternating_ffa();
        let l3 = enumerate(a.automaton(), 3);
        let l4 = enumerate(a.automaton(), 4);
        assert!(matches!(quotient_bounded(&l3, &l4), Err(Error::BoundsMismatch)));
    }
}
