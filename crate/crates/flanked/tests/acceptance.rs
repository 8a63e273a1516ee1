//! End-to-end acceptance checks, one per headline claim of the library.
//! Each test prints a single pass/fail line so the whole gate can be read
//! off `cargo test --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;

use flanked::compose;
use flanked::decide;
use flanked::family;
use flanked::format::{self, Document};
use flanked::nfa::{Ffa, FlankingFunction, Nfa, StateId, Symbol, SymbolMap, Word};
use flanked::oracle::{self, BoundedLanguage};
use flanked::powerset::{self, FlankCheck, Flankability, DEFAULT_MAX_CLASSES};
use flanked::samples;
use rand::Rng;

fn criterion(n: usize, name: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let outcome = std::panic::catch_unwind(body);
    match outcome {
        Ok(()) => println!("criterion {n} ({name}): pass"),
        Err(e) => {
            println!("criterion {n} ({name}): FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn state_set(a: &Nfa, names: &[&str]) -> flanked::StateSet {
    let mut set = flanked::StateSet::empty(a.state_count());
    for name in names {
        let id = a
            .state_names()
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("no state named {name}"));
        set.insert(StateId(id));
    }
    set
}

#[test]
fn criterion_01_diamond_is_not_flankable() {
    criterion(1, "diamond flankability witness", || {
        let a = samples::non_flankable_nfa();
        let b = Symbol::new("b").unwrap();
        let ext = powerset::extendable_states(&a, &b, DEFAULT_MAX_CLASSES).unwrap();
        assert_eq!(ext, state_set(&a, &["q0", "q1", "q2"]));
        match powerset::is_flankable(&a, DEFAULT_MAX_CLASSES).unwrap() {
            Flankability::NotFlankable { word, symbol } => {
                assert_eq!(symbol, b);
                let run = a.run_set(&word).unwrap();
                assert_eq!(run, state_set(&a, &["q1"]));
            }
            Flankability::Flankable(_) => panic!("diamond must not be flankable"),
        }
    });
}

#[test]
fn criterion_02_quotient_matches_golden_file() {
    criterion(2, "quotient golden file", || {
        let q = compose::quotient(&samples::alternating_ffa(), &samples::single_a_ffa()).unwrap();
        assert_eq!(
            format::print_ffa(&q),
            include_str!("golden/alternating_by_single_a.ffa")
        );
        assert_eq!(q.automaton().state_count(), 4);
        assert_eq!(q.flank().len(), 2);
    });
}

#[test]
fn criterion_03_relabeling_destroys_flankability() {
    criterion(3, "relabeling demo", || {
        let f = samples::relabel_sensitive_ffa();
        assert!(powerset::is_flanked(&f, DEFAULT_MAX_CLASSES).unwrap().is_flanked());
        let mut map = SymbolMap::new();
        for s in f.automaton().alphabet() {
            map.insert(s.clone(), s.clone());
        }
        map.insert(Symbol::new("c").unwrap(), Symbol::new("a").unwrap());
        let image = compose::relabel(&f, &map).unwrap();
        assert!(!powerset::is_flankable(&image, DEFAULT_MAX_CLASSES).unwrap().is_flankable());
    });
}

#[test]
fn criterion_04_universality_agrees_with_totality_oracle() {
    criterion(4, "universality vs oracle, 1000 cases", || {
        let mut rng = common::rng(0x0401);
        let mut universal_seen = 0;
        for _ in 0..1000 {
            let f = common::random_verified_ffa(&mut rng, 6, 3);
            let fast = decide::is_universal(&f).unwrap();
            let p = powerset::build(f.automaton(), DEFAULT_MAX_CLASSES).unwrap();
            let total = (0..p.class_count()).all(|c| {
                (0..f.automaton().alphabet().len())
                    .all(|k| p.delta(powerset::ClassId(c), k).is_some())
            });
            assert_eq!(fast, total);
            universal_seen += usize::from(total);
        }
        // The corpus must exercise both answers.
        assert!(universal_seen > 0 && universal_seen < 1000);
    });
}

#[test]
fn criterion_05_inclusion_agrees_with_bounded_oracle() {
    criterion(5, "inclusion vs oracle, 1000 pairs", || {
        let mut rng = common::rng(0x0501);
        let mut failures_seen = 0;
        for _ in 0..1000 {
            let left = common::random_nfa(&mut rng, 5, 2);
            let right = common::random_verified_ffa(&mut rng, 5, 2);
            let depth = left.state_count() * right.automaton().state_count();
            let fast = decide::check_inclusion(&left, &right).unwrap();
            let slow = oracle::check_inclusion_bounded(&left, right.automaton(), depth).unwrap();
            assert_eq!(fast.included, slow.is_none());
            if let Some(w) = fast.witness {
                assert!(left.accepts(&w).unwrap());
                assert!(!right.automaton().accepts(&w).unwrap());
                failures_seen += 1;
            }
        }
        assert!(failures_seen > 0 && failures_seen < 1000);
    });
}

struct Pair {
    f1: Ffa,
    f2: Ffa,
    l1: BoundedLanguage,
    l2: BoundedLanguage,
    depth: usize,
}

fn random_pair(rng: &mut rand_chacha::ChaCha8Rng) -> Pair {
    let f1 = common::random_verified_ffa(rng, 3, 2);
    let f2 = common::random_verified_ffa(rng, 3, 2);
    let depth = f1.automaton().state_count() * f2.automaton().state_count() + 2;
    let l1 = oracle::enumerate(f1.automaton(), depth);
    let l2 = oracle::enumerate(f2.automaton(), depth);
    Pair { f1, f2, l1, l2, depth }
}

#[test]
fn criterion_06_compositions_stay_flanked_and_match_oracles() {
    criterion(6, "closure and size bounds, 500 pairs", || {
        let mut rng = common::rng(0x0601);
        for _ in 0..500 {
            let p = random_pair(&mut rng);
            let (n1, n2) = (p.f1.automaton().state_count(), p.f2.automaton().state_count());

            let fi = compose::intersect(&p.f1, &p.f2).unwrap();
            assert!(powerset::is_flanked(&fi, DEFAULT_MAX_CLASSES).unwrap().is_flanked());
            assert!(fi.automaton().state_count() <= n1 * n2);
            let expected = p.l1.intersection(&p.l2).unwrap();
            assert_eq!(oracle::enumerate(fi.automaton(), p.depth).words(), expected.words());

            let fq = compose::quotient(&p.f1, &p.f2).unwrap();
            assert!(powerset::is_flanked(&fq, DEFAULT_MAX_CLASSES).unwrap().is_flanked());
            assert!(fq.automaton().state_count() <= n1 * n2 + 1);
            let expected = oracle::quotient_bounded(&p.l1, &p.l2).unwrap();
            assert_eq!(oracle::enumerate(fq.automaton(), p.depth).words(), expected.words());

            let fu = compose::union(&p.f1, &p.f2).unwrap();
            assert!(powerset::is_flanked(&fu, DEFAULT_MAX_CLASSES).unwrap().is_flanked());
            assert!(fu.automaton().state_count() <= (n1 + 1) * (n2 + 1));
            let expected = p.l1.union(&p.l2).unwrap();
            assert_eq!(oracle::enumerate(fu.automaton(), p.depth).words(), expected.words());
        }
    });
}

#[test]
fn criterion_07_quotient_axioms() {
    criterion(7, "quotient axioms", || {
        // The quotient result must keep A2-compatible words inside A1: the
        // intersection with A2 slips back under A1.
        let mut rng = common::rng(0x0701);
        for _ in 0..500 {
            let p = random_pair(&mut rng);
            let fq = compose::quotient(&p.f1, &p.f2).unwrap();
            let meet = compose::intersect(&p.f2, &fq).unwrap();
            let res = decide::check_inclusion(meet.automaton(), &p.f1).unwrap();
            assert!(res.included, "quotient broke the soundness axiom");
        }
        // And it must be the largest such language: any flanked X with
        // A2 ∩ X ⊆ A1 sits below it.
        let mut vacuous = 0;
        for _ in 0..100 {
            let p = random_pair(&mut rng);
            let x = common::random_verified_ffa(&mut rng, 4, 2);
            let lx = oracle::enumerate(x.automaton(), p.depth);
            let meet = p.l2.intersection(&lx).unwrap();
            if !meet.included_in(&p.l1).unwrap() {
                vacuous += 1;
                continue;
            }
            let fq = compose::quotient(&p.f1, &p.f2).unwrap();
            let lq = oracle::enumerate(fq.automaton(), p.depth);
            assert!(lx.included_in(&lq).unwrap(), "quotient is not maximal");
        }
        assert!(vacuous < 100, "maximality was never exercised");
    });
}

#[test]
fn criterion_08_family_is_exponentially_succinct() {
    criterion(8, "succinctness family", || {
        for n in 1..=5usize {
            let inst = family::generate(n).unwrap();
            let a = inst.ffa().automaton();
            assert_eq!(a.state_count(), 2 * n + 2);
            assert!(powerset::is_flanked(inst.ffa(), DEFAULT_MAX_CLASSES).unwrap().is_flanked());
            let det = powerset::determinize(&a.trim(), DEFAULT_MAX_CLASSES).unwrap();
            let min = powerset::minimize(&det).unwrap();
            assert!(
                min.state_count() >= 1 << n,
                "n={n}: {} states, wanted at least {}",
                min.state_count(),
                1 << n
            );
        }
    });
}

/// Checks the defining biconditional at one (word, symbol) point, straight
/// from run sets; used to validate witnesses from both checkers.
fn violates_pointwise(f: &Ffa, w: &Word, s: &Symbol) -> bool {
    let a = f.automaton();
    let k = a.symbol_index(s).expect("witness symbol is in the alphabet");
    let run = a.run_set(w).unwrap();
    assert!(!run.is_empty(), "witness word must be accepted");
    let forbidden = run.intersects(f.flank().inverse(k));
    let extendable = a.accepts(&w.extended(s)).unwrap();
    forbidden == extendable
}

#[test]
fn criterion_09_flank_checks_agree_on_corpus() {
    criterion(9, "bounded vs powerset flank check", || {
        let mut corpus: Vec<Ffa> = vec![
            samples::alternating_ffa(),
            samples::single_a_ffa(),
            samples::relabel_sensitive_ffa(),
            samples::universal_ffa(&common::symbols(2)),
        ];
        for n in 1..=3 {
            corpus.push(family::generate(n).unwrap().into_ffa());
        }
        let mut rng = common::rng(0x0901);
        for _ in 0..100 {
            let f = common::random_verified_ffa(&mut rng, 4, 2);
            // Also add a mutated copy: flipping one flank pair usually (but
            // not always) breaks verification, covering both outcomes.
            let a = f.automaton().clone();
            let mut pairs: BTreeSet<(StateId, Symbol)> =
                f.flank_pairs().map(|(q, s)| (q, s.clone())).collect();
            let q = StateId(rng.gen_range(0..a.state_count()));
            let s = a.alphabet()[rng.gen_range(0..a.alphabet().len())].clone();
            if !pairs.remove(&(q, s.clone())) {
                pairs.insert((q, s));
            }
            let flank = FlankingFunction::new(&a, pairs.into_iter().collect()).unwrap();
            corpus.push(Ffa::new(a, flank).unwrap());
            corpus.push(f);
        }
        for f in &corpus {
            let depth = powerset::build(f.automaton(), DEFAULT_MAX_CLASSES)
                .unwrap()
                .class_count();
            let fast = powerset::is_flanked(f, DEFAULT_MAX_CLASSES).unwrap();
            let slow = oracle::check_flanked_bounded(f, depth);
            match (fast, slow) {
                (FlankCheck::Flanked, None) => {}
                (FlankCheck::Violation { word, symbol, .. }, Some((bw, bs))) => {
                    assert!(violates_pointwise(f, &word, &symbol));
                    assert!(violates_pointwise(f, &bw, &bs));
                }
                (fast, slow) => panic!("checkers disagree: {fast:?} vs {slow:?}"),
            }
        }
    });
}

#[test]
fn criterion_10_format_round_trips() {
    criterion(10, "format round-trip", || {
        let mut docs: Vec<Document> = vec![
            Document::Ffa(samples::alternating_ffa()),
            Document::Ffa(samples::single_a_ffa()),
            Document::Ffa(samples::relabel_sensitive_ffa()),
            Document::Nfa(samples::non_flankable_nfa()),
        ];
        for n in 1..=4 {
            docs.push(Document::Ffa(family::generate(n).unwrap().into_ffa()));
        }
        let mut rng = common::rng(0x0a01);
        for _ in 0..50 {
            docs.push(Document::Nfa(common::random_nfa(&mut rng, 5, 3)));
            docs.push(Document::Ffa(common::random_verified_ffa(&mut rng, 5, 3)));
        }
        for doc in &docs {
            let canonical = format::print(doc);
            assert_eq!(&format::parse(&canonical).unwrap(), doc);

            // Shuffle the order of the trans/flank lines; the reprint must
            // come out canonical again.
            let mut lines: Vec<&str> = canonical.lines().collect();
            let body_start = lines
                .iter()
                .position(|l| l.starts_with("trans ") || l.starts_with("flank "))
                .unwrap_or(lines.len());
            for i in (body_start + 1..lines.len()).rev() {
                lines.swap(i, rng.gen_range(body_start..=i));
            }
            let shuffled = lines.join("\n") + "\n";
            assert_eq!(format::print(&format::parse(&shuffled).unwrap()), canonical);
        }
    });
}
