//! Parser robustness and printer canonicity, beyond the in-module tests.

mod common;

use flanked::format::{self, Document};
use flanked::samples;
use proptest::prelude::*;

#[test]
fn fixture_files_parse_and_reprint_byte_identically() {
    for name in [
        "alternating.ffa",
        "single_a.ffa",
        "diamond.nfa",
        "relabel_sensitive.ffa",
        "broken.ffa",
        "alternating_by_single_a.ffa",
    ] {
        let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = format::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(format::print(&doc), text, "{name} is not canonical");
    }
}

#[test]
fn fixtures_match_their_samples() {
    let read = |name: &str| {
        std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR")))
            .unwrap()
    };
    assert_eq!(
        format::parse(&read("alternating.ffa")).unwrap(),
        Document::Ffa(samples::alternating_ffa())
    );
    assert_eq!(
        format::parse(&read("single_a.ffa")).unwrap(),
        Document::Ffa(samples::single_a_ffa())
    );
    assert_eq!(
        format::parse(&read("diamond.nfa")).unwrap(),
        Document::Nfa(samples::non_flankable_nfa())
    );
    assert_eq!(
        format::parse(&read("relabel_sensitive.ffa")).unwrap(),
        Document::Ffa(samples::relabel_sensitive_ffa())
    );
}

#[test]
fn random_documents_round_trip() {
    let mut rng = common::rng(0x10f0);
    for _ in 0..100 {
        let doc = if rng_bool(&mut rng) {
            Document::Nfa(common::random_nfa(&mut rng, 6, 3))
        } else {
            Document::Ffa(common::random_verified_ffa(&mut rng, 6, 3))
        };
        let printed = format::print(&doc);
        assert_eq!(format::parse(&printed).unwrap(), doc);
    }
}

fn rng_bool(rng: &mut rand_chacha::ChaCha8Rng) -> bool {
    use rand::Rng;
    rng.gen_bool(0.5)
}

proptest! {
    /// Arbitrary junk must produce an error, never a panic.
    #[test]
    fn parser_never_panics(text in "\\PC{0,200}") {
        let _ = format::parse(&text);
    }

    /// Junk appended after a valid document errors out rather than being
    /// silently ignored.
    #[test]
    fn trailing_junk_is_rejected(tail in "[a-z]{1,8} [a-z]{1,8}") {
        let text = format!("nfa v1\nalphabet a\nstates q0\ninitial q0\n{tail}\n");
        if !tail.starts_with("trans ") {
            prop_assert!(format::parse(&text).is_err());
        }
    }
}
