//! Compiles and runs every Rust code block in the guide (`book/src`) as a
//! doc-test, so the chapters cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/automata.md")]
pub mod automata {}

#[doc = include_str!("../../../book/src/flanking.md")]
pub mod flanking {}

#[doc = include_str!("../../../book/src/deciding.md")]
pub mod deciding {}

#[doc = include_str!("../../../book/src/composing.md")]
pub mod composing {}

#[doc = include_str!("../../../book/src/succinctness.md")]
pub mod succinctness {}

#[doc = include_str!("../../../book/src/tooling.md")]
pub mod tooling {}
