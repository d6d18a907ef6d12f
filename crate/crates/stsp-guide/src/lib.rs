//! The guide under `book/` doubles as a test suite: each chapter is
//! included here as rustdoc, so `cargo test --doc` compiles and runs every
//! code snippet in the book. One module per chapter keeps test failures
//! traceable to their source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/rings-and-form-ideals.md")]
pub mod rings_and_form_ideals {}

#[doc = include_str!("../../../book/src/symplectic-module.md")]
pub mod symplectic_module {}

#[doc = include_str!("../../../book/src/transvections.md")]
pub mod transvections {}

#[doc = include_str!("../../../book/src/steinberg-words.md")]
pub mod steinberg_words {}

#[doc = include_str!("../../../book/src/relative-group.md")]
pub mod relative_group {}

#[doc = include_str!("../../../book/src/generator-calculus.md")]
pub mod generator_calculus {}

#[doc = include_str!("../../../book/src/van-der-kallen.md")]
pub mod van_der_kallen {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
