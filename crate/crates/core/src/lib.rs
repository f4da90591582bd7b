//! Conjugacy normal forms and closed-form knot invariants for 3-braids.
//!
//! The pipeline is: [`braid::parse`] a word, classify it with
//! [`normal_form::garside_normal_form`] (every rewrite is certified by the
//! [`burau`] oracle), then evaluate [`invariants::report`]. The
//! [`cobordism`] module builds and replays saddle-move certificates, and
//! [`sweep`] runs batch workloads in parallel.

pub mod braid;
pub mod burau;
pub mod cobordism;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod normal_form;
pub mod sweep;

pub use braid::{parse, BraidWord, Generator, Permutation3, Syllable};
pub use error::{Error, ParseError, ParseErrorKind, Result};
