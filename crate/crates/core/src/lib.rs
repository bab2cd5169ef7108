//! Regular expression matching up to string relations.
//!
//! Given an ε-NFA `A` and a text `w`, decide whether some `u ∈ L(A)` relates
//! to `w` (infix, prefix, extension, left-extension, subsequence,
//! supersequence), find the shortest or longest such `u`, or check whether
//! every related string is accepted.

pub mod automaton;
pub mod bench;
pub mod cli;
pub mod closure;
pub mod error;
pub mod graph;
pub mod lazy;
pub mod linear;
pub mod matching;
pub mod oracle;
pub mod quantitative;
pub mod random;
pub mod regex;
pub mod relation;
pub mod simulate;
pub mod universal;

pub use automaton::{ENfa, State, Symbol, Transition, TransitionIndex, EPSILON};
pub use error::{Error, Result};
pub use matching::match_relation;
pub use quantitative::{quantitative_match, LengthAnswer, Mode};
pub use regex::{compile, parse_regex, RegexAst, SymbolTable};
pub use relation::RelationKind;
pub use universal::{universal_bounded, CapExceeded, DEFAULT_CAP};
