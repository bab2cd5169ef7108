//! Shortest and longest matching strings, O(|w| m), via the product graph.

mod paths;
mod product;

use std::fmt;
use std::str::FromStr;

pub use paths::{st_max_path, st_min_path, st_reachable, useful_vertices, LengthAnswer};
pub use product::{build_product_graph, ProductGraph, VertexKind};

use crate::automaton::{ENfa, Symbol};
use crate::relation::RelationKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Min,
    Max,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Min => "min",
            Mode::Max => "max",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

/// Shortest (`Min`) or longest (`Max`) string `u ⪯ word` accepted by `nfa`,
/// with a witness. `Unbounded` is only possible in max mode for the
/// extension, left-extension and supersequence relations.
pub fn quantitative_match(
    nfa: &ENfa,
    word: &[Symbol],
    relation: RelationKind,
    mode: Mode,
) -> LengthAnswer {
    let graph = build_product_graph(nfa, word, relation);
    match mode {
        Mode::Min => st_min_path(&graph),
        Mode::Max => st_max_path(&graph),
    }
}
