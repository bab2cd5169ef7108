//! Parse a regex, compile it with Thompson's construction and print the
//! automaton in the text format.
//!
//!     cargo run --example compile_regex -- '(ab|c)*d'

use relmatch::{compile, parse_regex};

fn main() -> relmatch::Result<()> {
    let pattern = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(ab|c)*d".to_string());
    let (ast, table) = parse_regex(&pattern)?;
    println!(
        "pattern {pattern:?}: {} syntax nodes, {} symbols",
        ast.size(),
        table.len()
    );

    let (nfa, table) = compile(&pattern)?;
    println!(
        "{} states, {} transitions",
        nfa.num_states(),
        nfa.num_transitions()
    );
    for a in 1..=nfa.sigma() {
        println!("  symbol {a} = {:?}", table.char_of(a).unwrap());
    }
    print!("{}", nfa.to_text());
    Ok(())
}
