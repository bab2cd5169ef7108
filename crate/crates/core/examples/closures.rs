//! Upward and downward closures, and the condensation of the downward one.

use relmatch::closure::{condense, downward_automaton, upward_automaton};
use relmatch::compile;
use relmatch::simulate::accepts;

fn main() -> relmatch::Result<()> {
    let (nfa, mut table) = compile("a(bc)*d")?;
    let up = upward_automaton(&nfa);
    let down = downward_automaton(&nfa);
    let cond = condense(&down);
    println!(
        "A: {} states, {} transitions",
        nfa.num_states(),
        nfa.num_transitions()
    );
    println!(
        "up: {} transitions, down: {} transitions",
        up.num_transitions(),
        down.num_transitions()
    );
    println!(
        "condensed down: {} states, components {:?}",
        cond.condensed.num_states(),
        cond.component_of
    );

    println!("{:>8} {:>5} {:>5} {:>5}", "text", "A", "up", "down");
    for text in ["ad", "abcd", "cabbcdb", "cbcb", "ac", ""] {
        let w = table.encode(text);
        println!(
            "{text:>8} {:>5} {:>5} {:>5}",
            accepts(&nfa, &w),
            accepts(&up, &w),
            accepts(&down, &w)
        );
    }
    Ok(())
}
