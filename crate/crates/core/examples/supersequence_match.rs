//! Does the language contain a supersequence of the text? The matcher
//! works on the condensed downward closure and deletes states as the text
//! is read.

use relmatch::compile;
use relmatch::linear::SupersequenceMatcher;

fn main() -> relmatch::Result<()> {
    let (nfa, mut table) = compile("(ab)*c(a|b)*")?;
    let matcher = SupersequenceMatcher::new(&nfa);
    println!(
        "{} states condensed to {}",
        matcher.condensation().component_of.len(),
        matcher.condensed().num_states()
    );

    for text in ["abc", "bbcab", "cc", "abab", "ca"] {
        let w = table.encode(text);
        let mut run = matcher.run();
        let mut alive = vec![run.alive_count()];
        for &a in &w {
            run.advance(a);
            alive.push(run.alive_count());
        }
        println!("{text:>6}: {:<5} alive per step {alive:?}", run.accepting());
    }
    Ok(())
}
