//! Does some subsequence of the text belong to the language? Runs the
//! linear matcher step by step and shows the active states.

use relmatch::linear::SubsequenceRun;
use relmatch::{compile, match_relation, RelationKind, TransitionIndex};

fn main() -> relmatch::Result<()> {
    let (nfa, mut table) = compile("a(b|c)*d")?;
    let text = table.encode("xaxbxcxd");
    let nfa = nfa.trim();
    let index = TransitionIndex::new(&nfa);

    let mut run = SubsequenceRun::new(&nfa, &index);
    println!("start: {:?}", run.active_states());
    for &a in &text {
        run.advance(a);
        println!(
            "read {:?}: {} active, accepting={}",
            table.decode(&[a]),
            run.active_count(),
            run.accepting()
        );
    }
    let stats = run.stats();
    println!(
        "marks {} of {} transitions",
        stats.marks,
        nfa.num_transitions()
    );

    for text in ["abd", "adb", "zzazzdzz"] {
        let w = table.encode(text);
        println!(
            "{text}: {}",
            match_relation(&nfa, &w, RelationKind::Subsequence)
        );
    }
    Ok(())
}
