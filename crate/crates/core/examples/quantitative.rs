//! Shortest and longest related strings in the language, with witnesses,
//! and LCS/SCS as a special case.

use relmatch::closure::{downward_automaton, upward_automaton};
use relmatch::{compile, quantitative_match, ENfa, LengthAnswer, Mode, RelationKind};

fn main() -> relmatch::Result<()> {
    let (nfa, mut table) = compile("(ab|c)*b")?;
    let w = table.encode("cab");
    for rel in RelationKind::ALL {
        for mode in [Mode::Min, Mode::Max] {
            let answer = match quantitative_match(&nfa, &w, rel, mode) {
                LengthAnswer::Finite { length, witness } => {
                    format!("{length} ({})", table.decode(&witness))
                }
                other => format!("{other:?}"),
            };
            println!("{:>14} {mode}: {answer}", rel.name());
        }
    }

    // LCS(u, v): longest subsequence of v accepted by the subsequences of u.
    // SCS(u, v): shortest supersequence of v accepted by the supersequences of u.
    let u = table.encode("abcbdab");
    let v = table.encode("bdcaba");
    let sigma = table.len() as u32;
    let chain = ENfa::word(&u, sigma);
    let lcs = quantitative_match(
        &downward_automaton(&chain),
        &v,
        RelationKind::Subsequence,
        Mode::Max,
    );
    let scs = quantitative_match(
        &upward_automaton(&chain),
        &v,
        RelationKind::Supersequence,
        Mode::Min,
    );
    println!(
        "lcs = {} ({}), scs = {} ({})",
        lcs.length().unwrap(),
        table.decode(lcs.witness().unwrap()),
        scs.length().unwrap(),
        table.decode(scs.witness().unwrap())
    );
    Ok(())
}
