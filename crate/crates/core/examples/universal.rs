//! Are all related strings in the language? Cheap for prefix and infix,
//! potentially exponential for the others, so those take a cap.

use relmatch::universal::counterexample;
use relmatch::{compile, universal_bounded, RelationKind};

fn main() -> relmatch::Result<()> {
    let cases = [
        ("(a|b)*", "abba", RelationKind::Infix),
        ("a*b*", "aabb", RelationKind::Subsequence),
        ("a*b*", "abab", RelationKind::Subsequence),
        ("(a|b)*ab", "ab", RelationKind::LeftExtension),
        ("(a|b)*ab", "ab", RelationKind::Extension),
        ("(a|b)*a(a|b)*", "a", RelationKind::Supersequence),
    ];
    for (pattern, text, rel) in cases {
        let (nfa, mut table) = compile(pattern)?;
        let w = table.encode(text);
        let verdict = universal_bounded(&nfa, &w, rel, 10_000);
        print!("{pattern:>14} {:>14} {text:<5} {verdict:?}", rel.name());
        if let Ok(Some(bad)) = counterexample(&nfa, &w, rel, 10_000) {
            print!("  counterexample {:?}", table.decode(&bad));
        }
        println!();
    }

    let (nfa, mut table) = compile("(a|b|c)*")?;
    let w = table.encode("abcabcabc");
    println!(
        "tiny cap: {:?}",
        universal_bounded(&nfa, &w, RelationKind::Subsequence, 5)
    );
    Ok(())
}
