use std::fmt;
use std::str::FromStr;

use crate::automaton::Symbol;

/// How a candidate string `u` must relate to the text `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    /// `u` occurs contiguously inside `w`.
    Infix,
    /// `u` is a prefix of `w`.
    Prefix,
    /// `w` occurs contiguously inside `u`.
    Extension,
    /// `u = v w` for some `v`.
    LeftExtension,
    /// `u` is obtained by deleting symbols of `w`.
    Subsequence,
    /// `w` is obtained by deleting symbols of `u`.
    Supersequence,
    /// `u = w`; plain membership.
    Equality,
}

impl RelationKind {
    /// The six relations with nontrivial matching problems.
    pub const ALL: [RelationKind; 6] = [
        RelationKind::Infix,
        RelationKind::Prefix,
        RelationKind::Extension,
        RelationKind::LeftExtension,
        RelationKind::Subsequence,
        RelationKind::Supersequence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Infix => "infix",
            RelationKind::Prefix => "prefix",
            RelationKind::Extension => "extension",
            RelationKind::LeftExtension => "left-extension",
            RelationKind::Subsequence => "subsequence",
            RelationKind::Supersequence => "supersequence",
            RelationKind::Equality => "equality",
        }
    }

    /// Whether only finitely many strings relate to a given text.
    pub fn is_finite(self) -> bool {
        matches!(
            self,
            RelationKind::Infix
                | RelationKind::Prefix
                | RelationKind::Subsequence
                | RelationKind::Equality
        )
    }

    /// Decide `u ⪯ w` directly from the definition.
    pub fn holds(self, u: &[Symbol], w: &[Symbol]) -> bool {
        match self {
            RelationKind::Infix => is_infix(u, w),
            RelationKind::Prefix => w.starts_with(u),
            RelationKind::Extension => is_infix(w, u),
            RelationKind::LeftExtension => u.ends_with(w),
            RelationKind::Subsequence => is_subsequence(u, w),
            RelationKind::Supersequence => is_subsequence(w, u),
            RelationKind::Equality => u == w,
        }
    }
}

/// Is `needle` a contiguous part of `haystack`?
pub fn is_infix(needle: &[Symbol], haystack: &[Symbol]) -> bool {
    needle.is_empty() || haystack.windows(needle.len()).any(|win| win == needle)
}

/// Is `needle` a (scattered) subsequence of `haystack`? Greedy left-to-right.
pub fn is_subsequence(needle: &[Symbol], haystack: &[Symbol]) -> bool {
    let mut rest = needle.iter().peekable();
    for h in haystack {
        if rest.peek() == Some(&h) {
            rest.next();
        }
    }
    rest.peek().is_none()
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "infix" => RelationKind::Infix,
            "prefix" => RelationKind::Prefix,
            "extension" => RelationKind::Extension,
            "left-extension" => RelationKind::LeftExtension,
            "subsequence" => RelationKind::Subsequence,
            "supersequence" => RelationKind::Supersequence,
            "equality" => RelationKind::Equality,
            _ => return Err(format!("unknown relation {s:?}")),
        })
    }
}
