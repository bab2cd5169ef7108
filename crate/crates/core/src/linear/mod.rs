//! Linear-time subsequence and supersequence matching, O(|w| + m).

mod registry;
mod subsequence;
mod supersequence;

pub use registry::{RegistryStats, SelfLoopRegistry, SelfLoops};
pub use subsequence::{
    match_subsequence, match_subsequence_with_stats, SubsequenceRun, SubsequenceStats,
};
pub use supersequence::{
    match_supersequence, SupersequenceMatcher, SupersequenceRun, SupersequenceStats,
};
