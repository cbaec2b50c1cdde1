//! Free associative algebra, rewriting to normal form, completion and
//! randomized confluence testing.

mod confluence;
mod poly;
mod rewrite;
mod word;

pub use confluence::{check_local_confluence, trial_word, ConfluenceReport, Mismatch};
pub use poly::NCPoly;
pub use rewrite::{
    assemble, complete, critical_pairs, orient, unresolved_pairs, CriticalPair, RewriteRule,
    RewriteSystem, Strategy, COMPLETION_RULE_CAP, DEFAULT_BUDGET,
};
pub use word::{Letter, Word};
