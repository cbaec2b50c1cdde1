//! Matrix-tier checks: equations between words in matrix symbols, proved
//! by rewriting with the exchange relations.

mod checks;
mod dagger;
mod prover;
mod realize;
mod rulebase;
mod symbol;

pub use checks::{
    corrupted_compact_table, corrupted_monodromy_table, evolve_check, verify_involution_consistency,
    verify_involution_with, wznw_periodicity_check, wznw_with, EvolveReport, InvolutionReport, Obligation,
    PrintedAudit, ProofStatus, SampleComputation, WznwReport,
};
pub use dagger::DaggerTable;
pub use realize::{cross_tier_check, CrossTierEntry};
pub use prover::{ProofStep, ProofTrace, Prover, ProverConfig, Variant};
pub use rulebase::{BaseRule, RuleBase, RuleOrigin, PRINTED_SIGMA_MIXED};
pub use symbol::{
    expand, free_reduce, inverse_word, parse_equation, parse_word, render_word, swap_word, MatEquation, MatName,
    MatSymbol, MatWord, Space,
};
