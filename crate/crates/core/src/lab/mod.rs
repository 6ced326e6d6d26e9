//! The experimentation side of the library: structured generators,
//! randomized theorem-checking campaigns, and the exhaustive finite-ring
//! oracle the algorithmic side is validated against.

pub mod gen;
pub mod oracle;
pub mod theorems;

pub use gen::{
    gen_premise_pair, gen_with_rank, random_invertible, random_matrix,
    random_null_space_element, random_star_symmetric, trial_rng, GenerationExhausted,
    PremiseTheorem,
};
pub use oracle::{
    all_matrices, build_oracle, oracle_vs_algorithms, ComparisonReport, OracleCounts,
    OracleEntry, OracleTable,
};
pub use theorems::{
    chain_violation, check_double_commute, check_reverse_order, run_trials,
    witness_inner_inverses, TheoremId, TheoremReport, TrialConfig, Violation,
};
