//! Instance generation, exact oracles and batch experiments.

pub mod experiment;
pub mod gadgets;
pub mod generators;
pub mod oracle;
pub mod targets;

pub use experiment::{
    read_results_csv, run_cell, run_experiment, write_results_csv, Algorithm, CellOutcome, ExperimentConfig,
    ResultRecord, RESULTS_HEADER,
};
pub use gadgets::{alg1_adversarial, greedy_adversarial, kunion, Gadget, KUnionInstance};
pub use generators::{erdos_renyi, preferential_attachment};
pub use oracle::{binomial, brute_force_opt, for_each_combination, BruteForceOptions, BruteForceResult};
pub use targets::{select_targets, DEFAULT_MIN_INDEGREE, DEFAULT_TARGET_COUNT};
