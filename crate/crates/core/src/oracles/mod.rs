//! Independent reference values: closed forms, brute-force counts of other
//! families, Wilf classification, growth estimates and the conjecture
//! checks.

mod closed;
mod conjectures;
mod crossing;
mod growth;
mod wilf;

pub use closed::{
    avoiders_0112_sum, bell, binomial, binomial_transform_catalan, catalan, dyck_height5_count,
    half_power_formula, narayana, power_of_two, stirling2_row, ternary_even_twos_brute,
    ternary_even_twos_count,
};
pub use conjectures::{
    run_conjecture, ConjectureId, ConjectureResult, LengthVerdict, Witness, MODIFIED_BELL_PATTERNS,
};
pub use crossing::{has_k_crossing, non_k_crossing_partition_count};
pub use growth::growth_rate_estimates;
pub use wilf::{all_patterns, patterns_up_to, wilf_classify, Separation, WilfReport};
