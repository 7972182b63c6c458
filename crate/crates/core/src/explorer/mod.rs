//! Seeded configuration generators and randomized searches with exact
//! re-verification of every candidate.

mod generators;
mod search;

pub use generators::*;
pub use search::{
    open_problem_1_search, open_problem_2_search, open_problem_2_search_family, Counterexample,
    Interpretation, Problem, Problem2Family, SearchReport, Tally,
};
