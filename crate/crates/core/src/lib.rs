//! Interval-valued rank functions on finite bounded posets.
//!
//! A hierarchy (ontology `is_a` graph, taxonomy, any DAG) is bounded with a
//! synthetic bottom and top, reduced to its Hasse diagram, and every element
//! is assigned the interval `[h(↑a) − 1, h − h(↓a)]` between its distance
//! from the top and its distance from the bottom. From there the crate
//! provides widths, centralities, spindles, procedural ranks, validation and
//! enumeration of interval rank functions, and pairwise interval comparisons.

pub mod cli;
pub mod comparison;
pub mod interval;
pub mod io;
pub mod poset;
pub mod rank;

pub use comparison::{compare_pair, comparison_matrix, ComparisonRecord, PairSelection};
pub use interval::{IntInterval, IntervalError, RelationClass};
pub use poset::{BoundingOptions, ChainSet, Poset, PosetError};
pub use rank::{
    classical_rank, enumerate_strict_rank_functions, freese_rank, procedural_interval_rank,
    procedural_rank_bottom, procedural_rank_top, standard_assignment, standard_interval_rank,
    validate_rank_assignment, OrderTag, RankAssignment, RankError, RankRow, RankTable,
    ValidationReport, Violation,
};
