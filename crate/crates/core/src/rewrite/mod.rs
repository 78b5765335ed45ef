//! Oriented rewrite rules compiled from presentations, normalization, and
//! bounded confluence checking.

mod confluence;
mod interreduce;
mod order;
mod system;

pub use confluence::{check_confluence, critical_pairs, ConfluenceReport, CriticalPair};
pub use interreduce::interreduce;
pub use order::{inversions, OrderKey, TermOrder};
pub use system::{
    normalize, orient, orient_relation, RewriteRule, RewriteSystem, TraceStep, DEFAULT_STEP_LIMIT,
};
