//! Constructive 2-of-5 label coverings on K_{1,6}-free graphs.
//!
//! Every vertex receives a 2-element subset of {1..5}; the goal is that each
//! closed neighborhood sees all five labels. This crate provides the graph
//! model, the verifier, an exact backtracking oracle, the local extension and
//! reduction rules the constructive solver is built from, the solver itself,
//! R-disk graph generation, and the two families showing the hypotheses of
//! the underlying theorem are tight.

pub mod counterexamples;
pub mod enumerate;
pub mod exceptional;
pub mod formats;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod rdisk;
pub mod rules;
pub mod solver;

pub use exceptional::{detect_exceptional, ExceptionalKind};
pub use graph::Graph;
pub use labeling::{verify, Configuration, LabelPair, PartialConfiguration};
pub use oracle::{exact_solve, OracleBudget, OracleResult};
pub use solver::{solve, SolveResult};
