//! Exact maximum-clique search with a greedy-coloring upper bound, plus
//! the instance family that forces such searches into exponential work.
//!
//! The crate has three layers:
//!
//! * [`graph`] and [`dimacs`]: bitset graphs and DIMACS text I/O;
//! * [`construct`], [`heuristics`], [`search`], [`oracle`]: the C5,q
//!   join-graph family, the greedy bound ingredients, the instrumented
//!   branch-and-bound solver, and brute-force ground truth;
//! * [`batch`], [`sweep`], [`verify`]: batch execution (rayon with the
//!   default `parallel` feature, sequential otherwise), the family sweep,
//!   and the verification suites.

pub mod batch;
pub mod construct;
pub mod dimacs;
pub mod graph;
pub mod heuristics;
pub mod oracle;
pub mod random;
pub mod search;
pub mod sweep;
pub mod verify;

pub use graph::{Graph, VertexSet};
pub use search::{solve, SearchLimits, SearchResult, SearchStatus};
