//! Exact solving, verification and gadget construction for the firefighter game
//! and its hunter-and-rabbit variant on small undirected graphs.

pub mod bounds;
pub mod engine;
pub mod error;
pub mod fuzz;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod nodeset;
pub mod oracle;
pub mod solver;
pub mod strategies;

pub use engine::{is_winning, run, step, verify, Strategy, StrategyJson, Variant, Verdict};
pub use error::*;
pub use graph::{blowup2, make_family, Family, Graph};
pub use nodeset::NodeSet;
pub use solver::{ffn, is_m_winning, shortest_t, SolveResult, Solver};
