//! Finite-field subspace combinatorics: Grassmann graphs of linear [n,k]_q
//! codes, the subgraph of non-degenerate codes, its clique taxonomy, and
//! explicit vertex maps with adjacency-preservation verdicts.

pub mod cliques;
pub mod code_graph;
pub mod error;
pub mod export;
pub mod field;
pub mod grassmannian;
pub mod linalg;
pub mod maps;
pub mod suites;
pub(crate) mod util;

pub use error::{Error, Result};
