//! Exact tournament solutions, query-counted algorithms for finding them, and
//! adversary oracles that force under-querying algorithms into mistakes.
//!
//! * [`tournament`], [`construct`], [`format`]: storage, canonical
//!   constructions and the text file format.
//! * [`solutions`]: the seven solution concepts, computed exactly.
//! * [`query`]: oracles with distinct-pair counting and the query-efficient
//!   algorithms.
//! * [`adversary`]: adaptive oracles plus a game runner that adjudicates an
//!   algorithm's output by brute force.
//! * [`generate`], [`par`]: seeded instance generators and the data-parallel
//!   batch helpers (rayon behind the `parallel` feature).

pub mod adversary;
pub mod construct;
pub mod error;
pub mod format;
pub mod generate;
pub mod par;
pub mod query;
pub mod rational;
pub mod solutions;
pub mod tournament;

pub use error::{Error, Result};
pub use solutions::{Caps, SolutionKind, SolutionSet};
pub use tournament::{PartialTournament, Permutation, Tournament};

/// Vertices are indices in `0..n`.
pub type Vertex = usize;
