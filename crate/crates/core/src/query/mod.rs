//! Pairwise-query oracles and the query-efficient algorithms.
//!
//! Every algorithm talks to a [`CountingOracle`], which remembers each answer
//! and charges one query per distinct pair. Asking again is free.

mod condorcet;
mod topcycle;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solutions::{Caps, SolutionKind};
use crate::tournament::{pair_count, PartialTournament, Tournament};
use crate::Vertex;

pub use condorcet::{find_condorcet_non_losers, find_condorcet_winner, winner_among};
pub use topcycle::{find_solution_bounded, find_top_cycle_bounded, TOP_CYCLE_CONSTANT};

/// Something that reveals the orientation of a pair.
///
/// Answers must be consistent with at least one tournament, and asking the
/// same pair twice must give the same answer.
pub trait Oracle {
    fn n(&self) -> usize;

    /// `true` iff `u` beats `v`.
    fn query(&mut self, u: Vertex, v: Vertex) -> bool;
}

impl<O: Oracle + ?Sized> Oracle for &mut O {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        (**self).query(u, v)
    }
}

/// Answers from a fixed tournament.
#[derive(Debug, Clone, Copy)]
pub struct StaticOracle<'a> {
    t: &'a Tournament,
}

pub fn static_oracle(t: &Tournament) -> StaticOracle<'_> {
    StaticOracle { t }
}

impl Oracle for StaticOracle<'_> {
    fn n(&self) -> usize {
        self.t.n()
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        self.t.beats(u, v)
    }
}

/// The same oracle with every edge turned around.
#[derive(Debug, Clone)]
pub struct Reversed<O>(pub O);

impl<O: Oracle> Oracle for Reversed<O> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        !self.0.query(u, v)
    }
}

/// Caches answers and counts distinct pairs asked.
#[derive(Debug, Clone)]
pub struct CountingOracle<O> {
    inner: O,
    transcript: PartialTournament,
    queries: usize,
}

impl<O: Oracle> CountingOracle<O> {
    pub fn new(inner: O) -> Self {
        let n = inner.n();
        CountingOracle { inner, transcript: PartialTournament::new(n), queries: 0 }
    }

    /// `true` iff `u` beats `v`, asking the inner oracle only the first time.
    pub fn beats(&mut self, u: Vertex, v: Vertex) -> bool {
        if let Some(known) = self.transcript.get(u, v) {
            return known;
        }
        let answer = self.inner.query(u, v);
        self.transcript.record(u, v, answer).expect("fresh pair on a valid vertex");
        self.queries += 1;
        answer
    }

    pub fn queries(&self) -> usize {
        self.queries
    }

    pub fn known(&self, u: Vertex, v: Vertex) -> Option<bool> {
        self.transcript.get(u, v)
    }

    pub fn transcript(&self) -> &PartialTournament {
        &self.transcript
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn into_parts(self) -> (O, PartialTournament) {
        (self.inner, self.transcript)
    }
}

impl<O: Oracle> Oracle for CountingOracle<O> {
    fn n(&self) -> usize {
        self.transcript.n()
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        self.beats(u, v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryAlgorithm {
    CondorcetWinner,
    CondorcetNonLosers,
    TopCycleK,
    SolutionK,
}

impl QueryAlgorithm {
    pub const ALL: [QueryAlgorithm; 4] = [
        QueryAlgorithm::CondorcetWinner,
        QueryAlgorithm::CondorcetNonLosers,
        QueryAlgorithm::TopCycleK,
        QueryAlgorithm::SolutionK,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            QueryAlgorithm::CondorcetWinner => "condorcet-winner",
            QueryAlgorithm::CondorcetNonLosers => "condorcet-non-losers",
            QueryAlgorithm::TopCycleK => "top-cycle-k",
            QueryAlgorithm::SolutionK => "solution-k",
        }
    }
}

impl fmt::Display for QueryAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for QueryAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        QueryAlgorithm::ALL
            .into_iter()
            .find(|a| a.tag() == norm)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// Outcome of one query-counted run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryReport {
    pub algorithm: QueryAlgorithm,
    pub solution: Option<SolutionKind>,
    pub n: usize,
    pub k: Option<usize>,
    pub queries: usize,
    pub bound: usize,
    /// Sorted; empty when the algorithm reports that nothing qualifies.
    pub output: Vec<Vertex>,
    pub seed: Option<u64>,
}

impl QueryReport {
    pub fn within_bound(&self) -> bool {
        self.queries <= self.bound
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// `2n - floor(log2 n) - 2`, and 0 for `n <= 1`.
pub fn condorcet_bound(n: usize) -> usize {
    if n <= 1 {
        return 0;
    }
    2 * n - n.ilog2() as usize - 2
}

/// Stated query bound for the top cycle under the promise `|TC| <= k`:
/// the Condorcet bound when `k = 1`, otherwise
/// `C (nk + n log2 n / |log2(1 - 1/k)|)` capped at all pairs.
pub fn top_cycle_bound(n: usize, k: usize) -> usize {
    if k <= 1 {
        return condorcet_bound(n);
    }
    let (nf, kf) = (n as f64, k as f64);
    let shrink = (1.0 - 1.0 / kf).log2().abs();
    let raw = TOP_CYCLE_CONSTANT * (nf * kf + nf * nf.max(1.0).log2() / shrink);
    (raw.ceil() as usize).min(pair_count(n))
}

/// Bound for a solution read off the top cycle: the top-cycle bound plus the
/// pairs inside a `k`-set.
pub fn solution_bound(n: usize, k: usize) -> usize {
    (top_cycle_bound(n, k) + pair_count(k)).min(pair_count(n))
}

/// Parameters for [`run_query`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuerySpec {
    pub algorithm: QueryAlgorithm,
    pub k: usize,
    pub solution: SolutionKind,
    pub caps: Caps,
    pub verify: bool,
}

impl QuerySpec {
    pub fn new(algorithm: QueryAlgorithm) -> Self {
        QuerySpec {
            algorithm,
            k: 1,
            solution: SolutionKind::TopCycle,
            caps: Caps::default(),
            verify: false,
        }
    }
}

/// Runs an algorithm against a static oracle over `t`.
pub fn run_query(t: &Tournament, spec: &QuerySpec) -> Result<QueryReport> {
    let o = static_oracle(t);
    match spec.algorithm {
        QueryAlgorithm::CondorcetWinner => Ok(find_condorcet_winner(o)),
        QueryAlgorithm::CondorcetNonLosers => find_condorcet_non_losers(o),
        QueryAlgorithm::TopCycleK => find_top_cycle_bounded(o, spec.k, spec.verify),
        QueryAlgorithm::SolutionK => {
            find_solution_bounded(o, spec.k, spec.solution, &spec.caps, spec.verify)
        }
    }
}
