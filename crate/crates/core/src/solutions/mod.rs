//! Definition-faithful tournament solutions on fully known tournaments.
//!
//! Every solution returns a nonempty vertex set; there is no tie-breaking
//! anywhere. The exponential ones (Slater, maximal lottery, Banks) refuse
//! inputs above a configurable size instead of running unbounded.

mod banks;
mod lottery;
mod markov;
mod slater;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::Vertex;

pub use banks::banks_set;
pub use lottery::{bipartisan_set, is_maximal_lottery, maximal_lottery, Lottery};
pub use markov::{markov_set, markov_transition, stationary_distribution, TransitionMatrix};
pub use slater::slater_set;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionKind {
    CondorcetNonLosers,
    Copeland,
    Slater,
    Markov,
    Bipartisan,
    Uncovered,
    Banks,
    TopCycle,
}

impl SolutionKind {
    /// The seven solutions with a query-efficient bounded algorithm.
    pub const BOUNDED: [SolutionKind; 7] = [
        SolutionKind::Copeland,
        SolutionKind::Slater,
        SolutionKind::Markov,
        SolutionKind::Bipartisan,
        SolutionKind::Uncovered,
        SolutionKind::Banks,
        SolutionKind::TopCycle,
    ];

    pub const ALL: [SolutionKind; 8] = [
        SolutionKind::CondorcetNonLosers,
        SolutionKind::Copeland,
        SolutionKind::Slater,
        SolutionKind::Markov,
        SolutionKind::Bipartisan,
        SolutionKind::Uncovered,
        SolutionKind::Banks,
        SolutionKind::TopCycle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SolutionKind::CondorcetNonLosers => "condorcet-non-losers",
            SolutionKind::Copeland => "copeland",
            SolutionKind::Slater => "slater",
            SolutionKind::Markov => "markov",
            SolutionKind::Bipartisan => "bipartisan",
            SolutionKind::Uncovered => "uncovered",
            SolutionKind::Banks => "banks",
            SolutionKind::TopCycle => "top-cycle",
        }
    }
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        SolutionKind::ALL
            .into_iter()
            .find(|k| k.tag() == norm)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// Size limits for the exact exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub slater: usize,
    pub lottery: usize,
    pub banks: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { slater: 10, lottery: 12, banks: 14 }
    }
}

impl Caps {
    /// The same cap for every solver.
    pub fn uniform(cap: usize) -> Self {
        Caps { slater: cap, lottery: cap, banks: cap }
    }
}

/// A nonempty, ascending vertex set tagged with the solution that chose it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolutionSet {
    pub kind: SolutionKind,
    members: Vec<Vertex>,
}

impl SolutionSet {
    pub fn new(kind: SolutionKind, mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        assert!(!members.is_empty(), "{kind} selected no vertex");
        SolutionSet { kind, members }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn into_members(self) -> Vec<Vertex> {
        self.members
    }
}

fn require_nonempty(t: &Tournament) -> Result<()> {
    if t.n() == 0 {
        return Err(Error::TooSmall { n: 0, min: 1 });
    }
    Ok(())
}

/// Computes `kind` on `t`.
pub fn solve(t: &Tournament, kind: SolutionKind, caps: &Caps) -> Result<SolutionSet> {
    require_nonempty(t)?;
    Ok(match kind {
        SolutionKind::CondorcetNonLosers => condorcet_non_losers(t)?,
        SolutionKind::Copeland => copeland_set(t),
        SolutionKind::Slater => slater_set(t, caps.slater)?,
        SolutionKind::Markov => markov_set(t).0,
        SolutionKind::Bipartisan => bipartisan_set(t, caps.lottery)?,
        SolutionKind::Uncovered => uncovered_set(t),
        SolutionKind::Banks => banks_set(t, caps.banks)?,
        SolutionKind::TopCycle => top_cycle(t),
    })
}

/// The vertex beating everybody else, if any.
pub fn condorcet_winner(t: &Tournament) -> Option<Vertex> {
    let n = t.n();
    t.out_degrees().iter().position(|&d| d + 1 == n)
}

/// Vertices with at least one win.
pub fn condorcet_non_losers(t: &Tournament) -> Result<SolutionSet> {
    if t.n() < 2 {
        return Err(Error::TooSmall { n: t.n(), min: 2 });
    }
    let winners = (0..t.n()).filter(|&v| t.out_degree(v) > 0).collect();
    Ok(SolutionSet::new(SolutionKind::CondorcetNonLosers, winners))
}

/// Vertices of maximum out-degree.
pub fn copeland_set(t: &Tournament) -> SolutionSet {
    let deg = t.out_degrees();
    let best = deg.iter().copied().max().expect("nonempty tournament");
    let members = (0..t.n()).filter(|&v| deg[v] == best).collect();
    SolutionSet::new(SolutionKind::Copeland, members)
}

/// `true` iff `u` covers `v`: `D(v) ⊆ D(u)` (which forces `u` to beat `v`).
pub fn covers(t: &Tournament, u: Vertex, v: Vertex) -> Result<bool> {
    for x in [u, v] {
        if x >= t.n() {
            return Err(Error::InvalidVertex { vertex: x, n: t.n() });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(covers_unchecked(t, u, v))
}

fn covers_unchecked(t: &Tournament, u: Vertex, v: Vertex) -> bool {
    t.beats(u, v) && (0..t.n()).all(|w| !t.beats(v, w) || t.beats(u, w))
}

/// Vertices covered by nobody.
pub fn uncovered_set(t: &Tournament) -> SolutionSet {
    let n = t.n();
    let members = (0..n)
        .filter(|&v| !(0..n).any(|u| u != v && covers_unchecked(t, u, v)))
        .collect();
    SolutionSet::new(SolutionKind::Uncovered, members)
}

/// The smallest dominant set.
pub fn top_cycle(t: &Tournament) -> SolutionSet {
    let first = t.condensation().into_iter().next().expect("nonempty tournament");
    SolutionSet::new(SolutionKind::TopCycle, first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{regular_tournament, regular_with_flip};

    fn cycle3() -> Tournament {
        Tournament::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn tags_round_trip() {
        for k in SolutionKind::ALL {
            assert_eq!(k.tag().parse::<SolutionKind>().unwrap(), k);
        }
        assert_eq!("TOP_CYCLE".parse::<SolutionKind>().unwrap(), SolutionKind::TopCycle);
        assert!("nonsense".parse::<SolutionKind>().is_err());
    }

    #[test]
    fn condorcet_winner_examples() {
        assert_eq!(condorcet_winner(&Tournament::transitive(3)), Some(0));
        assert_eq!(condorcet_winner(&cycle3()), None);
        assert_eq!(condorcet_winner(&regular_tournament(5).unwrap()), None);
    }

    #[test]
    fn non_loser_examples() {
        assert_eq!(condorcet_non_losers(&Tournament::transitive(3)).unwrap().members(), [0, 1]);
        assert_eq!(condorcet_non_losers(&cycle3()).unwrap().members(), [0, 1, 2]);
        assert_eq!(condorcet_non_losers(&regular_tournament(7).unwrap()).unwrap().len(), 7);
        assert_eq!(
            condorcet_non_losers(&Tournament::transitive(1)),
            Err(Error::TooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn copeland_examples() {
        assert_eq!(copeland_set(&regular_tournament(5).unwrap()).len(), 5);
        assert_eq!(copeland_set(&regular_with_flip(5, 0, 1).unwrap()).members(), [1]);
        assert_eq!(copeland_set(&Tournament::transitive(3)).members(), [0]);
    }

    #[test]
    fn covering_examples() {
        let tr = Tournament::transitive(3);
        assert!(covers(&tr, 0, 1).unwrap());
        let c = cycle3();
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    assert!(!covers(&c, u, v).unwrap());
                }
            }
        }
        assert_eq!(covers(&c, 1, 1), Err(Error::SameVertex(1)));
        assert_eq!(uncovered_set(&tr).members(), [0]);
        assert_eq!(uncovered_set(&c).members(), [0, 1, 2]);
    }

    #[test]
    fn top_cycle_examples() {
        assert_eq!(top_cycle(&Tournament::transitive(3)).members(), [0]);
        assert_eq!(top_cycle(&cycle3()).members(), [0, 1, 2]);
        let t = Tournament::build(4, &[(1, 2), (2, 3), (3, 1), (1, 0), (2, 0), (3, 0)]).unwrap();
        assert_eq!(top_cycle(&t).members(), [1, 2, 3]);
    }

    #[test]
    fn single_vertex_conventions() {
        let t = Tournament::transitive(1);
        for kind in SolutionKind::BOUNDED {
            assert_eq!(solve(&t, kind, &Caps::default()).unwrap().members(), [0], "{kind}");
        }
        assert!(solve(&t, SolutionKind::CondorcetNonLosers, &Caps::default()).is_err());
        assert!(solve(&Tournament::transitive(0), SolutionKind::Copeland, &Caps::default()).is_err());
    }
}
