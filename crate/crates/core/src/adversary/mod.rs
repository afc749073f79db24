//! Adaptive oracles that keep enough edges open to refute any algorithm
//! asking too few questions, and a runner that plays them against
//! algorithms and checks the outcome by brute force.

mod builds;
mod game;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::query::Oracle;
use crate::solutions::{self, Caps, SolutionKind, SolutionSet};
use crate::tournament::{PartialTournament, Tournament};
use crate::Vertex;

pub use builds::{BanksAdversary, BipartisanAdversary, RegularAdversary, TopCycleAdversary, UncoveredAdversary};
pub use game::{run_game, Branch, GameAlgorithm, GameSetup, GameVerdict, ReferenceAlgorithm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdversaryKind {
    Regular,
    Bipartisan,
    Uncovered,
    Banks,
    #[serde(rename = "topcycle")]
    TopCycle,
}

impl AdversaryKind {
    pub const ALL: [AdversaryKind; 5] = [
        AdversaryKind::Regular,
        AdversaryKind::Bipartisan,
        AdversaryKind::Uncovered,
        AdversaryKind::Banks,
        AdversaryKind::TopCycle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            AdversaryKind::Regular => "regular",
            AdversaryKind::Bipartisan => "bipartisan",
            AdversaryKind::Uncovered => "uncovered",
            AdversaryKind::Banks => "banks",
            AdversaryKind::TopCycle => "topcycle",
        }
    }

    /// The solution the adversary is built to defeat (`regular` defaults to
    /// Copeland and also accepts Slater and Markov).
    pub fn default_target(self) -> SolutionKind {
        match self {
            AdversaryKind::Regular => SolutionKind::Copeland,
            AdversaryKind::Bipartisan => SolutionKind::Bipartisan,
            AdversaryKind::Uncovered => SolutionKind::Uncovered,
            AdversaryKind::Banks => SolutionKind::Banks,
            AdversaryKind::TopCycle => SolutionKind::TopCycle,
        }
    }
}

impl fmt::Display for AdversaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for AdversaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', '-'], "");
        AdversaryKind::ALL
            .into_iter()
            .find(|a| a.tag() == norm)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// The tournament an adversary reveals at the end of a game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub tournament: Tournament,
    /// Brute-force value of the target solution on `tournament`.
    pub truth: SolutionSet,
    /// `truth` differs from the claimed output.
    pub falsifies: bool,
}

/// An adaptive oracle with an end-of-game completion rule.
pub trait Adversary: Oracle {
    fn kind(&self) -> AdversaryKind;

    /// Size parameter the construction was built from (not the vertex count).
    fn size(&self) -> usize;

    fn target(&self) -> SolutionKind;

    /// Every answer given so far.
    fn answers(&self) -> &PartialTournament;

    /// Pairs whose queries count toward [`Adversary::threshold`].
    fn relevant_pairs(&self) -> Vec<(Vertex, Vertex)>;

    /// Fewer relevant queries than this and the completion must refute the
    /// claimed output.
    fn threshold(&self) -> usize;

    /// A single skip that leaves the transcript under the threshold.
    fn designated_skip(&self) -> Vec<(Vertex, Vertex)>;

    /// The vertices whose membership in the claim decides the completion,
    /// given which pairs will stay unasked.
    fn pivot(&self, skipped: &[(Vertex, Vertex)]) -> Vec<Vertex>;

    /// Orients every unanswered pair in reaction to `claimed`.
    fn complete(&self, claimed: &[Vertex]) -> Tournament;

    fn relevant_queries(&self) -> usize {
        self.relevant_pairs().into_iter().filter(|&(u, v)| self.answers().is_known(u, v)).count()
    }

    /// Completes the tournament and judges `claimed` against it.
    fn finalize(&self, claimed: &[Vertex], caps: &Caps) -> Result<Completion> {
        let tournament = self.complete(claimed);
        let truth = solutions::solve(&tournament, self.target(), caps)?;
        let falsifies = truth.members() != claimed;
        Ok(Completion { tournament, truth, falsifies })
    }
}

/// Builds an adversary by tag. `target` only matters for `regular`.
pub fn make_adversary(
    kind: AdversaryKind,
    n: usize,
    target: Option<SolutionKind>,
) -> Result<Box<dyn Adversary + Send>> {
    Ok(match kind {
        AdversaryKind::Regular => Box::new(RegularAdversary::new(
            n,
            target.unwrap_or(SolutionKind::Copeland),
        )?),
        AdversaryKind::Bipartisan => Box::new(BipartisanAdversary::new(n)?),
        AdversaryKind::Uncovered => Box::new(UncoveredAdversary::new(n)?),
        AdversaryKind::Banks => Box::new(BanksAdversary::new(n)?),
        AdversaryKind::TopCycle => Box::new(TopCycleAdversary::new(n)?),
    })
}

impl<A: Adversary + ?Sized> Adversary for Box<A> {
    fn kind(&self) -> AdversaryKind {
        (**self).kind()
    }
    fn size(&self) -> usize {
        (**self).size()
    }
    fn target(&self) -> SolutionKind {
        (**self).target()
    }
    fn answers(&self) -> &PartialTournament {
        (**self).answers()
    }
    fn relevant_pairs(&self) -> Vec<(Vertex, Vertex)> {
        (**self).relevant_pairs()
    }
    fn threshold(&self) -> usize {
        (**self).threshold()
    }
    fn designated_skip(&self) -> Vec<(Vertex, Vertex)> {
        (**self).designated_skip()
    }
    fn pivot(&self, skipped: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        (**self).pivot(skipped)
    }
    fn complete(&self, claimed: &[Vertex]) -> Tournament {
        (**self).complete(claimed)
    }
}

impl<O: Oracle + ?Sized> Oracle for Box<O> {
    fn n(&self) -> usize {
        (**self).n()
    }
    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        (**self).query(u, v)
    }
}
