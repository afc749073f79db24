use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::{Adversary, AdversaryKind};
use crate::error::{Error, Result};
use crate::generate::rng;
use crate::query::{find_solution_bounded, find_top_cycle_bounded, CountingOracle, Oracle};
use crate::solutions::{self, Caps, SolutionKind};
use crate::tournament::{pairs, Tournament};
use crate::Vertex;

/// What an algorithm is told before a game starts.
#[derive(Debug, Clone)]
pub struct GameSetup {
    pub vertices: usize,
    pub target: SolutionKind,
    pub caps: Caps,
    pub relevant: Vec<(Vertex, Vertex)>,
    pub threshold: usize,
    pub designated_skip: Vec<(Vertex, Vertex)>,
}

/// An algorithm that can sit across from an adversary.
pub trait GameAlgorithm {
    fn name(&self) -> String;

    /// Pairs the algorithm commits to leaving unasked.
    fn skipped(&self, _setup: &GameSetup) -> Vec<(Vertex, Vertex)> {
        Vec::new()
    }

    /// Plays the game and returns the claimed solution.
    fn play(
        &self,
        o: &mut dyn Oracle,
        setup: &GameSetup,
        skipped: &[(Vertex, Vertex)],
        pivot: &[Vertex],
    ) -> Result<Vec<Vertex>>;
}

/// Which way a skipping algorithm bends its claim around the pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Contain,
    Omit,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Contain => "contain",
            Branch::Omit => "omit",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "contain" => Ok(Branch::Contain),
            "omit" => Ok(Branch::Omit),
            _ => Err(Error::UnknownTag(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceAlgorithm {
    /// Asks every pair and solves exactly.
    Exhaustive,
    /// Leaves the adversary's designated pairs unasked, guesses them, and
    /// forces the claim onto `branch`.
    SkipOne(Branch),
    /// Like `SkipOne`, but skips a seeded random set of relevant pairs (just
    /// enough to stay under the threshold, or more) and asks the rest in a
    /// seeded random order.
    RandomSkip { seed: u64, branch: Branch },
    /// The bounded top-cycle algorithm with promise `k`, followed by the
    /// target solution on the cycle.
    BoundedTopCycle { k: usize },
}

impl GameAlgorithm for ReferenceAlgorithm {
    fn name(&self) -> String {
        match self {
            ReferenceAlgorithm::Exhaustive => "exhaustive".into(),
            ReferenceAlgorithm::SkipOne(b) => format!("skip-one-{b}"),
            ReferenceAlgorithm::RandomSkip { branch, .. } => format!("random-skip-{branch}"),
            ReferenceAlgorithm::BoundedTopCycle { k } => format!("top-cycle-k{k}"),
        }
    }

    fn skipped(&self, setup: &GameSetup) -> Vec<(Vertex, Vertex)> {
        match *self {
            ReferenceAlgorithm::SkipOne(_) => setup.designated_skip.clone(),
            ReferenceAlgorithm::RandomSkip { seed, .. } => {
                let mut rng = rng(seed);
                let total = setup.relevant.len();
                let least = total + 1 - setup.threshold.min(total);
                let count = rng.gen_range(least..=total);
                let mut relevant = setup.relevant.clone();
                relevant.shuffle(&mut rng);
                relevant.truncate(count);
                relevant
            }
            _ => Vec::new(),
        }
    }

    fn play(
        &self,
        o: &mut dyn Oracle,
        setup: &GameSetup,
        skipped: &[(Vertex, Vertex)],
        pivot: &[Vertex],
    ) -> Result<Vec<Vertex>> {
        let n = setup.vertices;
        let branch = match *self {
            ReferenceAlgorithm::BoundedTopCycle { k } => {
                let report = if setup.target == SolutionKind::TopCycle {
                    find_top_cycle_bounded(o, k, false)?
                } else {
                    find_solution_bounded(o, k, setup.target, &setup.caps, false)?
                };
                return Ok(report.output);
            }
            ReferenceAlgorithm::Exhaustive => None,
            ReferenceAlgorithm::SkipOne(b) | ReferenceAlgorithm::RandomSkip { branch: b, .. } => Some(b),
        };

        let skip: Vec<(Vertex, Vertex)> = skipped.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut order: Vec<(Vertex, Vertex)> = pairs(n).filter(|p| !skip.contains(p)).collect();
        if let ReferenceAlgorithm::RandomSkip { seed, .. } = *self {
            order.shuffle(&mut rng(seed ^ 0x5eed));
        }
        let mut o = CountingOracle::new(o);
        for (u, v) in order {
            o.beats(u, v);
        }
        let guess = o.transcript().complete_with(|lo, hi| lo < hi);
        let mut claim = solutions::solve(&guess, setup.target, &setup.caps)?.into_members();

        match branch {
            Some(Branch::Contain) if !pivot.iter().any(|p| claim.contains(p)) => {
                claim.push(pivot[0]);
                claim.sort_unstable();
            }
            Some(Branch::Omit) => {
                claim.retain(|v| !pivot.contains(v));
                if claim.is_empty() {
                    claim = (0..n).filter(|v| !pivot.contains(v)).collect();
                }
            }
            _ => {}
        }
        Ok(claim)
    }
}

/// How a game went.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameVerdict {
    pub adversary: AdversaryKind,
    pub algorithm: String,
    pub solution: SolutionKind,
    /// The construction's size parameter.
    pub n: usize,
    pub vertices: usize,
    pub threshold: usize,
    pub queries: usize,
    /// Queries on the pairs the threshold counts.
    pub relevant_queries: usize,
    pub output: Vec<Vertex>,
    pub truth: Vec<Vertex>,
    pub algorithm_correct: bool,
    pub falsified: bool,
    /// Every answer matched the completion. A returned verdict always has
    /// this set; a mismatch is reported as an error instead.
    pub consistency_ok: bool,
    pub seed: Option<u64>,
    #[serde(skip)]
    pub completion: Tournament,
}

impl GameVerdict {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Plays `algorithm` against `adversary`, then checks the transcript against
/// the completion and re-solves the completion from scratch.
pub fn run_game<A, G>(adversary: &mut A, algorithm: &G, caps: &Caps) -> Result<GameVerdict>
where
    A: Adversary + ?Sized,
    G: GameAlgorithm + ?Sized,
{
    let setup = GameSetup {
        vertices: adversary.n(),
        target: adversary.target(),
        caps: *caps,
        relevant: adversary.relevant_pairs(),
        threshold: adversary.threshold(),
        designated_skip: adversary.designated_skip(),
    };
    let skipped = algorithm.skipped(&setup);
    let pivot = adversary.pivot(&skipped);

    let mut counted = CountingOracle::new(&mut *adversary);
    let mut claim = algorithm.play(&mut counted, &setup, &skipped, &pivot)?;
    claim.sort_unstable();
    claim.dedup();
    let (_, transcript) = counted.into_parts();

    let completion = adversary.finalize(&claim, caps)?;
    let bad = |why: String| Err(Error::InconsistentAdversary(why));
    if !transcript.agrees_with(&completion.tournament)
        || !adversary.answers().agrees_with(&completion.tournament)
    {
        return bad("completion contradicts an earlier answer".into());
    }
    if transcript != *adversary.answers() {
        return bad("adversary record differs from the query transcript".into());
    }
    let truth = solutions::solve(&completion.tournament, setup.target, caps)?;
    let correct = truth.members() == claim.as_slice();
    if completion.falsifies == correct {
        return bad("completion verdict disagrees with a fresh solve".into());
    }
    let relevant_queries = adversary.relevant_queries();
    if relevant_queries < setup.threshold && correct {
        return bad(format!(
            "{relevant_queries} < {} relevant queries and the claim survived",
            setup.threshold
        ));
    }

    Ok(GameVerdict {
        adversary: adversary.kind(),
        algorithm: algorithm.name(),
        solution: setup.target,
        n: adversary.size(),
        vertices: setup.vertices,
        threshold: setup.threshold,
        queries: transcript.known_count(),
        relevant_queries,
        output: claim,
        truth: truth.into_members(),
        algorithm_correct: correct,
        falsified: completion.falsifies,
        consistency_ok: true,
        seed: None,
        completion: completion.tournament,
    })
}
