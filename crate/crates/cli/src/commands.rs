use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;

use tourney_core::adversary::{make_adversary, run_game, AdversaryKind, Branch, ReferenceAlgorithm};
use tourney_core::format;
use tourney_core::generate::{generate, GenKind};
use tourney_core::par::{map_range, trial_seed};
use tourney_core::query::{run_query, QueryAlgorithm, QueryReport, QuerySpec};
use tourney_core::solutions::{self, maximal_lottery, markov_set};
use tourney_core::{Caps, SolutionKind, Tournament, Vertex};

use crate::output::{emit, join, sink, Format};

/// How a command finished when it did not fail outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// A bound or correctness check failed; the output was still written.
    Violation,
}

impl Outcome {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Violation
        }
    }
}

pub fn caps(cap: Option<usize>) -> Caps {
    cap.map(Caps::uniform).unwrap_or_default()
}

pub fn read_tournament(path: Option<&Path>) -> Result<Tournament> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            s
        }
    };
    Ok(format::parse(&text)?)
}

fn need_k(k: Option<usize>, what: &str) -> Result<usize> {
    k.ok_or_else(|| anyhow!("{what} needs --k"))
}

pub fn gen(kind: GenKind, n: usize, k: Option<usize>, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    let k = match kind {
        GenKind::PlantedTc => need_k(k, "planted-tc")?,
        _ => k.unwrap_or(1),
    };
    let t = generate(kind, n, k, seed)?;
    let mut w = sink(out)?;
    w.write_all(format::write(&t).as_bytes())?;
    w.flush()?;
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct SolveRow {
    solution: SolutionKind,
    n: usize,
    members: String,
    lottery: String,
}

pub fn solve(
    t: &Tournament,
    solution: SolutionKind,
    lottery: bool,
    caps: &Caps,
    fmt: Option<Format>,
    out: Option<&Path>,
) -> Result<Outcome> {
    let (set, lot) = match solution {
        SolutionKind::Markov => {
            let (set, pi) = markov_set(t);
            (set, Some(pi))
        }
        SolutionKind::Bipartisan if lottery => {
            let p = maximal_lottery(t, caps.lottery)?;
            (solutions::SolutionSet::new(solution, p.support()), Some(p))
        }
        _ => (solutions::solve(t, solution, caps)?, None),
    };
    let lot = match (lottery, lot) {
        (false, _) => None,
        (true, Some(p)) => Some(p.fractions().join(" ")),
        (true, None) => bail!("--lottery needs markov or bipartisan, not {solution}"),
    };

    let mut w = sink(out)?;
    match fmt {
        None => {
            writeln!(w, "{}", join(set.members()))?;
            if let Some(l) = &lot {
                writeln!(w, "{l}")?;
            }
            w.flush()?;
        }
        Some(f) => {
            let row = SolveRow {
                solution,
                n: t.n(),
                members: join(set.members()),
                lottery: lot.unwrap_or_default(),
            };
            emit(&[row], f, &mut w)?;
        }
    }
    Ok(Outcome::Ok)
}

/// One query-counted run, with the brute-force answer when it is cheap
/// enough to compute.
#[derive(Debug, Clone, Serialize)]
pub struct QueryRow {
    pub row: &'static str,
    pub trial: Option<usize>,
    pub algorithm: QueryAlgorithm,
    pub solution: Option<SolutionKind>,
    pub n: usize,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub queries: Option<usize>,
    pub bound: usize,
    pub within_bound: Option<bool>,
    pub correct: Option<bool>,
    pub output: String,
    pub trials: Option<usize>,
    pub max_queries: Option<usize>,
    pub mean_queries: Option<f64>,
}

impl QueryRow {
    fn trial(trial: Option<usize>, r: &QueryReport, correct: Option<bool>) -> Self {
        QueryRow {
            row: "trial",
            trial,
            algorithm: r.algorithm,
            solution: r.solution,
            n: r.n,
            k: r.k,
            seed: r.seed,
            queries: Some(r.queries),
            bound: r.bound,
            within_bound: Some(r.within_bound()),
            correct,
            output: join(&r.output),
            trials: None,
            max_queries: None,
            mean_queries: None,
        }
    }

    fn ok(&self) -> bool {
        self.within_bound != Some(false) && self.correct != Some(false)
    }
}

fn expected(t: &Tournament, spec: &QuerySpec) -> Option<Vec<Vertex>> {
    match spec.algorithm {
        QueryAlgorithm::CondorcetWinner => Some(solutions::condorcet_winner(t).into_iter().collect()),
        QueryAlgorithm::CondorcetNonLosers => solutions::condorcet_non_losers(t).ok().map(|s| s.into_members()),
        QueryAlgorithm::TopCycleK => Some(solutions::top_cycle(t).into_members()),
        QueryAlgorithm::SolutionK => solutions::solve(t, spec.solution, &spec.caps).ok().map(|s| s.into_members()),
    }
}

fn run_checked(t: &Tournament, spec: &QuerySpec) -> tourney_core::Result<(QueryReport, Option<bool>)> {
    let r = run_query(t, spec)?;
    let correct = expected(t, spec).map(|e| e == r.output);
    Ok((r, correct))
}

/// Algorithm parameters shared by `query` and `bench`.
#[derive(Debug, Clone, Copy)]
pub struct QueryParams {
    pub algorithm: QueryAlgorithm,
    pub k: Option<usize>,
    pub solution: Option<SolutionKind>,
    pub caps: Caps,
    pub verify: bool,
}

impl QueryParams {
    fn spec(&self) -> Result<QuerySpec> {
        let mut spec = QuerySpec::new(self.algorithm);
        spec.caps = self.caps;
        spec.verify = self.verify;
        match self.algorithm {
            QueryAlgorithm::TopCycleK => spec.k = need_k(self.k, "top-cycle-k")?,
            QueryAlgorithm::SolutionK => {
                spec.k = need_k(self.k, "solution-k")?;
                spec.solution = self.solution.ok_or_else(|| anyhow!("solution-k needs --solution"))?;
            }
            _ => {}
        }
        Ok(spec)
    }

    /// Planted instances for the promise algorithms, uniform ones otherwise.
    fn default_kind(&self) -> GenKind {
        match self.algorithm {
            QueryAlgorithm::TopCycleK | QueryAlgorithm::SolutionK => GenKind::PlantedTc,
            _ => GenKind::Random,
        }
    }
}

pub enum Input {
    File(Option<PathBuf>),
    Generated { kind: Option<GenKind>, n: usize, seed: u64 },
}

pub fn query(p: &QueryParams, input: Input, fmt: Format, out: Option<&Path>) -> Result<Outcome> {
    let spec = p.spec()?;
    let (t, seed) = match input {
        Input::File(path) => (read_tournament(path.as_deref())?, None),
        Input::Generated { kind, n, seed } => {
            (generate(kind.unwrap_or(p.default_kind()), n, spec.k, seed)?, Some(seed))
        }
    };
    let (mut r, correct) = run_checked(&t, &spec)?;
    r.seed = seed;
    let row = QueryRow::trial(None, &r, correct);
    emit(std::slice::from_ref(&row), fmt, &mut sink(out)?)?;
    Ok(Outcome::from_ok(row.ok()))
}

/// `8`, `8,16,32`, `4..64` (exclusive) or `4..=64`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad size `{x}` in `{s}`"));
        if let Some((a, b)) = part.split_once("..=") {
            out.extend(num(a)?..=num(b)?);
        } else if let Some((a, b)) = part.split_once("..") {
            out.extend(num(a)?..num(b)?);
        } else {
            out.push(num(part)?);
        }
    }
    if out.is_empty() {
        return Err(format!("no sizes in `{s}`"));
    }
    Ok(out)
}

pub fn bench(
    p: &QueryParams,
    kind: Option<GenKind>,
    sizes: &[usize],
    trials: usize,
    seed: u64,
    fmt: Format,
    out: Option<&Path>,
) -> Result<Outcome> {
    let spec = p.spec()?;
    let kind = kind.unwrap_or(p.default_kind());
    let mut rows = Vec::with_capacity(sizes.len() * (trials + 1));
    for &n in sizes {
        let runs = map_range(trials, |i| -> tourney_core::Result<QueryRow> {
            let s = trial_seed(seed, n as u64, i as u64);
            let t = generate(kind, n, spec.k, s)?;
            let (r, correct) = run_checked(&t, &spec)?;
            Ok(QueryRow::trial(Some(i), &r.with_seed(s), correct))
        });
        let runs = runs.into_iter().collect::<tourney_core::Result<Vec<_>>>()?;
        let counts: Vec<usize> = runs.iter().filter_map(|r| r.queries).collect();
        let max = counts.iter().copied().max().unwrap_or(0);
        let mean = counts.iter().sum::<usize>() as f64 / counts.len().max(1) as f64;
        let bound = runs.first().map_or(0, |r| r.bound);
        let correct = runs.iter().map(|r| r.correct).collect::<Option<Vec<bool>>>().map(|v| v.iter().all(|&c| c));
        let first = runs[0].clone();
        rows.extend(runs);
        rows.push(QueryRow {
            row: "aggregate",
            trial: None,
            seed: Some(seed),
            queries: None,
            within_bound: Some(max <= bound),
            correct,
            output: String::new(),
            trials: Some(trials),
            max_queries: Some(max),
            mean_queries: Some(mean),
            ..first
        });
    }
    emit(&rows, fmt, &mut sink(out)?)?;
    Ok(Outcome::from_ok(rows.iter().all(QueryRow::ok)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GameAlg {
    Exhaustive,
    SkipOne,
    RandomSkip,
    TopCycleK,
}

#[derive(Serialize)]
struct GameRow {
    adversary: AdversaryKind,
    algorithm: String,
    solution: SolutionKind,
    n: usize,
    vertices: usize,
    threshold: usize,
    queries: usize,
    relevant_queries: usize,
    output: String,
    truth: String,
    algorithm_correct: bool,
    falsified: bool,
    consistency_ok: bool,
    seed: Option<u64>,
}

#[allow(clippy::too_many_arguments)]
pub fn game(
    adversary: AdversaryKind,
    alg: GameAlg,
    n: usize,
    k: Option<usize>,
    branch: Branch,
    solution: Option<SolutionKind>,
    seed: u64,
    caps: &Caps,
    fmt: Format,
    out: Option<&Path>,
) -> Result<Outcome> {
    let algorithm = match alg {
        GameAlg::Exhaustive => ReferenceAlgorithm::Exhaustive,
        GameAlg::SkipOne => ReferenceAlgorithm::SkipOne(branch),
        GameAlg::RandomSkip => ReferenceAlgorithm::RandomSkip { seed, branch },
        GameAlg::TopCycleK => ReferenceAlgorithm::BoundedTopCycle { k: need_k(k, "top-cycle-k")? },
    };
    let mut adv = make_adversary(adversary, n, solution)?;
    let mut v = run_game(&mut adv, &algorithm, caps)?;
    if alg == GameAlg::RandomSkip {
        v = v.with_seed(seed);
    }
    let row = GameRow {
        adversary: v.adversary,
        algorithm: v.algorithm,
        solution: v.solution,
        n: v.n,
        vertices: v.vertices,
        threshold: v.threshold,
        queries: v.queries,
        relevant_queries: v.relevant_queries,
        output: join(&v.output),
        truth: join(&v.truth),
        algorithm_correct: v.algorithm_correct,
        falsified: v.falsified,
        consistency_ok: v.consistency_ok,
        seed: v.seed,
    };
    emit(&[row], fmt, &mut sink(out)?)?;
    Ok(Outcome::Ok)
}
