use super::{
    solution_bound, top_cycle_bound, winner_among, CountingOracle, Oracle, QueryAlgorithm,
    QueryReport,
};
use crate::error::{Error, Result};
use crate::solutions::{self, Caps, SolutionKind};
use crate::tournament::Tournament;
use crate::Vertex;

/// Multiplier in [`super::top_cycle_bound`], fixed after measuring the
/// elimination scheme on planted instances.
pub const TOP_CYCLE_CONSTANT: f64 = 1.0;

pub(crate) struct Elimination {
    pub output: Vec<Vertex>,
    #[cfg_attr(not(test), allow(dead_code))]
    pub deleted: Vec<Vertex>,
}

/// Block elimination for a top cycle of size at most `k >= 2`.
///
/// Vertices sit in blocks of exactly `2k` whose internal pairs are all known,
/// or loose. Some block member always has at least `k` dominators inside the
/// block, which rules it out of a top cycle of size `<= k`; every round drops
/// one such vertex per block. Blocks left with `2k - 1` members each take one
/// loose vertex (dissolving blocks to make enough loose ones), leftovers form
/// fresh blocks, and once at most `4k` vertices remain all their pairs are
/// asked and the source component is returned.
fn eliminate<O: Oracle>(o: &mut CountingOracle<O>, k: usize) -> Elimination {
    let n = o.n();
    let size = 2 * k;
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut loose: Vec<Vertex> = (0..n).collect();
    let mut deleted = Vec::new();

    loop {
        let active = blocks.iter().map(Vec::len).sum::<usize>() + loose.len();
        if active <= 4 * k {
            break;
        }
        while loose.len() < blocks.len() {
            let b = blocks.pop().expect("more blocks than loose vertices");
            loose.extend(b);
        }
        let mut pool = loose.drain(..);
        for b in &mut blocks {
            let w = pool.next().expect("one arrival per block");
            for &m in b.iter() {
                o.beats(w, m);
            }
            b.push(w);
        }
        let rest: Vec<Vertex> = pool.collect();
        let mut chunks = rest.chunks_exact(size);
        for c in &mut chunks {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    o.beats(u, v);
                }
            }
            blocks.push(c.to_vec());
        }
        loose = chunks.remainder().to_vec();

        for b in &mut blocks {
            let indeg = |v: Vertex| b.iter().filter(|&&u| o.known(u, v) == Some(true)).count();
            let (pos, worst) = b
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| (indeg(v), std::cmp::Reverse(v)))
                .map(|(i, &v)| (i, v))
                .expect("nonempty block");
            debug_assert!(indeg(worst) >= k);
            b.swap_remove(pos);
            deleted.push(worst);
        }
    }

    let mut active: Vec<Vertex> = blocks.into_iter().flatten().chain(loose).collect();
    active.sort_unstable();
    let sub = Tournament::from_fn(active.len(), |lo, hi| o.beats(active[lo], active[hi]));
    let mut output: Vec<Vertex> =
        sub.condensation().swap_remove(0).into_iter().map(|i| active[i]).collect();
    output.sort_unstable();
    Elimination { output, deleted }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    Ok(())
}

fn top_cycle_in<O: Oracle>(o: &mut CountingOracle<O>, k: usize, verify: bool) -> Result<Vec<Vertex>> {
    let n = o.n();
    if k == 1 {
        let all: Vec<Vertex> = (0..n).collect();
        return match winner_among(o, &all) {
            Some(w) => Ok(vec![w]),
            None => Err(Error::PromiseViolated("no Condorcet winner although k = 1".into())),
        };
    }
    let cycle = eliminate(o, k).output;
    if verify {
        for v in (0..n).filter(|v| cycle.binary_search(v).is_err()) {
            if let Some(&c) = cycle.iter().find(|&&c| !o.beats(c, v)) {
                return Err(Error::PromiseViolated(format!("{v} beats {c}, who was reported in the top cycle")));
            }
        }
        if cycle.len() > k {
            return Err(Error::PromiseViolated(format!("top cycle has {} > {k} vertices", cycle.len())));
        }
    }
    Ok(cycle)
}

/// Top cycle of the oracle's tournament, assuming it has at most `k`
/// vertices. With `verify`, the outside pairs are checked as well and a
/// broken promise is reported instead of a possibly wrong answer.
pub fn find_top_cycle_bounded<O: Oracle>(o: O, k: usize, verify: bool) -> Result<QueryReport> {
    let n = o.n();
    check_k(n, k)?;
    let mut o = CountingOracle::new(o);
    let output = top_cycle_in(&mut o, k, verify)?;
    Ok(QueryReport {
        algorithm: QueryAlgorithm::TopCycleK,
        solution: Some(SolutionKind::TopCycle),
        n,
        k: Some(k),
        queries: o.queries(),
        bound: top_cycle_bound(n, k),
        output,
        seed: None,
    })
}

/// `which` computed on the top cycle alone, which gives the same set as on
/// the whole tournament.
pub fn find_solution_bounded<O: Oracle>(
    o: O,
    k: usize,
    which: SolutionKind,
    caps: &Caps,
    verify: bool,
) -> Result<QueryReport> {
    let n = o.n();
    check_k(n, k)?;
    if which == SolutionKind::CondorcetNonLosers {
        return Err(Error::BadParams("condorcet-non-losers is not read off the top cycle".into()));
    }
    let mut o = CountingOracle::new(o);
    let cycle = top_cycle_in(&mut o, k, verify)?;
    let sub = Tournament::from_fn(cycle.len(), |lo, hi| o.beats(cycle[lo], cycle[hi]));
    let inner = solutions::solve(&sub, which, caps)?;
    Ok(QueryReport {
        algorithm: QueryAlgorithm::SolutionK,
        solution: Some(which),
        n,
        k: Some(k),
        queries: o.queries(),
        bound: solution_bound(n, k),
        output: inner.members().iter().map(|&i| cycle[i]).collect(),
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::regular_tournament;
    use crate::generate::{generate, GenKind};
    use crate::query::static_oracle;
    use crate::solutions::{copeland_set, top_cycle};

    #[test]
    fn planted_three_cycle_block() {
        // regular(3) block on {0,1,2} beating 47 others
        let c3 = regular_tournament(3).unwrap();
        let t = Tournament::from_fn(50, |lo, hi| if hi < 3 { c3.beats(lo, hi) } else { lo < 3 || (lo + hi) % 3 == 0 });
        let r = find_top_cycle_bounded(static_oracle(&t), 3, false).unwrap();
        assert_eq!(r.output, [0, 1, 2]);
        assert!(r.queries < 1225);
        assert!(r.within_bound());
    }

    #[test]
    fn k_one_and_k_n() {
        let r = find_top_cycle_bounded(static_oracle(&Tournament::transitive(16)), 1, false).unwrap();
        assert_eq!(r.output, [0]);
        assert!(r.queries <= 26);
        let t = generate(GenKind::Random, 9, 0, 5).unwrap();
        let r = find_top_cycle_bounded(static_oracle(&t), 9, false).unwrap();
        assert_eq!(r.output, top_cycle(&t).members());
        assert!(matches!(
            find_top_cycle_bounded(static_oracle(&regular_tournament(5).unwrap()), 1, false),
            Err(Error::PromiseViolated(_))
        ));
        assert!(matches!(
            find_top_cycle_bounded(static_oracle(&t), 10, false),
            Err(Error::InvalidK { .. })
        ));
        assert!(matches!(
            find_top_cycle_bounded(static_oracle(&t), 0, false),
            Err(Error::InvalidK { .. })
        ));
    }

    #[test]
    fn deleted_vertices_have_k_dominators() {
        for seed in 0..30 {
            for (n, k) in [(40, 3), (37, 4), (25, 5)] {
                let t = generate(GenKind::PlantedTc, n, k, seed).unwrap();
                let mut o = CountingOracle::new(static_oracle(&t));
                let run = eliminate(&mut o, k);
                assert_eq!(run.output, top_cycle(&t).members());
                for &v in &run.deleted {
                    let dom = (0..n).filter(|&u| o.known(u, v) == Some(true)).count();
                    assert!(dom >= k);
                }
            }
        }
    }

    #[test]
    fn verify_catches_broken_promise() {
        let t = regular_tournament(21).unwrap();
        assert!(matches!(
            find_top_cycle_bounded(static_oracle(&t), 3, true),
            Err(Error::PromiseViolated(_))
        ));
        let t = generate(GenKind::PlantedTc, 60, 3, 1).unwrap();
        let r = find_top_cycle_bounded(static_oracle(&t), 3, true).unwrap();
        assert_eq!(r.output, top_cycle(&t).members());
        let t = generate(GenKind::PlantedTc, 60, 5, 1).unwrap();
        assert!(matches!(
            find_top_cycle_bounded(static_oracle(&t), 4, true),
            Err(Error::PromiseViolated(_))
        ));
    }

    #[test]
    fn solutions_on_the_cycle() {
        let t = generate(GenKind::PlantedTc, 50, 3, 2).unwrap();
        let caps = Caps::default();
        let r = find_solution_bounded(static_oracle(&t), 3, SolutionKind::Copeland, &caps, false).unwrap();
        assert_eq!(r.output, copeland_set(&t).members());
        let r = find_solution_bounded(static_oracle(&t), 3, SolutionKind::Markov, &caps, false).unwrap();
        assert_eq!(r.output, top_cycle(&t).members());
        assert!(r.within_bound());
        let tr = Tournament::transitive(12);
        for which in SolutionKind::BOUNDED {
            let r = find_solution_bounded(static_oracle(&tr), 1, which, &caps, false).unwrap();
            assert_eq!(r.output, [0]);
        }
    }
}
