use super::{condorcet_bound, CountingOracle, Oracle, QueryAlgorithm, QueryReport, Reversed};
use crate::error::{Error, Result};
use crate::solutions::SolutionKind;
use crate::Vertex;

/// Condorcet winner among `candidates`, or `None`.
///
/// A single-elimination bracket first: a preliminary round trims the field to
/// a power of two `p`, after which the champion has won `log2 p` matches
/// outright. The champion then plays everyone it has not beaten yet. On `m`
/// candidates this asks at most `2m - floor(log2 m) - 2` new pairs.
pub fn winner_among<O: Oracle>(o: &mut CountingOracle<O>, candidates: &[Vertex]) -> Option<Vertex> {
    let m = candidates.len();
    match m {
        0 => return None,
        1 => return Some(candidates[0]),
        _ => {}
    }
    let p = 1usize << m.ilog2();
    let extra = m - p;
    let mut beaten: Vec<Vec<Vertex>> = vec![Vec::new(); m];

    let play = |o: &mut CountingOracle<O>, beaten: &mut Vec<Vec<Vertex>>, a: usize, b: usize| {
        let (w, l) = if o.beats(candidates[a], candidates[b]) { (a, b) } else { (b, a) };
        beaten[w].push(candidates[l]);
        w
    };

    let mut field: Vec<usize> = (0..extra).map(|i| play(o, &mut beaten, 2 * i, 2 * i + 1)).collect();
    field.extend(2 * extra..m);
    while field.len() > 1 {
        field = field.chunks(2).map(|c| play(o, &mut beaten, c[0], c[1])).collect();
    }

    let champ = field[0];
    let c = candidates[champ];
    for &w in candidates {
        if w != c && !beaten[champ].contains(&w) && !o.beats(c, w) {
            return None;
        }
    }
    Some(c)
}

pub fn find_condorcet_winner<O: Oracle>(o: O) -> QueryReport {
    let n = o.n();
    let mut o = CountingOracle::new(o);
    let all: Vec<Vertex> = (0..n).collect();
    let winner = winner_among(&mut o, &all);
    QueryReport {
        algorithm: QueryAlgorithm::CondorcetWinner,
        solution: None,
        n,
        k: None,
        queries: o.queries(),
        bound: condorcet_bound(n),
        output: winner.into_iter().collect(),
        seed: None,
    }
}

/// Everyone except the Condorcet loser, found as the winner of the reversed
/// tournament.
pub fn find_condorcet_non_losers<O: Oracle>(o: O) -> Result<QueryReport> {
    let n = o.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let mut o = CountingOracle::new(Reversed(o));
    let all: Vec<Vertex> = (0..n).collect();
    let loser = winner_among(&mut o, &all);
    Ok(QueryReport {
        algorithm: QueryAlgorithm::CondorcetNonLosers,
        solution: Some(SolutionKind::CondorcetNonLosers),
        n,
        k: None,
        queries: o.queries(),
        bound: condorcet_bound(n),
        output: all.into_iter().filter(|&v| Some(v) != loser).collect(),
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::regular_tournament;
    use crate::query::static_oracle;
    use crate::solutions::{condorcet_non_losers, condorcet_winner};
    use crate::tournament::Tournament;

    #[test]
    fn examples() {
        let r = find_condorcet_winner(static_oracle(&Tournament::transitive(8)));
        assert_eq!(r.output, [0]);
        assert!(r.queries <= 11);

        let r = find_condorcet_winner(static_oracle(&regular_tournament(3).unwrap()));
        assert!(r.output.is_empty());
        assert!(r.queries <= 3);

        let r = find_condorcet_winner(static_oracle(&Tournament::transitive(1)));
        assert_eq!((r.output.as_slice(), r.queries), (&[0][..], 0));
    }

    #[test]
    fn non_loser_examples() {
        let r = find_condorcet_non_losers(static_oracle(&Tournament::transitive(3))).unwrap();
        assert_eq!(r.output, [0, 1]);
        let r = find_condorcet_non_losers(static_oracle(&regular_tournament(3).unwrap())).unwrap();
        assert_eq!(r.output, [0, 1, 2]);
        assert!(r.queries <= 3);
        let r = find_condorcet_non_losers(static_oracle(&regular_tournament(9).unwrap())).unwrap();
        assert_eq!(r.output.len(), 9);
        assert!(r.queries <= 13);
        assert!(find_condorcet_non_losers(static_oracle(&Tournament::transitive(1))).is_err());
    }

    #[test]
    fn exhaustive_small() {
        for n in 1..=5 {
            for t in Tournament::all(n) {
                let r = find_condorcet_winner(static_oracle(&t));
                assert_eq!(r.output.first().copied(), condorcet_winner(&t));
                assert!(r.within_bound(), "{t:?}: {} > {}", r.queries, r.bound);
                if n >= 2 {
                    let r = find_condorcet_non_losers(static_oracle(&t)).unwrap();
                    assert_eq!(r.output, condorcet_non_losers(&t).unwrap().members());
                    assert!(r.within_bound());
                }
            }
        }
    }

    #[test]
    fn transcript_certifies_the_answer() {
        for t in Tournament::all(5) {
            let mut o = CountingOracle::new(static_oracle(&t));
            let all: Vec<Vertex> = (0..5).collect();
            match winner_among(&mut o, &all) {
                Some(c) => assert!(all.iter().all(|&w| w == c || o.known(c, w) == Some(true))),
                None => assert!(all
                    .iter()
                    .all(|&v| all.iter().any(|&w| o.known(w, v) == Some(true)))),
            }
        }
    }
}
