//! The Markov set: argmax of the stationary distribution of the chain that
//! stays at `v` with probability `|D(v)|/(n-1)` and moves to each dominator
//! of `v` with probability `1/(n-1)`.

use num_traits::{One, Zero};

use super::lottery::Lottery;
use super::{SolutionKind, SolutionSet};
use crate::error::{Error, Result};
use crate::rational::{int, rat, solve, LinearSolution, Rational};
use crate::tournament::Tournament;
use crate::Vertex;

/// Column-stochastic transition matrix: entry `(to, from)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    n: usize,
    q: Vec<Rational>,
}

impl TransitionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, to: Vertex, from: Vertex) -> &Rational {
        &self.q[to * self.n + from]
    }

    pub fn column_sum(&self, from: Vertex) -> Rational {
        (0..self.n).fold(Rational::zero(), |acc, to| acc + self.get(to, from))
    }

    /// `Q · p`.
    pub fn apply(&self, p: &[Rational]) -> Vec<Rational> {
        assert_eq!(p.len(), self.n);
        (0..self.n)
            .map(|to| {
                (0..self.n)
                    .filter(|&from| !self.get(to, from).is_zero())
                    .fold(Rational::zero(), |acc, from| acc + self.get(to, from) * &p[from])
            })
            .collect()
    }
}

pub fn markov_transition(t: &Tournament) -> Result<TransitionMatrix> {
    let n = t.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let scale = n as i64 - 1;
    let deg = t.out_degrees();
    let mut q = vec![Rational::zero(); n * n];
    for from in 0..n {
        q[from * n + from] = rat(deg[from] as i64, scale);
        for to in 0..n {
            if t.beats(to, from) {
                q[to * n + from] = rat(1, scale);
            }
        }
    }
    Ok(TransitionMatrix { n, q })
}

/// The stationary distribution, solved exactly on the top cycle.
///
/// The top cycle is the chain's only essential class: it is strongly
/// connected and the chain only ever moves to dominators, which for a
/// top-cycle vertex are top-cycle vertices. Everything else carries zero mass.
pub fn stationary_distribution(t: &Tournament) -> Lottery {
    let n = t.n();
    assert!(n > 0, "empty tournament");
    let cycle = t.condensation().swap_remove(0);
    let mut p = vec![Rational::zero(); n];
    if cycle.len() == 1 {
        p[cycle[0]] = Rational::one();
        return Lottery::new(p).expect("point mass");
    }

    // Row u of (n-1)(Q - I) restricted to the cycle: +1 for each v that u
    // beats, -indeg(u) on the diagonal. Then the normalisation row.
    let m = cycle.len();
    let mut a: Vec<Vec<Rational>> = cycle
        .iter()
        .map(|&u| {
            cycle
                .iter()
                .map(|&v| match () {
                    _ if u == v => int(-(t.in_degree(u) as i64)),
                    _ if t.beats(u, v) => int(1),
                    _ => Rational::zero(),
                })
                .collect()
        })
        .collect();
    a.push(vec![Rational::one(); m]);
    let mut b = vec![Rational::zero(); m];
    b.push(Rational::one());

    match solve(a, b) {
        LinearSolution::Unique(x) => {
            for (&v, pv) in cycle.iter().zip(x) {
                p[v] = pv;
            }
            Lottery::new(p).expect("stationary distribution is a lottery")
        }
        other => unreachable!("irreducible chain on the top cycle gave {other:?}"),
    }
}

/// The Markov set together with the stationary lottery it was read from.
pub fn markov_set(t: &Tournament) -> (SolutionSet, Lottery) {
    let pi = stationary_distribution(t);
    let set = SolutionSet::new(SolutionKind::Markov, pi.argmax());
    (set, pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{regular_tournament, regular_with_flip};

    #[test]
    fn two_vertex_matrix() {
        let q = markov_transition(&Tournament::transitive(2)).unwrap();
        assert_eq!(*q.get(0, 0), int(1));
        assert_eq!(*q.get(0, 1), int(1));
        assert_eq!(*q.get(1, 0), int(0));
        assert_eq!(*q.get(1, 1), int(0));
        assert!(markov_transition(&Tournament::transitive(1)).is_err());
    }

    #[test]
    fn three_cycle_matrix() {
        let t = regular_tournament(3).unwrap();
        let q = markov_transition(&t).unwrap();
        for from in 0..3 {
            assert_eq!(*q.get(from, from), rat(1, 2));
            let off: Vec<_> = (0..3).filter(|&to| to != from && !q.get(to, from).is_zero()).collect();
            assert_eq!(off.len(), 1);
            assert_eq!(*q.get(off[0], from), rat(1, 2));
            assert!(t.beats(off[0], from));
        }
    }

    #[test]
    fn transitive_point_mass() {
        let (set, pi) = markov_set(&Tournament::transitive(4));
        assert_eq!(set.members(), [0]);
        assert_eq!(pi.probabilities()[0], int(1));
    }

    #[test]
    fn regular_uniform() {
        for n in [3, 5, 7] {
            let (set, pi) = markov_set(&regular_tournament(n).unwrap());
            assert_eq!(set.len(), n);
            assert!(pi.probabilities().iter().all(|p| *p == rat(1, n as i64)));
        }
    }

    #[test]
    fn flip_concentrates_on_v() {
        // The other vertices do not share one common mass once an edge is
        // flipped, but v still comes out on top and u at the bottom.
        let (_, pi) = markov_set(&regular_with_flip(5, 0, 1).unwrap());
        assert_eq!(
            pi.probabilities(),
            [rat(3, 49), rat(19, 49), rat(9, 49), rat(7, 49), rat(11, 49)]
        );
        for n in [5usize, 7, 9, 11] {
            for u in 0..n {
                let v = (u + 1 + u % ((n - 1) / 2)) % n;
                let (set, pi) = markov_set(&regular_with_flip(n, u, v).unwrap());
                assert_eq!(set.members(), [v]);
                let low = pi.probabilities().iter().min().unwrap();
                assert_eq!(&pi.probabilities()[u], low);
            }
        }
    }

    #[test]
    fn fixed_point_on_mixed_tournament() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let t = Tournament::random(7, &mut rng);
            let q = markov_transition(&t).unwrap();
            let pi = stationary_distribution(&t);
            assert_eq!(q.apply(pi.probabilities()), pi.probabilities());
        }
    }
}
