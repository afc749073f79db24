//! Maximal lotteries and the bipartisan set.

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{uncovered_set, SolutionKind, SolutionSet};
use crate::error::{Error, Result};
use crate::rational::{fraction, int, solve, sum, LinearSolution, Rational};
use crate::tournament::{SkewAdjacency, Tournament};
use crate::Vertex;

/// A probability distribution over vertices with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lottery {
    p: Vec<Rational>,
}

impl Lottery {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        if p.iter().any(Signed::is_negative) {
            return Err(Error::BadParams("lottery has a negative entry".into()));
        }
        if !sum(&p).is_one() {
            return Err(Error::BadParams("lottery does not sum to 1".into()));
        }
        Ok(Lottery { p })
    }

    pub fn uniform(n: usize) -> Self {
        Lottery { p: vec![Rational::new(1.into(), (n as i64).into()); n] }
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.p
    }

    pub fn support(&self) -> Vec<Vertex> {
        (0..self.p.len()).filter(|&v| self.p[v].is_positive()).collect()
    }

    /// All vertices of maximum probability.
    pub fn argmax(&self) -> Vec<Vertex> {
        let best = self.p.iter().max().expect("nonempty lottery");
        (0..self.p.len()).filter(|&v| &self.p[v] == best).collect()
    }

    /// Entries as `num/den` strings.
    pub fn fractions(&self) -> Vec<String> {
        self.p.iter().map(fraction).collect()
    }
}

impl Serialize for Lottery {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.fractions().serialize(s)
    }
}

/// `true` iff `Σ_a p(a)·g[a][b] ≥ 0` for every `b`.
pub fn is_maximal_lottery(g: &SkewAdjacency, p: &[Rational]) -> bool {
    (0..g.n()).all(|b| !margin(g, p.iter().enumerate(), b).is_negative())
}

fn margin<'a>(
    g: &SkewAdjacency,
    weights: impl Iterator<Item = (Vertex, &'a Rational)>,
    b: Vertex,
) -> Rational {
    weights.fold(Rational::zero(), |acc, (a, pa)| match g.get(a, b) {
        1 => acc + pa,
        -1 => acc - pa,
        _ => acc,
    })
}

/// The unique maximal lottery, by support enumeration.
///
/// Supports are tried by increasing size among subsets of the uncovered set
/// (covered vertices never carry mass). Only odd sizes can work: a ±1 skew
/// matrix of even order is nonsingular, so it has no probability kernel
/// vector, while one of odd order has a one-dimensional kernel.
pub fn maximal_lottery(t: &Tournament, cap: usize) -> Result<Lottery> {
    let n = t.n();
    if n > cap {
        return Err(Error::TooLarge { what: "maximal lottery", n, cap });
    }
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let g = t.skew_adjacency();
    let candidates = uncovered_set(t).into_members();

    for size in (1..=candidates.len()).step_by(2) {
        let mut found = None;
        for_each_subset(&candidates, size, &mut |support| {
            found = try_support(&g, support);
            found.is_some()
        });
        if let Some(p) = found {
            debug_assert!(is_maximal_lottery(&g, p.probabilities()));
            return Ok(p);
        }
    }
    unreachable!("every tournament has a maximal lottery")
}

fn try_support(g: &SkewAdjacency, support: &[Vertex]) -> Option<Lottery> {
    let k = support.len();
    let mut a: Vec<Vec<Rational>> = support
        .iter()
        .map(|&b| support.iter().map(|&a| int(g.get(a, b) as i64)).collect())
        .collect();
    a.push(vec![Rational::one(); k]);
    let mut rhs = vec![Rational::zero(); k];
    rhs.push(Rational::one());

    let LinearSolution::Unique(x) = solve(a, rhs) else {
        return None;
    };
    if !x.iter().all(Signed::is_positive) {
        return None;
    }
    let mut p = vec![Rational::zero(); g.n()];
    for (&v, pv) in support.iter().zip(x) {
        p[v] = pv;
    }
    if !is_maximal_lottery(g, &p) {
        return None;
    }
    Some(Lottery { p })
}

/// Calls `f` on each `size`-subset of `items` (lexicographic); stops when
/// `f` returns `true`.
fn for_each_subset(items: &[Vertex], size: usize, f: &mut dyn FnMut(&[Vertex]) -> bool) {
    fn go(
        items: &[Vertex],
        size: usize,
        start: usize,
        cur: &mut Vec<Vertex>,
        f: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        let need = size - cur.len();
        for i in start..=items.len() - need {
            cur.push(items[i]);
            if go(items, size, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(items, size, 0, &mut Vec::with_capacity(size), f);
}

/// Support of the maximal lottery.
pub fn bipartisan_set(t: &Tournament, cap: usize) -> Result<SolutionSet> {
    let p = maximal_lottery(t, cap)?;
    Ok(SolutionSet::new(SolutionKind::Bipartisan, p.support()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::regular_tournament;
    use crate::rational::rat;

    #[test]
    fn three_cycle_uniform() {
        let t = regular_tournament(3).unwrap();
        assert_eq!(maximal_lottery(&t, 12).unwrap(), Lottery::uniform(3));
        assert_eq!(maximal_lottery(&t, 12).unwrap().probabilities()[0], rat(1, 3));
    }

    #[test]
    fn transitive_point_mass() {
        let p = maximal_lottery(&Tournament::transitive(3), 12).unwrap();
        assert_eq!(p.probabilities(), [int(1), int(0), int(0)]);
        assert_eq!(bipartisan_set(&Tournament::transitive(5), 12).unwrap().members(), [0]);
    }

    #[test]
    fn regular_seven_uniform() {
        let t = regular_tournament(7).unwrap();
        assert_eq!(maximal_lottery(&t, 12).unwrap(), Lottery::uniform(7));
        assert_eq!(bipartisan_set(&regular_tournament(5).unwrap(), 12).unwrap().len(), 5);
    }

    #[test]
    fn covered_vertex_gets_no_mass() {
        // 0→1→2→0 cycle, 3 beats 0 and 1, 2 beats 3; 3 covers 0.
        let t = Tournament::build(
            4,
            &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (2, 3)],
        )
        .unwrap();
        let p = maximal_lottery(&t, 12).unwrap();
        assert!(is_maximal_lottery(&t.skew_adjacency(), p.probabilities()));
        assert_eq!(p.support(), vec![1, 2, 3]);
        assert_eq!(p, Lottery::new(vec![int(0), rat(1, 3), rat(1, 3), rat(1, 3)]).unwrap());
    }

    #[test]
    fn cap_and_validation() {
        assert!(matches!(
            maximal_lottery(&Tournament::transitive(13), 12),
            Err(Error::TooLarge { .. })
        ));
        assert!(Lottery::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(Lottery::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
    }

    #[test]
    fn subsets_enumerated_in_order() {
        let mut seen = Vec::new();
        for_each_subset(&[1, 4, 6, 9], 2, &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![1, 4]);
        assert_eq!(seen[5], vec![6, 9]);
    }
}
