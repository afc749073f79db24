use super::{SolutionKind, SolutionSet};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

const HARD_LIMIT: usize = 64;

struct Chains {
    n: usize,
    beats: Vec<u64>,
}

impl Chains {
    /// Whether `w` (outside `set`) can join the transitive `set` and keep it
    /// transitive: everything beating `w` must beat everything `w` beats.
    fn insertable(&self, set: u64, w: usize) -> bool {
        let below = set & self.beats[w];
        let mut above = set & !self.beats[w];
        while above != 0 {
            let a = above.trailing_zeros() as usize;
            above &= above - 1;
            if below & !self.beats[a] != 0 {
                return false;
            }
        }
        true
    }

    fn is_maximal(&self, set: u64) -> bool {
        (0..self.n).all(|w| set >> w & 1 == 1 || !self.insertable(set, w))
    }

    /// Depth-first over transitive chains `{top} ∪ X`, `X ⊆ D(top)`, adding
    /// vertices in increasing index order. `true` once a maximal one shows up.
    fn has_maximal_chain(&self, set: u64, next: usize, pool: u64) -> bool {
        if self.is_maximal(set) {
            return true;
        }
        let below_next = 1u64.checked_shl(next as u32).map_or(u64::MAX, |b| b - 1);
        let mut rest = pool & !below_next;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.insertable(set, u) && self.has_maximal_chain(set | 1 << u, u + 1, pool) {
                return true;
            }
        }
        false
    }
}

/// Tops of the inclusion-maximal transitive subtournaments.
pub fn banks_set(t: &Tournament, cap: usize) -> Result<SolutionSet> {
    let n = t.n();
    if n > cap.min(HARD_LIMIT) {
        return Err(Error::TooLarge { what: "banks", n, cap: cap.min(HARD_LIMIT) });
    }
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let chains = Chains {
        n,
        beats: (0..n)
            .map(|v| (0..n).filter(|&u| t.beats(v, u)).fold(0u64, |m, u| m | 1 << u))
            .collect(),
    };
    let members = (0..n)
        .filter(|&v| chains.has_maximal_chain(1 << v, 0, chains.beats[v]))
        .collect();
    Ok(SolutionSet::new(SolutionKind::Banks, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::regular_tournament;

    #[test]
    fn examples() {
        assert_eq!(banks_set(&Tournament::transitive(5), 14).unwrap().members(), [0]);
        assert_eq!(banks_set(&regular_tournament(3).unwrap(), 14).unwrap().members(), [0, 1, 2]);
        assert_eq!(banks_set(&regular_tournament(5).unwrap(), 14).unwrap().len(), 5);
        assert!(matches!(
            banks_set(&Tournament::transitive(15), 14),
            Err(Error::TooLarge { .. })
        ));
    }
}
