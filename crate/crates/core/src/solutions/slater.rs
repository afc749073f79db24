use super::{SolutionKind, SolutionSet};
use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Largest `n` the subset table is allowed to reach, whatever the cap.
const HARD_LIMIT: usize = 24;

/// Union of the maxima of all Slater orders.
///
/// An order listed top-down scores, for each vertex, its wins against the
/// vertices still below it. `best[S]` is the best score of an order on `S`,
/// so `v` tops some Slater order iff `deg(v) + best[V \ v] = best[V]`.
pub fn slater_set(t: &Tournament, cap: usize) -> Result<SolutionSet> {
    let n = t.n();
    if n > cap.min(HARD_LIMIT) {
        return Err(Error::TooLarge { what: "slater", n, cap: cap.min(HARD_LIMIT) });
    }
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let beats: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| t.beats(v, u)).fold(0u32, |m, u| m | 1 << u))
        .collect();

    let full = (1u32 << n) - 1;
    let mut best = vec![0u16; 1 << n];
    for mask in 1..=full {
        let mut rest = mask;
        let mut top = 0u16;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let sub = mask & !(1 << v);
            let score = (beats[v] & sub).count_ones() as u16 + best[sub as usize];
            top = top.max(score);
        }
        best[mask as usize] = top;
    }

    let optimum = best[full as usize];
    let members = (0..n)
        // Out-degree below (n-1)/2 can never head a Slater order.
        .filter(|&v| 2 * beats[v].count_ones() as usize + 1 >= n)
        .filter(|&v| {
            let sub = full & !(1 << v);
            beats[v].count_ones() as u16 + best[sub as usize] == optimum
        })
        .collect();
    Ok(SolutionSet::new(SolutionKind::Slater, members))
}
