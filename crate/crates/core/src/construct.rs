//! Canonical constructions used by the lower-bound arguments.

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::Vertex;

/// `true` iff `i` beats `j` in the rotational tournament on `n` (odd) vertices,
/// i.e. `j = i + s (mod n)` for some `s` in `1..=(n-1)/2`.
#[inline]
pub fn rotational_beats(n: usize, i: usize, j: usize) -> bool {
    let step = (j + n - i) % n;
    step >= 1 && step <= (n - 1) / 2
}

/// The regular tournament: vertex `i` beats `i+1, …, i+(n-1)/2 (mod n)`.
pub fn regular_tournament(n: usize) -> Result<Tournament> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::EvenOrTooSmall(n));
    }
    Ok(Tournament::from_fn(n, |i, j| rotational_beats(n, i, j)))
}

/// The regular tournament with the edge `u → v` reversed.
pub fn regular_with_flip(n: usize, u: Vertex, v: Vertex) -> Result<Tournament> {
    let reg = regular_tournament(n)?;
    if u >= n || v >= n {
        return Err(Error::InvalidVertex { vertex: u.max(v), n });
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if !reg.beats(u, v) {
        return Err(Error::NotAnEdgeOfTReg(u, v));
    }
    reg.with_flipped(u, v)
}
