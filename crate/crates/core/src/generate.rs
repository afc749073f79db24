//! Seeded instance generators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construct::{regular_tournament, regular_with_flip, rotational_beats};
use crate::error::{Error, Result};
use crate::tournament::{Permutation, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    Random,
    Regular,
    RegularFlip,
    PlantedTc,
}

impl GenKind {
    pub fn tag(self) -> &'static str {
        match self {
            GenKind::Random => "random",
            GenKind::Regular => "regular",
            GenKind::RegularFlip => "regular-flip",
            GenKind::PlantedTc => "planted-tc",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        [GenKind::Random, GenKind::Regular, GenKind::RegularFlip, GenKind::PlantedTc]
            .into_iter()
            .find(|k| k.tag() == norm)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generates one tournament. `k` is only read by `planted-tc`; `regular-flip`
/// reverses a seeded-random edge of the regular tournament.
pub fn generate(kind: GenKind, n: usize, k: usize, seed: u64) -> Result<Tournament> {
    let mut rng = rng(seed);
    let bad = |e: Error| Error::BadParams(e.to_string());
    match kind {
        GenKind::Random => {
            if n == 0 {
                return Err(Error::BadParams("n must be positive".into()));
            }
            Ok(Tournament::random(n, &mut rng))
        }
        GenKind::Regular => regular_tournament(n).map_err(bad),
        GenKind::RegularFlip => {
            regular_tournament(n).map_err(bad)?;
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..=(n - 1) / 2)) % n;
            debug_assert!(rotational_beats(n, u, v));
            regular_with_flip(n, u, v).map_err(bad)
        }
        GenKind::PlantedTc => planted_top_cycle(n, k, &mut rng),
    }
}

/// A tournament whose top cycle has exactly `k` vertices: a strongly
/// connected block (Hamiltonian cycle forced, other block pairs random) that
/// beats everyone else, a random remainder, and randomly permuted labels.
pub fn planted_top_cycle<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Tournament> {
    if k == 0 || k > n {
        return Err(Error::BadParams(format!("need 1 <= k <= n (k = {k}, n = {n})")));
    }
    if k == 2 {
        return Err(Error::BadParams("no strongly connected tournament has 2 vertices".into()));
    }
    let base = Tournament::from_fn(n, |lo, hi| {
        if hi < k {
            if hi == lo + 1 {
                true
            } else if lo == 0 && hi == k - 1 {
                false
            } else {
                rng.gen::<bool>()
            }
        } else if lo < k {
            true
        } else {
            rng.gen::<bool>()
        }
    });
    Ok(base.relabel(&Permutation::random(n, rng)))
}
