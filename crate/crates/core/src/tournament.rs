//! Tournament storage and graph primitives.
//!
//! Orientations live in a triangular bitmap keyed by the unordered pair
//! `{u, v}` with `u < v`; bit set means the lower index beats the higher one.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::Vertex;

/// Index of the unordered pair `{lo, hi}` (requires `lo < hi`).
#[inline]
pub(crate) fn pair_index(lo: usize, hi: usize) -> usize {
    debug_assert!(lo < hi);
    hi * (hi - 1) / 2 + lo
}

/// Number of unordered pairs on `n` vertices.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All unordered pairs `(lo, hi)` in canonical (storage) order.
pub fn pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (1..n).flat_map(|hi| (0..hi).map(move |lo| (lo, hi)))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct PairBits {
    words: Vec<u64>,
}

impl PairBits {
    pub(crate) fn new(n: usize) -> Self {
        PairBits { words: vec![0; pair_count(n).div_ceil(64)] }
    }

    #[inline]
    pub(crate) fn get(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, idx: usize, value: bool) {
        let mask = 1u64 << (idx % 64);
        if value {
            self.words[idx / 64] |= mask;
        } else {
            self.words[idx / 64] &= !mask;
        }
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A complete orientation of every vertex pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    bits: PairBits,
}

impl Tournament {
    /// Builds a tournament from winner-first edges covering every pair once.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut seen = PairBits::new(n);
        let mut bits = PairBits::new(n);
        for &(w, l) in edges {
            for v in [w, l] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if w == l {
                return Err(Error::SelfLoop(w));
            }
            let idx = pair_index(w.min(l), w.max(l));
            if seen.get(idx) {
                return Err(Error::DuplicatePair(w.min(l), w.max(l)));
            }
            seen.set(idx, true);
            bits.set(idx, w < l);
        }
        if let Some((lo, hi)) = pairs(n).find(|&(lo, hi)| !seen.get(pair_index(lo, hi))) {
            return Err(Error::MissingPair(lo, hi));
        }
        Ok(Tournament { n, bits })
    }

    /// Builds a tournament from a predicate `f(lo, hi)` = "lo beats hi", `lo < hi`.
    pub fn from_fn(n: usize, mut f: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut bits = PairBits::new(n);
        for (lo, hi) in pairs(n) {
            bits.set(pair_index(lo, hi), f(lo, hi));
        }
        Tournament { n, bits }
    }

    /// Decodes the `code`-th tournament on `n` labelled vertices: bit `i` of
    /// `code` orients the `i`-th pair of [`pairs`].
    pub fn from_code(n: usize, code: u64) -> Self {
        assert!(pair_count(n) <= 64, "code only covers n <= 11");
        let mut i = 0;
        Tournament::from_fn(n, |_, _| {
            let bit = code >> i & 1 == 1;
            i += 1;
            bit
        })
    }

    /// Every labelled tournament on `n` vertices (`2^(n(n-1)/2)` of them).
    pub fn all(n: usize) -> impl Iterator<Item = Tournament> {
        let m = pair_count(n);
        assert!(m < 64, "enumeration only supported for n <= 11");
        (0..1u64 << m).map(move |code| Tournament::from_code(n, code))
    }

    /// The transitive tournament `0 ≻ 1 ≻ … ≻ n-1`.
    pub fn transitive(n: usize) -> Self {
        Tournament::from_fn(n, |_, _| true)
    }

    /// Uniformly random tournament: every pair oriented by a fair coin.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Tournament::from_fn(n, |_, _| rng.gen::<bool>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `true` iff `u` beats `v`. `false` when `u == v`.
    #[inline]
    pub fn beats(&self, u: Vertex, v: Vertex) -> bool {
        debug_assert!(u < self.n && v < self.n);
        match u.cmp(&v) {
            std::cmp::Ordering::Less => self.bits.get(pair_index(u, v)),
            std::cmp::Ordering::Greater => !self.bits.get(pair_index(v, u)),
            std::cmp::Ordering::Equal => false,
        }
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        (0..self.n).filter(|&u| self.beats(v, u)).count()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.n - 1 - self.out_degree(v)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (lo, hi) in pairs(self.n) {
            if self.bits.get(pair_index(lo, hi)) {
                deg[lo] += 1;
            } else {
                deg[hi] += 1;
            }
        }
        deg
    }

    /// `D(v)`: the vertices `v` beats.
    pub fn dominion(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check(v)?;
        Ok((0..self.n).filter(|&u| self.beats(v, u)).collect())
    }

    /// The vertices beating `v`.
    pub fn dominators(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check(v)?;
        Ok((0..self.n).filter(|&u| self.beats(u, v)).collect())
    }

    /// Winner-first list of all edges.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        pairs(self.n)
            .map(|(lo, hi)| if self.beats(lo, hi) { (lo, hi) } else { (hi, lo) })
            .collect()
    }

    /// Flips every orientation.
    pub fn reverse(&self) -> Tournament {
        let mut bits = self.bits.clone();
        for idx in 0..pair_count(self.n) {
            bits.set(idx, !bits.get(idx));
        }
        Tournament { n: self.n, bits }
    }

    /// Copy with the orientation of `{u, v}` reversed.
    pub fn with_flipped(&self, u: Vertex, v: Vertex) -> Result<Tournament> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let mut t = self.clone();
        let idx = pair_index(u.min(v), u.max(v));
        t.bits.set(idx, !t.bits.get(idx));
        Ok(t)
    }

    /// Subtournament induced on `s`. Vertex `i` of the result is `map[i]` here;
    /// `map` is `s` sorted ascending.
    pub fn induced(&self, s: &[Vertex]) -> Result<(Tournament, Vec<Vertex>)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut map = s.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            self.check(v)?;
        }
        let sub = Tournament::from_fn(map.len(), |i, j| self.beats(map[i], map[j]));
        Ok((sub, map))
    }

    /// Relabels vertex `v` as `perm.apply(v)`.
    pub fn relabel(&self, perm: &Permutation) -> Tournament {
        assert_eq!(perm.len(), self.n);
        let inv = perm.inverse();
        Tournament::from_fn(self.n, |a, b| self.beats(inv.apply(a), inv.apply(b)))
    }

    pub fn skew_adjacency(&self) -> SkewAdjacency {
        let n = self.n;
        let mut g = vec![0i8; n * n];
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    g[a * n + b] = if self.beats(a, b) { 1 } else { -1 };
                }
            }
        }
        SkewAdjacency { n, g }
    }

    /// Strongly connected components in dominance order: every vertex of an
    /// earlier component beats every vertex of a later one. The first
    /// component is the top cycle. Members of each component are ascending.
    ///
    /// Dominant sets are exactly the score-sorted prefixes whose degree sum
    /// reaches `C(m,2) + m(n-m)`, so the cut points fall out of one scan.
    pub fn condensation(&self) -> Vec<Vec<Vertex>> {
        let n = self.n;
        let deg = self.out_degrees();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        let mut comps = Vec::new();
        let mut start = 0;
        let mut sum = 0;
        for m in 1..=n {
            sum += deg[order[m - 1]];
            if sum == m * (m - 1) / 2 + m * (n - m) {
                let mut comp = order[start..m].to_vec();
                comp.sort_unstable();
                comps.push(comp);
                start = m;
            }
        }
        comps
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}; ", self.n)?;
        for (w, l) in self.edges() {
            write!(f, "{w}>{l} ")?;
        }
        write!(f, ")")
    }
}

/// Revealed orientations of some subset of pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialTournament {
    n: usize,
    known: PairBits,
    orient: PairBits,
}

impl PartialTournament {
    pub fn new(n: usize) -> Self {
        PartialTournament { n, known: PairBits::new(n), orient: PairBits::new(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Some(true)` iff `u` is known to beat `v`; `None` if the pair is unknown.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<bool> {
        if u == v {
            return None;
        }
        let idx = pair_index(u.min(v), u.max(v));
        if !self.known.get(idx) {
            return None;
        }
        let lo_wins = self.orient.get(idx);
        Some(if u < v { lo_wins } else { !lo_wins })
    }

    pub fn is_known(&self, u: Vertex, v: Vertex) -> bool {
        self.get(u, v).is_some()
    }

    /// Records "u beats v" (or the reverse). Returns `true` if the pair was new.
    pub fn record(&mut self, u: Vertex, v: Vertex, u_beats_v: bool) -> Result<bool> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidVertex { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.get(u, v) {
            Some(prev) if prev == u_beats_v => Ok(false),
            Some(_) => Err(Error::ConflictingAnswer(u, v)),
            None => {
                let idx = pair_index(u.min(v), u.max(v));
                self.known.set(idx, true);
                self.orient.set(idx, if u < v { u_beats_v } else { !u_beats_v });
                Ok(true)
            }
        }
    }

    pub fn known_count(&self) -> usize {
        self.known.count_ones()
    }

    pub fn is_complete(&self) -> bool {
        self.known_count() == pair_count(self.n)
    }

    /// Winner-first list of known edges.
    pub fn known_edges(&self) -> Vec<(Vertex, Vertex)> {
        pairs(self.n)
            .filter_map(|(lo, hi)| match self.get(lo, hi)? {
                true => Some((lo, hi)),
                false => Some((hi, lo)),
            })
            .collect()
    }

    /// Completes unknown pairs with `fill(lo, hi)` = "lo beats hi".
    pub fn complete_with(&self, mut fill: impl FnMut(Vertex, Vertex) -> bool) -> Tournament {
        Tournament::from_fn(self.n, |lo, hi| self.get(lo, hi).unwrap_or_else(|| fill(lo, hi)))
    }

    pub fn to_tournament(&self) -> Option<Tournament> {
        self.is_complete().then(|| self.complete_with(|_, _| unreachable!()))
    }

    /// `true` iff every known orientation matches `t`.
    pub fn agrees_with(&self, t: &Tournament) -> bool {
        self.n == t.n() && self.known_edges().iter().all(|&(w, l)| t.beats(w, l))
    }
}

impl fmt::Debug for PartialTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialTournament")
            .field("n", &self.n)
            .field("known", &self.known_edges())
            .finish()
    }
}

impl From<&Tournament> for PartialTournament {
    fn from(t: &Tournament) -> Self {
        let mut p = PartialTournament::new(t.n());
        for (w, l) in t.edges() {
            p.record(w, l, true).expect("fresh transcript");
        }
        p
    }
}

/// An explicit relabeling: vertex `v` becomes `map[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<Vertex>,
}

impl Permutation {
    pub fn new(map: Vec<Vertex>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::BadParams(format!("{map:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut map: Vec<Vertex> = (0..n).collect();
        map.shuffle(rng);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    /// Image of a vertex set, sorted.
    pub fn apply_set(&self, s: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = s.iter().map(|&v| self.map[v]).collect();
        out.sort_unstable();
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (v, &image) in self.map.iter().enumerate() {
            inv[image] = v;
        }
        Permutation { map: inv }
    }
}

/// `G = A - Aᵗ`: `+1` where the row vertex beats the column vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewAdjacency {
    n: usize,
    g: Vec<i8>,
}

impl SkewAdjacency {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: Vertex, b: Vertex) -> i8 {
        self.g[a * self.n + b]
    }

    pub fn column_sum(&self, b: Vertex) -> i64 {
        (0..self.n).map(|a| self.get(a, b) as i64).sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.g.chunks(self.n.max(1))
    }
}
