//! Definition-level reference implementations, deliberately naive and
//! independent of the library's solvers.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use tourney_core::{SolutionKind, Tournament};

pub type V = usize;

fn beaten_in(t: &Tournament, v: V, within: u32) -> usize {
    (0..t.n()).filter(|&u| within >> u & 1 == 1 && t.beats(v, u)).count()
}

pub fn condorcet_winner(t: &Tournament) -> Option<V> {
    (0..t.n()).find(|&v| (0..t.n()).all(|u| u == v || t.beats(v, u)))
}

pub fn non_losers(t: &Tournament) -> Vec<V> {
    (0..t.n()).filter(|&v| (0..t.n()).any(|u| t.beats(v, u))).collect()
}

pub fn copeland(t: &Tournament) -> Vec<V> {
    let score = |v: V| (0..t.n()).filter(|&u| t.beats(v, u)).count();
    let best = (0..t.n()).map(score).max().unwrap();
    (0..t.n()).filter(|&v| score(v) == best).collect()
}

fn permutations(n: usize) -> Vec<Vec<V>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Tops of every order that agrees with the most edges.
pub fn slater(t: &Tournament) -> Vec<V> {
    let agree = |o: &[V]| {
        (0..o.len()).flat_map(|i| (i + 1..o.len()).map(move |j| (i, j))).filter(|&(i, j)| t.beats(o[i], o[j])).count()
    };
    let orders = permutations(t.n());
    let best = orders.iter().map(|o| agree(o)).max().unwrap();
    let mut tops: Vec<V> = orders.iter().filter(|o| agree(o) == best).map(|o| o[0]).collect();
    tops.sort_unstable();
    tops.dedup();
    tops
}

fn covers(t: &Tournament, u: V, v: V) -> bool {
    t.beats(u, v) && (0..t.n()).all(|w| !t.beats(v, w) || t.beats(u, w))
}

pub fn uncovered(t: &Tournament) -> Vec<V> {
    (0..t.n()).filter(|&v| !(0..t.n()).any(|u| u != v && covers(t, u, v))).collect()
}

/// A subtournament is transitive iff its internal scores are all distinct.
fn transitive_subset(t: &Tournament, mask: u32) -> bool {
    let mut seen = 0u64;
    for v in (0..t.n()).filter(|&v| mask >> v & 1 == 1) {
        let s = beaten_in(t, v, mask);
        if seen >> s & 1 == 1 {
            return false;
        }
        seen |= 1 << s;
    }
    true
}

pub fn banks(t: &Tournament) -> Vec<V> {
    let n = t.n();
    let mut tops = Vec::new();
    for mask in 1u32..1 << n {
        if !transitive_subset(t, mask) {
            continue;
        }
        let maximal = (0..n).all(|w| mask >> w & 1 == 1 || !transitive_subset(t, mask | 1 << w));
        if maximal {
            let size = mask.count_ones() as usize;
            tops.extend((0..n).filter(|&v| mask >> v & 1 == 1 && beaten_in(t, v, mask) + 1 == size));
        }
    }
    tops.sort_unstable();
    tops.dedup();
    tops
}

pub fn is_dominant(t: &Tournament, mask: u32) -> bool {
    let n = t.n();
    (0..n).filter(|&a| mask >> a & 1 == 1).all(|a| (0..n).filter(|&b| mask >> b & 1 == 0).all(|b| t.beats(a, b)))
}

/// The smallest nonempty dominant set, by search over all subsets.
pub fn top_cycle(t: &Tournament) -> Vec<V> {
    let n = t.n();
    let best = (1u32..1 << n)
        .filter(|&m| is_dominant(t, m))
        .min_by_key(|m| m.count_ones())
        .unwrap();
    (0..n).filter(|&v| best >> v & 1 == 1).collect()
}

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}

/// Plain Gauss-Jordan on a square nonsingular system.
fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Vec<Q> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular system");
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for c in 0..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    b
}

/// Column-stochastic transition matrix, entry `[to][from]`.
pub fn transition(t: &Tournament) -> Vec<Vec<Q>> {
    let n = t.n();
    let d = (n - 1) as i64;
    let mut m = vec![vec![Q::zero(); n]; n];
    for from in 0..n {
        for to in 0..n {
            if to == from {
                m[to][from] = q((0..n).filter(|&u| t.beats(from, u)).count() as i64, d);
            } else if t.beats(to, from) {
                m[to][from] = q(1, d);
            }
        }
    }
    m
}

/// Stationary distribution of the full chain: `(Q - I) pi = 0` with one row
/// swapped for the normalisation.
pub fn stationary(t: &Tournament) -> Vec<Q> {
    let n = t.n();
    if n == 1 {
        return vec![Q::one()];
    }
    let m = transition(t);
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { &m[r][c] - Q::one() } else { m[r][c].clone() }).collect())
        .collect();
    let mut b = vec![Q::zero(); n];
    a[n - 1] = vec![Q::one(); n];
    b[n - 1] = Q::one();
    solve_square(a, b)
}

/// `pi` after `2^squarings` steps from the uniform start, by squaring the
/// integer matrix `(n-1) Q`.
pub fn power_iteration(t: &Tournament, squarings: u32) -> Vec<f64> {
    let n = t.n();
    if n == 1 {
        return vec![1.0];
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|to| {
            (0..n)
                .map(|from| {
                    let v = if to == from {
                        (0..n).filter(|&u| t.beats(from, u)).count()
                    } else {
                        usize::from(t.beats(to, from))
                    };
                    BigInt::from(v)
                })
                .collect()
        })
        .collect();
    for _ in 0..squarings {
        m = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &m[i][k] * &m[k][j]).sum()).collect())
            .collect();
    }
    let steps = 1u64 << squarings;
    let scale = BigInt::from(n - 1).pow(steps as u32) * BigInt::from(n);
    (0..n)
        .map(|i| {
            let mass: BigInt = m[i].iter().sum();
            BigRational::new(mass, scale.clone()).to_f64().unwrap()
        })
        .collect()
}

pub fn argmax(p: &[Q]) -> Vec<V> {
    let best = p.iter().max().unwrap();
    (0..p.len()).filter(|&v| &p[v] == best).collect()
}

pub fn markov(t: &Tournament) -> Vec<V> {
    argmax(&stationary(t))
}

/// `p` is a lottery and no vertex beats it in expectation.
pub fn is_maximal_lottery(t: &Tournament, p: &[Q]) -> bool {
    let n = t.n();
    if p.len() != n || p.iter().any(Signed::is_negative) || p.iter().sum::<Q>() != Q::one() {
        return false;
    }
    (0..n).all(|b| {
        let margin: Q = (0..n)
            .filter(|&a| a != b)
            .map(|a| if t.beats(a, b) { p[a].clone() } else { -p[a].clone() })
            .sum();
        !margin.is_negative()
    })
}

/// Bipartisan set from a lottery certified by [`is_maximal_lottery`]
/// (maximal lotteries are unique, so the certificate pins it down).
pub fn bipartisan(t: &Tournament, p: &[Q]) -> Option<Vec<V>> {
    is_maximal_lottery(t, p).then(|| (0..t.n()).filter(|&v| p[v].is_positive()).collect())
}

/// Reference value of `kind` on `t`; the bipartisan set needs a candidate
/// lottery to certify.
pub fn reference(t: &Tournament, kind: SolutionKind, lottery: Option<&[Q]>) -> Option<Vec<V>> {
    Some(match kind {
        SolutionKind::CondorcetNonLosers => non_losers(t),
        SolutionKind::Copeland => copeland(t),
        SolutionKind::Slater => slater(t),
        SolutionKind::Markov => markov(t),
        SolutionKind::Bipartisan => return bipartisan(t, lottery?),
        SolutionKind::Uncovered => uncovered(t),
        SolutionKind::Banks => banks(t),
        SolutionKind::TopCycle => top_cycle(t),
    })
}
