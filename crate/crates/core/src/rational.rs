//! Exact rationals and a Gauss–Jordan solver over them.

use num_bigint::BigInt;
use num_traits::Zero;

/// Arbitrary-precision fraction, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num/den`, denominator always shown.
pub fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined,
}

/// Solves `a · x = b` for `x` exactly. `a` may have more rows than columns.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> LinearSolution {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, Vec::len);

    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            return LinearSolution::Underdetermined;
        };
        a.swap(rank, pivot);
        b.swap(rank, pivot);

        let inv = a[rank][col].recip();
        for c in col..cols {
            a[rank][c] *= &inv;
        }
        b[rank] *= &inv;

        for r in 0..rows {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[rank];
            b[r] -= delta;
        }
        rank += 1;
    }
    if b[rank..].iter().any(|v| !v.is_zero()) {
        return LinearSolution::Inconsistent;
    }
    LinearSolution::Unique(b.into_iter().take(cols).collect())
}

pub fn sum(values: &[Rational]) -> Rational {
    values.iter().fold(Rational::zero(), |acc, v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unique_square() {
        // x + y = 3, x - y = 1
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert_eq!(solve(a, vec![int(3), int(1)]), LinearSolution::Unique(vec![int(2), int(1)]));
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = vec![vec![int(1)], vec![int(2)], vec![int(3)]];
        assert_eq!(
            solve(a.clone(), vec![rat(1, 2), int(1), rat(3, 2)]),
            LinearSolution::Unique(vec![rat(1, 2)])
        );
        assert_eq!(solve(a, vec![int(1), int(1), int(1)]), LinearSolution::Inconsistent);
    }

    #[test]
    fn singular() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(a, vec![int(1), int(2)]), LinearSolution::Underdetermined);
    }

    #[test]
    fn fraction_format() {
        assert_eq!(fraction(&rat(2, 6)), "1/3");
        assert_eq!(fraction(&int(0)), "0/1");
        assert_eq!(fraction(&rat(-3, 6)), "-1/2");
    }

    proptest! {
        #[test]
        fn addition_is_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let lhs = rat(a, b) + rat(c, d);
            prop_assert_eq!(lhs.clone(), rat(a * d + c * b, b * d));
            // lowest terms, positive denominator
            prop_assert!(lhs.denom() > &BigInt::zero());
            let renormalized = Rational::new(lhs.numer().clone(), lhs.denom().clone());
            prop_assert_eq!(renormalized.numer(), lhs.numer());
        }

        #[test]
        fn solves_planted_systems(xs in proptest::collection::vec(-20i64..20, 1..5), seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let k = xs.len();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // Unit upper-triangular, hence invertible.
            let mut a = vec![vec![Rational::zero(); k]; k];
            for i in 0..k {
                for j in 0..k {
                    a[i][j] = if i == j { int(1) } else if j > i { int(rng.gen_range(-3..4)) } else { Rational::zero() };
                }
            }
            let x: Vec<Rational> = xs.iter().map(|&v| int(v)).collect();
            let b: Vec<Rational> = a.iter().map(|row| row.iter().zip(&x).map(|(p, q)| p * q).fold(Rational::zero(), |s, t| s + t)).collect();
            prop_assert_eq!(solve(a, b), LinearSolution::Unique(x));
        }
    }
}
