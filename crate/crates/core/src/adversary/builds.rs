//! The five constructions. Unless a construction fixes an edge, the lower
//! index wins inside a group.
//!
//! Two-group layouts put `a_i` at `i`, `b_j` at `n + j`, and the extra
//! vertex `x` (if any) at `2n`.

use super::{Adversary, AdversaryKind};
use crate::construct::{regular_tournament, regular_with_flip, rotational_beats};
use crate::error::{Error, Result};
use crate::query::Oracle;
use crate::solutions::SolutionKind;
use crate::tournament::{pairs, PartialTournament, Tournament};
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    A(usize),
    B(usize),
    X,
}

fn side(n: usize, v: Vertex) -> Side {
    match v {
        v if v < n => Side::A(v),
        v if v < 2 * n => Side::B(v - n),
        _ => Side::X,
    }
}

/// All `{a_i, b_j}` pairs as `(a_i, b_j)`, row by row.
fn inter_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, n + j))).collect()
}

fn odd_at_least_five(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    Ok(())
}

fn record(answers: &mut PartialTournament, u: Vertex, v: Vertex, u_wins: bool) -> bool {
    answers.record(u, v, u_wins).expect("adversary contradicted itself");
    u_wins
}

fn claims_any(claimed: &[Vertex], group: impl IntoIterator<Item = Vertex>) -> bool {
    group.into_iter().any(|v| claimed.contains(&v))
}

/// Answers from the regular tournament; an unasked edge `u → v` is flipped
/// at the end exactly when the claim contains `u`.
#[derive(Debug, Clone)]
pub struct RegularAdversary {
    n: usize,
    target: SolutionKind,
    answers: PartialTournament,
}

impl RegularAdversary {
    pub fn new(n: usize, target: SolutionKind) -> Result<Self> {
        odd_at_least_five(n)?;
        if !matches!(target, SolutionKind::Copeland | SolutionKind::Slater | SolutionKind::Markov) {
            return Err(Error::BadParams(format!(
                "the regular adversary targets copeland, slater or markov, not {target}"
            )));
        }
        Ok(RegularAdversary { n, target, answers: PartialTournament::new(n) })
    }

    fn open_edge(&self) -> Option<(Vertex, Vertex)> {
        pairs(self.n)
            .find(|&(lo, hi)| !self.answers.is_known(lo, hi))
            .map(|(lo, hi)| if rotational_beats(self.n, lo, hi) { (lo, hi) } else { (hi, lo) })
    }
}

impl Oracle for RegularAdversary {
    fn n(&self) -> usize {
        self.n
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        let n = self.n;
        record(&mut self.answers, u, v, rotational_beats(n, u, v))
    }
}

impl Adversary for RegularAdversary {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::Regular
    }
    fn size(&self) -> usize {
        self.n
    }
    fn target(&self) -> SolutionKind {
        self.target
    }
    fn answers(&self) -> &PartialTournament {
        &self.answers
    }
    fn relevant_pairs(&self) -> Vec<(Vertex, Vertex)> {
        pairs(self.n).collect()
    }
    fn threshold(&self) -> usize {
        self.n * (self.n - 1) / 2
    }
    fn designated_skip(&self) -> Vec<(Vertex, Vertex)> {
        vec![(0, 1)]
    }
    fn pivot(&self, skipped: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        let first = skipped.iter().map(|&(u, v)| (u.min(v), u.max(v))).min_by_key(|&(lo, hi)| (hi, lo));
        match first {
            Some((lo, hi)) if rotational_beats(self.n, lo, hi) => vec![lo],
            Some((_, hi)) => vec![hi],
            None => Vec::new(),
        }
    }
    fn complete(&self, claimed: &[Vertex]) -> Tournament {
        match self.open_edge() {
            Some((u, v)) if claimed.contains(&u) => regular_with_flip(self.n, u, v),
            _ => regular_tournament(self.n),
        }
        .expect("valid regular construction")
    }
}

/// Two regular tournaments `A` and `B`; every asked `{a, b}` goes to `a`.
#[derive(Debug, Clone)]
pub struct BipartisanAdversary {
    n: usize,
    answers: PartialTournament,
}

impl BipartisanAdversary {
    pub fn new(n: usize) -> Result<Self> {
        odd_at_least_five(n)?;
        Ok(BipartisanAdversary { n, answers: PartialTournament::new(2 * n) })
    }

    fn fixed(&self, u: Vertex, v: Vertex) -> Option<bool> {
        match (side(self.n, u), side(self.n, v)) {
            (Side::A(i), Side::A(j)) | (Side::B(i), Side::B(j)) => Some(rotational_beats(self.n, i, j)),
            _ => None,
        }
    }
}

impl Oracle for BipartisanAdversary {
    fn n(&self) -> usize {
        2 * self.n
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        let wins = self.fixed(u, v).unwrap_or(u < v);
        record(&mut self.answers, u, v, wins)
    }
}

impl Adversary for BipartisanAdversary {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::Bipartisan
    }
    fn size(&self) -> usize {
        self.n
    }
    fn target(&self) -> SolutionKind {
        SolutionKind::Bipartisan
    }
    fn answers(&self) -> &PartialTournament {
        &self.answers
    }
    fn relevant_pairs(&self) -> Vec<(Vertex, Vertex)> {
        inter_pairs(self.n)
    }
    fn threshold(&self) -> usize {
        (self.n * self.n).div_ceil(2)
    }
    fn designated_skip(&self) -> Vec<(Vertex, Vertex)> {
        inter_pairs(self.n).split_off(self.threshold() - 1)
    }
    fn pivot(&self, _: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        (self.n..2 * self.n).collect()
    }
    fn complete(&self, claimed: &[Vertex]) -> Tournament {
        let b_wins_open = self.relevant_queries() < self.threshold()
            && !claims_any(claimed, self.n..2 * self.n);
        self.answers.complete_with(|lo, hi| self.fixed(lo, hi).unwrap_or(!b_wins_open))
    }
}

/// Shared by the uncovered and Banks constructions: `a_i → x → b_j`, and
/// `{a_i, b_j}` goes to `b_j` only when `a_i` has already beaten every
/// other `b`.
#[derive(Debug, Clone)]
struct Pivoted {
    n: usize,
    /// Inside `B` the higher index wins.
    b_descending: bool,
    answers: PartialTournament,
}

impl Pivoted {
    fn new(n: usize, b_descending: bool) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        Ok(Pivoted { n, b_descending, answers: PartialTournament::new(2 * n + 1) })
    }

    fn x(&self) -> Vertex {
        2 * self.n
    }

    fn fixed(&self, u: Vertex, v: Vertex) -> Option<bool> {
        Some(match (side(self.n, u), side(self.n, v)) {
            (Side::A(_), Side::X) => true,
            (Side::X, Side::A(_)) => false,
            (Side::X, Side::B(_)) => true,
            (Side::B(_), Side::X) => false,
            (Side::A(i), Side::A(j)) => i < j,
            (Side::B(i), Side::B(j)) => (i < j) != self.b_descending,
            _ => return None,
        })
    }

    fn answer(&mut self, u: Vertex, v: Vertex) -> bool {
        let wins = self.fixed(u, v).unwrap_or_else(|| {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            let n = self.n;
            let others_lost = (n..2 * n).filter(|&c| c != b).all(|c| self.answers.get(a, c) == Some(true));
            (a == u) != others_lost
        });
        record(&mut self.answers, u, v, wins)
    }

    /// With an open `{a_i, b_j}`: a claim containing `x` gets `a_i` beating
    /// all of `B` (so `a_i` covers `x` and heads every chain through it),
    /// otherwise `b_j` beats `a_i`. Every other open inter pair goes to the
    /// `b` side, so no `a_k` beats all of `B`.
    fn complete(&self, claimed: &[Vertex]) -> Tournament {
        let n = self.n;
        let open = inter_pairs(n).into_iter().find(|&(a, b)| !self.answers.is_known(a, b));
        let contain = claimed.contains(&self.x());
        self.answers.complete_with(|lo, hi| {
            if let Some(f) = self.fixed(lo, hi) {
                return f;
            }
            match open {
                Some((i, j)) if lo == i => hi != j || contain,
                _ => false,
            }
        })
    }
}

macro_rules! pivoted_adversary {
    ($name:ident, $kind:expr, $target:expr, $desc:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone)]
        pub struct $name(Pivoted);

        impl $name {
            pub fn new(n: usize) -> Result<Self> {
                Pivoted::new(n, $desc).map($name)
            }
        }

        impl Oracle for $name {
            fn n(&self) -> usize {
                2 * self.0.n + 1
            }

            fn query(&mut self, u: Vertex, v: Vertex) -> bool {
                self.0.answer(u, v)
            }
        }

        impl Adversary for $name {
            fn kind(&self) -> AdversaryKind {
                $kind
            }
            fn size(&self) -> usize {
                self.0.n
            }
            fn target(&self) -> SolutionKind {
                $target
            }
            fn answers(&self) -> &PartialTournament {
                &self.0.answers
            }
            fn relevant_pairs(&self) -> Vec<(Vertex, Vertex)> {
                inter_pairs(self.0.n)
            }
            fn threshold(&self) -> usize {
                self.0.n * self.0.n
            }
            fn designated_skip(&self) -> Vec<(Vertex, Vertex)> {
                vec![(0, 2 * self.0.n - 1)]
            }
            fn pivot(&self, _: &[(Vertex, Vertex)]) -> Vec<Vertex> {
                vec![self.0.x()]
            }
            fn complete(&self, claimed: &[Vertex]) -> Tournament {
                self.0.complete(claimed)
            }
        }
    };
}

pivoted_adversary!(
    UncoveredAdversary,
    AdversaryKind::Uncovered,
    SolutionKind::Uncovered,
    false,
    "Refutes uncovered-set algorithms that skip some `{a_i, b_j}`."
);

pivoted_adversary!(
    BanksAdversary,
    AdversaryKind::Banks,
    SolutionKind::Banks,
    true,
    "Refutes Banks-set algorithms that skip some `{a_i, b_j}`; `B` is transitive with `b_{n-1}` on top."
);

/// Two groups, each strongly connected through `a_i → a_{i+1}` (and the
/// same in `B`); every asked `{a, b}` goes to `a`.
#[derive(Debug, Clone)]
pub struct TopCycleAdversary {
    n: usize,
    answers: PartialTournament,
}

impl TopCycleAdversary {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        Ok(TopCycleAdversary { n, answers: PartialTournament::new(2 * n) })
    }

    fn fixed(&self, u: Vertex, v: Vertex) -> Option<bool> {
        let n = self.n;
        let within = |i: usize, j: usize| {
            if j == (i + 1) % n {
                true
            } else if i == (j + 1) % n {
                false
            } else {
                i < j
            }
        };
        match (side(n, u), side(n, v)) {
            (Side::A(i), Side::A(j)) | (Side::B(i), Side::B(j)) => Some(within(i, j)),
            _ => None,
        }
    }
}

impl Oracle for TopCycleAdversary {
    fn n(&self) -> usize {
        2 * self.n
    }

    fn query(&mut self, u: Vertex, v: Vertex) -> bool {
        let wins = self.fixed(u, v).unwrap_or(u < v);
        record(&mut self.answers, u, v, wins)
    }
}

impl Adversary for TopCycleAdversary {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::TopCycle
    }
    fn size(&self) -> usize {
        self.n
    }
    fn target(&self) -> SolutionKind {
        SolutionKind::TopCycle
    }
    fn answers(&self) -> &PartialTournament {
        &self.answers
    }
    fn relevant_pairs(&self) -> Vec<(Vertex, Vertex)> {
        inter_pairs(self.n)
    }
    fn threshold(&self) -> usize {
        self.n * self.n
    }
    fn designated_skip(&self) -> Vec<(Vertex, Vertex)> {
        vec![(0, 2 * self.n - 1)]
    }
    fn pivot(&self, _: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        (self.n..2 * self.n).collect()
    }
    /// An open `{a_i, b_j}` turns into `b_j → a_i` (merging the groups into
    /// one strong component) unless the claim already reaches into `B`.
    fn complete(&self, claimed: &[Vertex]) -> Tournament {
        let open = inter_pairs(self.n).into_iter().find(|&(a, b)| !self.answers.is_known(a, b));
        let merge = open.filter(|_| !claims_any(claimed, self.n..2 * self.n));
        self.answers.complete_with(|lo, hi| {
            self.fixed(lo, hi).unwrap_or(merge != Some((lo, hi)))
        })
    }
}
