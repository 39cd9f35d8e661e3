use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::{p_ratio, LambdaTuple};
use crate::freealg::Coeff;
use crate::identities::MultilinearElement;
use crate::linalg::{bareiss, clear_denominators, modp, SparseEchelon};

/// Tuples in `[1, max]^n`, in shells of increasing maximum entry and
/// lexicographically within a shell: `(1,…,1)` first, then every tuple whose
/// largest entry is 2, and so on.
#[derive(Clone, Debug)]
pub struct TupleShells {
    n: usize,
    max: u64,
    shell: u64,
    cur: Option<Vec<u64>>,
}

impl TupleShells {
    pub fn new(n: usize, max: u64) -> Self {
        let cur = (n > 0 && max > 0).then(|| vec![1; n]);
        TupleShells {
            n,
            max,
            shell: 1,
            cur,
        }
    }

    // Lexicographic successor in [1, shell]^n.
    fn advance(&mut self) {
        let Some(cur) = self.cur.as_mut() else {
            return;
        };
        for k in (0..self.n).rev() {
            if cur[k] < self.shell {
                cur[k] += 1;
                return;
            }
            cur[k] = 1;
        }
        // Wrapped: start the next shell.
        self.shell += 1;
        if self.shell > self.max {
            self.cur = None;
        }
    }
}

impl Iterator for TupleShells {
    type Item = LambdaTuple;

    fn next(&mut self) -> Option<LambdaTuple> {
        loop {
            let cur = self.cur.clone()?;
            let shell = self.shell;
            self.advance();
            if cur.iter().copied().max() == Some(shell) {
                return Some(LambdaTuple(cur));
            }
        }
    }
}

/// `P_n(λ_σ)` for every permutation `σ` of `0..n`, as exact rationals.
fn exact_row(lambda: &[u64], perms: &[Vec<usize>]) -> Vec<Coeff> {
    perms
        .iter()
        .map(|s| {
            let w: Vec<u64> = s.iter().map(|&i| lambda[i]).collect();
            p_ratio(&w)
        })
        .collect()
}

/// The same row reduced modulo 2^61 - 1.
fn modular_row(lambda: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    let n = lambda.len();
    perms
        .iter()
        .map(|s| {
            let mut num = 1u64;
            let mut den = 1u64;
            let mut acc = 0u64;
            let mut sums = vec![0u64; n];
            for k in (0..n).rev() {
                acc += lambda[s[k]];
                sums[k] = acc;
            }
            for k in 0..n.saturating_sub(1) {
                num = modp::mul(num, lambda[s[k]] % modp::P);
                den = modp::mul(den, sums[k] % modp::P);
            }
            modp::mul(num, modp::inv(den))
        })
        .collect()
}

/// Result of [`theorem1_rank`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankCertificate {
    pub degree: usize,
    pub max_weight: u64,
    /// Exact rank of the evaluation matrix over the tuples examined.
    pub rank: usize,
    /// `n!`, the number of columns.
    pub full_rank: usize,
    /// Tuples whose rows are linearly independent; `n!` of them when
    /// certified.
    pub witnesses: Vec<LambdaTuple>,
    /// Determinant of the witness submatrix when certified.
    pub determinant: Option<Coeff>,
    pub tuples_examined: usize,
}

impl RankCertificate {
    pub fn certified(&self) -> bool {
        self.rank == self.full_rank
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Rank of the matrix with rows indexed by tuples `λ ∈ [1, max_weight]^n`
/// and columns by `σ ∈ S_n` (lexicographic), entry `P_n(λ_{σ1}, …, λ_{σn})`.
///
/// Full rank `n!` means no nonzero multilinear combination of degree `n`
/// vanishes under every evaluation, i.e. the one-generated algebra satisfies
/// no multilinear identity of that degree.
///
/// Rows are screened modulo a large prime (independence mod p implies
/// independence over ℚ) and enumeration stops at rank `n!`; the chosen
/// submatrix is then re-checked exactly by fraction-free elimination, which
/// also yields its determinant. If the screen ends short of `n!`, the rank
/// is recomputed exactly over all examined rows.
pub fn theorem1_rank(n: usize, max_weight: u64) -> RankCertificate {
    let full_rank: usize = (1..=n).product();
    let perms = permutations(n);
    let mut screen = modp::Echelon::default();
    let mut witnesses = Vec::new();
    let mut examined = Vec::new();

    for lambda in TupleShells::new(n, max_weight) {
        if screen.insert(modular_row(lambda.weights(), &perms)) {
            witnesses.push(lambda.clone());
        }
        examined.push(lambda);
        if screen.rank() == full_rank {
            break;
        }
    }

    if screen.rank() == full_rank {
        let mut factor = Coeff::one();
        let matrix = witnesses
            .iter()
            .map(|l| {
                let (ints, f) = clear_denominators(&exact_row(l.weights(), &perms));
                factor *= f;
                ints
            })
            .collect();
        let (rank, det) = bareiss(matrix);
        assert_eq!(rank, full_rank, "modular screen overestimated the rank");
        let det = det.map(|d| Coeff::from_integer(d) / factor);
        return RankCertificate {
            degree: n,
            max_weight,
            rank,
            full_rank,
            witnesses,
            determinant: det,
            tuples_examined: examined.len(),
        };
    }

    // The screen can only underestimate; settle the rank exactly.
    let mut exact: SparseEchelon<usize> = SparseEchelon::new();
    let mut witnesses = Vec::new();
    for lambda in &examined {
        let row: BTreeMap<usize, Coeff> = exact_row(lambda.weights(), &perms)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if exact.insert(row) {
            witnesses.push(lambda.clone());
        }
    }
    RankCertificate {
        degree: n,
        max_weight,
        rank: exact.rank(),
        full_rank,
        witnesses,
        determinant: None,
        tuples_examined: examined.len(),
    }
}

/// A tuple at which a multilinear element evaluates to a nonzero multiple of
/// `X_{Σλ}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub lambda: LambdaTuple,
    pub value: Coeff,
}

/// `Σ_σ α_σ P_n(λ_{σ1}, …, λ_{σn})`.
pub fn evaluate_multilinear(m: &MultilinearElement, lambda: &LambdaTuple) -> Coeff {
    let mut total = Coeff::zero();
    for (sigma, alpha) in m.coefficients() {
        total += alpha * p_ratio(lambda.permuted(sigma).weights());
    }
    total
}

/// First tuple (in [`TupleShells`] order) where `m` evaluates to nonzero.
pub fn witness_search(m: &MultilinearElement, max_weight: u64) -> Option<Witness> {
    if m.is_zero() {
        return None;
    }
    TupleShells::new(m.degree(), max_weight).find_map(|lambda| {
        let value = evaluate_multilinear(m, &lambda);
        (!value.is_zero()).then_some(Witness { lambda, value })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(n.into(), d.into())
    }

    #[test]
    fn shells_order() {
        let got: Vec<Vec<u64>> = TupleShells::new(2, 3).map(|t| t.0).collect();
        let want: Vec<Vec<u64>> = vec![
            vec![1, 1],
            vec![1, 2],
            vec![2, 1],
            vec![2, 2],
            vec![1, 3],
            vec![2, 3],
            vec![3, 1],
            vec![3, 2],
            vec![3, 3],
        ];
        assert_eq!(got, want);
        assert_eq!(TupleShells::new(3, 4).count(), 64);
        assert_eq!(TupleShells::new(1, 1).count(), 1);
        assert_eq!(TupleShells::new(2, 0).count(), 0);
    }

    #[test]
    fn rank_small_degrees() {
        let c = theorem1_rank(1, 1);
        assert_eq!(c.rank, 1);
        assert!(c.certified());

        let c = theorem1_rank(2, 2);
        assert_eq!(c.rank, 2);
        let w: Vec<Vec<u64>> = c.witnesses.iter().map(|t| t.0.clone()).collect();
        assert_eq!(w, vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(c.determinant, Some(q(1, 6)));
    }

    #[test]
    fn rank_short_of_full_is_reported() {
        let c = theorem1_rank(3, 1);
        assert_eq!(c.rank, 1);
        assert!(!c.certified());
        assert_eq!(c.determinant, None);
    }

    #[test]
    fn witness_examples() {
        let m = MultilinearElement::from_pairs(2, [(vec![1, 2], q(1, 1))]).unwrap();
        let w = witness_search(&m, 6).unwrap();
        assert_eq!(w.lambda.0, vec![1, 1]);
        assert_eq!(w.value, q(1, 2));

        assert!(witness_search(&MultilinearElement::zero(2), 6).is_none());

        let m = MultilinearElement::from_pairs(2, [(vec![1, 2], q(1, 1)), (vec![2, 1], q(-1, 1))])
            .unwrap();
        let w = witness_search(&m, 6).unwrap();
        assert_eq!(w.lambda.0, vec![1, 2]);
        assert_eq!(w.value, q(-1, 3));
        assert!(witness_search(&m, 1).is_none());
    }
}
