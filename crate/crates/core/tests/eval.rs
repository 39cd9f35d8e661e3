mod common;

use common::{q, random_homogeneous};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use zinbiel::eval::{
    descent_report, p_n, psi_element, psi_element_via_products, q_n, theorem1_rank,
    witness_search, Assignment, LambdaTuple, OneVarElement, TupleShells,
};
use zinbiel::freealg::{word_element as we, Coeff};
use zinbiel::identities::MultilinearElement;

fn lambda(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=9, 1..=max_len)
}

/// `P_n` straight from the product formula, with no shared code.
fn p_direct(w: &[u64]) -> Coeff {
    let mut acc = Coeff::one();
    for k in 0..w.len().saturating_sub(1) {
        let suffix: u64 = w[k..].iter().sum();
        acc *= q(w[k] as i64, suffix as i64);
    }
    acc
}

/// Determinant by plain Gaussian elimination over ℚ.
fn det_gauss(mut m: Vec<Vec<Coeff>>) -> Coeff {
    let n = m.len();
    let mut det = Coeff::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Coeff::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// Constant term of the polynomial through `(x_i, y_i)`, by Lagrange.
fn lagrange_at_zero(points: &[(Coeff, Coeff)]) -> Coeff {
    let mut total = Coeff::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = yi.clone();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                term *= -xj.clone() / (xi - xj);
            }
        }
        total += term;
    }
    total
}

/// `lim_{λ_n→0} λ_n Q_n(prefix, λ_n)` without touching the symbolic
/// cancellation: by homogeneity `1 / (N^{n-2} Q_n(N·prefix, 1))` is a
/// polynomial of degree `n - 2` in `u = 1/N`, whose value at `u = 0` is the
/// reciprocal of the limit.
fn descent_limit_oracle(prefix: &[u64]) -> Coeff {
    let n = prefix.len() + 1;
    let points: Vec<(Coeff, Coeff)> = (1..=n as u64)
        .map(|big_n| {
            let mut w: Vec<u64> = prefix.iter().map(|x| x * big_n).collect();
            w.push(1);
            let qv = q_n(&LambdaTuple::new(w).unwrap());
            let scale = Coeff::from_integer(big_n.into()).pow(n as i32 - 2);
            (q(1, big_n as i64), Coeff::one() / (scale * qv))
        })
        .collect();
    Coeff::one() / lagrange_at_zero(&points)
}

proptest! {
    #[test]
    fn p_matches_direct_formula(w in lambda(8)) {
        prop_assert_eq!(p_n(&LambdaTuple::new(w.clone()).unwrap()), p_direct(&w));
    }

    #[test]
    fn p_recursion(w in lambda(8)) {
        prop_assume!(w.len() >= 2);
        let total: u64 = w.iter().sum();
        let lhs = p_n(&LambdaTuple::new(w.clone()).unwrap());
        let rhs = q(w[0] as i64, total as i64) * p_n(&LambdaTuple::new(w[1..].to_vec()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn p_q_relation(w in lambda(8)) {
        let l = LambdaTuple::new(w.clone()).unwrap();
        let prod: u64 = w.iter().product();
        prop_assert_eq!(p_n(&l), q(prod as i64, l.total() as i64) * q_n(&l));
    }

    #[test]
    fn descent_limit_matches_interpolation(w in lambda(7)) {
        let l = LambdaTuple::new(w.clone()).unwrap();
        let r = descent_report(&l);
        prop_assert!(r.holds());
        prop_assert_eq!(&r.limit, &descent_limit_oracle(&w));
        prop_assert_eq!(r.limit, q_n(&l));
    }

    #[test]
    fn psi_is_multiplicative(seed in any::<u64>(), a in 1usize..=3, b in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_homogeneous(&mut rng, a, 3, 3);
        let g = random_homogeneous(&mut rng, b, 3, 3);
        let assign: Assignment = (1..=3).map(|i| (i, (seed >> (4 * i)) % 5 + 1)).collect();
        let lhs = psi_element(&f.mul(&g), &assign).unwrap();
        let rhs = psi_element(&f, &assign).unwrap().mul(&psi_element(&g, &assign).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, psi_element_via_products(&f.mul(&g), &assign).unwrap());
    }

    #[test]
    fn shells_are_ordered_and_complete(n in 1usize..=3, max in 1u64..=4) {
        let tuples: Vec<Vec<u64>> = TupleShells::new(n, max).map(|l| l.weights().to_vec()).collect();
        prop_assert_eq!(tuples.len() as u64, max.pow(n as u32));
        let shells: Vec<u64> = tuples.iter().map(|t| *t.iter().max().unwrap()).collect();
        prop_assert!(shells.windows(2).all(|p| p[0] <= p[1]));
        let mut sorted = tuples.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), tuples.len());
    }
}

#[test]
fn x_basis_products_follow_from_powers() {
    for i in 1..=8u64 {
        for j in 1..=8u64 {
            let xi = OneVarElement::basis(i).unwrap().to_power_basis(1).unwrap();
            let xj = OneVarElement::basis(j).unwrap().to_power_basis(1).unwrap();
            let got = OneVarElement::from_power_basis(&xi.mul(&xj)).unwrap();
            let mut want = OneVarElement::zero();
            want.add_term(i + j, q(i as i64, (i + j) as i64));
            assert_eq!(got, want, "X{i} X{j}");
        }
    }
}

#[test]
fn rank_certificate_degree_two_frozen() {
    let c = theorem1_rank(2, 8);
    assert!(c.certified());
    let w: Vec<Vec<u64>> = c.witnesses.iter().map(|l| l.weights().to_vec()).collect();
    assert_eq!(w, vec![vec![1, 1], vec![1, 2]]);
    // rows (1/2, 1/2) and (1/3, 2/3)
    assert_eq!(c.determinant, Some(q(1, 6)));
}

#[test]
fn rank_certificate_determinants_match_gauss() {
    for n in 2..=4 {
        let c = theorem1_rank(n, 8);
        assert!(c.certified(), "n = {n}");
        assert_eq!(c.witnesses.len(), c.full_rank);
        let ps = perms(n);
        let m: Vec<Vec<Coeff>> = c
            .witnesses
            .iter()
            .map(|l| {
                ps.iter()
                    .map(|s| p_direct(&s.iter().map(|&k| l.weights()[k]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let det = det_gauss(m);
        assert!(!det.is_zero());
        assert_eq!(c.determinant, Some(det), "n = {n}");
    }
}

#[test]
fn rank_certificate_degree_three_frozen() {
    assert_eq!(theorem1_rank(3, 8).determinant, Some(q(-1, 2592000)));
}

#[test]
fn small_weight_bound_is_reported_honestly() {
    // With all weights 1 every row is the same vector.
    let c = theorem1_rank(3, 1);
    assert!(!c.certified());
    assert_eq!(c.rank, 1);
    assert_eq!(c.determinant, None);
}

#[test]
fn witness_for_commutator() {
    let m = MultilinearElement::from_pairs(2, [(vec![1, 2], q(1, 1)), (vec![2, 1], q(-1, 1))])
        .unwrap();
    let w = witness_search(&m, 6).unwrap();
    assert_eq!(w.lambda.weights(), &[1, 2]);
    // P(1,2) - P(2,1) = 1/3 - 2/3
    assert_eq!(w.value, q(-1, 3));
    assert!(witness_search(&MultilinearElement::zero(3), 6).is_none());
}

#[test]
fn psi_of_power_of_generator() {
    // x^m ↦ X_{m}/m! when λ = 1.
    let assign: Assignment = [(1, 1)].into_iter().collect();
    for m in 1..=6usize {
        let img = psi_element(&we(&vec![1; m]), &assign).unwrap();
        let fact: i64 = (1..=m as i64).product();
        let mut want = OneVarElement::zero();
        want.add_term(m as u64, q(1, fact));
        assert_eq!(img, want);
    }
}
