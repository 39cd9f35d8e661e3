//! Exact linear algebra used by the rank certificates and consequence spans.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::freealg::Coeff;

/// Incremental row echelon form over ℚ for sparse vectors indexed by `K`.
///
/// Every stored row is normalized so that its leading entry (smallest key)
/// is 1, and no two rows share a leading key.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, Coeff>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after reduction by the stored rows; zero iff `v` lies
    /// in the span.
    pub fn reduce(&self, mut v: BTreeMap<K, Coeff>) -> BTreeMap<K, Coeff> {
        v.retain(|_, c| !c.is_zero());
        let mut done: BTreeMap<K, Coeff> = BTreeMap::new();
        while let Some((k, c)) = v.pop_first() {
            match self.rows.get(&k) {
                None => {
                    done.insert(k, c);
                }
                Some(row) => {
                    for (j, a) in row.iter().skip(1) {
                        let slot = v.entry(j.clone()).or_insert_with(Coeff::zero);
                        *slot -= a * &c;
                        if slot.is_zero() {
                            v.remove(j);
                        }
                    }
                }
            }
        }
        done
    }

    pub fn contains(&self, v: BTreeMap<K, Coeff>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns true if the rank grew.
    pub fn insert(&mut self, v: BTreeMap<K, Coeff>) -> bool {
        let r = self.reduce(v);
        let Some((lead, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        let row = r.into_iter().map(|(k, a)| (k, a * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }

    /// The stored rows, in order of their leading keys.
    pub fn rows(&self) -> impl Iterator<Item = &BTreeMap<K, Coeff>> {
        self.rows.values()
    }
}

/// Fraction-free (Bareiss) elimination on an integer matrix.
///
/// Returns the rank and, for a square matrix of full rank, its determinant.
/// All intermediate values are integers; each step divides exactly by the
/// previous pivot.
pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, Option<BigInt>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let square = rows == cols;
    let mut prev = BigInt::one();
    let mut sign_flip = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign_flip = !sign_flip;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = &row[j] * &pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    let det = (square && r == rows).then(|| {
        let d = if rows == 0 { BigInt::one() } else { prev };
        if sign_flip {
            -d
        } else {
            d
        }
    });
    (r, det)
}

/// Scales a rational row by the lcm of its denominators (then removes the
/// content), returning the integer row and the factor applied.
pub fn clear_denominators(row: &[Coeff]) -> (Vec<BigInt>, Coeff) {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() || content.is_one() {
        return (ints, Coeff::from_integer(lcm));
    }
    let ints = ints.into_iter().map(|x| x / &content).collect();
    (ints, Coeff::new(lcm, content))
}

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
pub mod modp {
    pub const P: u64 = (1 << 61) - 1;

    pub fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    pub fn sub(a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + P - b
        }
    }

    pub fn pow(mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64) -> u64 {
        debug_assert!(a % P != 0);
        pow(a, P - 2)
    }

    /// Incremental dense echelon form over F_p.
    #[derive(Clone, Debug, Default)]
    pub struct Echelon {
        // (pivot column, row normalized to 1 at the pivot)
        rows: Vec<(usize, Vec<u64>)>,
    }

    impl Echelon {
        pub fn rank(&self) -> usize {
            self.rows.len()
        }

        /// Adds `v`; true if it was independent of the stored rows.
        pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
            for (p, row) in &self.rows {
                let c = v[*p];
                if c != 0 {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = sub(*x, mul(c, *y));
                    }
                }
            }
            let Some(p) = v.iter().position(|&x| x != 0) else {
                return false;
            };
            let inv = inv(v[p]);
            for x in &mut v {
                *x = mul(*x, inv);
            }
            self.rows.push((p, v));
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(n.into(), d.into())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn bareiss_determinant() {
        let (r, d) = bareiss(ints(&[&[2, 1], &[1, 3]]));
        assert_eq!((r, d), (2, Some(BigInt::from(5))));
        let (r, d) = bareiss(ints(&[&[0, 1], &[1, 0]]));
        assert_eq!((r, d), (2, Some(BigInt::from(-1))));
        let (r, d) = bareiss(ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]));
        assert_eq!((r, d), (2, None));
        let (r, d) = bareiss(ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]));
        assert_eq!((r, d), (3, Some(BigInt::from(6))));
    }

    #[test]
    fn bareiss_rectangular() {
        let (r, d) = bareiss(ints(&[&[1, 2, 3], &[2, 4, 7]]));
        assert_eq!((r, d), (2, None));
    }

    #[test]
    fn clearing_denominators() {
        let (row, f) = clear_denominators(&[q(1, 2), q(1, 3)]);
        assert_eq!(row, vec![BigInt::from(3), BigInt::from(2)]);
        assert_eq!(f, q(6, 1));
        let (row, f) = clear_denominators(&[q(2, 1), q(4, 1)]);
        assert_eq!(row, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(f, q(1, 2));
    }

    #[test]
    fn sparse_echelon_span() {
        let v = |xs: &[(u32, i64)]| -> BTreeMap<u32, Coeff> {
            xs.iter().map(|&(k, c)| (k, q(c, 1))).collect()
        };
        let mut e = SparseEchelon::new();
        assert!(e.insert(v(&[(1, 2), (2, 4)])));
        assert!(!e.insert(v(&[(1, 1), (2, 2)])));
        assert!(e.insert(v(&[(2, 1), (3, 1)])));
        assert!(e.contains(v(&[(1, 1), (2, 3), (3, 1)])));
        assert!(!e.contains(v(&[(3, 1)])));
        assert!(!e.insert(BTreeMap::new()));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn modular_echelon() {
        let mut e = modp::Echelon::default();
        assert!(e.insert(vec![1, 2]));
        assert!(!e.insert(vec![2, 4]));
        assert!(e.insert(vec![0, 5]));
        assert_eq!(e.rank(), 2);
        assert_eq!(modp::mul(modp::inv(12345), 12345), 1);
    }
}
