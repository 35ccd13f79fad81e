//! Stirling numbers of the first kind.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Triangle of unsigned Stirling numbers `c(n, k)` for `0 <= k <= n <= bound`,
/// filled by `c(n+1, k) = n c(n, k) + c(n, k-1)`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(bound: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(bound + 1);
        rows.push(vec![BigUint::one()]);
        for n in 0..bound {
            let prev = &rows[n];
            let mut row = vec![BigUint::zero(); n + 2];
            for (k, slot) in row.iter_mut().enumerate() {
                if k <= n {
                    *slot += &prev[k] * n;
                }
                if k >= 1 {
                    *slot += &prev[k - 1];
                }
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn bound(&self) -> usize {
        self.rows.len() - 1
    }

    /// `c(n, k)`: permutations of `n` points with exactly `k` cycles.
    pub fn unsigned(&self, n: usize, k: usize) -> Result<&BigUint> {
        if n > self.bound() || k > n {
            return Err(Error::OutOfRange(format!(
                "c({n}, {k}) needs 0 <= k <= n <= {}",
                self.bound()
            )));
        }
        Ok(&self.rows[n][k])
    }

    /// `s(n, k) = (-1)^(n-k) c(n, k)`.
    pub fn signed(&self, n: usize, k: usize) -> Result<BigInt> {
        let c = BigInt::from(self.unsigned(n, k)?.clone());
        Ok(if (n - k).is_multiple_of(2) { c } else { -c })
    }

    pub fn row(&self, n: usize) -> Result<&[BigUint]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::OutOfRange(format!("row {n} beyond bound {}", self.bound())))
    }
}

/// `c(n, k)` from a fresh table of bound `n`.
pub fn stirling_unsigned(n: usize, k: usize) -> Result<BigUint> {
    StirlingTable::new(n).unsigned(n, k).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;
    use crate::perm::{next_arrangement, Permutation};
    use crate::poly::rising_factorial_poly;

    /// Counts permutations of `n` points by number of cycles.
    fn brute_force_row(n: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n + 1];
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            let p = Permutation::from_images(images.clone()).unwrap();
            counts[p.cycle_count()] += 1;
            if !next_arrangement(&mut images) {
                break;
            }
        }
        counts
    }

    #[test]
    fn known_values() {
        assert_eq!(stirling_unsigned(4, 2).unwrap(), 11u32.into());
        assert_eq!(stirling_unsigned(8, 3).unwrap(), 13132u32.into());
        let t = StirlingTable::new(12);
        for n in 0..=12 {
            assert!(t.unsigned(n, n).unwrap().is_one());
        }
        for n in 1..=12 {
            assert!(t.unsigned(n, 0).unwrap().is_zero());
        }
        assert_eq!(t.signed(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(t.signed(4, 1).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn matches_brute_force_cycle_counts() {
        let t = StirlingTable::new(8);
        for n in 0..=8 {
            let brute = brute_force_row(n);
            for (k, &count) in brute.iter().enumerate() {
                assert_eq!(
                    t.unsigned(n, k).unwrap(),
                    &BigUint::from(count),
                    "c({n},{k})"
                );
            }
        }
    }

    #[test]
    fn row_sums_are_factorials() {
        let t = StirlingTable::new(40);
        for n in 0..=40 {
            let sum: BigUint = t.row(n).unwrap().iter().sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn rising_factorial_coefficients_are_a_stirling_row() {
        let t = StirlingTable::new(41);
        for n in 0..=40 {
            let poly = rising_factorial_poly(n);
            let row = t.row(n + 1).unwrap();
            assert_eq!(poly.coeffs().len(), row.len());
            for (c, s) in poly.coeffs().iter().zip(row) {
                assert_eq!(c, &BigInt::from(s.clone()));
            }
        }
    }

    #[test]
    fn out_of_range() {
        let t = StirlingTable::new(5);
        assert!(t.unsigned(6, 1).is_err());
        assert!(t.unsigned(3, 4).is_err());
        assert!(t.row(6).is_err());
    }
}
