//! Permutations of a finite ground set `{0, .., m-1}`.
//!
//! Composition reads left to right: `p.compose(&q)` applies `p` first, so
//! `p.compose(&q)(x) == q(p(x))`. With this convention
//! `(1 2 3 4 5 6 7)` composed with `(1 4)(7)(2 3 5)(6)` is `(1 3)(2 5 6 7 4)`.
//! Cycle counts of products do not depend on the convention, since the two
//! orders give conjugate permutations.

use std::fmt;

use rand::Rng;

use crate::choice::{Chooser, RngChooser};
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// Builds a permutation from its image vector, `images[x] = p(x)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &y in &images {
            if y >= m {
                return Err(Error::NotAPermutation(format!("image {y} outside 0..{m}")));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::NotAPermutation(format!("image {y} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation on `m` points from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(m: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut used = vec![false; m];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= m {
                    return Err(Error::NotAPermutation(format!("point {x} outside 0..{m}")));
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::NotAPermutation(format!(
                        "point {x} appears in two cycles"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// Disjoint cycles in canonical form: each cycle starts at its least
    /// element and cycles are sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
            .expect("cycle lengths are positive")
    }

    pub fn is_full_cycle(&self) -> bool {
        !self.is_empty() && self.cycle_count() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// Arranges `items` into a uniformly random cyclic order.
///
/// The first item stays in front and the rest are shuffled, so each of the
/// `(len - 1)!` cyclic orders is produced by exactly one choice sequence.
/// The returned vector lists the cycle: `items[0] -> out[1] -> ... -> out[0]`.
pub fn random_cyclic_order<T: Copy>(items: &[T], chooser: &mut impl Chooser) -> Vec<T> {
    let mut out = items.to_vec();
    if out.len() > 2 {
        let tail = &mut out[1..];
        for i in (1..tail.len()).rev() {
            let j = chooser.choose(i + 1);
            tail.swap(i, j);
        }
    }
    out
}

/// A uniformly random permutation of `0..m` with a single cycle.
pub fn random_full_cycle<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<Permutation> {
    full_cycle_with(m, &mut RngChooser(rng))
}

pub fn full_cycle_with(m: usize, chooser: &mut impl Chooser) -> Result<Permutation> {
    if m == 0 {
        return Err(Error::OutOfRange(
            "a full cycle needs a nonempty ground set".into(),
        ));
    }
    let points: Vec<usize> = (0..m).collect();
    let order = random_cyclic_order(&points, chooser);
    Permutation::from_cycles(m, &[order])
}

/// Steps `items` to its next lexicographic arrangement; returns false (and
/// leaves `items` sorted) after the last one.
pub(crate) fn next_arrangement<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choice::exhaust;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn one_based(m: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|x| x - 1).collect())
            .collect();
        Permutation::from_cycles(m, &cycles).unwrap()
    }

    #[test]
    fn worked_product() {
        let rot = one_based(7, &[&[1, 2, 3, 4, 5, 6, 7]]);
        let phi = one_based(7, &[&[1, 4], &[7], &[2, 3, 5], &[6]]);
        let prod = rot.compose(&phi).unwrap();
        assert_eq!(prod, one_based(7, &[&[1, 3], &[2, 5, 6, 7, 4]]));
        assert_eq!(prod.cycles(), vec![vec![0, 2], vec![1, 4, 5, 6, 3]]);
        assert_eq!(prod.cycle_type().parts(), &[5, 2]);
    }

    #[test]
    fn inverse_pair_composes_to_identity() {
        let p = one_based(3, &[&[1, 2, 3]]);
        let q = one_based(3, &[&[1, 3, 2]]);
        assert_eq!(p.compose(&q).unwrap(), Permutation::identity(3));
        assert_eq!(p.inverse(), q);
    }

    #[test]
    fn square_of_three_cycle() {
        let p = one_based(3, &[&[1, 2, 3]]);
        let sq = p.compose(&p).unwrap();
        assert_eq!(sq.cycles(), vec![vec![0, 2, 1]]);
    }

    #[test]
    fn identity_cases() {
        let q = one_based(5, &[&[1, 5], &[2, 4, 3]]);
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
        assert_eq!(Permutation::identity(4).cycles().len(), 4);
        assert_eq!(Permutation::identity(3).cycle_type().parts(), &[1, 1, 1]);
        let full = one_based(6, &[&[1, 2, 3, 4, 5, 6]]);
        assert_eq!(full.cycle_type().parts(), &[6]);
    }

    #[test]
    fn size_mismatch_and_bad_images() {
        let err = Permutation::identity(2).compose(&Permutation::identity(3));
        assert!(matches!(
            err,
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn display_uses_canonical_cycles() {
        let p = Permutation::from_images(vec![2, 3, 0, 1, 4]).unwrap();
        assert_eq!(p.to_string(), "(0 2)(1 3)(4)");
    }

    #[test]
    fn small_full_cycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(random_full_cycle(0, &mut rng).is_err());
        assert_eq!(
            random_full_cycle(1, &mut rng).unwrap(),
            Permutation::identity(1)
        );
        for _ in 0..10 {
            let p = random_full_cycle(2, &mut rng).unwrap();
            assert_eq!(p.images(), &[1, 0]);
        }
    }

    #[test]
    fn cyclic_orders_enumerate_exactly_once() {
        let mut counts = BTreeMap::new();
        exhaust(
            |c| full_cycle_with(5, c).unwrap(),
            |p, _| *counts.entry(p).or_insert(0) += 1,
        );
        assert_eq!(counts.len(), 24);
        assert!(counts.values().all(|&c| c == 1));
        assert!(counts.keys().all(Permutation::is_full_cycle));
    }

    #[test]
    fn full_cycle_frequencies_are_uniform() {
        // 6 full cycles on 4 points; each count is Binomial(N, 1/6).
        let n = 100_000u32;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts: BTreeMap<Permutation, u32> = BTreeMap::new();
        for _ in 0..n {
            *counts
                .entry(random_full_cycle(4, &mut rng).unwrap())
                .or_default() += 1;
        }
        assert_eq!(counts.len(), 6);
        let p = 1.0 / 6.0;
        let mean = n as f64 * p;
        let sd = (n as f64 * p * (1.0 - p)).sqrt();
        for &c in counts.values() {
            assert!((c as f64 - mean).abs() <= 4.0 * sd, "count {c}");
        }
    }

    #[test]
    fn arrangements_walk_all_orders() {
        let mut v = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_arrangement(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(v, vec![0, 1, 2, 3]);
    }
}
