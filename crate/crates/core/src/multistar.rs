//! Exact face distributions of multistars, dipoles and bouquets.
//!
//! The multistar `K_lambda(n)` has a center joined to outer vertex `i` by
//! `lambda_i` parallel edges. Fixing the center rotation to the full cycle
//! `(1 2 .. n)`, its faces are the cycles of the product with a permutation
//! of type `lambda`. Stanley's generating function gives the number `f(j)`
//! of such permutations whose product has `j` cycles:
//!
//! ```text
//! sum_j f(j) q^j = |C_lambda| / (n+1)! * prod_i (1 - E^lambda_i) (q+n)_(n+1)
//! ```
//!
//! where `E f(q) = f(q - 1)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::distribution::FaceDistribution;
use crate::error::{Error, Result};
use crate::partition::{conj_class_size, factorial, partitions_of, Partition};
use crate::poly::{rising_factorial_poly, IntPolynomial};
use crate::rational::{delta, integer, ratio};
use crate::stirling::StirlingTable;

/// A multistar type with its leaves split off. Leaves never change the face
/// count, so only `reduced` matters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultistarSpec {
    pub partition: Partition,
    pub reduced: Partition,
    /// Number of parts equal to 1.
    pub leaves: usize,
}

impl MultistarSpec {
    pub fn n(&self) -> usize {
        self.partition.weight()
    }

    /// `n' = n - leaves`; either 0 or at least 2.
    pub fn reduced_n(&self) -> usize {
        self.reduced.weight()
    }
}

pub fn reduce_partition(lambda: &Partition) -> MultistarSpec {
    MultistarSpec {
        partition: lambda.clone(),
        reduced: lambda.without_ones(),
        leaves: lambda.count_ones(),
    }
}

/// `prod_i (1 - E^lambda_i)` applied to `(q+n)_(n+1)`, one factor at a time.
pub fn stanley_polynomial(lambda: &Partition) -> Result<IntPolynomial> {
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::Precondition("partition must be nonempty".into()));
    }
    let mut g = rising_factorial_poly(n);
    for &part in lambda.parts() {
        g = &g - &g.shift(part as u64);
    }
    Ok(g)
}

/// `f_lambda(j)` for every `j`; the total is `|C_lambda|`.
///
/// Parts equal to 1 may be present: they are fixed points of the outer
/// permutation and leave the law unchanged.
pub fn multistar_face_distribution(lambda: &Partition) -> Result<FaceDistribution> {
    let g = stanley_polynomial(lambda)?;
    let n = lambda.weight();
    let class = BigInt::from(conj_class_size(lambda));
    let denom = BigInt::from(factorial(n + 1));
    let mut weights = Vec::new();
    for (j, c) in g.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (q, r) = (&class * c).div_rem(&denom);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::InexactDivision(format!(
                "f({j}) for partition {lambda}"
            )));
        }
        weights.push((j, q.to_biguint().expect("non-negative")));
    }
    FaceDistribution::new(weights)
}

/// Expected face count of `K_lambda(n)`; trees (no part above 1) have one
/// face.
pub fn multistar_expected_faces(lambda: &Partition) -> Result<BigRational> {
    if lambda.is_empty() {
        return Err(Error::Precondition("partition must be nonempty".into()));
    }
    let spec = reduce_partition(lambda);
    if spec.reduced.is_empty() {
        return Ok(integer(1));
    }
    Ok(multistar_face_distribution(&spec.reduced)?.expectation())
}

/// Face law of the `n`-edge dipole in closed form: `2 c(n+1, k) / (n(n+1))`
/// cyclic permutations give `k` faces when `n - k` is even.
pub fn dipole_face_distribution(n: usize) -> Result<FaceDistribution> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("dipole needs n >= 2, got {n}")));
    }
    let table = StirlingTable::new(n + 1);
    let denom = BigUint::from(n * (n + 1));
    let mut weights = Vec::new();
    for k in (1..=n).filter(|k| (n - k).is_multiple_of(2)) {
        let num = table.unsigned(n + 1, k)? * 2u32;
        let (q, r) = num.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("dipole n={n}, k={k}")));
        }
        weights.push((k, q));
    }
    FaceDistribution::new(weights)
}

/// `H_(n-1) + 2/n` for even `n`, `H_(n-1) + 2/(n+1)` for odd `n`.
pub fn dipole_expected_faces(n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("dipole needs n >= 2, got {n}")));
    }
    let extra = if n.is_multiple_of(2) {
        ratio(2, n)
    } else {
        ratio(2, n + 1)
    };
    Ok(crate::rational::harmonic(n - 1) + extra)
}

/// The bouquet of `n_loops` loops has the face law of `K_(2^n)(2n)`.
pub fn monopole_face_distribution(n_loops: usize) -> Result<FaceDistribution> {
    if n_loops == 0 {
        return Err(Error::OutOfRange("bouquet needs at least one loop".into()));
    }
    multistar_face_distribution(&Partition::new(vec![2; n_loops])?)
}

fn serialize_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalReport {
    pub partition: Partition,
    pub n: usize,
    pub reduced_n: usize,
    #[serde(serialize_with = "serialize_ratio")]
    pub expectation: BigRational,
    #[serde(serialize_with = "serialize_ratio")]
    pub delta: BigRational,
    /// `expectation - delta`
    #[serde(serialize_with = "serialize_ratio")]
    pub gap: BigRational,
    /// `1 / (n' + 1)`
    #[serde(serialize_with = "serialize_ratio")]
    pub half_width: BigRational,
    pub inside: bool,
}

/// Checks `|E[F] - Delta_n'| < 1/(n'+1)` exactly.
pub fn interval_check(lambda: &Partition) -> Result<IntervalReport> {
    let spec = reduce_partition(lambda);
    let m = spec.reduced_n();
    if m < 2 {
        return Err(Error::Precondition(format!(
            "partition {lambda} reduces to n' = {m}; the interval needs n' >= 2"
        )));
    }
    let expectation = multistar_face_distribution(&spec.reduced)?.expectation();
    let delta = delta(m)?;
    let gap = &expectation - &delta;
    let half_width = ratio(1, m + 1);
    let inside = gap.abs() < half_width;
    Ok(IntervalReport {
        partition: lambda.clone(),
        n: lambda.weight(),
        reduced_n: m,
        expectation,
        delta,
        gap,
        half_width,
        inside,
    })
}

/// Interval reports for every partition of every `n` in `2..=n_max` whose
/// reduction keeps at least two edges, in order of `n` and then
/// lexicographically decreasing partition.
pub fn interval_scan(n_max: usize) -> Result<Vec<IntervalReport>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let lambdas: Vec<Partition> = partitions_of(n)
            .filter(|l| l.weight() - l.count_ones() >= 2)
            .collect();
        let reports: Result<Vec<IntervalReport>> = lambdas.par_iter().map(interval_check).collect();
        out.extend(reports?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::harmonic;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn dist(pairs: &[(usize, u64)]) -> FaceDistribution {
        FaceDistribution::new(pairs.iter().map(|&(j, w)| (j, BigUint::from(w)))).unwrap()
    }

    #[test]
    fn reduction() {
        let s = reduce_partition(&p("5,4,4,2,1,1"));
        assert_eq!(s.reduced, p("5,4,4,2"));
        assert_eq!((s.leaves, s.reduced_n()), (2, 15));
        let t = reduce_partition(&p("1,1,1"));
        assert!(t.reduced.is_empty());
        assert_eq!((t.leaves, t.reduced_n()), (3, 0));
        let u = reduce_partition(&p("2,2"));
        assert_eq!((u.reduced.clone(), u.leaves), (p("2,2"), 0));
    }

    #[test]
    fn dipole_polynomial_is_stirling_difference() {
        let table = StirlingTable::new(12);
        for n in 1..=11 {
            let g = stanley_polynomial(&Partition::new(vec![n]).unwrap()).unwrap();
            for k in 0..=n + 1 {
                let expected = BigInt::from(table.unsigned(n + 1, k).unwrap().clone())
                    - table.signed(n + 1, k).unwrap();
                assert_eq!(g.coeff(k), expected, "n={n} k={k}");
                if (n - k.min(n)) % 2 == 1 && k <= n {
                    assert!(g.coeff(k).is_zero());
                }
            }
        }
    }

    #[test]
    fn small_distributions() {
        assert_eq!(
            multistar_face_distribution(&p("3")).unwrap(),
            dist(&[(1, 1), (3, 1)])
        );
        assert_eq!(
            multistar_face_distribution(&p("7")).unwrap(),
            dist(&[(1, 180), (3, 469), (5, 70), (7, 1)])
        );
        let d22 = multistar_face_distribution(&p("2,2")).unwrap();
        assert_eq!(d22, dist(&[(1, 1), (3, 2)]));
        assert_eq!(d22.expectation(), ratio(7, 3));
    }

    #[test]
    fn leaves_do_not_change_the_law() {
        for s in ["2,1", "3,1,1", "2,2,1", "4,2,1,1,1", "1", "1,1,1"] {
            let l = p(s);
            let direct = multistar_face_distribution(&l).unwrap();
            let reduced = l.without_ones();
            if reduced.is_empty() {
                assert_eq!(
                    direct.weights().keys().copied().collect::<Vec<_>>(),
                    vec![1]
                );
            } else {
                assert!(
                    direct.same_law(&multistar_face_distribution(&reduced).unwrap()),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn expectations() {
        assert_eq!(multistar_expected_faces(&p("2,2")).unwrap(), ratio(7, 3));
        assert_eq!(multistar_expected_faces(&p("1,1,1,1")).unwrap(), integer(1));
        assert!(multistar_expected_faces(&Partition::default()).is_err());
    }

    #[test]
    fn dipole_closed_forms() {
        assert_eq!(
            dipole_face_distribution(3).unwrap(),
            dist(&[(1, 1), (3, 1)])
        );
        assert_eq!(
            dipole_face_distribution(7).unwrap(),
            dist(&[(1, 180), (3, 469), (5, 70), (7, 1)])
        );
        assert_eq!(dipole_expected_faces(2).unwrap(), integer(2));
        assert_eq!(dipole_expected_faces(3).unwrap(), integer(2));
        assert_eq!(dipole_expected_faces(7).unwrap(), ratio(27, 10));
        assert!(dipole_face_distribution(1).is_err());
        assert!(dipole_expected_faces(0).is_err());
        for n in 2..=60 {
            let closed = dipole_face_distribution(n).unwrap();
            assert_eq!(
                closed,
                multistar_face_distribution(&Partition::new(vec![n]).unwrap()).unwrap()
            );
            assert_eq!(closed.total(), &factorial(n - 1));
        }
    }

    #[test]
    fn dipole_expectation_matches_its_distribution() {
        for n in 2..=200 {
            let e = dipole_expected_faces(n).unwrap();
            assert_eq!(
                e,
                dipole_face_distribution(n).unwrap().expectation(),
                "n={n}"
            );
            assert_eq!(e, harmonic(n - 1) + ratio(1, n.div_ceil(2)));
        }
    }

    #[test]
    fn monopoles() {
        assert_eq!(monopole_face_distribution(1).unwrap(), dist(&[(2, 1)]));
        let two = monopole_face_distribution(2).unwrap();
        assert_eq!(two.probability(1), ratio(1, 3));
        assert_eq!(two.probability(3), ratio(2, 3));
        assert!(monopole_face_distribution(0).is_err());
    }

    #[test]
    fn interval_examples() {
        for n in 2..=15 {
            let r = interval_check(&Partition::new(vec![n]).unwrap()).unwrap();
            assert!(r.gap.is_zero() && r.inside);
        }
        let r = interval_check(&p("2,2")).unwrap();
        assert_eq!(r.expectation, ratio(7, 3));
        assert!(r.gap.is_zero());
        assert!(interval_check(&p("1,1")).is_err());
        let r = interval_check(&p("2,2,1")).unwrap();
        assert_eq!((r.n, r.reduced_n), (5, 4));
    }

    #[test]
    fn scan_small_range_is_inside() {
        let rows = interval_scan(12).unwrap();
        assert!(rows.iter().all(|r| r.inside));
        // p(n) minus the partitions whose reduction is empty, for n = 2..=12
        let expected: usize = (2..=12)
            .map(|n| {
                partitions_of(n)
                    .filter(|l| l.weight() > l.count_ones())
                    .count()
            })
            .sum();
        assert_eq!(rows.len(), expected);
    }
}
