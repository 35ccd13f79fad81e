use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::decimal;

/// Exact face-count histogram: face count `j` -> number of embeddings (or
/// permutations) with `j` faces. Zero weights are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDistribution {
    weights: BTreeMap<usize, BigUint>,
    total: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionRow {
    pub faces: usize,
    pub count: String,
    pub probability: String,
    pub decimal: String,
}

impl FaceDistribution {
    pub fn new(weights: impl IntoIterator<Item = (usize, BigUint)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (j, w) in weights {
            if !w.is_zero() {
                *map.entry(j).or_insert_with(BigUint::zero) += w;
            }
        }
        let total: BigUint = map.values().sum();
        if total.is_zero() {
            return Err(Error::Precondition(
                "face distribution has zero total".into(),
            ));
        }
        Ok(FaceDistribution {
            weights: map,
            total,
        })
    }

    /// All mass on `faces`.
    pub fn point_mass(faces: usize, weight: BigUint) -> Result<Self> {
        Self::new([(faces, weight)])
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(j, &c)| (j, BigUint::from(c))),
        )
    }

    pub fn weights(&self) -> &BTreeMap<usize, BigUint> {
        &self.weights
    }

    pub fn weight(&self, faces: usize) -> BigUint {
        self.weights.get(&faces).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn probability(&self, faces: usize) -> BigRational {
        BigRational::new(self.weight(faces).into(), self.total.clone().into())
    }

    pub fn probabilities(&self) -> BTreeMap<usize, BigRational> {
        self.weights
            .keys()
            .map(|&j| (j, self.probability(j)))
            .collect()
    }

    /// Same probabilities, regardless of the totals.
    pub fn same_law(&self, other: &FaceDistribution) -> bool {
        self.probabilities() == other.probabilities()
    }

    pub fn expectation(&self) -> BigRational {
        let num: BigUint = self.weights.iter().map(|(&j, w)| w * j).sum();
        BigRational::new(BigInt::from(num), BigInt::from(self.total.clone()))
    }

    pub fn min_faces(&self) -> usize {
        *self.weights.keys().next().expect("nonempty")
    }

    pub fn max_faces(&self) -> usize {
        *self.weights.keys().next_back().expect("nonempty")
    }

    pub fn rows(&self) -> Vec<DistributionRow> {
        self.weights
            .iter()
            .map(|(&faces, w)| {
                let p = self.probability(faces);
                DistributionRow {
                    faces,
                    count: w.to_string(),
                    probability: p.to_string(),
                    decimal: decimal(&p),
                }
            })
            .collect()
    }

    /// CSV with header `faces,count,probability,decimal`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("faces,count,probability,decimal\n");
        for r in self.rows() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.faces, r.count, r.probability, r.decimal
            ));
        }
        out
    }
}
