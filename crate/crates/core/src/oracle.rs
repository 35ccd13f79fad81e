//! Exact laws of the randomized constructions, obtained by walking every
//! sequence of random choices.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::bounds::h_bound;
use crate::choice::exhaust;
use crate::embed::{build_incrementally, faces_containing, PartialEmbedding, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};

/// Probability of every rotation system produced by attaching the vertices
/// of `g` one at a time in `order`.
pub fn incremental_law(
    g: &Multigraph,
    order: &[Vertex],
) -> Result<BTreeMap<RotationSystem, BigRational>> {
    let mut law: BTreeMap<RotationSystem, BigRational> = BTreeMap::new();
    let mut failure = None;
    exhaust(
        |c| build_incrementally(g, order, c),
        |out, denom| match out {
            Ok(rot) => {
                *law.entry(rot).or_insert_with(BigRational::zero) +=
                    BigRational::new(1.into(), denom.clone().into());
            }
            Err(e) => failure = Some(e),
        },
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(law),
    }
}

/// Accumulates `sum_paths value / denom` grouped by denominator.
#[derive(Default)]
struct WeightedSum {
    by_denom: BTreeMap<BigUint, u64>,
}

impl WeightedSum {
    fn add(&mut self, value: u64, denom: &BigUint) {
        *self.by_denom.entry(denom.clone()).or_default() += value;
    }

    fn total(&self) -> BigRational {
        self.by_denom
            .iter()
            .fold(BigRational::zero(), |acc, (d, &v)| {
                acc + BigRational::new(BigInt::from(v), BigInt::from(d.clone()))
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttachmentReport {
    pub vertex: Vertex,
    pub degree: usize,
    /// Number of rotation systems of `g - v`.
    pub base_embeddings: u64,
    /// Largest expected number of faces through `v` over all base
    /// embeddings.
    pub max_expectation: BigRational,
    /// Expectation when the base embedding is uniform as well.
    pub mean_expectation: BigRational,
    pub bound: BigRational,
}

impl AttachmentReport {
    pub fn within_bound(&self) -> bool {
        self.max_expectation <= self.bound
    }
}

/// For every embedding of `g - v`, the exact expected number of faces
/// through `v` after randomly attaching it.
pub fn attachment_expectations(g: &Multigraph, v: Vertex) -> Result<AttachmentReport> {
    if v >= g.vertex_count() {
        return Err(Error::Precondition(format!(
            "vertex {v} is not in the graph"
        )));
    }
    let degree = g.degree(v);
    let bound = h_bound(degree)?;
    let active: Vec<bool> = (0..g.vertex_count()).map(|u| u != v).collect();

    let mut bases = Vec::new();
    exhaust(
        |c| PartialEmbedding::random_on(g, &active, c),
        |base, _| bases.push(base),
    );

    let mut max_expectation: Option<BigRational> = None;
    let mut sum = BigRational::zero();
    for base in &bases {
        let mut acc = WeightedSum::default();
        let mut failure = None;
        exhaust(
            |c| {
                let mut p = base.clone();
                p.add_vertex(v, c)?;
                let succ: Vec<usize> = (0..g.dart_count())
                    .map(|d| p.successor(d).expect("all vertices embedded"))
                    .collect();
                Ok(faces_containing(g, &succ, v))
            },
            |out: Result<usize>, denom| match out {
                Ok(f) => acc.add(f as u64, denom),
                Err(e) => failure = Some(e),
            },
        );
        if let Some(e) = failure {
            return Err(e);
        }
        let e = acc.total();
        sum += &e;
        if max_expectation.as_ref().is_none_or(|m| &e > m) {
            max_expectation = Some(e);
        }
    }
    let count = bases.len() as u64;
    Ok(AttachmentReport {
        vertex: v,
        degree,
        base_embeddings: count,
        max_expectation: max_expectation.expect("at least one base embedding"),
        mean_expectation: sum / BigRational::from_integer(count.into()),
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::embedding_count;
    use crate::graph::families::*;
    use crate::rational::{integer, ratio};

    #[test]
    fn path_built_in_order_is_uniform() {
        let g = path(3).unwrap();
        let law = incremental_law(&g, &[0, 1, 2]).unwrap();
        assert_eq!(law.len(), 1);
        assert_eq!(law.values().next().unwrap(), &integer(1));
    }

    #[test]
    fn dipole_law_is_uniform() {
        let g = dipole(4).unwrap();
        for order in [[0, 1], [1, 0]] {
            let law = incremental_law(&g, &order).unwrap();
            assert_eq!(BigUint::from(law.len()), embedding_count(&g));
            assert!(law.values().all(|p| p == &ratio(1, 36)));
        }
    }

    #[test]
    fn attaching_a_leaf_adds_one_face() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let r = attachment_expectations(&g, 3).unwrap();
        assert_eq!(r.max_expectation, integer(1));
        assert!(r.within_bound());
    }

    #[test]
    fn dipole_endpoint_matches_closed_form() {
        // Attaching one end of D_4 to the other end: the faces through it are
        // all faces of D_4.
        let g = dipole(4).unwrap();
        let r = attachment_expectations(&g, 1).unwrap();
        assert_eq!(r.mean_expectation, ratio(7, 3));
        assert_eq!(r.max_expectation, ratio(7, 3));
    }

    #[test]
    fn loops_are_rejected() {
        let g = Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert!(attachment_expectations(&g, 1).is_err());
    }
}
