//! Exhaustive enumeration of rotation systems: the brute-force oracle.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::distribution::FaceDistribution;
use crate::embed::{count_faces, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Dart, Multigraph};
use crate::partition::factorial;
use crate::perm::next_arrangement;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// `prod_v (deg(v) - 1)!`, the number of rotation systems of `g`.
pub fn embedding_count(g: &Multigraph) -> BigUint {
    (0..g.vertex_count())
        .map(|v| factorial(g.degree(v) - 1))
        .product()
}

fn check_budget(g: &Multigraph, budget: u64) -> Result<u64> {
    let required = embedding_count(g);
    match required.to_u64() {
        Some(n) if n <= budget => Ok(n),
        _ => Err(Error::BudgetExceeded { required, budget }),
    }
}

/// Odometer over per-vertex cyclic orders. The first dart at each vertex
/// stays in front; the rest run through all arrangements.
struct Odometer<'g> {
    g: &'g Multigraph,
    orders: Vec<Vec<Dart>>,
    succ: Vec<Dart>,
}

impl<'g> Odometer<'g> {
    fn new(g: &'g Multigraph) -> Self {
        let orders: Vec<Vec<Dart>> = (0..g.vertex_count())
            .map(|v| g.darts_at(v).to_vec())
            .collect();
        let mut odo = Odometer {
            g,
            orders,
            succ: vec![0; g.dart_count()],
        };
        for v in 0..g.vertex_count() {
            odo.write(v);
        }
        odo
    }

    fn write(&mut self, v: usize) {
        let order = &self.orders[v];
        for (i, &d) in order.iter().enumerate() {
            self.succ[d] = order[(i + 1) % order.len()];
        }
    }

    /// Moves to the next rotation system; false after the last.
    fn advance(&mut self) -> bool {
        for v in (0..self.g.vertex_count()).rev() {
            let stepped = next_arrangement(&mut self.orders[v][1..]);
            self.write(v);
            if stepped {
                return true;
            }
        }
        false
    }
}

/// Iterator over every rotation system of a graph, each exactly once.
pub struct Embeddings<'g> {
    odo: Odometer<'g>,
    remaining: u64,
}

impl Iterator for Embeddings<'_> {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        if self.remaining == 0 {
            return None;
        }
        let rot = RotationSystem::from_successors(self.odo.g, self.odo.succ.clone())
            .expect("odometer produces valid rotations");
        self.remaining -= 1;
        if self.remaining > 0 {
            let more = self.odo.advance();
            debug_assert!(more);
        }
        Some(rot)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

/// Lists every rotation system of `g`, refusing when there are more than
/// `budget` of them.
pub fn enumerate_embeddings(g: &Multigraph, budget: u64) -> Result<Embeddings<'_>> {
    let remaining = check_budget(g, budget)?;
    Ok(Embeddings {
        odo: Odometer::new(g),
        remaining,
    })
}

/// Calls `visit` with the successor table of every rotation system.
pub fn for_each_rotation(
    g: &Multigraph,
    budget: u64,
    mut visit: impl FnMut(&[Dart]),
) -> Result<u64> {
    let count = check_budget(g, budget)?;
    let mut odo = Odometer::new(g);
    loop {
        visit(&odo.succ);
        if !odo.advance() {
            break;
        }
    }
    Ok(count)
}

/// Face-count histogram over all rotation systems of `g`.
pub fn brute_force_distribution(g: &Multigraph, budget: u64) -> Result<FaceDistribution> {
    let mut counts = vec![0u64; g.dart_count() + 1];
    let mut seen = vec![false; g.dart_count()];
    for_each_rotation(g, budget, |succ| {
        counts[count_faces(g, succ, &mut seen)] += 1;
    })?;
    FaceDistribution::from_counts(&counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::trace_faces;
    use crate::graph::families::*;
    use crate::rational::ratio;
    use std::collections::HashSet;

    #[test]
    fn counts_match_product_formula() {
        assert_eq!(
            enumerate_embeddings(&dipole(4).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .count(),
            36
        );
        assert_eq!(
            enumerate_embeddings(&complete(4).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .count(),
            16
        );
        assert_eq!(
            enumerate_embeddings(&bouquet(3).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .count(),
            120
        );
        assert_eq!(
            enumerate_embeddings(&path(4).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0), (0, 0)]).unwrap();
        let all: Vec<RotationSystem> = enumerate_embeddings(&g, DEFAULT_BUDGET).unwrap().collect();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), distinct.len());
        assert_eq!(BigUint::from(all.len()), embedding_count(&g));
    }

    #[test]
    fn k4_distribution() {
        let d = brute_force_distribution(&complete(4).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.weight(4), 2u32.into());
        assert_eq!(d.weight(2), 14u32.into());
        assert_eq!(d.expectation(), ratio(9, 4));
    }

    #[test]
    fn trees_have_one_face() {
        let d = brute_force_distribution(&star(5).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.weights().keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(d.total(), &BigUint::from(24u32));
    }

    #[test]
    fn budget_is_enforced() {
        let err = brute_force_distribution(&dipole(8).unwrap(), 1000).unwrap_err();
        match err {
            Error::BudgetExceeded { required, budget } => {
                assert_eq!(required, BigUint::from(5040u32 * 5040));
                assert_eq!(budget, 1000);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn fast_count_agrees_with_trace() {
        let g = complete_bipartite(2, 3).unwrap();
        let mut seen = vec![false; g.dart_count()];
        for rot in enumerate_embeddings(&g, DEFAULT_BUDGET).unwrap() {
            let traced = trace_faces(&g, &rot).unwrap().face_count();
            assert_eq!(count_faces(&g, rot.successors(), &mut seen), traced);
        }
    }
}
