use multistar::embed::{face_permutation_at, faces_at};
use multistar::enumerate::brute_force_distribution;
use multistar::graph::families::{bouquet, multistar as multistar_graph};
use multistar::multistar::{
    dipole_expected_faces, dipole_face_distribution, monopole_face_distribution,
    multistar_face_distribution,
};
use multistar::partition::conj_class_size;
use multistar::rational::harmonic;
use multistar::{BigRational, Multigraph, Partition, Permutation, RotationSystem};
use num_traits::Zero;
use proptest::prelude::*;

fn partition_up_to(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=12, 1..=12).prop_map(move |mut parts| {
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_weight
        });
        if parts.is_empty() {
            parts.push(1);
        }
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weights_are_integers_summing_to_the_class_size(lambda in partition_up_to(40)) {
        let reduced = lambda.without_ones();
        prop_assume!(!reduced.is_empty());
        let d = multistar_face_distribution(&lambda).unwrap();
        prop_assert_eq!(d.total(), &conj_class_size(&lambda));
        let n = lambda.weight();
        let l = lambda.len();
        for &j in d.weights().keys() {
            prop_assert_eq!((j + n + l + 1) % 2, 0, "j = {} for {}", j, lambda);
        }
    }

    #[test]
    fn leaves_do_not_change_the_law(lambda in partition_up_to(20), leaves in 1usize..5) {
        prop_assume!(!lambda.without_ones().is_empty());
        let mut parts = lambda.parts().to_vec();
        parts.extend(std::iter::repeat_n(1, leaves));
        let padded = Partition::new(parts).unwrap();
        let a = multistar_face_distribution(&lambda).unwrap();
        let b = multistar_face_distribution(&padded).unwrap();
        prop_assert!(a.same_law(&b));
    }
}

#[test]
fn dipole_closed_forms_agree_up_to_200() {
    for n in 2..=200 {
        let d = dipole_face_distribution(n).unwrap();
        assert_eq!(
            d.expectation(),
            dipole_expected_faces(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn monopoles_match_bouquets() {
    for n in 1..=4 {
        let brute = brute_force_distribution(&bouquet(n).unwrap(), u64::MAX).unwrap();
        assert!(
            monopole_face_distribution(n).unwrap().same_law(&brute),
            "n = {n}"
        );
    }
}

#[test]
fn monopole_expectation_approaches_harmonic() {
    // The expectation stays above H_2n and the excess shrinks monotonically.
    let excess: Vec<BigRational> = (2..=14)
        .map(|n| monopole_face_distribution(n).unwrap().expectation() - harmonic(2 * n))
        .collect();
    assert!(excess.iter().all(|g| *g > BigRational::zero()));
    assert!(excess.windows(2).all(|w| w[1] < w[0]));
    let at = |n: usize| &excess[n - 2];
    assert!(
        *at(12) < BigRational::new(6.into(), 100.into()),
        "excess at 12 is {}",
        at(12)
    );
    assert!(
        *at(14) < BigRational::new(5.into(), 100.into()),
        "excess at 14 is {}",
        at(14)
    );
}

#[test]
fn brute_force_totals_are_products_of_factorials() {
    let g = multistar_graph(&"3,2,2".parse().unwrap()).unwrap();
    let d = brute_force_distribution(&g, u64::MAX).unwrap();
    // Center of degree 7, outer vertices of degree 3, 2, 2.
    assert_eq!(d.total(), &multistar::BigUint::from(720u32 * 2));
}

/// A vertex `v` joined by seven edges to four isolated vertices, whose
/// rotations are chosen so that the face permutation at `v` is
/// (1 4)(7)(2 3 5)(6) in edge numbering.
#[test]
fn face_permutation_of_a_seven_edge_attachment() {
    let g = Multigraph::from_edges(5, &[(0, 1), (0, 3), (0, 3), (0, 1), (0, 3), (0, 4), (0, 2)])
        .unwrap();
    // Edge i has darts 2i at v and 2i+1 at the far end.
    let rot = RotationSystem::from_cyclic_orders(
        &g,
        &[
            vec![0, 2, 4, 6, 8, 10, 12],
            vec![1, 7],
            vec![13],
            vec![3, 5, 9],
            vec![11],
        ],
    )
    .unwrap();
    let phi = face_permutation_at(&g, &rot, 0).unwrap();
    let want_phi =
        Permutation::from_cycles(7, &[vec![0, 3], vec![6], vec![1, 2, 4], vec![5]]).unwrap();
    assert_eq!(phi, want_phi);

    let pi = rot.local_rotation(&g, 0);
    assert_eq!(pi.cycles(), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
    let product = pi.compose(&phi).unwrap();
    assert_eq!(product.cycles(), vec![vec![0, 2], vec![1, 4, 5, 6, 3]]);

    // Traced faces at v follow d -> pi(phi(d)), the conjugate of the product.
    let mut faces = faces_at(&g, &rot, 0).unwrap();
    for f in &mut faces {
        let i = (0..f.len()).min_by_key(|&i| f[i]).unwrap();
        f.rotate_left(i);
    }
    faces.sort();
    assert_eq!(faces, phi.compose(&pi).unwrap().cycles());
    assert_eq!(faces.len(), 2);
}
