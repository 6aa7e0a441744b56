mod common;

use common::{q, random_point, schur_eval};
use grassmann_roberts::chow::{build_h_matrices, giambelli_expand, lr_coefficient, pieri_terms};
use grassmann_roberts::partition::{enumerate_box, full_basis, partition_weight_pairs};
use grassmann_roberts::{BigInt, BigRational, ChowElement, ChowRing, GrassmannShape, Partition};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::sample::Index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shapes(max_n: usize) -> impl Iterator<Item = GrassmannShape> {
    (2..=max_n).flat_map(|n| (1..n).map(move |d| GrassmannShape::new(d, n).unwrap()))
}

fn arb_shape(max_n: usize) -> impl Strategy<Value = GrassmannShape> {
    (2..=max_n).prop_flat_map(|n| (1..n).prop_map(move |d| GrassmannShape::new(d, n).unwrap()))
}

fn pick(shape: GrassmannShape, idx: &Index) -> Partition {
    let all: Vec<Partition> = full_basis(shape).into_iter().flatten().collect();
    idx.get(&all).clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pieri_is_multiplicity_free(shape in arb_shape(10), idx in any::<Index>(), m in 1usize..10) {
        let lambda = pick(shape, &idx);
        let ring = ChowRing::new(shape);
        let out = ring.pieri(&ring.schubert(lambda.clone()).unwrap(), m).unwrap();
        prop_assert!(out.terms().values().all(|c| c.is_one()));
        prop_assert!(out.terms().keys().all(|mu| mu.weight() == lambda.weight() + m));
        if m > shape.cols() {
            prop_assert!(out.is_zero());
        }
    }

    #[test]
    fn products_commute_and_associate(shape in arb_shape(8), a in any::<Index>(), b in any::<Index>(), c in any::<Index>()) {
        let ring = ChowRing::new(shape);
        let [x, y, z] = [a, b, c].map(|i| ring.schubert(pick(shape, &i)).unwrap());
        let xy = ring.multiply(&x, &y).unwrap();
        prop_assert_eq!(&xy, &ring.multiply(&y, &x).unwrap());
        let left = ring.multiply(&xy, &z).unwrap();
        let right = ring.multiply(&x, &ring.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let degree = x.homogeneous_degree().unwrap() + y.homogeneous_degree().unwrap();
        prop_assert!(xy.terms().keys().all(|k| k.weight() == degree));
    }

    #[test]
    fn reduction_is_idempotent(shape in arb_shape(8), degree in 1usize..16, coeffs in prop::collection::vec((-20i64..20, 1i64..6), 1..20)) {
        prop_assume!(degree <= shape.dim());
        let ring = ChowRing::new(shape);
        let basis = ring.basis(degree);
        let a = ChowElement::from_terms(
            shape,
            basis.iter().zip(coeffs.iter().cycle()).map(|(l, &(n, d))| (l.clone(), q(n, d))),
        ).unwrap();
        let r = ring.reduce_mod_h(&a).unwrap();
        prop_assert_eq!(r.is_zero, r.representative.is_zero());
        if !r.is_zero {
            let again = ring.reduce_mod_h(&r.representative).unwrap();
            prop_assert_eq!(again.representative, r.representative.clone());
        }
        // a - representative lies in h·CH^{degree-1}
        let diff = a.sub(&r.representative).unwrap();
        prop_assert!(ring.reduce_mod_h(&diff).unwrap().is_zero);
    }
}

#[test]
fn giambelli_agrees_with_pieri() {
    for shape in shapes(8) {
        let ring = ChowRing::new(shape);
        for lambda in full_basis(shape).into_iter().flatten() {
            let x = ring.schubert(lambda.clone()).unwrap();
            for m in 1..=shape.cols() {
                let via_product = ring.multiply(&x, &ring.special(m)).unwrap();
                assert_eq!(via_product, ring.pieri(&x, m).unwrap(), "{shape} {lambda} σ{m}");
            }
        }
    }
}

#[test]
fn giambelli_expansion_reproduces_the_class() {
    // evaluating the determinant in the ring gives back {λ}
    for shape in shapes(8) {
        let ring = ChowRing::new(shape);
        for lambda in full_basis(shape).into_iter().flatten() {
            let mut total = ring.zero();
            for (c, mono) in giambelli_expand(&lambda, shape) {
                let mut term = ring.unit();
                for &k in &mono.0 {
                    term = ring.pieri(&term, k).unwrap();
                }
                total = total.add(&term.scale(&BigRational::from_integer(c.into()))).unwrap();
            }
            assert_eq!(total, ring.schubert(lambda.clone()).unwrap(), "{shape} {lambda}");
        }
    }
}

#[test]
fn poincare_duality() {
    for shape in shapes(8) {
        let ring = ChowRing::new(shape);
        let top = shape.full_box();
        for (lambda, mu) in partition_weight_pairs(shape, shape.dim()) {
            let prod = ring
                .multiply(
                    &ring.schubert(lambda.clone()).unwrap(),
                    &ring.schubert(mu.clone()).unwrap(),
                )
                .unwrap();
            let expected = if mu == lambda.box_complement(shape) {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            assert_eq!(prod.coefficient(&top), expected, "{shape}: {lambda}·{mu}");
        }
    }
}

#[test]
fn lr_coefficients_are_nonnegative_and_match_schur_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let small: Vec<Partition> = (0..=4)
        .flat_map(|k| enumerate_box(GrassmannShape::new(3, 6).unwrap(), k))
        .collect();
    for lambda in &small {
        for mu in &small {
            let rows = lambda.len() + mu.len();
            let cols = lambda.part(0) + mu.part(0);
            if rows == 0 || cols == 0 {
                continue;
            }
            let shape = GrassmannShape::new(rows, rows + cols).unwrap();
            let ring = ChowRing::new(shape);
            let prod = ring
                .multiply(
                    &ring.schubert(lambda.clone()).unwrap(),
                    &ring.schubert(mu.clone()).unwrap(),
                )
                .unwrap();
            for (nu, c) in prod.terms() {
                assert!(c.is_integer() && !c.is_negative(), "{lambda}·{mu} -> {c}·{nu}");
                assert_eq!(lr_coefficient(lambda, mu, nu), c.to_integer());
            }
            for _ in 0..3 {
                let xs = random_point(&mut rng, rows);
                let lhs = schur_eval(lambda, &xs) * schur_eval(mu, &xs);
                let rhs: BigRational = prod.terms().iter().map(|(nu, c)| c * schur_eval(nu, &xs)).sum();
                assert_eq!(lhs, rhs, "{lambda}·{mu}");
            }
        }
    }
    assert_eq!(
        lr_coefficient(&common::p(&[2, 1]), &common::p(&[2, 1]), &common::p(&[3, 2, 1])),
        BigInt::from(2)
    );
}

#[test]
fn h_matrix_shapes_and_cokernels() {
    for shape in shapes(9) {
        let h = build_h_matrices(shape);
        for i in 1..=shape.dim() {
            let m = h.matrix(i).unwrap();
            assert_eq!(m.len(), enumerate_box(shape, i).len());
            assert!(m.iter().all(|row| row.len() == enumerate_box(shape, i - 1).len()));
            assert!(m.iter().flatten().all(|&x| x <= 1));
            assert_eq!(h.cokernel_dim(i), m.len() - h.rank(i));
        }
        assert_eq!(h.cokernel_dim(1), 0, "{shape}");
    }
}

#[test]
fn pieri_terms_outside_box_vanish() {
    let shape = GrassmannShape::new(2, 4).unwrap();
    assert_eq!(pieri_terms(&common::p(&[2, 1]), 1, shape), vec![common::p(&[2, 2])]);
    assert!(pieri_terms(&common::p(&[2, 2]), 1, shape).is_empty());
}
