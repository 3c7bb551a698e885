mod common;

use common::{combination, finite, matrix, row, scalar};
use proptest::prelude::*;
use trop_core::{ConvexSpan, Domain, TropScalar, TropVector};

fn gens_and_target(domain: Domain) -> impl Strategy<Value = (Vec<TropVector>, TropVector)> {
    (1..=5usize, 1..=5usize)
        .prop_flat_map(move |(n, k)| (prop::collection::vec(row(n, domain), k), row(n, domain)))
}

fn span_member(domain: Domain) -> impl Strategy<Value = (Vec<TropVector>, TropVector)> {
    (1..=5usize, 1..=5usize)
        .prop_flat_map(move |(n, k)| prop::collection::vec(row(n, domain), k))
        .prop_flat_map(move |g| (Just(g.clone()), combination(g, domain)))
}

proptest! {
    #[test]
    fn principal_combination_is_greatest_subsolution(
        (gens, a) in gens_and_target(Domain::Completed),
        mu in prop::collection::vec(scalar(Domain::Completed), 5),
    ) {
        let s = ConvexSpan::new(gens, Domain::Completed).unwrap();
        let p = s.principal_coeffs(&a).unwrap();
        prop_assert!(s.combine(&p).unwrap().leq(&a).unwrap());
        let mu = &mu[..s.len()];
        if s.combine(mu).unwrap().leq(&a).unwrap() {
            for (m, q) in mu.iter().zip(&p) {
                prop_assert!(m <= q);
            }
        }
    }

    #[test]
    fn combinations_are_members((gens, a) in span_member(Domain::Tropical)) {
        let s = ConvexSpan::new(gens, Domain::Tropical).unwrap();
        prop_assert!(s.contains(&a).unwrap());
    }

    #[test]
    fn membership_ignores_generator_order_and_redundancy(
        (gens, a) in gens_and_target(Domain::Tropical),
        extra in prop::collection::vec(finite(), 5),
    ) {
        let s = ConvexSpan::new(gens.clone(), Domain::Tropical).unwrap();
        let mut shuffled: Vec<_> = gens.iter().rev().cloned().collect();
        shuffled.push(s.combine(&extra[..gens.len()]).unwrap());
        let t = ConvexSpan::new(shuffled, Domain::Tropical).unwrap();
        prop_assert_eq!(s.contains(&a).unwrap(), t.contains(&a).unwrap());
        prop_assert!(s.span_equal(&t).unwrap());
    }

    #[test]
    fn weak_basis_is_minimal_and_idempotent((gens, _) in gens_and_target(Domain::Tropical)) {
        let s = ConvexSpan::new(gens, Domain::Tropical).unwrap();
        let w = s.weak_basis();
        prop_assert!(s.span_equal(&w).unwrap());
        let again = w.weak_basis();
        prop_assert_eq!(again.generators(), w.generators());
        for i in 0..w.len() {
            let others: Vec<_> = w.generators().iter().enumerate()
                .filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
            if !others.is_empty() {
                let rest = ConvexSpan::new(others, Domain::Tropical).unwrap();
                prop_assert!(!rest.contains(&w.generators()[i]).unwrap());
            }
        }
    }

    #[test]
    fn weak_basis_size_is_invariant_under_column_scaling(
        a in (1..=5usize).prop_flat_map(|n| matrix(n, n, Domain::Tropical)),
        scales in prop::collection::vec(finite(), 5),
        seed in any::<u64>(),
    ) {
        let n = a.cols();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((seed as usize) % n);
        let mut b = a.permute_columns(&perm);
        for (j, l) in scales.iter().enumerate().take(n) {
            for i in 0..n {
                let x = b.get(i, j).otimes(l);
                b.set(i, j, x);
            }
        }
        let size = |m| ConvexSpan::column_space(m, Domain::Tropical).unwrap().weak_basis().len();
        prop_assert_eq!(size(&a), size(&b));
    }

    #[test]
    fn completed_combinations_split_into_extended_pairs(
        (gens, coeffs) in (1..=4usize, 1..=4usize).prop_flat_map(|(n, k)| {
            (prop::collection::vec(row(n, Domain::Tropical), k),
             prop::collection::vec(scalar(Domain::Completed), k))
        })
    ) {
        let s = ConvexSpan::new(gens, Domain::Tropical).unwrap();
        let x = s.combine(&coeffs).unwrap();
        let p = s.split_combination(&coeffs).unwrap();
        prop_assert_eq!(p.value(), x.clone());
        let outside = !s.contains(&x).unwrap();
        prop_assert_eq!(outside, x.has_pos_inf());
        prop_assert_eq!(x.has_pos_inf(), !p.a().is_zero());
        if outside {
            prop_assert!(!p.a().is_zero());
            prop_assert!(s.contains(p.a()).unwrap());
        }
    }
}

#[test]
fn zero_coefficient_corner() {
    let s = ConvexSpan::new(
        vec![TropVector::row(vec![TropScalar::NegInf, 0.into()])],
        Domain::Tropical,
    )
    .unwrap();
    let x = s.combine(&[TropScalar::PosInf]).unwrap();
    assert!(x.has_pos_inf());
    assert!(!s.contains(&x).unwrap());
}
