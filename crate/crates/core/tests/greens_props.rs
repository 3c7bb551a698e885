mod common;

use common::{finite, m, matrix, monomial, square};
use proptest::prelude::*;
use trop_core::convex::principal_solution;
use trop_core::greens::{
    decide, definitize_witness_t, finitize_witness_ft, leq_l, leq_r, rel, rel_d, DOptions, Witness,
};
use trop_core::{Domain, GreenVerdict, Relation, TropMatrix, TropScalar};

fn solvable(b: &TropMatrix, a: &TropMatrix) -> bool {
    a.column_vectors().iter().all(|c| {
        let x = principal_solution(b, c).unwrap();
        b.mul_column(&x).unwrap() == *c
    })
}

fn pair(domain: Domain) -> impl Strategy<Value = (TropMatrix, TropMatrix)> {
    (1..=4usize).prop_flat_map(move |n| (matrix(n, n, domain), matrix(n, n, domain)))
}

/// `(A, B)` with `A = B X`, so that positive verdicts are common.
fn factored(domain: Domain) -> impl Strategy<Value = (TropMatrix, TropMatrix)> {
    (1..=4usize)
        .prop_flat_map(move |n| (matrix(n, n, domain), matrix(n, n, domain)))
        .prop_map(|(b, x)| (b.mul(&x).unwrap(), b))
}

fn factors(v: &GreenVerdict) -> Vec<TropMatrix> {
    match &v.witness {
        Some(Witness::Factors(fs)) => fs.iter().map(|f| f.matrix.clone()).collect(),
        _ => Vec::new(),
    }
}

proptest! {
    #[test]
    fn membership_agrees_with_solvability(
        (a, b) in prop_oneof![pair(Domain::Completed), factored(Domain::Completed)]
    ) {
        let v = leq_r(&a, &b, Domain::Completed).unwrap();
        prop_assert_eq!(v.holds, solvable(&b, &a));
        prop_assert!(v.verify(&a, &b).unwrap());
        let l = leq_l(&a, &b, Domain::Completed).unwrap();
        prop_assert_eq!(l.holds, leq_r(&a.transpose(), &b.transpose(), Domain::Completed).unwrap().holds);
        prop_assert!(l.verify(&a, &b).unwrap());
    }

    #[test]
    fn verdicts_inherit_across_domains(
        (a, b) in prop_oneof![pair(Domain::Finitary), factored(Domain::Finitary)]
    ) {
        let verdicts: Vec<_> = [Domain::Finitary, Domain::Tropical, Domain::Completed]
            .into_iter()
            .map(|d| leq_r(&a, &b, d).unwrap())
            .collect();
        for v in &verdicts {
            prop_assert_eq!(v.holds, verdicts[0].holds);
            prop_assert!(v.verify(&a, &b).unwrap());
            for f in factors(v) {
                prop_assert!(f.domain() <= v.domain);
            }
        }
    }

    #[test]
    fn finitize_transfers_witnesses(
        (b, p) in (1..=4usize).prop_flat_map(|n| (matrix(n, n, Domain::Finitary), matrix(n, n, Domain::Tropical)))
    ) {
        // Every column of P needs a finite entry for B P to be finite.
        let mut p = p;
        for j in 0..p.cols() {
            if p.col(j).is_zero() {
                p.set(0, j, TropScalar::int(0));
            }
        }
        let a = b.mul(&p).unwrap();
        let q = finitize_witness_ft(&b, &a, &p).unwrap();
        prop_assert_eq!(q.domain(), Domain::Finitary);
        prop_assert_eq!(b.mul(&q).unwrap(), a);
    }

    #[test]
    fn definitize_transfers_witnesses(
        (b, p, dead) in (1..=4usize).prop_flat_map(|n| {
            (matrix(n, n, Domain::Tropical), matrix(n, n, Domain::Completed), 0..n)
        })
    ) {
        // inf may only sit in rows of P that meet an all -inf column of B.
        let mut b = b;
        for i in 0..b.rows() {
            b.set(i, dead, TropScalar::NegInf);
        }
        let p = TropMatrix::from_rows(
            (0..p.rows())
                .map(|k| {
                    p.row(k)
                        .iter()
                        .map(|x| if x.is_pos_inf() && k != dead { TropScalar::int(0) } else { x.clone() })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let a = b.mul(&p).unwrap();
        let q = definitize_witness_t(&b, &a, &p).unwrap();
        prop_assert!(q.domain() <= Domain::Tropical);
        prop_assert_eq!(b.mul(&q).unwrap(), a);
    }

    #[test]
    fn h_related_to_finite_means_no_stray_neg_inf(
        a in square(1..=4, Domain::Finitary),
        l in finite(),
    ) {
        let b = a.map(|x| x.otimes(&l));
        let v = rel(&a, &b, Relation::H, Domain::Tropical).unwrap();
        if v.holds {
            for j in 0..b.cols() {
                let c = b.col(j);
                prop_assert!(c.is_zero() || c.domain() == Domain::Finitary);
            }
        }
    }

    #[test]
    fn d_holds_for_monomial_equivalents(
        (a, p, q) in (2..=5usize).prop_flat_map(|n| (matrix(n, n, Domain::Tropical), monomial(n), monomial(n)))
    ) {
        let b = a.mul(&q).unwrap();
        let v = rel_d(&a, &b, Domain::Tropical, &DOptions::default()).unwrap();
        prop_assert!(v.holds, "{}{}", a, b);
        prop_assert!(v.verify(&a, &b).unwrap());
        let c = p.mul(&b).unwrap();
        let w = rel_d(&b, &c, Domain::Tropical, &DOptions::default()).unwrap();
        prop_assert!(w.holds && w.verify(&b, &c).unwrap());
        // transitivity on the constructed triple
        let t = rel_d(&a, &c, Domain::Tropical, &DOptions::default()).unwrap();
        prop_assert!(t.holds && t.verify(&a, &c).unwrap());
        let s = rel_d(&b, &a, Domain::Tropical, &DOptions::default()).unwrap();
        prop_assert!(s.holds);
    }

    #[test]
    fn verdicts_round_trip_as_text(
        (a, b) in (2..=3usize).prop_flat_map(|n| (matrix(n, n, Domain::Tropical), matrix(n, n, Domain::Tropical))),
        which in prop::sample::select(Relation::ALL.to_vec()),
    ) {
        let v = decide(which, &a, &b, Domain::Tropical, &DOptions::default()).unwrap();
        prop_assert_eq!(v.to_string().parse::<GreenVerdict>().unwrap(), v);
    }
}

#[test]
fn spec_examples() {
    let id = TropMatrix::identity(2);
    let z = m("0 0; 0 0");
    let v = leq_r(&z, &m("0 1; 0 1"), Domain::Tropical).unwrap();
    assert!(v.holds);
    assert!(!leq_r(&id, &z, Domain::Tropical).unwrap().holds);
    assert!(!leq_l(&id, &z, Domain::Tropical).unwrap().holds);
    let d = rel_d(&id, &z, Domain::Tropical, &DOptions::default()).unwrap();
    assert!(!d.holds);
}
