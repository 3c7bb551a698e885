#![allow(dead_code)]

use proptest::prelude::*;
use trop_core::{Domain, Orientation, TropMatrix, TropScalar, TropVector};

pub fn finite() -> impl Strategy<Value = TropScalar> + Clone {
    (-8i64..=8, 1i64..=3).prop_map(|(n, d)| TropScalar::ratio(n, d))
}

pub fn scalar(domain: Domain) -> BoxedStrategy<TropScalar> {
    match domain {
        Domain::Finitary => finite().boxed(),
        Domain::Tropical => prop_oneof![4 => finite(), 1 => Just(TropScalar::NegInf)].boxed(),
        Domain::Completed => prop_oneof![
            7 => finite(),
            2 => Just(TropScalar::NegInf),
            1 => Just(TropScalar::PosInf),
        ]
        .boxed(),
    }
}

pub fn vector(
    dim: usize,
    domain: Domain,
    orientation: Orientation,
) -> impl Strategy<Value = TropVector> {
    prop::collection::vec(scalar(domain), dim).prop_map(move |v| TropVector::new(v, orientation))
}

pub fn row(dim: usize, domain: Domain) -> impl Strategy<Value = TropVector> {
    vector(dim, domain, Orientation::Row)
}

pub fn matrix(rows: usize, cols: usize, domain: Domain) -> impl Strategy<Value = TropMatrix> {
    prop::collection::vec(scalar(domain), rows * cols)
        .prop_map(move |v| TropMatrix::new(rows, cols, v).unwrap())
}

pub fn square(
    dims: std::ops::RangeInclusive<usize>,
    domain: Domain,
) -> impl Strategy<Value = TropMatrix> {
    dims.prop_flat_map(move |n| matrix(n, n, domain))
}

/// Invertible matrix: a permutation with finite scalings.
pub fn monomial(n: usize) -> impl Strategy<Value = TropMatrix> {
    (
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(finite(), n),
    )
        .prop_map(move |(perm, scales)| {
            let mut m = TropMatrix::zero(n, n);
            for (j, (&i, s)) in perm.iter().zip(scales).enumerate() {
                m.set(i, j, s);
            }
            m
        })
}

/// The greatest `lambda` with `lambda x <= y`, found by testing every value
/// the answer can take.
pub fn bracket_oracle(x: &TropVector, y: &TropVector) -> TropScalar {
    let mut candidates = vec![TropScalar::NegInf, TropScalar::PosInf];
    for (a, b) in x.iter().zip(y.iter()) {
        if let Some(d) = b.finite_sub(a) {
            candidates.push(d.into());
        }
    }
    candidates
        .into_iter()
        .filter(|l| x.iter().zip(y.iter()).all(|(a, b)| l.otimes(a) <= *b))
        .max()
        .unwrap()
}

/// A random `S`-combination of the given generators.
pub fn combination(gens: Vec<TropVector>, domain: Domain) -> impl Strategy<Value = TropVector> {
    let k = gens.len();
    prop::collection::vec(scalar(domain), k).prop_map(move |cs| {
        let mut acc = TropVector::zero(gens[0].dim(), gens[0].orientation());
        for (g, c) in gens.iter().zip(&cs) {
            acc = acc.oplus(&g.scale(c)).unwrap();
        }
        acc
    })
}

pub fn m(s: &str) -> TropMatrix {
    TropMatrix::parse_rows(s).unwrap()
}
