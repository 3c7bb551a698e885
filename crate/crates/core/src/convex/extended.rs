//! Elements `inf a ⊕ b` of the completed span of a tropical convex set.
//!
//! For `X ⊆ T^n`, every element of the `T̄`-span of `X` that is not already
//! in `X` has the form `inf a ⊕ b` with `a, b ∈ X` and `a` nonzero. The value
//! only depends on the support of `a` and on `b` off that support, which is
//! what [`ExtendedPair`] stores canonically.

use crate::convex::ConvexSpan;
use crate::duality::IsoDescriptor;
use crate::error::{Result, TropError};
use crate::linalg::TropVector;
use crate::scalar::TropScalar;

/// `inf a ⊕ b` for `a, b` over `T`.
///
/// Equality compares the canonical form (support of `a`, `b` with `-inf` on
/// that support); the representatives `a` and `b` are kept so that maps
/// defined on `X` can be applied to them.
#[derive(Clone, Debug)]
pub struct ExtendedPair {
    support: Vec<bool>,
    base: TropVector,
    a: TropVector,
    b: TropVector,
}

impl ExtendedPair {
    pub fn new(a: TropVector, b: TropVector) -> Result<Self> {
        if a.dim() != b.dim() || a.orientation() != b.orientation() {
            return Err(TropError::shape(format!(
                "extended pair needs matching vectors, got dimensions {} and {}",
                a.dim(),
                b.dim()
            )));
        }
        if a.has_pos_inf() || b.has_pos_inf() {
            return Err(TropError::Domain(
                "extended pairs are formed from vectors over T (no inf entries)".into(),
            ));
        }
        let support = a.support();
        let base = TropVector::new(
            b.iter()
                .zip(&support)
                .map(|(x, &on)| if on { TropScalar::NegInf } else { x.clone() })
                .collect(),
            b.orientation(),
        );
        Ok(ExtendedPair {
            support,
            base,
            a,
            b,
        })
    }

    pub fn support(&self) -> &[bool] {
        &self.support
    }

    /// `b` with `-inf` written over the support of `a`.
    pub fn canonical_b(&self) -> &TropVector {
        &self.base
    }

    pub fn a(&self) -> &TropVector {
        &self.a
    }

    pub fn b(&self) -> &TropVector {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// The vector `inf a ⊕ b` itself.
    pub fn value(&self) -> TropVector {
        self.a
            .scale(&TropScalar::PosInf)
            .oplus(&self.b)
            .expect("shapes match")
    }
}

impl PartialEq for ExtendedPair {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && self.base == other.base
    }
}

impl Eq for ExtendedPair {}

pub fn extended_equal(p: &ExtendedPair, q: &ExtendedPair) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(TropError::shape(format!(
            "extended pairs of dimensions {} and {}",
            p.dim(),
            q.dim()
        )));
    }
    Ok(p == q)
}

/// `ĝ(inf a ⊕ b) = inf g(a) ⊕ g(b)`, extending an isomorphism of `T`-spans
/// to their completions.
pub fn extend_iso_eval(g: &IsoDescriptor, p: &ExtendedPair) -> Result<ExtendedPair> {
    let ga = g.apply(&p.a)?;
    let gb = g.apply(&p.b)?;
    ExtendedPair::new(ga, gb)
}

impl ConvexSpan {
    /// Splits the `T̄`-combination `⊕ c_i r_i` into `inf a ⊕ b`, where `a`
    /// collects the generators with coefficient `inf` and `b` the rest.
    pub fn split_combination(&self, coeffs: &[TropScalar]) -> Result<ExtendedPair> {
        if coeffs.len() != self.len() {
            return Err(TropError::shape(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.len()
            )));
        }
        let zero = TropVector::zero(self.dim(), self.orientation());
        let mut a = zero.clone();
        let mut b = zero;
        for (r, c) in self.generators().iter().zip(coeffs) {
            if c.is_pos_inf() {
                a = a.oplus(r)?;
            } else {
                b = b.oplus(&r.scale(c))?;
            }
        }
        ExtendedPair::new(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::TropMatrix;
    use crate::scalar::Domain;
    use crate::text::parse_entries;

    fn col(s: &str) -> TropVector {
        TropVector::column(parse_entries(s).unwrap())
    }

    #[test]
    fn canonical_forms() {
        let p = ExtendedPair::new(col("0 -inf"), col("0 0")).unwrap();
        assert_eq!(p.support(), &[true, false]);
        assert_eq!(p.canonical_b(), &col("-inf 0"));
        assert_eq!(p.value(), col("inf 0"));

        let zero = col("-inf -inf");
        let q = ExtendedPair::new(zero, col("3 1")).unwrap();
        assert_eq!(q.canonical_b(), &col("3 1"));
        assert_eq!(q.value(), col("3 1"));

        let r = ExtendedPair::new(col("1 -inf"), col("5 0")).unwrap();
        assert_eq!(r.canonical_b(), &col("-inf 0"));
        assert!(extended_equal(&p, &r).unwrap());

        assert!(ExtendedPair::new(col("inf 0"), col("0 0")).is_err());
    }

    #[test]
    fn equality_examples() {
        let p = ExtendedPair::new(col("0 -inf"), col("0 0")).unwrap();
        let q = ExtendedPair::new(col("0 0"), col("0 0")).unwrap();
        assert!(!extended_equal(&p, &q).unwrap());
        assert!(extended_equal(&p, &p).unwrap());
        let short = ExtendedPair::new(col("0"), col("0")).unwrap();
        assert!(extended_equal(&p, &short).is_err());
    }

    #[test]
    fn extension_of_identity_and_scaling() {
        let a = TropMatrix::parse_rows("0 -inf; 1 0; -inf 2").unwrap();
        let basis = a.column_vectors();
        let id = IsoDescriptor::identity(basis.clone());
        let p = ExtendedPair::new(col("0 1 -inf"), col("-inf 0 2")).unwrap();
        assert_eq!(extend_iso_eval(&id, &p).unwrap(), p);

        // Every generator scaled by 2.
        let scaled = IsoDescriptor::new(
            basis.clone(),
            basis,
            vec![0, 1],
            vec![TropScalar::int(2), TropScalar::int(2)],
        )
        .unwrap();
        let out = extend_iso_eval(&scaled, &p).unwrap();
        assert_eq!(out.support(), p.support());
        assert_eq!(
            out.canonical_b(),
            &p.canonical_b().scale(&TropScalar::int(2))
        );

        let plain = ExtendedPair::new(col("-inf -inf -inf"), col("0 1 -inf")).unwrap();
        let out = extend_iso_eval(&scaled, &plain).unwrap();
        assert_eq!(out.value(), col("2 3 -inf"));
    }

    #[test]
    fn split_combination_recovers_value() {
        let s = ConvexSpan::new(vec![col("0 -inf"), col("0 1")], Domain::Tropical).unwrap();
        let coeffs = vec![TropScalar::PosInf, TropScalar::int(-1)];
        let p = s.split_combination(&coeffs).unwrap();
        assert_eq!(p.value(), col("inf 0"));
        assert_eq!(p.value(), s.combine(&coeffs).unwrap());
    }
}
