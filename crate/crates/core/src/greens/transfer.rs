//! Moving factorisation witnesses between semirings.

use crate::error::{Result, TropError};
use crate::linalg::TropMatrix;
use crate::scalar::{Domain, TropScalar};

fn require_product(b: &TropMatrix, p: &TropMatrix, a: &TropMatrix) -> Result<()> {
    if b.mul(p)? != *a {
        return Err(TropError::Precondition("B P does not equal A".into()));
    }
    Ok(())
}

fn verified(b: &TropMatrix, p: TropMatrix, a: &TropMatrix) -> Result<TropMatrix> {
    if b.mul(&p)? != *a {
        return Err(TropError::Internal(
            "transferred witness does not re-multiply".into(),
        ));
    }
    Ok(p)
}

/// Turns `P` over `T` with `B P = A` (for finite `A`, `B`) into a finite
/// witness by writing `delta` over every `-inf`, where `delta` lies below
/// `b + p - b'` for all entries `b, b'` of `B` and finite `p` of `P`.
pub fn finitize_witness_ft(b: &TropMatrix, a: &TropMatrix, p: &TropMatrix) -> Result<TropMatrix> {
    if b.domain() != Domain::Finitary || a.domain() != Domain::Finitary {
        return Err(TropError::Precondition("A and B must be finite".into()));
    }
    if p.domain() > Domain::Tropical {
        return Err(TropError::Precondition("P must not contain inf".into()));
    }
    require_product(b, p, a)?;
    let min_p = p.entries().iter().filter(|x| x.is_finite()).min();
    let Some(min_p) = min_p else {
        return Err(TropError::Precondition("P has no finite entry".into()));
    };
    let min_b = b.entries().iter().min().expect("nonempty");
    let max_b = b.entries().iter().max().expect("nonempty");
    let delta = min_b
        .otimes(min_p)
        .otimes(&-max_b)
        .otimes(&TropScalar::int(-1));
    let out = p.map(|x| {
        if x.is_neg_inf() {
            delta.clone()
        } else {
            x.clone()
        }
    });
    verified(b, out, a)
}

/// Turns `P` over `T̄` with `B P = A` (for `A`, `B` over `T`) into a witness
/// over `T` by writing `0` over every `inf`.
pub fn definitize_witness_t(b: &TropMatrix, a: &TropMatrix, p: &TropMatrix) -> Result<TropMatrix> {
    if b.domain() > Domain::Tropical || a.domain() > Domain::Tropical {
        return Err(TropError::Precondition(
            "A and B must not contain inf".into(),
        ));
    }
    require_product(b, p, a)?;
    let out = p.map(|x| {
        if x.is_pos_inf() {
            TropScalar::one()
        } else {
            x.clone()
        }
    });
    verified(b, out, a)
}
