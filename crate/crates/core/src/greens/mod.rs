//! Green's relations on square tropical matrices.
//!
//! `A <=_R B` iff `C(A) ⊆ C(B)` and `A <=_L B` iff `R(A) ⊆ R(B)`; `R`, `L`
//! and `H` follow by symmetry. `D` holds iff the column spaces are isomorphic
//! semimodules, decided in [`rel_d`]. Every positive verdict carries a witness
//! that has been re-verified before it is returned.

mod d;
mod text;
mod transfer;

use std::fmt;
use std::str::FromStr;

pub use d::{rel_d, DOptions};
pub use transfer::{definitize_witness_t, finitize_witness_ft};

use crate::convex::{principal_solution, ConvexSpan};
use crate::duality::IsoDescriptor;
use crate::error::{Result, TropError};
use crate::linalg::TropMatrix;
use crate::scalar::Domain;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    LeqR,
    LeqL,
    R,
    L,
    H,
    D,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::LeqR,
        Relation::LeqL,
        Relation::R,
        Relation::L,
        Relation::H,
        Relation::D,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Relation::LeqR => "leq-r",
            Relation::LeqL => "leq-l",
            Relation::R => "r",
            Relation::L => "l",
            Relation::H => "h",
            Relation::D => "d",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Relation::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| format!("unknown relation `{s}` (expected leq-r, leq-l, r, l, h or d)"))
    }
}

/// Which pair a factor relates: `(A, B)` or `(B, A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn tag(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

/// `A = B X` (for `LeqR`) or `A = X B` (for `LeqL`), with `(A, B)` swapped
/// when the direction is backward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub order: Relation,
    pub direction: Direction,
    pub matrix: TropMatrix,
}

impl Factor {
    /// Re-multiplies and compares.
    pub fn verifies(&self, a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
        let (lhs, rhs) = match self.direction {
            Direction::Forward => (a, b),
            Direction::Backward => (b, a),
        };
        let product = match self.order {
            Relation::LeqR => rhs.mul(&self.matrix)?,
            Relation::LeqL => self.matrix.mul(rhs)?,
            other => return Err(TropError::Internal(format!("`{other}` is not an order"))),
        };
        Ok(product == *lhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Factors(Vec<Factor>),
    /// An isomorphism `C(A) -> C(B)` and `D` with `R(D) = R(A)`, `C(D) = C(B)`.
    Bridge {
        iso: IsoDescriptor,
        bridge: TropMatrix,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenVerdict {
    pub relation: Relation,
    pub holds: bool,
    pub domain: Domain,
    pub witness: Option<Witness>,
    /// Reasons for a negative verdict, one per line.
    pub refutation: Vec<String>,
}

impl GreenVerdict {
    fn yes(relation: Relation, domain: Domain, witness: Witness) -> Self {
        GreenVerdict {
            relation,
            holds: true,
            domain,
            witness: Some(witness),
            refutation: Vec::new(),
        }
    }

    fn no(relation: Relation, domain: Domain, refutation: Vec<String>) -> Self {
        GreenVerdict {
            relation,
            holds: false,
            domain,
            witness: None,
            refutation,
        }
    }

    /// Checks the witness of a positive verdict against `A` and `B`.
    pub fn verify(&self, a: &TropMatrix, b: &TropMatrix) -> Result<bool> {
        match &self.witness {
            None => Ok(!self.holds),
            Some(Witness::Factors(fs)) => {
                for f in fs {
                    if f.matrix.domain() > self.domain || !f.verifies(a, b)? {
                        return Ok(false);
                    }
                }
                Ok(self.holds)
            }
            Some(Witness::Bridge { iso, bridge }) => {
                let s = Domain::Completed;
                let rows =
                    ConvexSpan::row_space(bridge, s)?.span_equal(&ConvexSpan::row_space(a, s)?)?;
                let cols = ConvexSpan::column_space(bridge, s)?
                    .span_equal(&ConvexSpan::column_space(b, s)?)?;
                Ok(self.holds && rows && cols && iso.is_valid()?)
            }
        }
    }
}

fn check_pair(a: &TropMatrix, b: &TropMatrix, domain: Domain) -> Result<()> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(TropError::shape(format!(
            "Green's relations need square matrices of equal size, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    for (name, m) in [("A", a), ("B", b)] {
        if m.domain() > domain {
            return Err(TropError::OutsideDomain {
                expected: domain,
                detail: format!("matrix {name} has entries outside {domain}"),
            });
        }
    }
    Ok(())
}

/// Moves a principal-solution witness into `S^{n x n}`.
fn transfer(b: &TropMatrix, a: &TropMatrix, x: TropMatrix, domain: Domain) -> Result<TropMatrix> {
    match domain {
        Domain::Completed => Ok(x),
        Domain::Tropical => definitize_witness_t(b, a, &x),
        Domain::Finitary => finitize_witness_ft(b, a, &definitize_witness_t(b, a, &x)?),
    }
}

/// Core of `<=_R`: either `X` with `B X = A` over `S`, or the failing columns.
fn right_factor(
    a: &TropMatrix,
    b: &TropMatrix,
    domain: Domain,
) -> Result<std::result::Result<TropMatrix, Vec<usize>>> {
    let span = ConvexSpan::column_space(b, domain)?;
    let mut missing = Vec::new();
    for (j, c) in a.column_vectors().iter().enumerate() {
        if !span.contains(c)? {
            missing.push(j);
        }
    }
    if !missing.is_empty() {
        return Ok(Err(missing));
    }
    let cols = a
        .column_vectors()
        .iter()
        .map(|c| principal_solution(b, c))
        .collect::<Result<Vec<_>>>()?;
    let x = TropMatrix::from_column_vectors(&cols)?;
    let x = transfer(b, a, x, domain)?;
    if b.mul(&x)? != *a {
        return Err(TropError::Internal(
            "right factor does not re-multiply".into(),
        ));
    }
    Ok(Ok(x))
}

fn order(
    order: Relation,
    direction: Direction,
    a: &TropMatrix,
    b: &TropMatrix,
    domain: Domain,
) -> Result<std::result::Result<Factor, Vec<String>>> {
    let (lhs, rhs, names) = match direction {
        Direction::Forward => (a, b, ("A", "B")),
        Direction::Backward => (b, a, ("B", "A")),
    };
    let outcome = match order {
        Relation::LeqR => right_factor(lhs, rhs, domain)?,
        Relation::LeqL => {
            right_factor(&lhs.transpose(), &rhs.transpose(), domain)?.map(|x| x.transpose())
        }
        other => return Err(TropError::Internal(format!("`{other}` is not an order"))),
    };
    Ok(match outcome {
        Ok(matrix) => Ok(Factor {
            order,
            direction,
            matrix,
        }),
        Err(missing) => Err(missing
            .into_iter()
            .map(|j| match order {
                Relation::LeqR => format!(
                    "column {} of {} is not in C_{}({})",
                    j + 1,
                    names.0,
                    domain.tag(),
                    names.1
                ),
                _ => format!(
                    "row {} of {} is not in R_{}({})",
                    j + 1,
                    names.0,
                    domain.tag(),
                    names.1
                ),
            })
            .collect()),
    })
}

fn combine(
    relation: Relation,
    a: &TropMatrix,
    b: &TropMatrix,
    domain: Domain,
    parts: &[(Relation, Direction)],
) -> Result<GreenVerdict> {
    check_pair(a, b, domain)?;
    let mut factors = Vec::new();
    let mut reasons = Vec::new();
    for &(ord, dir) in parts {
        match order(ord, dir, a, b, domain)? {
            Ok(f) => factors.push(f),
            Err(r) => reasons.extend(r),
        }
    }
    Ok(if reasons.is_empty() {
        GreenVerdict::yes(relation, domain, Witness::Factors(factors))
    } else {
        GreenVerdict::no(relation, domain, reasons)
    })
}

/// `A <=_R B` over `S`: `A = B X` for some `X` over `S`.
pub fn leq_r(a: &TropMatrix, b: &TropMatrix, domain: Domain) -> Result<GreenVerdict> {
    combine(
        Relation::LeqR,
        a,
        b,
        domain,
        &[(Relation::LeqR, Direction::Forward)],
    )
}

/// `A <=_L B` over `S`: `A = X B` for some `X` over `S`.
pub fn leq_l(a: &TropMatrix, b: &TropMatrix, domain: Domain) -> Result<GreenVerdict> {
    combine(
        Relation::LeqL,
        a,
        b,
        domain,
        &[(Relation::LeqL, Direction::Forward)],
    )
}

/// `R`, `L` or `H`, with factors in both directions.
pub fn rel(
    a: &TropMatrix,
    b: &TropMatrix,
    which: Relation,
    domain: Domain,
) -> Result<GreenVerdict> {
    use Direction::*;
    use Relation::*;
    let parts: &[(Relation, Direction)] = match which {
        R => &[(LeqR, Forward), (LeqR, Backward)],
        L => &[(LeqL, Forward), (LeqL, Backward)],
        H => &[
            (LeqR, Forward),
            (LeqR, Backward),
            (LeqL, Forward),
            (LeqL, Backward),
        ],
        other => {
            return Err(TropError::Precondition(format!(
                "rel handles r, l and h, not `{other}`"
            )))
        }
    };
    combine(which, a, b, domain, parts)
}

/// Dispatches on the relation.
pub fn decide(
    relation: Relation,
    a: &TropMatrix,
    b: &TropMatrix,
    domain: Domain,
    d_options: &DOptions,
) -> Result<GreenVerdict> {
    match relation {
        Relation::LeqR => leq_r(a, b, domain),
        Relation::LeqL => leq_l(a, b, domain),
        Relation::D => rel_d(a, b, domain, d_options),
        other => rel(a, b, other, domain),
    }
}
