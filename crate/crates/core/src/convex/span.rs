use std::sync::OnceLock;

use crate::error::{Result, TropError};
use crate::linalg::{Orientation, TropMatrix, TropVector};
use crate::scalar::{Domain, TropScalar};

/// A finitely generated convex set (subsemimodule) of `S^n`.
///
/// `semiring` is the `S` over which combinations are taken. Every generator
/// must lie in `S^n`. The weak basis is computed lazily and cached; the cache
/// is a pure function of the generators, so concurrent fills agree.
#[derive(Clone, Debug)]
pub struct ConvexSpan {
    generators: Vec<TropVector>,
    orientation: Orientation,
    dim: usize,
    semiring: Domain,
    basis: OnceLock<Vec<usize>>,
}

impl ConvexSpan {
    pub fn new(generators: Vec<TropVector>, semiring: Domain) -> Result<Self> {
        let first = generators.first().ok_or_else(|| {
            TropError::shape("a span needs at least one generator; use ConvexSpan::empty")
        })?;
        let (dim, orientation) = (first.dim(), first.orientation());
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != dim || g.orientation() != orientation {
                return Err(TropError::shape(format!(
                    "generator {} is a {}-dimensional {} vector, expected {dim}-dimensional {orientation}",
                    i + 1,
                    g.dim(),
                    g.orientation()
                )));
            }
            if g.domain() > semiring {
                return Err(TropError::OutsideDomain {
                    expected: semiring,
                    detail: format!("generator {} is `{g}`", i + 1),
                });
            }
        }
        Ok(ConvexSpan {
            generators,
            orientation,
            dim,
            semiring,
            basis: OnceLock::new(),
        })
    }

    /// The zero span `{-inf}` in dimension `dim`.
    pub fn empty(dim: usize, orientation: Orientation, semiring: Domain) -> Self {
        ConvexSpan {
            generators: Vec::new(),
            orientation,
            dim,
            semiring,
            basis: OnceLock::from(Vec::new()),
        }
    }

    /// `C_S(A)`, spanned by the columns of `a`.
    pub fn column_space(a: &TropMatrix, semiring: Domain) -> Result<Self> {
        Self::new(a.column_vectors(), semiring)
    }

    /// `R_S(A)`, spanned by the rows of `a`.
    pub fn row_space(a: &TropMatrix, semiring: Domain) -> Result<Self> {
        Self::new(a.row_vectors(), semiring)
    }

    pub fn generators(&self) -> &[TropVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn semiring(&self) -> Domain {
        self.semiring
    }

    /// Generators packed into a matrix (as columns or rows, per orientation).
    pub fn to_matrix(&self) -> Option<TropMatrix> {
        if self.generators.is_empty() {
            return None;
        }
        let m = match self.orientation {
            Orientation::Row => TropMatrix::from_row_vectors(&self.generators),
            Orientation::Column => TropMatrix::from_column_vectors(&self.generators),
        };
        Some(m.expect("generators are uniform"))
    }

    fn check_vector(&self, a: &TropVector) -> Result<()> {
        if a.dim() != self.dim || a.orientation() != self.orientation {
            return Err(TropError::shape(format!(
                "expected a {}-dimensional {} vector, got a {}-dimensional {} vector",
                self.dim,
                self.orientation,
                a.dim(),
                a.orientation()
            )));
        }
        Ok(())
    }

    /// `(<r_1|a>, ..., <r_k|a>)`; the combination they define is always `<= a`.
    pub fn principal_coeffs(&self, a: &TropVector) -> Result<Vec<TropScalar>> {
        self.check_vector(a)?;
        self.generators.iter().map(|r| r.bracket(a)).collect()
    }

    /// `⊕_i c_i r_i`.
    pub fn combine(&self, coeffs: &[TropScalar]) -> Result<TropVector> {
        if coeffs.len() != self.generators.len() {
            return Err(TropError::shape(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.generators.len()
            )));
        }
        Ok(combine(
            self.dim,
            self.orientation,
            self.generators.iter().zip(coeffs),
        ))
    }

    /// Membership in the `S`-span. Returns the principal coefficients as the
    /// witness when `a` is a member.
    ///
    /// Exact: any representation of `a` is dominated coefficientwise by the
    /// principal one, so the principal combination reproduces `a` iff `a` is
    /// in the span at all.
    pub fn member(&self, a: &TropVector) -> Result<Option<Vec<TropScalar>>> {
        let coeffs = self.principal_coeffs(a)?;
        if a.domain() > self.semiring {
            return Ok(None);
        }
        let back = self.combine(&coeffs)?;
        Ok((back == *a).then_some(coeffs))
    }

    pub fn contains(&self, a: &TropVector) -> Result<bool> {
        Ok(self.member(a)?.is_some())
    }

    /// Indices of a minimal generating subset.
    ///
    /// Generators are scanned from the last to the first and dropped when
    /// they lie in the span of the generators still alive, so among
    /// proportional generators the earliest survives. Zero generators are
    /// always dropped and the zero span has an empty basis.
    pub fn weak_basis_indices(&self) -> &[usize] {
        self.basis.get_or_init(|| {
            let k = self.generators.len();
            let mut alive = vec![true; k];
            for i in (0..k).rev() {
                let g = &self.generators[i];
                if g.is_zero() {
                    alive[i] = false;
                    continue;
                }
                let others = (0..k)
                    .filter(|&j| j != i && alive[j])
                    .map(|j| &self.generators[j]);
                if principal_combination(self.dim, self.orientation, others, g) == *g {
                    alive[i] = false;
                }
            }
            (0..k).filter(|&i| alive[i]).collect()
        })
    }

    pub fn weak_basis(&self) -> ConvexSpan {
        let idx = self.weak_basis_indices();
        if idx.is_empty() {
            return ConvexSpan::empty(self.dim, self.orientation, self.semiring);
        }
        let generators: Vec<_> = idx.iter().map(|&i| self.generators[i].clone()).collect();
        ConvexSpan {
            generators,
            orientation: self.orientation,
            dim: self.dim,
            semiring: self.semiring,
            basis: OnceLock::from((0..idx.len()).collect::<Vec<_>>()),
        }
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_span(&self, other: &ConvexSpan) -> Result<bool> {
        if other.dim != self.dim || other.orientation != self.orientation {
            return Err(TropError::shape(format!(
                "cannot compare a span in {}-dimensional {} space with one in {}-dimensional {} space",
                self.dim, self.orientation, other.dim, other.orientation
            )));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn span_equal(&self, other: &ConvexSpan) -> Result<bool> {
        Ok(self.contains_span(other)? && other.contains_span(self)?)
    }
}

fn combine<'a>(
    dim: usize,
    orientation: Orientation,
    terms: impl Iterator<Item = (&'a TropVector, &'a TropScalar)>,
) -> TropVector {
    let mut acc = vec![TropScalar::NegInf; dim];
    for (r, c) in terms {
        for (slot, x) in acc.iter_mut().zip(r.iter()) {
            let t = c.otimes(x);
            if t > *slot {
                *slot = t;
            }
        }
    }
    TropVector::new(acc, orientation)
}

fn principal_combination<'a>(
    dim: usize,
    orientation: Orientation,
    generators: impl Iterator<Item = &'a TropVector>,
    a: &TropVector,
) -> TropVector {
    let mut acc = vec![TropScalar::NegInf; dim];
    for r in generators {
        let c = r.bracket(a).expect("dimensions checked by caller");
        for (slot, x) in acc.iter_mut().zip(r.iter()) {
            let t = c.otimes(x);
            if t > *slot {
                *slot = t;
            }
        }
    }
    TropVector::new(acc, orientation)
}

/// Greatest subsolution of `B x = c`: `x*_k = <col_k(B) | c>`.
///
/// `B x* <= c` always, with equality exactly when the system is solvable.
pub fn principal_solution(b: &TropMatrix, c: &TropVector) -> Result<TropVector> {
    if b.rows() != c.dim() {
        return Err(TropError::shape(format!(
            "{}x{} system with a right-hand side of dimension {}",
            b.rows(),
            b.cols(),
            c.dim()
        )));
    }
    let c = c.clone().with_orientation(Orientation::Column);
    let xs = (0..b.cols())
        .map(|k| b.col(k).bracket(&c))
        .collect::<Result<Vec<_>>>()?;
    Ok(TropVector::column(xs))
}
