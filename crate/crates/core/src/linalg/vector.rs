use std::fmt;

use crate::error::{Result, TropError};
use crate::scalar::{Domain, TropScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Row,
    Column,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Row => Orientation::Column,
            Orientation::Column => Orientation::Row,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Orientation::Row => "row",
            Orientation::Column => "col",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A vector in `S^n`, remembering whether it is a row or a column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropVector {
    entries: Vec<TropScalar>,
    orientation: Orientation,
}

impl TropVector {
    /// Panics if `entries` is empty.
    pub fn new(entries: Vec<TropScalar>, orientation: Orientation) -> Self {
        assert!(
            !entries.is_empty(),
            "tropical vectors have dimension at least 1"
        );
        TropVector {
            entries,
            orientation,
        }
    }

    pub fn row(entries: Vec<TropScalar>) -> Self {
        Self::new(entries, Orientation::Row)
    }

    pub fn column(entries: Vec<TropScalar>) -> Self {
        Self::new(entries, Orientation::Column)
    }

    /// The additive identity: every entry `-inf`.
    pub fn zero(dim: usize, orientation: Orientation) -> Self {
        Self::new(vec![TropScalar::NegInf; dim], orientation)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<TropScalar> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &TropScalar {
        &self.entries[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TropScalar> {
        self.entries.iter()
    }

    pub fn domain(&self) -> Domain {
        self.entries
            .iter()
            .fold(Domain::Finitary, |d, x| d.join(x.domain()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TropScalar::is_neg_inf)
    }

    pub fn has_pos_inf(&self) -> bool {
        self.entries.iter().any(TropScalar::is_pos_inf)
    }

    /// Positions that are not `-inf`.
    pub fn support(&self) -> Vec<bool> {
        self.entries.iter().map(|x| !x.is_neg_inf()).collect()
    }

    pub fn transpose(&self) -> TropVector {
        TropVector {
            entries: self.entries.clone(),
            orientation: self.orientation.flip(),
        }
    }

    pub fn with_orientation(mut self, orientation: Orientation) -> TropVector {
        self.orientation = orientation;
        self
    }

    /// Componentwise involution `x -> -x`.
    pub fn neg(&self) -> TropVector {
        TropVector {
            entries: self.entries.iter().map(|x| -x).collect(),
            orientation: self.orientation,
        }
    }

    /// `lambda x`, i.e. `lambda` added to every component.
    pub fn scale(&self, lambda: &TropScalar) -> TropVector {
        TropVector {
            entries: self.entries.iter().map(|x| lambda.otimes(x)).collect(),
            orientation: self.orientation,
        }
    }

    pub fn oplus(&self, other: &TropVector) -> Result<TropVector> {
        self.check_same_shape(other)?;
        Ok(TropVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
            orientation: self.orientation,
        })
    }

    /// Componentwise order.
    pub fn leq(&self, other: &TropVector) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// The residual `<self|other>`: the greatest `lambda` with `lambda self <= other`.
    ///
    /// Computed in closed form as `-(max_i self_i ⊗ (-other_i))`.
    pub fn bracket(&self, other: &TropVector) -> Result<TropScalar> {
        self.check_same_dim(other)?;
        let worst = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x.otimes(&-y))
            .max()
            .expect("vectors are nonempty");
        Ok(-worst)
    }

    /// Whether `self = lambda other` for some finite `lambda`.
    pub fn is_finite_multiple_of(&self, other: &TropVector) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let mut offset = None;
        for (x, y) in self.entries.iter().zip(&other.entries) {
            match (x, y) {
                (TropScalar::Finite(a), TropScalar::Finite(b)) => {
                    let d = a - b;
                    match &offset {
                        None => offset = Some(d),
                        Some(o) if *o == d => {}
                        Some(_) => return false,
                    }
                }
                _ if x == y => {}
                _ => return false,
            }
        }
        true
    }

    /// Hilbert projective distance, valued in `[0, inf]`.
    pub fn hilbert(&self, other: &TropVector) -> Result<TropScalar> {
        self.check_same_dim(other)?;
        if self.is_finite_multiple_of(other) {
            return Ok(TropScalar::one());
        }
        let forward = self.bracket(other)?;
        let backward = other.bracket(self)?;
        Ok(-forward.otimes(&backward))
    }

    /// Canonical projective representative: the largest finite entry becomes `0`.
    ///
    /// Vectors without finite entries, or with an `inf` entry, are returned
    /// unchanged since no finite scaling canonicalises them.
    pub fn proj_normalize(&self) -> TropVector {
        if self.has_pos_inf() {
            return self.clone();
        }
        match self.entries.iter().filter(|x| x.is_finite()).max() {
            Some(top) => self.scale(&-top),
            None => self.clone(),
        }
    }

    fn check_same_dim(&self, other: &TropVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(TropError::shape(format!(
                "vector dimensions {} and {} differ",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &TropVector) -> Result<()> {
        self.check_same_dim(other)?;
        if self.orientation != other.orientation {
            return Err(TropError::shape(format!(
                "cannot combine a {} vector with a {} vector",
                self.orientation, other.orientation
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TropVector {
    /// Entries separated by single spaces, orientation not shown.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
