//! Duality between the row space and the column space of a matrix.
//!
//! For a `p x q` matrix `A`, `theta_A(x) = A (-x)^T` maps the row space
//! `R(A)` onto the column space `C(A)`, and `theta'_A(y) = (-y)^T A` is its
//! inverse. Both reverse the residuation bracket, so they are antitone and
//! preserve the Hilbert metric. The same machinery gives kernel witnesses for
//! vectors outside a row space and lets us turn an isomorphism of column
//! spaces into a matrix bridging two `D`-related matrices.

use std::fmt;

use crate::convex::ConvexSpan;
use crate::error::{Result, TropError};
use crate::linalg::{Orientation, TropMatrix, TropVector};
use crate::scalar::{Domain, TropScalar};
use crate::text::Reader;

/// Whether the duality maps insist that their argument lies in the relevant span.
///
/// Off the span the formulas still evaluate, but none of the duality laws
/// apply to the result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SpanCheck {
    #[default]
    Strict,
    Lenient,
}

/// `theta_A(x) = A (-x)^T` for a row vector `x ∈ R(A)`; component `i` is
/// `-<A_i | x>`.
pub fn theta(a: &TropMatrix, x: &TropVector, check: SpanCheck) -> Result<TropVector> {
    if x.dim() != a.cols() {
        return Err(TropError::shape(format!(
            "theta of a {}x{} matrix needs a row vector of dimension {}, got {}",
            a.rows(),
            a.cols(),
            a.cols(),
            x.dim()
        )));
    }
    let x = x.clone().with_orientation(Orientation::Row);
    if check == SpanCheck::Strict && !ConvexSpan::row_space(a, Domain::Completed)?.contains(&x)? {
        return Err(TropError::Domain(format!("`{x}` is not in the row space")));
    }
    a.mul_column(&x.neg().transpose())
}

/// `theta'_A(y) = (-y)^T A` for a column vector `y ∈ C(A)`; component `j`
/// is `-<B_j | y>` for the columns `B_j`.
pub fn theta_prime(a: &TropMatrix, y: &TropVector, check: SpanCheck) -> Result<TropVector> {
    if y.dim() != a.rows() {
        return Err(TropError::shape(format!(
            "theta' of a {}x{} matrix needs a column vector of dimension {}, got {}",
            a.rows(),
            a.cols(),
            a.rows(),
            y.dim()
        )));
    }
    let y = y.clone().with_orientation(Orientation::Column);
    if check == SpanCheck::Strict
        && !ConvexSpan::column_space(a, Domain::Completed)?.contains(&y)?
    {
        return Err(TropError::Domain(format!(
            "`{y}` is not in the column space"
        )));
    }
    a.row_mul(&y.neg().transpose())
}

/// For a row vector `z ∉ R(B)`, column vectors `x, y` with `Bx = By` but
/// `zx != zy`.
///
/// `x = (-z)^T`, `v = theta'_B(Bx)` and `y = (-v)^T`; both postconditions
/// are checked before returning.
pub fn kernel_witness(b: &TropMatrix, z: &TropVector) -> Result<(TropVector, TropVector)> {
    if z.dim() != b.cols() {
        return Err(TropError::shape(format!(
            "kernel witness for a {}x{} matrix needs a row vector of dimension {}, got {}",
            b.rows(),
            b.cols(),
            b.cols(),
            z.dim()
        )));
    }
    let z = z.clone().with_orientation(Orientation::Row);
    if ConvexSpan::row_space(b, Domain::Completed)?.contains(&z)? {
        return Err(TropError::Precondition(format!(
            "`{z}` lies in the row space"
        )));
    }
    let x = z.neg().transpose();
    let bx = b.mul_column(&x)?;
    let v = theta_prime(b, &bx, SpanCheck::Lenient)?;
    let y = v.neg().transpose();

    let by = b.mul_column(&y)?;
    if bx != by {
        return Err(TropError::Internal(format!("Bx = {bx} but By = {by}")));
    }
    let zx = row_dot(&z, &x);
    let zy = row_dot(&z, &y);
    if zx == zy {
        return Err(TropError::Internal(format!("zx = zy = {zx}")));
    }
    Ok((x, y))
}

/// `z x` for a row `z` and column `x` of equal length.
pub fn row_dot(z: &TropVector, x: &TropVector) -> TropScalar {
    z.iter()
        .zip(x.iter())
        .map(|(a, b)| a.otimes(b))
        .max()
        .expect("vectors are nonempty")
}

/// A candidate isomorphism between two spans, acting on generators by
/// `e_i -> lambda_i f_sigma(i)` and extended linearly.
///
/// Whether the assignment really extends to an isomorphism is decided by
/// [`IsoDescriptor::is_valid`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoDescriptor {
    source: Vec<TropVector>,
    target: Vec<TropVector>,
    sigma: Vec<usize>,
    lambdas: Vec<TropScalar>,
    orientation: Orientation,
    source_dim: usize,
    target_dim: usize,
}

impl IsoDescriptor {
    pub fn new(
        source: Vec<TropVector>,
        target: Vec<TropVector>,
        sigma: Vec<usize>,
        lambdas: Vec<TropScalar>,
    ) -> Result<Self> {
        let first_s = source.first().ok_or_else(|| {
            TropError::shape("descriptor with no generators; use IsoDescriptor::empty")
        })?;
        let first_t = target
            .first()
            .ok_or_else(|| TropError::shape("descriptor target has no generators"))?;
        let (orientation, source_dim, target_dim) =
            (first_s.orientation(), first_s.dim(), first_t.dim());
        let mut d = Self::empty(source_dim, target_dim, orientation);
        d.source = source;
        d.target = target;
        d.sigma = sigma;
        d.lambdas = lambdas;
        d.check()?;
        Ok(d)
    }

    /// The (unique) map between zero spans.
    pub fn empty(source_dim: usize, target_dim: usize, orientation: Orientation) -> Self {
        IsoDescriptor {
            source: Vec::new(),
            target: Vec::new(),
            sigma: Vec::new(),
            lambdas: Vec::new(),
            orientation,
            source_dim,
            target_dim,
        }
    }

    pub fn identity(basis: Vec<TropVector>) -> Self {
        let k = basis.len();
        Self::new(
            basis.clone(),
            basis,
            (0..k).collect(),
            vec![TropScalar::one(); k],
        )
        .expect("identity descriptor is well formed")
    }

    fn check(&self) -> Result<()> {
        let k = self.source.len();
        if self.target.len() != k || self.sigma.len() != k || self.lambdas.len() != k {
            return Err(TropError::shape(format!(
                "descriptor sizes disagree: |E| = {k}, |F| = {}, |sigma| = {}, |lambda| = {}",
                self.target.len(),
                self.sigma.len(),
                self.lambdas.len()
            )));
        }
        let mut seen = vec![false; k];
        for &s in &self.sigma {
            if s >= k || std::mem::replace(&mut seen[s], true) {
                return Err(TropError::shape(format!(
                    "{:?} is not a permutation",
                    self.sigma
                )));
            }
        }
        if let Some(l) = self.lambdas.iter().find(|l| !l.is_finite()) {
            return Err(TropError::Domain(format!("scaling `{l}` is not finite")));
        }
        let uniform = |vs: &[TropVector], dim: usize| {
            vs.iter()
                .all(|v| v.dim() == dim && v.orientation() == self.orientation)
        };
        if !uniform(&self.source, self.source_dim) || !uniform(&self.target, self.target_dim) {
            return Err(TropError::shape(
                "descriptor generators must share dimension and orientation",
            ));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    pub fn source(&self) -> &[TropVector] {
        &self.source
    }

    pub fn target(&self) -> &[TropVector] {
        &self.target
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn lambdas(&self) -> &[TropScalar] {
        &self.lambdas
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Image of generator `i`: `lambda_i f_sigma(i)`.
    pub fn image_of_generator(&self, i: usize) -> TropVector {
        self.target[self.sigma[i]].scale(&self.lambdas[i])
    }

    pub fn source_span(&self) -> ConvexSpan {
        if self.source.is_empty() {
            return ConvexSpan::empty(self.source_dim, self.orientation, Domain::Completed);
        }
        ConvexSpan::new(self.source.clone(), Domain::Completed).expect("checked on construction")
    }

    pub fn target_span(&self) -> ConvexSpan {
        if self.target.is_empty() {
            return ConvexSpan::empty(self.target_dim, self.orientation, Domain::Completed);
        }
        ConvexSpan::new(self.target.clone(), Domain::Completed).expect("checked on construction")
    }

    /// Linear extension: `c = ⊕ <e_i|c> e_i` maps to `⊕ <e_i|c> lambda_i f_sigma(i)`.
    pub fn apply(&self, c: &TropVector) -> Result<TropVector> {
        let span = self.source_span();
        let coeffs = span
            .member(c)?
            .ok_or_else(|| TropError::Domain(format!("`{c}` is not in the source span")))?;
        let mut out = TropVector::zero(self.target_dim, self.orientation);
        for (i, mu) in coeffs.iter().enumerate() {
            out = out.oplus(&self.image_of_generator(i).scale(mu))?;
        }
        Ok(out)
    }

    /// Source generators as the columns of a matrix (rows are transposed).
    fn source_matrix(&self) -> Option<TropMatrix> {
        self.source_span().to_matrix().map(|m| self.as_columns(m))
    }

    fn image_matrix(&self) -> Option<TropMatrix> {
        if self.is_empty() {
            return None;
        }
        let images: Vec<_> = (0..self.len())
            .map(|i| self.image_of_generator(i))
            .collect();
        let m = match self.orientation {
            Orientation::Column => TropMatrix::from_column_vectors(&images),
            Orientation::Row => TropMatrix::from_row_vectors(&images),
        };
        Some(self.as_columns(m.expect("uniform generators")))
    }

    fn as_columns(&self, m: TropMatrix) -> TropMatrix {
        match self.orientation {
            Orientation::Column => m,
            Orientation::Row => m.transpose(),
        }
    }

    /// Whether `e_i -> lambda_i f_sigma(i)` extends to a linear isomorphism
    /// from `span(E)` onto `span(F)`.
    ///
    /// With `E` and `F'` the matrices whose columns are the `e_i` and their
    /// images, this holds exactly when `R(E) = R(F')`.
    pub fn is_valid(&self) -> Result<bool> {
        let (Some(e), Some(f)) = (self.source_matrix(), self.image_matrix()) else {
            return Ok(true);
        };
        ConvexSpan::row_space(&e, Domain::Completed)?
            .span_equal(&ConvexSpan::row_space(&f, Domain::Completed)?)
    }

    /// Reads the text form written by `Display`.
    pub fn read(reader: &mut Reader<'_>) -> Result<Self> {
        let (no, header) =
            reader.next_tokens("descriptor header `k orientation source_dim target_dim`")?;
        let bad = |col: usize, msg: &str| TropError::parse(no, col, msg.to_string());
        if header.len() != 4 {
            return Err(bad(
                1,
                "descriptor header must be `k orientation source_dim target_dim`",
            ));
        }
        let num = |i: usize| -> Result<usize> {
            header[i]
                .1
                .parse()
                .map_err(|_| bad(header[i].0, "expected a count"))
        };
        let k = num(0)?;
        let orientation = match header[1].1 {
            "col" => Orientation::Column,
            "row" => Orientation::Row,
            _ => return Err(bad(header[1].0, "orientation must be `row` or `col`")),
        };
        let (source_dim, target_dim) = (num(2)?, num(3)?);
        if k == 0 {
            return Ok(Self::empty(source_dim, target_dim, orientation));
        }
        let sigma = reader
            .read_usizes("permutation line")?
            .into_iter()
            .map(|s| {
                s.checked_sub(1)
                    .ok_or_else(|| bad(1, "permutation entries are 1-based"))
            })
            .collect::<Result<Vec<_>>>()?;
        let lambdas = reader.read_scalars("scaling line")?;
        let vectors = |m: TropMatrix| match orientation {
            Orientation::Column => m.column_vectors(),
            Orientation::Row => m.row_vectors(),
        };
        let source = vectors(reader.read_matrix()?);
        let target = vectors(reader.read_matrix()?);
        let d = Self::new(source, target, sigma, lambdas)?;
        if d.source_dim != source_dim || d.target_dim != target_dim || d.len() != k {
            return Err(bad(1, "descriptor header disagrees with its matrices"));
        }
        Ok(d)
    }
}

impl fmt::Display for IsoDescriptor {
    /// `k orientation source_dim target_dim`, then (for `k > 0`) the 1-based
    /// permutation, the scalings, and `E`, `F` as matrices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} {} {}",
            self.len(),
            self.orientation,
            self.source_dim,
            self.target_dim
        )?;
        if self.is_empty() {
            return Ok(());
        }
        let sigma: Vec<String> = self.sigma.iter().map(|s| (s + 1).to_string()).collect();
        writeln!(f, "{}", sigma.join(" "))?;
        let lambdas: Vec<String> = self.lambdas.iter().map(ToString::to_string).collect();
        writeln!(f, "{}", lambdas.join(" "))?;
        let pack = |vs: &[TropVector]| match self.orientation {
            Orientation::Column => TropMatrix::from_column_vectors(vs),
            Orientation::Row => TropMatrix::from_row_vectors(vs),
        };
        write!(f, "{}", pack(&self.source).map_err(|_| fmt::Error)?)?;
        write!(f, "{}", pack(&self.target).map_err(|_| fmt::Error)?)
    }
}

/// Result of pushing the columns of `A` through an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub matrix: TropMatrix,
    /// `R(D) = R(A)`.
    pub row_space_ok: bool,
    /// `C(D)` equals the span of the descriptor's targets.
    pub column_space_ok: bool,
}

impl Bridge {
    pub fn is_verified(&self) -> bool {
        self.row_space_ok && self.column_space_ok
    }
}

/// Builds `D` with `col_j(D) = f(col_j(A))` and checks both span equalities.
pub fn bridge_from_iso(a: &TropMatrix, f: &IsoDescriptor) -> Result<Bridge> {
    if f.orientation() != Orientation::Column {
        return Err(TropError::shape(
            "bridge construction needs a descriptor on column vectors",
        ));
    }
    if f.source_dim() != a.rows() {
        return Err(TropError::shape(format!(
            "descriptor acts on dimension {}, matrix has {} rows",
            f.source_dim(),
            a.rows()
        )));
    }
    let columns = a
        .column_vectors()
        .iter()
        .map(|c| f.apply(c))
        .collect::<Result<Vec<_>>>()?;
    let d = TropMatrix::from_column_vectors(&columns)?;
    let row_space_ok = ConvexSpan::row_space(&d, Domain::Completed)?
        .span_equal(&ConvexSpan::row_space(a, Domain::Completed)?)?;
    let column_space_ok =
        ConvexSpan::column_space(&d, Domain::Completed)?.span_equal(&f.target_span())?;
    Ok(Bridge {
        matrix: d,
        row_space_ok,
        column_space_ok,
    })
}

/// [`bridge_from_iso`], failing unless both span equalities hold.
pub fn matrix_from_iso(a: &TropMatrix, f: &IsoDescriptor) -> Result<TropMatrix> {
    let bridge = bridge_from_iso(a, f)?;
    match (bridge.row_space_ok, bridge.column_space_ok) {
        (true, true) => Ok(bridge.matrix),
        (false, true) => Err(TropError::Domain(
            "bridge verification failed: R(D) != R(A)".into(),
        )),
        (true, false) => Err(TropError::Domain(
            "bridge verification failed: C(D) differs from the target span".into(),
        )),
        (false, false) => Err(TropError::Domain(
            "bridge verification failed: both R(D) != R(A) and C(D) differs from the target span"
                .into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_entries;

    fn m(s: &str) -> TropMatrix {
        TropMatrix::parse_rows(s).unwrap()
    }

    fn row(s: &str) -> TropVector {
        TropVector::row(parse_entries(s).unwrap())
    }

    fn col(s: &str) -> TropVector {
        TropVector::column(parse_entries(s).unwrap())
    }

    fn sc(s: &str) -> TropScalar {
        s.parse().unwrap()
    }

    #[test]
    fn theta_examples() {
        let a = m("0 0; 0 1");
        assert_eq!(
            theta(&a, &row("0 0"), SpanCheck::Strict).unwrap(),
            col("0 1")
        );
        assert_eq!(
            theta_prime(&a, &col("0 1"), SpanCheck::Strict).unwrap(),
            row("0 0")
        );

        let one = m("0");
        assert_eq!(
            theta(&one, &row("5/3"), SpanCheck::Strict).unwrap(),
            col("-5/3")
        );
        assert_eq!(
            theta_prime(&one, &col("-2"), SpanCheck::Strict).unwrap(),
            row("2")
        );

        let fin = m("1 2 0; -3 4 1/2");
        let x = fin.row(0).oplus(&fin.row(1).scale(&sc("1"))).unwrap();
        let y = theta(&fin, &x, SpanCheck::Strict).unwrap();
        assert_eq!(y.domain(), Domain::Finitary);
        assert_eq!(theta_prime(&fin, &y, SpanCheck::Strict).unwrap(), x);
    }

    #[test]
    fn theta_rejects_non_members_in_strict_mode() {
        let a = m("0 0; 0 0");
        let x = row("0 1");
        assert!(matches!(
            theta(&a, &x, SpanCheck::Strict),
            Err(TropError::Domain(_))
        ));
        assert_eq!(theta(&a, &x, SpanCheck::Lenient).unwrap(), col("0 0"));
        assert!(theta(&a, &row("0 0 0"), SpanCheck::Lenient).is_err());
        assert!(theta_prime(&a, &col("0 1"), SpanCheck::Strict).is_err());
    }

    #[test]
    fn kernel_witness_examples() {
        let b = m("0 0");
        let (x, y) = kernel_witness(&b, &row("0 1")).unwrap();
        assert_eq!(x, col("0 -1"));
        assert_eq!(y, col("0 0"));

        let err = kernel_witness(&TropMatrix::identity(2), &row("3 -inf")).unwrap_err();
        assert!(matches!(err, TropError::Precondition(_)));

        let b = m("0 -inf");
        let z = row("0 0");
        let (x, y) = kernel_witness(&b, &z).unwrap();
        assert_eq!(b.mul_column(&x).unwrap(), b.mul_column(&y).unwrap());
        assert_ne!(row_dot(&z, &x), row_dot(&z, &y));
    }

    #[test]
    fn apply_iso_examples() {
        let basis = vec![col("0 -inf"), col("-inf 0")];
        let id = IsoDescriptor::identity(basis.clone());
        assert_eq!(id.apply(&col("2 5")).unwrap(), col("2 5"));

        let e = vec![col("0 1")];
        let f = vec![col("4 -inf")];
        let g = IsoDescriptor::new(e.clone(), f.clone(), vec![0], vec![sc("3")]).unwrap();
        assert_eq!(
            g.apply(&e[0].scale(&sc("-1/2"))).unwrap(),
            f[0].scale(&sc("5/2"))
        );

        let swap =
            IsoDescriptor::new(basis.clone(), basis, vec![1, 0], vec![sc("0"), sc("0")]).unwrap();
        assert_eq!(swap.apply(&col("2 5")).unwrap(), col("5 2"));
        assert!(swap.is_valid().unwrap());

        assert!(g.apply(&col("0 0")).is_err());
    }

    #[test]
    fn descriptor_construction_checks() {
        let b = vec![col("0 1"), col("1 0")];
        assert!(
            IsoDescriptor::new(b.clone(), b.clone(), vec![0, 0], vec![sc("0"), sc("0")]).is_err()
        );
        assert!(
            IsoDescriptor::new(b.clone(), b.clone(), vec![0, 1], vec![sc("0"), sc("inf")]).is_err()
        );
        assert!(IsoDescriptor::new(
            b.clone(),
            b[..1].to_vec(),
            vec![0, 1],
            vec![sc("0"), sc("0")]
        )
        .is_err());
    }

    #[test]
    fn validity_is_certified() {
        // span{(0,0)} and span{(0,1)} are both lines; any scaling is an isomorphism.
        let ok =
            IsoDescriptor::new(vec![col("0 0")], vec![col("0 1")], vec![0], vec![sc("7")]).unwrap();
        assert!(ok.is_valid().unwrap());
        // (0,-inf),(-inf,0) span T^2; (0,0),(0,1) span a strip. Not isomorphic.
        let bad = IsoDescriptor::new(
            vec![col("0 -inf"), col("-inf 0")],
            vec![col("0 0"), col("0 1")],
            vec![0, 1],
            vec![sc("0"), sc("0")],
        )
        .unwrap();
        assert!(!bad.is_valid().unwrap());
    }

    #[test]
    fn matrix_from_iso_examples() {
        let a = m("0 1 -inf; 2 0 0; -inf 3 1");
        let basis = a.column_vectors();
        let id = IsoDescriptor::identity(basis.clone());
        assert_eq!(matrix_from_iso(&a, &id).unwrap(), a);

        // Permuting the columns of a monomial matrix is an automorphism of T^3.
        let mono = m("0 -inf -inf; -inf 2 -inf; -inf -inf 1");
        let cols = mono.column_vectors();
        let perm = IsoDescriptor::new(cols.clone(), cols, vec![2, 0, 1], vec![sc("0"); 3]).unwrap();
        let bridge = bridge_from_iso(&mono, &perm).unwrap();
        assert_eq!(bridge.matrix, mono.permute_columns(&[2, 0, 1]));
        assert!(bridge.row_space_ok && bridge.column_space_ok);

        // On A itself the same permutation is not an isomorphism.
        let bad = IsoDescriptor::new(
            basis.clone(),
            basis.clone(),
            vec![2, 0, 1],
            vec![sc("0"); 3],
        )
        .unwrap();
        assert!(!bad.is_valid().unwrap());
        assert!(!bridge_from_iso(&a, &bad).unwrap().is_verified());

        let fin = m("0 1; 2 -1");
        let fb = fin.column_vectors();
        let up = IsoDescriptor::new(fb.clone(), fb, vec![0, 1], vec![sc("1"), sc("1")]).unwrap();
        let d = matrix_from_iso(&fin, &up).unwrap();
        assert_eq!(d, fin.map(|x| x.otimes(&sc("1"))));
        assert!(ConvexSpan::row_space(&d, Domain::Completed)
            .unwrap()
            .span_equal(&ConvexSpan::row_space(&fin, Domain::Completed).unwrap())
            .unwrap());
    }

    #[test]
    fn invalid_descriptor_reports_failing_side() {
        let a = m("0 -inf; -inf 0");
        let bad = IsoDescriptor::new(
            a.column_vectors(),
            vec![col("0 0"), col("0 1")],
            vec![0, 1],
            vec![sc("0"), sc("0")],
        )
        .unwrap();
        let bridge = bridge_from_iso(&a, &bad).unwrap();
        assert!(!bridge.row_space_ok);
        assert!(bridge.column_space_ok);
        let err = matrix_from_iso(&a, &bad).unwrap_err().to_string();
        assert!(err.contains("R(D) != R(A)"), "{err}");
    }

    #[test]
    fn descriptor_text_round_trip() {
        let d = IsoDescriptor::new(
            vec![col("0 -inf 1/2"), col("1 2 3")],
            vec![col("5 6"), col("-inf 0")],
            vec![1, 0],
            vec![sc("-3"), sc("7/2")],
        )
        .unwrap();
        let text = d.to_string();
        let mut r = Reader::new(&text);
        assert_eq!(IsoDescriptor::read(&mut r).unwrap(), d);
        r.finish().unwrap();

        let e = IsoDescriptor::empty(3, 2, Orientation::Column);
        let text = e.to_string();
        assert_eq!(text, "0 col 3 2\n");
        assert_eq!(IsoDescriptor::read(&mut Reader::new(&text)).unwrap(), e);
    }
}
