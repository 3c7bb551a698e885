//! The `D` relation: `A D B` iff `C_T(A)` and `C_T(B)` are isomorphic.
//!
//! An isomorphism sends a weak basis `E` of one column space onto scalings
//! of a weak basis `F` of the other, so candidates are pairs `(sigma,
//! lambda)` with `e_i -> lambda_i f_sigma(i)`. For a fixed `sigma` the
//! scalings are found exactly: brackets are preserved, which fixes
//! `lambda_j - lambda_i` whenever `<e_i|e_j>` is finite, and the assignment
//! extends to an isomorphism iff `R(E) = R(F_sigma diag(lambda))`. Both row
//! spaces live in `T^k`, and two spans agree iff their weak bases agree up
//! to scaling, so matching the extremal rows turns the remaining freedom into
//! difference constraints solved by a weighted union-find. Every accepted
//! candidate is still re-verified through [`bridge_from_iso`].

use num_rational::BigRational;
use num_traits::Zero;

use super::{check_pair, GreenVerdict, Relation, Witness};
use crate::convex::ConvexSpan;
use crate::duality::{bridge_from_iso, IsoDescriptor};
use crate::error::{Result, TropError};
use crate::linalg::{Orientation, TropMatrix, TropVector};
use crate::scalar::{Domain, TropScalar};

const MAX_REASONS: usize = 32;

/// Limits on the permutation search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DOptions {
    pub max_n: usize,
    pub max_basis: usize,
    pub enforce_guard: bool,
}

impl Default for DOptions {
    fn default() -> Self {
        DOptions {
            max_n: 10,
            max_basis: 8,
            enforce_guard: true,
        }
    }
}

impl DOptions {
    pub fn unguarded() -> Self {
        DOptions {
            enforce_guard: false,
            ..Self::default()
        }
    }
}

/// Decides `A D B` for square matrices over `T`.
pub fn rel_d(
    a: &TropMatrix,
    b: &TropMatrix,
    domain: Domain,
    opts: &DOptions,
) -> Result<GreenVerdict> {
    if a.domain() == Domain::Completed || b.domain() == Domain::Completed {
        return Err(TropError::Domain("relation D requires entries in T".into()));
    }
    check_pair(a, b, domain)?;
    let n = a.rows();
    if opts.enforce_guard && n > opts.max_n {
        return Err(TropError::SizeGuard(format!(
            "relation D is limited to n <= {} (got {n})",
            opts.max_n
        )));
    }

    let e = ConvexSpan::column_space(a, Domain::Tropical)?.weak_basis();
    let f = ConvexSpan::column_space(b, Domain::Tropical)?.weak_basis();
    let k = e.len();
    if k != f.len() {
        return Ok(no(
            domain,
            vec![format!(
                "weak bases of C(A) and C(B) have {} and {} elements",
                k,
                f.len()
            )],
        ));
    }
    if k == 0 {
        let iso = IsoDescriptor::empty(n, n, Orientation::Column);
        return finish(a, domain, iso).map(|v| v.expect("zero matrices bridge trivially"));
    }
    if opts.enforce_guard && k > opts.max_basis {
        return Err(TropError::SizeGuard(format!(
            "relation D is limited to weak bases of size <= {} (got {k})",
            opts.max_basis
        )));
    }

    let search = Search::new(e.generators(), f.generators())?;
    if search.rows_e.len() != search.rows_f.len() {
        return Ok(no(
            domain,
            vec![format!(
                "the bases span row spaces with {} and {} extremal rows",
                search.rows_e.len(),
                search.rows_f.len()
            )],
        ));
    }

    let mut sigma = Vec::with_capacity(k);
    let mut used = vec![false; k];
    let mut reasons = Vec::new();
    let mut rejected = 0usize;
    let found = search.dfs(&mut sigma, &mut used, &mut |sigma, outcome| match outcome {
        Candidate::Rejected(why) => {
            rejected += 1;
            if reasons.len() < MAX_REASONS {
                reasons.push(format!("sigma {}: {why}", show_prefix(sigma, k)));
            }
            Ok(None)
        }
        Candidate::Scalings(lambdas) => {
            let iso = IsoDescriptor::new(
                e.generators().to_vec(),
                f.generators().to_vec(),
                sigma.to_vec(),
                lambdas,
            )?;
            match finish(a, domain, iso)? {
                Some(v) => Ok(Some(v)),
                None => {
                    rejected += 1;
                    if reasons.len() < MAX_REASONS {
                        reasons.push(format!(
                            "sigma {}: bridge verification failed",
                            show_prefix(sigma, k)
                        ));
                    }
                    Ok(None)
                }
            }
        }
    })?;
    if let Some(v) = found {
        return Ok(v);
    }
    if rejected > reasons.len() {
        reasons.push(format!(
            "{} further candidates rejected",
            rejected - reasons.len()
        ));
    }
    if reasons.is_empty() {
        reasons.push("no permutation of the weak basis is admissible".into());
    }
    Ok(no(domain, reasons))
}

fn no(domain: Domain, refutation: Vec<String>) -> GreenVerdict {
    GreenVerdict::no(Relation::D, domain, refutation)
}

fn finish(a: &TropMatrix, domain: Domain, iso: IsoDescriptor) -> Result<Option<GreenVerdict>> {
    if !iso.is_valid()? {
        return Ok(None);
    }
    let bridge = bridge_from_iso(a, &iso)?;
    if !bridge.is_verified() {
        return Ok(None);
    }
    Ok(Some(GreenVerdict::yes(
        Relation::D,
        domain,
        Witness::Bridge {
            iso,
            bridge: bridge.matrix,
        },
    )))
}

/// 1-based prefix, `*` for unassigned positions.
fn show_prefix(sigma: &[usize], k: usize) -> String {
    (0..k)
        .map(|i| {
            sigma
                .get(i)
                .map_or("*".to_string(), |s| (s + 1).to_string())
        })
        .collect::<Vec<_>>()
        .join(" ")
}

enum Candidate {
    Rejected(&'static str),
    Scalings(Vec<TropScalar>),
}

struct Search {
    k: usize,
    brackets_e: Vec<Vec<TropScalar>>,
    brackets_f: Vec<Vec<TropScalar>>,
    /// Extremal rows of the `n x k` matrices with the bases as columns.
    rows_e: Vec<TropVector>,
    rows_f: Vec<TropVector>,
}

impl Search {
    fn new(e: &[TropVector], f: &[TropVector]) -> Result<Self> {
        let brackets = |vs: &[TropVector]| -> Result<Vec<Vec<TropScalar>>> {
            vs.iter()
                .map(|x| vs.iter().map(|y| x.bracket(y)).collect())
                .collect()
        };
        let rows = |vs: &[TropVector]| -> Result<Vec<TropVector>> {
            let m = TropMatrix::from_column_vectors(vs)?;
            Ok(ConvexSpan::row_space(&m, Domain::Tropical)?
                .weak_basis()
                .generators()
                .to_vec())
        };
        Ok(Search {
            k: e.len(),
            brackets_e: brackets(e)?,
            brackets_f: brackets(f)?,
            rows_e: rows(e)?,
            rows_f: rows(f)?,
        })
    }

    /// Lexicographic depth-first enumeration; stops at the first `Some`.
    fn dfs<T>(
        &self,
        sigma: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut impl FnMut(&[usize], Candidate) -> Result<Option<T>>,
    ) -> Result<Option<T>> {
        let i = sigma.len();
        if i == self.k {
            let outcome = self.scalings(sigma);
            return visit(sigma, outcome);
        }
        for s in 0..self.k {
            if used[s] {
                continue;
            }
            sigma.push(s);
            let result = if self.pattern_agrees(sigma) {
                used[s] = true;
                let r = self.dfs(sigma, used, visit);
                used[s] = false;
                r
            } else {
                visit(sigma, Candidate::Rejected("finite-bracket pattern differs"))
            };
            sigma.pop();
            if let Some(found) = result? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Whether the newest assignment keeps `<e_i|e_j>` and
    /// `<f_sigma(i)|f_sigma(j)>` finite at the same places.
    fn pattern_agrees(&self, sigma: &[usize]) -> bool {
        let i = sigma.len() - 1;
        (0..=i).all(|j| {
            let (si, sj) = (sigma[i], sigma[j]);
            self.brackets_e[i][j].is_finite() == self.brackets_f[si][sj].is_finite()
                && self.brackets_e[j][i].is_finite() == self.brackets_f[sj][si].is_finite()
        })
    }

    fn scalings(&self, sigma: &[usize]) -> Candidate {
        let k = self.k;
        let rows = self.rows_e.len();
        // Variables: lambda_0..lambda_{k-1}, then one (negated) row scale per extremal row.
        let mut pot = Potentials::new(k + rows);
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                let (Some(de), Some(df)) = (
                    self.brackets_e[i][j].as_finite(),
                    self.brackets_f[sigma[i]][sigma[j]].as_finite(),
                ) else {
                    continue;
                };
                if !pot.relate(j, i, de - df) {
                    return Candidate::Rejected("bracket constraints are inconsistent");
                }
            }
        }
        let permuted: Vec<Vec<TropScalar>> = self
            .rows_f
            .iter()
            .map(|r| sigma.iter().map(|&s| r.get(s).clone()).collect())
            .collect();
        let mut taken = vec![false; rows];
        match self.match_rows(0, &permuted, &mut taken, pot) {
            Some(mut pot) => Candidate::Scalings((0..k).map(|i| pot.value(i).into()).collect()),
            None => Candidate::Rejected("row spaces cannot be matched"),
        }
    }

    /// Pairs extremal rows of `E` with rows of `F_sigma` of equal support so
    /// that `w_E[i] - w_F[i] = mu + lambda_i` on the support.
    fn match_rows(
        &self,
        t: usize,
        permuted: &[Vec<TropScalar>],
        taken: &mut [bool],
        pot: Potentials,
    ) -> Option<Potentials> {
        if t == self.rows_e.len() {
            return Some(pot);
        }
        let we = &self.rows_e[t];
        for (s, wf) in permuted.iter().enumerate() {
            if taken[s]
                || we
                    .iter()
                    .zip(wf)
                    .any(|(x, y)| x.is_finite() != y.is_finite())
            {
                continue;
            }
            let mut next = pot.clone();
            let consistent =
                we.iter()
                    .zip(wf)
                    .enumerate()
                    .all(|(i, (x, y))| match x.finite_sub(y) {
                        Some(d) => next.relate(i, self.k + t, d),
                        None => true,
                    });
            if !consistent {
                continue;
            }
            taken[s] = true;
            if let Some(done) = self.match_rows(t + 1, permuted, taken, next) {
                return Some(done);
            }
            taken[s] = false;
        }
        None
    }
}

/// Weighted union-find for constraints `x_a - x_b = w`; each class has its
/// root pinned at 0.
#[derive(Clone, Debug)]
struct Potentials {
    parent: Vec<usize>,
    /// `x_v - x_parent(v)`.
    offset: Vec<BigRational>,
}

impl Potentials {
    fn new(n: usize) -> Self {
        Potentials {
            parent: (0..n).collect(),
            offset: vec![BigRational::zero(); n],
        }
    }

    /// Root of `v` and `x_v - x_root`.
    fn find(&mut self, v: usize) -> (usize, BigRational) {
        let p = self.parent[v];
        if p == v {
            return (v, BigRational::zero());
        }
        let (root, to_root) = self.find(p);
        let total = &self.offset[v] + to_root;
        self.parent[v] = root;
        self.offset[v] = total.clone();
        (root, total)
    }

    /// Imposes `x_a - x_b = w`; false if that contradicts earlier constraints.
    fn relate(&mut self, a: usize, b: usize, w: BigRational) -> bool {
        let (ra, da) = self.find(a);
        let (rb, db) = self.find(b);
        if ra == rb {
            return da - db == w;
        }
        // x_ra - x_rb = w - da + db
        self.parent[ra] = rb;
        self.offset[ra] = w - da + db;
        true
    }

    fn value(&mut self, v: usize) -> BigRational {
        self.find(v).1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> TropMatrix {
        TropMatrix::parse_rows(s).unwrap()
    }

    fn d(a: &TropMatrix, b: &TropMatrix) -> GreenVerdict {
        let v = rel_d(a, b, Domain::Tropical, &DOptions::default()).unwrap();
        assert!(v.verify(a, b).unwrap(), "{v:?}");
        v
    }

    #[test]
    fn permuted_and_scaled_columns() {
        let a = m("0 1 -inf; 2 0 0; -inf 3 1");
        let mut b = a.permute_columns(&[2, 0, 1]);
        for (j, s) in ["1/2", "-3", "7"].iter().enumerate() {
            let s: TropScalar = s.parse().unwrap();
            for i in 0..3 {
                let x = b.get(i, j).otimes(&s);
                b.set(i, j, x);
            }
        }
        assert!(d(&a, &b).holds);
    }

    #[test]
    fn transpose_examples() {
        for a in [
            "0 1; 2 0",
            "0 -inf; 3 1",
            "0 1 2; -inf 0 5; 1 1 -inf",
            "-inf -inf; 0 -inf",
        ] {
            let a = m(a);
            assert!(d(&a, &a.transpose()).holds, "{a}");
        }
    }

    #[test]
    fn basis_size_mismatch() {
        let v = d(&TropMatrix::identity(2), &m("0 0; 0 0"));
        assert!(!v.holds);
        assert_eq!(
            v.refutation,
            vec!["weak bases of C(A) and C(B) have 2 and 1 elements"]
        );
    }

    #[test]
    fn zero_matrices_form_their_own_class() {
        let z = TropMatrix::zero(2, 2);
        assert!(d(&z, &z).holds);
        assert!(!d(&z, &m("0 -inf; -inf -inf")).holds);
    }

    #[test]
    fn non_isomorphic_planes() {
        // T^2 versus a two-generator strip.
        let v = d(&TropMatrix::identity(2), &m("0 0; 0 1"));
        assert!(!v.holds);
        assert!(!v.refutation.is_empty());
    }

    #[test]
    fn guards() {
        let a = m("0 inf; 0 0");
        let err = rel_d(&a, &a, Domain::Completed, &DOptions::default()).unwrap_err();
        assert_eq!(err.to_string(), "relation D requires entries in T");

        let big = TropMatrix::identity(11);
        assert!(matches!(
            rel_d(&big, &big, Domain::Tropical, &DOptions::default()),
            Err(TropError::SizeGuard(_))
        ));
        assert!(
            rel_d(&big, &big, Domain::Tropical, &DOptions::unguarded())
                .unwrap()
                .holds
        );
    }

    #[test]
    fn potentials_detect_conflicts() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let mut p = Potentials::new(3);
        assert!(p.relate(0, 1, q(2)));
        assert!(p.relate(1, 2, q(3)));
        assert_eq!(p.value(0) - p.value(2), q(5));
        assert!(p.relate(0, 2, q(5)));
        assert!(!p.relate(2, 0, q(5)));
    }
}
