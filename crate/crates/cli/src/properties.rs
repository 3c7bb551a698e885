//! The property catalog: one generator and one checker per property.
//!
//! Generators draw an [`Instance`] from a [`Sampler`]; checkers read only the
//! instance, so a saved counterexample replays without the generator.

use trop_core::convex::{extend_iso_eval, extended_equal, principal_solution};
use trop_core::duality::{kernel_witness, row_dot, theta, theta_prime, SpanCheck};
use trop_core::greens::{
    decide, definitize_witness_t, finitize_witness_ft, leq_l, leq_r, rel, rel_d, DOptions, Witness,
};
use trop_core::{
    ConvexSpan, Domain, ExtendedPair, GreenVerdict, IsoDescriptor, Relation, TropMatrix,
    TropScalar, TropVector,
};

use crate::instance::Instance;
use crate::oracle::{to_small, DOracle};
use crate::sample::Sampler;

pub type Check = Result<(), String>;

pub struct Property {
    pub id: &'static str,
    pub title: &'static str,
    pub default_trials: usize,
    pub default_dims: (usize, usize),
    pub generate: fn(&mut Sampler) -> Instance,
    pub check: fn(&Instance) -> Check,
}

pub const CATALOG: [Property; 15] = [
    Property {
        id: "P1",
        title: "bracket closed form",
        default_trials: 1000,
        default_dims: (1, 8),
        generate: gen_pair,
        check: check_bracket_closed_form,
    },
    Property {
        id: "P2",
        title: "bracket sign change",
        default_trials: 1000,
        default_dims: (1, 8),
        generate: gen_pair,
        check: check_sign_change,
    },
    Property {
        id: "P3",
        title: "order via bracket",
        default_trials: 1000,
        default_dims: (1, 8),
        generate: gen_pair,
        check: check_order_bracket,
    },
    Property {
        id: "P4",
        title: "extended metric axioms",
        default_trials: 1000,
        default_dims: (1, 8),
        generate: gen_triple,
        check: check_metric,
    },
    Property {
        id: "P5",
        title: "duality round trip",
        default_trials: 1000,
        default_dims: (2, 6),
        generate: gen_duality,
        check: check_round_trip,
    },
    Property {
        id: "P6",
        title: "anti-isomorphism laws",
        default_trials: 1000,
        default_dims: (2, 6),
        generate: gen_duality,
        check: check_anti_iso,
    },
    Property {
        id: "P7",
        title: "antitone duality",
        default_trials: 1000,
        default_dims: (2, 6),
        generate: gen_duality,
        check: check_antitone,
    },
    Property {
        id: "P8",
        title: "duality isometry",
        default_trials: 1000,
        default_dims: (2, 6),
        generate: gen_duality,
        check: check_isometry,
    },
    Property {
        id: "P9",
        title: "change of coordinates",
        default_trials: 1000,
        default_dims: (1, 5),
        generate: gen_coords,
        check: check_coords,
    },
    Property {
        id: "P10",
        title: "kernel witness",
        default_trials: 1000,
        default_dims: (1, 5),
        generate: gen_kernel,
        check: check_kernel,
    },
    Property {
        id: "P11",
        title: "green order consistency",
        default_trials: 1000,
        default_dims: (1, 4),
        generate: gen_green,
        check: check_green,
    },
    Property {
        id: "P12",
        title: "inheritance and witness transfer",
        default_trials: 1000,
        default_dims: (1, 4),
        generate: gen_inherit,
        check: check_inherit,
    },
    Property {
        id: "P13",
        title: "D on constructed pairs and transposes",
        default_trials: 500,
        default_dims: (2, 5),
        generate: gen_d_family,
        check: check_d_family,
    },
    Property {
        id: "P14",
        title: "extension calculus",
        default_trials: 1000,
        default_dims: (2, 4),
        generate: gen_extension,
        check: check_extension,
    },
    Property {
        id: "P15",
        title: "2x2 D oracle agreement",
        default_trials: 2000,
        default_dims: (2, 2),
        generate: gen_d_small,
        check: check_d_small,
    },
];

pub fn find(id: &str) -> Option<&'static Property> {
    CATALOG.iter().find(|p| p.id.eq_ignore_ascii_case(id))
}

fn ok<T>(r: trop_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const ALL_DOMAINS: [Domain; 3] = [Domain::Finitary, Domain::Tropical, Domain::Completed];

// ---- P1-P3: brackets ----

fn gen_pair(s: &mut Sampler) -> Instance {
    let n = s.dim();
    Instance::new("")
        .vector("x", s.row(n, Domain::Completed))
        .vector("y", s.row(n, Domain::Completed))
}

fn pair(inst: &Instance) -> Result<(&TropVector, &TropVector), String> {
    Ok((inst.get_vector("x")?, inst.get_vector("y")?))
}

/// The greatest `l` with `l x <= y`, found among the values it can take.
fn bracket_by_search(x: &TropVector, y: &TropVector) -> TropScalar {
    let mut candidates = vec![TropScalar::NegInf, TropScalar::PosInf];
    candidates.extend(
        x.iter()
            .zip(y.iter())
            .filter_map(|(a, b)| b.finite_sub(a).map(TropScalar::Finite)),
    );
    candidates
        .into_iter()
        .filter(|l| x.iter().zip(y.iter()).all(|(a, b)| l.otimes(a) <= *b))
        .max()
        .expect("-inf always qualifies")
}

fn check_bracket_closed_form(inst: &Instance) -> Check {
    let (x, y) = pair(inst)?;
    let b = ok(x.bracket(y))?;
    let want = bracket_by_search(x, y);
    ensure!(b == want, "<x|y> = {b}, search gives {want}");
    ensure!(ok(x.scale(&b).leq(y))?, "<x|y> x is not below y");
    if b.is_finite() {
        let above = b.otimes(&TropScalar::ratio(1, 7));
        ensure!(!ok(x.scale(&above).leq(y))?, "<x|y> is not the greatest");
    }
    Ok(())
}

fn check_sign_change(inst: &Instance) -> Check {
    let (x, y) = pair(inst)?;
    let (l, r) = (ok(x.bracket(y))?, ok(y.neg().bracket(&x.neg()))?);
    ensure!(l == r, "<x|y> = {l} but <-y|-x> = {r}");
    Ok(())
}

fn check_order_bracket(inst: &Instance) -> Check {
    let (x, y) = pair(inst)?;
    let leq = ok(x.leq(y))?;
    let b = ok(x.bracket(y))?;
    ensure!(
        leq == (TropScalar::int(0) <= b),
        "x <= y is {leq} but <x|y> = {b}"
    );
    Ok(())
}

// ---- P4: metric ----

fn gen_triple(s: &mut Sampler) -> Instance {
    let n = s.dim();
    Instance::new("")
        .vector("x", s.row(n, Domain::Completed))
        .vector("y", s.row(n, Domain::Completed))
        .vector("z", s.row(n, Domain::Completed))
        .scalar("l", s.finite())
        .scalar("m", s.finite())
}

fn check_metric(inst: &Instance) -> Check {
    let (x, y, z) = (
        inst.get_vector("x")?,
        inst.get_vector("y")?,
        inst.get_vector("z")?,
    );
    let (l, m) = (inst.get_scalar("l")?, inst.get_scalar("m")?);
    let d = |a: &TropVector, b: &TropVector| ok(a.hilbert(b));
    let zero = TropScalar::int(0);
    let (xy, yz, xz) = (d(x, y)?, d(y, z)?, d(x, z)?);
    ensure!(xy >= zero, "d(x,y) = {xy} is negative");
    ensure!(d(x, x)? == zero, "d(x,x) is not 0");
    ensure!(xy == d(y, x)?, "d is not symmetric");
    ensure!(
        xz <= xy.otimes(&yz),
        "d(x,z) = {xz} exceeds d(x,y) + d(y,z) = {}",
        xy.otimes(&yz)
    );
    let scaled = d(&x.scale(l), &y.scale(m))?;
    ensure!(scaled == xy, "d(lx,my) = {scaled} but d(x,y) = {xy}");
    Ok(())
}

// ---- P5-P8: duality ----

/// `A` with two row-space members `x1 <= x2` and two column-space members
/// `y1 <= y2`. A third of the instances are entirely finite.
fn gen_duality(s: &mut Sampler) -> Instance {
    let (p, q) = (s.dim(), s.dim());
    let domain = if s.coin(1.0 / 3.0) {
        Domain::Finitary
    } else {
        Domain::Completed
    };
    let a = s.matrix(p, q, domain);
    let rows = a.row_vectors();
    let cols = a.column_vectors();
    let x1 = s.combination(&rows, domain);
    let x2 = x1.oplus(&s.combination(&rows, domain)).expect("shape");
    let y1 = s.combination(&cols, domain);
    let y2 = y1.oplus(&s.combination(&cols, domain)).expect("shape");
    Instance::new("")
        .matrix("A", a)
        .vector("x1", x1)
        .vector("x2", x2)
        .vector("y1", y1)
        .vector("y2", y2)
        .scalar("l", s.finite())
}

struct Duality<'a> {
    a: &'a TropMatrix,
    x: [&'a TropVector; 2],
    y: [&'a TropVector; 2],
}

impl<'a> Duality<'a> {
    fn read(inst: &'a Instance) -> Result<Self, String> {
        Ok(Duality {
            a: inst.get_matrix("A")?,
            x: [inst.get_vector("x1")?, inst.get_vector("x2")?],
            y: [inst.get_vector("y1")?, inst.get_vector("y2")?],
        })
    }

    fn theta(&self, x: &TropVector) -> Result<TropVector, String> {
        ok(theta(self.a, x, SpanCheck::Strict))
    }

    fn theta_prime(&self, y: &TropVector) -> Result<TropVector, String> {
        ok(theta_prime(self.a, y, SpanCheck::Strict))
    }
}

fn check_round_trip(inst: &Instance) -> Check {
    let d = Duality::read(inst)?;
    let finite = d.a.domain() == Domain::Finitary;
    let cspan = ok(ConvexSpan::column_space(d.a, Domain::Completed))?;
    let rspan = ok(ConvexSpan::row_space(d.a, Domain::Completed))?;
    for x in d.x {
        let tx = d.theta(x)?;
        ensure!(ok(cspan.contains(&tx))?, "theta(x) = ({tx}) is not in C(A)");
        let back = d.theta_prime(&tx)?;
        ensure!(back == *x, "theta'(theta(x)) = ({back}) but x = ({x})");
        if finite && x.domain() == Domain::Finitary {
            ensure!(
                tx.domain() == Domain::Finitary,
                "finite x maps to non-finite ({tx})"
            );
        }
    }
    for y in d.y {
        let ty = d.theta_prime(y)?;
        ensure!(
            ok(rspan.contains(&ty))?,
            "theta'(y) = ({ty}) is not in R(A)"
        );
        let back = d.theta(&ty)?;
        ensure!(back == *y, "theta(theta'(y)) = ({back}) but y = ({y})");
        if finite && y.domain() == Domain::Finitary {
            ensure!(
                ty.domain() == Domain::Finitary,
                "finite y maps to non-finite ({ty})"
            );
        }
    }
    Ok(())
}

fn check_anti_iso(inst: &Instance) -> Check {
    let d = Duality::read(inst)?;
    let l = inst.get_scalar("l")?;
    let [x1, x2] = d.x;
    let (t1, t2) = (d.theta(x1)?, d.theta(x2)?);
    for (u, v, tu, tv) in [(x1, x2, &t1, &t2), (x2, x1, &t2, &t1)] {
        let (lhs, rhs) = (ok(u.bracket(v))?, ok(tv.bracket(tu))?);
        ensure!(lhs == rhs, "<x|x'> = {lhs} but <theta x'|theta x> = {rhs}");
    }
    let scaled = d.theta(&x1.scale(l))?;
    ensure!(
        scaled == t1.scale(&-l),
        "theta(l x) = ({scaled}) is not -l theta(x)"
    );
    let [y1, y2] = d.y;
    let (s1, s2) = (d.theta_prime(y1)?, d.theta_prime(y2)?);
    let (lhs, rhs) = (ok(y1.bracket(y2))?, ok(s2.bracket(&s1))?);
    ensure!(
        lhs == rhs,
        "<y|y'> = {lhs} but <theta' y'|theta' y> = {rhs}"
    );
    let scaled = d.theta_prime(&y1.scale(l))?;
    ensure!(
        scaled == s1.scale(&-l),
        "theta'(l y) = ({scaled}) is not -l theta'(y)"
    );
    Ok(())
}

fn check_antitone(inst: &Instance) -> Check {
    let d = Duality::read(inst)?;
    let [x1, x2] = d.x;
    ensure!(ok(x1.leq(x2))?, "instance does not satisfy x1 <= x2");
    ensure!(
        ok(d.theta(x2)?.leq(&d.theta(x1)?))?,
        "theta(x2) is not below theta(x1)"
    );
    let [y1, y2] = d.y;
    ensure!(ok(y1.leq(y2))?, "instance does not satisfy y1 <= y2");
    ensure!(
        ok(d.theta_prime(y2)?.leq(&d.theta_prime(y1)?))?,
        "theta'(y2) is not below theta'(y1)"
    );
    Ok(())
}

fn check_isometry(inst: &Instance) -> Check {
    let d = Duality::read(inst)?;
    let [x1, x2] = d.x;
    let (before, after) = (
        ok(x1.hilbert(x2))?,
        ok(d.theta(x1)?.hilbert(&d.theta(x2)?))?,
    );
    ensure!(
        before == after,
        "d(x1,x2) = {before} but d(theta x1, theta x2) = {after}"
    );
    let [y1, y2] = d.y;
    let (before, after) = (
        ok(y1.hilbert(y2))?,
        ok(d.theta_prime(y1)?.hilbert(&d.theta_prime(y2)?))?,
    );
    ensure!(
        before == after,
        "d(y1,y2) = {before} but d(theta' y1, theta' y2) = {after}"
    );
    Ok(())
}

// ---- P9-P10 ----

fn gen_coords(s: &mut Sampler) -> Instance {
    let n = s.dim();
    let k = s.dim();
    let mut inst = Instance::new("");
    let mut gens = Vec::new();
    for i in 0..k {
        let g = s.row(n, Domain::Completed);
        gens.push(g.clone());
        inst = inst.vector(&format!("r{i}"), g);
    }
    let inside_a = s.combination(&gens, Domain::Completed);
    let inside_b = s.combination(&gens, Domain::Completed);
    inst.vector("a", s.row(n, Domain::Completed))
        .vector("b", s.row(n, Domain::Completed))
        .vector("a_in", inside_a)
        .vector("b_in", inside_b)
}

fn check_coords(inst: &Instance) -> Check {
    let gens = inst.vectors_with_prefix("r");
    ensure!(!gens.is_empty(), "instance has no generators");
    let span = ok(ConvexSpan::new(gens, Domain::Completed))?;
    let cv = |v: &TropVector| ok(span.principal_coeffs(v)).map(TropVector::row);
    let (a, b) = (inst.get_vector("a")?, inst.get_vector("b")?);
    let (lhs, rhs) = (ok(a.bracket(b))?, ok(cv(a)?.bracket(&cv(b)?))?);
    ensure!(lhs <= rhs, "<a|b> = {lhs} exceeds <a'|b'> = {rhs}");
    let (a, b) = (inst.get_vector("a_in")?, inst.get_vector("b_in")?);
    let (lhs, rhs) = (ok(a.bracket(b))?, ok(cv(a)?.bracket(&cv(b)?))?);
    ensure!(
        lhs == rhs,
        "inside the span <a|b> = {lhs} but <a'|b'> = {rhs}"
    );
    Ok(())
}

fn gen_kernel(s: &mut Sampler) -> Instance {
    for _ in 0..64 {
        let (p, q) = (s.dim(), s.dim());
        let b = s.matrix(p, q, Domain::Completed);
        let span = ConvexSpan::row_space(&b, Domain::Completed).expect("row space");
        for _ in 0..4 {
            let z = s.row(q, Domain::Completed);
            if !span.contains(&z).expect("same dimension") {
                return Instance::new("").matrix("B", b).vector("z", z);
            }
        }
    }
    let q = s.dim();
    Instance::new("")
        .matrix("B", TropMatrix::zero(1, q))
        .vector("z", TropVector::row(vec![TropScalar::int(0); q]))
}

fn check_kernel(inst: &Instance) -> Check {
    let (b, z) = (inst.get_matrix("B")?, inst.get_vector("z")?);
    let span = ok(ConvexSpan::row_space(b, Domain::Completed))?;
    ensure!(!ok(span.contains(z))?, "instance has z in R(B)");
    let (x, y) = ok(kernel_witness(b, z))?;
    let (bx, by) = (ok(b.mul_column(&x))?, ok(b.mul_column(&y))?);
    ensure!(bx == by, "Bx = ({bx}) but By = ({by})");
    let (zx, zy) = (row_dot(z, &x), row_dot(z, &y));
    ensure!(zx != zy, "zx = zy = {zx}");
    Ok(())
}

// ---- P11-P12: Green's orders ----

/// `B X = A` is solvable column by column, tested through the principal
/// solution.
fn solvable(b: &TropMatrix, a: &TropMatrix) -> Result<bool, String> {
    for c in a.column_vectors() {
        let x = ok(principal_solution(b, &c))?;
        if ok(b.mul_column(&x))? != c {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(A, B)` where half the time one side is a multiple of the other.
fn square_pair(s: &mut Sampler, domain: Domain) -> (TropMatrix, TropMatrix) {
    let n = s.dim();
    let b = s.matrix(n, n, domain);
    let x = s.matrix(n, n, domain);
    let a = match s.range(0, 3) {
        0 => b.mul(&x).expect("square"),
        1 => x.mul(&b).expect("square"),
        _ => s.matrix(n, n, domain),
    };
    (a, b)
}

fn gen_green(s: &mut Sampler) -> Instance {
    let domain = ALL_DOMAINS[(s.trial() % 3) as usize];
    let (a, b) = square_pair(s, domain);
    Instance::new("")
        .tag("domain", domain.tag())
        .matrix("A", a)
        .matrix("B", b)
}

fn factor_matrices(v: &GreenVerdict) -> Vec<&TropMatrix> {
    match &v.witness {
        Some(Witness::Factors(fs)) => fs.iter().map(|f| &f.matrix).collect(),
        _ => Vec::new(),
    }
}

fn check_verdict(v: &GreenVerdict, a: &TropMatrix, b: &TropMatrix, domain: Domain) -> Check {
    ensure!(
        ok(v.verify(a, b))?,
        "{} verdict does not verify",
        v.relation
    );
    for m in factor_matrices(v) {
        ensure!(
            m.domain() <= domain,
            "{} witness leaves {}",
            v.relation,
            domain.tag()
        );
    }
    if v.holds {
        ensure!(
            v.witness.is_some(),
            "positive {} verdict has no witness",
            v.relation
        );
    }
    Ok(())
}

fn check_green(inst: &Instance) -> Check {
    let domain: Domain = inst
        .get_tag("domain")?
        .parse()
        .map_err(|e: trop_core::TropError| e.to_string())?;
    let (a, b) = (inst.get_matrix("A")?, inst.get_matrix("B")?);
    let r = ok(leq_r(a, b, domain))?;
    ensure!(
        r.holds == solvable(b, a)?,
        "leq-r says {} against solvability",
        r.holds
    );
    check_verdict(&r, a, b, domain)?;
    let l = ok(leq_l(a, b, domain))?;
    let want = solvable(&b.transpose(), &a.transpose())?;
    ensure!(
        l.holds == want,
        "leq-l says {} against solvability",
        l.holds
    );
    check_verdict(&l, a, b, domain)?;
    let r_back = ok(leq_r(b, a, domain))?.holds;
    let l_back = ok(leq_l(b, a, domain))?.holds;
    for (which, want) in [
        (Relation::R, r.holds && r_back),
        (Relation::L, l.holds && l_back),
        (Relation::H, r.holds && r_back && l.holds && l_back),
    ] {
        let v = ok(rel(a, b, which, domain))?;
        ensure!(
            v.holds == want,
            "{which} says {} against the orders",
            v.holds
        );
        check_verdict(&v, a, b, domain)?;
    }
    Ok(())
}

/// An FT pair, an FT factorisation through a sparse `X`, and a `T` pair
/// whose principal witness may contain `inf`.
fn gen_inherit(s: &mut Sampler) -> Instance {
    let (a, b) = square_pair(s, Domain::Finitary);
    let n = b.rows();
    let bf = s.matrix(n, n, Domain::Finitary);
    let mut x = s.matrix(n, n, Domain::Tropical);
    for j in 0..n {
        if x.col(j).is_zero() {
            let v = s.finite();
            x.set(0, j, v);
        }
    }
    let mut bt = s.matrix(n, n, Domain::Tropical);
    if s.coin(0.5) {
        let j = s.range(0, n - 1);
        for i in 0..n {
            bt.set(i, j, TropScalar::NegInf);
        }
    }
    let xt = s.matrix(n, n, Domain::Tropical);
    Instance::new("")
        .matrix("A", a)
        .matrix("B", b)
        .matrix("Bf", bf)
        .matrix("X", x)
        .matrix("Bt", bt)
        .matrix("Xt", xt)
}

fn principal_matrix(b: &TropMatrix, a: &TropMatrix) -> Result<TropMatrix, String> {
    let cols = a
        .column_vectors()
        .iter()
        .map(|c| ok(principal_solution(b, c)))
        .collect::<Result<Vec<_>, _>>()?;
    ok(TropMatrix::from_column_vectors(&cols))
}

fn check_inherit(inst: &Instance) -> Check {
    let (a, b) = (inst.get_matrix("A")?, inst.get_matrix("B")?);
    for which in Relation::ALL {
        let mut first = None;
        for domain in ALL_DOMAINS {
            let v = ok(decide(which, a, b, domain, &DOptions::default()))?;
            check_verdict(&v, a, b, domain)?;
            let seen = *first.get_or_insert(v.holds);
            ensure!(
                v.holds == seen,
                "{which} changes verdict in {}",
                domain.tag()
            );
        }
    }

    let (bf, x) = (inst.get_matrix("Bf")?, inst.get_matrix("X")?);
    let af = ok(bf.mul(x))?;
    let p = ok(finitize_witness_ft(bf, &af, x))?;
    ensure!(
        p.domain() == Domain::Finitary,
        "finitized witness is not finite"
    );
    ensure!(
        ok(bf.mul(&p))? == af,
        "finitized witness does not re-multiply"
    );

    let (bt, xt) = (inst.get_matrix("Bt")?, inst.get_matrix("Xt")?);
    let at = ok(bt.mul(xt))?;
    let p = principal_matrix(bt, &at)?;
    ensure!(
        ok(bt.mul(&p))? == at,
        "principal witness does not re-multiply"
    );
    let q = ok(definitize_witness_t(bt, &at, &p))?;
    ensure!(
        q.domain() <= Domain::Tropical,
        "definitized witness contains inf"
    );
    ensure!(
        ok(bt.mul(&q))? == at,
        "definitized witness does not re-multiply"
    );
    Ok(())
}

// ---- P13, P15: D ----

fn gen_d_family(s: &mut Sampler) -> Instance {
    let n = s.dim();
    let a = s.matrix(n, n, Domain::Tropical);
    let (p, q) = (s.monomial(n), s.monomial(n));
    let variant = p.mul(&a).and_then(|pa| pa.mul(&q)).expect("square");
    Instance::new("").matrix("A", a).matrix("B", variant)
}

fn check_d(a: &TropMatrix, b: &TropMatrix, what: &str) -> Check {
    let v = ok(rel_d(a, b, Domain::Tropical, &DOptions::default()))?;
    ensure!(ok(v.verify(a, b))?, "{what}: verdict does not verify");
    if !v.holds {
        let why = v.refutation.first().cloned().unwrap_or_default();
        return Err(format!("{what}: D does not hold ({why})"));
    }
    match &v.witness {
        Some(Witness::Bridge { bridge, .. }) => {
            let rows_ok = ok(ok(ConvexSpan::row_space(bridge, Domain::Tropical))?
                .span_equal(&ok(ConvexSpan::row_space(a, Domain::Tropical))?))?;
            let cols_ok = ok(ok(ConvexSpan::column_space(bridge, Domain::Tropical))?
                .span_equal(&ok(ConvexSpan::column_space(b, Domain::Tropical))?))?;
            ensure!(rows_ok && cols_ok, "{what}: bridge spans differ");
            Ok(())
        }
        _ => Err(format!("{what}: positive verdict without a bridge")),
    }
}

fn check_d_family(inst: &Instance) -> Check {
    let (a, b) = (inst.get_matrix("A")?, inst.get_matrix("B")?);
    check_d(a, b, "variant")?;
    check_d(a, &a.transpose(), "transpose")
}

fn gen_d_small(s: &mut Sampler) -> Instance {
    let draw = |s: &mut Sampler| {
        let data = (0..4)
            .map(|_| {
                if s.coin(0.2) {
                    TropScalar::NegInf
                } else {
                    s.int(-2, 2)
                }
            })
            .collect();
        TropMatrix::new(2, 2, data).expect("2x2")
    };
    let a = draw(s);
    let b = draw(s);
    Instance::new("").matrix("A", a).matrix("B", b)
}

/// `rel_d` against the brute-force bridge search.
pub fn agrees_with_oracle(a: &TropMatrix, b: &TropMatrix) -> Check {
    let (sa, sb) = match (to_small(a), to_small(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err("oracle needs 2x2 integer matrices".into()),
    };
    let v = ok(rel_d(a, b, Domain::Tropical, &DOptions::default()))?;
    let bridge = DOracle::standard().bridge(&sa, &sb);
    ensure!(
        v.holds == bridge.is_some(),
        "rel_d says {} but the oracle says {}",
        v.holds,
        bridge.is_some()
    );
    ensure!(ok(v.verify(a, b))?, "verdict does not verify");
    Ok(())
}

fn check_d_small(inst: &Instance) -> Check {
    agrees_with_oracle(inst.get_matrix("A")?, inst.get_matrix("B")?)
}

// ---- P14: extension calculus ----

fn sparse_row(s: &mut Sampler, n: usize) -> TropVector {
    TropVector::row(
        (0..n)
            .map(|_| {
                if s.coin(0.5) {
                    s.finite()
                } else {
                    TropScalar::NegInf
                }
            })
            .collect(),
    )
}

fn gen_extension(s: &mut Sampler) -> Instance {
    let k = s.range(1, 4);
    let (a, b) = (sparse_row(s, k), sparse_row(s, k));
    let (a2, b2) = if s.coin(0.5) {
        let (mu, l) = (s.finite(), s.finite());
        (a.scale(&mu), b.oplus(&a.scale(&l)).expect("shape"))
    } else {
        (sparse_row(s, k), sparse_row(s, k))
    };
    let n = s.dim();
    let mut inst = Instance::new("")
        .vector("a", a)
        .vector("b", b)
        .vector("a2", a2)
        .vector("b2", b2)
        .matrix("E", s.matrix(n, n, Domain::Tropical))
        .matrix("P", s.monomial(n));
    for name in ["ca", "cb", "cc", "cd"] {
        inst = inst.vector(name, s.row(n, Domain::Tropical));
    }
    inst.scalar("mu", s.finite()).scalar("l", s.finite())
}

/// `d_H(a, a') != inf` and `b ⊕ λa = b' ⊕ λa` for a large `λ`.
fn welldef(
    a: &TropVector,
    b: &TropVector,
    a2: &TropVector,
    b2: &TropVector,
) -> Result<bool, String> {
    if ok(a.hilbert(a2))?.is_pos_inf() {
        return Ok(false);
    }
    let top = b
        .iter()
        .chain(b2.iter())
        .filter(|x| x.is_finite())
        .max()
        .cloned();
    let bottom = a.iter().filter(|x| x.is_finite()).min().cloned();
    let lambda = match (top, bottom) {
        (Some(t), Some(m)) => TropScalar::int(1).otimes(&t).otimes(&-m),
        _ => TropScalar::int(1),
    };
    let la = a.scale(&lambda);
    Ok(ok(b.oplus(&la))? == ok(b2.oplus(&la))?)
}

fn pair_of(a: &TropVector, b: &TropVector) -> Result<ExtendedPair, String> {
    ok(ExtendedPair::new(a.clone(), b.clone()))
}

fn check_extension(inst: &Instance) -> Check {
    let (a, b) = (inst.get_vector("a")?, inst.get_vector("b")?);
    let (a2, b2) = (inst.get_vector("a2")?, inst.get_vector("b2")?);
    let (p, q) = (pair_of(a, b)?, pair_of(a2, b2)?);
    let eq = ok(extended_equal(&p, &q))?;
    ensure!(
        eq == welldef(a, b, a2, b2)?,
        "canonical equality says {eq} against the criterion"
    );
    ensure!(
        (p == q) == (p.value() == q.value()),
        "canonical forms disagree with values"
    );

    // g(y) = P y maps C(E) isomorphically onto C(P E).
    let (e, pm) = (inst.get_matrix("E")?, inst.get_matrix("P")?);
    let basis = ok(ConvexSpan::column_space(e, Domain::Tropical))?.weak_basis();
    if basis.is_empty() {
        return Ok(());
    }
    let src = basis.generators().to_vec();
    let dst = src
        .iter()
        .map(|v| ok(pm.mul_column(v)))
        .collect::<Result<Vec<_>, _>>()?;
    let k = src.len();
    let g = ok(IsoDescriptor::new(
        src,
        dst,
        (0..k).collect(),
        vec![TropScalar::int(0); k],
    ))?;
    ensure!(ok(g.is_valid())?, "monomial image is not an isomorphism");
    let comb = |name: &str| -> Result<TropVector, String> {
        let cs = inst.get_vector(name)?;
        ok(basis.combine(&cs.entries()[..k]))
    };
    let (mu, l) = (inst.get_scalar("mu")?, inst.get_scalar("l")?);
    let (ua, ub) = (comb("ca")?, comb("cb")?);
    let x = pair_of(&ua, &ub)?;
    let y = pair_of(&ua.scale(mu), &ok(ub.oplus(&ua.scale(l)))?)?;
    ensure!(x == y, "representatives of one element compare unequal");
    let gx = ok(extend_iso_eval(&g, &x))?;
    ensure!(
        gx == ok(extend_iso_eval(&g, &y))?,
        "g-hat differs on equal inputs"
    );

    let (uc, ud) = (comb("cc")?, comb("cd")?);
    let z = pair_of(&uc, &ud)?;
    let sum = pair_of(&ok(ua.oplus(&uc))?, &ok(ub.oplus(&ud))?)?;
    let gz = ok(extend_iso_eval(&g, &z))?;
    let gsum = pair_of(&ok(gx.a().oplus(gz.a()))?, &ok(gx.b().oplus(gz.b()))?)?;
    ensure!(
        ok(extend_iso_eval(&g, &sum))? == gsum,
        "g-hat is not additive"
    );
    let scaled = pair_of(&ua, &ub.scale(l))?;
    let gscaled = pair_of(gx.a(), &gx.b().scale(l))?;
    ensure!(
        ok(extend_iso_eval(&g, &scaled))? == gscaled,
        "g-hat is not homogeneous"
    );
    Ok(())
}
