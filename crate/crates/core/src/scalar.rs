//! Scalars of the completed max-plus semiring.
//!
//! A [`TropScalar`] is an exact rational, `-inf` or `inf`. The finitary
//! semiring uses only the rationals, the tropical semiring adds `-inf`, and
//! the completed semiring adds `inf` as well. All three share one arithmetic
//! kernel; [`Domain`] classifies which of them a value (or a matrix) lives in.
//!
//! | op | meaning | identity |
//! |----|---------|----------|
//! | `oplus` | max | `-inf` |
//! | `otimes` | + | `0` |
//!
//! In the completed semiring `inf` absorbs under both operations, except that
//! `(-inf) ⊗ inf = inf ⊗ (-inf) = -inf`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::TropError;

/// An element of the completed tropical semiring.
///
/// The variant order is the semiring order, so the derived `Ord` is the
/// total order `-inf < q < inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    NegInf,
    Finite(BigRational),
    PosInf,
}

/// The smallest of the three semirings containing a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    /// Rationals only.
    Finitary,
    /// Rationals and `-inf`.
    Tropical,
    /// Rationals, `-inf` and `inf`.
    Completed,
}

impl Domain {
    pub fn join(self, other: Domain) -> Domain {
        self.max(other)
    }

    pub fn contains(self, value: &TropScalar) -> bool {
        value.domain() <= self
    }

    pub fn tag(self) -> &'static str {
        match self {
            Domain::Finitary => "ft",
            Domain::Tropical => "t",
            Domain::Completed => "tbar",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Domain {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ft" => Ok(Domain::Finitary),
            "t" => Ok(Domain::Tropical),
            "tbar" => Ok(Domain::Completed),
            other => Err(TropError::parse(1, 1, format!("unknown domain `{other}`"))),
        }
    }
}

impl TropScalar {
    pub fn zero() -> Self {
        TropScalar::NegInf
    }

    /// The multiplicative identity, the rational `0`.
    pub fn one() -> Self {
        TropScalar::Finite(BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        TropScalar::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den` in lowest terms.
    ///
    /// Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        TropScalar::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    pub fn is_pos_inf(&self) -> bool {
        matches!(self, TropScalar::PosInf)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            TropScalar::Finite(_) => Domain::Finitary,
            TropScalar::NegInf => Domain::Tropical,
            TropScalar::PosInf => Domain::Completed,
        }
    }

    /// Tropical sum: the maximum.
    pub fn oplus(&self, other: &TropScalar) -> TropScalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product: ordinary addition, with `-inf` winning against `inf`.
    pub fn otimes(&self, other: &TropScalar) -> TropScalar {
        use TropScalar::*;
        match (self, other) {
            (NegInf, _) | (_, NegInf) => NegInf,
            (PosInf, _) | (_, PosInf) => PosInf,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }

    pub fn leq(&self, other: &TropScalar) -> bool {
        self <= other
    }

    /// Ordinary subtraction of two finite values; `None` if either is infinite.
    pub fn finite_sub(&self, other: &TropScalar) -> Option<BigRational> {
        Some(self.as_finite()? - other.as_finite()?)
    }
}

impl From<BigRational> for TropScalar {
    fn from(q: BigRational) -> Self {
        TropScalar::Finite(q)
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::int(n)
    }
}

impl Neg for TropScalar {
    type Output = TropScalar;

    fn neg(self) -> TropScalar {
        match self {
            TropScalar::NegInf => TropScalar::PosInf,
            TropScalar::PosInf => TropScalar::NegInf,
            TropScalar::Finite(q) => TropScalar::Finite(-q),
        }
    }
}

impl Neg for &TropScalar {
    type Output = TropScalar;

    fn neg(self) -> TropScalar {
        -(self.clone())
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => f.write_str("-inf"),
            TropScalar::PosInf => f.write_str("inf"),
            TropScalar::Finite(q) if q.is_integer() => write!(f, "{}", q.numer()),
            TropScalar::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl FromStr for TropScalar {
    type Err = String;

    /// Accepts `-inf`, `inf`, `+inf`, an optionally signed integer, or `p/q`.
    fn from_str(token: &str) -> Result<Self, Self::Err> {
        match token {
            "-inf" => return Ok(TropScalar::NegInf),
            "inf" | "+inf" => return Ok(TropScalar::PosInf),
            _ => {}
        }
        let (num, den) = match token.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (token, None),
        };
        let num: BigInt = parse_integer(num).ok_or_else(|| format!("invalid scalar `{token}`"))?;
        let den: BigInt = match den {
            Some(d) => {
                if d.starts_with(['+', '-']) {
                    return Err(format!("invalid scalar `{token}`: signed denominator"));
                }
                parse_integer(d).ok_or_else(|| format!("invalid scalar `{token}`"))?
            }
            None => BigInt::from(1),
        };
        if den.is_zero() {
            return Err(format!("invalid scalar `{token}`: zero denominator"));
        }
        Ok(TropScalar::Finite(BigRational::new(num, den)))
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> TropScalar {
        t.parse().unwrap()
    }

    #[test]
    fn oplus_examples() {
        assert_eq!(s("3").oplus(&s("5")), s("5"));
        assert_eq!(s("-inf").oplus(&s("7")), s("7"));
        assert_eq!(s("inf").oplus(&s("2")), s("inf"));
    }

    #[test]
    fn otimes_examples() {
        assert_eq!(s("3").otimes(&s("5")), s("8"));
        assert_eq!(s("-inf").otimes(&s("inf")), s("-inf"));
        assert_eq!(s("inf").otimes(&s("-inf")), s("-inf"));
        assert_eq!(s("inf").otimes(&s("2")), s("inf"));
    }

    #[test]
    fn neg_examples() {
        assert_eq!(-s("3"), s("-3"));
        assert_eq!(-s("-inf"), s("inf"));
        assert_eq!(-(-s("5/2")), s("5/2"));
    }

    #[test]
    fn order_examples() {
        assert!(s("-inf").leq(&s("-1000000")));
        assert!(s("1/3").leq(&s("1/2")));
        assert!(s("inf").leq(&s("inf")));
        assert!(!s("1/2").leq(&s("1/3")));
    }

    #[test]
    fn domains() {
        assert_eq!(s("0").domain(), Domain::Finitary);
        assert_eq!(s("-inf").domain(), Domain::Tropical);
        assert_eq!(s("inf").domain(), Domain::Completed);
        assert!(Domain::Tropical.contains(&s("-inf")));
        assert!(!Domain::Finitary.contains(&s("-inf")));
    }

    #[test]
    fn neg_does_not_distribute_over_completed_product() {
        let lhs = -(s("inf").otimes(&s("-inf")));
        let rhs = s("-inf").otimes(&s("inf"));
        assert_ne!(lhs, rhs);
        let (a, b) = (s("3/4"), s("-2"));
        assert_eq!(-(a.otimes(&b)), (-&a).otimes(&-&b));
    }

    #[test]
    fn parsing_is_canonical() {
        assert_eq!(s("4/6"), s("2/3"));
        assert_eq!(s("-4/2"), s("-2"));
        assert_eq!(s("+3"), s("3"));
        assert_eq!(s("4/6").to_string(), "2/3");
        assert_eq!(s("-4/2").to_string(), "-2");
        for bad in ["", "1/0", "x", "1/-2", "1.5", "--1", "inf/2", "3/"] {
            assert!(bad.parse::<TropScalar>().is_err(), "{bad:?} parsed");
        }
    }
}
