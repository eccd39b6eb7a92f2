//! Coefficient scalars.
//!
//! Everything in this crate is exact: the two scalar types in actual use are
//! [`Rational`] (arbitrary-precision fractions, the "numeric mode") and
//! [`crate::param::ParamFrac`] (fractions of polynomials in the formal
//! parameters, the symbolic default). The polynomial and series machinery is
//! generic over the [`Scalar`] trait so both share one implementation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::param::Param;

/// Exact rational scalar. `BigRational` keeps gcd(|num|, den) = 1 and den > 0
/// as representation invariants.
pub type Rational = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An exact field of coefficients.
///
/// `inv` is fallible (zero has no inverse); everything else is total. The
/// `flatten` hook exposes the additive decomposition of a scalar into
/// rational multiples of parameter monomials, which the canonical text and
/// JSON forms need; scalars that are genuine fractions return `None`.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn inv(&self) -> Result<Self>;

    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat_int(n))
    }

    /// The value as a plain rational, if it contains no parameters.
    fn as_rational(&self) -> Option<Rational>;

    /// Additive decomposition into `(rational, parameter monomial)` pieces,
    /// in the canonical monomial order. `None` if the scalar has a
    /// non-constant denominator.
    fn flatten(&self) -> Option<Vec<(Rational, Vec<(Param, u16)>)>>;

    /// Parse the canonical text form of a scalar.
    fn parse_str(s: &str) -> Result<Self>;

    /// True when the value prints as a single product, so polynomial
    /// printers can inline it without parentheses.
    fn is_single_product(&self) -> bool {
        true
    }

    /// True when the printed form starts with a minus sign.
    fn leading_is_negative(&self) -> bool {
        false
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.inv()?)
    }
}

impl Scalar for Rational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn flatten(&self) -> Option<Vec<(Rational, Vec<(Param, u16)>)>> {
        if self.is_zero() {
            Some(vec![])
        } else {
            Some(vec![(self.clone(), vec![])])
        }
    }

    fn parse_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .unwrap_or(t);
        parse_rational(t)
    }

    fn leading_is_negative(&self) -> bool {
        rational_is_negative(self)
    }
}

/// Canonical text for a rational: `num` or `num/den`.
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{num}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{den}`")))?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// True if the leading sign of the rational is negative (used when joining
/// canonical terms with " + " / " - ").
pub fn rational_is_negative(q: &Rational) -> bool {
    q.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_invariants_survive_arithmetic() {
        let a = rat(4, -6);
        assert_eq!(a, rat(-2, 3));
        assert!(a.denom() > &BigInt::from(0));
        let b = a.clone() + rat(1, 6);
        assert_eq!(b, rat(-1, 2));
        assert_eq!(b.numer(), &BigInt::from(-1));
        assert_eq!(b.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-3", "5/7", "-12/5"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(rational_string(&q), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(rat(2, 3).inv().unwrap(), rat(3, 2));
    }
}
