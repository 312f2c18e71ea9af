use crate::{Error, Int, Result};
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rational number, always stored in lowest terms with positive
/// denominator.
///
/// The canonical wire form is `num/den`, shortened to `num` when the
/// denominator is 1; both `Display` and `FromStr` use it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` reduced to lowest terms. Fails on `den == 0`.
    pub fn new(num: Int, den: Int) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_int(n: Int) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an integer, when the denominator is 1.
    pub fn to_int(&self) -> Option<Int> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; fails on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(Int::from(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Division panics on a zero divisor; use [`Rational::recip`] to fail
    /// gracefully.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            Int::from_str(t.trim()).map_err(|_| Error::InvalidInput("malformed integer literal"))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational::from_int(parse_int(s)?)),
        }
    }
}

/// Reduces `num/den` to canonical form; the operation behind [`Rational::new`],
/// kept as a free function for discoverability.
pub fn normalize(num: Int, den: Int) -> Result<Rational> {
    Rational::new(num, den)
}

#[allow(unused_imports)]
use alloc::string::ToString as _;

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(Int::from(n), Int::from(d)).unwrap()
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &Int::from(-3));
        assert_eq!(x.denom(), &Int::from(2));
    }

    #[test]
    fn zero_is_canonical() {
        let x = r(0, 7);
        assert_eq!(x.numer(), &Int::from(0));
        assert_eq!(x.denom(), &Int::from(1));
    }

    #[test]
    fn already_reduced() {
        let x = r(27, 1);
        assert_eq!(x.numer(), &Int::from(27));
        assert_eq!(x.denom(), &Int::from(1));
        assert!(x.is_integer());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rational::new(Int::from(1), Int::from(0)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn display_round_trip() {
        for x in [r(-3, 2), r(5, 1), r(0, 3), r(22, 7)] {
            let s = x.to_string();
            assert_eq!(s.parse::<Rational>().unwrap(), x);
        }
        assert_eq!(r(5, 1).to_string(), "5");
        assert_eq!(r(-3, 2).to_string(), "-3/2");
    }
}
