//! Exact rational scalars and points of the complexified field.
//!
//! `Rational` is an arbitrary-precision fraction kept canonical (reduced,
//! positive denominator) by construction. `ComplexRational` is a pair
//! (re, im) of rationals; it is the computable stand-in for the algebraic
//! extension R[i].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0; intended for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0, or +1.
pub fn rat_sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Canonical text form: `num` when the denominator is 1, else `num/den`.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `int` or `int/int` (denominator strictly positive), ignoring
/// whitespace. Round-trips with [`format_rational`] bit-exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num_str, den_str) = match compact.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (compact.as_str(), None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {compact:?}")))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {compact:?}")))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {compact:?}")));
    }
    if den.is_negative() {
        return Err(Error::Parse(format!(
            "denominator must be positive in {compact:?}"
        )));
    }
    Ok(Rational::new(num, den))
}

/// A point re + im·i with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// re² + im², the squared modulus.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact complex division; errors on a zero divisor.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let n = other.norm_sq();
        if n.is_zero() {
            return Err(Error::InvalidArgument("complex division by zero".into()));
        }
        let re = (&self.re * &other.re + &self.im * &other.im) / &n;
        let im = (&self.im * &other.re - &self.re * &other.im) / &n;
        Ok(Self::new(re, im))
    }
}

impl Add for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else if self.im.is_negative() {
            write!(
                f,
                "{}-{}i",
                format_rational(&self.re),
                format_rational(&-self.im.clone())
            )
        } else {
            write!(
                f,
                "{}+{}i",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        }
    }
}
