//! Normal polynomials: nonnegative, log-concave coefficient sequences whose
//! positive entries run contiguously up to a positive leading coefficient.
//!
//! The recursive predicate [`normal_seq`] is canonical; the four-property
//! check [`normal_via_properties`] is kept as an independent oracle that
//! also reports where a sequence first goes wrong.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::{format_rational, ComplexRational, Rational};
use crate::signs::sign_changes;

/// Recursive normality test on a raw coefficient sequence:
/// - `[]` is not normal;
/// - `[a]` is normal iff 0 < a;
/// - `[a, b]` is normal iff 0 ≤ a and 0 < b;
/// - `a :: b :: c :: _` is normal iff the tail is and either a = 0 or
///   (a·c ≤ b² and 0 < a and 0 < b).
pub fn normal_seq(s: &[Rational]) -> bool {
    match s {
        [] => false,
        [a] => a.is_positive(),
        [a, b] => !a.is_negative() && b.is_positive(),
        [a, b, c, ..] => {
            normal_seq(&s[1..])
                && (a.is_zero() || (a * c <= b * b && a.is_positive() && b.is_positive()))
        }
    }
}

/// Whether the polynomial's coefficient sequence is normal.
pub fn is_normal(p: &Polynomial) -> bool {
    normal_seq(p.coeffs())
}

/// Outcome of the property-based normality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalVerdict {
    pub is_normal: bool,
    /// First index violating one of the defining conditions; present iff
    /// the verdict is negative.
    pub failing_index: Option<usize>,
}

/// Checks the four defining properties directly: all coefficients ≥ 0,
/// leading coefficient > 0, interior log-concavity a_{i-1}·a_{i+1} ≤ a_i²,
/// and no zero after a positive coefficient below the leading one.
pub fn normal_via_properties(p: &Polynomial) -> NormalVerdict {
    let s = p.coeffs();
    if s.is_empty() {
        return NormalVerdict {
            is_normal: false,
            failing_index: Some(0),
        };
    }
    let last = s.len() - 1;
    let mut seen_positive = false;
    for (i, a) in s.iter().enumerate() {
        let fails = a.is_negative()
            || (i == last && !a.is_positive())
            || (i > 0 && i < last && &s[i - 1] * &s[i + 1] > a * a)
            || (a.is_zero() && seen_positive);
        if fails {
            return NormalVerdict {
                is_normal: false,
                failing_index: Some(i),
            };
        }
        if a.is_positive() {
            seen_positive = true;
        }
    }
    NormalVerdict {
        is_normal: true,
        failing_index: None,
    }
}

/// The monic quadratic with roots z and conj(z):
/// X² - 2·Re(z)·X + Re(z)² + Im(z)².
pub fn quad_from_conjugate_pair(z: &ComplexRational) -> Polynomial {
    Polynomial::new(vec![z.norm_sq(), -(&z.re + &z.re), Rational::one()])
}

/// Sign variations of the coefficients of p·(X - a) for a normal p with
/// p(0) ≠ 0 and a > 0. Contractually equal to 1 under those hypotheses.
pub fn normal_changes_value(p: &Polynomial, a: &Rational) -> Result<usize> {
    if !a.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "normal_changes_value needs a > 0, got {}",
            format_rational(a)
        )));
    }
    if !is_normal(p) {
        return Err(Error::InvalidArgument(
            "normal_changes_value needs a normal polynomial".into(),
        ));
    }
    if p.coeff(0).is_zero() {
        return Err(Error::InvalidArgument(
            "normal_changes_value needs p(0) != 0".into(),
        ));
    }
    let factor = Polynomial::new(vec![-a.clone(), Rational::one()]);
    Ok(sign_changes((p * &factor).coeffs()))
}
