//! Dense univariate polynomials over the rationals, with the shift, scale
//! and reciprocal transformations and their composite Möbius transform.
//!
//! Coefficients are stored low-to-high; the zero polynomial is the empty
//! sequence and every constructor strips trailing zeros, so `degree` equals
//! `coeffs.len() - 1` for nonzero polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rational, parse_rational, ComplexRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, stripping trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate X.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// c·X^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Convenience constructor from integer coefficients, low-to-high.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of X^i, zero when i exceeds the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a point of R[i].
    pub fn eval_complex(&self, z: &ComplexRational) -> ComplexRational {
        let mut acc = ComplexRational::zero();
        for c in self.coeffs.iter().rev() {
            let shifted = &acc * z;
            acc = ComplexRational::new(&shifted.re + c, shifted.im);
        }
        acc
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.eval(x).is_zero()
    }

    pub fn is_root_complex(&self, z: &ComplexRational) -> bool {
        self.eval_complex(z).is_zero()
    }

    /// c·p. Scaling by zero annihilates.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// p(X + c), i.e. the Taylor shift of p by c.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        // Horner over X + c: acc <- acc·(X + c) + coeff, high to low.
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for k in (0..self.coeffs.len()).rev() {
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = &next[i + 1] + a;
                next[i] = &next[i] + &(a * c);
            }
            next[0] = &next[0] + &self.coeffs[k];
            acc = next;
        }
        Self::new(acc)
    }

    /// p(cX): coefficient i is multiplied by c^i.
    pub fn scale_x(&self, c: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pw = &pw * c;
            }
            out.push(a * &pw);
        }
        Self::new(out)
    }

    /// X^n·p(1/X) for a degree bound n ≥ deg p: the coefficient sequence is
    /// reversed within n+1 slots (missing high coefficients read as zero).
    /// The result is normalized, so it loses degree exactly when p(0) = 0.
    pub fn reciprocal(&self, n: usize) -> Result<Self> {
        let deg = self
            .degree()
            .ok_or_else(|| Error::InvalidArgument("reciprocal of zero polynomial".into()))?;
        if n < deg {
            return Err(Error::InvalidArgument(format!(
                "reciprocal bound {n} below degree {deg}"
            )));
        }
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[n - i] = a.clone();
        }
        Ok(Self::new(out))
    }

    /// The Möbius transform of p for the interval (l, r): shift by l, scale
    /// by r-l, reverse the coefficients, shift by 1. Its positive roots
    /// correspond to the roots of p in (l, r) under z ↦ (r + lz)/(z + 1).
    pub fn mobius(&self, l: &Rational, r: &Rational) -> Result<Self> {
        let deg = self
            .degree()
            .ok_or_else(|| Error::InvalidArgument("mobius of zero polynomial".into()))?;
        self.mobius_with_bound(l, r, deg)
    }

    /// Möbius transform with an explicit reciprocal degree bound n ≥ deg p
    /// (the bound that matches a Bernstein basis of degree n).
    pub fn mobius_with_bound(&self, l: &Rational, r: &Rational, n: usize) -> Result<Self> {
        if l >= r {
            return Err(Error::InvalidArgument(format!(
                "mobius needs l < r, got l = {}, r = {}",
                format_rational(l),
                format_rational(r)
            )));
        }
        let width = r - l;
        let shifted = self.taylor_shift(l);
        let scaled = shifted.scale_x(&width);
        let reversed = scaled.reciprocal(n)?;
        Ok(reversed.taylor_shift(&Rational::one()))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * Rational::from_integer(i.into()))
            .collect();
        Self::new(out)
    }

    /// p scaled to leading coefficient 1; None for the zero polynomial.
    pub fn monic(&self) -> Option<Self> {
        let lead = self.leading()?;
        Some(self.scale(&lead.recip()))
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let ddeg = divisor
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by zero polynomial".into()))?;
        let dlead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![Rational::zero(); qlen];
        for qi in (0..qlen).rev() {
            let factor = &rem[qi + ddeg] / dlead;
            if !factor.is_zero() {
                for (di, dc) in divisor.coeffs.iter().enumerate() {
                    rem[qi + di] = &rem[qi + di] - &(&factor * dc);
                }
            }
            quot[qi] = factor;
        }
        rem.truncate(ddeg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor. Errors only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidArgument("gcd of two zero polynomials".into()));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            // normalizing each remainder keeps the coefficients small
            let b_monic = b.monic().expect("nonzero");
            let (_, r) = a.div_rem(&b_monic)?;
            a = b_monic;
            b = r;
        }
        Ok(a.monic().expect("nonzero"))
    }

    /// p divided by gcd(p, p'), scaled monic: the same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "squarefree part of zero polynomial".into(),
            ));
        }
        let g = self.gcd(&self.derivative())?;
        let (q, rem) = self.div_rem(&g)?;
        debug_assert!(rem.is_zero());
        Ok(q.monic().expect("nonzero quotient"))
    }

    /// True when gcd(p, p') is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "squarefree test on zero polynomial".into(),
            ));
        }
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }

    /// Yun decomposition into monic squarefree factors with multiplicities,
    /// ascending in multiplicity; degree-zero factors are dropped.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::InvalidArgument(
                "squarefree decomposition of zero polynomial".into(),
            ));
        }
        let monic = self.monic().expect("nonzero");
        if monic.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let deriv = monic.derivative();
        let g = monic.gcd(&deriv)?;
        let mut factors = Vec::new();
        let mut a = monic.div_rem(&g)?.0;
        let mut b = deriv.div_rem(&g)?.0;
        let mut mult = 1u32;
        loop {
            let c = &b - &a.derivative();
            if c.is_zero() {
                if a.degree().unwrap_or(0) > 0 {
                    factors.push((a, mult));
                }
                break;
            }
            let d = a.gcd(&c)?;
            if d.degree().unwrap_or(0) > 0 {
                factors.push((d.clone(), mult));
            }
            a = a.div_rem(&d)?.0;
            b = c.div_rem(&d)?.0;
            if a.degree() == Some(0) {
                break;
            }
            mult += 1;
        }
        Ok(factors)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

/// Text form: comma-separated rationals low-to-high, e.g. `2/9,-1,1` for
/// X² - X + 2/9. The zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let coeffs = compact
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}
