//! Sign-variation counting on coefficient sequences, and Bernstein
//! coefficients with an independent basis-expansion oracle.
//!
//! `changes` deliberately mirrors the recursion
//! `changes (a :: q) = (a * head q < 0) + changes q` (head of the empty
//! tail reads as 0), so it undercounts across zero entries: `[-1, 0, 1]`
//! yields 0. Correctness-facing callers want [`sign_changes`], which
//! filters zeros first.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::{format_rational, Rational};

/// Number of adjacent pairs with strictly negative product, zeros included.
pub fn changes(s: &[Rational]) -> usize {
    s.windows(2)
        .filter(|w| {
            (w[0].is_positive() && w[1].is_negative()) || (w[0].is_negative() && w[1].is_positive())
        })
        .count()
}

/// The subsequence of nonzero entries, order preserved.
pub fn seqn0(s: &[Rational]) -> Vec<Rational> {
    s.iter().filter(|x| !x.is_zero()).cloned().collect()
}

/// changes after filtering zeros: the sign-variation count proper.
pub fn sign_changes(s: &[Rational]) -> usize {
    changes(&seqn0(s))
}

/// s without its first and last items.
pub fn mid(s: &[Rational]) -> &[Rational] {
    if s.len() <= 2 {
        &[]
    } else {
        &s[1..s.len() - 1]
    }
}

/// Pointwise product of two equal-length sequences.
pub fn seqmul(s: &[Rational], t: &[Rational]) -> Result<Vec<Rational>> {
    if s.len() != t.len() {
        return Err(Error::InvalidArgument(format!(
            "seqmul length mismatch: {} vs {}",
            s.len(),
            t.len()
        )));
    }
    Ok(s.iter().zip(t).map(|(a, b)| a * b).collect())
}

pub fn all_pos(s: &[Rational]) -> bool {
    s.iter().all(Rational::is_positive)
}

pub fn all_neq0(s: &[Rational]) -> bool {
    s.iter().all(|x| !x.is_zero())
}

/// Weakly increasing: each adjacent pair is ≤-ordered.
pub fn increasing(s: &[Rational]) -> bool {
    s.windows(2).all(|w| w[0] <= w[1])
}

/// The sequence p_k/p_{k+1} - a for k = 0..deg p - 1. Requires every
/// coefficient nonzero (callers use it for all-positive polynomials).
pub fn spseq(p: &Polynomial, a: &Rational) -> Result<Vec<Rational>> {
    if p.coeffs().iter().any(Rational::is_zero) {
        return Err(Error::InvalidArgument(
            "spseq requires nonzero coefficients".into(),
        ));
    }
    Ok(p.coeffs().windows(2).map(|w| &w[0] / &w[1] - a).collect())
}

/// Exact binomial coefficient via the Pascal recurrence.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one()];
        for j in 1..row.len() {
            next.push(&row[j - 1] + &row[j]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row[k].clone()
}

/// Coefficients of a polynomial in the Bernstein basis of degree n on (l, r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinCoeffs {
    pub n: usize,
    pub l: Rational,
    pub r: Rational,
    pub b: Vec<Rational>,
}

/// The unique b with p = Σ b_i·B_{n,i,l,r}, computed from the Möbius
/// transform of p at degree bound n: b_i = c_{n-i} / C(n, i).
pub fn bernstein_coeffs(
    p: &Polynomial,
    l: &Rational,
    r: &Rational,
    n: usize,
) -> Result<BernsteinCoeffs> {
    if l >= r {
        return Err(Error::InvalidArgument(format!(
            "bernstein basis needs l < r, got l = {}, r = {}",
            format_rational(l),
            format_rational(r)
        )));
    }
    if p.is_zero() {
        return Ok(BernsteinCoeffs {
            n,
            l: l.clone(),
            r: r.clone(),
            b: vec![Rational::zero(); n + 1],
        });
    }
    let deg = p.degree().expect("nonzero");
    if deg > n {
        return Err(Error::InvalidArgument(format!(
            "degree {deg} exceeds basis degree {n}"
        )));
    }
    let q = p.mobius_with_bound(l, r, n)?;
    let b = (0..=n)
        .map(|i| q.coeff(n - i) / Rational::from_integer(binomial(n, i)))
        .collect();
    Ok(BernsteinCoeffs {
        n,
        l: l.clone(),
        r: r.clone(),
        b,
    })
}

/// Expands Σ b_i·B_{n,i,l,r} in the monomial basis by direct polynomial
/// arithmetic. Independent of the Möbius route on purpose: it is the oracle
/// that keeps [`bernstein_coeffs`] honest.
pub fn bernstein_expand(bc: &BernsteinCoeffs) -> Polynomial {
    let n = bc.n;
    let x_minus_l = Polynomial::new(vec![-bc.l.clone(), Rational::one()]);
    let r_minus_x = Polynomial::new(vec![bc.r.clone(), -Rational::one()]);
    // (X-l)^i and (r-X)^(n-i), built incrementally
    let mut lo_pows = Vec::with_capacity(n + 1);
    let mut hi_pows = Vec::with_capacity(n + 1);
    lo_pows.push(Polynomial::one());
    hi_pows.push(Polynomial::one());
    for i in 1..=n {
        lo_pows.push(&lo_pows[i - 1] * &x_minus_l);
        hi_pows.push(&hi_pows[i - 1] * &r_minus_x);
    }
    let mut sum = Polynomial::zero();
    for (i, b) in bc.b.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let coeff = b * &Rational::from_integer(binomial(n, i));
        let term = (&lo_pows[i] * &hi_pows[n - i]).scale(&coeff);
        sum = &sum + &term;
    }
    let width_n = (&bc.r - &bc.l).pow(n as i32);
    sum.scale(&width_n.recip())
}
