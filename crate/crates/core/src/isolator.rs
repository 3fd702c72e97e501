//! Real-root isolation on an interval by bisection, certifying with the
//! sign-variation count of the Möbius transform: v = 0 discards an
//! interval, v = 1 certifies it isolating, anything else splits at the
//! exact midpoint.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::{format_rational, Rational};
use crate::regions::IntervalLR;
use crate::signs::sign_changes;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsolatorConfig {
    /// Safety bound on the bisection depth. Termination is guaranteed for
    /// squarefree input, but unbounded recursion is not a failure mode we
    /// accept from bad callers.
    pub max_depth: u32,
}

impl Default for IsolatorConfig {
    fn default() -> Self {
        Self { max_depth: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolationResult {
    /// Roots hit exactly at bisection midpoints, ascending.
    pub exact_roots: Vec<Rational>,
    /// Disjoint open intervals, ascending, each certified to hold exactly
    /// one root by a sign-variation count of 1.
    pub intervals: Vec<(Rational, Rational)>,
    pub depth_reached: u32,
    pub node_count: u64,
}

/// The Descartes bound v for p on (l, r): sign variations of the Möbius
/// transform's coefficients. v bounds the number of roots in (l, r) from
/// above and has the same parity as that count.
pub fn descartes_count(p: &Polynomial, iv: &IntervalLR) -> Result<usize> {
    Ok(sign_changes(p.mobius(iv.l(), iv.r())?.coeffs()))
}

/// Isolates the real roots of a squarefree p on (l, r). Requires that
/// neither endpoint is a root; hits at interior bisection points are
/// reported exactly.
pub fn isolate(p: &Polynomial, iv: &IntervalLR, cfg: &IsolatorConfig) -> Result<IsolationResult> {
    if cfg.max_depth == 0 {
        return Err(Error::InvalidArgument(
            "max_depth must be at least 1".into(),
        ));
    }
    if p.is_zero() {
        return Err(Error::InvalidArgument(
            "cannot isolate roots of zero".into(),
        ));
    }
    if !p.is_squarefree()? {
        return Err(Error::NotSquarefree);
    }
    if p.is_root(iv.l()) || p.is_root(iv.r()) {
        return Err(Error::InvalidArgument(format!(
            "endpoint of {} is a root; shrink the interval first",
            iv
        )));
    }

    let mut exact_roots: Vec<Rational> = Vec::new();
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    let mut depth_reached = 0u32;
    let mut node_count = 0u64;

    // left-first depth-first traversal; results are sorted at the end anyway
    let mut stack: Vec<(Rational, Rational, u32)> = vec![(iv.l().clone(), iv.r().clone(), 0)];
    let mut exhausted = false;
    while let Some((lo, hi, depth)) = stack.pop() {
        node_count += 1;
        depth_reached = depth_reached.max(depth);
        let sub = IntervalLR::new(lo.clone(), hi.clone()).expect("bisection keeps lo < hi");
        let v = descartes_count(p, &sub)?;
        match v {
            0 => {}
            1 => intervals.push((lo, hi)),
            _ => {
                if depth >= cfg.max_depth {
                    exhausted = true;
                    break;
                }
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if p.is_root(&mid) {
                    exact_roots.push(mid.clone());
                }
                stack.push((mid.clone(), hi, depth + 1));
                stack.push((lo, mid, depth + 1));
            }
        }
    }

    exact_roots.sort();
    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    let result = IsolationResult {
        exact_roots,
        intervals,
        depth_reached,
        node_count,
    };
    if exhausted {
        return Err(Error::DepthExhausted {
            max_depth: cfg.max_depth,
            partial: Box::new(result),
        });
    }
    Ok(result)
}

/// Convenience entry point that passes to the squarefree part first,
/// returning the polynomial actually isolated alongside the result.
pub fn isolate_squarefree_part(
    p: &Polynomial,
    iv: &IntervalLR,
    cfg: &IsolatorConfig,
) -> Result<(Polynomial, IsolationResult)> {
    let reduced = p.squarefree_part()?;
    let result = isolate(&reduced, iv, cfg)?;
    Ok((reduced, result))
}

impl IsolationResult {
    /// True when `x` lies in one of the isolating intervals.
    pub fn covers(&self, x: &Rational) -> bool {
        self.exact_roots.contains(x) || self.intervals.iter().any(|(lo, hi)| lo < x && x < hi)
    }

    pub fn root_count(&self) -> usize {
        self.exact_roots.len() + self.intervals.len()
    }

    pub fn describe(&self) -> String {
        let mut out = String::new();
        if self.exact_roots.is_empty() {
            out.push_str("exact roots: (none)\n");
        } else {
            out.push_str("exact roots:");
            for r in &self.exact_roots {
                out.push(' ');
                out.push_str(&format_rational(r));
            }
            out.push('\n');
        }
        if self.intervals.is_empty() {
            out.push_str("isolating intervals: (none)\n");
        } else {
            out.push_str("isolating intervals:\n");
            for (lo, hi) in &self.intervals {
                out.push_str(&format!(
                    "  ({}, {})\n",
                    format_rational(lo),
                    format_rational(hi)
                ));
            }
        }
        out.push_str(&format!(
            "depth reached: {}\nnodes visited: {}\n",
            self.depth_reached, self.node_count
        ));
        out
    }
}

/// Signs of p at the endpoints straddle zero: an independent witness that an
/// open interval holds a root of odd multiplicity.
pub fn sign_straddles(p: &Polynomial, lo: &Rational, hi: &Rational) -> bool {
    let a = p.eval(lo);
    let b = p.eval(hi);
    (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive())
}
