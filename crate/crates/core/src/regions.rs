//! Exact membership for the disc on diameter (l, r), the union of the two
//! equilateral circumdiscs, the wedge ℬ = {a+bi : a ≤ 0, b² ≤ 3a²}, and the
//! parametric Obreshkoff discs, plus the point map z ↦ (r + lz)/(z + 1)
//! tying them together.
//!
//! Every predicate the theorems rely on is decided exactly: rational sign
//! tests, or `A·√3 + B` signs by squaring. Obreshkoff discs outside the
//! exact cotangent family fall back to certified interval bounds on
//! cot(π/(k+2)) refined by doubling precision up to a budget; only that
//! path can report `Undecided`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rational, rat_sign, ComplexRational, Rational};

/// An open interval (l, r) with l < r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalLR {
    l: Rational,
    r: Rational,
}

impl IntervalLR {
    pub fn new(l: Rational, r: Rational) -> Result<Self> {
        if l >= r {
            return Err(Error::InvalidArgument(format!(
                "interval needs l < r, got ({}, {})",
                format_rational(&l),
                format_rational(&r)
            )));
        }
        Ok(Self { l, r })
    }

    pub fn l(&self) -> &Rational {
        &self.l
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn width(&self) -> Rational {
        &self.r - &self.l
    }

    pub fn midpoint(&self) -> Rational {
        (&self.l + &self.r) / Rational::from_integer(2.into())
    }
}

impl std::fmt::Display for IntervalLR {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {})",
            format_rational(&self.l),
            format_rational(&self.r)
        )
    }
}

/// Verdict of a region membership test. `Undecided` can only come out of
/// the adaptive-precision Obreshkoff path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Outside,
    Boundary,
    Undecided,
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Membership::Inside => "inside",
            Membership::Outside => "outside",
            Membership::Boundary => "boundary",
            Membership::Undecided => "undecided",
        };
        write!(f, "{s}")
    }
}

/// Index of an Obreshkoff disc pair: centers see (l, r) under 2π/(k+2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ObreshkoffIndex(pub u32);

/// Which part of an Obreshkoff disc pair to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscSelect {
    Upper,
    Lower,
    /// Union of the two discs (the Obreshkoff area A_k).
    Area,
    /// Intersection of the two discs (the Obreshkoff lens L_k).
    Lens,
}

/// Precision cap, in bits, for the adaptive cotangent refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionBudget {
    pub max_bits: u32,
}

impl Default for PrecisionBudget {
    fn default() -> Self {
        Self { max_bits: 256 }
    }
}

/// E₀ = x² - (l+r)x + y² + lr; negative exactly inside the disc on
/// diameter (l, r).
fn disc0_form(z: &ComplexRational, iv: &IntervalLR) -> Rational {
    let x = &z.re;
    let y = &z.im;
    x * x - (iv.l() + iv.r()) * x + y * y + iv.r() * iv.l()
}

/// Membership in the open disc with diameter (l, r).
pub fn in_c0(z: &ComplexRational, iv: &IntervalLR) -> Membership {
    membership_from_sign(rat_sign(&disc0_form(z, iv)))
}

fn membership_from_sign(s: i32) -> Membership {
    match s {
        s if s < 0 => Membership::Inside,
        0 => Membership::Boundary,
        _ => Membership::Outside,
    }
}

/// Sign of A·√3 + B, decided exactly by case analysis and squaring.
pub fn surd_sign(a: &Rational, b: &Rational) -> i32 {
    let sa = rat_sign(a);
    let sb = rat_sign(b);
    if sa == 0 {
        return sb;
    }
    if sb == 0 {
        return sa;
    }
    if sa == sb {
        return sa;
    }
    // opposite signs: compare 3A² against B²
    let three_a2 = Rational::from_integer(3.into()) * a * a;
    let b2 = b * b;
    match three_a2.cmp(&b2) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => sb,
    }
}

/// Membership in the union of the two open discs circumscribing the
/// equilateral triangles on base (l, r): inside iff
/// E₀ ∓ (r-l)·y/√3 < 0 for either sign choice.
pub fn in_c12(z: &ComplexRational, iv: &IntervalLR) -> Membership {
    let e0 = disc0_form(z, iv);
    let a = iv.width() * &z.im / Rational::from_integer(3.into());
    let upper = surd_sign(&-a.clone(), &e0);
    let lower = surd_sign(&a, &e0);
    if upper < 0 || lower < 0 {
        Membership::Inside
    } else if upper == 0 || lower == 0 {
        Membership::Boundary
    } else {
        Membership::Outside
    }
}

/// Membership in the closed wedge ℬ = {a+bi : a ≤ 0, b² ≤ 3a²}. Boundary is
/// reported when either inequality is tight.
pub fn in_b(z: &ComplexRational) -> Membership {
    let re_nonpos = !z.re.is_positive();
    let im2 = &z.im * &z.im;
    let three_re2 = Rational::from_integer(3.into()) * &z.re * &z.re;
    if !re_nonpos || im2 > three_re2 {
        return Membership::Outside;
    }
    if z.re.is_zero() || im2 == three_re2 {
        Membership::Boundary
    } else {
        Membership::Inside
    }
}

/// The point map w = (r + l·z)/(z + 1); pole at z = -1.
pub fn mobius_point(z: &ComplexRational, iv: &IntervalLR) -> Result<ComplexRational> {
    let one = ComplexRational::from_real(Rational::one());
    let den = z + &one;
    if den.is_zero() {
        return Err(Error::Pole("mobius point map has a pole at z = -1".into()));
    }
    let num = &ComplexRational::from_real(iv.r().clone())
        + &(&ComplexRational::from_real(iv.l().clone()) * z);
    num.div(&den)
}

/// Inverse of [`mobius_point`]: z = (r - w)/(w - l); pole at w = l.
pub fn inverse_point(w: &ComplexRational, iv: &IntervalLR) -> Result<ComplexRational> {
    let l_pt = ComplexRational::from_real(iv.l().clone());
    let den = w - &l_pt;
    if den.is_zero() {
        return Err(Error::Pole("inverse point map has a pole at w = l".into()));
    }
    let num = &ComplexRational::from_real(iv.r().clone()) - w;
    num.div(&den)
}

/// cot(π/(k+2)) when it lives in ℚ ∪ ℚ·√3.
enum CotExact {
    Rat(Rational),
    /// cot = q·√3
    Sqrt3Times(Rational),
}

fn exact_cot(k: u32) -> Option<CotExact> {
    match k {
        0 => Some(CotExact::Rat(Rational::zero())),
        1 => Some(CotExact::Sqrt3Times(Rational::new(
            BigInt::one(),
            BigInt::from(3),
        ))),
        2 => Some(CotExact::Rat(Rational::one())),
        4 => Some(CotExact::Sqrt3Times(Rational::one())),
        _ => None,
    }
}

/// Membership in one Obreshkoff disc, their union (area A_k), or their
/// intersection (lens L_k). With δ = (r-l)/2 and h = δ·cot(π/(k+2)), the
/// upper disc is E₀ - 2hy < 0 and the lower one E₀ + 2hy < 0. Exact for
/// k ∈ {0, 1, 2, 4}; otherwise decided by interval refinement of the
/// cotangent, `Undecided` if the budget runs out first.
pub fn obreshkoff_membership(
    z: &ComplexRational,
    iv: &IntervalLR,
    k: ObreshkoffIndex,
    which: DiscSelect,
    budget: &PrecisionBudget,
) -> Membership {
    match which {
        DiscSelect::Upper => disc_membership(z, iv, k.0, DiscSide::Upper, budget, false),
        DiscSelect::Lower => disc_membership(z, iv, k.0, DiscSide::Lower, budget, false),
        DiscSelect::Area => combine_area(
            disc_membership(z, iv, k.0, DiscSide::Upper, budget, false),
            disc_membership(z, iv, k.0, DiscSide::Lower, budget, false),
        ),
        DiscSelect::Lens => combine_lens(
            disc_membership(z, iv, k.0, DiscSide::Upper, budget, false),
            disc_membership(z, iv, k.0, DiscSide::Lower, budget, false),
        ),
    }
}

fn combine_area(u: Membership, l: Membership) -> Membership {
    use Membership::*;
    if u == Inside || l == Inside {
        Inside
    } else if u == Undecided || l == Undecided {
        Undecided
    } else if u == Boundary || l == Boundary {
        Boundary
    } else {
        Outside
    }
}

fn combine_lens(u: Membership, l: Membership) -> Membership {
    use Membership::*;
    if u == Outside || l == Outside {
        Outside
    } else if u == Undecided || l == Undecided {
        Undecided
    } else if u == Boundary || l == Boundary {
        Boundary
    } else {
        Inside
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum DiscSide {
    Upper,
    Lower,
}

fn disc_membership(
    z: &ComplexRational,
    iv: &IntervalLR,
    k: u32,
    side: DiscSide,
    budget: &PrecisionBudget,
    force_adaptive: bool,
) -> Membership {
    let e0 = disc0_form(z, iv);
    if z.im.is_zero() {
        // the cotangent term vanishes on the real axis
        return membership_from_sign(rat_sign(&e0));
    }
    // expr = E₀ + a·cot with a = ∓2δy = ∓(r-l)y
    let mut a = iv.width() * &z.im;
    if side == DiscSide::Upper {
        a = -a;
    }
    if !force_adaptive {
        match exact_cot(k) {
            Some(CotExact::Rat(c)) => {
                return membership_from_sign(rat_sign(&(&e0 + &(&a * &c))));
            }
            Some(CotExact::Sqrt3Times(q)) => {
                return membership_from_sign(surd_sign(&(&a * &q), &e0));
            }
            None => {}
        }
    }
    for bits in precision_ladder(budget.max_bits) {
        let (cot_lo, cot_hi) = cot_pi_over(k + 2, bits);
        let (t_lo, t_hi) = if a.is_negative() {
            (&a * &cot_hi, &a * &cot_lo)
        } else {
            (&a * &cot_lo, &a * &cot_hi)
        };
        let lo = &e0 + &t_lo;
        let hi = &e0 + &t_hi;
        if lo.is_positive() {
            return Membership::Outside;
        }
        if hi.is_negative() {
            return Membership::Inside;
        }
        // an exact zero would need a rational cotangent; keep refining
    }
    Membership::Undecided
}

fn precision_ladder(max_bits: u32) -> Vec<u32> {
    let cap = max_bits.max(16);
    let mut v = Vec::new();
    let mut b = 64.min(cap);
    loop {
        v.push(b);
        if b >= cap {
            break;
        }
        b = (b * 2).min(cap);
    }
    v
}

fn pow2_inv(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

/// Certified enclosure of arctan(1/q) from the alternating series; the tail
/// is bounded by the first omitted term.
fn atan_recip_bounds(q: u64, eps: &Rational) -> (Rational, Rational) {
    let x = Rational::new(BigInt::one(), BigInt::from(q));
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = Rational::zero();
    let mut odd = 1u64;
    let mut positive = true;
    loop {
        let term = &power / Rational::from_integer(odd.into());
        if positive {
            sum += term;
        } else {
            sum -= term;
        }
        power = &power * &x2;
        odd += 2;
        let next = &power / Rational::from_integer(odd.into());
        if next <= *eps {
            return (&sum - &next, &sum + &next);
        }
        positive = !positive;
    }
}

/// Certified enclosure of π via π = 16·arctan(1/5) - 4·arctan(1/239).
fn pi_bounds(bits: u32) -> (Rational, Rational) {
    let eps = pow2_inv(bits + 8);
    let (a5_lo, a5_hi) = atan_recip_bounds(5, &eps);
    let (a239_lo, a239_hi) = atan_recip_bounds(239, &eps);
    let sixteen = Rational::from_integer(16.into());
    let four = Rational::from_integer(4.into());
    (
        &(&sixteen * &a5_lo) - &(&four * &a239_hi),
        &(&sixteen * &a5_hi) - &(&four * &a239_lo),
    )
}

/// Alternating-series enclosure of sin t for rational 0 < t < 3/2.
fn sin_bounds(t: &Rational, eps: &Rational) -> (Rational, Rational) {
    let t2 = t * t;
    let mut term = t.clone();
    let mut sum = Rational::zero();
    let mut odd = 1u64;
    let mut positive = true;
    loop {
        if positive {
            sum += &term;
        } else {
            sum -= &term;
        }
        let next = &term * &t2 / Rational::from_integer(((odd + 1) * (odd + 2)).into());
        if next <= *eps {
            return (&sum - &next, &sum + &next);
        }
        term = next;
        odd += 2;
        positive = !positive;
    }
}

/// Alternating-series enclosure of cos t for rational 0 < t < 3/2.
fn cos_bounds(t: &Rational, eps: &Rational) -> (Rational, Rational) {
    let t2 = t * t;
    let mut term = Rational::one();
    let mut sum = Rational::zero();
    let mut even = 0u64;
    let mut positive = true;
    loop {
        if positive {
            sum += &term;
        } else {
            sum -= &term;
        }
        let next = &term * &t2 / Rational::from_integer(((even + 1) * (even + 2)).into());
        if next <= *eps {
            return (&sum - &next, &sum + &next);
        }
        term = next;
        even += 2;
        positive = !positive;
    }
}

/// Largest multiple of 2^-bits at or below x.
fn dyadic_floor(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (x * Rational::from_integer(scale.clone())).floor();
    Rational::new(scaled.to_integer(), scale)
}

/// Smallest multiple of 2^-bits at or above x.
fn dyadic_ceil(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = (x * Rational::from_integer(scale.clone())).ceil();
    Rational::new(scaled.to_integer(), scale)
}

/// Certified rational enclosure of cot(π/m) for m ≥ 3. cot is decreasing on
/// (0, π/2), so bracketing the angle and dividing directed cos/sin bounds
/// gives a rigorous interval. The raw series output is rounded outward to
/// dyadics so downstream arithmetic stays small, and the result is memoized:
/// it is a pure function of (m, bits).
pub(crate) fn cot_pi_over(m: u32, bits: u32) -> (Rational, Rational) {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    type CotCache = Mutex<HashMap<(u32, u32), (Rational, Rational)>>;
    static CACHE: OnceLock<CotCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(m, bits)) {
        return hit.clone();
    }
    let value = cot_pi_over_uncached(m, bits);
    cache.lock().unwrap().insert((m, bits), value.clone());
    value
}

fn cot_pi_over_uncached(m: u32, bits: u32) -> (Rational, Rational) {
    assert!(m >= 3, "cot_pi_over needs m >= 3");
    let eps = pow2_inv(bits + 4);
    let (pi_lo, pi_hi) = pi_bounds(bits);
    let m_rat = Rational::from_integer(m.into());
    let t_lo = &pi_lo / &m_rat;
    let t_hi = &pi_hi / &m_rat;
    let (cos_lo_at_hi, _) = cos_bounds(&t_hi, &eps);
    let (_, sin_hi_at_hi) = sin_bounds(&t_hi, &eps);
    let (_, cos_hi_at_lo) = cos_bounds(&t_lo, &eps);
    let (sin_lo_at_lo, _) = sin_bounds(&t_lo, &eps);
    debug_assert!(cos_lo_at_hi.is_positive() && sin_lo_at_lo.is_positive());
    (
        dyadic_floor(&(&cos_lo_at_hi / &sin_hi_at_hi), bits + 2),
        dyadic_ceil(&(&cos_hi_at_lo / &sin_lo_at_lo), bits + 2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn z(re: i64, im: i64) -> ComplexRational {
        ComplexRational::new(rat_int(re), rat_int(im))
    }

    fn zq(re: Rational, im: Rational) -> ComplexRational {
        ComplexRational::new(re, im)
    }

    fn iv(l: i64, r: i64) -> IntervalLR {
        IntervalLR::new(rat_int(l), rat_int(r)).unwrap()
    }

    #[test]
    fn interval_requires_l_below_r() {
        assert!(IntervalLR::new(rat_int(1), rat_int(1)).is_err());
        assert!(IntervalLR::new(rat_int(2), rat_int(1)).is_err());
        let ab = iv(0, 1);
        assert_eq!(ab.midpoint(), rat(1, 2));
        assert_eq!(ab.width(), rat_int(1));
    }

    #[test]
    fn c0_examples() {
        let ab = iv(-1, 1);
        assert_eq!(
            in_c0(&zq(ab.midpoint(), rat_int(0)), &ab),
            Membership::Inside
        );
        assert_eq!(in_c0(&z(-1, 0), &ab), Membership::Boundary);
        assert_eq!(in_c0(&z(0, 1), &ab), Membership::Boundary);
        assert_eq!(in_c0(&z(0, 2), &ab), Membership::Outside);
    }

    #[test]
    fn c12_examples() {
        let ab = iv(-1, 1);
        assert_eq!(in_c12(&z(0, 0), &ab), Membership::Inside);
        assert_eq!(in_c12(&z(1, 0), &ab), Membership::Boundary);
        // the apex of the circumdisc region
        assert_eq!(in_c12(&z(0, 1), &ab), Membership::Inside);
        assert_eq!(in_c12(&z(0, 3), &ab), Membership::Outside);
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(in_b(&z(-1, 0)), Membership::Inside);
        assert_eq!(in_b(&z(-1, 2)), Membership::Outside);
        assert_eq!(in_b(&z(0, 0)), Membership::Boundary);
        assert_eq!(in_b(&z(1, 0)), Membership::Outside);
        assert_eq!(in_b(&z(-1, 1)), Membership::Inside);
    }

    #[test]
    fn surd_sign_examples() {
        assert_eq!(surd_sign(&rat_int(1), &rat_int(-2)), -1);
        assert_eq!(surd_sign(&rat_int(1), &rat_int(-1)), 1);
        assert_eq!(surd_sign(&rat_int(0), &rat_int(0)), 0);
        assert_eq!(surd_sign(&rat_int(2), &rat_int(3)), 1);
        assert_eq!(surd_sign(&rat_int(-2), &rat_int(-3)), -1);
        // 2·√3 vs 3: 12 > 9
        assert_eq!(surd_sign(&rat_int(2), &rat_int(-3)), 1);
        assert_eq!(surd_sign(&rat_int(-2), &rat_int(3)), -1);
        // exact tie is impossible for nonzero rationals, but the degenerate
        // axes behave
        assert_eq!(surd_sign(&rat_int(0), &rat_int(-5)), -1);
        assert_eq!(surd_sign(&rat_int(4), &rat_int(0)), 1);
    }

    #[test]
    fn point_map_examples() {
        let ab = iv(-1, 1);
        assert_eq!(
            mobius_point(&z(0, 0), &ab).unwrap(),
            ComplexRational::from_real(rat_int(1))
        );
        assert_eq!(mobius_point(&z(0, 1), &ab).unwrap(), z(0, -1));
        assert!(mobius_point(&z(-1, 0), &ab).is_err());
        assert_eq!(inverse_point(&z(0, -1), &ab).unwrap(), z(0, 1));
        assert!(inverse_point(&z(-1, 0), &ab).is_err());
        let mid = zq(ab.midpoint(), rat_int(0));
        assert_eq!(inverse_point(&mid, &ab).unwrap(), z(1, 0));
    }

    #[test]
    fn point_maps_invert_each_other() {
        let ab = IntervalLR::new(rat(-3, 2), rat(5, 7)).unwrap();
        let mut rng = crate::certcheck::Rng::new(71);
        for _ in 0..200 {
            let w = zq(rng.rational_in_grid(8, 5), rng.rational_in_grid(8, 5));
            if (&w - &ComplexRational::from_real(ab.l().clone())).is_zero() {
                continue;
            }
            let z0 = inverse_point(&w, &ab).unwrap();
            assert_eq!(mobius_point(&z0, &ab).unwrap(), w);
        }
    }

    #[test]
    fn c0_sits_inside_c12() {
        let ab = iv(0, 1);
        let mut rng = crate::certcheck::Rng::new(73);
        for _ in 0..500 {
            let p = zq(rng.rational_in_grid(16, 8), rng.rational_in_grid(16, 8));
            if in_c0(&p, &ab) == Membership::Inside {
                assert_eq!(in_c12(&p, &ab), Membership::Inside, "z = {p}");
            }
        }
    }

    #[test]
    fn memberships_are_conjugation_invariant() {
        let ab = iv(-1, 2);
        let budget = PrecisionBudget::default();
        let mut rng = crate::certcheck::Rng::new(79);
        for _ in 0..200 {
            let p = zq(rng.rational_in_grid(10, 6), rng.rational_in_grid(10, 6));
            let q = p.conj();
            assert_eq!(in_c0(&p, &ab), in_c0(&q, &ab));
            assert_eq!(in_c12(&p, &ab), in_c12(&q, &ab));
            assert_eq!(in_b(&p), in_b(&q));
            for k in [0, 1, 2, 3, 4, 5] {
                for which in [DiscSelect::Area, DiscSelect::Lens] {
                    assert_eq!(
                        obreshkoff_membership(&p, &ab, ObreshkoffIndex(k), which, &budget),
                        obreshkoff_membership(&q, &ab, ObreshkoffIndex(k), which, &budget)
                    );
                }
            }
        }
    }

    #[test]
    fn nonpositive_real_part_maps_outside_c0() {
        // notinC(mobius_point(z)) = (Re z ≤ 0), z ≠ -1
        let ab = IntervalLR::new(rat(1, 3), rat(7, 4)).unwrap();
        let mut rng = crate::certcheck::Rng::new(83);
        let minus_one = ComplexRational::from_real(rat_int(-1));
        for _ in 0..500 {
            let p = zq(rng.rational_in_grid(12, 6), rng.rational_in_grid(12, 6));
            if (&p - &minus_one).is_zero() {
                continue;
            }
            let w = mobius_point(&p, &ab).unwrap();
            let not_in_c0 = in_c0(&w, &ab) != Membership::Inside;
            assert_eq!(not_in_c0, !p.re.is_positive(), "z = {p}");
        }
    }

    #[test]
    fn wedge_matches_exterior_of_c12_under_point_map() {
        let ab = iv(-1, 1);
        let mut rng = crate::certcheck::Rng::new(89);
        let minus_one = ComplexRational::from_real(rat_int(-1));
        for _ in 0..500 {
            let p = zq(rng.rational_in_grid(12, 6), rng.rational_in_grid(12, 6));
            if (&p - &minus_one).is_zero() {
                continue;
            }
            let mb = in_b(&p);
            let mc = in_c12(&mobius_point(&p, &ab).unwrap(), &ab);
            if mb == Membership::Boundary || mc == Membership::Boundary {
                continue;
            }
            assert_eq!(
                mb == Membership::Inside,
                mc == Membership::Outside,
                "z = {p}"
            );
        }
    }

    #[test]
    fn obreshkoff_zero_collapses_to_c0() {
        let ab = iv(0, 2);
        let budget = PrecisionBudget::default();
        let mut rng = crate::certcheck::Rng::new(97);
        for _ in 0..300 {
            let p = zq(rng.rational_in_grid(10, 4), rng.rational_in_grid(10, 4));
            let area =
                obreshkoff_membership(&p, &ab, ObreshkoffIndex(0), DiscSelect::Area, &budget);
            let lens =
                obreshkoff_membership(&p, &ab, ObreshkoffIndex(0), DiscSelect::Lens, &budget);
            assert_eq!(area, in_c0(&p, &ab));
            assert_eq!(lens, in_c0(&p, &ab));
        }
    }

    #[test]
    fn obreshkoff_one_matches_c12_area() {
        let ab = iv(-1, 1);
        let budget = PrecisionBudget::default();
        let mut rng = crate::certcheck::Rng::new(101);
        for _ in 0..300 {
            let p = zq(rng.rational_in_grid(10, 4), rng.rational_in_grid(10, 4));
            let area =
                obreshkoff_membership(&p, &ab, ObreshkoffIndex(1), DiscSelect::Area, &budget);
            assert_eq!(area, in_c12(&p, &ab), "z = {p}");
        }
    }

    #[test]
    fn obreshkoff_upper_disc_example() {
        // k = 2 over (0, 2): h = δ = 1, so 1+1i gives E₀ - 2y = -2
        let ab = iv(0, 2);
        let budget = PrecisionBudget::default();
        assert_eq!(
            obreshkoff_membership(
                &z(1, 1),
                &ab,
                ObreshkoffIndex(2),
                DiscSelect::Upper,
                &budget
            ),
            Membership::Inside
        );
        assert_eq!(
            obreshkoff_membership(
                &z(1, 1),
                &ab,
                ObreshkoffIndex(2),
                DiscSelect::Lower,
                &budget
            ),
            Membership::Outside
        );
        assert_eq!(
            obreshkoff_membership(&z(1, 1), &ab, ObreshkoffIndex(2), DiscSelect::Area, &budget),
            Membership::Inside
        );
        assert_eq!(
            obreshkoff_membership(&z(1, 1), &ab, ObreshkoffIndex(2), DiscSelect::Lens, &budget),
            Membership::Outside
        );
    }

    #[test]
    fn lenses_shrink_and_areas_grow_with_the_index() {
        let ab = iv(-1, 1);
        let budget = PrecisionBudget::default();
        let mut rng = crate::certcheck::Rng::new(103);
        let ks = [0u32, 1, 2, 3, 4, 5];
        for _ in 0..200 {
            let p = zq(rng.rational_in_grid(8, 4), rng.rational_in_grid(8, 4));
            for i in 0..ks.len() {
                for j in (i + 1)..ks.len() {
                    let (low, high) = (ObreshkoffIndex(ks[i]), ObreshkoffIndex(ks[j]));
                    let lens_high = obreshkoff_membership(&p, &ab, high, DiscSelect::Lens, &budget);
                    let lens_low = obreshkoff_membership(&p, &ab, low, DiscSelect::Lens, &budget);
                    if lens_high == Membership::Inside {
                        assert_eq!(lens_low, Membership::Inside, "lens z={p}");
                    }
                    let area_low = obreshkoff_membership(&p, &ab, low, DiscSelect::Area, &budget);
                    let area_high = obreshkoff_membership(&p, &ab, high, DiscSelect::Area, &budget);
                    if area_low == Membership::Inside {
                        assert_eq!(area_high, Membership::Inside, "area z={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn adaptive_path_agrees_with_exact_cotangents() {
        let ab = iv(-1, 1);
        let budget = PrecisionBudget::default();
        let mut rng = crate::certcheck::Rng::new(107);
        for _ in 0..200 {
            let p = zq(rng.rational_in_grid(8, 4), rng.rational_in_grid(8, 4));
            for k in [1u32, 2, 4] {
                for side in [DiscSide::Upper, DiscSide::Lower] {
                    let exact = disc_membership(&p, &ab, k, side, &budget, false);
                    if exact == Membership::Boundary {
                        // a point exactly on the circle can never be decided
                        // numerically
                        continue;
                    }
                    let adaptive = disc_membership(&p, &ab, k, side, &budget, true);
                    assert_eq!(exact, adaptive, "k={k} z={p}");
                }
            }
        }
    }

    #[test]
    fn cotangent_bounds_bracket_known_values() {
        // cot(π/4) = 1 and cot(π/6) = √3; cot(π/3) = 1/√3
        let (lo, hi) = cot_pi_over(4, 64);
        assert!(lo < rat_int(1) && rat_int(1) < hi);
        assert!((&hi - &lo) < rat(1, 1_000_000));
        let (lo, hi) = cot_pi_over(6, 64);
        assert!(&lo * &lo < rat_int(3) && rat_int(3) < &hi * &hi);
        let (lo, hi) = cot_pi_over(3, 64);
        assert!(&(&lo * &lo) * &rat_int(3) < rat_int(1));
        assert!(rat_int(1) < &(&hi * &hi) * &rat_int(3));
    }

    #[test]
    fn pi_bounds_are_tight_and_correct() {
        let (lo, hi) = pi_bounds(128);
        assert!(lo < hi);
        assert!(lo > rat(314159265, 100000000));
        assert!(hi < rat(314159266, 100000000));
        assert!((&hi - &lo) < pow2_inv(126));
    }

    #[test]
    fn precision_ladder_doubles_to_the_cap() {
        assert_eq!(precision_ladder(256), vec![64, 128, 256]);
        assert_eq!(precision_ladder(64), vec![64]);
        assert_eq!(precision_ladder(100), vec![64, 100]);
        assert_eq!(precision_ladder(8), vec![16]);
    }
}
