//! Theorem validation harness: builds polynomials from prescribed exact
//! complex roots, checks the two disc assertions and their Obreshkoff
//! generalisation on seeded instances, and aggregates reproducible reports.
//!
//! Roots are prescribed, never computed numerically, so every membership
//! hypothesis is decided exactly and a failure would be a genuine
//! counterexample, not noise.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::isolator::descartes_count;
use crate::normal::quad_from_conjugate_pair;
use crate::poly::Polynomial;
use crate::rat::{format_rational, parse_rational, ComplexRational, Rational};
use crate::regions::{
    in_c0, in_c12, obreshkoff_membership, DiscSelect, IntervalLR, Membership, ObreshkoffIndex,
    PrecisionBudget,
};

/// Attempts an instance generator makes before giving up.
const GENERATOR_BUDGET: u64 = 10_000;

/// Small deterministic PRNG (splitmix64). Seeds written in a report
/// reproduce the exact instance on any platform.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in [0, n).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Integer in [lo, hi], inclusive.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// Rational num/den with |num| ≤ max_num and 1 ≤ den ≤ max_den.
    pub fn rational_in_grid(&mut self, max_num: i64, max_den: i64) -> Rational {
        let num = self.int_in(-max_num, max_num);
        let den = self.int_in(1, max_den);
        crate::rat::rat(num, den)
    }
}

/// Per-trial seed derivation; trial i of a campaign depends only on the
/// master seed and i, so serial and partitioned runs agree.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mixed = master ^ index.wrapping_mul(0xA076_1D64_78BD_642F).wrapping_add(1);
    Rng::new(mixed).next_u64()
}

/// Strictly positive rational from the same grid as [`Rng::rational_in_grid`].
pub fn positive_rational(rng: &mut Rng, max_num: i64, max_den: i64) -> Rational {
    let num = rng.int_in(1, max_num);
    let den = rng.int_in(1, max_den);
    crate::rat::rat(num, den)
}

/// Random nonzero polynomial of degree ≤ max_deg with grid coefficients.
pub fn random_poly(rng: &mut Rng, max_deg: u32, max_num: i64, max_den: i64) -> Polynomial {
    let deg = rng.below(u64::from(max_deg) + 1) as usize;
    let mut coeffs: Vec<Rational> = (0..deg)
        .map(|_| rng.rational_in_grid(max_num, max_den))
        .collect();
    // force the exact degree
    let mut lead = rng.rational_in_grid(max_num, max_den);
    while lead.is_zero() {
        lead = rng.rational_in_grid(max_num, max_den);
    }
    coeffs.push(lead);
    Polynomial::new(coeffs)
}

/// Random normal polynomial without a root at zero: a product of factors
/// X + c (c > 0) and conjugate quadratics with roots strictly inside the
/// wedge ℬ, occasionally scaled by a positive constant.
pub fn random_normal_poly(rng: &mut Rng, max_deg: u32) -> Polynomial {
    let target = 1 + rng.below(u64::from(max_deg.max(1))) as usize;
    let mut p = Polynomial::one();
    let mut remaining = target;
    while remaining > 0 {
        if remaining >= 2 && rng.below(3) == 0 {
            // re < 0 and |im/re| ≤ 17/10 < √3 keeps the pair strictly in ℬ
            let re = -positive_rational(rng, 4, 3);
            let den = rng.int_in(1, 10);
            let num = rng.int_in(1, (17 * den) / 10);
            let im = -&re * crate::rat::rat(num, den);
            p = &p * &quad_from_conjugate_pair(&ComplexRational::new(re, im));
            remaining -= 2;
        } else {
            let c = positive_rational(rng, 6, 4);
            p = &p * &Polynomial::new(vec![c, Rational::one()]);
            remaining -= 1;
        }
    }
    if rng.below(4) == 0 {
        p = p.scale(&positive_rational(rng, 5, 3));
    }
    p
}

/// A real root with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub value: Rational,
    pub multiplicity: u32,
}

/// A conjugate pair re ± im·i (im > 0) with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatePair {
    pub re: Rational,
    pub im: Rational,
    pub multiplicity: u32,
}

/// Prescribed roots for a test polynomial; the conjugate of each pair is
/// implicit, so the coefficients always come out rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpec {
    pub real_roots: Vec<RealRoot>,
    pub complex_pairs: Vec<ConjugatePair>,
    pub leading: Rational,
}

impl RootSpec {
    pub fn validate(&self) -> Result<()> {
        if self.leading.is_zero() {
            return Err(Error::InvalidArgument("leading coefficient is zero".into()));
        }
        for r in &self.real_roots {
            if r.multiplicity == 0 {
                return Err(Error::InvalidArgument("zero multiplicity".into()));
            }
        }
        for p in &self.complex_pairs {
            if p.multiplicity == 0 {
                return Err(Error::InvalidArgument("zero multiplicity".into()));
            }
            if !p.im.is_positive() {
                return Err(Error::InvalidArgument(
                    "pair imaginary part must be positive".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        let reals: u32 = self.real_roots.iter().map(|r| r.multiplicity).sum();
        let pairs: u32 = self.complex_pairs.iter().map(|p| p.multiplicity).sum();
        (reals + 2 * pairs) as usize
    }

    /// All roots with multiplicities, conjugates included.
    pub fn roots(&self) -> Vec<(ComplexRational, u32)> {
        let mut out = Vec::new();
        for r in &self.real_roots {
            out.push((ComplexRational::from_real(r.value.clone()), r.multiplicity));
        }
        for p in &self.complex_pairs {
            let z = ComplexRational::new(p.re.clone(), p.im.clone());
            out.push((z.conj(), p.multiplicity));
            out.push((z, p.multiplicity));
        }
        out
    }
}

/// leading · Π(X-a)^m · Π(X² - 2·re·X + re² + im²)^m, expanded exactly.
pub fn poly_from_roots(spec: &RootSpec) -> Polynomial {
    let mut p = Polynomial::constant(spec.leading.clone());
    for r in &spec.real_roots {
        let factor = Polynomial::new(vec![-r.value.clone(), Rational::one()]);
        p = &p * &factor.pow(r.multiplicity);
    }
    for pair in &spec.complex_pairs {
        let quad =
            quad_from_conjugate_pair(&ComplexRational::new(pair.re.clone(), pair.im.clone()));
        p = &p * &quad.pow(pair.multiplicity);
    }
    p
}

/// Line-oriented text form:
/// ```text
/// leading 1
/// real -1/2 x2
/// pair 0 9/8 x1
/// ```
impl std::fmt::Display for RootSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "leading {}", format_rational(&self.leading))?;
        for r in &self.real_roots {
            writeln!(f, "real {} x{}", format_rational(&r.value), r.multiplicity)?;
        }
        for p in &self.complex_pairs {
            writeln!(
                f,
                "pair {} {} x{}",
                format_rational(&p.re),
                format_rational(&p.im),
                p.multiplicity
            )?;
        }
        Ok(())
    }
}

impl std::str::FromStr for RootSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut spec = RootSpec {
            real_roots: Vec::new(),
            complex_pairs: Vec::new(),
            leading: Rational::one(),
        };
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_mult = |t: &str| -> Result<u32> {
                t.strip_prefix('x')
                    .and_then(|m| m.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad multiplicity {t:?}")))
            };
            match fields.as_slice() {
                ["leading", c] => spec.leading = parse_rational(c)?,
                ["real", v, m] => spec.real_roots.push(RealRoot {
                    value: parse_rational(v)?,
                    multiplicity: parse_mult(m)?,
                }),
                ["real", v] => spec.real_roots.push(RealRoot {
                    value: parse_rational(v)?,
                    multiplicity: 1,
                }),
                ["pair", re, im, m] => spec.complex_pairs.push(ConjugatePair {
                    re: parse_rational(re)?,
                    im: parse_rational(im)?,
                    multiplicity: parse_mult(m)?,
                }),
                ["pair", re, im] => spec.complex_pairs.push(ConjugatePair {
                    re: parse_rational(re)?,
                    im: parse_rational(im)?,
                    multiplicity: 1,
                }),
                _ => return Err(Error::Parse(format!("bad root spec line {line:?}"))),
            }
        }
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Serialize, Deserialize)]
struct RootSpecRepr {
    leading: String,
    real_roots: Vec<(String, u32)>,
    complex_pairs: Vec<(String, String, u32)>,
}

impl Serialize for RootSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RootSpecRepr {
            leading: format_rational(&self.leading),
            real_roots: self
                .real_roots
                .iter()
                .map(|r| (format_rational(&r.value), r.multiplicity))
                .collect(),
            complex_pairs: self
                .complex_pairs
                .iter()
                .map(|p| {
                    (
                        format_rational(&p.re),
                        format_rational(&p.im),
                        p.multiplicity,
                    )
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RootSpecRepr::deserialize(deserializer)?;
        let conv = |s: &str| parse_rational(s).map_err(|e| D::Error::custom(e.to_string()));
        let spec = RootSpec {
            leading: conv(&repr.leading)?,
            real_roots: repr
                .real_roots
                .iter()
                .map(|(v, m)| {
                    Ok(RealRoot {
                        value: conv(v)?,
                        multiplicity: *m,
                    })
                })
                .collect::<std::result::Result<_, D::Error>>()?,
            complex_pairs: repr
                .complex_pairs
                .iter()
                .map(|(re, im, m)| {
                    Ok(ConjugatePair {
                        re: conv(re)?,
                        im: conv(im)?,
                        multiplicity: *m,
                    })
                })
                .collect::<std::result::Result<_, D::Error>>()?,
        };
        spec.validate()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(spec)
    }
}

/// Result of checking one instance against a theorem's statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// Hypotheses held and the conclusion came out as stated.
    Pass { observed: usize },
    /// A membership test landed on a boundary (or came back undecided);
    /// the open-disc hypotheses are simply not satisfied there.
    SkipBoundary,
    /// The instance violates a hypothesis outright; nothing to assert.
    Rejected,
    /// Hypotheses held but the conclusion failed. A genuine counterexample.
    Fail { observed: usize, expected: String },
}

enum Precheck {
    Ok,
    Skip,
    Reject,
}

fn precheck_case1(spec: &RootSpec, iv: &IntervalLR) -> Precheck {
    for (z, _) in spec.roots() {
        match in_c0(&z, iv) {
            Membership::Outside => {}
            Membership::Boundary => return Precheck::Skip,
            Membership::Inside => return Precheck::Reject,
            Membership::Undecided => unreachable!("in_c0 is exact"),
        }
    }
    Precheck::Ok
}

/// First assertion: no roots in the diameter disc forces v = 0.
pub fn check_case1(spec: &RootSpec, iv: &IntervalLR) -> CheckOutcome {
    match precheck_case1(spec, iv) {
        Precheck::Skip => return CheckOutcome::SkipBoundary,
        Precheck::Reject => return CheckOutcome::Rejected,
        Precheck::Ok => {}
    }
    let p = poly_from_roots(spec);
    let v = descartes_count(&p, iv).expect("nonzero by construction");
    if v == 0 {
        CheckOutcome::Pass { observed: v }
    } else {
        CheckOutcome::Fail {
            observed: v,
            expected: "0".into(),
        }
    }
}

fn precheck_case2(spec: &RootSpec, iv: &IntervalLR, a: &Rational) -> Precheck {
    if !(iv.l() < a && a < iv.r()) {
        return Precheck::Reject;
    }
    for (z, _) in spec.roots() {
        match in_c12(&z, iv) {
            Membership::Outside => {}
            Membership::Boundary => return Precheck::Skip,
            Membership::Inside => return Precheck::Reject,
            Membership::Undecided => unreachable!("in_c12 is exact"),
        }
    }
    let p = poly_from_roots(spec);
    if p.is_root(a) || p.is_root(iv.r()) {
        return Precheck::Reject;
    }
    Precheck::Ok
}

/// Second assertion: exactly one simple root (the factor X - a, l < a < r)
/// inside the circumdisc union forces v = 1 for spec·(X - a).
pub fn check_case2(spec: &RootSpec, iv: &IntervalLR, a: &Rational) -> CheckOutcome {
    match precheck_case2(spec, iv, a) {
        Precheck::Skip => return CheckOutcome::SkipBoundary,
        Precheck::Reject => return CheckOutcome::Rejected,
        Precheck::Ok => {}
    }
    let full = &poly_from_roots(spec) * &Polynomial::new(vec![-a.clone(), Rational::one()]);
    let v = descartes_count(&full, iv).expect("nonzero by construction");
    if v == 1 {
        CheckOutcome::Pass { observed: v }
    } else {
        CheckOutcome::Fail {
            observed: v,
            expected: "1".into(),
        }
    }
}

fn precheck_obreshkoff(
    spec: &RootSpec,
    iv: &IntervalLR,
    p_count: u32,
    q_count: u32,
    budget: &PrecisionBudget,
) -> Precheck {
    let n = spec.degree() as u32;
    if p_count > n {
        return Precheck::Reject;
    }
    let lens_index = ObreshkoffIndex(n - p_count);
    let area_index = ObreshkoffIndex(q_count);
    let mut in_lens = 0u32;
    let mut in_area = 0u32;
    for (z, mult) in spec.roots() {
        if p_count > 0 {
            match obreshkoff_membership(&z, iv, lens_index, DiscSelect::Lens, budget) {
                Membership::Inside => in_lens += mult,
                Membership::Outside => {}
                Membership::Boundary | Membership::Undecided => return Precheck::Skip,
            }
        }
        match obreshkoff_membership(&z, iv, area_index, DiscSelect::Area, budget) {
            Membership::Inside => in_area += mult,
            Membership::Outside => {}
            Membership::Boundary | Membership::Undecided => return Precheck::Skip,
        }
    }
    if in_lens < p_count || in_area > q_count {
        return Precheck::Reject;
    }
    Precheck::Ok
}

/// Obreshkoff's interval statement: at least p roots in the lens L_{n-p}
/// and at most q in the area A_q forces p ≤ v ≤ q.
pub fn check_obreshkoff(
    spec: &RootSpec,
    iv: &IntervalLR,
    p_count: u32,
    q_count: u32,
    budget: &PrecisionBudget,
) -> CheckOutcome {
    match precheck_obreshkoff(spec, iv, p_count, q_count, budget) {
        Precheck::Skip => return CheckOutcome::SkipBoundary,
        Precheck::Reject => return CheckOutcome::Rejected,
        Precheck::Ok => {}
    }
    let p = poly_from_roots(spec);
    let v = if p.degree() == Some(0) {
        0
    } else {
        descartes_count(&p, iv).expect("nonzero by construction")
    };
    if (p_count as usize) <= v && v <= (q_count as usize) {
        CheckOutcome::Pass { observed: v }
    } else {
        CheckOutcome::Fail {
            observed: v,
            expected: format!("{p_count}..={q_count}"),
        }
    }
}

fn random_leading(rng: &mut Rng) -> Rational {
    let mut lead = rng.rational_in_grid(8, 4);
    while lead.is_zero() {
        lead = rng.rational_in_grid(8, 4);
    }
    lead
}

/// Rational point expressed in interval-relative coordinates l + width·t.
fn relative_point(rng: &mut Rng, iv: &IntervalLR, t_lo: i64, t_hi: i64, max_den: i64) -> Rational {
    let den = rng.int_in(1, max_den);
    let num = rng.int_in(t_lo * den, t_hi * den);
    iv.l() + &(iv.width() * crate::rat::rat(num, den))
}

fn sample_real_outside<F: Fn(&ComplexRational) -> bool>(
    rng: &mut Rng,
    iv: &IntervalLR,
    ok: &F,
) -> Option<Rational> {
    for _ in 0..64 {
        let u = relative_point(rng, iv, -3, 4, 16);
        if ok(&ComplexRational::from_real(u.clone())) {
            return Some(u);
        }
    }
    None
}

fn sample_pair_outside<F: Fn(&ComplexRational) -> bool>(
    rng: &mut Rng,
    iv: &IntervalLR,
    ok: &F,
) -> Option<(Rational, Rational)> {
    for _ in 0..64 {
        let re = relative_point(rng, iv, -3, 4, 16);
        let den = rng.int_in(1, 16);
        let num = rng.int_in(1, 3 * den);
        let im = iv.width() * crate::rat::rat(num, den);
        let z = ComplexRational::new(re.clone(), im.clone());
        if ok(&z) {
            return Some((re, im));
        }
    }
    None
}

/// Assembles a RootSpec of degree ≤ degree_bound whose every root (and
/// conjugate) satisfies `ok`; used by the case-1 and case-2 generators.
fn sample_spec_outside<F: Fn(&ComplexRational) -> bool>(
    rng: &mut Rng,
    degree_bound: u32,
    iv: &IntervalLR,
    ok: &F,
) -> Option<RootSpec> {
    let target = 1 + rng.below(u64::from(degree_bound)) as usize;
    let mut spec = RootSpec {
        real_roots: Vec::new(),
        complex_pairs: Vec::new(),
        leading: random_leading(rng),
    };
    let mut remaining = target;
    while remaining > 0 {
        if remaining >= 2 && rng.below(3) == 0 {
            let mult = if remaining >= 4 && rng.below(4) == 0 {
                2
            } else {
                1
            };
            let (re, im) = sample_pair_outside(rng, iv, ok)?;
            spec.complex_pairs.push(ConjugatePair {
                re,
                im,
                multiplicity: mult,
            });
            remaining -= 2 * mult as usize;
        } else {
            let mult = if remaining >= 2 && rng.below(4) == 0 {
                2
            } else {
                1
            };
            let value = sample_real_outside(rng, iv, ok)?;
            spec.real_roots.push(RealRoot {
                value,
                multiplicity: mult,
            });
            remaining -= mult as usize;
        }
    }
    Some(spec)
}

/// Seeded instance generator for the first assertion: every root strictly
/// outside the diameter disc.
pub fn generate_case1(seed: u64, degree_bound: u32, iv: &IntervalLR) -> Result<RootSpec> {
    Ok(generate_case1_with_stats(seed, degree_bound, iv)?.0)
}

/// Same, also reporting the number of rejected candidates.
pub fn generate_case1_with_stats(
    seed: u64,
    degree_bound: u32,
    iv: &IntervalLR,
) -> Result<(RootSpec, u64)> {
    let degree_bound = degree_bound.max(1);
    let mut rng = Rng::new(seed);
    let outside = |z: &ComplexRational| in_c0(z, iv) == Membership::Outside;
    for attempt in 0..GENERATOR_BUDGET {
        if let Some(spec) = sample_spec_outside(&mut rng, degree_bound, iv, &outside) {
            if matches!(precheck_case1(&spec, iv), Precheck::Ok) {
                return Ok((spec, attempt));
            }
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: GENERATOR_BUDGET,
    })
}

/// Seeded instance generator for the second assertion: spec roots strictly
/// outside the circumdisc union, plus a pivot a strictly inside (l, r).
pub fn generate_case2(
    seed: u64,
    degree_bound: u32,
    iv: &IntervalLR,
) -> Result<(RootSpec, Rational)> {
    let (spec, a, _) = generate_case2_with_stats(seed, degree_bound, iv)?;
    Ok((spec, a))
}

/// Same, also reporting the number of rejected candidates.
pub fn generate_case2_with_stats(
    seed: u64,
    degree_bound: u32,
    iv: &IntervalLR,
) -> Result<(RootSpec, Rational, u64)> {
    let mut rng = Rng::new(seed);
    let outside = |z: &ComplexRational| in_c12(z, iv) == Membership::Outside;
    for attempt in 0..GENERATOR_BUDGET {
        // degree of spec·(X-a) stays within the bound
        let spec_bound = degree_bound.saturating_sub(1).max(1);
        let spec = if degree_bound <= 1 || rng.below(8) == 0 {
            // occasionally test the bare factor X - a
            Some(RootSpec {
                real_roots: Vec::new(),
                complex_pairs: Vec::new(),
                leading: random_leading(&mut rng),
            })
        } else {
            sample_spec_outside(&mut rng, spec_bound, iv, &outside)
        };
        let den = rng.int_in(2, 16);
        let num = rng.int_in(1, den - 1);
        let a = iv.l() + &(iv.width() * crate::rat::rat(num, den));
        if let Some(spec) = spec {
            if matches!(precheck_case2(&spec, iv, &a), Precheck::Ok) {
                return Ok((spec, a, attempt));
            }
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: GENERATOR_BUDGET,
    })
}

/// Seeded instance generator for the Obreshkoff check. The polynomial degree
/// is exactly `degree_bound`, so the lens index n - p_count is pinned by the
/// caller's configuration: p_count distinct real roots strictly inside
/// (l, r) (hence inside every lens), the rest strictly outside the area
/// A_{q_count}.
pub fn generate_obreshkoff(
    seed: u64,
    degree_bound: u32,
    iv: &IntervalLR,
    p_count: u32,
    q_count: u32,
    budget: &PrecisionBudget,
) -> Result<RootSpec> {
    Ok(generate_obreshkoff_with_stats(seed, degree_bound, iv, p_count, q_count, budget)?.0)
}

/// Same, also reporting the number of rejected candidates.
pub fn generate_obreshkoff_with_stats(
    seed: u64,
    degree_bound: u32,
    iv: &IntervalLR,
    p_count: u32,
    q_count: u32,
    budget: &PrecisionBudget,
) -> Result<(RootSpec, u64)> {
    if p_count > q_count {
        return Err(Error::InvalidArgument(format!(
            "need p_count <= q_count, got {p_count} > {q_count}"
        )));
    }
    if p_count > degree_bound {
        return Err(Error::InvalidArgument(format!(
            "p_count {p_count} exceeds degree {degree_bound}"
        )));
    }
    let mut rng = Rng::new(seed);
    let area = ObreshkoffIndex(q_count);
    let outside_area = |z: &ComplexRational| {
        obreshkoff_membership(z, iv, area, DiscSelect::Area, budget) == Membership::Outside
    };
    for attempt in 0..GENERATOR_BUDGET {
        let mut spec = RootSpec {
            real_roots: Vec::new(),
            complex_pairs: Vec::new(),
            leading: random_leading(&mut rng),
        };
        // p_count distinct interior roots; interior points sit strictly
        // inside both discs of every index
        let mut interior: Vec<Rational> = Vec::new();
        let mut tries = 0;
        while interior.len() < p_count as usize && tries < 128 {
            let den = rng.int_in(2, 32);
            let num = rng.int_in(1, den - 1);
            let u = iv.l() + &(iv.width() * crate::rat::rat(num, den));
            if !interior.contains(&u) {
                interior.push(u);
            }
            tries += 1;
        }
        if interior.len() < p_count as usize {
            continue;
        }
        for value in interior {
            spec.real_roots.push(RealRoot {
                value,
                multiplicity: 1,
            });
        }
        let mut remaining = (degree_bound - p_count) as usize;
        let mut ok = true;
        while remaining > 0 {
            if remaining >= 2 && rng.below(2) == 0 {
                match sample_pair_outside(&mut rng, iv, &outside_area) {
                    Some((re, im)) => {
                        spec.complex_pairs.push(ConjugatePair {
                            re,
                            im,
                            multiplicity: 1,
                        });
                        remaining -= 2;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            } else {
                // real points off the closed interval are outside every disc
                match sample_real_outside(&mut rng, iv, &|z| in_c0(z, iv) == Membership::Outside) {
                    Some(value) => {
                        spec.real_roots.push(RealRoot {
                            value,
                            multiplicity: 1,
                        });
                        remaining -= 1;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        if matches!(
            precheck_obreshkoff(&spec, iv, p_count, q_count, budget),
            Precheck::Ok
        ) {
            return Ok((spec, attempt));
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: GENERATOR_BUDGET,
    })
}

/// One failing trial, with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub seed: u64,
    pub spec: Option<RootSpec>,
    pub interval: Option<(String, String)>,
    pub note: Option<String>,
    pub observed: String,
    pub expected: String,
}

/// Aggregated campaign outcome; failures empty means the run passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub kind: String,
    pub trials: u64,
    pub passed: u64,
    pub skipped_boundary: u64,
    pub rejected: u64,
    /// Candidates the instance generators resampled across all trials.
    pub generator_retries: u64,
    pub failures: Vec<CheckFailure>,
    pub trial_seeds: Vec<u64>,
}

impl CheckReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Which campaign to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    ThreeCircles1,
    ThreeCircles2,
    Obreshkoff { p_count: u32, q_count: u32 },
    NormalClosure,
    BernqOracle,
}

impl CheckKind {
    pub fn name(&self) -> String {
        match self {
            CheckKind::ThreeCircles1 => "three-circles-1".into(),
            CheckKind::ThreeCircles2 => "three-circles-2".into(),
            CheckKind::Obreshkoff { p_count, q_count } => {
                format!("obreshkoff(p={p_count},q={q_count})")
            }
            CheckKind::NormalClosure => "normal-closure".into(),
            CheckKind::BernqOracle => "bernq-oracle".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub seed: u64,
    pub trials: u64,
    pub degree_bound: u32,
    pub interval: IntervalLR,
    /// Worker threads; results are identical for any value.
    pub jobs: u32,
    pub precision_bits: u32,
}

impl CampaignConfig {
    pub fn new(seed: u64, trials: u64, degree_bound: u32, interval: IntervalLR) -> Self {
        Self {
            seed,
            trials,
            degree_bound,
            interval,
            jobs: 1,
            precision_bits: 256,
        }
    }
}

enum TrialOutcome {
    Pass,
    Skip,
    Reject,
    Fail(Box<CheckFailure>),
}

fn interval_strings(iv: &IntervalLR) -> (String, String) {
    (format_rational(iv.l()), format_rational(iv.r()))
}

fn run_trial(kind: CheckKind, seed: u64, cfg: &CampaignConfig) -> Result<(TrialOutcome, u64)> {
    let iv = &cfg.interval;
    let budget = PrecisionBudget {
        max_bits: cfg.precision_bits,
    };
    let mut retries = 0;
    let outcome = match kind {
        CheckKind::ThreeCircles1 => {
            let (spec, r) = generate_case1_with_stats(seed, cfg.degree_bound, iv)?;
            retries = r;
            let out = check_case1(&spec, iv);
            to_trial(out, seed, Some(spec), iv, None)
        }
        CheckKind::ThreeCircles2 => {
            let (spec, a, r) = generate_case2_with_stats(seed, cfg.degree_bound, iv)?;
            retries = r;
            let out = check_case2(&spec, iv, &a);
            to_trial(
                out,
                seed,
                Some(spec),
                iv,
                Some(format!("a = {}", format_rational(&a))),
            )
        }
        CheckKind::Obreshkoff { p_count, q_count } => {
            let (spec, r) = generate_obreshkoff_with_stats(
                seed,
                cfg.degree_bound,
                iv,
                p_count,
                q_count,
                &budget,
            )?;
            retries = r;
            let out = check_obreshkoff(&spec, iv, p_count, q_count, &budget);
            to_trial(out, seed, Some(spec), iv, None)
        }
        CheckKind::NormalClosure => {
            let mut rng = Rng::new(seed);
            let p = random_normal_poly(&mut rng, cfg.degree_bound);
            let q = random_normal_poly(&mut rng, cfg.degree_bound);
            let prod = &p * &q;
            if crate::normal::is_normal(&prod) {
                TrialOutcome::Pass
            } else {
                TrialOutcome::Fail(Box::new(CheckFailure {
                    seed,
                    spec: None,
                    interval: None,
                    note: Some(format!("p = {p}; q = {q}")),
                    observed: format!("{prod} not normal"),
                    expected: "normal product".into(),
                }))
            }
        }
        CheckKind::BernqOracle => {
            let mut rng = Rng::new(seed);
            let p = random_poly(&mut rng, 10, 20, 12);
            let l = rng.rational_in_grid(6, 4);
            let r = &l + &positive_rational(&mut rng, 6, 4);
            let n = p.degree().expect("nonzero") + rng.below(3) as usize;
            let bc = crate::signs::bernstein_coeffs(&p, &l, &r, n)?;
            let back = crate::signs::bernstein_expand(&bc);
            if back == p {
                TrialOutcome::Pass
            } else {
                TrialOutcome::Fail(Box::new(CheckFailure {
                    seed,
                    spec: None,
                    interval: Some((format_rational(&l), format_rational(&r))),
                    note: Some(format!("n = {n}")),
                    observed: back.to_string(),
                    expected: p.to_string(),
                }))
            }
        }
    };
    Ok((outcome, retries))
}

fn to_trial(
    out: CheckOutcome,
    seed: u64,
    spec: Option<RootSpec>,
    iv: &IntervalLR,
    note: Option<String>,
) -> TrialOutcome {
    match out {
        CheckOutcome::Pass { .. } => TrialOutcome::Pass,
        CheckOutcome::SkipBoundary => TrialOutcome::Skip,
        CheckOutcome::Rejected => TrialOutcome::Reject,
        CheckOutcome::Fail { observed, expected } => TrialOutcome::Fail(Box::new(CheckFailure {
            seed,
            spec,
            interval: Some(interval_strings(iv)),
            note,
            observed: observed.to_string(),
            expected,
        })),
    }
}

/// Runs `cfg.trials` seeded trials of the given kind. Trial i depends only
/// on (cfg.seed, i), and results are merged in trial order, so the report
/// is identical for any `jobs` value.
pub fn run_campaign(kind: CheckKind, cfg: &CampaignConfig) -> Result<CheckReport> {
    let seeds: Vec<u64> = (0..cfg.trials).map(|i| derive_seed(cfg.seed, i)).collect();
    let jobs = cfg.jobs.max(1) as usize;
    let outcomes: Vec<Result<(TrialOutcome, u64)>> = if jobs == 1 || cfg.trials <= 1 {
        seeds.iter().map(|&s| run_trial(kind, s, cfg)).collect()
    } else {
        let chunk = seeds.len().div_ceil(jobs);
        let mut slots: Vec<Option<Result<(TrialOutcome, u64)>>> = Vec::new();
        slots.resize_with(seeds.len(), || None);
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (w, seed_chunk) in seeds.chunks(chunk).enumerate() {
                let handle = scope.spawn(move || {
                    seed_chunk
                        .iter()
                        .enumerate()
                        .map(|(j, &s)| (w * chunk + j, run_trial(kind, s, cfg)))
                        .collect::<Vec<_>>()
                });
                handles.push(handle);
            }
            for handle in handles {
                for (idx, res) in handle.join().expect("campaign worker panicked") {
                    slots[idx] = Some(res);
                }
            }
        });
        slots
            .into_iter()
            .map(|s| s.expect("all slots filled"))
            .collect()
    };

    let mut report = CheckReport {
        kind: kind.name(),
        trials: cfg.trials,
        passed: 0,
        skipped_boundary: 0,
        rejected: 0,
        generator_retries: 0,
        failures: Vec::new(),
        trial_seeds: seeds,
    };
    for outcome in outcomes {
        let (outcome, retries) = outcome?;
        report.generator_retries += retries;
        match outcome {
            TrialOutcome::Pass => report.passed += 1,
            TrialOutcome::Skip => report.skipped_boundary += 1,
            TrialOutcome::Reject => report.rejected += 1,
            TrialOutcome::Fail(f) => report.failures.push(*f),
        }
    }
    Ok(report)
}
