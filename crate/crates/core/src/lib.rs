//! Exact machinery for isolating the real roots of rational univariate
//! polynomials by Descartes' method, together with the complex-disc
//! geometry that certifies the bisection: Möbius and Bernstein transforms,
//! sign-variation counting, normal polynomials, membership predicates for
//! the three circles and the Obreshkoff disc family, and a seeded
//! validation harness that checks the underlying theorems on constructed
//! instances with zero tolerance for failures.
//!
//! Everything certificate-bearing runs in exact rational arithmetic;
//! floating point appears only in SVG rendering and never decides a
//! predicate.
//!
//! ```
//! use three_circles::poly::Polynomial;
//! use three_circles::regions::IntervalLR;
//! use three_circles::isolator::{isolate, IsolatorConfig};
//! use three_circles::rat::rat;
//!
//! // X² - X + 2/9 has roots 1/3 and 2/3
//! let p = Polynomial::new(vec![rat(2, 9), rat(-1, 1), rat(1, 1)]);
//! let iv = IntervalLR::new(rat(0, 1), rat(1, 1)).unwrap();
//! let res = isolate(&p, &iv, &IsolatorConfig::default()).unwrap();
//! assert_eq!(res.intervals.len(), 2);
//! ```

pub mod certcheck;
pub mod cli;
pub mod error;
pub mod isolator;
pub mod normal;
pub mod poly;
pub mod rat;
pub mod regions;
pub mod signs;
pub mod svg;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rat::{ComplexRational, Rational};
pub use regions::{IntervalLR, Membership};
