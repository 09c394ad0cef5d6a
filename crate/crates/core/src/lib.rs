//! Exact computation with piecewise-linear, orientation-preserving
//! self-homeomorphisms of the unit interval.
//!
//! Everything is carried out over arbitrary-precision rationals; there is no
//! floating point anywhere and every equality test is exact. The crate
//! provides, from the bottom up:
//!
//! * [`plmap`] — the PL homeomorphism calculus: construction, evaluation,
//!   composition, inversion, supports, fixed sets and one-sided slopes;
//! * [`analysis`] — finitely generated subgroups: supports, orbitals,
//!   approach signs, orbital classification, word evaluation, projections
//!   and breadth-first orbit searches;
//! * [`thompson`] — the standard realization of Thompson's group F inside
//!   the dyadic subgroup, relation verifiers and interval embeddings;
//! * [`words`] — formal words over the generators, free reduction, the
//!   realization homomorphism and an exact word-equality oracle for F;
//! * [`extraction`] — a certificate-producing pipeline that locates a pair
//!   generating a copy of F inside any subgroup exhibiting one-sided
//!   approach behaviour on one of its orbitals.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so values may be freely shared between threads.
//!
//! ```
//! use plof::extraction::extract_f;
//! use plof::thompson::{f0, f1, Verdict};
//! use plof::{GenSet, Word};
//!
//! // the standard generating pair, with its second generator as witness
//! let group = GenSet::pair(f0(), f1());
//! let trace = extract_f(&group, Some(&Word::letter(1, 1)), 8).unwrap();
//! assert_eq!(trace.certificate.verdict, Verdict::IsomorphicToF);
//! ```

pub mod analysis;
pub mod error;
pub mod extraction;
pub mod interval;
pub mod plmap;
pub mod rational;
pub mod thompson;
pub mod words;

pub use analysis::{approaches, sign_of_approach, GenSet, OrbitalInfo};
pub use error::{Error, Result};
pub use extraction::{extract_f, ExtractionTrace};
pub use interval::{FixedSet, Interval, IntervalSet};
pub use plmap::{AffineGerm, PLMap, Side};
pub use rational::Rational;
pub use words::Word;

#[cfg(test)]
pub(crate) mod test_support;
