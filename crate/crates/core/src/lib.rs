//! Bijections between internal simplices of the prism `Δn × Δ1`, words over
//! `{a, b}`, permutations, and two-term (pre)silting complexes over the
//! type-A preprojective algebra — with an exact linear-algebra oracle for
//! every combinatorial criterion.
//!
//! The five coordinate systems and where they live:
//!
//! - [`word::Word`]: words in `{a,b}^{n+1}` using both letters; the hub all
//!   other representations convert through.
//! - [`perm::Permutation`]: one-line permutations of `{0,...,n}`.
//! - [`triangulation::Triangulation`]: maximal pairwise-non-crossing word
//!   sets, with flips and the flip graph.
//! - [`geometry::PrismGeometry`]: exact rational coordinates, facets,
//!   circuits, and volumes — the geometric oracle.
//! - [`algebra`]: the preprojective algebra and its two-cycle quotient over a
//!   prime field, with modules, minimal presentations, the Auslander-Reiten
//!   translate, two-term complexes, and Mizuno ideals — the algebraic oracle.
//!
//! [`silting`] assembles the top-level correspondences and the per-criterion
//! verification suites live in [`suites`].

pub mod error;
pub mod field;
pub mod geometry;
pub mod matrix;
pub mod perm;
pub mod triangulation;
pub mod word;

pub use error::{Error, Result};
pub use field::{Field, Fp, DEFAULT_PRIME};

/// Matrix over the default prime field.
pub type FpMatrix = matrix::Matrix<Fp>;
/// Matrix over exact rationals.
pub type RationalMatrix = matrix::Matrix<num_rational::BigRational>;
