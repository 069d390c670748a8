//! Exact-arithmetic computation of the bigraded torus-equivariant character of
//! the coordinate ring of the normalized isospectral commuting variety of a
//! reductive Lie algebra.
//!
//! Two independent algorithms are provided and must agree:
//!
//! * [`bichar`] expands the character bidegree by bidegree as an alternating
//!   sum of Euler characteristics of induced bundles on the flag variety
//!   (Borel–Weil–Bott on the level of virtual characters).
//! * [`localize`] evaluates the closed Weyl-sum rational expression at generic
//!   rational points and expands it as an exact bivariate power series.
//!
//! A third, commutative-algebra oracle ([`schemeoracle`]) presents the defining
//! ideal of the underlying (possibly non-reduced) fiber-product scheme for
//! small presets, runs Buchberger's algorithm, and counts the bigraded Hilbert
//! function by staircase enumeration, exhibiting where the scheme differs from
//! the normalized variety.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! throughout, no floating point anywhere.

pub mod bichar;
pub mod charalg;
pub mod cli;
pub mod localize;
pub mod rootsys;
pub mod schemeoracle;
pub mod weightlat;

pub use charalg::{CharContext, VirtualCharacter};
pub use rootsys::{Family, RootSystem, WeylElement};
pub use weightlat::{Int, Rational, RationalPoint, Weight, WeightPoly};

/// Convention tag embedded in every artifact so downstream consumers can
/// detect drift in the choice of positive system.
pub const CONVENTION_TAG: &str = "Rplus=weights(g/b); b=negative-Borel";
