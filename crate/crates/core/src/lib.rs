//! Radial power maps of Euclidean space, upper bounds for the p-angular
//! distance, and the special functions of planar quasiconformal theory,
//! together with a deterministic numerical verification suite.
//!
//! The pieces fit together like this:
//!
//! * [`geometry`] — vectors, the two-exponent radial map `A_{a,b}`, sphere
//!   inversions, and the radial companion point used by the comparison
//!   bound.
//! * [`metrics`] — the p-angular distance `alpha_p`, the hyperbolic
//!   distance from the origin, the distance-ratio (j) metric on punctured
//!   space, and the ratio `Q` whose supremum is the sharp constant
//!   `2/(3^a - 1)`.
//! * [`special`] — complete elliptic integrals via the AGM, the Grotzsch
//!   modulus and its inverse, the distortion function `phi_K`, its explicit
//!   minorant, and the named distortion constants.
//! * [`bounds`] — the M/D/B/K bound quartet for `alpha_p` plus the
//!   image-distance bounds for radial quasiconformal maps.
//! * [`tables`] — the bundled reference tables and their recomputation
//!   report (including detection of exchanged columns).
//! * [`verify`] — a registry of named, seeded checks (one per claim) and
//!   the minimal-bound region scan.
//!
//! The `pangular` binary exposes all of it on the command line; see the
//! repository README for usage.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod metrics;
pub mod special;
pub mod tables;
pub mod vector;
pub mod verify;

pub use bounds::{all_bounds, BoundSet, BoundSym};
pub use error::{Error, Result};
pub use geometry::{radial_map, RadialExponents};
pub use metrics::{p_angular, q_ratio, PExponent};
pub use special::{Distortion, NamedConstants};
pub use vector::Vector;
