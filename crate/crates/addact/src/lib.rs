//! Exact computation with finite-dimensional local commutative algebras over
//! the rationals, and synthesis of the additive group actions they induce on
//! projective hypersurfaces.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactpoly`] — exact rational scalars, sparse multivariate polynomials,
//!   a small expression parser, and canonical printing.
//! * [`artin`] — local algebras built from generator/relation presentations by
//!   degree-truncated linear algebra, plus the subspace calculus on them
//!   (powers of the maximal ideal, socle, annihilators, quotients) and the
//!   exponential/logarithm of nilpotent elements.
//! * [`hpair`] — pairs (algebra, generating hyperplane): validation, the
//!   induced hypersurface equation, the explicit unipotent action matrix,
//!   fixed loci, degeneracy analysis, and reduction of degenerate pairs.
//! * [`construct`] — ideal membership, the generator-shrinking algorithm, and
//!   the two constructions that produce non-equivalent pairs over a common
//!   degenerate base.
//! * [`families`] — parametric families of non-degenerate pairs for every
//!   degree/dimension combination in range, and the bundled dimension-6
//!   catalog with expected results.
//! * [`geometry`] — polynomial-side verification: essential variables,
//!   Jacobian checks on candidate singular subspaces, action invariance, and
//!   cone-structure checks.
//! * [`cli`] — the command-line front end used by the `addact` binary.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and all
//! comparisons in tests are equality of canonical forms, never approximate.

pub mod artin;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exactpoly;
pub mod families;
pub mod geometry;
pub mod hpair;

mod linalg;

pub use error::{Error, Result};
