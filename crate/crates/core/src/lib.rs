//! Exact lattice-point grading of dilated standard simplices.
//!
//! The lattice points of `r·Δ_d` are graded two ways: by coordinate sum, giving
//! the dilation polynomial `T_r(t)`, and by the staircase weight `Σ k·a_k`,
//! giving a polynomial equal to the Gaussian binomial `[d+r choose d]_z`, the
//! Poincaré polynomial of the Grassmannian `Gr(d, d+r)`. The crate also realizes
//! the bijections behind these identities:
//!
//! ```text
//! lattice point a  <->  one-row tableau T  <->  β-vector λ*  <->  Grassmannian permutation w(λ*)
//! ```
//!
//! - [`polyring`]: exact integer polynomials and truncated bivariate series
//! - [`simplex`]: enumeration, slice classes, dilation/weighted polynomials
//! - [`tableaux`]: one-row semistandard tableaux, monomials, characters
//! - [`grassmann`]: partitions, β-vectors, permutations, Gaussian binomials
//! - [`verify`]: the identity-checking harness used by `verify`
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod error;
pub mod grassmann;
pub mod polyring;
pub mod simplex;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use polyring::{BiSeries, Degree, Polynomial};
pub use simplex::{DilatedSimplex, LatticePoint, SliceClass, WeightVector};
