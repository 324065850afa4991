//! Exact computation of the binomial triangles behind `tan(nx)`, the
//! `(Dz)^n` operator expansions on `y = tan x`, `z = sec x`, and the
//! derivative polynomials they produce.
//!
//! Everything is done in exact integer or rational arithmetic:
//!
//! - [`exact`]: big integers, reduced rationals and Gaussian integers
//! - [`triangles`]: `R`, `T`, `M`, `N`, `R~`, `T~` coefficient triangles
//! - [`symbolic`]: sparse polynomials in `y, z`, the derivation `D` and
//!   reduction modulo `z^2 = 1 + y^2`
//! - [`multiangle`]: `tan(nx)` from `tan(x)` by three independent routes
//! - [`verify`]: identity-checking suites with structured reports
//! - [`cli`]: the command-line front end used by the `tanpoly` binary
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod error;
pub mod exact;
pub mod multiangle;
pub mod symbolic;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{GaussianInt, Int, Rational};
pub use multiangle::{tan_addition_oracle, tan_beeler, tan_float_check, tan_gaussian_oracle, FloatCheck, TanValue};
pub use symbolic::{ReducedPair, YPoly, YZPoly};
pub use triangles::{Family, TriangleRow};
pub use verify::{Suite, VerifyReport};
