//! Invariant rings of finite matrix groups over finite fields, and the graded
//! pieces of the top local cohomology of those rings.
//!
//! The pipeline runs bottom-up:
//!
//! - [`field`]: exact arithmetic in `F_p` and `F_{p^k}`.
//! - [`poly`] and [`parse`]: graded polynomials and their text syntax.
//! - [`groebner`]: Buchberger, normal forms, standard monomials, subalgebra membership.
//! - [`group`]: closure of generator matrices and element classification.
//! - [`invariants`]: the group action, transfer, invariant spaces and generators.
//! - [`cohomology`]: Čech classes, strands of `H^n`, the cokernel ranks and a-invariants.
//! - [`problem`], [`report`], [`bundled`], [`verify`]: input files, reports and the bundled examples.

pub mod bundled;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod groebner;
pub mod group;
pub mod invariants;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod problem;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, FieldDesc, Scalar};
pub use linalg::Matrix;
pub use problem::{Problem, ProblemSpec};
pub use report::Report;
pub use poly::{Monomial, MonomialOrder, Poly, Ring, RingCtx};
