//! Exact computation of Turaev norms on finite 2-complexes.
//!
//! The crate works with group presentations and their presentation
//! complexes. For a cellular cocycle `k` on a 2-complex whose edges all
//! appear at least twice on face boundaries, the weight
//! `sum_e (n_e/2 - 1) |k(e)|` is minimised over all cocycles representing
//! a fixed cohomology class; the minimum is the Turaev norm of the class.
//! Around that sit the usual companions: presentation complexity,
//! Fox derivatives and Alexander polynomials, Alexander norms, finite
//! covers, and homology with coefficients in `Q[t, t^-1]`.
//!
//! Everything is exact: integers are arbitrary precision, norms and
//! bounds are rationals, and the linear programs are solved with an
//! exact rational simplex.

pub mod alexander;
pub mod anorm;
pub mod complex;
pub mod covers;
pub mod error;
pub mod fixtures;
pub mod laurent;
pub mod lp;
pub mod norm;
pub mod pd;
pub mod presentation;
pub mod report;
pub mod snf;
pub mod suite;
pub mod twisted;
pub mod word;

pub mod cli;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
