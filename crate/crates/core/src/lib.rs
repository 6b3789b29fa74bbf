//! Universal polynomial bounds on the Chern numbers of polarized projective
//! manifolds.
//!
//! For a projective manifold `X` of dimension `n` with an ample line bundle
//! `L`, every monomial Chern number `c_λ(X)·L^{n-d}` is bounded by explicit
//! polynomials in the two intersection numbers `L^n` and `K_X·L^{n-1}`. This
//! crate constructs those polynomials with exact rational coefficients and
//! checks every inequality against an exact intersection-number oracle over
//! a catalog of concrete varieties.
//!
//! The main entry points are:
//!
//! * [`partitions`]: the partitions indexing monomial Chern classes.
//! * [`poly`]: exact rational arithmetic and sparse multivariate polynomials.
//! * [`chern`]: Chern classes of the twisted tangent bundle.
//! * [`bounds`]: the linear bounds `P_λ^±`, the bounds `R_i^±` on `K^i·L^{n-i}`,
//!   and the bivariate bounds `Q_λ^±`, `Q_λ`.
//! * [`todd`]: Todd classes, Hilbert polynomials and the Riemann–Roch tail bound.
//! * [`variety`]: the catalog of varieties and the intersection oracle.
//! * [`verify`]: the inequality suite run over a catalog.
//! * [`cli`]: the `chernbound` command line front end.

pub mod bounds;
pub mod chern;
pub mod cli;
pub mod error;
pub mod partitions;
pub mod poly;
pub mod todd;
pub mod variety;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use poly::{MultiPoly, Rational};
