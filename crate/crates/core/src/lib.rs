//! Exact arithmetic on projective space over the rationals for the study of
//! integral points in forward orbits of self-maps.
//!
//! The crate computes, with no floating point on any decision path:
//!
//! - sparse multivariate polynomial arithmetic over exact integers
//!   ([`algebra`]): products, composition, exact division, multivariate GCD,
//!   squarefree decomposition, linear-factor extraction;
//! - rational points of projective space, places of Q, and p-adic
//!   valuations ([`projective`]);
//! - regular self-maps of P^N with morphism certification, symbolic
//!   iteration, and pointwise orbits ([`selfmap`]);
//! - effective divisors, pullbacks under iterates, and the reduced
//!   properly-intersecting part ([`divisor`]);
//! - proper-intersection tests by exact linear algebra at the Macaulay
//!   degree bound ([`intersect`]);
//! - exact local Weil, proximity, counting, and height functions in the
//!   max-coordinate presentation ([`heights`]);
//! - the constants gamma and c_n, orbit scanning for dynamically defined
//!   integral-point candidates, the beta constant with its brute-force
//!   oracle, and an empirical Subspace-type inequality checker
//!   ([`theorem`]);
//! - a line-oriented problem-file format and JSON/CSV report types
//!   ([`problem`], [`report`]).

pub mod algebra;
pub mod arith;
pub mod divisor;
pub mod fixtures;
pub mod heights;
pub mod intersect;
pub mod problem;
pub mod projective;
pub mod report;
pub mod selfmap;
pub mod theorem;

pub use algebra::{HomogeneousForm, Ring};
pub use divisor::{Divisor, FactorBasis};
pub use heights::ExactLog;
pub use projective::{Place, PlaceSet, ProjPoint};
pub use selfmap::SelfMap;
