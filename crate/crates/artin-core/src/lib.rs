//! Exact computer algebra for approximation problems over `k[[t]]` and `k[[t,z]]`.
//!
//! The crate has five layers:
//!
//! - [`series`]: truncated formal power series in `t` and `(t, z)` over exact
//!   rationals, plus the shear `t -> t + c*z` used to reach `z`-regular position.
//! - [`multipoly`]: sparse multivariate polynomials used as equation carriers,
//!   with evaluation at series arguments.
//! - [`weierstrass`]: Weierstrass division and preparation at finite precision,
//!   and a checker for the stability bounds of prepared data.
//! - [`binomial`]: binomial systems, homogeneity weights, jet-system generation
//!   and the decoupling of an approximate solution into a unit system and a
//!   coefficient system.
//! - [`bounds`]: exact big-integer evaluation of the effective bound formulas
//!   (Hermann exponents, component counts, the height recursion, and the
//!   composed binomial bounds).
//!
//! [`roots`] and [`experiment`] build end-to-end experiments on top: q-th root
//! extraction of series, coprime power pairs, and enumerative lower-bound
//! searches. [`io`] holds the JSON schemas and the Macaulay2 export.

pub mod binomial;
pub mod bounds;
pub mod coeff;
pub mod experiment;
pub mod io;
pub mod multipoly;
pub mod roots;
pub mod series;
pub mod weierstrass;

pub use coeff::Coeff;
pub use multipoly::MultiPoly;
pub use series::{OrderResult, Series1, Series2};
