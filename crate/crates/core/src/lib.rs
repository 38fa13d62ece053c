//! Computational Clifford analysis.
//!
//! * [`algebra`]: `Cl_n` arithmetic over exact and floating scalars.
//! * [`symcalc`]: exact Dirac calculus on polynomials and radial expressions.
//! * [`kernels`]: Cauchy, Green and iterated kernels plus their spherical,
//!   periodic, plane-wave and complexified relatives.
//! * [`series`]: monogenic polynomial bases and decompositions.
//! * [`integration`]: quadrature realizations of the integral formulas.
//! * [`moebius`]: Vahlen matrices and conformal covariance.
//! * [`cli`]: verification suites, reports and the command-line front end.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fd;
pub mod integration;
pub mod kernels;
pub mod moebius;
pub mod sampling;
pub mod series;
pub mod symcalc;

pub use error::{Error, Result};
