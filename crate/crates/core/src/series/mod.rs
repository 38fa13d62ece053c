//! Monogenic polynomial bases and decompositions: Fueter polynomials, Taylor
//! coefficients, Cauchy–Kowalewska extension, Almansi and k-monogenic splits,
//! and the Fueter–Sce construction.

pub mod almansi;
pub mod ck;
pub mod fueter;
pub mod fueter_sce;
pub mod taylor;

pub use almansi::{almansi_split, kmonogenic_split, reassemble, x_power_eigenvalue, x_power_is_sharp, x_power_monogenic};
pub use ck::{ck_extension, tangential_dirac};
pub use fueter::{fueter_polynomial, fueter_variable, MultiIndex};
pub use fueter_sce::{fueter_sce, fueter_sce_power, BivariatePoly, FueterSce};
pub use taylor::{sphere_inner_product, taylor_coefficients, taylor_coefficients_right, Side, TaylorExpansion};
