//! Exact symbolic calculus: polynomials with Clifford coefficients, radial
//! expressions, and the operators `D`, `D′`, `E` and `Λ`.
//!
//! The operators satisfy `x D = Λ − E` on polynomials in vector variables,
//! which is how the angular operator relates to the Dirac operator.

pub mod monomial;
pub mod numeric;
pub mod poly;
pub mod radial;
pub mod text;

pub use monomial::Monomial;
pub use numeric::{NumericPoly, NumericRadial};
pub use poly::{CliffordPolynomial, Poly, VariableKind};
pub use radial::RadialExpr;
pub use text::PolyJson;
