//! Arithmetic in `Cl_n` with `e_j² = −1` over exact and floating scalars.

pub mod blade;
pub mod multivector;
pub mod scalar;
pub mod special;
pub mod text;

pub use blade::{Blade, MAX_DIM};
pub use multivector::Multivector;
pub use scalar::{parse_rational, rational, rational_to_f64, Complex64, ComplexRational, Rational, Scalar};
pub use special::{quaternion_projectors, unital_isomorphism};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarField {
    Rational,
    Float,
    ComplexFloat,
}

/// Dimension and scalar field shared by values created together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    n: usize,
    scalar_field: ScalarField,
}

impl AlgebraContext {
    pub fn new(n: usize, scalar_field: ScalarField) -> Result<Self> {
        multivector::check_dim(n)?;
        Ok(AlgebraContext { n, scalar_field })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scalar_field(&self) -> ScalarField {
        self.scalar_field
    }

    pub fn blade_count(&self) -> usize {
        1 << self.n
    }
}

pub type RMv = Multivector<Rational>;
pub type FMv = Multivector<f64>;
pub type CMv = Multivector<Complex64>;

pub fn to_f64(m: &RMv) -> FMv {
    m.map(rational_to_f64)
}

pub fn to_complex(m: &FMv) -> CMv {
    m.map(|c| Complex64::new(*c, 0.0))
}

pub fn real_part(m: &CMv) -> FMv {
    m.map(|c| c.re)
}

pub fn imag_part(m: &CMv) -> FMv {
    m.map(|c| c.im)
}

/// Converts an exact complex multivector to complex doubles.
pub fn complex_rational_to_c64(m: &Multivector<ComplexRational>) -> CMv {
    m.map(|c| Complex64::new(rational_to_f64(&c.re), rational_to_f64(&c.im)))
}
