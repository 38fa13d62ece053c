//! Cayley transform between the hyperplane `x_n = 0` and the unit sphere,
//! and monogenic extension of polynomial data off the unit sphere.

use super::vahlen::{Generator, VahlenMatrix};
use crate::algebra::{Rational, FMv};
use crate::error::{Error, Result};
use crate::series::kmonogenic_split;
use crate::symcalc::{CliffordPolynomial, NumericRadial, RadialExpr, VariableKind};

/// `x ↦ (e_n x + 1)(x + e_n)^{-1} = e_n + 2(x + e_n)^{-1}`, assembled as
/// translation by `e_n`, dilation by 2, inversion and translation by `e_n`.
pub fn cayley_matrix(n: usize) -> Result<VahlenMatrix> {
    if n < 2 {
        return Err(Error::InvalidParameter("the Cayley transform needs n ≥ 2".into()));
    }
    let mut e = vec![0.0; n];
    e[n - 1] = 1.0;
    VahlenMatrix::from_generators(
        n,
        &[Generator::Translation(e.clone()), Generator::Dilation(2.0), Generator::Inversion, Generator::Translation(e)],
    )
}

/// Cayley transform; maps `x_n = 0` onto the unit sphere minus `e_n`.
pub fn cayley(x: &[f64]) -> Result<Vec<f64>> {
    cayley_matrix(x.len())?.apply(x)
}

pub fn cayley_inverse(y: &[f64]) -> Result<Vec<f64>> {
    cayley_matrix(y.len())?.inverse().apply(y)
}

/// Left monogenic function on `R^n ∖ {0}` whose restriction to the unit
/// sphere is given polynomial data.
#[derive(Clone, Debug)]
pub struct SphereExtension {
    expr: RadialExpr,
    compiled: NumericRadial,
}

impl SphereExtension {
    pub fn eval(&self, x: &[f64]) -> Result<FMv> {
        self.expr.evaluate_f64(x).map(|_| self.compiled.eval(x))
    }

    /// `F` as an exact radial expression.
    pub fn expr(&self) -> &RadialExpr {
        &self.expr
    }
}

/// The unique left monogenic `F` near `S^{n−1}` with `F = p` on the sphere.
///
/// Writes `p = Σ_j x^j f_j` with monogenic `f_j` and uses `x² = −1` on the
/// sphere: even `j` contribute `±f_j`, odd `j` contribute `±x f_j`, and each
/// homogeneous piece `x M_k` of degree `k + 1` is replaced by its outer
/// monogenic extension `x M_k(x) / ‖x‖^{n+2k}`, which agrees with it on the
/// sphere.
pub fn ck_on_sphere(p: &CliffordPolynomial) -> Result<SphereExtension> {
    if p.kind() != VariableKind::Vector || p.nparams() != 0 {
        return Err(Error::Unsupported("polynomial data in the vector variables only".into()));
    }
    let n = p.dim();
    let k = p.degree().map_or(1, |d| d + 1);
    let parts = kmonogenic_split(p, k)?;
    let x = CliffordPolynomial::x_vector(n);
    let mut expr = RadialExpr::from_poly(p.zero_like())?;
    for (j, f) in parts.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let sign = Rational::from_integer(if (j / 2) % 2 == 0 { 1.into() } else { (-1).into() });
        if j % 2 == 0 {
            expr = &expr + &RadialExpr::from_poly(f.scale(&sign))?;
        } else {
            for (deg, m) in f.homogeneous_components() {
                let m_exp = (n + 2 * deg as usize) as i32;
                expr = &expr + &RadialExpr::term((&x * &m).scale(&sign), m_exp, 0)?;
            }
        }
    }
    Ok(SphereExtension {
        compiled: expr.compile(),
        expr,
    })
}
