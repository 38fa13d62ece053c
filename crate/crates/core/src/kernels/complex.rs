//! The complexified Cauchy kernel `G†(x − z)` for even `n`.
//!
//! The holomorphic continuation of `w / (w²)^{n/2}` at a real `w` equals
//! `w / (−‖w‖²)^{n/2} = (−1)^{n/2} G(w)`. [`complex_kernel_eval`] carries the
//! factor `(−1)^{n/2}` so that it agrees with `G(x − y)` when `z = y` is real;
//! [`complex_kernel_eval_unnormalized`] is the bare quotient.

use num_traits::Zero;

use crate::algebra::{CMv, Complex64};
use crate::error::{Error, Result};

/// Relative threshold for `|(x − z)²| / ‖x − z‖²` below which `z` is taken
/// to lie on the null cone `N(x)`.
pub const NULL_CONE_TOL: f64 = 1e-12;

/// `(x − z) / ((x − z)²)^{n/2}`.
pub fn complex_kernel_eval_unnormalized(x: &[f64], z: &[Complex64]) -> Result<CMv> {
    let n = x.len();
    if z.len() != n {
        return Err(Error::InvalidParameter("x and z must have the same length".into()));
    }
    crate::algebra::multivector::check_dim(n)?;
    if n % 2 == 1 || n == 0 {
        return Err(Error::Unsupported(format!(
            "G† is single-valued only for even n; got n={n}"
        )));
    }
    let w: Vec<Complex64> = x.iter().zip(z).map(|(a, b)| Complex64::new(*a, 0.0) - b).collect();
    let square: Complex64 = -w.iter().map(|c| c * c).sum::<Complex64>();
    let scale: f64 = w.iter().map(|c| c.norm_sqr()).sum();
    if scale.is_zero() || square.norm() <= NULL_CONE_TOL * scale {
        return Err(Error::Singular("z lies on the null cone N(x)".into()));
    }
    let denom = square.powi((n / 2) as i32);
    Ok(CMv::vector(n, &w).scale(&denom.inv()))
}

/// `G†(x − z) = (−1)^{n/2} (x − z) / ((x − z)²)^{n/2}`; equals `G(x − y)` at `z = y ∈ R^n`.
pub fn complex_kernel_eval(x: &[f64], z: &[Complex64]) -> Result<CMv> {
    let raw = complex_kernel_eval_unnormalized(x, z)?;
    Ok(if (x.len() / 2) % 2 == 0 { raw } else { -raw })
}
