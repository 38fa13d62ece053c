//! Pointwise holomorphic extension through the complexified Cauchy kernel.

use super::density::BoundaryDensity;
use super::formulas::sphere_of;
use super::rules::{omega, QuadratureRule};
use crate::algebra::{to_complex, CMv, Complex64};
use crate::error::{Error, Result};
use crate::kernels::complex_kernel_eval;

/// `f†(z) = −(1/ω_n) ∫ G†(x − z) n(x) f(x) dσ(x)`, which reduces to the Cauchy
/// integral at real `z`. Even `n` only; `z` must avoid the null cones of all
/// nodes.
pub fn holomorphic_extension(f: &BoundaryDensity, z: &[Complex64], rule: &QuadratureRule) -> Result<CMv> {
    let (c, r) = sphere_of(rule)?;
    let n = c.len();
    if z.len() != n {
        return Err(Error::InvalidParameter(format!("point must lie in C^{n}")));
    }
    let re: Vec<f64> = z.iter().map(|v| v.re).collect();
    if re.iter().zip(c).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt() >= r {
        return Err(Error::InvalidParameter("Re z must lie inside the sphere".into()));
    }
    let mut acc = CMv::zero(n);
    for nd in &rule.nodes {
        let nrm = nd.normal.as_ref().ok_or_else(|| Error::RuleMismatch("rule carries no normals".into()))?;
        let g = complex_kernel_eval(&nd.point, z)?;
        let nf = to_complex(&(&crate::algebra::FMv::vector(n, nrm) * &f.eval(&nd.point)));
        acc += &(&g * &nf).scale(&Complex64::new(nd.weight, 0.0));
    }
    Ok(acc.scale(&Complex64::new(-1.0 / omega(n), 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integration::rules::sphere_rule;
    use crate::series::{fueter_polynomial, MultiIndex};

    #[test]
    fn matches_polynomial_continuation() {
        let n = 4;
        let rule = sphere_rule(n, &[0.0; 4], 1.0, 24).unwrap();
        let p = fueter_polynomial(&MultiIndex(vec![1, 1, 0])).unwrap();
        let f = BoundaryDensity::from_polynomial(&p);
        let z = [
            Complex64::new(0.2, 0.05),
            Complex64::new(-0.1, 0.0),
            Complex64::new(0.15, -0.08),
            Complex64::new(0.0, 0.03),
        ];
        let v = holomorphic_extension(&f, &z, &rule).unwrap();
        assert!(v.dist(&p.evaluate_complex(&z)) < 1e-8, "{}", v.dist(&p.evaluate_complex(&z)));
        let real: Vec<Complex64> = z.iter().map(|c| Complex64::new(c.re, 0.0)).collect();
        let re: Vec<f64> = z.iter().map(|c| c.re).collect();
        let v = holomorphic_extension(&f, &real, &rule).unwrap();
        assert!(v.dist(&to_complex(&p.evaluate_f64(&re))) < 1e-9);
        let odd = sphere_rule(3, &[0.0; 3], 1.0, 8).unwrap();
        assert!(matches!(holomorphic_extension(&f, &z[..3], &odd), Err(Error::Unsupported(_))));
    }
}
