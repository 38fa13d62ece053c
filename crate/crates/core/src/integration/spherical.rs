//! Cauchy and Green formulas on caps of `S^n ⊂ R^{n+1}`.

use super::density::BoundaryDensity;
use super::formulas::integrate;
use super::rules::{omega, QuadratureRule, Surface};
use crate::algebra::FMv;
use crate::error::{Error, Result};
use crate::kernels::{spherical_cauchy_euclidean, spherical_green};

fn check_inside_cap(rule: &QuadratureRule, y: &[f64]) -> Result<usize> {
    let (axis, angle) = match &rule.surface {
        Surface::CapBoundary { axis, angle } => (axis, *angle),
        other => return Err(Error::RuleMismatch(format!("expected a cap-boundary rule, got {other:?}"))),
    };
    if y.len() != axis.len() {
        return Err(Error::InvalidParameter(format!("point must lie in R^{}", axis.len())));
    }
    let len = y.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (len - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter("point must lie on the unit sphere".into()));
    }
    let height: f64 = y.iter().zip(axis).map(|(a, b)| a * b).sum();
    if height <= angle.cos() + 1e-9 {
        return Err(Error::InvalidParameter("point lies outside the cap".into()));
    }
    Ok(axis.len() - 1)
}

fn node_normal(nd: &super::rules::Node) -> FMv {
    let v = nd.normal.as_ref().expect("cap rules carry normals");
    FMv::vector(v.len(), v)
}

/// `f(y') = −(1/ω_n) ∫ G_s(x, y') n(x) f(x) dσ(x)` over the cap boundary, for
/// `f` annihilated by `D_s` inside the cap.
pub fn spherical_cauchy_formula(f: &BoundaryDensity, y: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    let n = check_inside_cap(rule, y)?;
    let total = integrate(rule, |nd| {
        Ok(&(&spherical_cauchy_euclidean(&nd.point, y)? * &node_normal(nd)) * &f.eval(&nd.point))
    })?;
    Ok(total.scale(&(-1.0 / omega(n))))
}

/// Green's formula on a cap, `h(y') = −(1/ω_n) ∫ (G_s n h − H_s n D_s h) dσ`,
/// with `D_s h` supplied, for `h` annihilated by `D_s(D_s − x)` inside the cap
/// (see [`crate::kernels::spherical_laplacian`]).
pub fn spherical_green_formula(
    h: &BoundaryDensity,
    dsh: &BoundaryDensity,
    y: &[f64],
    rule: &QuadratureRule,
) -> Result<FMv> {
    let n = check_inside_cap(rule, y)?;
    if n < 3 {
        return Err(Error::InvalidParameter("H_s needs n ≥ 3".into()));
    }
    let total = integrate(rule, |nd| {
        let nv = node_normal(nd);
        let a = &(&spherical_cauchy_euclidean(&nd.point, y)? * &nv) * &h.eval(&nd.point);
        let b = (&nv * &dsh.eval(&nd.point)).scale(&spherical_green(&nd.point, y)?);
        Ok(&a - &b)
    })?;
    Ok(total.scale(&(-1.0 / omega(n))))
}
