//! Singular Cauchy transform on spheres, Plemelj projections and the Hardy
//! split.
//!
//! `Cθ(z) = PV (1/ω_n) ∫ G(z − x) n(x) θ(x) dσ(x)` in the orientation of
//! [`super::formulas`], so that `C1 = ½`, `Cθ = ½θ` for boundary values of
//! inner monogenic functions and `Cθ = −½θ` for outer ones. The principal
//! value is computed as `½θ(z) + (1/ω_n) ∫ G(z − x) n(x) (θ(x) − θ(z)) dσ(x)`
//! on a product rule whose polar axis passes through `z`; in those
//! coordinates the subtracted integrand is bounded.

use super::density::BoundaryDensity;
use super::formulas::{integrate, sphere_of};
use super::rules::{omega, rotated_unit_sphere_rule, Node, QuadratureRule, Surface};
use crate::algebra::FMv;
use crate::error::{Error, Result};
use crate::kernels::cauchy_f64;

/// Rule on the sphere of `rule` with its polar axis through `z`.
fn rule_through(rule: &QuadratureRule, z: &[f64]) -> Result<QuadratureRule> {
    let (c, r) = sphere_of(rule)?;
    if z.len() != c.len() {
        return Err(Error::InvalidParameter(format!("point must lie in R^{}", c.len())));
    }
    let u: Vec<f64> = z.iter().zip(c).map(|(a, b)| (a - b) / r).collect();
    let len = u.iter().map(|a| a * a).sum::<f64>().sqrt();
    if (len - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter("z must lie on the sphere".into()));
    }
    let u: Vec<f64> = u.iter().map(|a| a / len).collect();
    let unit = rotated_unit_sphere_rule(&u, rule.resolution, 0.0)?;
    let scale = r.powi(c.len() as i32 - 1);
    Ok(QuadratureRule {
        surface: rule.surface.clone(),
        nodes: unit
            .nodes
            .into_iter()
            .map(|nd| Node {
                point: nd.point.iter().zip(c).map(|(p, cc)| cc + r * p).collect(),
                weight: nd.weight * scale,
                normal: nd.normal,
            })
            .collect(),
        resolution: rule.resolution,
    })
}

fn kernel_times_normal(z: &[f64], nd: &Node) -> FMv {
    let d: Vec<f64> = z.iter().zip(&nd.point).map(|(a, b)| a - b).collect();
    let nrm = nd.normal.as_ref().expect("sphere rules carry normals");
    &cauchy_f64(&d) * &FMv::vector(nrm.len(), nrm)
}

/// `Cθ(z)` by singularity subtraction.
pub fn singular_cauchy(theta: &BoundaryDensity, z: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    let local = rule_through(rule, z)?;
    let tz = theta.eval(z);
    let body = integrate(&local, |nd| Ok(&kernel_times_normal(z, nd) * &(&theta.eval(&nd.point) - &tz)))?;
    Ok(&body.scale(&(1.0 / omega(z.len()))) + &tz.scale(&0.5))
}

/// `PV (1/ω_n) ∫ G(z − x) n θ dσ` without subtraction, relying on the
/// symmetry of the rule about `z`. For `θ = 1` the integrand is bounded in
/// these coordinates, which gives an independent check of `C1 = ½`.
pub fn singular_cauchy_symmetric(theta: &BoundaryDensity, z: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    let local = rule_through(rule, z)?;
    let body = integrate(&local, |nd| Ok(&kernel_times_normal(z, nd) * &theta.eval(&nd.point)))?;
    Ok(body.scale(&(1.0 / omega(z.len()))))
}

/// `(±½I + C)θ` as a density on the sphere of `rule`. Off-sphere arguments
/// are projected radially onto the sphere.
pub fn plemelj_project(theta: &BoundaryDensity, sign: i8, rule: &QuadratureRule) -> Result<BoundaryDensity> {
    let (c, r) = sphere_of(rule)?;
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidParameter("sign must be +1 or −1".into()));
    }
    let (c, theta, rule) = (c.to_vec(), theta.clone(), rule.clone());
    let half = 0.5 * sign as f64;
    Ok(BoundaryDensity::from_fn(theta.dim(), move |z| {
        let len = z.iter().zip(&c).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        let z: Vec<f64> = z.iter().zip(&c).map(|(a, b)| b + (a - b) * r / len).collect();
        let cz = singular_cauchy(&theta, &z, &rule).expect("point projected onto the sphere");
        &theta.eval(&z).scale(&half) + &cz
    }))
}

/// `θ = inner + outer` with `inner = (½I + C)θ` and `outer = θ − inner`.
pub fn hardy_split(theta: &BoundaryDensity, rule: &QuadratureRule) -> Result<(BoundaryDensity, BoundaryDensity)> {
    if !matches!(rule.surface, Surface::Sphere { .. }) {
        return Err(Error::RuleMismatch("the Hardy split is implemented on spheres".into()));
    }
    let inner = plemelj_project(theta, 1, rule)?;
    let outer = theta.sub(&inner);
    Ok((inner, outer))
}
