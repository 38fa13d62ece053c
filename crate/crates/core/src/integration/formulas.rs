//! Boundary and volume integral formulas on spheres and balls.
//!
//! Orientation: with `e_j² = −1` one has `G(x − y) n(x) → −‖x − y‖^{1−n}` on
//! small spheres around `y`, so the reproducing formula reads
//! `f(y) = −(1/ω_n) ∫ G(x − y) n(x) f(x) dσ(x) = (1/ω_n) ∫ G(y − x) n(x) f(x) dσ(x)`.
//! All formulas below are stated with that sign.

use rayon::prelude::*;

use super::density::{pairwise_sum, BoundaryDensity};
use super::rules::{omega, QuadratureRule, Surface};
use crate::algebra::FMv;
use crate::error::{Error, Result};
use crate::kernels::{cauchy_f64, green_f64, iterated_family};
use crate::symcalc::NumericRadial;

/// Relative distance from the sphere below which a point counts as on it.
const ON_SURFACE: f64 = 1e-9;

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
}

pub(crate) fn sphere_of(rule: &QuadratureRule) -> Result<(&[f64], f64)> {
    match &rule.surface {
        Surface::Sphere { center, radius } => Ok((center, *radius)),
        other => Err(Error::RuleMismatch(format!("expected a sphere rule, got {other:?}"))),
    }
}

fn normal(node: &super::rules::Node) -> Result<FMv> {
    node.normal
        .as_ref()
        .map(|v| FMv::vector(v.len(), v))
        .ok_or_else(|| Error::RuleMismatch("rule carries no normals".into()))
}

/// `Σ w · term(node)`, evaluated in parallel and summed pairwise.
pub(crate) fn integrate<F>(rule: &QuadratureRule, term: F) -> Result<FMv>
where
    F: Fn(&super::rules::Node) -> Result<FMv> + Sync,
{
    let dim = rule.dim();
    let parts: Vec<FMv> = rule
        .nodes
        .par_iter()
        .map(|nd| term(nd).map(|v| v.scale(&nd.weight)))
        .collect::<Result<_>>()?;
    Ok(pairwise_sum(dim, &parts))
}

/// `∫ g n f dσ`; `None` stands for the constant 1.
pub fn surface_integral(
    g: Option<&BoundaryDensity>,
    f: Option<&BoundaryDensity>,
    rule: &QuadratureRule,
) -> Result<FMv> {
    integrate(rule, |nd| {
        let mut v = normal(nd)?;
        if let Some(g) = g {
            v = &g.eval(&nd.point) * &v;
        }
        if let Some(f) = f {
            v = &v * &f.eval(&nd.point);
        }
        Ok(v)
    })
}

fn check_off_surface(rule: &QuadratureRule, y: &[f64]) -> Result<f64> {
    let (c, r) = sphere_of(rule)?;
    if y.len() != c.len() {
        return Err(Error::InvalidParameter(format!("point must lie in R^{}", c.len())));
    }
    let d = dist(y, c);
    if (d - r).abs() <= ON_SURFACE * r {
        return Err(Error::Singular("evaluation point lies on the surface".into()));
    }
    Ok(d - r)
}

fn check_interior(rule: &QuadratureRule, y: &[f64]) -> Result<()> {
    if check_off_surface(rule, y)? > 0.0 {
        return Err(Error::InvalidParameter("evaluation point lies outside the surface".into()));
    }
    Ok(())
}

/// Cauchy integral `(1/ω_n) ∫ G(y − x) n(x) f(x) dσ(x)` at an interior point.
pub fn cauchy_integral(f: &BoundaryDensity, y: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    check_interior(rule, y)?;
    cauchy_integral_off_surface(f, y, rule)
}

/// The Cauchy integral at any point off the surface; it vanishes outside.
pub fn cauchy_integral_off_surface(f: &BoundaryDensity, y: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    check_off_surface(rule, y)?;
    let w = omega(y.len());
    Ok(integrate(rule, |nd| Ok(&(&cauchy_f64(&sub(y, &nd.point)) * &normal(nd)?) * &f.eval(&nd.point)))?
        .scale(&(1.0 / w)))
}

/// Right-sided Cauchy integral `(1/ω_n) ∫ g(x) n(x) G(y − x) dσ(x)`.
pub fn cauchy_integral_right(g: &BoundaryDensity, y: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    check_interior(rule, y)?;
    let w = omega(y.len());
    Ok(integrate(rule, |nd| Ok(&(&g.eval(&nd.point) * &normal(nd)?) * &cauchy_f64(&sub(y, &nd.point))))?
        .scale(&(1.0 / w)))
}

/// Solid mean `(1/(R ω_n)) ∫_{D(y,R)} f(x) / ‖x − y‖^{n−1} dx` over a ball rule
/// centred at `y`.
pub fn mean_value(f: &BoundaryDensity, y: &[f64], radius: f64, rule: &QuadratureRule) -> Result<FMv> {
    let (c, r) = match &rule.surface {
        Surface::Ball { center, radius } => (center, *radius),
        other => return Err(Error::RuleMismatch(format!("expected a ball rule, got {other:?}"))),
    };
    if dist(c, y) > 1e-12 * r.max(1.0) || (r - radius).abs() > 1e-12 * r {
        return Err(Error::RuleMismatch("ball rule must be D(y, R)".into()));
    }
    let n = y.len();
    let total = integrate(rule, |nd| {
        let d = dist(&nd.point, y);
        Ok(f.eval(&nd.point).scale(&d.powi(1 - n as i32)))
    })?;
    Ok(total.scale(&(1.0 / (radius * omega(n)))))
}

/// Surface mean `(1/(ω_n r^{n−1})) ∫_{∂B(a,r)} h dσ`.
pub fn harmonic_surface_mean(h: &BoundaryDensity, rule: &QuadratureRule) -> Result<FMv> {
    let (c, r) = sphere_of(rule)?;
    let n = c.len();
    let total = integrate(rule, |nd| Ok(h.eval(&nd.point)))?;
    Ok(total.scale(&(1.0 / (omega(n) * r.powi(n as i32 - 1)))))
}

/// Green's formula `h(y) = −(1/ω_n) ∫ (G(x − y) n h + H(x − y) n Dh) dσ` for
/// harmonic `h`, with `Dh` supplied.
pub fn greens_formula(
    h: &BoundaryDensity,
    dh: &BoundaryDensity,
    y: &[f64],
    rule: &QuadratureRule,
) -> Result<FMv> {
    check_interior(rule, y)?;
    let n = y.len();
    if n < 3 {
        return Err(Error::InvalidParameter("Green's formula with H needs n ≥ 3".into()));
    }
    let total = integrate(rule, |nd| {
        let d = sub(&nd.point, y);
        let nv = normal(nd)?;
        let a = &(&cauchy_f64(&d) * &nv) * &h.eval(&nd.point);
        let b = (&nv * &dh.eval(&nd.point)).scale(&green_f64(&d));
        Ok(&a + &b)
    })?;
    Ok(total.scale(&(-1.0 / omega(n))))
}

/// Cauchy–Green formula for `D^k f = 0`:
/// `f(y) = −(1/ω_n) ∫ Σ_{j=1}^{k} (−1)^{j−1} G_j(x − y) n D^{j−1} f dσ`.
///
/// `derivatives[j]` is `D^j f` for `j = 0 … k−1`; `k` is their number.
pub fn cauchy_green_k(derivatives: &[BoundaryDensity], y: &[f64], rule: &QuadratureRule) -> Result<FMv> {
    let k = derivatives.len();
    if k < 1 {
        return Err(Error::InvalidParameter("need k ≥ 1 (supply at least f)".into()));
    }
    check_interior(rule, y)?;
    let n = y.len();
    let kernels: Vec<NumericRadial> = iterated_family(n, k)?.iter().map(|g| g.symbolic.compile()).collect();
    let total = integrate(rule, |nd| {
        let d = sub(&nd.point, y);
        let nv = normal(nd)?;
        let mut acc = FMv::zero(n);
        for (j, (g, f)) in kernels.iter().zip(derivatives).enumerate() {
            let term = &(&g.eval(&d) * &nv) * &f.eval(&nd.point);
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        Ok(acc)
    })?;
    Ok(total.scale(&(-1.0 / omega(n))))
}

/// A Clifford-valued measure for the Cauchy transform.
#[derive(Clone, Debug)]
pub enum Measure {
    /// Point masses `Σ δ_{x_i} m_i`.
    Points { points: Vec<Vec<f64>>, masses: Vec<FMv> },
    /// `f dσ` (sphere rule) or `f dx` (ball rule).
    Density { rule: QuadratureRule, density: BoundaryDensity },
}

/// Cauchy transform `∫ G(y − x) dμ(x)`, left monogenic in `y` off the support.
///
/// The kernel is evaluated at `y − x` (evaluation point minus source), the
/// same orientation as the Cauchy integral above; a unit mass at the origin
/// gives `G(y)`.
pub fn cauchy_transform(measure: &Measure, y: &[f64]) -> Result<FMv> {
    match measure {
        Measure::Points { points, masses } => {
            if points.len() != masses.len() {
                return Err(Error::InvalidParameter("one mass per point required".into()));
            }
            let mut acc = FMv::zero(y.len());
            for (p, m) in points.iter().zip(masses) {
                if p.len() != y.len() {
                    return Err(Error::InvalidParameter("point dimension mismatch".into()));
                }
                if dist(p, y) < 1e-12 {
                    return Err(Error::Singular("evaluation point lies in the support".into()));
                }
                acc += &(&cauchy_f64(&sub(y, p)) * m);
            }
            Ok(acc)
        }
        Measure::Density { rule, density } => {
            match &rule.surface {
                Surface::Sphere { .. } => {
                    check_off_surface(rule, y)?;
                }
                Surface::Ball { center, radius } => {
                    if dist(center, y) <= radius * (1.0 + ON_SURFACE) {
                        return Err(Error::Singular("evaluation point lies in the support".into()));
                    }
                }
                Surface::CapBoundary { .. } => {
                    return Err(Error::RuleMismatch("cap rules are not supported here".into()))
                }
            }
            integrate(rule, |nd| Ok(&cauchy_f64(&sub(y, &nd.point)) * &density.eval(&nd.point)))
        }
    }
}
