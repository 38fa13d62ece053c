//! Product quadrature rules on spheres, balls and spherical-cap boundaries.
//!
//! Sphere rules on `S^{n−1}` use hyperspherical coordinates with polar angles
//! `φ₁ … φ_{n−2} ∈ [0, π]` (Gauss–Legendre in each angle, `m` nodes) and an
//! azimuth on `[0, 2π)` (uniform, `2m` nodes). The surface element
//! `∏ sin^{n−1−k} φ_k` is folded into the weights.

use std::f64::consts::PI;

use super::gauss::gauss_legendre_on;
use crate::error::{Error, Result};

/// Polar-angle nodes per dimension used when no resolution is given.
pub const DEFAULT_RESOLUTION: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub enum Surface {
    /// `S^{n−1}(c, r) ⊂ R^n`.
    Sphere { center: Vec<f64>, radius: f64 },
    /// Solid ball `D(c, R) ⊂ R^n`.
    Ball { center: Vec<f64>, radius: f64 },
    /// Boundary of the cap `{x ∈ S^n : ⟨x, axis⟩ ≥ cos α}` in `R^{n+1}`, with
    /// normals tangent to `S^n` pointing out of the cap.
    CapBoundary { axis: Vec<f64>, angle: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub point: Vec<f64>,
    pub weight: f64,
    pub normal: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    pub surface: Surface,
    pub nodes: Vec<Node>,
    pub resolution: usize,
}

/// `ω_n = 2π^{n/2} / Γ(n/2)`, the area of the unit sphere in `R^n`.
pub fn omega(n: usize) -> f64 {
    // Γ(n/2) via the recursions from Γ(1) = 1 and Γ(1/2) = √π.
    let mut gamma = if n % 2 == 0 { 1.0 } else { PI.sqrt() };
    let mut a = if n % 2 == 0 { 1.0 } else { 0.5 };
    while a < n as f64 / 2.0 - 1e-9 {
        gamma *= a;
        a += 1.0;
    }
    2.0 * PI.powf(n as f64 / 2.0) / gamma
}

/// Unit-sphere nodes `(direction, weight)` with the pole of `φ₁` at `e₁`.
/// `first_angle` restricts `φ₁` to a sub-interval.
fn unit_sphere_nodes(n: usize, m: usize, first_angle: (f64, f64)) -> Vec<(Vec<f64>, f64)> {
    if n == 1 {
        return vec![(vec![1.0], 1.0), (vec![-1.0], 1.0)];
    }
    let az = 2 * m;
    let azimuth: Vec<(f64, f64)> = (0..az)
        .map(|k| (2.0 * PI * (k as f64 + 0.5) / az as f64, 2.0 * PI / az as f64))
        .collect();
    let mut partial: Vec<(Vec<f64>, f64)> = azimuth
        .iter()
        .map(|(t, w)| (vec![t.cos(), t.sin()], *w))
        .collect();
    // Build S^{d} from S^{d−1} by one polar angle, d = 2 … n−1.
    for d in 2..n {
        let (lo, hi) = if d == n - 1 { first_angle } else { (0.0, PI) };
        let (phis, ws) = gauss_legendre_on(m, lo, hi);
        let mut next = Vec::with_capacity(partial.len() * m);
        for (phi, w) in phis.iter().zip(&ws) {
            let (c, s) = (phi.cos(), phi.sin());
            let jac = s.powi(d as i32 - 1);
            for (dir, pw) in &partial {
                let mut p = Vec::with_capacity(d + 1);
                p.push(c);
                p.extend(dir.iter().map(|v| v * s));
                next.push((p, pw * w * jac));
            }
        }
        partial = next;
    }
    partial
}

fn check_center(n: usize, center: &[f64], radius: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter("quadrature needs n ≥ 2".into()));
    }
    if center.len() != n {
        return Err(Error::InvalidParameter(format!("center must have {n} coordinates")));
    }
    if radius <= 0.0 || !radius.is_finite() {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    Ok(())
}

/// Product rule on `S^{n−1}(center, radius)` with outward normals.
pub fn sphere_rule(n: usize, center: &[f64], radius: f64, resolution: usize) -> Result<QuadratureRule> {
    check_center(n, center, radius)?;
    let m = resolution.max(1);
    let scale = radius.powi(n as i32 - 1);
    let nodes = unit_sphere_nodes(n, m, (0.0, PI))
        .into_iter()
        .map(|(dir, w)| Node {
            point: dir.iter().zip(center).map(|(d, c)| c + radius * d).collect(),
            weight: w * scale,
            normal: Some(dir),
        })
        .collect();
    Ok(QuadratureRule {
        surface: Surface::Sphere {
            center: center.to_vec(),
            radius,
        },
        nodes,
        resolution: m,
    })
}

/// Reflection exchanging `e₁` and the unit vector `z`.
pub(crate) fn pole_reflection(z: &[f64]) -> impl Fn(&[f64]) -> Vec<f64> + '_ {
    let mut v: Vec<f64> = z.iter().map(|a| -a).collect();
    v[0] += 1.0;
    let vv: f64 = v.iter().map(|a| a * a).sum();
    move |x: &[f64]| {
        if vv < 1e-30 {
            return x.to_vec();
        }
        let dot: f64 = x.iter().zip(&v).map(|(a, b)| a * b).sum();
        x.iter().zip(&v).map(|(a, b)| a - 2.0 * dot / vv * b).collect()
    }
}

/// Unit-sphere rule whose polar axis passes through the unit vector `pole`,
/// with `φ₁ ∈ [excision, π]`.
pub fn rotated_unit_sphere_rule(pole: &[f64], resolution: usize, excision: f64) -> Result<QuadratureRule> {
    let n = pole.len();
    let norm: f64 = pole.iter().map(|a| a * a).sum::<f64>().sqrt();
    if n < 2 || (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter("pole must be a unit vector in R^n, n ≥ 2".into()));
    }
    if !(0.0..PI).contains(&excision) {
        return Err(Error::InvalidParameter("excision angle must lie in [0, π)".into()));
    }
    let reflect = pole_reflection(pole);
    let nodes = unit_sphere_nodes(n, resolution.max(1), (excision, PI))
        .into_iter()
        .map(|(dir, w)| {
            let p = reflect(&dir);
            Node {
                point: p.clone(),
                weight: w,
                normal: Some(p),
            }
        })
        .collect();
    Ok(QuadratureRule {
        surface: Surface::Sphere {
            center: vec![0.0; n],
            radius: 1.0,
        },
        nodes,
        resolution,
    })
}

/// Product rule on the solid ball: Gauss–Legendre in the radius times the
/// sphere rule. Nodes carry no normals.
pub fn ball_rule(n: usize, center: &[f64], radius: f64, resolution: usize) -> Result<QuadratureRule> {
    check_center(n, center, radius)?;
    let m = resolution.max(1);
    let dirs = unit_sphere_nodes(n, m, (0.0, PI));
    let (rs, rw) = gauss_legendre_on(m, 0.0, radius);
    let mut nodes = Vec::with_capacity(dirs.len() * m);
    for (r, w) in rs.iter().zip(&rw) {
        let jac = r.powi(n as i32 - 1);
        for (dir, dw) in &dirs {
            nodes.push(Node {
                point: dir.iter().zip(center).map(|(d, c)| c + r * d).collect(),
                weight: w * dw * jac,
                normal: None,
            });
        }
    }
    Ok(QuadratureRule {
        surface: Surface::Ball {
            center: center.to_vec(),
            radius,
        },
        nodes,
        resolution: m,
    })
}

/// Rule on the boundary of the cap `{x ∈ S^n : ⟨x, axis⟩ ≥ cos α}`, an
/// `(n−1)`-sphere of radius `sin α` in `R^{n+1}`.
pub fn cap_boundary_rule(axis: &[f64], angle: f64, resolution: usize) -> Result<QuadratureRule> {
    let dim = axis.len();
    let norm: f64 = axis.iter().map(|a| a * a).sum::<f64>().sqrt();
    if dim < 3 || (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter("axis must be a unit vector in R^{n+1}, n ≥ 2".into()));
    }
    if !(angle > 0.0 && angle < PI) {
        return Err(Error::InvalidParameter("cap angle must lie in (0, π)".into()));
    }
    let n = dim - 1;
    let (c, s) = (angle.cos(), angle.sin());
    // Orthonormal frame of axis^⊥: reflect e₂ … e_{n+1} by the map sending e₁ to axis.
    let reflect = pole_reflection(axis);
    let basis: Vec<Vec<f64>> = (1..dim)
        .map(|j| {
            let mut e = vec![0.0; dim];
            e[j] = 1.0;
            reflect(&e)
        })
        .collect();
    let scale = s.powi(n as i32 - 1);
    let nodes = unit_sphere_nodes(n, resolution.max(1), (0.0, PI))
        .into_iter()
        .map(|(dir, w)| {
            let mut u = vec![0.0; dim];
            for (coef, b) in dir.iter().zip(&basis) {
                for (ui, bi) in u.iter_mut().zip(b) {
                    *ui += coef * bi;
                }
            }
            let point: Vec<f64> = axis.iter().zip(&u).map(|(a, v)| c * a + s * v).collect();
            // Tangent to S^n, orthogonal to the boundary, away from the axis.
            let normal: Vec<f64> = axis.iter().zip(&u).map(|(a, v)| c * v - s * a).collect();
            Node {
                point,
                weight: w * scale,
                normal: Some(normal),
            }
        })
        .collect();
    Ok(QuadratureRule {
        surface: Surface::CapBoundary {
            axis: axis.to_vec(),
            angle,
        },
        nodes,
        resolution,
    })
}

impl QuadratureRule {
    pub fn total_weight(&self) -> f64 {
        self.nodes.iter().map(|n| n.weight).sum()
    }

    /// Ambient dimension of the nodes.
    pub fn dim(&self) -> usize {
        self.nodes.first().map(|n| n.point.len()).unwrap_or(0)
    }

    pub fn has_normals(&self) -> bool {
        self.nodes.iter().all(|n| n.normal.is_some())
    }
}
