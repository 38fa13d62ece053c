//! Kernels on the unit sphere `S^n ⊂ R^{n+1}` and the spherical Dirac
//! operator `D_s = x(Λ + n/2)`.
//!
//! `Λ = Σ_{i<j} e_i e_j (x_i ∂_j − x_j ∂_i)` only differentiates along
//! rotation flows, so it is applied here by central differences along
//! `t ↦ R_{ij}(t) x`, which stays on the sphere.

use crate::algebra::FMv;
use crate::error::{Error, Result};

/// Coincidence threshold for `‖x − y'‖`.
const COINCIDENT: f64 = 1e-12;
const STEP: f64 = 1e-4;

fn check_pair(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() || x.len() < 3 {
        return Err(Error::InvalidParameter("sphere points need equal length ≥ 3".into()));
    }
    let d2: f64 = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
    if d2.sqrt() < COINCIDENT {
        return Err(Error::Singular("coincident sphere points".into()));
    }
    Ok(d2)
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `G_s(x, y') = 2^{−n/2} (x − y') / (1 − ⟨x, y'⟩)^{n/2}`, with `x, y' ∈ S^n`
/// given as unit vectors of length `n + 1`.
pub fn spherical_cauchy(x: &[f64], y: &[f64]) -> Result<FMv> {
    check_pair(x, y)?;
    let n = (x.len() - 1) as f64;
    let s = 2f64.powf(-n / 2.0) * (1.0 - dot(x, y)).powf(-n / 2.0);
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| (a - b) * s).collect();
    Ok(FMv::vector(x.len(), &diff))
}

/// `G(x − y') = (x − y') / ‖x − y'‖^n`, the Euclidean form of [`spherical_cauchy`].
pub fn spherical_cauchy_euclidean(x: &[f64], y: &[f64]) -> Result<FMv> {
    let d2 = check_pair(x, y)?;
    let n = (x.len() - 1) as f64;
    let s = d2.powf(-n / 2.0);
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| (a - b) * s).collect();
    Ok(FMv::vector(x.len(), &diff))
}

/// `H_s(x, y') = 1 / ((n − 2) ‖x − y'‖^{n−2})`, for `n ≥ 3`.
pub fn spherical_green(x: &[f64], y: &[f64]) -> Result<f64> {
    let d2 = check_pair(x, y)?;
    let n = (x.len() - 1) as f64;
    if n < 3.0 {
        return Err(Error::InvalidParameter("H_s needs n ≥ 3".into()));
    }
    Ok(d2.powf(-(n - 2.0) / 2.0) / (n - 2.0))
}

/// `(G_s, H_s)` as two-point evaluators on `S^n`.
pub fn spherical_kernels(n: usize) -> Result<(SphericalKernel, SphericalKernel)> {
    if n < 3 {
        return Err(Error::InvalidParameter("spherical kernels need n ≥ 3".into()));
    }
    crate::algebra::multivector::check_dim(n + 1)?;
    Ok((SphericalKernel::Cauchy { n }, SphericalKernel::Green { n }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphericalKernel {
    Cauchy { n: usize },
    Green { n: usize },
}

impl SphericalKernel {
    pub fn eval(&self, x: &[f64], y: &[f64]) -> Result<FMv> {
        let n = match self {
            Self::Cauchy { n } | Self::Green { n } => *n,
        };
        if x.len() != n + 1 {
            return Err(Error::InvalidParameter(format!("expected points in R^{}", n + 1)));
        }
        match self {
            Self::Cauchy { .. } => spherical_cauchy(x, y),
            Self::Green { .. } => Ok(FMv::scalar(n + 1, spherical_green(x, y)?)),
        }
    }
}

fn rotate(x: &[f64], i: usize, j: usize, t: f64) -> Vec<f64> {
    let (c, s) = (t.cos(), t.sin());
    let mut y = x.to_vec();
    y[i] = c * x[i] - s * x[j];
    y[j] = s * x[i] + c * x[j];
    y
}

/// `Λ f(x)` for `f` defined near the sphere.
pub fn gamma_operator<F>(f: &F, x: &[f64]) -> FMv
where
    F: Fn(&[f64]) -> FMv + ?Sized,
{
    let dim = x.len();
    let mut out = FMv::zero(dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let lij = (&f(&rotate(x, i, j, STEP)) - &f(&rotate(x, i, j, -STEP))).scale(&(0.5 / STEP));
            let eij = &FMv::basis(dim, i + 1) * &FMv::basis(dim, j + 1);
            out += &(&eij * &lij);
        }
    }
    out
}

/// `D_s f(x) = x (Λ + n/2) f(x)` on `S^n`, `n = x.len() − 1`.
pub fn spherical_dirac<F>(f: &F, x: &[f64]) -> FMv
where
    F: Fn(&[f64]) -> FMv + ?Sized,
{
    let n = (x.len() - 1) as f64;
    let inner = &gamma_operator(f, x) + &f(x).scale(&(n / 2.0));
    &FMv::vector(x.len(), x) * &inner
}

/// `D_s (D_s − x) h`, the operator annihilating `H_s(·, y')` away from `y'`.
pub fn spherical_laplacian<F>(h: &F, x: &[f64]) -> FMv
where
    F: Fn(&[f64]) -> FMv + ?Sized,
{
    let inner = |p: &[f64]| &spherical_dirac(h, p) - &(&FMv::vector(p.len(), p) * &h(p));
    spherical_dirac(&inner, x)
}
