//! Finite-difference Dirac operators for pointwise evaluators.

use crate::algebra::{Multivector, Scalar};

/// Default step for first-order checks.
pub const STEP: f64 = 1e-4;

/// Central difference stencils.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stencil {
    /// `(f(x+h) − f(x−h)) / 2h`, error `O(h²)`.
    Second,
    /// Five-point stencil, error `O(h⁴)`; exact on polynomials of degree ≤ 4.
    Fourth,
}

fn shifted(x: &[f64], j: usize, d: f64) -> Vec<f64> {
    let mut y = x.to_vec();
    y[j] += d;
    y
}

pub fn partial<S, F>(f: &F, x: &[f64], j: usize, h: f64, stencil: Stencil) -> Multivector<S>
where
    S: Scalar + From<f64>,
    F: Fn(&[f64]) -> Multivector<S> + ?Sized,
{
    match stencil {
        Stencil::Second => {
            let diff = &f(&shifted(x, j, h)) - &f(&shifted(x, j, -h));
            diff.scale(&S::from(1.0 / (2.0 * h)))
        }
        Stencil::Fourth => {
            let a = f(&shifted(x, j, -2.0 * h));
            let b = f(&shifted(x, j, -h));
            let c = f(&shifted(x, j, h));
            let d = f(&shifted(x, j, 2.0 * h));
            let num = &(&(&a - &d) + &c.scale(&S::from(8.0))) - &b.scale(&S::from(8.0));
            num.scale(&S::from(1.0 / (12.0 * h)))
        }
    }
}

/// `Σ_j e_j ∂_j f` over the coordinates of `x`.
pub fn dirac_with<S, F>(f: &F, x: &[f64], h: f64, stencil: Stencil) -> Multivector<S>
where
    S: Scalar + From<f64>,
    F: Fn(&[f64]) -> Multivector<S> + ?Sized,
{
    let mut out: Option<Multivector<S>> = None;
    for j in 0..x.len() {
        let dj = partial(f, x, j, h, stencil);
        let term = &Multivector::basis(dj.dim(), j + 1) * &dj;
        out = Some(match out {
            Some(acc) => &acc + &term,
            None => term,
        });
    }
    out.expect("at least one coordinate")
}

pub fn dirac<S, F>(f: &F, x: &[f64]) -> Multivector<S>
where
    S: Scalar + From<f64>,
    F: Fn(&[f64]) -> Multivector<S> + ?Sized,
{
    dirac_with(f, x, STEP, Stencil::Second)
}

/// `Σ_j ∂_j f e_j`.
pub fn dirac_right<S, F>(f: &F, x: &[f64]) -> Multivector<S>
where
    S: Scalar + From<f64>,
    F: Fn(&[f64]) -> Multivector<S> + ?Sized,
{
    let mut out: Option<Multivector<S>> = None;
    for j in 0..x.len() {
        let dj = partial(f, x, j, STEP, Stencil::Second);
        let term = &dj * &Multivector::basis(dj.dim(), j + 1);
        out = Some(match out {
            Some(acc) => &acc + &term,
            None => term,
        });
    }
    out.expect("at least one coordinate")
}

/// `‖D f(x)‖ / Σ_j ‖∂_j f(x)‖`, the Dirac residual relative to the size of
/// the gradient.
pub fn dirac_residual<S, F>(f: &F, x: &[f64]) -> f64
where
    S: Scalar + From<f64>,
    F: Fn(&[f64]) -> Multivector<S> + ?Sized,
{
    let scale: f64 = (0..x.len())
        .map(|j| partial(f, x, j, STEP, Stencil::Second).norm())
        .sum();
    dirac(f, x).norm() / scale.max(1e-300)
}

/// `D^k f(x)` by nested five-point stencils with step `h`.
pub fn dirac_power<S, F>(f: &F, x: &[f64], k: u32, h: f64) -> Multivector<S>
where
    S: Scalar + From<f64>,
    F: Fn(&[f64]) -> Multivector<S> + ?Sized,
{
    if k == 0 {
        return f(x);
    }
    let inner = |y: &[f64]| dirac_power(f, y, k - 1, h);
    dirac_with(&inner, x, h, Stencil::Fourth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FMv;

    #[test]
    fn vector_variable_has_dirac_minus_n() {
        let f = |x: &[f64]| FMv::vector(3, x);
        let d = dirac(&f, &[0.3, -0.2, 0.5]);
        assert!((d.scalar_part() + 3.0).abs() < 1e-8);
    }

    #[test]
    fn fourth_order_is_exact_on_quartics() {
        let f = |x: &[f64]| FMv::scalar(2, x[0].powi(4) + x[1].powi(3));
        let d = partial(&f, &[0.7, 0.2], 0, 1e-2, Stencil::Fourth);
        assert!((d.scalar_part() - 4.0 * 0.7f64.powi(3)).abs() < 1e-11);
    }

    #[test]
    fn nested_power_of_cubic() {
        // D²(x) = 0 and D²(x‖x‖²)·… : use D² = −Δ on a scalar quartic.
        let f = |x: &[f64]| FMv::scalar(3, x[0].powi(4));
        let d2 = dirac_power(&f, &[0.4, 0.1, -0.3], 2, 1e-2);
        assert!((d2.scalar_part() + 12.0 * 0.16).abs() < 1e-7);
    }
}
