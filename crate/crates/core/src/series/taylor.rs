//! Taylor coefficients of monogenic functions in the Fueter basis, computed
//! from boundary values on a sphere.
//!
//! For `f` left monogenic on a neighbourhood of `B(w, R)`,
//! `f(y) = Σ_j P_j(y − w) a_j` with `a_j = ∂^j f(w) / j!` (derivatives in
//! `x₂ … x_n`, `j! = ∏ j_k!`). Differentiating the Cauchy formula and using
//! `(∂^j G)(w − x) = (−1)^{|j|+1} (∂^j G)(x − w)` gives
//!
//! `a_j = ((−1)^{|j|+1} / j!) (1/ω_n) ∫ (∂^j G)(x − w) n(x) f(x) dσ(x)`.
//!
//! Right monogenic `g` expand as `Σ_j b_j P̄_j(y − w)` (conjugated basis)
//! with `n f` replaced by `g n` and the kernel moved to the right.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::fueter::{fueter_polynomial, MultiIndex};
use crate::algebra::{rational_to_f64, FMv};
use crate::error::{Error, Result};
use crate::integration::formulas::{integrate, sphere_of};
use crate::integration::{omega, BoundaryDensity, QuadratureRule};
use crate::kernels::cauchy_kernel;
use crate::symcalc::NumericPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct TaylorExpansion {
    pub center: Vec<f64>,
    pub order: u32,
    pub side: Side,
    pub coefficients: BTreeMap<MultiIndex, FMv>,
    basis: Vec<(MultiIndex, NumericPoly)>,
}

impl TaylorExpansion {
    /// Partial sum of order `self.order` at `y`.
    pub fn eval(&self, y: &[f64]) -> FMv {
        let d: Vec<f64> = y.iter().zip(&self.center).map(|(a, b)| a - b).collect();
        let mut acc = FMv::zero(y.len());
        for (idx, p) in &self.basis {
            let a = &self.coefficients[idx];
            let pv = p.eval(&d);
            acc += &match self.side {
                Side::Left => &pv * a,
                Side::Right => &a.clone() * &pv,
            };
        }
        acc
    }

    pub fn coefficient(&self, idx: &MultiIndex) -> Option<&FMv> {
        self.coefficients.get(idx)
    }
}

/// Left Taylor coefficients of `f` up to total degree `order`, from boundary
/// values on the sphere of `rule`.
pub fn taylor_coefficients(f: &BoundaryDensity, order: u32, rule: &QuadratureRule) -> Result<TaylorExpansion> {
    expansion(f, order, rule, Side::Left)
}

/// Right Taylor coefficients `b_j` of a right monogenic `g`.
pub fn taylor_coefficients_right(g: &BoundaryDensity, order: u32, rule: &QuadratureRule) -> Result<TaylorExpansion> {
    expansion(g, order, rule, Side::Right)
}

fn expansion(f: &BoundaryDensity, order: u32, rule: &QuadratureRule, side: Side) -> Result<TaylorExpansion> {
    let (center, _) = sphere_of(rule)?;
    let n = center.len();
    if n < 2 || f.dim() != n {
        return Err(Error::RuleMismatch(format!("density in R^{} vs rule in R^{n}", f.dim())));
    }
    let g = cauchy_kernel(n)?.symbolic;
    let indices = MultiIndex::up_to(n, order);
    let results: Vec<(MultiIndex, FMv, NumericPoly)> = indices
        .into_par_iter()
        .map(|idx| {
            let mut orders = vec![0u32];
            orders.extend(&idx.0);
            let kernel = g.partial_multi(&orders).compile();
            let sign = if idx.degree() % 2 == 0 { -1.0 } else { 1.0 };
            let scale = sign / (rational_to_f64(&idx.factorial()) * omega(n));
            let total = integrate(rule, |nd| {
                let d: Vec<f64> = nd.point.iter().zip(center).map(|(a, b)| a - b).collect();
                let nrm = FMv::vector(n, nd.normal.as_ref().ok_or_else(|| Error::RuleMismatch("rule carries no normals".into()))?);
                let k = kernel.eval(&d);
                let v = f.eval(&nd.point);
                Ok(match side {
                    Side::Left => &(&k * &nrm) * &v,
                    Side::Right => &(&v * &nrm) * &k,
                })
            })?;
            let p = fueter_polynomial(&idx)?;
            let p = match side {
                Side::Left => p,
                Side::Right => p.conjugation(),
            };
            Ok((idx, total.scale(&scale), NumericPoly::new(&p)))
        })
        .collect::<Result<_>>()?;
    let mut coefficients = BTreeMap::new();
    let mut basis = Vec::with_capacity(results.len());
    for (idx, a, p) in results {
        coefficients.insert(idx.clone(), a);
        basis.push((idx, p));
    }
    Ok(TaylorExpansion {
        center: center.to_vec(),
        order,
        side,
        coefficients,
        basis,
    })
}

/// `⟨f, g⟩ = (1/(ω_n r^{n−1})) ∫ f̄ g dσ` over the sphere of `rule`, with `f̄`
/// the Clifford conjugate. Returns the scalar part.
pub fn sphere_inner_product(f: &BoundaryDensity, g: &BoundaryDensity, rule: &QuadratureRule) -> Result<f64> {
    let (c, r) = sphere_of(rule)?;
    let n = c.len();
    let total = integrate(rule, |nd| Ok(&f.eval(&nd.point).conjugation() * &g.eval(&nd.point)))?;
    Ok(total.scalar_part() / (omega(n) * r.powi(n as i32 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rational, RMv};
    use crate::integration::sphere_rule;
    use crate::sampling::ball_point;
    use crate::symcalc::CliffordPolynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const W: [f64; 3] = [0.25, -0.5, 0.125];

    fn shifted(p: &CliffordPolynomial, w: &[f64]) -> CliffordPolynomial {
        // p(x − w) with exactly representable w.
        let v: Vec<_> = w.iter().map(|a| rational((-a * 8.0) as i64, 8)).collect();
        p.shift(&v)
    }

    #[test]
    fn constants_reproduce() {
        let n = 3;
        let rule = sphere_rule(n, &W, 1.0, 16).unwrap();
        let c = &FMv::basis(3, 2) + &FMv::scalar(3, 2.0);
        let t = taylor_coefficients(&BoundaryDensity::constant(c.clone()), 2, &rule).unwrap();
        assert!(t.coefficient(&MultiIndex::zero(n)).unwrap().dist(&c) < 1e-12);
        for (idx, a) in &t.coefficients {
            if idx.degree() > 0 {
                assert!(a.norm() < 1e-12, "{idx:?}");
            }
        }
    }

    #[test]
    fn fueter_basis_is_unit_coordinates() {
        for n in [3usize, 4] {
            let w = &W[..n.min(3)];
            let mut w = w.to_vec();
            w.resize(n, 0.0);
            // On a sphere centred at w the integrands are smooth trigonometric
            // polynomials in the angles, so a moderate resolution suffices.
            let rule = sphere_rule(n, &w, 1.0, 20).unwrap();
            for idx0 in MultiIndex::up_to(n, 3) {
                let p = shifted(&fueter_polynomial(&idx0).unwrap(), &w);
                let t = taylor_coefficients(&BoundaryDensity::from_polynomial(&p), 3, &rule).unwrap();
                for (idx, a) in &t.coefficients {
                    let expected = if *idx == idx0 { FMv::one(n) } else { FMv::zero(n) };
                    assert!(a.dist(&expected) < 1e-8, "n={n} {idx0:?} → {idx:?}: {}", a.dist(&expected));
                }
            }
        }
    }

    #[test]
    fn partial_sums_reproduce_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let n = 3;
        let rule = sphere_rule(n, &W, 1.0, 20).unwrap();
        let mut f = CliffordPolynomial::zero(n, crate::symcalc::VariableKind::Vector);
        for idx in MultiIndex::up_to(n, 3) {
            let c = RMv::from_terms(n, [(0, rational(rng.gen_range(-3..4), 2)), (0b110, rational(rng.gen_range(-3..4), 3))]);
            f = &f + &fueter_polynomial(&idx).unwrap().right_mul_mv(&c);
        }
        let t = taylor_coefficients(&BoundaryDensity::from_polynomial(&f), 3, &rule).unwrap();
        for _ in 0..10 {
            let y: Vec<f64> = ball_point(&mut rng, n, 0.8).iter().zip(&W).map(|(a, b)| a + b).collect();
            assert!(t.eval(&y).dist(&f.evaluate_f64(&y)) < 1e-6);
        }
        let g = f.conjugation();
        assert!(g.dirac_right().unwrap().is_zero());
        let tr = taylor_coefficients_right(&BoundaryDensity::from_polynomial(&g), 3, &rule).unwrap();
        let y: Vec<f64> = W.iter().map(|a| a + 0.1).collect();
        assert!(tr.eval(&y).dist(&g.evaluate_f64(&y)) < 1e-6);
        let ball = crate::integration::ball_rule(3, &W, 1.0, 4).unwrap();
        assert!(taylor_coefficients(&BoundaryDensity::from_polynomial(&f), 1, &ball).is_err());
    }

    #[test]
    fn x_times_lower_degree_is_orthogonal() {
        for n in [3usize, 4] {
            let rule = sphere_rule(n, &vec![0.0; n], 1.0, 16).unwrap();
            let x = CliffordPolynomial::x_vector(n);
            for l in 1..=3 {
                for lo in MultiIndex::all_of_degree(n, l - 1) {
                    let xp = BoundaryDensity::from_polynomial(&(&x * &fueter_polynomial(&lo).unwrap()));
                    for hi in MultiIndex::all_of_degree(n, l) {
                        let p = BoundaryDensity::from_polynomial(&fueter_polynomial(&hi).unwrap());
                        let ip = sphere_inner_product(&xp, &p, &rule).unwrap();
                        assert!(ip.abs() < 1e-8, "n={n} {lo:?} {hi:?}: {ip}");
                    }
                }
            }
        }
    }
}
