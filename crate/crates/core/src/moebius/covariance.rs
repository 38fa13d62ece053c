//! Covariance of the Cauchy kernel, of monogenic functions and of the
//! oriented surface element under Möbius transformations.
//!
//! With `u = φ(x)`, `v = φ(y)`:
//!
//! `G(u − v) = J(φ, x)^{-1} G(x − y) J̄(φ, y)^{-1}`,
//!
//! where the right factor carries the Clifford conjugate of the weight. The
//! reversion fails for the inversion generator (its weight is a vector, whose
//! reversion and conjugate differ by a sign); both placements are available
//! through [`Placement`] for comparison.

use super::vahlen::{versor_inverse, ConformalWeight, Generator, VahlenMatrix};
use crate::algebra::FMv;
use crate::error::{Error, Result};
use crate::integration::{sphere_rule, BoundaryDensity, QuadratureRule, Surface};
use crate::integration::formulas::{integrate, sphere_of};
use crate::kernels::cauchy_f64;

/// Involution applied to the weight at `y` in the covariance laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Placement {
    Reversion,
    Conjugation,
}

impl Placement {
    fn apply(self, m: &FMv) -> FMv {
        match self {
            Placement::Reversion => m.reversion(),
            Placement::Conjugation => m.conjugation(),
        }
    }
}

/// The placement satisfying the covariance laws for every generator.
pub const COVARIANT_PLACEMENT: Placement = Placement::Conjugation;

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(p, q)| p - q).collect()
}

/// `‖G(φx − φy) − J(φ,x)^{-1} G(x − y) J*(φ,y)^{-1}‖ / ‖G(φx − φy)‖` with the
/// covariant placement.
pub fn kernel_covariance_residual(m: &VahlenMatrix, x: &[f64], y: &[f64]) -> Result<f64> {
    kernel_covariance_residual_with(m, x, y, COVARIANT_PLACEMENT)
}

pub fn kernel_covariance_residual_with(m: &VahlenMatrix, x: &[f64], y: &[f64], placement: Placement) -> Result<f64> {
    if x.len() != y.len() || sub(x, y).iter().all(|a| *a == 0.0) {
        return Err(Error::InvalidParameter("need two distinct points of equal dimension".into()));
    }
    let (u, v) = (m.apply(x)?, m.apply(y)?);
    let lhs = cauchy_f64(&sub(&u, &v));
    let jx = versor_inverse(&m.weight(x, ConformalWeight::J)?)?;
    let jy = versor_inverse(&placement.apply(&m.weight(y, ConformalWeight::J)?))?;
    let rhs = &(&jx * &cauchy_f64(&sub(x, y))) * &jy;
    Ok(lhs.dist(&rhs) / lhs.norm())
}

/// `x ↦ J(ψ, x) f(ψ(x))`, or with `J_k` for solutions of `D^k f = 0`.
#[derive(Clone)]
pub struct Pullback<F> {
    matrix: VahlenMatrix,
    weight: ConformalWeight,
    f: F,
}

impl<F: Fn(&[f64]) -> FMv> Pullback<F> {
    pub fn eval(&self, x: &[f64]) -> Result<FMv> {
        let w = self.matrix.weight(x, self.weight)?;
        Ok(&w * &(self.f)(&self.matrix.apply(x)?))
    }

    pub fn matrix(&self) -> &VahlenMatrix {
        &self.matrix
    }
}

/// Pullback of a left monogenic `f`; the result is left monogenic.
pub fn pullback<F: Fn(&[f64]) -> FMv>(m: &VahlenMatrix, f: F) -> Pullback<F> {
    Pullback {
        matrix: m.clone(),
        weight: ConformalWeight::J,
        f,
    }
}

/// Pullback of a solution of `D^k f = 0`, which solves the same equation.
pub fn pullback_k<F: Fn(&[f64]) -> FMv>(m: &VahlenMatrix, f: F, k: u32) -> Result<Pullback<F>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be ≥ 1".into()));
    }
    Ok(Pullback {
        matrix: m.clone(),
        weight: ConformalWeight::Jk(k),
        f,
    })
}

/// Image of the sphere `∂B(center, radius)`, with a flag telling whether
/// the ball is mapped onto the inside of the image (orientation preserved).
pub fn image_sphere(m: &VahlenMatrix, center: &[f64], radius: f64) -> Result<(Vec<f64>, f64, bool)> {
    let n = m.dim();
    let (mut c, mut r, mut inside) = (center.to_vec(), radius, true);
    for g in m.provenance().iter().rev() {
        match g {
            Generator::Translation(_) | Generator::Rotation(..) => {
                c = VahlenMatrix::generator(n, g.clone())?.apply(&c)?;
            }
            Generator::Dilation(l) => {
                c.iter_mut().for_each(|a| *a *= l);
                r *= l;
            }
            Generator::Inversion => {
                let c2: f64 = c.iter().map(|a| a * a).sum();
                let gap = c2 - r * r;
                if gap.abs() < 1e-12 * c2.max(r * r) {
                    return Err(Error::Pole("the sphere passes through the pole of an inversion".into()));
                }
                c.iter_mut().for_each(|a| *a = -*a / gap);
                r /= gap.abs();
                if gap < 0.0 {
                    inside = !inside;
                }
            }
        }
    }
    Ok((c, r, inside))
}

/// Residual of the change of variables
/// `∫_{ψ(S)} f n g dσ = ∫_S f(ψ) J* n J g(ψ) dσ` for the sphere `S` of
/// `rule`, the left side taken on a quadrature rule of the image sphere of
/// the same resolution. Returned relative to `max(1, ‖left side‖)`.
pub fn change_of_variables_residual(
    m: &VahlenMatrix,
    f: &BoundaryDensity,
    g: &BoundaryDensity,
    rule: &QuadratureRule,
) -> Result<f64> {
    change_of_variables_residual_with(m, f, g, rule, COVARIANT_PLACEMENT)
}

pub fn change_of_variables_residual_with(
    m: &VahlenMatrix,
    f: &BoundaryDensity,
    g: &BoundaryDensity,
    rule: &QuadratureRule,
    placement: Placement,
) -> Result<f64> {
    let (c, r) = sphere_of(rule)?;
    let n = c.len();
    if n != m.dim() || f.dim() != n || g.dim() != n {
        return Err(Error::RuleMismatch("matrix, densities and rule must share the dimension".into()));
    }
    let (ic, ir, inside) = image_sphere(m, c, r)?;
    let image = sphere_rule(n, &ic, ir, rule.resolution)?;
    debug_assert!(matches!(image.surface, Surface::Sphere { .. }));
    let flat = integrate(&image, |nd| {
        let nrm = FMv::vector(n, nd.normal.as_ref().expect("sphere rules carry normals"));
        Ok(&(&f.eval(&nd.point) * &nrm) * &g.eval(&nd.point))
    })?;
    let lhs = if inside { flat } else { flat.scale(&-1.0) };
    let rhs = integrate(rule, |nd| {
        let nrm = FMv::vector(n, nd.normal.as_ref().expect("sphere rules carry normals"));
        let u = m.apply(&nd.point)?;
        let j = m.weight(&nd.point, ConformalWeight::J)?;
        Ok(&(&(&(&f.eval(&u) * &placement.apply(&j)) * &nrm) * &j) * &g.eval(&u))
    })?;
    Ok(lhs.dist(&rhs) / lhs.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fd::{dirac_power, dirac_residual};
    use crate::sampling::{ball_point, unit_vector};
    use crate::series::{fueter_polynomial, MultiIndex};
    use crate::symcalc::{CliffordPolynomial, NumericPoly};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_generator(rng: &mut ChaCha8Rng, n: usize) -> Generator {
        match rng.gen_range(0..4) {
            0 => Generator::Translation(ball_point(rng, n, 1.0)),
            1 => Generator::Dilation(rng.gen_range(0.5..2.0)),
            2 => Generator::Rotation(unit_vector(rng, n), unit_vector(rng, n)),
            _ => Generator::Inversion,
        }
    }

    fn single(n: usize) -> Vec<Generator> {
        let mut v = vec![0.3; n];
        v[0] = -0.7;
        vec![
            Generator::Translation(v.clone()),
            Generator::Dilation(1.7),
            Generator::Rotation(v, vec![0.1; n]),
            Generator::Inversion,
        ]
    }

    #[test]
    fn placement_calibration() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for n in [3usize, 4] {
            for g in single(n) {
                let m = VahlenMatrix::generator(n, g.clone()).unwrap();
                let (x, y) = (ball_point(&mut rng, n, 2.0), ball_point(&mut rng, n, 2.0));
                let conj = kernel_covariance_residual_with(&m, &x, &y, Placement::Conjugation).unwrap();
                let rev = kernel_covariance_residual_with(&m, &x, &y, Placement::Reversion).unwrap();
                assert!(conj < 1e-12, "{g:?}: {conj}");
                if g == Generator::Inversion {
                    assert!((rev - 2.0).abs() < 1e-12, "{rev}");
                } else {
                    assert!(rev < 1e-12);
                }
            }
        }
    }

    #[test]
    fn covariance_for_random_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        let mut checked = 0;
        while checked < 200 {
            let n = if checked % 2 == 0 { 3 } else { 4 };
            let k = rng.gen_range(1..=5);
            let gens: Vec<Generator> = (0..k).map(|_| random_generator(&mut rng, n)).collect();
            let m = VahlenMatrix::from_generators(n, &gens).unwrap();
            let (x, y) = (ball_point(&mut rng, n, 2.0), ball_point(&mut rng, n, 2.0));
            match kernel_covariance_residual(&m, &x, &y) {
                Ok(r) => {
                    assert!(r < 1e-9, "{}: {r}", m.to_dsl());
                    checked += 1;
                }
                Err(Error::Pole(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
        let t = VahlenMatrix::generator(3, Generator::Translation(vec![1.0, -2.0, 0.5])).unwrap();
        assert_eq!(kernel_covariance_residual(&t, &[0.5, 0.25, 0.0], &[0.0, 0.5, 0.25]).unwrap(), 0.0);
    }

    #[test]
    fn pullbacks_stay_monogenic() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for n in [3usize, 4] {
            let mut j = vec![0; n - 1];
            j[0] = 1;
            let p1 = NumericPoly::new(&fueter_polynomial(&MultiIndex(j)).unwrap());
            let f = move |x: &[f64]| p1.eval(x);
            let mut cases: Vec<Vec<Generator>> = single(n).into_iter().map(|g| vec![g]).collect();
            for _ in 0..6 {
                cases.push((0..4).map(|_| random_generator(&mut rng, n)).collect());
            }
            for gens in cases {
                let m = VahlenMatrix::from_generators(n, &gens).unwrap();
                let pb = pullback(&m, &f);
                let one = pullback(&m, |_: &[f64]| FMv::one(n));
                let mut tested = 0;
                while tested < 3 {
                    let x = ball_point(&mut rng, n, 1.5);
                    if m.denominator_norm(&x).map_or(true, |d| d < 0.2) {
                        continue;
                    }
                    let h = |y: &[f64]| pb.eval(y).unwrap();
                    assert!(dirac_residual(&h, &x) < 1e-5, "{}: {}", m.to_dsl(), dirac_residual(&h, &x));
                    let h1 = |y: &[f64]| one.eval(y).unwrap();
                    assert!(dirac_residual(&h1, &x) < 1e-5);
                    tested += 1;
                }
            }
        }
        let id = VahlenMatrix::identity(3);
        let pb = pullback(&id, |x: &[f64]| FMv::vector(3, x));
        assert_eq!(pb.eval(&[0.1, 0.2, 0.3]).unwrap(), FMv::vector(3, &[0.1, 0.2, 0.3]));
    }

    /// `D^k` of the pulled-back function, relative to the size of the
    /// function, for a candidate weight.
    fn k_residual(m: &VahlenMatrix, f: &NumericPoly, k: u32, x: &[f64], weight: &dyn Fn(&[f64]) -> FMv) -> f64 {
        let h = |y: &[f64]| &weight(y) * &f.eval(&m.apply(y).unwrap());
        dirac_power(&h, x, k, 1e-2).norm() / h(x).norm()
    }

    #[test]
    fn k_weight_calibration() {
        let n = 3;
        let x = CliffordPolynomial::x_vector(n);
        let p1 = fueter_polynomial(&MultiIndex(vec![1, 0])).unwrap();
        // D²(x P₁) ≠ 0 = D³ … ; D(x P₁) ≠ 0 = D² (x P₁).
        let cases = [(2u32, &x * &p1), (3, &(&x * &x) * &p1)];
        let inv = VahlenMatrix::parse(n, "trans:0.2,0.1,0.3,inv,trans:0.5,-0.4,0.3").unwrap();
        let pt = [0.4, 0.3, -0.2];
        for (k, f) in cases {
            assert!(!f.dirac_power(k - 1).unwrap().is_zero() && f.dirac_power(k).unwrap().is_zero());
            let fn_ = NumericPoly::new(&f);
            let printed = |y: &[f64]| {
                let q = &(&inv.c * &FMv::vector(n, y)) + &inv.d;
                q.reversion().scale(&q.norm().powi(k as i32 - 1 - n as i32))
            };
            let scalar = |y: &[f64]| {
                let q = &(&inv.c * &FMv::vector(n, y)) + &inv.d;
                FMv::scalar(n, q.norm().powi(k as i32 - n as i32))
            };
            let calibrated = |y: &[f64]| inv.weight(y, ConformalWeight::Jk(k)).unwrap();
            let (rp, rs, rc) = (
                k_residual(&inv, &fn_, k, &pt, &printed),
                k_residual(&inv, &fn_, k, &pt, &scalar),
                k_residual(&inv, &fn_, k, &pt, &calibrated),
            );
            assert!(rc < 1e-4, "k={k}: {rc}");
            if k % 2 == 0 {
                assert!(rs < 1e-4 && rp > 1e-2, "k={k}: printed {rp}, scalar {rs}");
            } else {
                assert!(rp < 1e-4 && rs > 1e-2, "k={k}: printed {rp}, scalar {rs}");
            }
        }
    }

    #[test]
    fn change_of_variables() {
        let n = 3;
        let rule = sphere_rule(n, &[0.2, -0.1, 0.5], 0.7, crate::integration::DEFAULT_RESOLUTION).unwrap();
        let f = BoundaryDensity::from_fn(n, |x| &FMv::scalar(3, 1.0 + x[0]) + &FMv::basis(3, 2).scale(&x[2]));
        let g = BoundaryDensity::from_fn(n, |x| &FMv::scalar(3, x[1] * x[1]) + &FMv::basis(3, 1).scale(&0.5));
        let id = VahlenMatrix::identity(n);
        assert!(change_of_variables_residual(&id, &f, &g, &rule).unwrap() < 1e-14);
        let one = BoundaryDensity::constant(FMv::one(n));
        let dil = VahlenMatrix::parse(n, "dil:2.5").unwrap();
        assert!(change_of_variables_residual(&dil, &one, &one, &rule).unwrap() < 1e-12);
        // Each sphere keeps a distance from the poles of its map; the last
        // two enclose the pole, which reverses the orientation.
        let cases: [(&str, [f64; 3], f64); 6] = [
            ("dil:1.5,trans:1,0,0", [0.2, -0.1, 0.5], 0.7),
            ("rot:1,0,0,1,1,0,trans:0,0.1,0", [0.2, -0.1, 0.5], 0.7),
            ("inv", [0.1, 0.0, 0.1], 0.8),
            ("trans:0,0,1,inv,trans:0,0,2", [0.0, 0.3, 0.4], 0.5),
            ("trans:0,0,1,dil:2,inv,trans:0,0,1", [0.0, 0.0, 0.5], 0.7),
            ("trans:0,0,1,dil:2,inv,trans:0,0,1", [0.1, 0.0, -0.9], 0.6),
        ];
        for (dsl, c, r) in cases {
            let m = VahlenMatrix::parse(n, dsl).unwrap();
            let rule = sphere_rule(n, &c, r, crate::integration::DEFAULT_RESOLUTION).unwrap();
            let res = change_of_variables_residual(&m, &f, &g, &rule).unwrap();
            assert!(res < 1e-6, "{dsl} on ({c:?}, {r}): {res}");
        }
        let inv = VahlenMatrix::parse(n, "inv").unwrap();
        let rule = sphere_rule(n, &[0.1, 0.0, 0.1], 0.8, 16).unwrap();
        assert!(change_of_variables_residual_with(&inv, &f, &g, &rule, Placement::Reversion).unwrap() > 1e-3);
        let through = sphere_rule(n, &[0.5, 0.0, 0.0], 0.5, 8).unwrap();
        assert!(matches!(change_of_variables_residual(&inv, &f, &g, &through), Err(Error::Pole(_))));
    }
}
