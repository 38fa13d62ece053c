//! Plane-wave monogenic functions on the half spaces of `R^n`.
//!
//! For `ζ ∈ R^{n−1} \ {0}`, `ζ' = ζ/‖ζ‖` and `p_± = ½(1 ± i ζ' e_n)`:
//!
//! * `e₊(x) = exp(i⟨x', ζ⟩ − x_n ‖ζ‖) p₊`, bounded on `x_n ≥ 0`
//! * `e₋(x) = exp(i⟨x', ζ⟩ + x_n ‖ζ‖) p₋`, bounded on `x_n ≤ 0`
//!
//! Both are left monogenic because `i ζ e_n p_± = ±‖ζ‖ p_±`.

use num_traits::{One, Zero};

use super::super::integration::gauss_legendre_on;
use crate::algebra::{rational, CMv, Complex64, ComplexRational, Multivector, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WaveSign {
    Plus,
    Minus,
}

impl WaveSign {
    pub fn value(self) -> f64 {
        match self {
            WaveSign::Plus => 1.0,
            WaveSign::Minus => -1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWave {
    zeta: Vec<f64>,
    sign: WaveSign,
}

pub fn plane_wave(zeta: &[f64], sign: WaveSign) -> Result<PlaneWave> {
    PlaneWave::new(zeta, sign)
}

pub fn plane_wave_eval(w: &PlaneWave, x: &[f64]) -> Result<CMv> {
    w.eval(x)
}

impl PlaneWave {
    pub fn new(zeta: &[f64], sign: WaveSign) -> Result<Self> {
        crate::algebra::multivector::check_dim(zeta.len() + 1)?;
        let norm = zeta.iter().map(|v| v * v).sum::<f64>().sqrt();
        if zeta.is_empty() || norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidParameter("ζ must be a nonzero finite vector".into()));
        }
        Ok(PlaneWave {
            zeta: zeta.to_vec(),
            sign,
        })
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.zeta.len() + 1
    }

    pub fn zeta(&self) -> &[f64] {
        &self.zeta
    }

    pub fn sign(&self) -> WaveSign {
        self.sign
    }

    pub fn zeta_norm(&self) -> f64 {
        self.zeta.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `p_± = ½(1 ± i ζ' e_n)`.
    pub fn projector(&self) -> CMv {
        let n = self.dim();
        let r = self.zeta_norm();
        let unit: Vec<Complex64> = self.zeta.iter().map(|v| Complex64::new(0.0, v / r)).collect();
        let mut coords = unit;
        coords.push(Complex64::zero());
        let z = Multivector::vector(n, &coords);
        let en = CMv::basis(n, n);
        let half = Complex64::new(0.5, 0.0);
        (&CMv::one(n) + &(&z * &en).scale(&Complex64::new(self.sign.value(), 0.0))).scale(&half)
    }

    /// The scalar exponential factor at `x`.
    pub fn exponential(&self, x: &[f64]) -> Result<Complex64> {
        let n = self.dim();
        if x.len() != n {
            return Err(Error::InvalidParameter(format!("point must have {n} coordinates")));
        }
        let phase: f64 = self.zeta.iter().zip(x).map(|(a, b)| a * b).sum();
        let decay = -self.sign.value() * x[n - 1] * self.zeta_norm();
        Ok(Complex64::new(decay, phase).exp())
    }

    pub fn eval(&self, x: &[f64]) -> Result<CMv> {
        Ok(self.projector().scale(&self.exponential(x)?))
    }
}

/// Exact `p_±` for a unit vector `ζ'` with rational coordinates, in `Cl_n`
/// with `n = ζ'.len() + 1`.
pub fn projector_exact(zeta_unit: &[Rational], sign: WaveSign) -> Result<Multivector<ComplexRational>> {
    let n = zeta_unit.len() + 1;
    crate::algebra::multivector::check_dim(n)?;
    let norm_sq: Rational = zeta_unit.iter().map(|v| v * v).sum();
    if !norm_sq.is_one() {
        return Err(Error::InvalidParameter("ζ' must be an exact unit vector".into()));
    }
    let mut coords: Vec<ComplexRational> =
        zeta_unit.iter().map(|v| ComplexRational::new(Rational::zero(), v.clone())).collect();
    coords.push(ComplexRational::zero());
    let z = Multivector::vector(n, &coords);
    let en = Multivector::<ComplexRational>::basis(n, n);
    let s = match sign {
        WaveSign::Plus => rational(1, 1),
        WaveSign::Minus => rational(-1, 1),
    };
    let half = ComplexRational::new(rational(1, 2), Rational::zero());
    Ok((&Multivector::one(n) + &(&z * &en).scale(&ComplexRational::new(s, Rational::zero()))).scale(&half))
}

/// `∫₀^∞ e^{iar − br} r^{n−2} dr` by composite Gauss–Legendre, paired with
/// the closed form `(n−2)! / (b − ia)^{n−1}`.
pub fn laplace_planewave_identity(n: usize, a: f64, b: f64) -> Result<(Complex64, Complex64)> {
    if n < 2 {
        return Err(Error::InvalidParameter("need n ≥ 2".into()));
    }
    if b <= 0.0 || !b.is_finite() || !a.is_finite() {
        return Err(Error::InvalidParameter("the integral diverges unless b > 0".into()));
    }
    let p = (n - 2) as i32;
    // Beyond T the integrand is below e^{−60} relative to its peak region.
    let peak = p as f64 / b;
    let end = peak + (60.0 + 4.0 * p as f64) / b;
    let width = (0.5 / b).min(if a == 0.0 { f64::INFINITY } else { std::f64::consts::PI / a.abs() });
    let panels = ((end / width).ceil() as usize).max(1);
    let h = end / panels as f64;
    let mut sum = Complex64::zero();
    for k in 0..panels {
        let (xs, ws) = gauss_legendre_on(20, k as f64 * h, (k + 1) as f64 * h);
        for (r, w) in xs.iter().zip(&ws) {
            sum += Complex64::new(-b * r, a * r).exp() * r.powi(p) * *w;
        }
    }
    let fact: f64 = (1..=n.saturating_sub(2)).map(|v| v as f64).product();
    let closed = Complex64::new(fact, 0.0) / Complex64::new(b, -a).powi(n as i32 - 1);
    Ok((sum, closed))
}
