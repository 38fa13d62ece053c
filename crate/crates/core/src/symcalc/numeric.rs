//! Floating-point evaluators compiled from exact expressions.

use super::poly::CliffordPolynomial;
use super::radial::RadialExpr;
use crate::algebra::{rational_to_f64, Blade, FMv};

/// A polynomial with coefficients converted to `f64` once, for repeated
/// evaluation inside quadrature loops.
#[derive(Clone, Debug)]
pub struct NumericPoly {
    dim: usize,
    nslots: usize,
    max_exp: Vec<u32>,
    terms: Vec<(Vec<u32>, Vec<(Blade, f64)>)>,
}

impl NumericPoly {
    pub fn new(p: &CliffordPolynomial) -> Self {
        let nslots = p.total_vars();
        let mut max_exp = vec![0; nslots];
        let terms = p
            .terms()
            .map(|(m, c)| {
                for (slot, &e) in m.0.iter().enumerate() {
                    max_exp[slot] = max_exp[slot].max(e);
                }
                let coeffs = c.terms().iter().map(|(b, r)| (*b, rational_to_f64(r))).collect();
                (m.0.clone(), coeffs)
            })
            .collect();
        NumericPoly {
            dim: p.dim(),
            nslots,
            max_exp,
            terms,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds the value at `point` into a dense blade-indexed buffer.
    pub fn accumulate(&self, point: &[f64], factor: f64, out: &mut [f64]) {
        assert_eq!(point.len(), self.nslots, "point dimension");
        let powers: Vec<Vec<f64>> = point
            .iter()
            .zip(&self.max_exp)
            .map(|(&v, &e)| {
                let mut t = Vec::with_capacity(e as usize + 1);
                let mut acc = 1.0;
                t.push(acc);
                for _ in 0..e {
                    acc *= v;
                    t.push(acc);
                }
                t
            })
            .collect();
        for (exps, coeffs) in &self.terms {
            let mut s = factor;
            for (slot, &e) in exps.iter().enumerate() {
                s *= powers[slot][e as usize];
            }
            for (b, c) in coeffs {
                out[*b as usize] += s * c;
            }
        }
    }

    pub fn eval(&self, point: &[f64]) -> FMv {
        let mut buf = vec![0.0; 1 << self.dim];
        self.accumulate(point, 1.0, &mut buf);
        dense_to_mv(self.dim, &buf)
    }
}

pub fn dense_to_mv(dim: usize, buf: &[f64]) -> FMv {
    FMv::from_terms(
        dim,
        buf.iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(b, v)| (b as Blade, *v)),
    )
}

/// Compiled form of a [`RadialExpr`].
#[derive(Clone, Debug)]
pub struct NumericRadial {
    dim: usize,
    terms: Vec<(NumericPoly, i32, u32)>,
}

impl NumericRadial {
    pub fn new(r: &RadialExpr) -> Self {
        NumericRadial {
            dim: r.dim(),
            terms: r
                .terms()
                .map(|(p, m, s)| (NumericPoly::new(p), m, s))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Value at a nonzero point; the caller is responsible for avoiding the
    /// origin when a negative power or logarithm is present.
    pub fn eval(&self, x: &[f64]) -> FMv {
        let r = x.iter().take(self.dim).map(|v| v * v).sum::<f64>().sqrt();
        let log_r = r.ln();
        let mut buf = vec![0.0; 1 << self.dim];
        for (p, m, s) in &self.terms {
            let factor = r.powi(-*m) * log_r.powi(*s as i32);
            p.accumulate(x, factor, &mut buf);
        }
        dense_to_mv(self.dim, &buf)
    }
}
