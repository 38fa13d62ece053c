//! Monte Carlo sphere integrals, the fallback when product rules grow too
//! large (`n ≥ 6`).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::rules::omega;
use crate::algebra::FMv;
use crate::error::{Error, Result};
use crate::sampling::unit_vector;

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloEstimate {
    pub value: FMv,
    /// Standard error of `value` (Euclidean norm over blades).
    pub std_error: f64,
    pub samples: usize,
}

/// `∫_{S^{n−1}(c,r)} term(x, n(x)) dσ` from `samples` uniform points.
pub fn monte_carlo_sphere<F>(
    n: usize,
    center: &[f64],
    radius: f64,
    samples: usize,
    seed: u64,
    term: F,
) -> Result<MonteCarloEstimate>
where
    F: Fn(&[f64], &[f64]) -> FMv,
{
    if center.len() != n || radius <= 0.0 || samples < 2 {
        return Err(Error::InvalidParameter("need a center in R^n, radius > 0 and ≥ 2 samples".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let area = omega(n) * radius.powi(n as i32 - 1);
    let mut sum = FMv::zero(n);
    let mut sum_sq = 0.0;
    let mut values = Vec::with_capacity(samples);
    for _ in 0..samples {
        let dir = unit_vector(&mut rng, n);
        let x: Vec<f64> = dir.iter().zip(center).map(|(d, c)| c + radius * d).collect();
        let v = term(&x, &dir);
        sum += &v;
        values.push(v);
    }
    let mean = sum.scale(&(1.0 / samples as f64));
    for v in &values {
        sum_sq += v.dist(&mean).powi(2);
    }
    let variance = sum_sq / (samples as f64 - 1.0);
    Ok(MonteCarloEstimate {
        value: mean.scale(&area),
        std_error: area * (variance / samples as f64).sqrt(),
        samples,
    })
}
