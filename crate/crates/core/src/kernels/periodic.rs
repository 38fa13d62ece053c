//! Lattice-periodic kernels `cot_{k,l}` and the dilation kernel.
//!
//! `cot_{k,l}(x, y) = Σ (−1)^{m₁+…+m_l} G(x − y + m + n)` over `m ∈ Z^l`
//! (directions `e₁…e_l`) and `n ∈ Z^{k−l}` (directions `e_{l+1}…e_k`). The
//! sum is truncated to a box of half-width `R` centred on the lattice point
//! nearest `−(x − y)`, so the truncated kernel keeps the exact (anti)periodicity
//! of the full sum. Shells are accumulated in order, each in lexicographic
//! order, so results are reproducible. The tail estimate is `‖S_R − S_{R−2}‖`;
//! it is a heuristic, not a rigorous bound.

use rayon::prelude::*;

use super::iterated::cauchy_f64;
use crate::algebra::FMv;
use crate::error::{Error, Result};

pub const DEFAULT_RADIUS: u32 = 12;
const SINGULAR: f64 = 1e-12;

/// A truncated series together with its tail estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSum {
    pub value: FMv,
    pub tail_bound: f64,
    pub terms: usize,
}

/// Lattice points with `‖z‖_∞ = s`, in lexicographic order.
fn shell(k: usize, s: i64) -> Vec<Vec<i64>> {
    if k == 0 {
        return if s == 0 { vec![vec![]] } else { vec![] };
    }
    let side = (2 * s + 1) as usize;
    let total = side.pow(k as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut rem = idx;
        let mut z = vec![0i64; k];
        for slot in (0..k).rev() {
            z[slot] = (rem % side) as i64 - s;
            rem /= side;
        }
        if z.iter().map(|v| v.abs()).max().unwrap_or(0) == s {
            out.push(z);
        }
    }
    out
}

/// Truncated `cot_{k,l}(x, y)` in `R^n` (`n = x.len()`), summing `‖z − c‖_∞ ≤ radius`
/// where `c` is the lattice point nearest `y − x`.
///
/// `k = l = 0` gives `G(x − y)`. The radius must be at least 2 so that the
/// tail bound `‖S_R − S_{R−2}‖` is defined.
pub fn periodic_kernel_cot(k: usize, l: usize, x: &[f64], y: &[f64], radius: u32) -> Result<TruncatedSum> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::InvalidParameter("x and y must have the same length".into()));
    }
    crate::algebra::multivector::check_dim(n)?;
    if n < 2 || l > k || k > n {
        return Err(Error::InvalidParameter(format!("need 0 ≤ l ≤ k ≤ n, n ≥ 2; got n={n} k={k} l={l}")));
    }
    if radius < 2 {
        return Err(Error::InvalidParameter("truncation radius must be ≥ 2".into()));
    }
    // Only the first k coordinates are shifted by the lattice.
    let d: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    let radius = if k == 0 { 0 } else { radius as i64 };
    let centre: Vec<i64> = d[..k].iter().map(|v| -(v.round() as i64)).collect();
    let shells: Vec<(FMv, usize)> = (0..=radius)
        .into_par_iter()
        .map(|s| lattice_shell(l, &centre, &d, s))
        .collect::<Result<_>>()?;
    let mut value = FMv::zero(n);
    let mut terms = 0;
    let mut last_two = FMv::zero(n);
    for (s, (v, c)) in shells.iter().enumerate() {
        value += v;
        terms += c;
        if radius >= 2 && s as i64 > radius - 2 {
            last_two += v;
        }
    }
    Ok(TruncatedSum {
        value,
        tail_bound: last_two.norm(),
        terms,
    })
}

fn lattice_shell(l: usize, centre: &[i64], d: &[f64], s: i64) -> Result<(FMv, usize)> {
    let n = d.len();
    let pts = shell(centre.len(), s);
    let mut acc = FMv::zero(n);
    for w in &pts {
        let z: Vec<i64> = w.iter().zip(centre).map(|(a, c)| a + c).collect();
        let mut p = d.to_vec();
        for (j, zj) in z.iter().enumerate() {
            p[j] += *zj as f64;
        }
        if p.iter().map(|v| v * v).sum::<f64>().sqrt() < SINGULAR {
            return Err(Error::Singular("x − y lies on the lattice orbit".into()));
        }
        let parity: i64 = z[..l].iter().sum();
        let g = cauchy_f64(&p);
        if parity.rem_euclid(2) == 0 {
            acc += &g;
        } else {
            acc -= &g;
        }
    }
    Ok((acc, pts.len()))
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

fn inverse(v: &[f64]) -> Vec<f64> {
    // x^{-1} = −x / ‖x‖².
    let r2: f64 = v.iter().map(|a| a * a).sum();
    v.iter().map(|a| -a / r2).collect()
}

/// Rejects `x = 2^m y` for integer `m`, and `x` or `y` at the origin.
fn check_dilation_orbit(x: &[f64], y: &[f64]) -> Result<()> {
    let (nx, ny) = (norm(x), norm(y));
    if nx < SINGULAR || ny < SINGULAR {
        return Err(Error::Singular("dilation kernel needs x, y ≠ 0".into()));
    }
    let m = (nx / ny).log2().round();
    let scale = m.exp2();
    let dist: f64 = x.iter().zip(y).map(|(a, b)| (a - scale * b).powi(2)).sum::<f64>().sqrt();
    if dist < SINGULAR * nx.max(1.0) {
        return Err(Error::Singular(format!("x = 2^{m} y lies on the dilation orbit")));
    }
    Ok(())
}

/// First sum `Σ_{j=0}^{K−1} G(2^j x − 2^j y)`.
pub fn dilation_first_sum(x: &[f64], y: &[f64], terms: u32) -> FMv {
    let mut acc = FMv::zero(x.len());
    for j in 0..terms {
        let s = (j as f64).exp2();
        let p: Vec<f64> = x.iter().zip(y).map(|(a, b)| s * a - s * b).collect();
        acc += &cauchy_f64(&p);
    }
    acc
}

/// The dilation kernel with both sums truncated at `K` terms:
///
/// `Σ_{j=0}^{K−1} G(2^j x − 2^j y) + 2^{2−2n} G(x) (Σ_{j=1}^{K} G(2^j x^{-1} − 2^j y^{-1})) G(y)`.
///
/// By homogeneity each further term shrinks by `2^{−(n−1)}`, so the tail is
/// bounded by the last term times `2^{1−n} / (1 − 2^{1−n})`.
pub fn dilation_kernel(x: &[f64], y: &[f64], terms: u32) -> Result<TruncatedSum> {
    let n = x.len();
    if y.len() != n || n < 2 {
        return Err(Error::InvalidParameter("x and y must be vectors of equal length ≥ 2".into()));
    }
    crate::algebra::multivector::check_dim(n)?;
    if terms == 0 {
        return Err(Error::InvalidParameter("need at least one term".into()));
    }
    check_dilation_orbit(x, y)?;
    let first = dilation_first_sum(x, y, terms);
    let (xi, yi) = (inverse(x), inverse(y));
    let mut second = FMv::zero(n);
    let mut last_second = FMv::zero(n);
    for j in 1..=terms {
        let s = (j as f64).exp2();
        let p: Vec<f64> = xi.iter().zip(&yi).map(|(a, b)| s * a - s * b).collect();
        last_second = cauchy_f64(&p);
        second += &last_second;
    }
    let weight = (2.0 - 2.0 * n as f64).exp2();
    let (gx, gy) = (cauchy_f64(x), cauchy_f64(y));
    let value = &first + &(&(&gx * &second) * &gy).scale(&weight);
    let ratio = (1.0 - n as f64).exp2();
    let last_first = {
        let s = ((terms - 1) as f64).exp2();
        let p: Vec<f64> = x.iter().zip(y).map(|(a, b)| s * a - s * b).collect();
        cauchy_f64(&p)
    };
    let last = last_first.norm() + weight * gx.norm() * last_second.norm() * gy.norm();
    Ok(TruncatedSum {
        value,
        tail_bound: last * ratio / (1.0 - ratio),
        terms: 2 * terms as usize,
    })
}
