//! The iterated family `G_k` with `D G_k = G_{k−1}`, `G₁ = G`.
//!
//! Each `G_k` is an ansatz with unknown constants, solved exactly from the
//! recurrence:
//!
//! * `k` odd, no logarithm: `C x ‖x‖^{−(n−k+1)}`
//! * `k` even, no logarithm: `C ‖x‖^{−(n−k)}`
//! * `n` even and `k ≥ n`: `C (x^{k−n} log‖x‖ + A x^{k−n})`
//!
//! In the logarithmic case the recurrence leaves one direction free at
//! `k = n` (constants are monogenic); it is fixed by taking `A(n, n) = 0`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::symcalc::{CliffordPolynomial, RadialExpr, VariableKind};

/// One member `G_k` of the kernel family for `Cl_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelFamily {
    pub n: usize,
    pub k: usize,
    pub symbolic: RadialExpr,
    pub c: Rational,
    /// Present only in the logarithmic case.
    pub a: Option<Rational>,
}

impl KernelFamily {
    pub fn is_log_case(&self) -> bool {
        self.a.is_some()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("kernels need n ≥ 2, got {n}")));
    }
    crate::algebra::multivector::check_dim(n)
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `G(x) = x / ‖x‖^n`.
pub fn cauchy_kernel(n: usize) -> Result<KernelFamily> {
    check_n(n)?;
    Ok(KernelFamily {
        n,
        k: 1,
        symbolic: RadialExpr::term(CliffordPolynomial::x_vector(n), n as i32, 0)?,
        c: Rational::one(),
        a: None,
    })
}

/// `H(x) = 1 / ((n−2) ‖x‖^{n−2})`, for `n ≥ 3`. Note `D H = −G`.
pub fn green_kernel(n: usize) -> Result<RadialExpr> {
    check_n(n)?;
    if n == 2 {
        return Err(Error::InvalidParameter("H needs n ≥ 3".into()));
    }
    let one = CliffordPolynomial::one(n, VariableKind::Vector);
    Ok(RadialExpr::term(one, n as i32 - 2, 0)?.scale(&Rational::new(1.into(), (n as i64 - 2).into())))
}

/// `x^p` as a radial expression: `x^{2q} = (−1)^q ‖x‖^{2q}`,
/// `x^{2q+1} = (−1)^q x ‖x‖^{2q}`.
fn x_power(n: usize, p: usize, log: u32) -> Result<RadialExpr> {
    let q = (p / 2) as i32;
    let sign = if q % 2 == 0 { int(1) } else { int(-1) };
    let base = if p % 2 == 0 {
        CliffordPolynomial::one(n, VariableKind::Vector)
    } else {
        CliffordPolynomial::x_vector(n)
    };
    Ok(RadialExpr::term(base.scale(&sign), -2 * q, log)?)
}

fn is_log_case(n: usize, k: usize) -> bool {
    n % 2 == 0 && k >= n
}

/// Ansatz basis `T_i` with `G_k = Σ u_i T_i`.
fn ansatz(n: usize, k: usize) -> Result<Vec<RadialExpr>> {
    if is_log_case(n, k) {
        Ok(vec![x_power(n, k - n, 1)?, x_power(n, k - n, 0)?])
    } else if k % 2 == 1 {
        let m = n as i32 - k as i32 + 1;
        Ok(vec![RadialExpr::term(CliffordPolynomial::x_vector(n), m, 0)?])
    } else {
        let m = n as i32 - k as i32;
        Ok(vec![RadialExpr::term(CliffordPolynomial::one(n, VariableKind::Vector), m, 0)?])
    }
}

/// Coefficient vectors of several radial expressions over a common basis of
/// `(class, monomial, blade)` keys, lifting each `(m mod 2, s)` class to a
/// shared power of `‖x‖`.
fn coordinates(exprs: &[&RadialExpr]) -> Vec<BTreeMap<(i32, u32, Vec<u32>, u32), Rational>> {
    let mut tops: BTreeMap<(i32, u32), i32> = BTreeMap::new();
    for e in exprs {
        for (_, m, s) in e.terms() {
            let t = tops.entry((m.rem_euclid(2), s)).or_insert(m);
            *t = (*t).max(m);
        }
    }
    exprs
        .iter()
        .map(|e| {
            let mut coords = BTreeMap::new();
            for (p, m, s) in e.terms() {
                let class = (m.rem_euclid(2), s);
                let top = tops[&class];
                let lifted = p * &p.r_squared_like().pow(((top - m) / 2) as u32);
                for (mono, c) in lifted.terms() {
                    for (b, v) in c.terms() {
                        coords.insert((class.0, class.1, mono.0.clone(), *b), v.clone());
                    }
                }
            }
            coords
        })
        .collect()
}

/// Solves `Σ u_i basis_i = target` exactly. Free unknowns are set to zero.
/// Returns `None` when the system is inconsistent.
pub(crate) fn solve_combination(basis: &[RadialExpr], target: &RadialExpr) -> Option<Vec<Rational>> {
    let mut all: Vec<&RadialExpr> = basis.iter().collect();
    all.push(target);
    let coords = coordinates(&all);
    let mut keys: Vec<_> = coords.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let cols = basis.len();
    let mut rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|key| {
            coords
                .iter()
                .map(|c| c.get(key).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..=cols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); cols];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = rows[i][cols].clone();
    }
    Some(sol)
}

/// `[G₁, …, G_kmax]` for `Cl_n`.
pub fn iterated_family(n: usize, kmax: usize) -> Result<Vec<KernelFamily>> {
    if kmax < 1 {
        return Err(Error::InvalidParameter("kernel order k must be ≥ 1".into()));
    }
    let mut out = vec![cauchy_kernel(n)?];
    for k in 2..=kmax {
        let prev = &out[k - 2].symbolic;
        let basis = ansatz(n, k)?;
        let derived: Vec<RadialExpr> = basis.iter().map(|b| b.dirac_left()).collect();
        let sol = solve_combination(&derived, prev).ok_or(Error::UnsolvableAnsatz { n, k })?;
        let mut symbolic = RadialExpr::zero(n);
        for (b, u) in basis.iter().zip(&sol) {
            symbolic = &symbolic + &b.scale(u);
        }
        let (c, a) = if is_log_case(n, k) {
            if sol[0].is_zero() {
                return Err(Error::UnsolvableAnsatz { n, k });
            }
            (sol[0].clone(), Some(&sol[1] / &sol[0]))
        } else {
            (sol[0].clone(), None)
        };
        if symbolic.dirac_left() != *prev {
            return Err(Error::UnsolvableAnsatz { n, k });
        }
        out.push(KernelFamily {
            n,
            k,
            symbolic,
            c,
            a,
        });
    }
    Ok(out)
}

pub fn iterated_kernel(n: usize, k: usize) -> Result<KernelFamily> {
    Ok(iterated_family(n, k)?.pop().expect("nonempty family"))
}

/// `(C(n,k), A(n,k))`.
pub fn kernel_constants(n: usize, k: usize) -> Result<(Rational, Option<Rational>)> {
    let g = iterated_kernel(n, k)?;
    Ok((g.c, g.a))
}

/// Rebuilds `G_k` from given constants, for checking published values.
pub fn kernel_from_constants(n: usize, k: usize, c: &Rational, a: Option<&Rational>) -> Result<RadialExpr> {
    check_n(n)?;
    if k == 1 {
        return Ok(cauchy_kernel(n)?.symbolic.scale(c));
    }
    let basis = ansatz(n, k)?;
    let mut out = basis[0].scale(c);
    if let (Some(a), Some(b)) = (a, basis.get(1)) {
        out = &out + &b.scale(&(c * a));
    }
    Ok(out)
}

/// `x^p` for the vector variable, as an exact multivector polynomial.
pub fn x_power_poly(n: usize, p: u32) -> CliffordPolynomial {
    CliffordPolynomial::x_vector(n).pow(p)
}

/// `G(x)` evaluated directly, `x / ‖x‖^n`.
pub fn cauchy_f64(x: &[f64]) -> crate::algebra::FMv {
    let n = x.len();
    let r2: f64 = x.iter().map(|v| v * v).sum();
    let s = r2.powf(-(n as f64) / 2.0);
    let coords: Vec<f64> = x.iter().map(|v| v * s).collect();
    crate::algebra::FMv::vector(n, &coords)
}

/// `H(x)` evaluated directly.
pub fn green_f64(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let r2: f64 = x.iter().map(|v| v * v).sum();
    r2.powf(-(n - 2.0) / 2.0) / (n - 2.0)
}
