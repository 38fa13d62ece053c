//! Almansi and k-monogenic decompositions of polynomials.
//!
//! Both rest on one computation: for `f` monogenic and homogeneous of degree
//! `d`, `D(x^j f) = c_j(d) x^{j−1} f` with `c_0 = 0` and
//! `c_j = −n − 2(j − 1 + d) − c_{j−1}`, i.e. `c_j = −j` for even `j` and
//! `c_j = −(n + 2d + j − 1)` for odd `j`. None of these vanish, so
//! multiplication by `x^j` can be undone on homogeneous components.

use num_traits::Zero;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::symcalc::{CliffordPolynomial, VariableKind};

/// `c_j(d)` in `R^n`.
pub fn x_power_eigenvalue(n: usize, j: u32, d: u32) -> Rational {
    let mut c = Rational::zero();
    for i in 1..=j {
        c = Rational::from_integer((-(n as i64) - 2 * (i as i64 - 1 + d as i64)).into()) - c;
    }
    c
}

fn require_vector(p: &CliffordPolynomial) -> Result<()> {
    if p.kind() == VariableKind::Vector {
        Ok(())
    } else {
        Err(Error::Unsupported("decompositions need vector variables".into()))
    }
}

/// Recovers `f` from `g` where `D(x^j f) = x^{j−1} g`, component by component.
fn undo_x_power(g: &CliffordPolynomial, j: u32) -> CliffordPolynomial {
    let n = g.dim();
    let mut out = g.zero_like();
    for (d, comp) in g.homogeneous_components() {
        // The degree-d part of g is c_j(d) f_d.
        let c = x_power_eigenvalue(n, j, d);
        out = &out + &comp.scale(&c.recip());
    }
    out
}

/// `h = x f₁ + f₂` with `f₁, f₂` monogenic, for `h` with `D²h = 0`.
pub fn almansi_split(h: &CliffordPolynomial) -> Result<(CliffordPolynomial, CliffordPolynomial)> {
    let parts = kmonogenic_split(h, 2)?;
    let mut it = parts.into_iter();
    let f2 = it.next().expect("two parts");
    let f1 = it.next().expect("two parts");
    Ok((f1, f2))
}

/// `p = f₀ + x f₁ + … + x^{k−1} f_{k−1}` with every `f_j` monogenic, for `p`
/// with `D^k p = 0`.
pub fn kmonogenic_split(p: &CliffordPolynomial, k: u32) -> Result<Vec<CliffordPolynomial>> {
    require_vector(p)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be ≥ 1".into()));
    }
    if !p.dirac_power(k)?.is_zero() {
        return Err(Error::Precondition(format!("input is not {k}-monogenic")));
    }
    split(p, k)
}

fn split(p: &CliffordPolynomial, k: u32) -> Result<Vec<CliffordPolynomial>> {
    if k == 1 {
        return Ok(vec![p.clone()]);
    }
    let q = p.dirac_left()?;
    let lower = split(&q, k - 1)?;
    let x = CliffordPolynomial::x_vector_with_params(p.dim(), p.nparams());
    let mut parts = vec![p.zero_like()];
    let mut rest = p.clone();
    for (j, g) in lower.iter().enumerate() {
        let j = j as u32 + 1;
        let f = undo_x_power(g, j);
        rest = &rest - &(&x.pow(j) * &f);
        parts.push(f);
    }
    parts[0] = rest;
    Ok(parts)
}

/// Reassembles `Σ x^j f_j`.
pub fn reassemble(parts: &[CliffordPolynomial]) -> CliffordPolynomial {
    let x = CliffordPolynomial::x_vector_with_params(parts[0].dim(), parts[0].nparams());
    let mut out = parts[0].zero_like();
    for (j, f) in parts.iter().enumerate() {
        out = &out + &(&x.pow(j as u32) * f);
    }
    out
}

/// `x^{k−1} f` for monogenic `f`, which satisfies `D^k(x^{k−1} f) = 0`.
pub fn x_power_monogenic(f: &CliffordPolynomial, k: u32) -> Result<CliffordPolynomial> {
    require_vector(f)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be ≥ 1".into()));
    }
    if !f.dirac_left()?.is_zero() {
        return Err(Error::Precondition("f is not monogenic".into()));
    }
    let x = CliffordPolynomial::x_vector_with_params(f.dim(), f.nparams());
    Ok(&x.pow(k - 1) * f)
}

/// Whether `D^{k−1}(x^{k−1} f) ≠ 0`, i.e. the order `k` is sharp for this `f`.
pub fn x_power_is_sharp(f: &CliffordPolynomial, k: u32) -> Result<bool> {
    let p = x_power_monogenic(f, k)?;
    Ok(!p.dirac_power(k - 1)?.is_zero())
}
