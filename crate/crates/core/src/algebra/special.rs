use super::multivector::Multivector;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `E± = ½(1 ± e₁e₂e₃)` in `Cl_3`.
pub fn quaternion_projectors<S: Scalar>(n: usize) -> Result<(Multivector<S>, Multivector<S>)> {
    if n != 3 {
        return Err(Error::InvalidParameter(format!(
            "quaternion projectors live in Cl_3, got n={n}"
        )));
    }
    let half = S::from_ratio(1, 2);
    let plus = Multivector::from_terms(3, [(0, half.clone()), (0b111, half.clone())]);
    let minus = Multivector::from_terms(3, [(0, half.clone()), (0b111, -half)]);
    Ok((plus, minus))
}

/// The embedding `θ: Cl_{n−1} → Cl_n⁺`, `e_j ↦ e_n⁻¹ e_j`, extended
/// multiplicatively. `a` may be given in `Cl_{n−1}` or in `Cl_n`, but must
/// not involve `e_n`.
pub fn unital_isomorphism<S: Scalar>(a: &Multivector<S>, n: usize) -> Result<Multivector<S>> {
    if n < 2 {
        return Err(Error::InvalidParameter("θ needs n ≥ 2".into()));
    }
    if a.dim() != n && a.dim() != n - 1 {
        return Err(Error::ContextMismatch {
            left: a.dim(),
            right: n - 1,
        });
    }
    if a.max_generator() >= n {
        return Err(Error::InvalidParameter(format!(
            "input uses e{n}, which θ reserves"
        )));
    }
    let en_inv = -Multivector::<S>::basis(n, n);
    let mut out = Multivector::zero(n);
    for (b, c) in a.terms() {
        let mut img = Multivector::one(n);
        for j in super::blade::indices(*b) {
            img = &img * &(&en_inv * &Multivector::basis(n, j));
        }
        out += &img.scale(c);
    }
    Ok(out)
}
