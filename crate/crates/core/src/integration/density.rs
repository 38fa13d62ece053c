use std::fmt;
use std::sync::Arc;

use crate::algebra::FMv;
use crate::symcalc::{CliffordPolynomial, NumericPoly};

type Evaluator = Arc<dyn Fn(&[f64]) -> FMv + Send + Sync>;

/// A multivector-valued function on a surface, optionally carrying the
/// polynomial it is the restriction of.
#[derive(Clone)]
pub struct BoundaryDensity {
    dim: usize,
    eval: Evaluator,
    exact: Option<CliffordPolynomial>,
}

impl fmt::Debug for BoundaryDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundaryDensity")
            .field("dim", &self.dim)
            .field("exact", &self.exact.as_ref().map(|p| p.to_text()))
            .finish()
    }
}

impl BoundaryDensity {
    pub fn from_fn(dim: usize, f: impl Fn(&[f64]) -> FMv + Send + Sync + 'static) -> Self {
        BoundaryDensity {
            dim,
            eval: Arc::new(f),
            exact: None,
        }
    }

    pub fn from_polynomial(p: &CliffordPolynomial) -> Self {
        let compiled = NumericPoly::new(p);
        BoundaryDensity {
            dim: p.dim(),
            eval: Arc::new(move |x| compiled.eval(x)),
            exact: Some(p.clone()),
        }
    }

    pub fn constant(value: FMv) -> Self {
        let dim = value.dim();
        Self::from_fn(dim, move |_| value.clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &[f64]) -> FMv {
        (self.eval)(x)
    }

    pub fn exact(&self) -> Option<&CliffordPolynomial> {
        self.exact.as_ref()
    }

    /// Pointwise `self − other`.
    pub fn sub(&self, other: &BoundaryDensity) -> BoundaryDensity {
        let (a, b) = (self.eval.clone(), other.eval.clone());
        let exact = match (&self.exact, &other.exact) {
            (Some(p), Some(q)) => Some(p - q),
            _ => None,
        };
        BoundaryDensity {
            dim: self.dim,
            eval: Arc::new(move |x| &a(x) - &b(x)),
            exact,
        }
    }

    /// Pointwise `self + other`.
    pub fn add(&self, other: &BoundaryDensity) -> BoundaryDensity {
        let (a, b) = (self.eval.clone(), other.eval.clone());
        let exact = match (&self.exact, &other.exact) {
            (Some(p), Some(q)) => Some(p + q),
            _ => None,
        };
        BoundaryDensity {
            dim: self.dim,
            eval: Arc::new(move |x| &a(x) + &b(x)),
            exact,
        }
    }
}

impl From<&CliffordPolynomial> for BoundaryDensity {
    fn from(p: &CliffordPolynomial) -> Self {
        Self::from_polynomial(p)
    }
}

/// Sums in a fixed balanced-tree order, independent of thread scheduling.
pub(crate) fn pairwise_sum(dim: usize, items: &[FMv]) -> FMv {
    match items.len() {
        0 => FMv::zero(dim),
        1 => items[0].clone(),
        len => {
            let (l, r) = items.split_at(len / 2);
            &pairwise_sum(dim, l) + &pairwise_sum(dim, r)
        }
    }
}
