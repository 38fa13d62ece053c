use std::fmt;

use crate::algebra::FMv;
use crate::error::{Error, Result};

/// Distance to a pole, measured as `‖cx + d‖`, below which evaluation fails.
pub const POLE_TOLERANCE: f64 = 1e-8;

/// Non-vector residue tolerated in the output of [`VahlenMatrix::apply`].
const GRADE_TOLERANCE: f64 = 1e-10;

/// The generating Möbius transformations.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// `x ↦ x + v`.
    Translation(Vec<f64>),
    /// `x ↦ λx`, `λ > 0`.
    Dilation(f64),
    /// `x ↦ a x ã` with `a = u₁u₂` for unit vectors `u₁, u₂`.
    Rotation(Vec<f64>, Vec<f64>),
    /// `x ↦ x^{-1} = −x/‖x‖²`.
    Inversion,
}

impl Generator {
    /// `[[a, b], [c, d]]` for this generator in `Cl_n`.
    fn matrix(&self, n: usize) -> Result<[FMv; 4]> {
        let one = FMv::one(n);
        let zero = FMv::zero(n);
        Ok(match self {
            Generator::Translation(v) => {
                check_len(v, n)?;
                [one.clone(), FMv::vector(n, v), zero, one]
            }
            Generator::Dilation(l) => {
                if !(l.is_finite() && *l > 0.0) {
                    return Err(Error::InvalidParameter(format!("dilation factor must be positive, got {l}")));
                }
                let s = l.sqrt();
                [FMv::scalar(n, s), zero.clone(), zero, FMv::scalar(n, 1.0 / s)]
            }
            Generator::Rotation(u1, u2) => {
                let a = &unit(u1, n)? * &unit(u2, n)?;
                [a.clone(), zero.clone(), zero, a]
            }
            Generator::Inversion => [zero.clone(), one.clone(), one, zero],
        })
    }

    fn inverse(&self) -> Generator {
        match self {
            Generator::Translation(v) => Generator::Translation(v.iter().map(|a| -a).collect()),
            Generator::Dilation(l) => Generator::Dilation(1.0 / l),
            Generator::Rotation(u1, u2) => Generator::Rotation(u2.clone(), u1.clone()),
            Generator::Inversion => Generator::Inversion,
        }
    }
}

fn check_len(v: &[f64], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::InvalidParameter(format!("expected {n} coordinates, got {}", v.len())));
    }
    if v.iter().any(|a| !a.is_finite()) {
        return Err(Error::InvalidParameter("coordinates must be finite".into()));
    }
    Ok(())
}

fn unit(v: &[f64], n: usize) -> Result<FMv> {
    check_len(v, n)?;
    let len = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    if len < 1e-12 {
        return Err(Error::ZeroVector);
    }
    let u: Vec<f64> = v.iter().map(|a| a / len).collect();
    Ok(FMv::vector(n, &u))
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[f64]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Generator::Translation(v) => write!(f, "trans:{}", join(v)),
            Generator::Dilation(l) => write!(f, "dil:{l}"),
            Generator::Rotation(a, b) => write!(f, "rot:{},{}", join(a), join(b)),
            Generator::Inversion => write!(f, "inv"),
        }
    }
}

/// Parses the generator language: a comma-separated list of `inv`,
/// `trans:v₁,…,v_n`, `dil:λ` and `rot:u₁…,u₂…` (`2n` numbers). Numbers after
/// a tagged item belong to it. The list is read as a matrix product, so the
/// rightmost generator acts first.
pub fn parse_generators(n: usize, text: &str) -> Result<Vec<Generator>> {
    let mut items: Vec<(usize, &str, Vec<f64>)> = Vec::new();
    let mut pos = 0;
    for tok in text.split(',') {
        let start = pos;
        pos += tok.len() + 1;
        let t = tok.trim();
        if t.is_empty() {
            return Err(Error::parse(start, "empty item"));
        }
        let (tag, first) = match t.split_once(':') {
            Some((tag, rest)) => (Some(tag.trim()), Some(rest.trim())),
            None if t.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => (Some(t), None),
            None => (None, Some(t)),
        };
        if let Some(tag) = tag {
            items.push((start, tag, Vec::new()));
        }
        if let Some(num) = first {
            let v: f64 = num.parse().map_err(|_| Error::parse(start, format!("bad number `{num}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(start, "number must be finite"));
            }
            match items.last_mut() {
                Some(item) => item.2.push(v),
                None => return Err(Error::parse(start, "number before any generator")),
            }
        }
    }
    items
        .into_iter()
        .map(|(at, tag, args)| {
            let want = |k: usize| {
                if args.len() == k {
                    Ok(())
                } else {
                    Err(Error::parse(at, format!("`{tag}` takes {k} numbers, got {}", args.len())))
                }
            };
            let g = match tag {
                "inv" => {
                    want(0)?;
                    Generator::Inversion
                }
                "trans" => {
                    want(n)?;
                    Generator::Translation(args.clone())
                }
                "dil" => {
                    want(1)?;
                    if args[0] <= 0.0 {
                        return Err(Error::parse(at, "dilation factor must be positive"));
                    }
                    Generator::Dilation(args[0])
                }
                "rot" => {
                    want(2 * n)?;
                    let (a, b) = args.split_at(n);
                    for u in [a, b] {
                        if u.iter().all(|c| *c == 0.0) {
                            return Err(Error::parse(at, "rotation vectors must be nonzero"));
                        }
                    }
                    Generator::Rotation(a.to_vec(), b.to_vec())
                }
                other => return Err(Error::parse(at, format!("unknown generator `{other}`"))),
            };
            Ok(g)
        })
        .collect()
}

/// `[[a, b], [c, d]]` acting by `x ↦ (ax + b)(cx + d)^{-1}`, built only from
/// generators.
#[derive(Clone, Debug)]
pub struct VahlenMatrix {
    dim: usize,
    pub a: FMv,
    pub b: FMv,
    pub c: FMv,
    pub d: FMv,
    provenance: Vec<Generator>,
}

/// Conformal weight factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConformalWeight {
    /// `J(M, x) = (cx + d)~ / ‖cx + d‖^n`.
    J,
    /// The weight carrying solutions of `D^k f = 0`: `(cx + d)~ / ‖cx + d‖^{n−k+1}`
    /// for odd `k` and the scalar `‖cx + d‖^{k−n}` for even `k`.
    Jk(u32),
}

impl VahlenMatrix {
    pub fn identity(n: usize) -> Self {
        VahlenMatrix {
            dim: n,
            a: FMv::one(n),
            b: FMv::zero(n),
            c: FMv::zero(n),
            d: FMv::one(n),
            provenance: Vec::new(),
        }
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        let [a, b, c, d] = g.matrix(n)?;
        Ok(VahlenMatrix {
            dim: n,
            a,
            b,
            c,
            d,
            provenance: vec![g],
        })
    }

    /// `G₁ · G₂ · … · G_k`; the last generator acts first.
    pub fn from_generators(n: usize, gens: &[Generator]) -> Result<Self> {
        gens.iter()
            .try_fold(Self::identity(n), |acc, g| Ok(acc.compose(&Self::generator(n, g.clone())?)))
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::from_generators(n, &parse_generators(n, text)?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn provenance(&self) -> &[Generator] {
        &self.provenance
    }

    /// Matrix product `self · other`, i.e. `other` acts first.
    pub fn compose(&self, other: &VahlenMatrix) -> VahlenMatrix {
        assert_eq!(self.dim, other.dim, "Vahlen matrices over different algebras");
        let mut provenance = self.provenance.clone();
        provenance.extend(other.provenance.iter().cloned());
        VahlenMatrix {
            dim: self.dim,
            a: &(&self.a * &other.a) + &(&self.b * &other.c),
            b: &(&self.a * &other.b) + &(&self.b * &other.d),
            c: &(&self.c * &other.a) + &(&self.d * &other.c),
            d: &(&self.c * &other.b) + &(&self.d * &other.d),
            provenance,
        }
    }

    /// Product of the inverse generators in reverse order.
    pub fn inverse(&self) -> VahlenMatrix {
        let gens: Vec<Generator> = self.provenance.iter().rev().map(Generator::inverse).collect();
        Self::from_generators(self.dim, &gens).expect("inverse generators are valid")
    }

    fn check_point(&self, x: &[f64]) -> Result<FMv> {
        if x.len() != self.dim {
            return Err(Error::InvalidParameter(format!("point must lie in R^{}", self.dim)));
        }
        if x.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidParameter("point must be finite".into()));
        }
        Ok(FMv::vector(self.dim, x))
    }

    /// `cx + d` and its norm, failing near a pole.
    fn denominator(&self, xv: &FMv) -> Result<(FMv, f64)> {
        let q = &(&self.c * xv) + &self.d;
        let len = q.norm();
        if len < POLE_TOLERANCE {
            return Err(Error::Pole(format!("{:?}", xv.vector_coords().unwrap_or_default())));
        }
        Ok((q, len))
    }

    /// `(ax + b)(cx + d)^{-1}`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let xv = self.check_point(x)?;
        let (q, _) = self.denominator(&xv)?;
        let u = &(&(&self.a * &xv) + &self.b) * &versor_inverse(&q)?;
        let coords = u.grade_part(1);
        let rest = (&u - &coords).norm();
        if rest > GRADE_TOLERANCE * u.norm().max(1.0) {
            return Err(Error::NotAVector);
        }
        Ok((0..self.dim).map(|j| coords.coeff(1 << j)).collect())
    }

    /// `‖cx + d‖`.
    pub fn denominator_norm(&self, x: &[f64]) -> Result<f64> {
        let xv = self.check_point(x)?;
        Ok(self.denominator(&xv)?.1)
    }

    pub fn weight(&self, x: &[f64], kind: ConformalWeight) -> Result<FMv> {
        let xv = self.check_point(x)?;
        let (q, len) = self.denominator(&xv)?;
        let n = self.dim as i32;
        Ok(match kind {
            ConformalWeight::J => q.reversion().scale(&len.powi(-n)),
            ConformalWeight::Jk(0) => return Err(Error::InvalidParameter("weight order k must be ≥ 1".into())),
            ConformalWeight::Jk(k) if k % 2 == 1 => q.reversion().scale(&len.powi(k as i32 - 1 - n)),
            ConformalWeight::Jk(k) => FMv::scalar(self.dim, len.powi(k as i32 - n)),
        })
    }

    /// The generators in the text form read by [`parse_generators`].
    pub fn to_dsl(&self) -> String {
        self.provenance.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Inverse of a product of vectors and scalars, `q̄ / (q q̄)`.
pub(crate) fn versor_inverse(q: &FMv) -> Result<FMv> {
    let conj = q.conjugation();
    let nq = &(q * &conj);
    let s = nq.scalar_part();
    if s.abs() < 1e-300 {
        return Err(Error::ZeroVector);
    }
    let rest = (nq - &FMv::scalar(q.dim(), s)).norm();
    if rest > 1e-9 * s.abs() {
        return Err(Error::Unsupported("an element with scalar norm".into()));
    }
    Ok(conj.scale(&(1.0 / s)))
}
