//! Text and JSON forms of [`CliffordPolynomial`].
//!
//! Text: `(1*e12) * x1^2 x2 + (-1/2*1)`, terms joined by ` + `, each a
//! parenthesized multivector optionally followed by `* ` and a monomial.
//! Spatial variables are `x1…xn` (`x0…xn` when unital) and parameters
//! `y1, y2, …`.
//!
//! JSON: `{"dim", "kind", "params"?, "terms": [{"exponents", "coeff"}]}` where
//! `coeff` maps blade names (`"1"`, `"e12"`) to exact rational strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::poly::{CliffordPolynomial, VariableKind};
use crate::algebra::text::blade_text;
use crate::algebra::{parse_rational, RMv};
use crate::error::{Error, Result};

fn var_name(p: &CliffordPolynomial, slot: usize) -> String {
    if slot < p.nvars() {
        match p.kind() {
            VariableKind::Vector => format!("x{}", slot + 1),
            VariableKind::Unital => format!("x{slot}"),
        }
    } else {
        format!("y{}", slot - p.nvars() + 1)
    }
}

impl CliffordPolynomial {
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(slot, e)| match e {
                        1 => var_name(self, slot),
                        _ => format!("{}^{e}", var_name(self, slot)),
                    })
                    .collect();
                if vars.is_empty() {
                    format!("({})", c.to_text())
                } else {
                    format!("({}) * {}", c.to_text(), vars.join(" "))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse(dim: usize, kind: VariableKind, nparams: usize, text: &str) -> Result<Self> {
        crate::algebra::multivector::check_dim(dim)?;
        super::poly::check_params(nparams)?;
        let shape = CliffordPolynomial::zero_with_params(dim, kind, nparams);
        let total = shape.total_vars();
        let src = text.trim();
        if src == "0" {
            return Ok(shape);
        }
        let mut terms = Vec::new();
        let mut pos = 0;
        let bytes = src.as_bytes();
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if bytes.get(pos) != Some(&b'(') {
                return Err(Error::parse(pos, "expected '(' opening a coefficient"));
            }
            let close = src[pos..]
                .find(')')
                .map(|i| pos + i)
                .ok_or_else(|| Error::parse(pos, "unclosed coefficient"))?;
            let coeff = RMv::parse(dim, &src[pos + 1..close]).map_err(|e| match e {
                Error::Parse { pos: p, msg } => Error::parse(pos + 1 + p, msg),
                other => other,
            })?;
            pos = close + 1;
            let next_plus = src[pos..].find(" + ").map(|i| pos + i).unwrap_or(src.len());
            let rest = src[pos..next_plus].trim();
            let mut exps = vec![0u32; total];
            if !rest.is_empty() {
                let vars = rest
                    .strip_prefix('*')
                    .ok_or_else(|| Error::parse(pos, "expected '*' before the monomial"))?;
                for token in vars.split_whitespace() {
                    let (name, e) = match token.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>()
                                .map_err(|_| Error::parse(pos, format!("bad exponent in {token:?}")))?,
                        ),
                        None => (token, 1),
                    };
                    let slot = slot_of(&shape, name)
                        .ok_or_else(|| Error::parse(pos, format!("unknown variable {name:?}")))?;
                    exps[slot] = exps[slot]
                        .checked_add(e)
                        .ok_or_else(|| Error::parse(pos, "exponent overflow"))?;
                }
            }
            terms.push((exps, coeff));
            if next_plus >= src.len() {
                break;
            }
            pos = next_plus + 3;
        }
        CliffordPolynomial::from_terms(dim, kind, nparams, terms)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            dim: self.dim(),
            kind: self.kind(),
            params: self.nparams(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson {
                    exponents: m.0.clone(),
                    coeff: c
                        .terms()
                        .iter()
                        .map(|(b, r)| (blade_text(*b), r.to_string()))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("polynomial JSON serializes")
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let mut c = RMv::try_zero(j.dim)?;
            for (blade, value) in &t.coeff {
                let unit = RMv::parse(j.dim, blade)?;
                let v = parse_rational(value)
                    .ok_or_else(|| Error::parse(0, format!("bad rational {value:?}")))?;
                c += &unit.scale(&v);
            }
            terms.push((t.exponents.clone(), c));
        }
        CliffordPolynomial::from_terms(j.dim, j.kind, j.params, terms)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        Self::from_json(&j)
    }
}

fn slot_of(shape: &CliffordPolynomial, name: &str) -> Option<usize> {
    if let Some(idx) = name.strip_prefix('x') {
        let i: usize = idx.parse().ok()?;
        return match shape.kind() {
            VariableKind::Vector => (1..=shape.nvars()).contains(&i).then(|| i - 1),
            VariableKind::Unital => (i < shape.nvars()).then_some(i),
        };
    }
    let i: usize = name.strip_prefix('y')?.parse().ok()?;
    (1..=shape.nparams()).contains(&i).then(|| shape.nvars() + i - 1)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub dim: usize,
    pub kind: VariableKind,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub params: usize,
    pub terms: Vec<TermJson>,
}

fn is_zero(v: &usize) -> bool {
    *v == 0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: BTreeMap<String, String>,
}
