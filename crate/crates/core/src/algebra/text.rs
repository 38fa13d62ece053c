//! Text form of multivectors: `2.5*e12 + 1*e3 - 0.5*1`.
//!
//! Blades whose indices are all single digits print as `e134`; otherwise the
//! bracket form `e[1,10]` is used. The scalar blade prints as `1` and the zero
//! element as `0`. Terms are printed by grade, then by blade bitmask.

use std::fmt;

use super::blade::{self, Blade};
use super::multivector::{check_dim, Multivector};
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub fn blade_text(b: Blade) -> String {
    if b == 0 {
        return "1".into();
    }
    let idx: Vec<usize> = blade::indices(b).collect();
    if idx.iter().all(|&i| i <= 9) {
        let digits: String = idx.iter().map(|i| i.to_string()).collect();
        format!("e{digits}")
    } else {
        let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("e[{}]", list.join(","))
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut order: Vec<&(Blade, S)> = self.terms().iter().collect();
        order.sort_by_key(|t| (blade::grade(t.0), t.0));
        let mut out = String::new();
        for (k, (b, c)) in order.into_iter().enumerate() {
            let (neg, mag) = c.split_sign();
            match (k == 0, neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&mag.write_text());
            out.push('*');
            out.push_str(&blade_text(*b));
        }
        out
    }

    /// Parses the text form into `Cl_dim`. Blade words may be given in any
    /// order (`e21` is read as the product `e2 e1`).
    pub fn parse(dim: usize, text: &str) -> Result<Self> {
        check_dim(dim)?;
        Parser {
            src: text,
            pos: 0,
            dim,
        }
        .multivector()
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    dim: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.pos, msg)
    }

    fn multivector<S: Scalar>(mut self) -> Result<Multivector<S>> {
        let mut terms: Vec<(Blade, S)> = Vec::new();
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                break;
            }
            let negative = match self.peek() {
                Some('+') if !first => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected '+' or '-' between terms")),
            };
            first = false;
            self.skip_ws();
            let (b, c) = self.term::<S>()?;
            terms.push((b, if negative { -c } else { c }));
        }
        Multivector::try_from_terms(self.dim, terms)
    }

    /// `coef*blade`, `coef` alone, or a blade alone.
    fn term<S: Scalar>(&mut self) -> Result<(Blade, S)> {
        if self.peek() == Some('e') {
            return self.blade_word();
        }
        let start = self.pos;
        let coef_text = self.coefficient_text()?;
        let coef = S::parse_text(coef_text).ok_or_else(|| Error::parse(start, "bad coefficient"))?;
        self.skip_ws();
        if self.peek() != Some('*') {
            return Ok((0, coef));
        }
        self.pos += 1;
        self.skip_ws();
        let (b, unit) = if self.peek() == Some('1') {
            self.pos += 1;
            (0, S::one())
        } else {
            self.blade_word::<S>()?
        };
        Ok((b, unit * coef))
    }

    fn coefficient_text(&mut self) -> Result<&str> {
        let start = self.pos;
        if self.peek() == Some('(') {
            let close = self
                .rest()
                .find(')')
                .ok_or_else(|| self.err("unclosed parenthesis"))?;
            self.pos += close + 1;
            return Ok(&self.src[start..self.pos]);
        }
        let bytes = self.src.as_bytes();
        let mut i = self.pos;
        while i < bytes.len() {
            let c = bytes[i];
            let exp_sign = matches!(c, b'+' | b'-') && i > start && matches!(bytes[i - 1], b'e' | b'E');
            if c.is_ascii_digit() || matches!(c, b'.' | b'/' | b'e' | b'E') || exp_sign {
                i += 1;
            } else {
                break;
            }
        }
        if i == start {
            return Err(self.err("expected a coefficient or blade"));
        }
        self.pos = i;
        Ok(&self.src[start..i])
    }

    /// `e123` or `e[1,10]`, multiplied out left to right.
    fn blade_word<S: Scalar>(&mut self) -> Result<(Blade, S)> {
        let start = self.pos;
        if self.peek() != Some('e') {
            return Err(self.err("expected a blade such as e12"));
        }
        self.pos += 1;
        let indices: Vec<usize> = if self.peek() == Some('[') {
            let close = self
                .rest()
                .find(']')
                .ok_or_else(|| self.err("unclosed blade bracket"))?;
            let body = &self.rest()[1..close];
            let parsed = body
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(start, "bad blade index list"))?;
            self.pos += close + 1;
            parsed
        } else {
            let digits: &str = {
                let r = self.rest();
                let len = r.bytes().take_while(|c| c.is_ascii_digit()).count();
                &r[..len]
            };
            if digits.is_empty() {
                return Err(Error::parse(start, "blade needs at least one index"));
            }
            let v = digits.bytes().map(|d| (d - b'0') as usize).collect();
            self.pos += digits.len();
            v
        };
        let mut negative = false;
        let mut acc: Blade = 0;
        for i in indices {
            if i == 0 || i > self.dim {
                return Err(Error::parse(start, format!("generator e{i} not in Cl_{}", self.dim)));
            }
            let (neg, b) = blade::blade_product(acc, 1 << (i - 1));
            negative ^= neg;
            acc = b;
        }
        let unit = if negative { -S::one() } else { S::one() };
        Ok((acc, unit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rational, Complex64, ComplexRational, Rational};
    use proptest::prelude::*;

    #[test]
    fn prints_reference_example() {
        let m = Multivector::<Rational>::parse(3, "2.5*e12 + 1*e3 - 0.5*1").unwrap();
        assert_eq!(m.to_text(), "-1/2*1 + 1*e3 + 5/2*e12");
        assert_eq!(m.coeff(0b11), rational(5, 2));
    }

    #[test]
    fn zero_and_bare_forms() {
        let z = Multivector::<Rational>::parse(2, "0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_text(), "0");
        let m = Multivector::<Rational>::parse(2, "e1 - 3").unwrap();
        assert_eq!(m, Multivector::from_terms(2, [(1, rational(1, 1)), (0, rational(-3, 1))]));
    }

    #[test]
    fn unordered_words_multiply_out() {
        let m = Multivector::<Rational>::parse(3, "e21").unwrap();
        assert_eq!(m, Multivector::from_terms(3, [(0b11, rational(-1, 1))]));
        let m = Multivector::<Rational>::parse(3, "2*e11").unwrap();
        assert_eq!(m, Multivector::scalar(3, rational(-2, 1)));
    }

    #[test]
    fn bracket_blades() {
        let m = Multivector::<Rational>::parse(12, "3*e[1,10] + e[12]").unwrap();
        assert_eq!(m.to_text(), "1*e[12] + 3*e[1,10]");
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "e4", "2*", "2**e1", "e", "1 2", "(1+2i", "e[1,", "+"] {
            assert!(Multivector::<Rational>::parse(3, bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn complex_and_float_forms() {
        let m = Multivector::<Complex64>::parse(2, "(0.5+-1.25i)*e2 - (1+0i)*1").unwrap();
        assert_eq!(m.coeff(2), Complex64::new(0.5, -1.25));
        assert_eq!(m.coeff(0), Complex64::new(-1.0, 0.0));
        let back = Multivector::<Complex64>::parse(2, &m.to_text()).unwrap();
        assert_eq!(back, m);
        let q = Multivector::<ComplexRational>::parse(2, "(1/2+3i)*e12").unwrap();
        assert_eq!(Multivector::parse(2, &q.to_text()).unwrap(), q);
        let f = Multivector::<f64>::parse(2, "1e-3*e1 + 2.5E+2*1").unwrap();
        assert_eq!(f.coeff(1), 1e-3);
        assert_eq!(f.coeff(0), 250.0);
    }

    fn arb_rational_mv(dim: usize) -> impl Strategy<Value = Multivector<Rational>> {
        proptest::collection::vec((0u32..(1 << dim), -50i64..50, 1i64..20), 0..8).prop_map(move |v| {
            Multivector::from_terms(dim, v.into_iter().map(|(b, p, q)| (b, rational(p, q))))
        })
    }

    proptest! {
        #[test]
        fn rational_round_trip(m in arb_rational_mv(5)) {
            prop_assert_eq!(Multivector::<Rational>::parse(5, &m.to_text()).unwrap(), m);
        }

        #[test]
        fn float_round_trip(v in proptest::collection::vec((0u32..16, -1e6f64..1e6), 0..6)) {
            let m = Multivector::<f64>::from_terms(4, v);
            prop_assert_eq!(Multivector::<f64>::parse(4, &m.to_text()).unwrap(), m);
        }
    }
}
