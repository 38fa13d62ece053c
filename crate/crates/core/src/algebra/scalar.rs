//! Scalar fields the algebra is instantiated over.
//!
//! Symbolic work uses exact rationals; quadrature uses `f64` and complex
//! doubles. Conversion between them is always explicit.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;
pub type Complex64 = Complex<f64>;
pub type ComplexRational = Complex<Rational>;

/// Coefficient ring of a multivector.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self>;

    /// `|s|²` as a double, used for norms and tolerances.
    fn abs_sq_f64(&self) -> f64;

    /// Splits off a leading minus sign for printing: `(negative, magnitude)`.
    fn split_sign(&self) -> (bool, Self) {
        (false, self.clone())
    }

    fn write_text(&self) -> String;

    fn parse_text(s: &str) -> Option<Self>;
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses `p`, `p/q` or a finite decimal (`-2.375`, `1e-3`) into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    if exp.unsigned_abs() > 4096 {
        return None;
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = Rational::from_integer(all);
    if scale >= 0 {
        r *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -r } else { r })
}

impl Scalar for Rational {
    fn from_ratio(num: i64, den: i64) -> Self {
        rational(num, den)
    }

    fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational::recip(self))
    }

    fn abs_sq_f64(&self) -> f64 {
        let v = rational_to_f64(self);
        v * v
    }

    fn split_sign(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }

    fn write_text(&self) -> String {
        self.to_string()
    }

    fn parse_text(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn recip(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }

    fn abs_sq_f64(&self) -> f64 {
        self * self
    }

    fn split_sign(&self) -> (bool, Self) {
        (self.is_sign_negative() && *self != 0.0, self.abs())
    }

    fn write_text(&self) -> String {
        format!("{self:?}")
    }

    fn parse_text(s: &str) -> Option<Self> {
        let s = s.trim();
        if s.is_empty() || s.starts_with('+') {
            return None;
        }
        s.parse().ok()
    }
}

fn split_complex(s: &str) -> Option<(&str, &str)> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let inner = inner.strip_suffix('i')?;
    let bytes = inner.as_bytes();
    let cut = (1..bytes.len())
        .rev()
        .find(|&i| bytes[i] == b'+' && !matches!(bytes[i - 1], b'e' | b'E'))?;
    Some((&inner[..cut], &inner[cut + 1..]))
}

impl<T> Scalar for Complex<T>
where
    T: Scalar + num_traits::Num,
{
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(T::from_ratio(num, den), T::zero())
    }

    fn recip(&self) -> Option<Self> {
        let d = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let inv = Scalar::recip(&d)?;
        Some(Complex::new(
            self.re.clone() * inv.clone(),
            -(self.im.clone() * inv),
        ))
    }

    fn abs_sq_f64(&self) -> f64 {
        self.re.abs_sq_f64() + self.im.abs_sq_f64()
    }

    fn write_text(&self) -> String {
        format!("({}+{}i)", self.re.write_text(), self.im.write_text())
    }

    fn parse_text(s: &str) -> Option<Self> {
        match split_complex(s) {
            Some((re, im)) => Some(Complex::new(T::parse_text(re)?, T::parse_text(im)?)),
            None => T::parse_text(s).map(|re| Complex::new(re, T::zero())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_forms() {
        assert_eq!(parse_rational("3/4"), Some(rational(3, 4)));
        assert_eq!(parse_rational("-2.5"), Some(rational(-5, 2)));
        assert_eq!(parse_rational("1e-3"), Some(rational(1, 1000)));
        assert_eq!(parse_rational(".5"), Some(rational(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn complex_text_round_trip() {
        let z = Complex64::new(1.5, -2e-20);
        let s = z.write_text();
        assert_eq!(Complex64::parse_text(&s), Some(z));
        let q = ComplexRational::new(rational(1, 3), rational(-7, 2));
        assert_eq!(ComplexRational::parse_text(&q.write_text()), Some(q));
    }

    #[test]
    fn float_text_round_trip() {
        for v in [0.1, -3.25, 1e-300, 123456789.125, 0.0] {
            assert_eq!(f64::parse_text(&v.write_text()), Some(v));
        }
    }
}
