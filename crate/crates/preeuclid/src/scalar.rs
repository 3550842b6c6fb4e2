//! Exact field elements: rationals and Gaussian rationals.
//!
//! Every value is kept in canonical form (reduced fraction, positive
//! denominator) so that equality is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field a scalar (or a whole problem) lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Rational,
    GaussianRational,
}

impl Field {
    fn unify(self, other: Field) -> Field {
        if self == Field::GaussianRational || other == Field::GaussianRational {
            Field::GaussianRational
        } else {
            Field::Rational
        }
    }
}

/// An exact scalar: `re + im * i` with rational components.
///
/// For `Field::Rational` the imaginary part is identically zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    field: Field,
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn rational(re: BigRational) -> Scalar {
        Scalar {
            field: Field::Rational,
            re,
            im: BigRational::zero(),
        }
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Scalar {
        Scalar {
            field: Field::GaussianRational,
            re,
            im,
        }
    }

    pub fn zero(field: Field) -> Scalar {
        Scalar {
            field,
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one(field: Field) -> Scalar {
        Scalar {
            field,
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64, field: Field) -> Scalar {
        Scalar {
            field,
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a scalar; panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64, field: Field) -> Scalar {
        Scalar {
            field,
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self.field {
            Field::Rational => Some(Scalar::rational(self.re.recip())),
            Field::GaussianRational => {
                let norm = &self.re * &self.re + &self.im * &self.im;
                Some(Scalar::gaussian(&self.re / &norm, -&self.im / &norm))
            }
        }
    }

    /// Parse a rational literal `INT[/POSINT]`, e.g. `-3/4` or `7`.
    pub fn parse_rational_text(text: &str) -> Result<BigRational> {
        let (num_str, den_str) = match text.find('/') {
            Some(pos) => (&text[..pos], Some((&text[pos + 1..], pos + 1))),
            None => (text, None),
        };
        let num = parse_int(num_str, 0, true)?;
        let den = match den_str {
            Some((s, off)) => parse_int(s, off, false)?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(BigRational::new(num, den))
    }

    /// Parse a scalar literal under the given field.
    pub fn parse(lit: &ScalarLiteral, field: Field) -> Result<Scalar> {
        match (lit, field) {
            (ScalarLiteral::Rational(text), Field::Rational) => {
                Ok(Scalar::rational(Self::parse_rational_text(text)?))
            }
            (ScalarLiteral::Rational(text), Field::GaussianRational) => Ok(Scalar::gaussian(
                Self::parse_rational_text(text)?,
                BigRational::zero(),
            )),
            (ScalarLiteral::Gaussian { re, im }, Field::GaussianRational) => Ok(Scalar::gaussian(
                Self::parse_rational_text(re)?,
                Self::parse_rational_text(im)?,
            )),
            (ScalarLiteral::Gaussian { .. }, Field::Rational) => Err(Error::Parse {
                offset: 0,
                msg: "complex literal not allowed under the rational field".into(),
            }),
        }
    }

    /// Canonical literal form; `parse(to_literal(s)) == s`.
    pub fn to_literal(&self) -> ScalarLiteral {
        match self.field {
            Field::Rational => ScalarLiteral::Rational(format_rational(&self.re)),
            Field::GaussianRational => ScalarLiteral::Gaussian {
                re: format_rational(&self.re),
                im: format_rational(&self.im),
            },
        }
    }
}

fn parse_int(text: &str, base_offset: usize, allow_sign: bool) -> Result<BigInt> {
    if text.is_empty() {
        return Err(Error::Parse {
            offset: base_offset,
            msg: "empty integer".into(),
        });
    }
    let body = if allow_sign {
        text.strip_prefix('-').unwrap_or(text)
    } else {
        text
    };
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        let bad = text
            .bytes()
            .position(|b| !(b.is_ascii_digit() || (allow_sign && b == b'-')))
            .unwrap_or(0);
        return Err(Error::Parse {
            offset: base_offset + bad,
            msg: format!("malformed integer {text:?}"),
        });
    }
    Ok(BigInt::from_str(text).expect("validated digits"))
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Wire form of a scalar: a rational string or a `{re, im}` pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLiteral {
    Rational(String),
    Gaussian { re: String, im: String },
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            Field::Rational => write!(f, "{}", format_rational(&self.re)),
            Field::GaussianRational => {
                if self.im.is_zero() {
                    write!(f, "{}", format_rational(&self.re))
                } else if self.re.is_zero() {
                    write!(f, "{}i", format_rational(&self.im))
                } else if self.im.is_negative() {
                    write!(
                        f,
                        "{}{}i",
                        format_rational(&self.re),
                        format_rational(&self.im)
                    )
                } else {
                    write!(
                        f,
                        "{}+{}i",
                        format_rational(&self.re),
                        format_rational(&self.im)
                    )
                }
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            field: self.field.unify(rhs.field),
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            field: self.field.unify(rhs.field),
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            field: self.field.unify(rhs.field),
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field,
            re: -&self.re,
            im: -&self.im,
        }
    }
}
