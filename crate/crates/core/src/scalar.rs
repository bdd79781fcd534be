//! Exact coefficients: arbitrary-precision rationals or a prime field `GF(p)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed scalar `{0}`")]
    Malformed(String),
    #[error("division by zero in scalar `{0}`")]
    ZeroDenominator(String),
    #[error("invalid field `{0}`: expected `q` or `gf:p` with p prime")]
    InvalidField(String),
}

/// Largest accepted characteristic; keeps products inside `u128` arithmetic
/// and primality checks by trial division cheap.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p <= MAX_PRIME && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(ScalarError::InvalidField(format!("gf:{p}")))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Parses `INT` or `INT/INT` into this field.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, ScalarError> {
        let malformed = || ScalarError::Malformed(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text.trim(), None),
        };
        let num: BigInt = num.parse().map_err(|_| malformed())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        match self {
            Field::Rational => {
                if den.is_zero() {
                    return Err(ScalarError::ZeroDenominator(text.to_string()));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let reduce = |x: &BigInt| {
                    let m = BigInt::from(p);
                    (((x % &m) + &m) % &m).to_u64().expect("residue fits")
                };
                let n = Scalar::Prime {
                    value: reduce(&num),
                    p,
                };
                let d = Scalar::Prime {
                    value: reduce(&den),
                    p,
                };
                let inv = d
                    .inverse()
                    .ok_or_else(|| ScalarError::ZeroDenominator(text.to_string()))?;
                Ok(&n * &inv)
            }
        }
    }
}

impl FromStr for Field {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "q" | "Q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| ScalarError::InvalidField(s.to_string()))?;
                Field::prime(p).map_err(|_| ScalarError::InvalidField(s.to_string()))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Arithmetic between different fields panics;
/// elements never mix fields because an algebra fixes its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Whether the canonical rendering carries a minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            other => other.clone(),
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn same_prime(p: u64, q: u64) -> u64 {
    assert_eq!(p, q, "scalars from different prime fields");
    p
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Prime {
                    value: (a + b) % p,
                    p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, p: q }) => {
                let p = same_prime(*p, *q);
                let v = (*a as u128 * *b as u128 % p as u128) as u64;
                Scalar::Prime { value: v, p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fields() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gf:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("gf:8".parse::<Field>().is_err());
        assert!("gf:1".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let q = Field::Rational;
        let half = q.parse_scalar("1/2").unwrap();
        let third = q.parse_scalar("2/6").unwrap();
        assert_eq!((&half + &third).to_string(), "5/6");
        assert_eq!((&half * &third).to_string(), "1/6");
        assert_eq!((&half - &half), q.zero());
        assert_eq!(half.inverse().unwrap(), q.from_i64(2));
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("x").is_err());
    }

    #[test]
    fn prime_arithmetic() {
        let f = Field::Prime(7);
        let three = f.from_i64(3);
        assert_eq!((&three * &three.inverse().unwrap()), f.one());
        assert_eq!(f.from_i64(-1).to_string(), "6");
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert!(f.parse_scalar("1/7").is_err());
        assert!(f.zero().inverse().is_none());
        assert_eq!(-&f.zero(), f.zero());
    }

    #[test]
    fn every_nonzero_residue_is_invertible() {
        let f = Field::Prime(13);
        for n in 1..13 {
            let x = f.from_i64(n);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }
}
