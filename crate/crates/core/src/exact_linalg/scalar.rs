//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Coefficient field tag carried by every [`Scalar`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub const Q: Field = Field::Rational;
    pub const Z2: Field = Field::Prime(2);

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Builds a prime field, rejecting composite moduli.
    pub fn prime(p: u32) -> Result<Field, LinalgError> {
        if p < 2
            || (2..p)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn parse(text: &str) -> Option<Field> {
        match text.trim().to_ascii_uppercase().as_str() {
            "Q" => Some(Field::Rational),
            s => s
                .strip_prefix('Z')
                .or_else(|| s.strip_prefix("F"))
                .and_then(|p| p.trim_start_matches('_').parse().ok())
                .and_then(|p| Field::prime(p).ok()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Z{p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms by
/// `BigRational`; residues always lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), LinalgError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(LinalgError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Sum of two scalars known to share a field. Callers that have not
    /// checked should use [`Scalar::try_add`].
    pub(crate) fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                modulus: *modulus,
            },
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub(crate) fn sub_unchecked(&self, other: &Scalar) -> Scalar {
        self.add_unchecked(&other.neg())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let (mut base, mut exp, mut acc) = (*value as u64, p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Mod {
                    value: acc as u32,
                    modulus: *modulus,
                }
            }
        })
    }

    /// Scales by `(-1)^k`.
    pub fn signed(&self, negative: bool) -> Scalar {
        if negative {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// Sign of a rational, or `+` for any nonzero residue.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let a = Scalar::rational(2, -4);
        match &a {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-1));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        let b = a.try_add(&Scalar::rational(1, 2)).unwrap();
        assert!(b.is_zero());
    }

    #[test]
    fn residues_in_range() {
        let f = Field::prime(5).unwrap();
        assert_eq!(
            f.from_i64(-7),
            Scalar::Mod {
                value: 3,
                modulus: 5
            }
        );
        let x = f.from_i64(3);
        assert!(x.try_mul(&x.inverse().unwrap()).unwrap().is_one());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let err = Field::Q.one().try_add(&Field::Z2.one()).unwrap_err();
        assert!(matches!(err, LinalgError::FieldMismatch(..)));
    }

    #[test]
    fn parse_field_names() {
        assert_eq!(Field::parse("Q"), Some(Field::Q));
        assert_eq!(Field::parse("z2"), Some(Field::Z2));
        assert_eq!(Field::parse("Z_3"), Some(Field::Prime(3)));
        assert_eq!(Field::parse("Z4"), None);
    }
}
