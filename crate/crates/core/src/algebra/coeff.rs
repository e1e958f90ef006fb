//! Scalars: arbitrary-precision integers or residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ring every coefficient of a polynomial lives in.
///
/// `Integers` also stands in for the localizations at a prime: a computation
/// that needs to invert an off-prime integer does so with
/// [`Coefficient::div_exact`], which checks divisibility first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseRing {
    Integers,
    Prime(u64),
}

impl BaseRing {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(BaseRing::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            BaseRing::Integers => 0,
            BaseRing::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Coefficient {
        self.from_i64(0)
    }

    pub fn one(self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Coefficient {
        match self {
            BaseRing::Integers => Coefficient::Integer(BigInt::from(n)),
            BaseRing::Prime(p) => Coefficient::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Coefficient {
        match self {
            BaseRing::Integers => Coefficient::Integer(n.clone()),
            BaseRing::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Coefficient::Residue {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A single scalar. Residues are kept in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficient {
    Integer(BigInt),
    Residue { value: u64, modulus: u64 },
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(powmod(a, p - 2, p))
    }
}

impl Coefficient {
    pub fn base(&self) -> BaseRing {
        match self {
            Coefficient::Integer(_) => BaseRing::Integers,
            Coefficient::Residue { modulus, .. } => BaseRing::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Integer(n) => n.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Integer(n) => n.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    /// True when the scalar is invertible in its ring (±1 over the integers).
    pub fn is_unit(&self) -> bool {
        match self {
            Coefficient::Integer(n) => n.abs().is_one(),
            Coefficient::Residue { value, .. } => *value != 0,
        }
    }

    pub fn inverse(&self) -> Option<Coefficient> {
        match self {
            Coefficient::Integer(n) if n.abs().is_one() => Some(self.clone()),
            Coefficient::Integer(_) => None,
            Coefficient::Residue { value, modulus } => invmod(*value, *modulus).map(|v| {
                Coefficient::Residue {
                    value: v,
                    modulus: *modulus,
                }
            }),
        }
    }

    /// Representative integer: the integer itself, or the residue in `[0, p)`.
    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coefficient::Integer(n) => n.clone(),
            Coefficient::Residue { value, .. } => BigInt::from(*value),
        }
    }

    /// Machine-integer representative when it fits.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coefficient::Integer(n) => n.to_i64(),
            Coefficient::Residue { value, .. } => Some(*value as i64),
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a + b),
            (
                Coefficient::Residue { value: a, modulus },
                Coefficient::Residue { value: b, modulus: m2 },
            ) => {
                debug_assert_eq!(modulus, m2);
                let s = a + b;
                Coefficient::Residue {
                    value: if s >= *modulus { s - modulus } else { s },
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed coefficient rings"),
        }
    }

    pub fn add_assign(&mut self, other: &Coefficient) {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => *a += b,
            (Coefficient::Residue { value, modulus }, Coefficient::Residue { value: b, .. }) => {
                let s = *value + b;
                *value = if s >= *modulus { s - *modulus } else { s };
            }
            _ => panic!("mixed coefficient rings"),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Integer(a) => Coefficient::Integer(-a),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a * b),
            (
                Coefficient::Residue { value: a, modulus },
                Coefficient::Residue { value: b, .. },
            ) => Coefficient::Residue {
                value: mulmod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => panic!("mixed coefficient rings"),
        }
    }

    pub fn mul_i64(&self, k: i64) -> Coefficient {
        self.mul(&self.base().from_i64(k))
    }

    pub fn pow(&self, e: u32) -> Coefficient {
        match self {
            Coefficient::Integer(a) => Coefficient::Integer(num_traits::pow(a.clone(), e as usize)),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: powmod(*value, e as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Exact division. Over the integers the quotient must be an integer;
    /// modulo a prime the divisor must be nonzero.
    pub fn div_exact(&self, d: &Coefficient) -> Result<Coefficient> {
        match (self, d) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => {
                if b.is_zero() {
                    return Err(Error::NotDivisible(a.to_string(), b.to_string()));
                }
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Coefficient::Integer(q))
                } else {
                    Err(Error::NotDivisible(a.to_string(), b.to_string()))
                }
            }
            (Coefficient::Residue { .. }, Coefficient::Residue { value, .. }) => {
                let inv = d
                    .inverse()
                    .ok_or_else(|| Error::NotDivisible(self.to_string(), value.to_string()))?;
                Ok(self.mul(&inv))
            }
            _ => Err(Error::MixedModuli),
        }
    }

    /// Change of coefficient ring: integers reduce mod p, residues stay put.
    pub fn reduce(&self, base: BaseRing) -> Coefficient {
        match (self, base) {
            (_, b) if b == self.base() => self.clone(),
            (Coefficient::Integer(n), b) => b.from_bigint(n),
            (Coefficient::Residue { .. }, _) => panic!("cannot lift a residue to another ring"),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(n) => write!(f, "{n}"),
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_normalize() {
        let f5 = BaseRing::Prime(5);
        assert_eq!(f5.from_i64(-1), Coefficient::Residue { value: 4, modulus: 5 });
        assert_eq!(f5.from_i64(12).mul(&f5.from_i64(3)).to_i64(), Some(1));
        assert_eq!(f5.from_i64(3).inverse().unwrap().to_i64(), Some(2));
    }

    #[test]
    fn exact_division() {
        let z = BaseRing::Integers;
        assert_eq!(z.from_i64(12).div_exact(&z.from_i64(3)).unwrap(), z.from_i64(4));
        assert!(z.from_i64(7).div_exact(&z.from_i64(3)).is_err());
        assert!(BaseRing::prime(9).is_err());
    }
}
