//! Exact coefficient fields.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact field. Elements are built from a shared context (the modulus for
/// prime fields).
pub trait Field: Clone + PartialEq + Eq + Debug + Display + Send + Sync {
    type Ctx: Copy + Debug + PartialEq + Eq + Send + Sync;

    fn from_i64(n: i64, ctx: Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// True when the printed form would carry a leading minus sign.
    fn is_negative(&self) -> bool;
    fn ctx(&self) -> Self::Ctx;

    fn zero(ctx: Self::Ctx) -> Self {
        Self::from_i64(0, ctx)
    }

    fn one(ctx: Self::Ctx) -> Self {
        Self::from_i64(1, ctx)
    }

    fn is_one(&self) -> bool {
        *self == Self::one(self.ctx())
    }
}

impl Field for BigRational {
    type Ctx = ();

    fn from_i64(n: i64, _: ()) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn ctx(&self) {}
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Residue modulo a prime `modulus` (below 2^32).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        Self {
            value: value.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn make(&self, value: u64) -> Self {
        Self {
            value,
            modulus: self.modulus,
        }
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Ctx = u64;

    fn from_i64(n: i64, p: u64) -> Self {
        Fp::new(n, p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        self.make((self.value + other.value) % self.modulus)
    }
    fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        self.make((self.value + self.modulus - other.value) % self.modulus)
    }
    fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        self.make(self.value * other.value % self.modulus)
    }
    fn neg(&self) -> Self {
        self.make((self.modulus - self.value) % self.modulus)
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (self.value, self.modulus - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            exp >>= 1;
        }
        Some(self.make(acc))
    }
    fn is_negative(&self) -> bool {
        false
    }
    fn ctx(&self) -> u64 {
        self.modulus
    }
}

/// Runtime choice of coefficient field: `Q` or `Fp:p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|k| k * k <= p)
            .all(|k| !p.is_multiple_of(k))
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Self::Rational);
        }
        let body = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("Fp(").and_then(|t| t.strip_suffix(')')))
            .ok_or_else(|| Error::Parse(format!("unknown field '{s}', expected Q or Fp:p")))?;
        let p: u64 = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in '{s}'")))?;
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::Parse(format!(
                "modulus {p} is not a prime below 2^32"
            )));
        }
        Ok(Self::Prime(p))
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational => write!(f, "Q"),
            Self::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl serde::Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_field_specs() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("Fp:3".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert_eq!("Fp(2)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert!("Fp:4".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "Fp:7");
    }

    #[test]
    fn prime_field_basics() {
        let a = Fp::new(-1, 5);
        assert_eq!(a.value(), 4);
        assert_eq!(a.inv().unwrap().value(), 4);
        assert!(Fp::new(0, 2).inv().is_none());
        assert_eq!(Fp::new(1, 2).add(&Fp::new(1, 2)).value(), 0);
    }

    proptest! {
        #[test]
        fn fp_inverse(a in 1i64..1000, p in prop::sample::select(vec![2u64, 3, 5, 101, 65521])) {
            let x = Fp::new(a, p);
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn rational_inverse(n in -50i64..50, m in 1i64..50) {
            let x = BigRational::new(n.into(), m.into());
            if let Some(y) = Field::inv(&x) {
                prop_assert!(Field::is_one(&Field::mul(&x, &y)));
            }
        }
    }
}
