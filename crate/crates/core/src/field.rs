//! Coefficient fields: the prime field F_p and the rationals.
//!
//! Fields are runtime values (the prime is chosen on the command line), so
//! elements do not carry their field; every operation goes through the field
//! descriptor held by the ring.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default characteristic. Large enough that random choices behave generically.
pub const DEFAULT_PRIME: u64 = 32003;

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// Uniform draw from the nonzero elements (for the rationals: small
    /// nonzero integers).
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Integer numerator/denominator of a printable representative; the
    /// numerator carries the sign. For F_p the balanced representative is used.
    fn to_fraction(&self, a: &Self::Elem) -> (BigInt, BigInt);

    /// `fp:<p>` or `q`.
    fn descriptor(&self) -> String;

    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        let (n, d) = self.to_fraction(a);
        if d.is_one() {
            n.to_string()
        } else {
            format!("{n}/{d}")
        }
    }
}

/// The prime field F_p, p < 2^32 so that products fit in a machine word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 32).contains(&p) {
            return Err(Error::InvalidField(format!("prime {p} out of range [2, 2^32)")));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::InvalidField(format!("{p} is not prime")));
            }
            d += 1;
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n % BigInt::from(self.p);
        let r = r.to_i128().expect("residue fits");
        self.reduce_i128(r)
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }
    fn to_fraction(&self, a: &u64) -> (BigInt, BigInt) {
        let v = if *a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            *a as i64
        };
        (BigInt::from(v), BigInt::one())
    }
    fn descriptor(&self) -> String {
        format!("fp:{}", self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Arbitrary-precision rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

/// Random rational coefficients are drawn from the nonzero integers in
/// `[-RATIONAL_SUPPORT, RATIONAL_SUPPORT]`.
pub const RATIONAL_SUPPORT: i64 = 100;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let v = rng.gen_range(1..=RATIONAL_SUPPORT);
        let v = if rng.gen::<bool>() { v } else { -v };
        self.from_i64(v)
    }
    fn to_fraction(&self, a: &BigRational) -> (BigInt, BigInt) {
        (a.numer().clone(), a.denom().clone())
    }
    fn descriptor(&self) -> String {
        "q".to_string()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

/// Reduce a rational modulo p. `None` when p divides the denominator.
pub fn rational_mod_p(field: &PrimeField, q: &BigRational) -> Option<u64> {
    let d = field.from_bigint(q.denom());
    if d == 0 {
        return None;
    }
    Some(field.div(&field.from_bigint(q.numer()), &d))
}

/// A parsed `--field` flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad prime `{p}`")))?;
            PrimeField::new(p)?;
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::InvalidField(format!("expected fp:<p> or q, got `{s}`")))
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
            FieldSpec::Rational => write!(f, "q"),
        }
    }
}
