//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every matrix in this crate is generic over a [`Field`], a lightweight
//! descriptor that knows how to combine elements. The descriptor style (rather
//! than `num_traits::Zero`/`One` bounds on the element type) is forced by the
//! prime fields: the modulus is a runtime value, so elements alone cannot
//! produce their own constants.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Runtime description of a base field, as it appears in instance files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers, characteristic 0.
    Rationals,
    /// The prime field with `p` elements.
    PrimeField(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::PrimeField(p) => write!(f, "prime-field {p}"),
        }
    }
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

/// An exact field of scalars.
///
/// Implementations must keep elements in a canonical form so that structural
/// equality of elements is equality in the field: reduced fractions with
/// positive denominator for the rationals, residues in `[0, p)` for prime
/// fields.
pub trait Field: Clone + Eq + fmt::Debug {
    type Elem: Clone + Eq + fmt::Debug;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;

    /// Parse the canonical text form: an integer `n` or a fraction `n/d`.
    /// Prime fields interpret `n/d` as `n * d^{-1}`.
    fn parse(&self, text: &str) -> Result<Self::Elem, Error>;

    /// Canonical text form, inverse to [`Field::parse`].
    fn render(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `true` when the given small integer is invertible in the field.
    fn int_invertible(&self, n: i64) -> bool {
        !self.is_zero(&self.from_int(n))
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
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

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(&self, text: &str) -> Result<BigRational, Error> {
        let bad = || Error::BadScalar {
            text: text.to_string(),
            field: self.spec(),
        };
        match text.split_once('/') {
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => {
                let n = BigInt::from_str(text.trim()).map_err(|_| bad())?;
                Ok(BigRational::from_integer(n))
            }
        }
    }

    fn render(&self, a: &BigRational) -> String {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// The prime field `F_p` with a runtime modulus. Elements are residues in
/// `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        // Products are computed in u128, so any prime below 2^63 is safe.
        if p >= (1 << 63) {
            return Err(Error::Invalid(format!("modulus {p} too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// a^e mod p by square-and-multiply.
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of `a`, or `None` for zero.
    pub fn order(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let mut k = 1u64;
        let mut acc = a;
        while acc != 1 {
            acc = self.mul(&acc, &a);
            k += 1;
        }
        Some(k)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
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
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }

    fn from_int(&self, n: i64) -> u64 {
        let p = self.p as i128;
        let r = (n as i128).rem_euclid(p);
        r as u64
    }

    fn parse(&self, text: &str) -> Result<u64, Error> {
        let bad = || Error::BadScalar {
            text: text.to_string(),
            field: self.spec(),
        };
        let parse_int = |s: &str| -> Result<u64, Error> {
            let n = i128::from_str(s.trim()).map_err(|_| bad())?;
            Ok(n.rem_euclid(self.p as i128) as u64)
        };
        match text.split_once('/') {
            Some((num, den)) => {
                let n = parse_int(num)?;
                let d = parse_int(den)?;
                self.div(&n, &d).ok_or_else(bad)
            }
            None => parse_int(text),
        }
    }

    fn render(&self, a: &u64) -> String {
        format!("{}", a % self.p)
    }
}
