//! Exact scalar fields.
//!
//! Everything in the crate is generic over [`Field`]. Two implementations are
//! provided: [`Q`] (arbitrary precision rationals) and [`Fp`] (a prime field
//! fixed at compile time).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact field. Arithmetic never rounds and equality is decidable.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Parse `"n"` or `"n/d"` with integer `n`, `d`.
    fn parse(s: &str) -> Result<Self, Error>;
    /// Short name used in reports, e.g. `"Q"` or `"F7"`.
    fn name() -> String;
    /// Characteristic (0 for the rationals).
    fn characteristic() -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.add(&a.mul(b));
    }

    fn add_assign(&mut self, a: &Self) {
        if !a.is_zero() {
            *self = self.add(a);
        }
    }

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }
}

fn split_fraction(s: &str) -> Result<(BigInt, BigInt), Error> {
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let parse = |x: &str| {
        if x.is_empty() || x.contains('.') || x.contains('e') || x.contains('E') {
            return Err(Error::Schema { field: "scalar".into(), message: format!("not an exact integer or fraction: {s:?}") });
        }
        BigInt::from_str(x).map_err(|_| Error::Schema { field: "scalar".into(), message: format!("not an exact integer or fraction: {s:?}") })
    };
    let n = parse(n)?;
    let d = parse(d)?;
    if d.is_zero() {
        return Err(Error::Schema { field: "scalar".into(), message: format!("zero denominator in {s:?}") });
    }
    Ok((n, d))
}

/// Arbitrary precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q(pub BigRational);

impl Q {
    pub fn new(n: i64, d: i64) -> Self {
        Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }
}

impl Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Q {
    fn zero() -> Self {
        Q(BigRational::zero())
    }
    fn one() -> Self {
        Q(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        Q(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Q(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Q(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Q(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        self.0 += &a.0 * &b.0;
    }
    fn add_assign(&mut self, a: &Self) {
        if !a.0.is_zero() {
            self.0 += &a.0;
        }
    }
    fn parse(s: &str) -> Result<Self, Error> {
        let (n, d) = split_fraction(s)?;
        Ok(Q(BigRational::new(n, d)))
    }
    fn name() -> String {
        "Q".into()
    }
    fn characteristic() -> u64 {
        0
    }
}

/// The prime field `Z/PZ`. `P` must be prime and below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * base as u128) % P as u128) as u64;
            }
            base = ((base as u128 * base as u128) % P as u128) as u64;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
    fn parse(s: &str) -> Result<Self, Error> {
        let (n, d) = split_fraction(s)?;
        let p = BigInt::from(P);
        let red = |x: &BigInt| {
            let r = ((x % &p) + &p) % &p;
            Fp::<P>(r.to_u64().expect("reduced residue fits"))
        };
        let d = red(&d);
        let inv = d.inv().ok_or_else(|| Error::Schema {
            field: "scalar".into(),
            message: format!("denominator of {s:?} vanishes mod {P}"),
        })?;
        Ok(red(&n).mul(&inv))
    }
    fn name() -> String {
        format!("F{P}")
    }
    fn characteristic() -> u64 {
        P
    }
}

/// Primes accepted for `{"prime": p}` field modes and `HGX_FIELD`.
pub const SUPPORTED_PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13, 101, 65521, 2147483647];

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;
pub type F101 = Fp<101>;
pub type F65521 = Fp<65521>;
pub type F2147483647 = Fp<2147483647>;

/// Convert an integer rational to a field element; fails if the denominator
/// vanishes in the target field.
pub fn from_q<F: Field>(q: &Q) -> Result<F, Error> {
    F::parse(&q.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let a = Q::parse("-1/2").unwrap();
        let b = Q::parse("3").unwrap();
        assert_eq!(a.mul(&b), Q::new(-3, 2));
        assert_eq!(a.inv().unwrap(), Q::from_i64(-2));
        assert_eq!(Q::parse("4/6").unwrap().to_string(), "2/3");
        assert!(Q::parse("1/0").is_err());
        assert!(Q::parse("0.5").is_err());
        assert!(Q::zero().inv().is_none());
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::parse("3").unwrap();
        assert_eq!(a.inv().unwrap(), F7::new(5));
        assert_eq!(F7::parse("1/2").unwrap(), F7::new(4));
        assert_eq!(F7::parse("-1").unwrap(), F7::new(6));
        assert!(F7::parse("1/7").is_err());
        let big = Fp::<2147483647>::new(-1);
        assert_eq!(big.mul(&big), Fp::one());
    }
}
