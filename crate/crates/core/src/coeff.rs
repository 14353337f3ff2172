//! Exact coefficient rings and the parameters a, v, q, lambda, mu.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which coefficient ring is in use. Tags render as `Z`, `Q`, `Fp:<p>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|_| RingSpec::PrimeField(p))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Z" => Ok(RingSpec::Integers),
            "Q" => Ok(RingSpec::Rationals),
            t => {
                let p = t
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown ring tag {t:?}")))?;
                RingSpec::prime_field(p)
            }
        }
    }
}

impl From<RingSpec> for String {
    fn from(s: RingSpec) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for RingSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A commutative Euclidean coefficient ring, passed around as a value.
///
/// Fields report every nonzero element as a unit and have zero remainders.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn spec(&self) -> RingSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn is_field(&self) -> bool;
    /// `x = q*y + r` with `r` zero or smaller than `y`. `y` must be nonzero.
    fn div_rem(&self, x: &Self::Elem, y: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Euclidean size comparison of two nonzero elements.
    fn smaller(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
    /// A unit `u` such that `u*x` is the chosen associate of `x`.
    fn normal_unit(&self, x: &Self::Elem) -> Self::Elem;
    /// Integer used when reporting `x` as an invariant factor.
    fn to_invariant(&self, x: &Self::Elem) -> BigInt;
    fn fmt_elem(&self, x: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn is_unit(&self, x: &Self::Elem) -> bool {
        self.inv(x).is_some()
    }

    fn div_exact(&self, x: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(y) {
            return self.is_zero(x).then(|| self.zero());
        }
        let (q, r) = self.div_rem(x, y);
        self.is_zero(&r).then_some(q)
    }

    fn pow(&self, x: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `acc += x*y`
    fn mul_add(&self, acc: &mut Self::Elem, x: &Self::Elem, y: &Self::Elem) {
        *acc = self.add(acc, &self.mul(x, y));
    }

    fn sign(&self, negative: bool) -> Self::Elem {
        if negative {
            self.neg(&self.one())
        } else {
            self.one()
        }
    }
}

/// The integers, backed by `BigInt`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn spec(&self) -> RingSpec {
        RingSpec::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn sub(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x - y
    }
    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn inv(&self, x: &BigInt) -> Option<BigInt> {
        (x.abs().is_one()).then(|| x.clone())
    }
    fn is_field(&self) -> bool {
        false
    }
    fn div_rem(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        x.div_mod_floor(y)
    }
    fn smaller(&self, x: &BigInt, y: &BigInt) -> bool {
        x.abs() < y.abs()
    }
    fn normal_unit(&self, x: &BigInt) -> BigInt {
        if x.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn to_invariant(&self, x: &BigInt) -> BigInt {
        x.abs()
    }
    fn fmt_elem(&self, x: &BigInt) -> String {
        x.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
    fn mul_add(&self, acc: &mut BigInt, x: &BigInt, y: &BigInt) {
        *acc += x * y;
    }
}

/// The rationals, stored in lowest terms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> RingSpec {
        RingSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }
    fn sub(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x - y
    }
    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }
    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }
    fn inv(&self, x: &BigRational) -> Option<BigRational> {
        (!x.is_zero()).then(|| x.recip())
    }
    fn is_field(&self) -> bool {
        true
    }
    fn div_rem(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        (x / y, BigRational::zero())
    }
    fn smaller(&self, _: &BigRational, _: &BigRational) -> bool {
        false
    }
    fn normal_unit(&self, x: &BigRational) -> BigRational {
        x.recip()
    }
    fn to_invariant(&self, x: &BigRational) -> BigInt {
        BigInt::from(!x.is_zero() as u8)
    }
    fn fmt_elem(&self, x: &BigRational) -> String {
        x.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// Residues modulo a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
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

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::UnsupportedRing(format!("modulus {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        (x + y) % self.p
    }
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        (x + self.p - y) % self.p
    }
    fn neg(&self, x: &u64) -> u64 {
        (self.p - x) % self.p
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        x * y % self.p
    }
    fn inv(&self, x: &u64) -> Option<u64> {
        if *x == 0 {
            return None;
        }
        // Fermat: x^(p-2)
        let (mut base, mut e, mut acc) = (*x, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        Some(acc)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn div_rem(&self, x: &u64, y: &u64) -> (u64, u64) {
        (self.mul(x, &self.inv(y).expect("division by zero")), 0)
    }
    fn smaller(&self, _: &u64, _: &u64) -> bool {
        false
    }
    fn normal_unit(&self, x: &u64) -> u64 {
        self.inv(x).unwrap_or(1)
    }
    fn to_invariant(&self, x: &u64) -> BigInt {
        BigInt::from((*x != 0) as u8)
    }
    fn fmt_elem(&self, x: &u64) -> String {
        x.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let n: BigInt = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
        Ok(self.from_bigint(&n))
    }
    fn mul_add(&self, acc: &mut u64, x: &u64, y: &u64) {
        *acc = (*acc + x * y) % self.p;
    }
}

/// Run `$body` with `$r` bound to the concrete ring named by a [`RingSpec`].
/// The enclosing function must return a `Result` whose error converts from [`Error`].
#[macro_export]
macro_rules! with_ring {
    ($spec:expr, $r:ident => $body:expr) => {
        match $spec {
            $crate::RingSpec::Integers => {
                let $r = $crate::Integers;
                $body
            }
            $crate::RingSpec::Rationals => {
                let $r = $crate::Rationals;
                $body
            }
            $crate::RingSpec::PrimeField(p) => {
                let $r = $crate::PrimeField::new(p)?;
                $body
            }
        }
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Theta {
    #[default]
    Theta1,
    Theta2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param<E> {
    DirectA(E),
    FromUnit(E),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Annihilator {
    Zero,
    WholeRing,
}

/// Ring plus the loop value `a`, optionally with `v`, `q = v^2` and `(lambda, mu)`.
#[derive(Debug, Clone)]
pub struct ParamContext<R: Ring> {
    pub ring: R,
    pub a: R::Elem,
    pub v: Option<R::Elem>,
    pub q: Option<R::Elem>,
    pub lambda: Option<R::Elem>,
    pub mu: Option<R::Elem>,
    pub theta: Theta,
}

pub fn make_context<R: Ring>(
    ring: R,
    param: Param<R::Elem>,
    theta: Theta,
) -> Result<ParamContext<R>> {
    match param {
        Param::DirectA(a) => Ok(ParamContext {
            ring,
            a,
            v: None,
            q: None,
            lambda: None,
            mu: None,
            theta,
        }),
        Param::FromUnit(v) => {
            let vinv = ring
                .inv(&v)
                .ok_or_else(|| Error::NonUnit(ring.fmt_elem(&v)))?;
            let a = ring.add(&v, &vinv);
            let q = ring.mul(&v, &v);
            let (lambda, mu) = match theta {
                Theta::Theta1 => (ring.neg(&ring.one()), v.clone()),
                Theta::Theta2 => (q.clone(), ring.neg(&v)),
            };
            Ok(ParamContext {
                ring,
                a,
                v: Some(v),
                q: Some(q),
                lambda: Some(lambda),
                mu: Some(mu),
                theta,
            })
        }
    }
}

pub fn annihilator_of_a<R: Ring>(ctx: &ParamContext<R>) -> Annihilator {
    if ctx.ring.is_zero(&ctx.a) {
        Annihilator::WholeRing
    } else {
        Annihilator::Zero
    }
}

impl<R: Ring> ParamContext<R> {
    /// Context with `a` given directly.
    pub fn with_a(ring: R, a: i64) -> Self {
        let a = ring.from_i64(a);
        make_context(ring, Param::DirectA(a), Theta::Theta1).expect("direct a never fails")
    }

    /// Context from a unit `v` under Theta1.
    pub fn with_v(ring: R, v: i64) -> Result<Self> {
        let v = ring.from_i64(v);
        make_context(ring, Param::FromUnit(v), Theta::Theta1)
    }

    pub fn lambda(&self) -> Result<&R::Elem> {
        self.lambda.as_ref().ok_or(Error::MissingUnit)
    }

    pub fn mu(&self) -> Result<&R::Elem> {
        self.mu.as_ref().ok_or(Error::MissingUnit)
    }

    pub fn lambda_inv(&self) -> Result<R::Elem> {
        Ok(self.ring.inv(self.lambda()?).expect("lambda is a unit"))
    }

    pub fn mu_inv(&self) -> Result<R::Elem> {
        Ok(self.ring.inv(self.mu()?).expect("mu is a unit"))
    }

    pub fn a_pow(&self, k: usize) -> R::Elem {
        self.ring.pow(&self.a, k as u32)
    }

    pub fn describe(&self) -> String {
        let r = &self.ring;
        match &self.v {
            Some(v) => format!("{} v={} a={}", r.spec(), r.fmt_elem(v), r.fmt_elem(&self.a)),
            None => format!("{} a={}", r.spec(), r.fmt_elem(&self.a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f5_from_v2() {
        let ctx = ParamContext::with_v(PrimeField::new(5).unwrap(), 2).unwrap();
        assert_eq!(ctx.a, 0);
        assert_eq!(ctx.q, Some(4));
        assert_eq!(ctx.lambda, Some(4));
        assert_eq!(ctx.mu, Some(2));
    }

    #[test]
    fn z_from_v1() {
        let ctx = ParamContext::with_v(Integers, 1).unwrap();
        assert_eq!(ctx.a, BigInt::from(2));
        assert_eq!(ctx.lambda, Some(BigInt::from(-1)));
        assert_eq!(ctx.mu, Some(BigInt::from(1)));
    }

    #[test]
    fn direct_a_has_no_v() {
        let ctx = ParamContext::with_a(Rationals, 3);
        assert_eq!(ctx.a, Rationals.from_i64(3));
        assert!(ctx.v.is_none());
        assert_eq!(ctx.lambda(), Err(Error::MissingUnit));
    }

    #[test]
    fn non_unit_and_bad_prime() {
        assert!(matches!(ParamContext::with_v(Integers, 2), Err(Error::NonUnit(_))));
        assert_eq!(PrimeField::new(6), Err(Error::BadPrime(6)));
        assert!("Fp:9".parse::<RingSpec>().is_err());
    }

    #[test]
    fn annihilator() {
        assert_eq!(annihilator_of_a(&ParamContext::with_a(Integers, 2)), Annihilator::Zero);
        let f2 = ParamContext::with_v(PrimeField::new(2).unwrap(), 1).unwrap();
        assert_eq!(annihilator_of_a(&f2), Annihilator::WholeRing);
        assert_eq!(annihilator_of_a(&ParamContext::with_a(Rationals, 0)), Annihilator::WholeRing);
    }

    #[test]
    fn tags_round_trip() {
        for t in ["Z", "Q", "Fp:5", "Fp:2"] {
            assert_eq!(t.parse::<RingSpec>().unwrap().to_string(), t);
        }
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(Rationals.parse_elem("-1/2").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(PrimeField::new(5).unwrap().parse_elem("-1").unwrap(), 4);
    }
}
