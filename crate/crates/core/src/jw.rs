//! Quantum integers and binomials, their delta = 0 values, and Jones-Wenzl projectors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::coeff::{ParamContext, Ring};
use crate::diagram::diagram_table;
use crate::error::{Error, Result};
use crate::linalg::{solve, RingMatrix};
use crate::tlalg::{multiply, TLElement};

/// Integer Laurent polynomial in `q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term(e + f, c * d);
            }
        }
        out
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Rewrite a bar-symmetric polynomial in `delta = q + q^{-1}`.
    pub fn to_delta(&self) -> Result<DeltaPoly> {
        let mut rest = self.clone();
        let mut out = DeltaPoly::zero();
        while let Some((&k, c)) = rest.terms.iter().next_back() {
            let c = c.clone();
            if k < 0 {
                break;
            }
            if k == 0 {
                out = out.add(&DeltaPoly::constant(c.clone()));
                rest.add_term(0, -c);
                continue;
            }
            // q^k + q^{-k} = P_k(delta)
            out = out.add(&chebyshev(k as usize).scale(&c));
            rest.add_term(k, -c.clone());
            rest.add_term(-k, -c);
        }
        if !rest.is_zero() {
            return Err(Error::InvariantViolation(format!("{self} is not a polynomial in delta")));
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                e => format!("{c}*q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `P_0 = 2, P_1 = delta, P_{k+1} = delta P_k - P_{k-1}`.
fn chebyshev(k: usize) -> DeltaPoly {
    let mut prev = DeltaPoly::constant(BigInt::from(2));
    let mut cur = DeltaPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()]);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = cur.mul_delta().add(&prev.scale(&BigInt::from(-1)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Integer polynomial in `delta`, coefficients from degree 0 up.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DeltaPoly {
    coeffs: Vec<BigInt>,
}

impl DeltaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DeltaPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_default();
        Self::from_coeffs((0..len).map(|i| get(&self.coeffs, i) + get(&other.coeffs, i)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::from_coeffs(out)
    }

    fn mul_delta(&self) -> Self {
        let mut c = vec![BigInt::zero()];
        c.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(c)
    }

    pub fn eval_int(&self, delta: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * delta + c)
    }

    pub fn eval<R: Ring>(&self, ring: &R, delta: &R::Elem) -> R::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, delta), &ring.from_bigint(c)))
    }

    pub fn to_json(&self) -> Value {
        let c: Vec<Value> = self
            .coeffs
            .iter()
            .map(|x| i64::try_from(x).map(|v| json!(v)).unwrap_or_else(|_| json!(x.to_string())))
            .collect();
        json!(c)
    }
}

/// `c0 + c1*d + c2*d^2 + ...`, zero coefficients omitted.
impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*d"),
                i => format!("{c}*d^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[n] = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}`.
pub fn quantum_integer(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for k in 0..n {
        p.add_term(n as i64 - 1 - 2 * k as i64, BigInt::one());
    }
    p
}

/// Row `n` of the quantum Pascal triangle via `[n r] = q^{n-r}[n-1 r-1] + q^{-r}[n-1 r]`.
pub fn quantum_binomial_row(n: usize) -> Vec<LaurentPoly> {
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for r in 0..=m {
            let left = if r >= 1 { row[r - 1].shift((m - r) as i64) } else { LaurentPoly::zero() };
            let right = if r < m { row[r].shift(-(r as i64)) } else { LaurentPoly::zero() };
            next.push(left.add(&right));
        }
        row = next;
    }
    row
}

pub fn quantum_binomial_laurent(n: usize, r: usize) -> Result<LaurentPoly> {
    if r > n {
        return Err(Error::BadRange(format!("r = {r} > n = {n}")));
    }
    Ok(quantum_binomial_row(n).swap_remove(r))
}

/// `[n r]` as a polynomial in `delta`.
pub fn quantum_binomial(n: usize, r: usize) -> Result<DeltaPoly> {
    quantum_binomial_laurent(n, r)?.to_delta()
}

/// Closed form of `[n r]` at `delta = 0`.
pub fn qbc_delta_zero(n: usize, r: usize) -> Result<BigInt> {
    if r > n {
        return Err(Error::BadRange(format!("r = {r} > n = {n}")));
    }
    let sign = |e: usize| if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Ok(match (n % 2, r % 2) {
        (0, 1) => BigInt::zero(),
        (0, 0) => binomial(BigInt::from(n / 2), BigInt::from(r / 2)),
        (1, 0) => {
            let (a, t) = (n / 2, r / 2);
            sign(t) * binomial(BigInt::from(a), BigInt::from(t))
        }
        _ => {
            let (a, t) = (n / 2, r / 2);
            sign(a - t) * binomial(BigInt::from(a), BigInt::from(t))
        }
    })
}

/// Whether every `[n r]`, `0 <= r <= n`, is nonzero at `delta = a`.
pub fn jw_exists<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Result<bool> {
    if !ctx.ring.is_field() {
        return Err(Error::NotAField);
    }
    for r in 0..=n {
        let p = quantum_binomial(n, r)?;
        if ctx.ring.is_zero(&p.eval(&ctx.ring, &ctx.a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solve `U_i (1 + sum c_d d) = 0` over non-identity diagrams `d`.
pub fn compute_jw<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Result<Option<TLElement<R>>> {
    let ring = &ctx.ring;
    let t = diagram_table(n);
    let c = t.len();
    let apow: Vec<R::Elem> = (0..=n).map(|k| ctx.a_pow(k)).collect();
    let unknowns: Vec<usize> = (0..c).filter(|&d| d != t.identity).collect();
    let rows = n.saturating_sub(1) * c;
    let mut triples = Vec::new();
    let mut rhs = vec![ring.zero(); rows];
    for i in 1..n {
        let g = t.generator(i);
        let base = (i - 1) * c;
        for (col, &d) in unknowns.iter().enumerate() {
            let (k, loops) = t.mul(g, d);
            triples.push((base + k, col, apow[loops].clone()));
        }
        rhs[base + g] = ring.neg(&ring.one());
    }
    let m = RingMatrix::from_triples(ring.clone(), rows, unknowns.len(), triples);
    let Some(x) = solve(&m, &rhs) else { return Ok(None) };
    let mut coords = vec![ring.zero(); c];
    coords[t.identity] = ring.one();
    for (col, &d) in unknowns.iter().enumerate() {
        coords[d] = x[col].clone();
    }
    let e = TLElement::from_indexed(ring, n, &coords);
    if !check_jw(ctx, &e)? || multiply(ctx, &e, &e)? != e {
        return Err(Error::InvariantViolation("solution is not a two-sided idempotent projector".into()));
    }
    Ok(Some(e))
}

/// `e` lies in `1 + I_n` and `U_i e = e U_i = 0` for all `i`.
pub fn check_jw<R: Ring>(ctx: &ParamContext<R>, e: &TLElement<R>) -> Result<bool> {
    let ring = &ctx.ring;
    let n = e.n;
    if !ring.is_one(&crate::tlalg::constant_term(ring, e)) {
        return Ok(false);
    }
    for i in 1..n {
        let u = TLElement::generator(ring, n, i)?;
        if !multiply(ctx, &u, e)?.is_zero() || !multiply(ctx, e, &u)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x` as an `i64` when it fits.
pub fn small(x: &BigInt) -> Option<i64> {
    i64::try_from(x).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Integers, PrimeField, Rationals};

    #[test]
    fn integers() {
        assert_eq!(quantum_integer(1), LaurentPoly::one());
        assert_eq!(quantum_integer(2), LaurentPoly::monomial(1, 1).add(&LaurentPoly::monomial(1, -1)));
        assert_eq!(quantum_integer(3).at_one(), BigInt::from(3));
        assert!(quantum_integer(0).is_zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(quantum_binomial(3, 1).unwrap(), DeltaPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(quantum_binomial(4, 1).unwrap(), DeltaPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(quantum_binomial(4, 2).unwrap(), DeltaPoly::from_i64(&[2, 0, -3, 0, 1]));
        assert_eq!(quantum_binomial(7, 0).unwrap(), DeltaPoly::from_i64(&[1]));
        assert_eq!(quantum_binomial(3, 1).unwrap().to_string(), "-1 + 1*d^2");
        assert!(quantum_binomial(2, 3).is_err());
    }

    #[test]
    fn delta_zero() {
        let row: Vec<i64> = (0..=4).map(|r| small(&qbc_delta_zero(4, r).unwrap()).unwrap()).collect();
        assert_eq!(row, [1, 0, 2, 0, 1]);
        assert_eq!(qbc_delta_zero(5, 2).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn existence() {
        let f2 = ParamContext::with_v(PrimeField::new(2).unwrap(), 1).unwrap();
        assert!(jw_exists(&f2, 3).unwrap());
        assert!(!jw_exists(&f2, 4).unwrap());
        let q = ParamContext::with_v(Rationals, 1).unwrap();
        assert!(jw_exists(&q, 2).unwrap());
        assert_eq!(jw_exists(&ParamContext::with_v(Integers, 1).unwrap(), 2), Err(Error::NotAField));
    }

    #[test]
    fn projectors() {
        let q = ParamContext::with_a(Rationals, 2);
        let jw = compute_jw(&q, 2).unwrap().unwrap();
        assert_eq!(jw.render(&Rationals), "1*1 + -1/2*(U1)");
        assert!(check_jw(&q, &jw).unwrap());
        assert!(!check_jw(&q, &TLElement::identity(&Rationals, 2)).unwrap());
        assert_eq!(compute_jw(&q, 1).unwrap().unwrap(), TLElement::identity(&Rationals, 1));
        let f2 = ParamContext::with_a(PrimeField::new(2).unwrap(), 0);
        assert!(compute_jw(&f2, 2).unwrap().is_none());
    }
}
