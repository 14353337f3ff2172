//! Elements of TL_n(a), s-elements and the Jacobsthal element.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::coeff::{ParamContext, Ring};
use crate::diagram::{
    diagram_table, diagram_to_jones_word, enumerate_jacobsthal_sequences, generator_diagram,
    identity_diagram, JonesWord, PlanarDiagram, Subscript,
};
use crate::error::{Error, Result};

/// A monomial `U_{i1} ... U_{ik}`; empty means the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    pub n: usize,
    pub letters: Vec<usize>,
}

impl FreeWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&i) = letters.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(FreeWord { n, letters })
    }

    /// Parses `1` or whitespace-separated `U<k>` tokens; parentheses are ignored.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let cleaned = text.replace(['(', ')'], " ");
        let tokens: Vec<&str> = cleaned.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(FreeWord { n, letters: vec![] });
        }
        if tokens.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        let letters = tokens
            .iter()
            .map(|t| {
                t.strip_prefix('U')
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad token {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FreeWord::new(n, letters)
    }

    pub fn index(&self) -> Subscript {
        self.letters
            .iter()
            .min()
            .map_or(Subscript::Infinite, |&i| Subscript::Finite(i))
    }

    pub fn terminus(&self) -> Subscript {
        self.letters
            .last()
            .map_or(Subscript::Infinite, |&i| Subscript::Finite(i))
    }
}

impl From<&JonesWord> for FreeWord {
    fn from(w: &JonesWord) -> Self {
        FreeWord { n: w.n(), letters: w.letters() }
    }
}

/// `w = a^k x` where `x` is the returned Jones word.
pub fn jones_normal_form(w: &FreeWord) -> Result<(usize, JonesWord)> {
    let mut d = identity_diagram(w.n);
    let mut loops = 0;
    for &i in &w.letters {
        let (next, l) = crate::diagram::compose(&d, &generator_diagram(w.n, i)?)?;
        d = next;
        loops += l;
    }
    Ok((loops, diagram_to_jones_word(&d)))
}

/// A finite sum of diagrams with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement<R: Ring> {
    pub n: usize,
    terms: BTreeMap<PlanarDiagram, R::Elem>,
}

impl<R: Ring> TLElement<R> {
    pub fn zero(n: usize) -> Self {
        TLElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        Self::monomial(ring, identity_diagram(n), ring.one())
    }

    pub fn monomial(ring: &R, d: PlanarDiagram, c: R::Elem) -> Self {
        let mut x = Self::zero(d.n());
        x.add_term(ring, d, c);
        x
    }

    pub fn generator(ring: &R, n: usize, i: usize) -> Result<Self> {
        Ok(Self::monomial(ring, generator_diagram(n, i)?, ring.one()))
    }

    pub fn add_term(&mut self, ring: &R, d: PlanarDiagram, c: R::Elem) {
        debug_assert_eq!(d.n(), self.n);
        if ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(old) => {
                *old = ring.add(old, &c);
                if ring.is_zero(old) {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &R::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, ring: &R, d: &PlanarDiagram) -> R::Elem {
        self.terms.get(d).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(ring, d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.scale(ring, &ring.neg(&ring.one())))
    }

    pub fn scale(&self, ring: &R, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.n);
        for (d, x) in &self.terms {
            out.add_term(ring, d.clone(), ring.mul(c, x));
        }
        out
    }

    /// The image under sigma: TL_n -> TL_{n+1}, U_i -> U_{i+1}.
    pub fn shift_up(&self) -> Self {
        TLElement {
            n: self.n + 1,
            terms: self.terms.iter().map(|(d, c)| (d.shift_up(), c.clone())).collect(),
        }
    }

    /// Terms as (diagram-table index, coefficient).
    pub fn indexed(&self) -> Vec<(usize, R::Elem)> {
        let t = diagram_table(self.n);
        self.terms.iter().map(|(d, c)| (t.index_of(d), c.clone())).collect()
    }

    pub fn from_indexed(ring: &R, n: usize, coords: &[R::Elem]) -> Self {
        let t = diagram_table(n);
        let mut out = Self::zero(n);
        for (i, c) in coords.iter().enumerate() {
            out.add_term(ring, t.diagrams[i].clone(), c.clone());
        }
        out
    }

    /// `c1*w1 + c2*w2 + ...` in basis order; `0` for the zero element.
    pub fn render(&self, ring: &R) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<(JonesWord, String)> = self
            .terms
            .iter()
            .map(|(d, c)| (diagram_to_jones_word(d), ring.fmt_elem(c)))
            .collect();
        parts.sort_by(|x, y| x.0.cmp(&y.0));
        parts
            .iter()
            .map(|(w, c)| format!("{c}*{w}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self, ring: &R) -> Value {
        let mut parts: Vec<(JonesWord, &PlanarDiagram, &R::Elem)> = self
            .terms
            .iter()
            .map(|(d, c)| (diagram_to_jones_word(d), d, c))
            .collect();
        parts.sort_by(|x, y| x.0.cmp(&y.0));
        Value::Array(
            parts
                .into_iter()
                .map(|(w, d, c)| json!([ring.fmt_elem(c), d, w.to_string()]))
                .collect(),
        )
    }
}

pub struct Rendered<'a, R: Ring>(pub &'a TLElement<R>, pub &'a R);

impl<R: Ring> fmt::Display for Rendered<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}

pub fn from_word<R: Ring>(ctx: &ParamContext<R>, w: &FreeWord) -> Result<TLElement<R>> {
    let (k, jw) = jones_normal_form(w)?;
    let d = crate::diagram::jones_word_to_diagram(&jw)?;
    Ok(TLElement::monomial(&ctx.ring, d, ctx.a_pow(k)))
}

pub fn multiply<R: Ring>(
    ctx: &ParamContext<R>,
    x: &TLElement<R>,
    y: &TLElement<R>,
) -> Result<TLElement<R>> {
    if x.n != y.n {
        return Err(Error::SizeMismatch(format!("multiply {} by {}", x.n, y.n)));
    }
    let ring = &ctx.ring;
    let t = diagram_table(x.n);
    let apow: Vec<R::Elem> = (0..=x.n).map(|k| ctx.a_pow(k)).collect();
    let mut acc = vec![ring.zero(); t.len()];
    let ys = y.indexed();
    for (i, c) in x.indexed() {
        for (j, c2) in &ys {
            let (k, loops) = t.mul(i, *j);
            let coeff = ring.mul(&c, c2);
            ring.mul_add(&mut acc[k], &coeff, &apow[loops]);
        }
    }
    Ok(TLElement::from_indexed(ring, x.n, &acc))
}

/// Product of a list of factors, left to right.
pub fn product<R: Ring>(ctx: &ParamContext<R>, n: usize, xs: &[TLElement<R>]) -> Result<TLElement<R>> {
    let mut acc = TLElement::identity(&ctx.ring, n);
    for x in xs {
        acc = multiply(ctx, &acc, x)?;
    }
    Ok(acc)
}

pub fn constant_term<R: Ring>(ring: &R, x: &TLElement<R>) -> R::Elem {
    x.coefficient(ring, &identity_diagram(x.n))
}

/// `s_i = lambda + mu U_i`
pub fn s_element<R: Ring>(ctx: &ParamContext<R>, n: usize, i: usize) -> Result<TLElement<R>> {
    let ring = &ctx.ring;
    let mut x = TLElement::monomial(ring, generator_diagram(n, i)?, ctx.mu()?.clone());
    x.add_term(ring, identity_diagram(n), ctx.lambda()?.clone());
    Ok(x)
}

/// `s_i^{-1} = lambda^{-1} + mu^{-1} U_i`
pub fn s_inverse<R: Ring>(ctx: &ParamContext<R>, n: usize, i: usize) -> Result<TLElement<R>> {
    let ring = &ctx.ring;
    let mut x = TLElement::monomial(ring, generator_diagram(n, i)?, ctx.mu_inv()?);
    x.add_term(ring, identity_diagram(n), ctx.lambda_inv()?);
    Ok(x)
}

/// `s_hi s_{hi-1} ... s_lo`; the identity when `hi < lo`.
pub fn s_product<R: Ring>(ctx: &ParamContext<R>, n: usize, hi: usize, lo: usize) -> Result<TLElement<R>> {
    ctx.lambda()?;
    if hi < lo {
        return Ok(TLElement::identity(&ctx.ring, n));
    }
    let factors = (lo..=hi).rev().map(|i| s_element(ctx, n, i)).collect::<Result<Vec<_>>>()?;
    product(ctx, n, &factors)
}

/// `s_lo s_{lo+1} ... s_hi`; the identity when `hi < lo`.
pub fn s_rising<R: Ring>(ctx: &ParamContext<R>, n: usize, lo: usize, hi: usize) -> Result<TLElement<R>> {
    ctx.lambda()?;
    if hi < lo {
        return Ok(TLElement::identity(&ctx.ring, n));
    }
    let factors = (lo..=hi).map(|i| s_element(ctx, n, i)).collect::<Result<Vec<_>>>()?;
    product(ctx, n, &factors)
}

fn jacobsthal_sum<R: Ring>(
    ctx: &ParamContext<R>,
    n: usize,
    negative: impl Fn(usize) -> bool,
) -> Result<TLElement<R>> {
    let ring = &ctx.ring;
    let ratio = ring.mul(ctx.mu()?, &ctx.lambda_inv()?);
    let mut out = TLElement::zero(n);
    for seq in enumerate_jacobsthal_sequences(n) {
        let r = seq.len();
        let c = ring.mul(&ring.sign(negative(r)), &ring.pow(&ratio, r as u32));
        let mono = from_word(ctx, &FreeWord::new(n, seq)?)?;
        out = out.add(ring, &mono.scale(ring, &c));
    }
    Ok(out)
}

/// `J_n = (-1)^{n+1} sum (mu/lambda)^r U_{a_1} ... U_{a_r}` over the Jacobsthal sequences.
///
/// This is exactly the top differential of W(n). It differs from
/// [`jacobsthal_element_printed`] by `(-1)^r` on each monomial.
pub fn jacobsthal_element<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Result<TLElement<R>> {
    jacobsthal_sum(ctx, n, |_| n % 2 == 0)
}

/// `sum (-1)^{(r-1)+n} (mu/lambda)^r U_{a_1} ... U_{a_r}`; the empty sequence gives `+1`.
pub fn jacobsthal_element_printed<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Result<TLElement<R>> {
    jacobsthal_sum(ctx, n, |r| (r + n + 1) % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Integers, PrimeField, Rationals, Theta};
    use num_bigint::BigInt;

    fn z(a: i64) -> ParamContext<Integers> {
        ParamContext::with_a(Integers, a)
    }

    fn word(n: usize, s: &str) -> FreeWord {
        FreeWord::parse(n, s).unwrap()
    }

    #[test]
    fn products_of_words() {
        let ctx = z(2);
        let x = from_word(&ctx, &word(2, "U1 U1")).unwrap();
        assert_eq!(x.render(&ctx.ring), "2*(U1)");
        let y = from_word(&ctx, &word(3, "U1 U2 U1")).unwrap();
        assert_eq!(y.render(&ctx.ring), "1*(U1)");
        let w = from_word(&z(7), &word(5, "U2 U1 U4 U2 U3")).unwrap();
        assert_eq!(w.render(&Integers), "1*(U4)(U2 U3)");
    }

    #[test]
    fn normal_form_examples() {
        let (k, w) = jones_normal_form(&word(5, "U2 U1 U4 U2 U3")).unwrap();
        assert_eq!((k, w.to_string()), (0, "(U4)(U2 U3)".into()));
        let (k, w) = jones_normal_form(&word(2, "U1 U1")).unwrap();
        assert_eq!((k, w.to_string()), (1, "(U1)".into()));
        let (k, w) = jones_normal_form(&word(3, "1")).unwrap();
        assert_eq!((k, w.is_identity()), (0, true));
    }

    #[test]
    fn index_and_terminus() {
        let w = word(5, "U4 U2 U3");
        assert_eq!(w.terminus(), Subscript::Finite(3));
        assert_eq!(w.index(), Subscript::Finite(2));
        assert_eq!(word(5, "1").terminus(), Subscript::Infinite);
    }

    #[test]
    fn u1_kills_a_minus_u1() {
        let ctx = z(2);
        let r = &ctx.ring;
        let u1 = TLElement::generator(r, 2, 1).unwrap();
        let k = TLElement::identity(r, 2).scale(r, &ctx.a).sub(r, &u1);
        assert!(multiply(&ctx, &u1, &k).unwrap().is_zero());
        assert!(multiply(&ctx, &k, &u1).unwrap().is_zero());
        assert_eq!(multiply(&ctx, &TLElement::identity(r, 2), &k).unwrap(), k);
    }

    #[test]
    fn s_elements() {
        let ctx = ParamContext::with_v(Integers, 1).unwrap();
        assert_eq!(s_element(&ctx, 3, 1).unwrap().render(&Integers), "-1*1 + 1*(U1)");
        let f5 = ParamContext::with_v(PrimeField::new(5).unwrap(), 2).unwrap();
        assert_eq!(s_element(&f5, 2, 1).unwrap().render(&f5.ring), "4*1 + 2*(U1)");
        let q2 = crate::coeff::make_context(
            Rationals,
            crate::coeff::Param::FromUnit(Rationals.from_i64(1)),
            Theta::Theta2,
        )
        .unwrap();
        assert_eq!(s_element(&q2, 2, 1).unwrap().render(&Rationals), "1*1 + -1*(U1)");
        assert_eq!(s_element(&z(2), 2, 1), Err(Error::MissingUnit));
    }

    #[test]
    fn s_product_expansion() {
        let ctx = ParamContext::with_v(Integers, 1).unwrap();
        let p = s_product(&ctx, 3, 2, 1).unwrap();
        assert_eq!(p.render(&Integers), "1*1 + -1*(U1) + -1*(U2) + 1*(U2)(U1)");
        assert_eq!(s_product(&ctx, 3, 0, 1).unwrap(), TLElement::identity(&Integers, 3));
        assert_eq!(s_product(&ctx, 3, 1, 1).unwrap(), s_element(&ctx, 3, 1).unwrap());
    }

    #[test]
    fn jacobsthal_small() {
        let ctx = ParamContext::with_v(Integers, 1).unwrap();
        // mu/lambda = -1
        // mu/lambda = -1
        assert_eq!(jacobsthal_element_printed(&ctx, 2).unwrap().render(&Integers), "-1*(U1)");
        assert_eq!(jacobsthal_element(&ctx, 2).unwrap().render(&Integers), "1*(U1)");
        assert_eq!(jacobsthal_element(&ctx, 1).unwrap(), TLElement::identity(&Integers, 1));
        let j4 = jacobsthal_element_printed(&ctx, 4).unwrap();
        assert_eq!(j4.len(), 5);
        // (3): r=1, sign (-1)^{0+4} = +1, coefficient (mu/lambda)^1 = -1
        let u3 = from_word(&ctx, &word(4, "U3")).unwrap();
        let d = u3.terms().next().unwrap().0;
        assert_eq!(j4.coefficient(&Integers, d), BigInt::from(-1));
        assert_eq!(jacobsthal_element(&ctx, 4).unwrap().coefficient(&Integers, d), BigInt::from(1));
        assert_eq!(
            jacobsthal_element(&ctx, 3).unwrap().render(&Integers),
            "1*1 + -1*(U2) + 1*(U2)(U1)"
        );
    }

    #[test]
    fn constant_terms() {
        let ctx = ParamContext::with_v(Integers, 1).unwrap();
        let r = &ctx.ring;
        assert_eq!(constant_term(r, &TLElement::identity(r, 3)), BigInt::from(1));
        assert_eq!(constant_term(r, &TLElement::generator(r, 3, 1).unwrap()), BigInt::from(0));
        assert_eq!(constant_term(r, &s_element(&ctx, 3, 2).unwrap()), BigInt::from(-1));
    }

    #[test]
    fn parse_errors() {
        assert!(FreeWord::parse(3, "U3").is_err());
        assert!(FreeWord::parse(3, "V1").is_err());
        assert!(FreeWord::parse(3, "").is_err());
        assert_eq!(word(5, "(U4)(U2 U3)").letters, vec![4, 2, 3]);
    }
}
