//! Induced modules TL_n (x)_{TL_m} 1, realized as TL_n / I_m on Jones words of terminus > m-1.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeff::{ParamContext, Ring};
use crate::diagram::{diagram_table, DiagramTable, JonesWord, Subscript};
use crate::error::{Error, Result};
use crate::tlalg::{multiply, TLElement};

pub use crate::linalg::RingMatrix;

#[derive(Debug, Clone)]
pub struct InducedBasis {
    pub n: usize,
    pub m: usize,
    pub words: Vec<JonesWord>,
    table: Arc<DiagramTable>,
    global: Vec<usize>,
    local: Vec<Option<usize>>,
}

fn survives(w: &JonesWord, m: usize) -> bool {
    match w.terminus() {
        Subscript::Infinite => true,
        Subscript::Finite(t) => t + 1 > m,
    }
}

pub fn induced_basis(n: usize, m: usize) -> Result<InducedBasis> {
    if m > n {
        return Err(Error::BadRange(format!("m = {m} > n = {n}")));
    }
    let table = diagram_table(n);
    let global: Vec<usize> = (0..table.len()).filter(|&i| survives(&table.words[i], m)).collect();
    let mut local = vec![None; table.len()];
    for (k, &g) in global.iter().enumerate() {
        local[g] = Some(k);
    }
    let words = global.iter().map(|&g| table.words[g].clone()).collect();
    Ok(InducedBasis { n, m, words, table, global, local })
}

/// Jones words of terminus at most m-1: a basis of the left ideal I_m.
pub fn ideal_basis(n: usize, m: usize) -> Result<Vec<JonesWord>> {
    if m > n {
        return Err(Error::BadRange(format!("m = {m} > n = {n}")));
    }
    let table = diagram_table(n);
    Ok(table.words.iter().filter(|w| !survives(w, m)).cloned().collect())
}

impl InducedBasis {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.words.iter().map(|w| w.to_string()).collect()
    }

    pub fn table(&self) -> &Arc<DiagramTable> {
        &self.table
    }

    /// Diagram-table index of the k-th basis word.
    pub fn global_index(&self, k: usize) -> usize {
        self.global[k]
    }

    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.local[g]
    }

    pub fn position(&self, w: &JonesWord) -> Option<usize> {
        self.words.iter().position(|x| x == w)
    }

    /// Project a vector over all diagrams onto the basis coordinates.
    pub fn project<E: Clone>(&self, full: &[E]) -> Vec<E> {
        self.global.iter().map(|&g| full[g].clone()).collect()
    }

    pub fn lift<R: Ring>(&self, ring: &R, k: usize) -> TLElement<R> {
        TLElement::monomial(ring, self.table.diagrams[self.global[k]].clone(), ring.one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector<R: Ring> {
    pub n: usize,
    pub m: usize,
    pub dim: usize,
    pub coords: BTreeMap<usize, R::Elem>,
}

impl<R: Ring> ModuleVector<R> {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dense(&self, ring: &R) -> Vec<R::Elem> {
        let mut v = vec![ring.zero(); self.dim];
        for (k, c) in &self.coords {
            v[*k] = c.clone();
        }
        v
    }
}

/// Expand over the whole diagram table.
pub(crate) fn to_full<R: Ring>(ring: &R, x: &TLElement<R>) -> Vec<R::Elem> {
    let t = diagram_table(x.n);
    let mut v = vec![ring.zero(); t.len()];
    for (i, c) in x.indexed() {
        v[i] = c;
    }
    v
}

pub fn reduce<R: Ring>(ctx: &ParamContext<R>, x: &TLElement<R>, m: usize) -> Result<ModuleVector<R>> {
    let basis = induced_basis(x.n, m)?;
    let full = to_full(&ctx.ring, x);
    let coords = basis
        .project(&full)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !ctx.ring.is_zero(c))
        .collect();
    Ok(ModuleVector { n: x.n, m, dim: basis.len(), coords })
}

/// `w * g` over the full diagram table, for a basis word index `w`.
fn right_product<R: Ring>(
    ctx: &ParamContext<R>,
    t: &DiagramTable,
    w: usize,
    g: &[(usize, R::Elem)],
    apow: &[R::Elem],
) -> Vec<R::Elem> {
    let ring = &ctx.ring;
    let mut acc = vec![ring.zero(); t.len()];
    for (j, c) in g {
        let (k, loops) = t.mul(w, *j);
        ring.mul_add(&mut acc[k], c, &apow[loops]);
    }
    acc
}

fn left_product<R: Ring>(
    ctx: &ParamContext<R>,
    t: &DiagramTable,
    g: &[(usize, R::Elem)],
    w: usize,
    apow: &[R::Elem],
) -> Vec<R::Elem> {
    let ring = &ctx.ring;
    let mut acc = vec![ring.zero(); t.len()];
    for (j, c) in g {
        let (k, loops) = t.mul(*j, w);
        ring.mul_add(&mut acc[k], c, &apow[loops]);
    }
    acc
}

pub(crate) fn a_powers<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Vec<R::Elem> {
    (0..=n).map(|k| ctx.a_pow(k)).collect()
}

/// Matrix of `v -> g v` on TL_n / I_m.
pub fn left_action_matrix<R: Ring>(
    ctx: &ParamContext<R>,
    n: usize,
    m: usize,
    g: &TLElement<R>,
) -> Result<RingMatrix<R>> {
    if g.n != n {
        return Err(Error::SizeMismatch(format!("element of TL_{} acting on TL_{n}", g.n)));
    }
    let basis = induced_basis(n, m)?;
    let t = basis.table.clone();
    let gi = g.indexed();
    let apow = a_powers(ctx, n);
    let cols: Vec<Vec<R::Elem>> = (0..basis.len())
        .map(|k| basis.project(&left_product(ctx, &t, &gi, basis.global[k], &apow)))
        .collect();
    Ok(RingMatrix::from_columns(ctx.ring.clone(), basis.len(), &cols))
}

/// Matrix of `x (x) r -> x g (x) r` from TL_n / I_{m_src} to TL_n / I_{m_tgt}.
pub fn right_mult_map<R: Ring>(
    ctx: &ParamContext<R>,
    n: usize,
    m_src: usize,
    m_tgt: usize,
    g: &TLElement<R>,
) -> Result<RingMatrix<R>> {
    if g.n != n {
        return Err(Error::SizeMismatch(format!("element of TL_{} in TL_{n}", g.n)));
    }
    if m_src > m_tgt {
        return Err(Error::BadRange(format!("m_src = {m_src} > m_tgt = {m_tgt}")));
    }
    for j in 1..m_src {
        let u = TLElement::generator(&ctx.ring, n, j)?;
        if multiply(ctx, &u, g)? != multiply(ctx, g, &u)? {
            return Err(Error::NotWellDefined(format!(
                "{} does not commute with U{j}",
                g.render(&ctx.ring)
            )));
        }
    }
    let src = induced_basis(n, m_src)?;
    let tgt = induced_basis(n, m_tgt)?;
    let t = src.table.clone();
    let gi = g.indexed();
    let apow = a_powers(ctx, n);
    let cols: Vec<Vec<R::Elem>> = (0..src.len())
        .map(|k| tgt.project(&right_product(ctx, &t, src.global[k], &gi, &apow)))
        .collect();
    Ok(RingMatrix::from_columns(ctx.ring.clone(), tgt.len(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Integers;
    use crate::tlalg::{from_word, FreeWord};
    use num_bigint::BigInt;

    fn labels(b: &InducedBasis) -> Vec<String> {
        let mut l = b.labels();
        l.sort();
        l
    }

    #[test]
    fn bases() {
        assert_eq!(labels(&induced_basis(3, 2).unwrap()), ["(U1 U2)", "(U2)", "1"]);
        for n in 0..6 {
            let c = crate::diagram::catalan(n) as usize;
            assert_eq!(induced_basis(n, 0).unwrap().len(), c);
            if n >= 1 {
                assert_eq!(induced_basis(n, 1).unwrap().len(), c);
            }
            assert_eq!(induced_basis(n, n).unwrap().labels(), ["1"]);
        }
        let ideal: Vec<String> = ideal_basis(3, 2).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(ideal, ["(U1)", "(U2)(U1)"]);
        assert!(ideal_basis(4, 0).unwrap().is_empty());
        assert!(ideal_basis(4, 1).unwrap().is_empty());
        assert!(induced_basis(2, 3).is_err());
    }

    #[test]
    fn reduction() {
        let ctx = ParamContext::with_a(Integers, 2);
        let u1 = from_word(&ctx, &FreeWord::parse(3, "U1").unwrap()).unwrap();
        assert!(reduce(&ctx, &u1, 2).unwrap().is_zero());
        let u12 = from_word(&ctx, &FreeWord::parse(3, "U1 U2").unwrap()).unwrap();
        let v = reduce(&ctx, &u12, 2).unwrap();
        let b = induced_basis(3, 2).unwrap();
        let pos = b.labels().iter().position(|l| l == "(U1 U2)").unwrap();
        assert_eq!(v.coords.into_iter().collect::<Vec<_>>(), vec![(pos, BigInt::from(1))]);
        let one = TLElement::identity(&Integers, 3);
        assert_eq!(reduce(&ctx, &one, 3).unwrap().dim, 1);
    }

    #[test]
    fn maps() {
        let ctx = ParamContext::with_a(Integers, 2);
        let r = &ctx.ring;
        let one2 = TLElement::identity(r, 2);
        let aug = right_mult_map(&ctx, 2, 1, 2, &one2).unwrap();
        assert_eq!(aug.to_dense(), vec![vec![BigInt::from(1), BigInt::from(0)]]);
        assert_eq!(right_mult_map(&ctx, 2, 1, 1, &one2).unwrap(), RingMatrix::identity(Integers, 2));
        let u2 = TLElement::generator(r, 3, 2).unwrap();
        let m = right_mult_map(&ctx, 3, 1, 2, &u2).unwrap();
        let tgt = induced_basis(3, 2).unwrap();
        let col0: Vec<BigInt> = m.column(0);
        let pos = tgt.labels().iter().position(|l| l == "(U2)").unwrap();
        for (i, c) in col0.iter().enumerate() {
            assert_eq!(*c, BigInt::from((i == pos) as i64));
        }
        let act = left_action_matrix(&ctx, 3, 2, &TLElement::generator(r, 3, 1).unwrap()).unwrap();
        assert!(act.column(0).iter().all(|c| *c == BigInt::from(0)));
        assert_eq!(
            left_action_matrix(&ctx, 3, 2, &TLElement::identity(r, 3)).unwrap(),
            RingMatrix::identity(Integers, 3)
        );
    }

    #[test]
    fn commutation_is_checked() {
        let ctx = ParamContext::with_a(Integers, 2);
        let u1 = TLElement::generator(&ctx.ring, 3, 1).unwrap();
        assert!(matches!(right_mult_map(&ctx, 3, 3, 3, &u1), Err(Error::NotWellDefined(_))));
    }
}
