//! Chain complexes with labeled bases: W(n), C(m), D(m), the TL_2 resolution,
//! cones, suspensions, truncations, the filtration F^k and the maps Phi^0, Psi^k.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coeff::{ParamContext, Ring};
use crate::diagram::Subscript;
use crate::error::{Error, Result};
use crate::induced::{induced_basis, to_full, right_mult_map, InducedBasis};
use crate::linalg::{rank, smith_invariants, RingMatrix};
use crate::tlalg::{constant_term, multiply, s_product, s_rising, TLElement};

/// Per-degree induced-module data: `m` of each term and the element whose
/// right multiplication is the differential out of that degree.
#[derive(Debug, Clone)]
pub struct InducedData<R: Ring> {
    pub n: usize,
    pub ms: Vec<usize>,
    pub multipliers: Vec<Option<TLElement<R>>>,
}

#[derive(Debug, Clone)]
pub struct ChainComplex<R: Ring> {
    pub ring: R,
    lo: i64,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    // d[k] goes from degree lo+k to lo+k-1; d[0] has zero rows
    d: Vec<RingMatrix<R>>,
    pub induced: Option<InducedData<R>>,
}

impl<R: Ring> ChainComplex<R> {
    /// `maps[k]` is the differential out of degree `lo + k`; the first is ignored
    /// if present with zero rows. Asserts shapes and d o d = 0.
    pub fn new(
        ring: R,
        lo: i64,
        labels: Vec<Vec<String>>,
        maps: Vec<RingMatrix<R>>,
    ) -> Result<Self> {
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        if maps.len() != dims.len() {
            return Err(Error::SizeMismatch("one differential per degree expected".into()));
        }
        for (k, m) in maps.iter().enumerate() {
            let below = if k == 0 { 0 } else { dims[k - 1] };
            if m.shape() != (below, dims[k]) {
                return Err(Error::SizeMismatch(format!(
                    "d at degree {} is {:?}, expected {:?}",
                    lo + k as i64,
                    m.shape(),
                    (below, dims[k])
                )));
            }
        }
        let c = ChainComplex { ring, lo, dims, labels, d: maps, induced: None };
        c.check_square_zero()?;
        Ok(c)
    }

    fn check_square_zero(&self) -> Result<()> {
        for k in 2..self.d.len() {
            if !self.d[k - 1].mul(&self.d[k])?.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "d o d != 0 at degree {}",
                    self.lo + k as i64
                )));
            }
        }
        Ok(())
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    fn slot(&self, i: i64) -> Option<usize> {
        (i >= self.lo && i <= self.hi()).then(|| (i - self.lo) as usize)
    }

    pub fn dim(&self, i: i64) -> usize {
        self.slot(i).map_or(0, |k| self.dims[k])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self, i: i64) -> &[String] {
        self.slot(i).map_or(&[], |k| &self.labels[k])
    }

    /// Differential out of degree `i` (a zero matrix outside the range).
    pub fn d(&self, i: i64) -> RingMatrix<R> {
        match self.slot(i) {
            Some(0) => RingMatrix::zeros(self.ring.clone(), self.dim(i - 1), self.dims[0]),
            Some(k) => self.d[k].clone(),
            None => RingMatrix::zeros(self.ring.clone(), self.dim(i - 1), self.dim(i)),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `--save` layout: `d_<degree>.tlmat` for each degree above the bottom, plus `complex.json`.
    pub fn save(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for i in self.lo + 1..=self.hi() {
            std::fs::write(dir.join(format!("d_{i}.tlmat")), self.d(i).to_tlmat())?;
        }
        let manifest = Manifest {
            ring: self.ring.spec().to_string(),
            lo: self.lo,
            hi: self.hi(),
            dims: self.dims.clone(),
            labels: self.labels.clone(),
        };
        let text = serde_json::to_string_pretty(&manifest).map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(dir.join("complex.json"), text + "\n")?;
        Ok(())
    }

    pub fn load(ring: R, dir: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(dir.join("complex.json"))?;
        let m: Manifest = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        if m.ring != ring.spec().to_string() {
            return Err(Error::Parse(format!("manifest ring {} does not match", m.ring)));
        }
        let mut maps = vec![RingMatrix::zeros(ring.clone(), 0, m.dims.first().copied().unwrap_or(0))];
        for i in m.lo + 1..=m.hi {
            let f = std::fs::File::open(dir.join(format!("d_{i}.tlmat")))?;
            maps.push(RingMatrix::read_tlmat(ring.clone(), f)?);
        }
        ChainComplex::new(ring, m.lo, m.labels, maps)
    }
}

#[derive(Serialize, Deserialize)]
struct Manifest {
    ring: String,
    lo: i64,
    hi: i64,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
}

/// A cochain complex; `delta[k]` goes from degree `lo + k` to `lo + k + 1`.
#[derive(Debug, Clone)]
pub struct CochainComplex<R: Ring> {
    pub ring: R,
    pub lo: i64,
    pub dims: Vec<usize>,
    pub delta: Vec<RingMatrix<R>>,
}

impl<R: Ring> CochainComplex<R> {
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    /// The same data as a chain complex in negated degrees.
    pub fn as_chain(&self) -> Result<ChainComplex<R>> {
        let len = self.dims.len();
        let labels: Vec<Vec<String>> = (0..len)
            .rev()
            .map(|k| (0..self.dims[k]).map(|j| format!("e{j}")).collect())
            .collect();
        // chain slot s corresponds to cochain slot len-1-s
        let mut maps = Vec::with_capacity(len);
        for s in 0..len {
            let k = len - 1 - s;
            if s == 0 {
                maps.push(RingMatrix::zeros(self.ring.clone(), 0, self.dims[k]));
            } else {
                maps.push(self.delta[k].clone());
            }
        }
        ChainComplex::new(self.ring.clone(), -self.hi(), labels, maps)
    }
}

/// Complex of induced modules with right-multiplication differentials.
fn induced_complex<R: Ring>(
    ctx: &ParamContext<R>,
    n: usize,
    lo: i64,
    ms: Vec<usize>,
    multipliers: Vec<TLElement<R>>,
) -> Result<ChainComplex<R>> {
    let bases: Vec<InducedBasis> = ms.iter().map(|&m| induced_basis(n, m)).collect::<Result<_>>()?;
    let mut maps = vec![RingMatrix::zeros(ctx.ring.clone(), 0, bases[0].len())];
    for k in 1..ms.len() {
        maps.push(right_mult_map(ctx, n, ms[k], ms[k - 1], &multipliers[k - 1])?);
    }
    let labels = bases.iter().map(InducedBasis::labels).collect();
    let mut c = ChainComplex::new(ctx.ring.clone(), lo, labels, maps)?;
    let mut mult: Vec<Option<TLElement<R>>> = vec![None];
    mult.extend(multipliers.into_iter().map(Some));
    c.induced = Some(InducedData { n, ms, multipliers: mult });
    Ok(c)
}

/// The multiplier `D_i = sum_j (-1)^j lambda^{-j} s_{n-i+j-1} ... s_{n-i}` of `d^i` in W(n).
pub fn w_multiplier<R: Ring>(ctx: &ParamContext<R>, n: usize, i: usize) -> Result<TLElement<R>> {
    let ring = &ctx.ring;
    let linv = ctx.lambda_inv()?;
    let mut acc = TLElement::zero(n);
    for j in 0..=i {
        let c = ring.mul(&ring.sign(j % 2 == 1), &ring.pow(&linv, j as u32));
        let term = s_product(ctx, n, n - i + j - 1, n - i)?;
        acc = acc.add(ring, &term.scale(ring, &c));
    }
    Ok(acc)
}

/// The complex of planar injective words, degrees -1..n-1.
pub fn build_w<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Result<ChainComplex<R>> {
    ctx.lambda()?;
    let ms: Vec<usize> = (0..=n).rev().collect();
    let mults = (0..n).map(|i| w_multiplier(ctx, n, i)).collect::<Result<Vec<_>>>()?;
    induced_complex(ctx, n, -1, ms, mults)
}

fn check_two_periodic(n: usize, m: usize, strict: bool) -> Result<()> {
    let ok = m >= 2 && if strict { m < n } else { m <= n };
    if ok {
        Ok(())
    } else {
        Err(Error::BadRange(format!("m = {m} invalid for n = {n}")))
    }
}

fn two_periodic_ms(m: usize, len: usize) -> Vec<usize> {
    let mut ms = vec![m, m - 1];
    ms.extend(std::iter::repeat_n(m - 2, len));
    ms
}

/// Two-periodic resolution C(m), truncated at degree `len`; needs `a` invertible.
pub fn build_c<R: Ring>(ctx: &ParamContext<R>, n: usize, m: usize, len: usize) -> Result<ChainComplex<R>> {
    check_two_periodic(n, m, false)?;
    let ring = &ctx.ring;
    let ainv = ring.inv(&ctx.a).ok_or(Error::NonInvertibleA)?;
    let one = TLElement::identity(ring, n);
    let e = TLElement::generator(ring, n, m - 1)?.scale(ring, &ainv);
    let f = one.sub(ring, &e);
    let mut mults = vec![one];
    mults.extend((1..=len).map(|i| if i % 2 == 1 { e.clone() } else { f.clone() }));
    induced_complex(ctx, n, -1, two_periodic_ms(m, len), mults)
}

/// Two-periodic resolution D(m), truncated at degree `len`; needs `m < n`.
pub fn build_d<R: Ring>(ctx: &ParamContext<R>, n: usize, m: usize, len: usize) -> Result<ChainComplex<R>> {
    check_two_periodic(n, m, true)?;
    let ring = &ctx.ring;
    let one = TLElement::identity(ring, n);
    let u = TLElement::generator(ring, n, m - 1)?;
    let e = multiply(ctx, &u, &TLElement::generator(ring, n, m)?)?;
    let f = one.sub(ring, &e);
    let mut mults = vec![one];
    mults.extend((1..=len).map(|i| match i {
        1 => u.clone(),
        i if i % 2 == 0 => f.clone(),
        _ => e.clone(),
    }));
    induced_complex(ctx, n, -1, two_periodic_ms(m, len), mults)
}

/// The explicit free resolution of the trivial TL_2-module, with the module in degree -1.
pub fn build_tl2_resolution<R: Ring>(ctx: &ParamContext<R>, len: usize) -> Result<ChainComplex<R>> {
    let ring = &ctx.ring;
    let one = TLElement::identity(ring, 2);
    let u = TLElement::generator(ring, 2, 1)?;
    let k = one.scale(ring, &ctx.a).sub(ring, &u);
    let mut mults = vec![one];
    mults.extend((1..=len).map(|i| if i % 2 == 1 { u.clone() } else { k.clone() }));
    let mut ms = vec![2];
    ms.extend(std::iter::repeat_n(0, len + 1));
    induced_complex(ctx, 2, -1, ms, mults)
}

/// `(CX)_i = X_i + X_{i-1}`, `d(x, y) = (d x + y, -d y)`.
pub fn cone<R: Ring>(x: &ChainComplex<R>) -> Result<ChainComplex<R>> {
    let ring = x.ring.clone();
    let (lo, hi) = (x.lo, x.hi() + 1);
    let mut labels = Vec::new();
    let mut maps = Vec::new();
    for i in lo..=hi {
        let mut l: Vec<String> = x.labels(i).iter().map(|s| format!("x:{s}")).collect();
        l.extend(x.labels(i - 1).iter().map(|s| format!("y:{s}")));
        labels.push(l);
        let rows = [x.dim(i - 1), x.dim(i - 2)];
        let cols = [x.dim(i), x.dim(i - 1)];
        let m = if i == lo {
            RingMatrix::zeros(ring.clone(), 0, cols[0] + cols[1])
        } else {
            RingMatrix::block(
                ring.clone(),
                &rows,
                &cols,
                &[
                    vec![Some(x.d(i)), Some(RingMatrix::identity(ring.clone(), rows[0]))],
                    vec![None, Some(x.d(i - 1).neg())],
                ],
            )
        };
        maps.push(m);
    }
    ChainComplex::new(ring, lo, labels, maps)
}

/// `(Sigma^k X)_i = X_{i-k}` with unchanged differentials.
pub fn suspend<R: Ring>(x: &ChainComplex<R>, k: i64) -> ChainComplex<R> {
    let mut y = x.clone();
    y.lo += k;
    y
}

/// Zero out degrees above `p`.
pub fn truncate<R: Ring>(x: &ChainComplex<R>, p: i64) -> ChainComplex<R> {
    let keep = (p - x.lo + 1).clamp(0, x.dims.len() as i64) as usize;
    let mut y = x.clone();
    y.dims.truncate(keep);
    y.labels.truncate(keep);
    y.d.truncate(keep);
    if let Some(ind) = &mut y.induced {
        ind.ms.truncate(keep);
        ind.multipliers.truncate(keep);
    }
    y
}

/// Positions in W(n)_i of the basis of F^k_i, for i = -1..n-1.
fn filtration_positions(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k > n {
        return Err(Error::BadRange(format!("k = {k} > n = {n}")));
    }
    (-1..n as i64)
        .map(|i| {
            let floor = (n as i64 - i - 1) as usize;
            let basis = induced_basis(n, floor)?;
            Ok((0..basis.len())
                .filter(|&p| {
                    let w = &basis.words[p];
                    let t = w.terminus();
                    match w.index() {
                        Subscript::Finite(1) => {
                            t >= Subscript::Finite(floor) && t <= Subscript::Finite(floor + k)
                        }
                        _ => t >= Subscript::Finite(floor),
                    }
                })
                .collect())
        })
        .collect()
}

/// Labels of the basis of F^k in each degree -1..n-1.
pub fn filtration_basis<R: Ring>(_ctx: &ParamContext<R>, n: usize, k: usize) -> Result<Vec<Vec<String>>> {
    let pos = filtration_positions(n, k)?;
    Ok(pos
        .iter()
        .enumerate()
        .map(|(s, ps)| {
            let basis = induced_basis(n, n - s).expect("valid");
            ps.iter().map(|&p| basis.words[p].to_string()).collect()
        })
        .collect())
}

fn positions_of<R: Ring>(x: &ChainComplex<R>, labels: &[Vec<String>]) -> Result<Vec<Vec<usize>>> {
    if labels.len() != x.dims.len() {
        return Err(Error::SizeMismatch("one label list per degree expected".into()));
    }
    labels
        .iter()
        .enumerate()
        .map(|(s, ls)| {
            ls.iter()
                .map(|l| {
                    x.labels[s]
                        .iter()
                        .position(|y| y == l)
                        .ok_or_else(|| Error::NotClosed(format!("unknown label {l}")))
                })
                .collect()
        })
        .collect()
}

fn check_closed<R: Ring>(x: &ChainComplex<R>, keep: &[Vec<usize>]) -> Result<()> {
    for s in 1..x.dims.len() {
        let inside: std::collections::HashSet<usize> = keep[s - 1].iter().copied().collect();
        let cols: std::collections::HashSet<usize> = keep[s].iter().copied().collect();
        for (r, c, _) in x.d[s].triples() {
            if cols.contains(&c) && !inside.contains(&r) {
                return Err(Error::NotClosed(format!(
                    "d maps {} into {} at degree {}",
                    x.labels[s][c],
                    x.labels[s - 1][r],
                    x.lo + s as i64
                )));
            }
        }
    }
    Ok(())
}

fn restrict<R: Ring>(x: &ChainComplex<R>, keep: &[Vec<usize>]) -> Result<ChainComplex<R>> {
    let labels = keep
        .iter()
        .enumerate()
        .map(|(s, ps)| ps.iter().map(|&p| x.labels[s][p].clone()).collect())
        .collect();
    let maps = (0..x.dims.len())
        .map(|s| {
            if s == 0 {
                RingMatrix::zeros(x.ring.clone(), 0, keep[0].len())
            } else {
                x.d[s].select(&keep[s - 1], &keep[s])
            }
        })
        .collect();
    ChainComplex::new(x.ring.clone(), x.lo, labels, maps)
}

pub fn subcomplex<R: Ring>(x: &ChainComplex<R>, labels: &[Vec<String>]) -> Result<ChainComplex<R>> {
    let keep = positions_of(x, labels)?;
    check_closed(x, &keep)?;
    restrict(x, &keep)
}

pub fn quotient_complex<R: Ring>(x: &ChainComplex<R>, sub: &[Vec<String>]) -> Result<ChainComplex<R>> {
    let keep = positions_of(x, sub)?;
    check_closed(x, &keep)?;
    let rest: Vec<Vec<usize>> = keep
        .iter()
        .enumerate()
        .map(|(s, ps)| (0..x.dims[s]).filter(|p| !ps.contains(p)).collect())
        .collect();
    restrict(x, &rest)
}

#[derive(Debug, Clone)]
pub struct ChainMap<R: Ring> {
    pub source: ChainComplex<R>,
    pub target: ChainComplex<R>,
    lo: i64,
    maps: Vec<RingMatrix<R>>,
}

impl<R: Ring> ChainMap<R> {
    /// `maps` covers degrees `lo..` over the union of both degree ranges.
    pub fn new(source: ChainComplex<R>, target: ChainComplex<R>, maps: Vec<(i64, RingMatrix<R>)>) -> Result<Self> {
        let lo = source.lo.min(target.lo);
        let hi = source.hi().max(target.hi());
        let mut out = Vec::new();
        for i in lo..=hi {
            let shape = (target.dim(i), source.dim(i));
            let m = maps
                .iter()
                .find(|(j, _)| *j == i)
                .map(|(_, m)| m.clone())
                .unwrap_or_else(|| RingMatrix::zeros(source.ring.clone(), shape.0, shape.1));
            if m.shape() != shape {
                return Err(Error::SizeMismatch(format!("chain map at degree {i}")));
            }
            out.push(m);
        }
        Ok(ChainMap { source, target, lo, maps: out })
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.lo + self.maps.len() as i64 - 1
    }

    pub fn at(&self, i: i64) -> RingMatrix<R> {
        let k = i - self.lo;
        if k >= 0 && (k as usize) < self.maps.len() {
            self.maps[k as usize].clone()
        } else {
            RingMatrix::zeros(self.source.ring.clone(), self.target.dim(i), self.source.dim(i))
        }
    }

    /// `f_{i-1} d_i = d_i f_i` in every degree.
    pub fn is_chain_map(&self) -> bool {
        self.degrees().all(|i| {
            let left = self.at(i - 1).mul(&self.source.d(i));
            let right = self.target.d(i).mul(&self.at(i));
            matches!((left, right), (Ok(l), Ok(r)) if l == r)
        })
    }
}

/// Whether every component is invertible over the ring.
pub fn is_chain_iso<R: Ring>(f: &ChainMap<R>) -> bool {
    f.degrees().all(|i| {
        let m = f.at(i);
        if m.rows() != m.cols() {
            return false;
        }
        if f.source.ring.is_field() {
            rank(&m) == m.rows()
        } else {
            let inv = smith_invariants(&m);
            inv.len() == m.rows() && inv.iter().all(|x| m.ring.is_unit(x))
        }
    })
}

/// Coordinates of `x` in W(n)_i, failing if it leaves the allowed positions.
fn coordinates_in<R: Ring>(
    ring: &R,
    basis: &InducedBasis,
    x: &TLElement<R>,
    allowed: &[usize],
    what: &str,
) -> Result<Vec<R::Elem>> {
    let v = basis.project(&to_full(ring, x));
    for (p, c) in v.iter().enumerate() {
        if !ring.is_zero(c) && !allowed.contains(&p) {
            return Err(Error::InvariantViolation(format!(
                "{what}: image has component at {}",
                basis.words[p]
            )));
        }
    }
    Ok(allowed.iter().map(|&p| v[p].clone()).collect())
}

/// `Phi^0 : C(W(n-1)) -> F^0`, `(x, y) -> sigma(x) lambda^{n-1} + sigma(y) s_1...s_{n-i-1} lambda^i`.
pub fn phi0<R: Ring>(ctx: &ParamContext<R>, n: usize) -> Result<ChainMap<R>> {
    if n == 0 {
        return Err(Error::BadRange("phi0 needs n >= 1".into()));
    }
    let ring = &ctx.ring;
    let lambda = ctx.lambda()?.clone();
    let small = build_w(ctx, n - 1)?;
    let source = cone(&small)?;
    let w = build_w(ctx, n)?;
    let f0 = filtration_positions(n, 0)?;
    let target = restrict(&w, &f0)?;
    check_closed(&w, &f0)?;
    let mut maps = Vec::new();
    for i in -1..n as i64 {
        let s = (i + 1) as usize;
        let tgt = induced_basis(n, n - s)?;
        let mut cols = Vec::new();
        let lam_top = ring.pow(&lambda, (n - 1) as u32);
        if i <= n as i64 - 2 {
            let xb = induced_basis(n - 1, n - 1 - s)?;
            for k in 0..xb.len() {
                let x = xb.lift(ring, k).shift_up().scale(ring, &lam_top);
                cols.push(coordinates_in(ring, &tgt, &x, &f0[s], "xi")?);
            }
        }
        if i >= 0 {
            let yb = induced_basis(n - 1, n - s)?;
            let tower = s_rising(ctx, n, 1, n - s)?;
            let lam_i = ring.pow(&lambda, i as u32);
            for k in 0..yb.len() {
                let y = multiply(ctx, &yb.lift(ring, k).shift_up(), &tower)?.scale(ring, &lam_i);
                cols.push(coordinates_in(ring, &tgt, &y, &f0[s], "eta")?);
            }
        }
        maps.push((i, RingMatrix::from_columns(ring.clone(), f0[s].len(), &cols)));
    }
    let f = ChainMap::new(source, target, maps)?;
    if !f.is_chain_map() {
        return Err(Error::InvariantViolation("Phi^0 does not commute with d".into()));
    }
    Ok(f)
}

/// `Psi^k : tau_{n-1} Sigma^{k+1} W(n-1) -> F^k / F^{k-1}`.
pub fn psik<R: Ring>(ctx: &ParamContext<R>, n: usize, k: usize) -> Result<ChainMap<R>> {
    if k == 0 || k >= n {
        return Err(Error::BadRange(format!("psik needs 1 <= k <= n-1, got k = {k}, n = {n}")));
    }
    let ring = &ctx.ring;
    let lambda = ctx.lambda()?.clone();
    let source = truncate(&suspend(&build_w(ctx, n - 1)?, k as i64 + 1), n as i64 - 1);
    let w = build_w(ctx, n)?;
    let fk = filtration_positions(n, k)?;
    let fk1 = filtration_positions(n, k - 1)?;
    check_closed(&w, &fk)?;
    check_closed(&w, &fk1)?;
    let quot: Vec<Vec<usize>> = fk
        .iter()
        .zip(&fk1)
        .map(|(a, b)| a.iter().copied().filter(|p| !b.contains(p)).collect())
        .collect();
    let target = restrict(&w, &quot)?;
    let mut maps = Vec::new();
    for i in k as i64..n as i64 {
        let s = (i + 1) as usize;
        let tgt = induced_basis(n, n - s)?;
        let m_src = n - s + k;
        let xb = induced_basis(n - 1, m_src)?;
        let tower = s_rising(ctx, n, 1, m_src)?;
        let sign = ring.sign((i * (k as i64 + 1)) % 2 != 0);
        let c = ring.mul(&sign, &ring.pow(&lambda, i as u32));
        let mut cols = Vec::new();
        for p in 0..xb.len() {
            let x = multiply(ctx, &xb.lift(ring, p).shift_up(), &tower)?.scale(ring, &c);
            let full = coordinates_in(ring, &tgt, &x, &fk[s], "psi")?;
            // keep the quotient coordinates
            let v: Vec<R::Elem> = fk[s]
                .iter()
                .zip(full)
                .filter(|(p, _)| quot[s].contains(p))
                .map(|(_, c)| c)
                .collect();
            cols.push(v);
        }
        maps.push((i, RingMatrix::from_columns(ring.clone(), quot[s].len(), &cols)));
    }
    let f = ChainMap::new(source, target, maps)?;
    if !f.is_chain_map() {
        return Err(Error::InvariantViolation("Psi^k does not commute with d".into()));
    }
    Ok(f)
}

fn coinvariant_scalars<R: Ring>(x: &ChainComplex<R>) -> Result<Vec<R::Elem>> {
    let ind = x.induced.as_ref().ok_or(Error::NotInducedComplex)?;
    Ok(ind
        .multipliers
        .iter()
        .skip(1)
        .map(|g| constant_term(&x.ring, g.as_ref().expect("multiplier above the bottom")))
        .collect())
}

/// `1 (x) X`: every induced term collapses to R and each map to a scalar.
pub fn trivial_coinvariants<R: Ring>(x: &ChainComplex<R>) -> Result<ChainComplex<R>> {
    let scalars = coinvariant_scalars(x)?;
    let ring = x.ring.clone();
    let labels = x.dims.iter().map(|_| vec!["1".to_string()]).collect();
    let mut maps = vec![RingMatrix::zeros(ring.clone(), 0, 1)];
    for c in scalars {
        maps.push(RingMatrix::from_dense(ring.clone(), 1, 1, &[vec![c]]));
    }
    ChainComplex::new(ring, x.lo, labels, maps)
}

/// `Hom(X, 1)`: the same scalars with the arrows reversed.
pub fn trivial_invariants<R: Ring>(x: &ChainComplex<R>) -> Result<CochainComplex<R>> {
    let scalars = coinvariant_scalars(x)?;
    let ring = x.ring.clone();
    let mut delta: Vec<RingMatrix<R>> = scalars
        .into_iter()
        .map(|c| RingMatrix::from_dense(ring.clone(), 1, 1, &[vec![c]]))
        .collect();
    delta.push(RingMatrix::zeros(ring.clone(), 0, 1));
    Ok(CochainComplex { ring, lo: x.lo, dims: vec![1; x.dims.len()], delta })
}
