//! Exact linear algebra over a Euclidean coefficient ring.
//!
//! Row reduction uses Euclidean steps (repeated division with remainder), so a
//! single code path produces Hermite-style echelon forms over Z and reduced
//! echelon forms over fields.

use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Read};

use crate::coeff::Ring;
use crate::error::{Error, Result};

/// A sparse matrix stored by rows, entries sorted by column, no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix<R: Ring> {
    pub ring: R,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, R::Elem)>>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        RingMatrix { ring, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let one = ring.one();
        let data = (0..n).map(|i| vec![(i, one.clone())]).collect();
        RingMatrix { ring, rows: n, cols: n, data }
    }

    pub fn from_dense(ring: R, rows: usize, cols: usize, dense: &[Vec<R::Elem>]) -> Self {
        let data = dense
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, x)| !ring.is_zero(x))
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        RingMatrix { ring, rows, cols, data }.with_rows(rows)
    }

    fn with_rows(mut self, rows: usize) -> Self {
        self.data.resize(rows, Vec::new());
        self
    }

    /// Build from column vectors (dense, each of length `rows`).
    pub fn from_columns(ring: R, rows: usize, columns: &[Vec<R::Elem>]) -> Self {
        let mut data = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                if !ring.is_zero(x) {
                    data[i].push((j, x.clone()));
                }
            }
        }
        RingMatrix { ring, rows, cols: columns.len(), data }
    }

    /// Build from triples; duplicates are summed.
    pub fn from_triples(
        ring: R,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, R::Elem)>,
    ) -> Self {
        let mut dense_rows: Vec<std::collections::BTreeMap<usize, R::Elem>> =
            vec![Default::default(); rows];
        for (i, j, x) in triples {
            assert!(i < rows && j < cols, "triple out of range");
            let e = dense_rows[i].entry(j).or_insert_with(|| ring.zero());
            *e = ring.add(e, &x);
        }
        let data = dense_rows
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, x)| !ring.is_zero(x)).collect())
            .collect();
        RingMatrix { ring, rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> R::Elem {
        self.data[i]
            .binary_search_by_key(&j, |e| e.0)
            .map(|k| self.data[i][k].1.clone())
            .unwrap_or_else(|_| self.ring.zero())
    }

    pub fn row(&self, i: usize) -> &[(usize, R::Elem)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &R::Elem)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn to_dense(&self) -> Vec<Vec<R::Elem>> {
        let mut out = vec![vec![self.ring.zero(); self.cols]; self.rows];
        for (i, j, x) in self.triples() {
            out[i][j] = x.clone();
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, x) in self.triples() {
            data[j].push((i, x.clone()));
        }
        RingMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let mut acc = vec![ring.zero(); other.cols];
        let mut touched = vec![false; other.cols];
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut cols_hit = Vec::new();
            for (k, x) in row {
                for (j, y) in &other.data[*k] {
                    if !touched[*j] {
                        touched[*j] = true;
                        cols_hit.push(*j);
                    }
                    ring.mul_add(&mut acc[*j], x, y);
                }
            }
            cols_hit.sort_unstable();
            let mut out = Vec::new();
            for j in cols_hit {
                touched[j] = false;
                let v = std::mem::replace(&mut acc[j], ring.zero());
                if !ring.is_zero(&v) {
                    out.push((j, v));
                }
            }
            data.push(out);
        }
        Ok(RingMatrix { ring: ring.clone(), rows: self.rows, cols: other.cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::SizeMismatch("matrix sum".into()));
        }
        let t = self.triples().map(|(i, j, x)| (i, j, x.clone()));
        let u = other.triples().map(|(i, j, x)| (i, j, x.clone()));
        Ok(Self::from_triples(self.ring.clone(), self.rows, self.cols, t.chain(u)))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let t: Vec<_> = self
            .triples()
            .map(|(i, j, x)| (i, j, self.ring.mul(c, x)))
            .collect();
        Self::from_triples(self.ring.clone(), self.rows, self.cols, t)
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.ring.neg(&self.ring.one()))
    }

    /// Apply to a dense column vector.
    pub fn apply(&self, v: &[R::Elem]) -> Vec<R::Elem> {
        let ring = &self.ring;
        self.data
            .iter()
            .map(|row| {
                let mut acc = ring.zero();
                for (j, x) in row {
                    ring.mul_add(&mut acc, x, &v[*j]);
                }
                acc
            })
            .collect()
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (k, &j) in cols.iter().enumerate() {
            col_pos[j] = k;
        }
        let data = rows
            .iter()
            .map(|&i| {
                let mut r: Vec<(usize, R::Elem)> = self.data[i]
                    .iter()
                    .filter(|(j, _)| col_pos[*j] != usize::MAX)
                    .map(|(j, x)| (col_pos[*j], x.clone()))
                    .collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        RingMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), data }
    }

    /// Block matrix from a grid of equally shaped rows/columns of blocks.
    pub fn block(ring: R, row_dims: &[usize], col_dims: &[usize], blocks: &[Vec<Option<Self>>]) -> Self {
        let roff: Vec<usize> = row_dims.iter().scan(0, |s, d| { let o = *s; *s += d; Some(o) }).collect();
        let coff: Vec<usize> = col_dims.iter().scan(0, |s, d| { let o = *s; *s += d; Some(o) }).collect();
        let mut triples = Vec::new();
        for (bi, brow) in blocks.iter().enumerate() {
            for (bj, b) in brow.iter().enumerate() {
                if let Some(b) = b {
                    assert_eq!(b.shape(), (row_dims[bi], col_dims[bj]), "block shape");
                    triples.extend(b.triples().map(|(i, j, x)| (roff[bi] + i, coff[bj] + j, x.clone())));
                }
            }
        }
        Self::from_triples(ring, row_dims.iter().sum(), col_dims.iter().sum(), triples)
    }

    /// `tlmat <rows> <cols> <ring-tag>` followed by sorted 1-based triples.
    pub fn to_tlmat(&self) -> String {
        let mut s = format!("tlmat {} {} {}\n", self.rows, self.cols, self.ring.spec());
        for (i, j, x) in self.triples() {
            writeln!(s, "{} {} {}", i + 1, j + 1, self.ring.fmt_elem(x)).unwrap();
        }
        s
    }

    pub fn read_tlmat(ring: R, input: impl Read) -> Result<Self> {
        let mut lines = BufReader::new(input).lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty tlmat".into()))??;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let bad = |m: &str| Error::Parse(format!("tlmat: {m}"));
        if parts.len() != 4 || parts[0] != "tlmat" {
            return Err(bad("bad header"));
        }
        let rows: usize = parts[1].parse().map_err(|_| bad("rows"))?;
        let cols: usize = parts[2].parse().map_err(|_| bad("cols"))?;
        if parts[3] != ring.spec().to_string() {
            return Err(bad("ring tag mismatch"));
        }
        let mut triples = Vec::new();
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(bad("bad entry line"));
            }
            let i: usize = f[0].parse().map_err(|_| bad("row index"))?;
            let j: usize = f[1].parse().map_err(|_| bad("col index"))?;
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(bad("index out of range"));
            }
            triples.push((i - 1, j - 1, ring.parse_elem(f[2])?));
        }
        Ok(Self::from_triples(ring, rows, cols, triples))
    }
}

/// `rows[i] -= q * rows[p]` on columns from `start`.
fn sub_row<R: Ring>(ring: &R, rows: &mut [Vec<R::Elem>], i: usize, p: usize, q: &R::Elem, start: usize) {
    if ring.is_zero(q) {
        return;
    }
    let (pr, ir) = if p < i {
        let (a, b) = rows.split_at_mut(i);
        (&a[p], &mut b[0])
    } else {
        let (a, b) = rows.split_at_mut(p);
        (&b[0], &mut a[i])
    };
    let nq = ring.neg(q);
    for k in start..pr.len() {
        if !ring.is_zero(&pr[k]) {
            ring.mul_add(&mut ir[k], &nq, &pr[k]);
        }
    }
}

fn scale_row<R: Ring>(ring: &R, row: &mut [R::Elem], u: &R::Elem) {
    if ring.is_one(u) {
        return;
    }
    for x in row.iter_mut() {
        if !ring.is_zero(x) {
            *x = ring.mul(x, u);
        }
    }
}

/// Bring `rows` to echelon form with respect to columns `0..limit` using
/// unimodular row operations; columns past `limit` are carried along.
/// Returns the pivot columns; rows `0..rank` are the pivot rows and the rest
/// vanish on `0..limit`.
pub fn row_reduce<R: Ring>(ring: &R, rows: &mut [Vec<R::Elem>], limit: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..limit {
        if r == nrows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                let x = &rows[i][col];
                if ring.is_zero(x) {
                    continue;
                }
                match best {
                    Some(b) if !ring.smaller(x, &rows[b][col]) => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut clean = true;
            for i in r + 1..nrows {
                if ring.is_zero(&rows[i][col]) {
                    continue;
                }
                let (q, rem) = ring.div_rem(&rows[i][col], &rows[r][col]);
                sub_row(ring, rows, i, r, &q, col);
                if !ring.is_zero(&rem) {
                    clean = false;
                }
            }
            if clean {
                let u = ring.normal_unit(&rows[r][col]);
                scale_row(ring, &mut rows[r], &u);
                pivots.push(col);
                r += 1;
                break;
            }
        }
    }
    pivots
}

/// Reduce entries above each pivot (Hermite normal form over Z, reduced
/// echelon form over fields).
pub fn reduce_above<R: Ring>(ring: &R, rows: &mut [Vec<R::Elem>], pivots: &[usize]) {
    for (j, &p) in pivots.iter().enumerate() {
        for i in 0..j {
            if ring.is_zero(&rows[i][p]) {
                continue;
            }
            let (q, _) = ring.div_rem(&rows[i][p], &rows[j][p]);
            sub_row(ring, rows, i, j, &q, p);
        }
    }
}

pub fn rank<R: Ring>(m: &RingMatrix<R>) -> usize {
    let mut rows = m.to_dense();
    row_reduce(&m.ring, &mut rows, m.cols()).len()
}

/// Hermite (or reduced echelon) basis of the span of the given vectors.
pub fn span_basis<R: Ring>(ring: &R, vectors: Vec<Vec<R::Elem>>, dim: usize) -> Vec<Vec<R::Elem>> {
    let mut rows = vectors;
    let pivots = row_reduce(ring, &mut rows, dim);
    rows.truncate(pivots.len());
    reduce_above(ring, &mut rows, &pivots);
    rows
}

/// Basis of `{x : m x = 0}`; over Z a basis of the (saturated) kernel lattice,
/// returned in Hermite form.
pub fn kernel_basis<R: Ring>(m: &RingMatrix<R>) -> Vec<Vec<R::Elem>> {
    let ring = &m.ring;
    let (nr, nc) = m.shape();
    let mt = m.transpose();
    let mut rows: Vec<Vec<R::Elem>> = (0..nc)
        .map(|j| {
            let mut row = vec![ring.zero(); nr + nc];
            for (i, x) in mt.row(j) {
                row[*i] = x.clone();
            }
            row[nr + j] = ring.one();
            row
        })
        .collect();
    let rank = row_reduce(ring, &mut rows, nr).len();
    let kernel: Vec<Vec<R::Elem>> = rows.drain(rank..).map(|r| r[nr..].to_vec()).collect();
    span_basis(ring, kernel, nc)
}

/// Basis of the column span of `m`.
pub fn image_basis<R: Ring>(m: &RingMatrix<R>) -> Vec<Vec<R::Elem>> {
    let cols: Vec<Vec<R::Elem>> = m.transpose().to_dense();
    span_basis(&m.ring, cols, m.rows())
}

/// Solve `m x = b`, returning any solution over the ring.
pub fn solve<R: Ring>(m: &RingMatrix<R>, b: &[R::Elem]) -> Option<Vec<R::Elem>> {
    let ring = &m.ring;
    let (nr, nc) = m.shape();
    let mt = m.transpose();
    let mut rows: Vec<Vec<R::Elem>> = (0..nc)
        .map(|j| {
            let mut row = vec![ring.zero(); nr + nc];
            for (i, x) in mt.row(j) {
                row[*i] = x.clone();
            }
            row[nr + j] = ring.one();
            row
        })
        .collect();
    let pivots = row_reduce(ring, &mut rows, nr);
    let mut rest = b.to_vec();
    let mut x = vec![ring.zero(); nc];
    for (k, &p) in pivots.iter().enumerate() {
        if ring.is_zero(&rest[p]) {
            continue;
        }
        let y = ring.div_exact(&rest[p], &rows[k][p])?;
        for c in 0..nr {
            if !ring.is_zero(&rows[k][c]) {
                rest[c] = ring.sub(&rest[c], &ring.mul(&y, &rows[k][c]));
            }
        }
        for c in 0..nc {
            if !ring.is_zero(&rows[k][nr + c]) {
                ring.mul_add(&mut x[c], &y, &rows[k][nr + c]);
            }
        }
    }
    rest.iter().all(|e| ring.is_zero(e)).then_some(x)
}

/// Nonzero Smith invariants `d_1 | d_2 | ...`, normalized.
pub fn smith_invariants<R: Ring>(m: &RingMatrix<R>) -> Vec<R::Elem> {
    let ring = &m.ring;
    let (nr, nc) = m.shape();
    let mut a = m.to_dense();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry of the lower-right block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if ring.is_zero(&a[i][j]) {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !ring.smaller(&a[i][j], &a[bi][bj]) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if ring.is_zero(&a[i][t]) {
                    continue;
                }
                let (q, rem) = ring.div_rem(&a[i][t], &a[t][t]);
                sub_row(ring, &mut a, i, t, &q, t);
                clean &= ring.is_zero(&rem);
            }
            for j in t + 1..nc {
                if ring.is_zero(&a[t][j]) {
                    continue;
                }
                let (q, rem) = ring.div_rem(&a[t][j], &a[t][t]);
                let nq = ring.neg(&q);
                for row in a.iter_mut().skip(t) {
                    if !ring.is_zero(&row[t]) {
                        let v = ring.mul(&nq, &row[t]);
                        row[j] = ring.add(&row[j], &v);
                    }
                }
                clean &= ring.is_zero(&rem);
            }
            if !clean {
                // move a smaller remainder into the pivot position
                for i in t + 1..nr {
                    if !ring.is_zero(&a[i][t]) && ring.smaller(&a[i][t], &a[t][t]) {
                        a.swap(t, i);
                    }
                }
                for j in t + 1..nc {
                    if !ring.is_zero(&a[t][j]) && ring.smaller(&a[t][j], &a[t][t]) {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
                continue;
            }
            let bad = (t + 1..nr).find(|&i| {
                (t + 1..nc).any(|j| ring.div_exact(&a[i][j], &a[t][t]).is_none())
            });
            match bad {
                Some(i) => {
                    for j in t..nc {
                        let v = a[i][j].clone();
                        a[t][j] = ring.add(&a[t][j], &v);
                    }
                }
                None => break,
            }
        }
        let u = ring.normal_unit(&a[t][t]);
        out.push(ring.mul(&a[t][t], &u));
        t += 1;
    }
    out
}

/// An R-submodule of R^dim kept in echelon form, grown one vector at a time.
#[derive(Debug, Clone)]
pub struct Lattice<R: Ring> {
    ring: R,
    dim: usize,
    rows: Vec<Vec<R::Elem>>,
    pivots: Vec<usize>,
}

impl<R: Ring> Lattice<R> {
    pub fn new(ring: R, dim: usize) -> Self {
        Lattice { ring, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(ring: R, dim: usize, vs: Vec<Vec<R::Elem>>) -> Self {
        let mut rows = vs;
        let pivots = row_reduce(&ring, &mut rows, dim);
        rows.truncate(pivots.len());
        Lattice { ring, dim, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<R::Elem>] {
        &self.rows
    }

    fn leading(&self, v: &[R::Elem]) -> Option<usize> {
        v.iter().position(|x| !self.ring.is_zero(x))
    }

    /// Add `v`; returns whether the lattice grew.
    pub fn insert(&mut self, v: &[R::Elem]) -> bool {
        let ring = self.ring.clone();
        let mut v = v.to_vec();
        loop {
            let Some(c) = self.leading(&v) else { return false };
            match self.pivots.binary_search(&c) {
                Err(pos) => {
                    let u = ring.normal_unit(&v[c]);
                    scale_row(&ring, &mut v, &u);
                    self.rows.insert(pos, v);
                    self.pivots.insert(pos, c);
                    return true;
                }
                Ok(k) => {
                    // Euclid between the pivot row and v in column c
                    let mut grew = false;
                    loop {
                        let (q, rem) = ring.div_rem(&v[c], &self.rows[k][c]);
                        let row = &self.rows[k];
                        let nq = ring.neg(&q);
                        for j in c..self.dim {
                            if !ring.is_zero(&row[j]) {
                                ring.mul_add(&mut v[j], &nq, &row[j]);
                            }
                        }
                        if ring.is_zero(&rem) {
                            break;
                        }
                        std::mem::swap(&mut self.rows[k], &mut v);
                        grew = true;
                    }
                    if grew {
                        let u = ring.normal_unit(&self.rows[k][c]);
                        scale_row(&ring, &mut self.rows[k], &u);
                        // the old pivot row is now v (or was absorbed); keep reducing it
                        if self.leading(&v).is_none() {
                            return true;
                        }
                        self.insert(&v);
                        return true;
                    }
                }
            }
        }
    }

    /// Coordinates of `v` with respect to the echelon rows, if `v` lies in the lattice.
    pub fn express(&self, v: &[R::Elem]) -> Option<Vec<R::Elem>> {
        let ring = &self.ring;
        let mut v = v.to_vec();
        let mut coords = vec![ring.zero(); self.rows.len()];
        for (k, &p) in self.pivots.iter().enumerate() {
            if let Some(c) = self.leading(&v) {
                if c < p {
                    return None;
                }
            }
            if ring.is_zero(&v[p]) {
                continue;
            }
            let y = ring.div_exact(&v[p], &self.rows[k][p])?;
            let ny = ring.neg(&y);
            for j in p..self.dim {
                if !ring.is_zero(&self.rows[k][j]) {
                    ring.mul_add(&mut v[j], &ny, &self.rows[k][j]);
                }
            }
            coords[k] = y;
        }
        self.leading(&v).is_none().then_some(coords)
    }

    pub fn contains(&self, v: &[R::Elem]) -> bool {
        self.express(v).is_some()
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_all(&self, other: &Lattice<R>) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Integers, PrimeField, Rationals};
    use num_bigint::BigInt;

    fn zm(rows: &[&[i64]]) -> RingMatrix<Integers> {
        let d: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
        RingMatrix::from_dense(Integers, rows.len(), rows.first().map_or(0, |r| r.len()), &d)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn smith_examples() {
        assert_eq!(ints(&smith_invariants(&zm(&[&[2, 0], &[0, 0]]))), vec![2]);
        assert_eq!(ints(&smith_invariants(&zm(&[&[2, 4], &[6, 8]]))), vec![2, 4]);
        assert!(smith_invariants(&zm(&[&[0, 0], &[0, 0]])).is_empty());
        assert_eq!(ints(&smith_invariants(&zm(&[&[2, 0], &[0, 3]]))), vec![1, 6]);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y = 0 has kernel spanned by (2, -1), not a multiple; Hermite form leads positive
        let k = kernel_basis(&zm(&[&[1, 2]]));
        assert_eq!(k.len(), 1);
        assert_eq!(ints(&k[0]), vec![2, -1]);
        let k = kernel_basis(&zm(&[&[2, 4]]));
        assert_eq!(k.len(), 1);
        assert_eq!(ints(&k[0]), vec![2, -1]);
    }

    #[test]
    fn rank_over_fields() {
        let f2 = PrimeField::new(2).unwrap();
        let m = RingMatrix::from_dense(f2, 2, 2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank(&m), 1);
        let q = Rationals;
        let m = RingMatrix::from_dense(q, 2, 2, &[vec![q.from_i64(1), q.from_i64(2)], vec![q.from_i64(3), q.from_i64(4)]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn solve_over_z() {
        let m = zm(&[&[2, 4]]);
        assert!(solve(&m, &[BigInt::from(3)]).is_none());
        let x = solve(&m, &[BigInt::from(6)]).unwrap();
        assert_eq!(m.apply(&x), vec![BigInt::from(6)]);
    }

    #[test]
    fn lattice_membership() {
        let mut l = Lattice::new(Integers, 2);
        assert!(l.insert(&[BigInt::from(4), BigInt::from(0)]));
        assert!(l.insert(&[BigInt::from(6), BigInt::from(0)]));
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&[BigInt::from(2), BigInt::from(0)]));
        assert!(!l.contains(&[BigInt::from(1), BigInt::from(0)]));
        assert!(!l.insert(&[BigInt::from(8), BigInt::from(0)]));
    }

    #[test]
    fn tlmat_round_trip() {
        let m = zm(&[&[0, -3], &[5, 0]]);
        let s = m.to_tlmat();
        assert_eq!(s, "tlmat 2 2 Z\n1 2 -3\n2 1 5\n");
        assert_eq!(RingMatrix::read_tlmat(Integers, s.as_bytes()).unwrap(), m);
    }
}
