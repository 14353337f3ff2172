//! Planar (n,n)-diagrams, Jones words, and the integer sequences attached to them.
//!
//! Endpoints are stored by position: `0..n` are L1..Ln and `n..2n` are R1..Rn,
//! so position order is the label order L1 < ... < Ln < R1 < ... < Rn.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    L(usize),
    R(usize),
}

impl Endpoint {
    fn position(self, n: usize) -> usize {
        match self {
            Endpoint::L(i) => i - 1,
            Endpoint::R(i) => n + i - 1,
        }
    }

    fn from_position(p: usize, n: usize) -> Self {
        if p < n {
            Endpoint::L(p + 1)
        } else {
            Endpoint::R(p - n + 1)
        }
    }

    fn parse(s: &str, n: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("bad endpoint {s:?}"));
        let (side, idx) = s.split_at(1.min(s.len()));
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 || i > n {
            return Err(bad());
        }
        match side {
            "L" => Ok(Endpoint::L(i)),
            "R" => Ok(Endpoint::R(i)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::L(i) => write!(f, "L{i}"),
            Endpoint::R(i) => write!(f, "R{i}"),
        }
    }
}

/// A noncrossing perfect matching of L1..Ln, R1..Rn.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    n: usize,
    partner: Vec<usize>,
}

/// Position in the cyclic order L1..Ln, Rn..R1.
fn cyclic(p: usize, n: usize) -> usize {
    if p < n {
        p
    } else {
        3 * n - 1 - p
    }
}

impl PlanarDiagram {
    pub fn from_pairs(n: usize, pairs: &[(Endpoint, Endpoint)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        if pairs.len() != n {
            return Err(Error::InvariantViolation(format!("expected {n} pairs")));
        }
        for &(x, y) in pairs {
            let (p, q) = (x.position(n), y.position(n));
            if p == q || partner[p] != usize::MAX || partner[q] != usize::MAX {
                return Err(Error::InvariantViolation("not a perfect matching".into()));
            }
            partner[p] = q;
            partner[q] = p;
        }
        let d = PlanarDiagram { n, partner };
        if !d.is_noncrossing() {
            return Err(Error::InvariantViolation("pairs cross".into()));
        }
        Ok(d)
    }

    fn is_noncrossing(&self) -> bool {
        let n = self.n;
        let chords: Vec<(usize, usize)> = (0..2 * n)
            .filter(|&p| p < self.partner[p])
            .map(|p| {
                let (x, y) = (cyclic(p, n), cyclic(self.partner[p], n));
                (x.min(y), x.max(y))
            })
            .collect();
        chords.iter().all(|&(a, b)| {
            chords
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical pair list: smaller label first, pairs sorted.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        (0..2 * self.n)
            .filter(|&p| p < self.partner[p])
            .map(|p| {
                (
                    Endpoint::from_position(p, self.n),
                    Endpoint::from_position(self.partner[p], self.n),
                )
            })
            .collect()
    }

    pub fn partner_of(&self, e: Endpoint) -> Endpoint {
        Endpoint::from_position(self.partner[e.position(self.n)], self.n)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|p| self.partner[p] == p + self.n)
    }

    /// Whether the diagram has a right cup joining R_i and R_{i+1}.
    pub fn has_right_cup(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.partner[self.n + i - 1] == self.n + i
    }

    /// The diagram in n+1 strands with a new bottom strand L1-R1 (the shift sigma).
    pub fn shift_up(&self) -> PlanarDiagram {
        let n = self.n;
        let m = n + 1;
        let map = |p: usize| if p < n { p + 1 } else { p + 2 };
        let mut partner = vec![0; 2 * m];
        partner[0] = m;
        partner[m] = 0;
        for p in 0..2 * n {
            partner[map(p)] = map(self.partner[p]);
        }
        PlanarDiagram { n: m, partner }
    }
}

impl PartialOrd for PlanarDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlanarDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.pairs().cmp(&other.pairs()))
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(x, y)| format!("{x}-{y}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    pairs: Vec<[String; 2]>,
}

impl Serialize for PlanarDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.n,
            pairs: self
                .pairs()
                .iter()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarDiagram {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        let pairs = j
            .pairs
            .iter()
            .map(|[x, y]| Ok((Endpoint::parse(x, j.n)?, Endpoint::parse(y, j.n)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        PlanarDiagram::from_pairs(j.n, &pairs).map_err(serde::de::Error::custom)
    }
}

pub fn identity_diagram(n: usize) -> PlanarDiagram {
    let partner = (0..2 * n).map(|p| (p + n) % (2 * n)).collect();
    PlanarDiagram { n, partner }
}

pub fn generator_diagram(n: usize, i: usize) -> Result<PlanarDiagram> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut d = identity_diagram(n);
    let (l, r) = (i - 1, n + i - 1);
    d.partner[l] = l + 1;
    d.partner[l + 1] = l;
    d.partner[r] = r + 1;
    d.partner[r + 1] = r;
    Ok(d)
}

/// Glue `d`'s right boundary to `e`'s left boundary; returns the result and
/// the number of closed loops removed.
pub fn compose(d: &PlanarDiagram, e: &PlanarDiagram) -> Result<(PlanarDiagram, usize)> {
    if d.n != e.n {
        return Err(Error::SizeMismatch(format!("compose {} with {}", d.n, e.n)));
    }
    Ok(compose_unchecked(d, e))
}

fn compose_unchecked(d: &PlanarDiagram, e: &PlanarDiagram) -> (PlanarDiagram, usize) {
    let n = d.n;
    let mut seen = vec![false; n];
    let mut partner = vec![usize::MAX; 2 * n];
    // walk from an outer endpoint; sides: false = d, true = e
    let trace = |mut in_e: bool, mut p: usize, seen: &mut Vec<bool>| -> usize {
        loop {
            if !in_e {
                let q = d.partner[p];
                if q < n {
                    return q;
                }
                seen[q - n] = true;
                in_e = true;
                p = q - n;
            } else {
                let q = e.partner[p];
                if q >= n {
                    return q;
                }
                seen[q] = true;
                in_e = false;
                p = q + n;
            }
        }
    };
    for start in 0..2 * n {
        if partner[start] != usize::MAX {
            continue;
        }
        let end = if start < n {
            trace(false, start, &mut seen)
        } else {
            trace(true, start, &mut seen)
        };
        partner[start] = end;
        partner[end] = start;
    }
    let mut loops = 0;
    for m in 0..n {
        if seen[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            seen[cur] = true;
            let left = e.partner[cur];
            seen[left] = true;
            cur = d.partner[n + left] - n;
            if cur == m {
                break;
            }
        }
    }
    (PlanarDiagram { n, partner }, loops)
}

/// All diagrams on n strands in canonical-serialization order.
pub fn enumerate_diagrams(n: usize) -> Vec<PlanarDiagram> {
    fn go(lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, rest: &[(usize, usize)]) {
        // match cyclic positions lo..hi, then continue with pending intervals
        if lo >= hi {
            match rest.split_first() {
                None => out.push(cur.clone()),
                Some((&(a, b), tail)) => go(a, b, cur, out, tail),
            }
            return;
        }
        let mut j = lo + 1;
        while j < hi {
            cur[lo] = j;
            cur[j] = lo;
            let mut pending = vec![(j + 1, hi)];
            pending.extend_from_slice(rest);
            go(lo + 1, j, cur, out, &pending);
            j += 2;
        }
    }
    let mut raw = Vec::new();
    go(0, 2 * n, &mut vec![0; 2 * n], &mut raw, &[]);
    // cyclic position c back to storage position
    let pos = |c: usize| if c < n { c } else { 3 * n - 1 - c };
    let mut out: Vec<PlanarDiagram> = raw
        .into_iter()
        .map(|m| {
            let mut partner = vec![0; 2 * n];
            for c in 0..2 * n {
                partner[pos(c)] = pos(m[c]);
            }
            PlanarDiagram { n, partner }
        })
        .collect();
    out.sort();
    out
}

/// Extended naturals: subscripts with the identity's infinite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subscript {
    Finite(usize),
    Infinite,
}

impl Subscript {
    pub fn finite(self) -> Option<usize> {
        match self {
            Subscript::Finite(k) => Some(k),
            Subscript::Infinite => None,
        }
    }
}

impl fmt::Display for Subscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subscript::Finite(k) => write!(f, "{k}"),
            Subscript::Infinite => write!(f, "inf"),
        }
    }
}

/// A word `(U_{a_k}..U_{b_k}) ... (U_{a_1}..U_{b_1})` in Jones normal form.
/// `a` and `b` are stored as `(a_k, ..., a_1)` and `(b_k, ..., b_1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JonesWord {
    n: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl JonesWord {
    pub fn new(n: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvariantViolation(format!("not a Jones word: {m}")));
        if a.len() != b.len() {
            return bad("segment lists differ in length");
        }
        let dec = |s: &[usize]| s.windows(2).all(|w| w[0] > w[1]);
        if !dec(&a) || !dec(&b) {
            return bad("subscripts must decrease");
        }
        if a.iter().chain(&b).any(|&x| x == 0 || x >= n) {
            return bad("subscript out of range");
        }
        if a.iter().zip(&b).any(|(x, y)| y < x) {
            return bad("b_i < a_i");
        }
        Ok(JonesWord { n, a, b })
    }

    pub fn identity(n: usize) -> Self {
        JonesWord { n, a: vec![], b: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn segments(&self) -> usize {
        self.a.len()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_empty()
    }

    pub fn letters(&self) -> Vec<usize> {
        self.a
            .iter()
            .zip(&self.b)
            .flat_map(|(&x, &y)| x..=y)
            .collect()
    }

    pub fn index(&self) -> Subscript {
        self.a.last().map_or(Subscript::Infinite, |&x| Subscript::Finite(x))
    }

    pub fn terminus(&self) -> Subscript {
        self.b.last().map_or(Subscript::Infinite, |&x| Subscript::Finite(x))
    }

    /// The shifted word in n+1 strands, every subscript raised by one.
    pub fn shift_up(&self) -> JonesWord {
        JonesWord {
            n: self.n + 1,
            a: self.a.iter().map(|x| x + 1).collect(),
            b: self.b.iter().map(|x| x + 1).collect(),
        }
    }

    fn order_key(&self) -> (usize, Vec<usize>) {
        (self.a.len(), self.a.iter().chain(&self.b).copied().collect())
    }
}

impl PartialOrd for JonesWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Basis order: number of segments, then the flattened (a, b) lexicographically.
impl Ord for JonesWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.order_key().cmp(&other.order_key()))
    }
}

impl fmt::Display for JonesWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (&x, &y) in self.a.iter().zip(&self.b) {
            let seg: Vec<String> = (x..=y).map(|i| format!("U{i}")).collect();
            write!(f, "({})", seg.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ArcKind {
    Left,
    Through,
    Right,
}

/// Read a diagram as a Jones word by the row scan: in each gap between
/// heights r and r+1 the crossing arcs are listed left to right and paired
/// off; chains of pairs running upward become the segments.
pub fn diagram_to_jones_word(d: &PlanarDiagram) -> JonesWord {
    let n = d.n;
    // arcs as (kind, low height, high height, left height for through strands)
    struct Arc_ {
        kind: ArcKind,
        lo: usize,
        hi: usize,
        left: usize,
        up: bool,
    }
    let mut arcs = Vec::new();
    for p in 0..2 * n {
        let q = d.partner[p];
        if p > q {
            continue;
        }
        let h = |x: usize| if x < n { x + 1 } else { x - n + 1 };
        let (hp, hq) = (h(p), h(q));
        let kind = if q < n {
            ArcKind::Left
        } else if p >= n {
            ArcKind::Right
        } else {
            ArcKind::Through
        };
        arcs.push(Arc_ {
            kind,
            lo: hp.min(hq),
            hi: hp.max(hq),
            left: hp,
            up: hq > hp,
        });
    }
    // segment: (row, left arc id, right arc id)
    let mut rows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for r in 1..n {
        let mut crossing: Vec<usize> = (0..arcs.len())
            .filter(|&i| arcs[i].lo <= r && r < arcs[i].hi)
            .collect();
        crossing.sort_by_key(|&i| {
            let a = &arcs[i];
            let span = (a.hi - a.lo) as i64;
            match a.kind {
                ArcKind::Left => (0, span),
                ArcKind::Through if a.up => (1, -(a.left as i64)),
                ArcKind::Through => (1, a.left as i64),
                ArcKind::Right => (2, -span),
            }
        });
        rows[r] = crossing.chunks(2).map(|c| (c[0], c[1])).collect();
    }
    let mut segs: Vec<(usize, usize)> = Vec::new(); // (start row, end row)
    for r in 1..n {
        for &(left, _) in &rows[r] {
            let continues = r > 1 && rows[r - 1].iter().any(|&(_, rt)| rt == left);
            if continues {
                continue;
            }
            let (mut row, mut cur) = (r, left);
            loop {
                let right = rows[row].iter().find(|s| s.0 == cur).unwrap().1;
                match rows.get(row + 1).and_then(|nx| nx.iter().find(|s| s.0 == right)) {
                    Some(_) => {
                        row += 1;
                        cur = right;
                    }
                    None => break,
                }
            }
            segs.push((r, row));
        }
    }
    segs.sort_by(|x, y| y.1.cmp(&x.1));
    JonesWord {
        n,
        a: segs.iter().map(|s| s.0).collect(),
        b: segs.iter().map(|s| s.1).collect(),
    }
}

/// Compose the generator diagrams of a word; a Jones word never produces loops.
pub fn jones_word_to_diagram(w: &JonesWord) -> Result<PlanarDiagram> {
    let mut d = identity_diagram(w.n);
    for i in w.letters() {
        let (next, loops) = compose_unchecked(&d, &generator_diagram(w.n, i)?);
        if loops != 0 {
            return Err(Error::InvariantViolation(format!("word {w} produced loops")));
        }
        d = next;
    }
    Ok(d)
}

pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// Dyck paths of length 2n whose first peak is at even height.
pub fn fine_number(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    // ways[h] = number of ways to finish from height h with `left` steps remaining
    let finish = |h: usize, left: usize| -> u128 {
        let mut ways = vec![0u128; left + 2];
        ways[0] = 1;
        for _ in 0..left {
            let mut next = vec![0u128; left + 2];
            for (k, &w) in ways.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                if k + 1 < next.len() {
                    next[k + 1] += w;
                }
                if k > 0 {
                    next[k - 1] += w;
                }
            }
            ways = next;
        }
        ways.get(h).copied().unwrap_or(0)
    };
    // first peak at height h: h up-steps then a down-step, then any path from h-1 to 0
    (1..=n)
        .filter(|h| h % 2 == 0)
        .map(|h| finish(h - 1, 2 * n - h - 1))
        .sum()
}

/// Decreasing sequences n > a_1 > ... > a_r > 0 with n - a_1 odd; the empty
/// sequence is included iff n is odd.
pub fn enumerate_jacobsthal_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    if n == 0 {
        return out;
    }
    let top = n - 1;
    for mask in 0u64..(1u64 << top) {
        let seq: Vec<usize> = (1..=top).rev().filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let ok = match seq.first() {
            Some(&a1) => (n - a1) % 2 == 1,
            None => n % 2 == 1,
        };
        if ok {
            out.push(seq);
        }
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| y.cmp(x)));
    out
}

pub fn jacobsthal_number(n: usize) -> u128 {
    enumerate_jacobsthal_sequences(n).len() as u128
}

/// Diagrams of TL_n in Jones-word order with a cached multiplication table.
#[derive(Debug)]
pub struct DiagramTable {
    pub n: usize,
    pub diagrams: Vec<PlanarDiagram>,
    pub words: Vec<JonesWord>,
    pub identity: usize,
    index: HashMap<PlanarDiagram, usize>,
    product: OnceLock<Vec<(u32, u32)>>,
}

impl DiagramTable {
    fn build(n: usize) -> Self {
        let mut pairs: Vec<(JonesWord, PlanarDiagram)> = enumerate_diagrams(n)
            .into_iter()
            .map(|d| (diagram_to_jones_word(&d), d))
            .collect();
        pairs.sort_by(|x, y| x.0.cmp(&y.0));
        let (words, diagrams): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let index: HashMap<PlanarDiagram, usize> =
            diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let identity = index[&identity_diagram(n)];
        DiagramTable { n, diagrams, words, identity, index, product: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn index_of(&self, d: &PlanarDiagram) -> usize {
        self.index[d]
    }

    /// Index of the product diagram and its loop count.
    pub fn mul(&self, i: usize, j: usize) -> (usize, usize) {
        let c = self.len();
        let table = self.product.get_or_init(|| {
            let mut t = Vec::with_capacity(c * c);
            for x in &self.diagrams {
                for y in &self.diagrams {
                    let (z, loops) = compose_unchecked(x, y);
                    t.push((self.index[&z] as u32, loops as u32));
                }
            }
            t
        });
        let (k, l) = table[i * c + j];
        (k as usize, l as usize)
    }

    pub fn generator(&self, i: usize) -> usize {
        self.index[&generator_diagram(self.n, i).expect("generator in range")]
    }
}

/// Shared table for TL_n.
pub fn diagram_table(n: usize) -> Arc<DiagramTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DiagramTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(DiagramTable::build(n));
    cache.lock().unwrap().entry(n).or_insert(t).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Endpoint::{L, R};

    pub(crate) fn sample_x() -> PlanarDiagram {
        PlanarDiagram::from_pairs(
            5,
            &[(L(1), L(2)), (L(4), L(5)), (L(3), R(1)), (R(2), R(3)), (R(4), R(5))],
        )
        .unwrap()
    }

    pub(crate) fn sample_y() -> PlanarDiagram {
        PlanarDiagram::from_pairs(
            5,
            &[(L(2), L(3)), (L(1), L(4)), (L(5), R(1)), (R(2), R(3)), (R(4), R(5))],
        )
        .unwrap()
    }

    #[test]
    fn identity_and_generators() {
        assert!(identity_diagram(0).pairs().is_empty());
        assert_eq!(identity_diagram(1).pairs(), vec![(L(1), R(1))]);
        assert_eq!(generator_diagram(2, 1).unwrap().pairs(), vec![(L(1), L(2)), (R(1), R(2))]);
        assert_eq!(
            generator_diagram(3, 2).unwrap().pairs(),
            vec![(L(1), R(1)), (L(2), L(3)), (R(2), R(3))]
        );
        assert!(generator_diagram(3, 3).is_err());
        assert!(generator_diagram(3, 0).is_err());
    }

    #[test]
    fn compose_relations() {
        let u1 = generator_diagram(2, 1).unwrap();
        assert_eq!(compose(&u1, &u1).unwrap(), (u1.clone(), 1));
        let (u1, u2) = (generator_diagram(3, 1).unwrap(), generator_diagram(3, 2).unwrap());
        let (p, l1) = compose(&u1, &u2).unwrap();
        let (p, l2) = compose(&p, &u1).unwrap();
        assert_eq!((p, l1 + l2), (u1, 0));
        assert!(compose(&identity_diagram(2), &identity_diagram(3)).is_err());
    }

    #[test]
    fn sample_product_has_one_loop() {
        let (_, loops) = compose(&sample_x(), &sample_y()).unwrap();
        assert_eq!(loops, 1);
    }

    #[test]
    fn sample_words() {
        let x = diagram_to_jones_word(&sample_x());
        assert_eq!((x.a(), x.b()), (&[4, 1][..], &[4, 2][..]));
        assert_eq!(x.to_string(), "(U4)(U1 U2)");
        let y = diagram_to_jones_word(&sample_y());
        assert_eq!((y.a(), y.b()), (&[2, 1][..], &[4, 2][..]));
        assert_eq!(jones_word_to_diagram(&x).unwrap(), sample_x());
        assert_eq!(jones_word_to_diagram(&y).unwrap(), sample_y());
        assert!(diagram_to_jones_word(&identity_diagram(4)).is_identity());
        assert_eq!(jones_word_to_diagram(&JonesWord::identity(4)).unwrap(), identity_diagram(4));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_diagrams(0).len(), 1);
        assert_eq!(enumerate_diagrams(3).len(), 5);
        assert_eq!(enumerate_diagrams(4).len(), 14);
        assert_eq!(catalan(4), 14);
        assert_eq!(fine_number(2), 1);
        assert_eq!(jacobsthal_number(4), 5);
    }

    #[test]
    fn jacobsthal_sequences() {
        assert_eq!(enumerate_jacobsthal_sequences(2), vec![vec![1]]);
        assert_eq!(enumerate_jacobsthal_sequences(1), vec![Vec::<usize>::new()]);
        assert_eq!(
            enumerate_jacobsthal_sequences(4),
            vec![vec![3], vec![1], vec![3, 2], vec![3, 1], vec![3, 2, 1]]
        );
    }

    #[test]
    fn json_round_trip() {
        let s = serde_json::to_string(&sample_x()).unwrap();
        assert_eq!(
            s,
            r#"{"n":5,"pairs":[["L1","L2"],["L3","R1"],["L4","L5"],["R2","R3"],["R4","R5"]]}"#
        );
        let back: PlanarDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, sample_x());
        assert!(serde_json::from_str::<PlanarDiagram>(
            r#"{"n":2,"pairs":[["L1","R2"],["L2","R1"]]}"#
        )
        .is_err());
    }

    #[test]
    fn shift_up_adds_bottom_strand() {
        let u1 = generator_diagram(2, 1).unwrap();
        assert_eq!(u1.shift_up(), generator_diagram(3, 2).unwrap());
    }

    #[test]
    fn table_order_starts_with_identity() {
        let t = diagram_table(3);
        let words: Vec<String> = t.words.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["1", "(U1)", "(U1 U2)", "(U2)", "(U2)(U1)"]);
        assert_eq!(t.identity, 0);
    }
}
