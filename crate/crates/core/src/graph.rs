//! 3-uniform hypergraphs stored as a membership bitmap over all triples.
//!
//! Triples are indexed by colexicographic rank: the sorted triple `{a < b < c}`
//! sits at bit `C(c,3) + C(b,2) + a`. The rank does not depend on `n`, so the
//! bitmap of a graph on `n` vertices is a prefix of the bitmap of the same
//! graph viewed on `n + 1` vertices. Serialized bitmaps rely on this layout.

use std::fmt;

use crate::error::{Error, Result};

pub type Triple = [usize; 3];

#[inline]
pub(crate) const fn binom2(k: usize) -> usize {
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}

#[inline]
pub(crate) const fn binom3(k: usize) -> usize {
    if k < 3 {
        0
    } else {
        k * (k - 1) * (k - 2) / 6
    }
}

/// Number of triples on `n` vertices.
pub const fn triple_count(n: usize) -> usize {
    binom3(n)
}

/// Colex rank of a triple of distinct vertices given in any order.
#[inline]
pub fn triple_rank(a: usize, b: usize, c: usize) -> usize {
    let [a, b, c] = sort3(a, b, c);
    binom3(c) + binom2(b) + a
}

/// Inverse of [`triple_rank`].
pub fn triple_unrank(rank: usize) -> Triple {
    let mut c = 2;
    while binom3(c + 1) <= rank {
        c += 1;
    }
    let rest = rank - binom3(c);
    let mut b = 1;
    while binom2(b + 1) <= rest {
        b += 1;
    }
    [rest - binom2(b), b, c]
}

#[inline]
pub(crate) fn pair_rank(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    binom2(v) + u
}

#[inline]
fn sort3(a: usize, b: usize, c: usize) -> Triple {
    let mut t = [a, b, c];
    if t[0] > t[1] {
        t.swap(0, 1);
    }
    if t[1] > t[2] {
        t.swap(1, 2);
    }
    if t[0] > t[1] {
        t.swap(0, 1);
    }
    t
}

/// Colex-ordered iterator over all triples of `0..n`.
pub fn all_triples(n: usize) -> impl Iterator<Item = Triple> {
    (2..n).flat_map(|c| (1..c).flat_map(move |b| (0..b).map(move |a| [a, b, c])))
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Read access to triple membership. Implemented by [`Hypergraph3`] and by
/// the packed small graphs used inside the exhaustive search.
pub trait TripleSet {
    fn vertex_count(&self) -> usize;
    /// Membership of `{a,b,c}`; the three vertices are distinct and in range.
    fn has(&self, a: usize, b: usize, c: usize) -> bool;
}

/// An `n`-vertex 3-graph. Immutable once built; derived graphs are new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    n: usize,
    words: Vec<u64>,
}

impl Hypergraph3 {
    /// Builds a graph from explicit triples (any vertex order, duplicates
    /// ignored).
    pub fn new<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut g = Self::empty(n);
        for [a, b, c] in triples {
            g.check_triple(a, b, c)?;
            g.set(triple_rank(a, b, c), true);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: vec![0; words_for(triple_count(n))],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for r in 0..triple_count(n) {
            g.set(r, true);
        }
        g
    }

    /// Graph whose edges are exactly the triples accepted by `keep`
    /// (called with sorted triples).
    pub fn from_fn(n: usize, mut keep: impl FnMut(usize, usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for (r, [a, b, c]) in all_triples(n).enumerate() {
            if keep(a, b, c) {
                g.set(r, true);
            }
        }
        g
    }

    /// Rebuilds a graph from raw bitmap words. Bits beyond `C(n,3)` must be
    /// clear.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        let bits = triple_count(n);
        if words.len() != words_for(bits) {
            return Err(Error::InvalidParameter(format!(
                "bitmap for n = {n} needs {} words, got {}",
                words_for(bits),
                words.len()
            )));
        }
        if !bits.is_multiple_of(64) {
            if let Some(&last) = words.last() {
                if last >> (bits % 64) != 0 {
                    return Err(Error::InvalidParameter(
                        "bitmap has bits set beyond the last triple".into(),
                    ));
                }
            }
        }
        Ok(Self { n, words })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub(crate) fn get(&self, rank: usize) -> bool {
        self.words[rank / 64] >> (rank % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, rank: usize, on: bool) {
        let (w, b) = (rank / 64, rank % 64);
        if on {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SamePair(u));
        }
        Ok(())
    }

    fn check_triple(&self, a: usize, b: usize, c: usize) -> Result<()> {
        for v in [a, b, c] {
            self.check_vertex(v)?;
        }
        if a == b || a == c {
            return Err(Error::RepeatedVertex(a));
        }
        if b == c {
            return Err(Error::RepeatedVertex(b));
        }
        Ok(())
    }

    /// Membership test; vertex order does not matter. Degenerate or
    /// out-of-range triples are never edges.
    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        a != b && a != c && b != c && a < self.n && b < self.n && c < self.n && self.has(a, b, c)
    }

    /// Edges in colex order.
    pub fn edges(&self) -> impl Iterator<Item = Triple> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(triple_unrank(wi * 64 + b))
            })
        })
    }

    /// `d(u,v)`: number of edges containing both `u` and `v`.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_pair(u, v)?;
        Ok(self.codegree_unchecked(u, v))
    }

    pub(crate) fn codegree_unchecked(&self, u: usize, v: usize) -> usize {
        (0..self.n)
            .filter(|&w| w != u && w != v && self.has(u, v, w))
            .count()
    }

    /// `Γ(u,v)`: the vertices `w` with `uvw` an edge, ascending.
    pub fn neighborhood(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_pair(u, v)?;
        Ok((0..self.n)
            .filter(|&w| w != u && w != v && self.has(u, v, w))
            .collect())
    }

    /// All pair codegrees, indexed by colex pair rank.
    pub fn codegrees(&self) -> Vec<usize> {
        let mut d = vec![0; binom2(self.n)];
        for [a, b, c] in self.edges() {
            d[pair_rank(a, b)] += 1;
            d[pair_rank(a, c)] += 1;
            d[pair_rank(b, c)] += 1;
        }
        d
    }

    /// `δ₂(G)`. Defined as 0 when the graph has fewer than two vertices.
    pub fn min_codegree(&self) -> usize {
        self.codegrees().into_iter().min().unwrap_or(0)
    }

    /// A pair attaining `δ₂(G)` (first in colex order).
    pub fn min_codegree_pair(&self) -> Option<(usize, usize)> {
        let d = self.codegrees();
        let mut best: Option<((usize, usize), usize)> = None;
        for v in 1..self.n {
            for u in 0..v {
                let c = d[pair_rank(u, v)];
                if best.is_none_or(|(_, b)| c < b) {
                    best = Some(((u, v), c));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// `d(x)`: number of edges containing `x`.
    pub fn degree(&self, x: usize) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.degree_unchecked(x))
    }

    fn degree_unchecked(&self, x: usize) -> usize {
        let mut d = 0;
        for v in 0..self.n {
            for u in 0..v {
                if u != x && v != x && self.has(u, v, x) {
                    d += 1;
                }
            }
        }
        d
    }

    /// `δ₁(G)`; 0 for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n)
            .map(|x| self.degree_unchecked(x))
            .min()
            .unwrap_or(0)
    }

    /// The link graph `G_x`.
    pub fn link(&self, x: usize) -> Result<LinkGraph> {
        self.check_vertex(x)?;
        let mut pairs = vec![0u64; words_for(binom2(self.n))];
        for v in 0..self.n {
            for u in 0..v {
                if u != x && v != x && self.has(u, v, x) {
                    let r = pair_rank(u, v);
                    pairs[r / 64] |= 1 << (r % 64);
                }
            }
        }
        Ok(LinkGraph {
            owner: x,
            n: self.n,
            pairs,
        })
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        for w in g.words.iter_mut() {
            *w = !*w;
        }
        let bits = triple_count(self.n);
        if !bits.is_multiple_of(64) {
            if let Some(last) = g.words.last_mut() {
                *last &= (1u64 << (bits % 64)) - 1;
            }
        }
        g
    }

    /// True iff no edge has all three vertices in `set`.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut s: Vec<usize> = set.iter().copied().filter(|&v| v < self.n).collect();
        s.sort_unstable();
        s.dedup();
        for (k, &c) in s.iter().enumerate().skip(2) {
            for (j, &b) in s[..k].iter().enumerate().skip(1) {
                for &a in &s[..j] {
                    if self.has(a, b, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Copy with the given triple present.
    pub fn with_edge(&self, [a, b, c]: Triple) -> Result<Self> {
        self.check_triple(a, b, c)?;
        let mut g = self.clone();
        g.set(triple_rank(a, b, c), true);
        Ok(g)
    }

    /// Copy with the given triple absent.
    pub fn without_edge(&self, [a, b, c]: Triple) -> Result<Self> {
        self.check_triple(a, b, c)?;
        let mut g = self.clone();
        g.set(triple_rank(a, b, c), false);
        Ok(g)
    }

    /// Image under the vertex map `v -> perm[v]`, which must be a permutation
    /// of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch(perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        let mut g = Self::empty(self.n);
        for [a, b, c] in self.edges() {
            g.set(triple_rank(perm[a], perm[b], perm[c]), true);
        }
        Ok(g)
    }

    /// Sub-hypergraph induced on `vertices`, relabeled `0..k` in the given
    /// order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let k = vertices.len();
        Ok(Self::from_fn(k, |a, b, c| {
            self.contains(vertices[a], vertices[b], vertices[c])
        }))
    }

    /// Number of triples on which the two labeled graphs disagree.
    pub fn symmetric_difference(&self, other: &Self) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }
}

impl TripleSet for Hypergraph3 {
    #[inline]
    fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn has(&self, a: usize, b: usize, c: usize) -> bool {
        self.get(triple_rank(a, b, c))
    }
}

impl fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph3(n={}, {{", self.n)?;
        for (i, [a, b, c]) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}{b}{c}")?;
        }
        write!(f, "}})")
    }
}

/// The link graph `G_x`: pairs `uv` with `uvx` an edge of the owner graph.
/// Vertices range over `0..n`; the owner vertex is isolated.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinkGraph {
    owner: usize,
    n: usize,
    pairs: Vec<u64>,
}

impl LinkGraph {
    pub fn owner(&self) -> usize {
        self.owner
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let r = pair_rank(u, v);
        self.pairs[r / 64] >> (r % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.contains(u, v)).count()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.contains(u, v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Pairs in colex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            (0..v)
                .filter(move |&u| self.contains(u, v))
                .map(move |u| (u, v))
        })
    }

    /// Lexicographically first triangle `(a, b, c)` with `a < b < c`.
    pub fn first_triangle(&self) -> Option<[usize; 3]> {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.contains(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.contains(a, c) && self.contains(b, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// True iff no pair of `set` is a link edge.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.contains(u, v)))
    }
}
