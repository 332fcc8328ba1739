//! Isomorphism invariants for small graphs by exhaustive relabeling.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{triple_rank, Hypergraph3};

/// Largest vertex count accepted by the permutation-based routines.
pub const EXACT_CAP: usize = 8;

/// Calls `f` once for every permutation of `0..n` (Heap's algorithm).
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub(crate) fn small_bits(g: &Hypergraph3) -> u64 {
    g.words().first().copied().unwrap_or(0)
}

fn image_bits(edges: &[[usize; 3]], perm: &[usize]) -> u64 {
    edges.iter().fold(0u64, |acc, &[a, b, c]| {
        acc | 1 << triple_rank(perm[a], perm[b], perm[c])
    })
}

fn check_cap(what: &'static str, n: usize) -> Result<()> {
    if n > EXACT_CAP {
        Err(Error::TooLarge {
            what,
            n,
            cap: EXACT_CAP,
        })
    } else {
        Ok(())
    }
}

/// Byte string identifying the isomorphism class of a graph on at most
/// [`EXACT_CAP`] vertices: the vertex count followed by the smallest edge
/// bitmap over all relabelings (little-endian).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Hypergraph3 {
        let n = self.0[0] as usize;
        let mut raw = [0u8; 8];
        raw.copy_from_slice(&self.0[1..9]);
        let bits = u64::from_le_bytes(raw);
        let words = if n >= 3 { vec![bits] } else { vec![] };
        Hypergraph3::from_words(n, words).expect("canonical keys hold valid bitmaps")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Canonical key by full permutation minimization.
pub fn canonical_key(g: &Hypergraph3) -> Result<CanonicalKey> {
    check_cap("canonical_key", g.n())?;
    let edges: Vec<_> = g.edges().collect();
    let mut best = small_bits(g);
    for_each_permutation(g.n(), |perm| {
        let img = image_bits(&edges, perm);
        if img < best {
            best = img;
        }
    });
    let mut key = Vec::with_capacity(9);
    key.push(g.n() as u8);
    key.extend_from_slice(&best.to_le_bytes());
    Ok(CanonicalKey(key))
}

/// Minimum number of triple toggles turning `g` into a graph isomorphic to
/// `h`. Exact: every bijection is tried.
pub fn edit_distance(g: &Hypergraph3, h: &Hypergraph3) -> Result<usize> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch(g.n(), h.n()));
    }
    check_cap("edit_distance", g.n())?;
    let target = small_bits(g);
    let edges: Vec<_> = h.edges().collect();
    let mut best = u32::MAX;
    for_each_permutation(h.n(), |perm| {
        let d = (image_bits(&edges, perm) ^ target).count_ones();
        best = best.min(d);
    });
    Ok(best as usize)
}
