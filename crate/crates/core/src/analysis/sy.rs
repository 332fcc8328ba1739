//! The pair sets `S_y` around a triangle of a `K4`-free link.
//!
//! Fix `S = {a, b, c, x}` with `abx, bcx, acx` edges and `abc` not an edge.
//! For another vertex `y`, `S_y` is the set of pairs `p ⊆ S` with `p ∪ {y}`
//! an edge. If no `K4` passes through `x`, `S_y` lies inside one of seven
//! sets, and it does so exactly when it avoids the three triangles
//! `{ab, ax, bx}`, `{ac, ax, cx}`, `{bc, bx, cx}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Hypergraph3;

pub const AB: u8 = 1;
pub const AC: u8 = 2;
pub const BC: u8 = 4;
pub const AX: u8 = 8;
pub const BX: u8 = 16;
pub const CX: u8 = 32;

/// Names of the six pairs in bit order.
pub const PAIR_NAMES: [&str; 6] = ["ab", "ac", "bc", "ax", "bx", "cx"];

/// Pairs completing `{x, a, b}`, `{x, a, c}`, `{x, b, c}` to a `K4` with `y`.
pub const FORCING: [u8; 3] = [AB | AX | BX, AC | AX | CX, BC | BX | CX];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SyLabel {
    S1a,
    S1b,
    S1c,
    S2a,
    S2b,
    S2c,
    S3,
    /// A proper subset of one of the seven sets.
    SubsetOnly,
    /// Contains a forcing triangle, so `{x, y}` plus two of `a, b, c` span a
    /// `K4`.
    Violation,
}

impl SyLabel {
    /// The seven maximal sets with their labels.
    pub const SETS: [(SyLabel, u8); 7] = [
        (SyLabel::S1a, BX | CX | AB | AC),
        (SyLabel::S1b, AX | CX | AB | BC),
        (SyLabel::S1c, AX | BX | AC | BC),
        (SyLabel::S2a, AB | AC | BC | AX),
        (SyLabel::S2b, AB | AC | BC | BX),
        (SyLabel::S2c, AB | AC | BC | CX),
        (SyLabel::S3, AX | BX | CX),
    ];

    /// Label of a pair set given as a bit mask.
    pub fn of_mask(mask: u8) -> SyLabel {
        if let Some(&(label, _)) = Self::SETS.iter().find(|&&(_, s)| s == mask) {
            return label;
        }
        if FORCING.iter().copied().any(|t| mask & t == t) {
            SyLabel::Violation
        } else {
            SyLabel::SubsetOnly
        }
    }
}

/// `S_y` with its label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyClass {
    pub label: SyLabel,
    /// Bit mask over `ab, ac, bc, ax, bx, cx`.
    pub mask: u8,
}

impl SyClass {
    pub fn pairs(&self) -> Vec<&'static str> {
        (0..6)
            .filter(|i| self.mask >> i & 1 == 1)
            .map(|i| PAIR_NAMES[i])
            .collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

impl fmt::Display for SyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {{{}}}", self.label, self.pairs().join(","))
    }
}

/// `S_y` as a bit mask, with no precondition on `S`.
pub(crate) fn sy_mask(g: &Hypergraph3, [a, b, c, x]: [usize; 4], y: usize) -> u8 {
    [(a, b), (a, c), (b, c), (a, x), (b, x), (c, x)]
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| g.contains(u, v, y))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Classifies `S_y` for `S = (a, b, c, x)`.
///
/// ```
/// use h3cover::{classify_sy, Hypergraph3, SyLabel};
/// // a b c x y = 0 1 2 3 4
/// let g = Hypergraph3::new(5, [[0, 1, 3], [1, 2, 3], [0, 2, 3], [0, 3, 4], [1, 3, 4], [2, 3, 4]])?;
/// assert_eq!(classify_sy(&g, [0, 1, 2, 3], 4)?.label, SyLabel::S3);
/// # Ok::<(), h3cover::Error>(())
/// ```
pub fn classify_sy(g: &Hypergraph3, s: [usize; 4], y: usize) -> Result<SyClass> {
    let n = g.n();
    let [a, b, c, x] = s;
    for v in s.into_iter().chain([y]) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut all = [a, b, c, x, y];
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("a, b, c, x, y must be distinct".into()));
    }
    if !(g.contains(a, b, x) && g.contains(b, c, x) && g.contains(a, c, x)) {
        return Err(Error::Precondition("abx, bcx and acx must be edges".into()));
    }
    if g.contains(a, b, c) {
        return Err(Error::Precondition("abc must not be an edge".into()));
    }
    let mask = sy_mask(g, s, y);
    Ok(SyClass {
        label: SyLabel::of_mask(mask),
        mask,
    })
}
