//! The `K4` family: `F1(n)` and its perturbations by admissible pair sets.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{balanced, labels, need_n, ConstructionClaims};
use crate::error::{Error, Result};
use crate::graph::Hypergraph3;

/// An apex and three near-equal parts `|V3|-1 <= |V1| <= |V2| <= |V3|`.
/// The apex link is every cross pair and the other edges are the triples
/// meeting at most two parts, so the apex lies in no `K4`.
pub fn f1(n: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    need_n("f1", n, 4)?;
    let sizes = balanced(n - 1, 3, true);
    let g = build(n, &sizes, &[]);
    let mut claims = ConstructionClaims::new("f1", n, Some(n - 1), &sizes);
    claims.min_codegree = Some((2 * n - 5) / 3);
    claims.pattern = Some("K4".into());
    claims.uncovered = vec![n - 1];
    Ok((g, claims))
}

fn build(n: usize, sizes: &[usize], pairs: &[(usize, usize)]) -> Hypergraph3 {
    let lab = labels(sizes, true);
    let apex = n - 1;
    let mut marked = vec![false; n * n];
    for &(u, v) in pairs {
        marked[u * n + v] = true;
        marked[v * n + u] = true;
    }
    let is_marked = |u: usize, v: usize| marked[u * n + v];
    Hypergraph3::from_fn(n, |a, b, c| {
        if c == apex {
            lab[a] != lab[b] && !is_marked(a, b)
        } else if lab[a] != lab[b] && lab[b] != lab[c] && lab[a] != lab[c] {
            is_marked(a, b) || is_marked(a, c) || is_marked(b, c)
        } else {
            true
        }
    })
}

/// Residue cases of the extremal family. `TwoPrime` is the alternative base
/// with sizes `m-1, m+1, m+1` for `n = 3m + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    Zero,
    One,
    TwoBalanced,
    TwoPrime,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Zero, Case::One, Case::TwoBalanced, Case::TwoPrime];

    pub fn residue(self) -> usize {
        match self {
            Case::Zero => 0,
            Case::One => 1,
            Case::TwoBalanced | Case::TwoPrime => 2,
        }
    }

    /// Per-part limit on how many pairs a vertex may lie in.
    pub fn caps(self) -> [usize; 3] {
        match self {
            Case::Zero => [2, 1, 1],
            Case::One => [1, 1, 1],
            Case::TwoBalanced => [2, 2, 1],
            Case::TwoPrime => [3, 1, 1],
        }
    }

    /// Part sizes of the base graph on `n` vertices.
    pub fn sizes(self, n: usize) -> Result<[usize; 3]> {
        if n % 3 != self.residue() {
            return Err(Error::InvalidParameter(format!(
                "case {self} needs n ≡ {} (mod 3), got n = {n}",
                self.residue()
            )));
        }
        let m = n / 3;
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "case {self} needs n >= 6, got {n}"
            )));
        }
        Ok(match self {
            Case::Zero => [m - 1, m, m],
            Case::One => [m, m, m],
            Case::TwoBalanced => [m, m, m + 1],
            Case::TwoPrime => [m - 1, m + 1, m + 1],
        })
    }

    fn construction(self) -> &'static str {
        if self == Case::TwoPrime {
            "f1p"
        } else {
            "f1e"
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Zero => "0",
            Case::One => "1",
            Case::TwoBalanced => "2",
            Case::TwoPrime => "2p",
        })
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Case::Zero),
            "1" => Ok(Case::One),
            "2" | "2b" => Ok(Case::TwoBalanced),
            "2p" | "prime" => Ok(Case::TwoPrime),
            _ => Err(Error::InvalidParameter(format!(
                "unknown case `{s}` (expected 0, 1, 2 or 2p)"
            ))),
        }
    }
}

/// Cross-part pairs of the base partition obeying the case's per-vertex
/// caps. Only constructible through the validator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePairSet {
    case: Case,
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl AdmissiblePairSet {
    /// Validates `pairs` against the partition of the case on `n` vertices.
    /// Pairs are stored sorted, each as `(u, v)` with `u < v`.
    pub fn new(
        case: Case,
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let sizes = case.sizes(n)?;
        let lab = labels(&sizes, true);
        let caps = case.caps();
        let mut load = vec![0usize; n];
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in pairs {
            let (u, v) = (u.min(v), u.max(v));
            if v >= n - 1 {
                return Err(Error::Inadmissible(format!(
                    "pair ({u}, {v}) touches the apex or leaves the graph"
                )));
            }
            if lab[u] == lab[v] {
                return Err(Error::Inadmissible(format!(
                    "pair ({u}, {v}) lies inside one part"
                )));
            }
            if out.contains(&(u, v)) {
                return Err(Error::Inadmissible(format!("pair ({u}, {v}) repeated")));
            }
            for w in [u, v] {
                load[w] += 1;
                if load[w] > caps[lab[w]] {
                    return Err(Error::Inadmissible(format!(
                        "vertex {w} of V{} is in more than {} pairs",
                        lab[w] + 1,
                        caps[lab[w]]
                    )));
                }
            }
            out.push((u, v));
        }
        out.sort_unstable();
        Ok(Self {
            case,
            n,
            pairs: out,
        })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Seeded random admissible set: cross pairs are shuffled, added greedily
/// while the caps allow, and the resulting maximal set is cut to a random
/// length.
pub fn admissible_sample(case: Case, n: usize, seed: u64) -> Result<AdmissiblePairSet> {
    let sizes = case.sizes(n)?;
    let lab = labels(&sizes, true);
    let caps = case.caps();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cross: Vec<(usize, usize)> = (0..n - 1)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| lab[u] != lab[v])
        .collect();
    cross.shuffle(&mut rng);
    let mut load = vec![0usize; n];
    let mut chosen = Vec::new();
    for (u, v) in cross {
        if load[u] < caps[lab[u]] && load[v] < caps[lab[v]] {
            load[u] += 1;
            load[v] += 1;
            chosen.push((u, v));
        }
    }
    let keep = rng.gen_range(0..=chosen.len());
    chosen.truncate(keep);
    AdmissiblePairSet::new(case, n, chosen)
}

/// `F1(E, n)` (or the `F1'` base for [`Case::TwoPrime`]): for each pair
/// `uv` of `E` the triple `xuv` is removed and every tripartite `uvw` is
/// added. The apex stays `K4`-uncovered and `δ₂` is unchanged.
pub fn f1_variant(pairs: &AdmissiblePairSet) -> Result<(Hypergraph3, ConstructionClaims)> {
    let n = pairs.n();
    let case = pairs.case();
    let sizes = case.sizes(n)?;
    let g = build(n, &sizes, pairs.pairs());
    let mut claims = ConstructionClaims::new(case.construction(), n, Some(n - 1), &sizes);
    claims.min_codegree = Some((2 * n - 5) / 3);
    claims.pattern = Some("K4".into());
    claims.uncovered = vec![n - 1];
    claims.pairs = pairs.pairs().to_vec();
    Ok((g, claims))
}
