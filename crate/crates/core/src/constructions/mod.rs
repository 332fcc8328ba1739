//! Lower-bound constructions. Each generator returns the graph together with
//! the claims it is built to satisfy; nothing here checks those claims.
//!
//! Parts are contiguous index ranges starting at vertex 0; when a
//! construction has an apex it is vertex `n - 1`.

mod k4;
mod steiner;

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, TripleSet};

pub use k4::{admissible_sample, f1, f1_variant, AdmissiblePairSet, Case};
pub use steiner::steiner;

/// A partition of `V` into an optional apex and disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tripartition {
    pub apex: Option<usize>,
    pub parts: Vec<Vec<usize>>,
}

impl Tripartition {
    /// Contiguous parts of the given sizes starting at vertex 0.
    pub fn contiguous(apex: Option<usize>, sizes: &[usize]) -> Self {
        let parts = ranges(sizes).into_iter().map(|r| r.collect()).collect();
        Self { apex, parts }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Index of the part holding `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }

    /// Same parts up to reordering (each part compared as a set).
    pub fn same_up_to_relabeling(&self, other: &Self) -> bool {
        let norm = |t: &Self| {
            let mut ps: Vec<Vec<usize>> = t
                .parts
                .iter()
                .map(|p| {
                    let mut p = p.clone();
                    p.sort_unstable();
                    p
                })
                .collect();
            ps.sort();
            ps
        };
        self.apex == other.apex && norm(self) == norm(other)
    }
}

/// What a generated graph is supposed to satisfy. Serialized as the
/// `.claims.json` sidecar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionClaims {
    pub schema: u32,
    pub construction: String,
    pub n: usize,
    /// Intended `δ₂`, when the closed form applies at this `n`.
    pub min_codegree: Option<usize>,
    /// Pattern the uncovered vertices avoid.
    pub pattern: Option<String>,
    pub uncovered: Vec<usize>,
    pub apex: Option<usize>,
    pub parts: Vec<Range<usize>>,
    /// Pair set used by the perturbed `F1` variants.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<(usize, usize)>,
}

impl ConstructionClaims {
    fn new(construction: &str, n: usize, apex: Option<usize>, sizes: &[usize]) -> Self {
        Self {
            schema: 1,
            construction: construction.to_string(),
            n,
            min_codegree: None,
            pattern: None,
            uncovered: Vec::new(),
            apex,
            parts: ranges(sizes),
            pairs: Vec::new(),
        }
    }

    pub fn partition(&self) -> Tripartition {
        Tripartition {
            apex: self.apex,
            parts: self.parts.iter().map(|r| r.clone().collect()).collect(),
        }
    }
}

fn ranges(sizes: &[usize]) -> Vec<Range<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            start += s;
            start - s..start
        })
        .collect()
}

/// `total` split into `k` sizes differing by at most one, ascending or
/// descending.
fn balanced(total: usize, k: usize, ascending: bool) -> Vec<usize> {
    let (q, rem) = (total / k, total % k);
    (0..k)
        .map(|i| {
            let big = if ascending { i >= k - rem } else { i < rem };
            q + big as usize
        })
        .collect()
}

/// Part index of each non-apex vertex, followed by `sizes.len()` for the
/// apex if there is one.
fn labels(sizes: &[usize], apex: bool) -> Vec<usize> {
    let mut out: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    if apex {
        out.push(sizes.len());
    }
    out
}

fn need_n(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidParameter(format!(
            "{name} needs n >= {min}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Six parts around an apex whose link is the blow-up of a 6-cycle; the
/// non-apex triples are everything except the types `V_iV_iV_{i+1}`,
/// `V_iV_{i+1}V_{i+1}` and `V_iV_{i+1}V_{i+2}`. The apex lies in no `K4-`.
pub fn f2(n: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    need_n("f2", n, 7)?;
    let sizes = balanced(n - 1, 6, false);
    let lab = labels(&sizes, true);
    let apex = n - 1;
    let step = |a: usize, b: usize| (b + 6 - a) % 6 == 1;
    let g = Hypergraph3::from_fn(n, |a, b, c| {
        if c == apex {
            let (i, j) = (lab[a], lab[b]);
            return step(i, j) || step(j, i);
        }
        let mut p = [lab[a], lab[b], lab[c]];
        p.sort_unstable();
        // forbidden types up to rotation: {i,i,i+1}, {i,i+1,i+1}, {i,i+1,i+2}
        !(0..6).any(|i| {
            let t = |d: [usize; 3]| {
                let mut q = d.map(|x| (i + x) % 6);
                q.sort_unstable();
                q
            };
            p == t([0, 0, 1]) || p == t([0, 1, 1]) || p == t([0, 1, 2])
        })
    });
    let mut claims = ConstructionClaims::new("f2", n, Some(apex), &sizes);
    if n >= 12 {
        let (m, r) = (n / 6, n % 6);
        claims.min_codegree = Some(match r {
            0 => 2 * m - 1,
            5 => 2 * m + 1,
            _ => 2 * m,
        });
    }
    claims.pattern = Some("K4-".into());
    claims.uncovered = vec![apex];
    Ok((g, claims))
}

/// Two near-equal parts around an apex whose link is all within-part pairs;
/// the non-apex triples are those meeting both parts. The apex lies in no
/// tight `C5`.
pub fn f3(n: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    need_n("f3", n, 5)?;
    let sizes = balanced(n - 1, 2, true);
    let lab = labels(&sizes, true);
    let apex = n - 1;
    let g = Hypergraph3::from_fn(n, |a, b, c| {
        if c == apex {
            lab[a] == lab[b]
        } else {
            !(lab[a] == lab[b] && lab[b] == lab[c])
        }
    });
    let mut claims = ConstructionClaims::new("f3", n, Some(apex), &sizes);
    claims.min_codegree = Some((n - 3) / 2);
    claims.pattern = Some("C5".into());
    claims.uncovered = vec![apex];
    Ok((g, claims))
}

/// All triples meeting `V1` in an even number of vertices, `|V1| = ⌊n/2⌋`.
/// Every vertex of `V1` lies in no tight `C5`. While `|V2| < 5` (so
/// `n <= 8`) no vertex is covered at all.
pub fn f4(n: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    need_n("f4", n, 5)?;
    let v1 = n / 2;
    let g = Hypergraph3::from_fn(n, |a, b, c| {
        [a, b, c].iter().filter(|&&v| v < v1).count() % 2 == 0
    });
    let mut claims = ConstructionClaims::new("f4", n, None, &[v1, n - v1]);
    claims.min_codegree = Some((n - 3) / 2);
    claims.pattern = Some("C5".into());
    claims.uncovered = if n - v1 >= 5 {
        (0..v1).collect()
    } else {
        (0..n).collect()
    };
    Ok((g, claims))
}

/// All triples meeting both halves of a balanced bipartition. 2-colourable,
/// hence Fano-free.
pub fn fano_bipartite(n: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    need_n("fano_bipartite", n, 7)?;
    let v1 = n / 2;
    let g = Hypergraph3::from_fn(n, |a, _, c| a < v1 && c >= v1);
    let mut claims = ConstructionClaims::new("fano2", n, None, &[v1, n - v1]);
    claims.min_codegree = Some(n / 2);
    claims.pattern = Some("Fano".into());
    claims.uncovered = (0..n).collect();
    Ok((g, claims))
}

/// Three near-equal parts with all triples of type `V_iV_iV_{i+1}`
/// (cyclically). `F32`-free.
pub fn f32_tripartite(n: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    need_n("f32_tripartite", n, 5)?;
    let sizes = balanced(n, 3, true);
    let lab = labels(&sizes, false);
    let g = Hypergraph3::from_fn(n, |a, b, c| {
        let p = [lab[a], lab[b], lab[c]];
        (0..3).any(|i| {
            p.iter().filter(|&&x| x == i).count() == 2
                && p.iter().filter(|&&x| x == (i + 1) % 3).count() == 1
        })
    });
    let mut claims = ConstructionClaims::new("f32tri", n, None, &sizes);
    claims.min_codegree = Some(n / 3 - 1);
    claims.pattern = Some("F32".into());
    claims.uncovered = (0..n).collect();
    Ok((g, claims))
}

/// Blow-up of `h` on `m` vertices: `m` parts of size `copies` plus an apex
/// whose link is every cross pair. Each edge `ijk` of `h` becomes all
/// `V_iV_jV_k` triples, and every non-apex triple meeting a part twice is
/// added. If `h` has clique number `ω`, the apex lies in no `K_{ω+2}`.
pub fn blow_up(h: &Hypergraph3, copies: usize) -> Result<(Hypergraph3, ConstructionClaims)> {
    let m = h.n();
    if copies == 0 || m < 3 || h.edge_count() == 0 {
        return Err(Error::InvalidParameter(
            "blow_up needs copies >= 1 and a nonempty base on at least 3 vertices".into(),
        ));
    }
    let n = copies * m + 1;
    let apex = n - 1;
    let lab = labels(&vec![copies; m], true);
    let g = Hypergraph3::from_fn(n, |a, b, c| {
        let (i, j, k) = (lab[a], lab[b], lab[c]);
        if c == apex {
            i != j
        } else if i == j || j == k || i == k {
            true
        } else {
            h.has(i, j, k)
        }
    });
    // measured, not trusted: pairs (x, v), same-part pairs, cross pairs
    let mut delta = ((h.min_codegree() + 2) * copies - 1).min((m - 1) * copies);
    if copies >= 2 {
        delta = delta.min(copies * m - 2);
    }
    let omega = clique_number(h);
    let mut claims = ConstructionClaims::new("blowup", n, Some(apex), &vec![copies; m]);
    claims.min_codegree = Some(delta);
    claims.pattern = Some(format!("K{}", omega + 2));
    claims.uncovered = vec![apex];
    Ok((g, claims))
}

/// Largest `s` such that `h` contains a complete `K_s` (at least 2 when
/// `h` has two vertices, since `K_2` has no triples).
pub fn clique_number(h: &Hypergraph3) -> usize {
    fn grow(h: &Hypergraph3, clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..h.n() {
            let ok = clique
                .iter()
                .enumerate()
                .all(|(i, &a)| clique[i + 1..].iter().all(|&b| h.has(a, b, v)));
            if ok {
                clique.push(v);
                grow(h, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = 0;
    grow(h, &mut Vec::new(), 0, &mut best);
    best
}
