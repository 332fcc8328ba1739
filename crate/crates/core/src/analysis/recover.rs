//! Recovering the tripartition around a `K4`-uncovered vertex.
//!
//! Take the first triangle `abc` of the link `G_x`. The vertices `y` whose
//! pair set `S_y` is exactly `{bx, cx, ab, ac}` join `a` in a bucket `A`
//! (likewise `B`, `C`). Then `V1` is every vertex whose link neighborhood
//! misses `A`, and `V2`, `V3` are defined from `B`, `C`. The result is kept
//! only if these three sets partition `V \ {x}`.

use num_rational::Ratio;
use serde::Serialize;

use super::sy::{sy_mask, SyLabel};
use crate::constructions::Tripartition;
use crate::embed::embed_covering;
use crate::error::Result;
use crate::graph::Hypergraph3;
use crate::patterns::Pattern;

/// Default slack `δ = 1/429`.
pub fn default_delta() -> Ratio<i64> {
    Ratio::new(1, 429)
}

/// Measured departures from the five structural conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violations {
    /// Edges `xuv` with `u, v` in one part.
    pub within_link: usize,
    /// Missing triples `xuv` with `u, v` in different parts.
    pub missing_cross_link: usize,
    /// Edges meeting all three parts.
    pub tripartite: usize,
    /// Missing triples with two vertices in one part and one in another.
    pub missing_two_one: usize,
    /// `|V_i| - (n - 1)/3` for each part.
    #[serde(serialize_with = "ratios")]
    pub size_deviation: Vec<Ratio<i64>>,
}

/// Allowances for [`Violations`] at slack `δ`: `0`, `9δn²`, `4δn³`, `6δn³`
/// and `2δn`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Allowance {
    #[serde(serialize_with = "ratio")]
    pub missing_cross_link: Ratio<i64>,
    #[serde(serialize_with = "ratio")]
    pub tripartite: Ratio<i64>,
    #[serde(serialize_with = "ratio")]
    pub missing_two_one: Ratio<i64>,
    #[serde(serialize_with = "ratio")]
    pub size_deviation: Ratio<i64>,
}

fn ratio<S: serde::Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ratios<S: serde::Serializer>(rs: &[Ratio<i64>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(|r| r.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recovery {
    pub partition: Tripartition,
    /// The link triangle `a < b < c` the buckets grew from.
    pub triangle: [usize; 3],
    pub bucket_sizes: [usize; 3],
    pub violations: Violations,
    pub allowance: Allowance,
    /// Every measured quantity is within its allowance.
    pub within_allowance: bool,
    /// The input meets the hypotheses under which the structure is
    /// guaranteed: `0 < δ <= 1/429`, `δ₂ >= (2/3 - δ)n` and `x` in no `K4`.
    pub guarantee_applies: bool,
}

/// Runs the recovery around `x`. `None` when `G_x` has no triangle or the
/// three sets fail to partition `V \ {x}`.
pub fn recover_partition(g: &Hypergraph3, x: usize, delta: Ratio<i64>) -> Result<Option<Recovery>> {
    let n = g.n();
    let link = g.link(x)?;
    let Some(triangle) = link.first_triangle() else {
        return Ok(None);
    };
    let [a, b, c] = triangle;
    let s = [a, b, c, x];
    let mut buckets = [vec![a], vec![b], vec![c]];
    let wanted = [SyLabel::S1a, SyLabel::S1b, SyLabel::S1c];
    for y in (0..n).filter(|y| !s.contains(y)) {
        let label = SyLabel::of_mask(sy_mask(g, s, y));
        if let Some(i) = wanted.iter().position(|&w| w == label) {
            buckets[i].push(y);
        }
    }
    let bucket_sizes = [buckets[0].len(), buckets[1].len(), buckets[2].len()];
    let mut parts: Vec<Vec<usize>> = buckets
        .iter()
        .map(|bucket| {
            (0..n)
                .filter(|&y| y != x && bucket.iter().all(|&w| w == y || !link.contains(y, w)))
                .collect()
        })
        .collect();
    let mut owner = vec![0usize; n];
    for p in &parts {
        for &v in p {
            owner[v] += 1;
        }
    }
    if (0..n).any(|v| v != x && owner[v] != 1) {
        return Ok(None);
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    let partition = Tripartition {
        apex: Some(x),
        parts,
    };
    let violations = measure(g, &partition);
    let allowance = allowance(n, delta);
    let within_allowance = Ratio::from(violations.tripartite as i64) <= allowance.tripartite
        && Ratio::from(violations.missing_two_one as i64) <= allowance.missing_two_one
        && Ratio::from(violations.missing_cross_link as i64) <= allowance.missing_cross_link
        && violations.within_link == 0
        && violations
            .size_deviation
            .iter()
            .all(|&d| d.max(-d) <= allowance.size_deviation);
    let ni = n as i64;
    let guarantee_applies = delta > Ratio::from(0)
        && delta <= default_delta()
        && Ratio::from(g.min_codegree() as i64) >= (Ratio::new(2, 3) - delta) * ni
        && embed_covering(g, x, &Pattern::complete(4)?).is_none();
    Ok(Some(Recovery {
        partition,
        triangle,
        bucket_sizes,
        violations,
        allowance,
        within_allowance,
        guarantee_applies,
    }))
}

fn allowance(n: usize, delta: Ratio<i64>) -> Allowance {
    let n = n as i64;
    Allowance {
        missing_cross_link: delta * 9 * n * n,
        tripartite: delta * 4 * n * n * n,
        missing_two_one: delta * 6 * n * n * n,
        size_deviation: delta * 2 * n,
    }
}

/// Counts departures of `g` from the ideal structure of `partition`, which
/// must have an apex and exactly three parts.
pub fn measure(g: &Hypergraph3, partition: &Tripartition) -> Violations {
    let n = g.n();
    let x = partition.apex.expect("recovered partitions have an apex");
    let mut part = vec![usize::MAX; n];
    for (i, p) in partition.parts.iter().enumerate() {
        for &v in p {
            part[v] = i;
        }
    }
    let mut v = Violations {
        within_link: 0,
        missing_cross_link: 0,
        tripartite: 0,
        missing_two_one: 0,
        size_deviation: partition
            .parts
            .iter()
            .map(|p| Ratio::new(3 * p.len() as i64 - (n as i64 - 1), 3))
            .collect(),
    };
    let others: Vec<usize> = (0..n).filter(|&u| u != x).collect();
    for (i, &u) in others.iter().enumerate() {
        for &w in &others[i + 1..] {
            let edge = g.contains(u, w, x);
            if part[u] == part[w] {
                v.within_link += edge as usize;
            } else {
                v.missing_cross_link += !edge as usize;
            }
        }
    }
    for (i, &p) in others.iter().enumerate() {
        for (j, &q) in others.iter().enumerate().skip(i + 1) {
            for &r in &others[j + 1..] {
                let (a, b, c) = (part[p], part[q], part[r]);
                let edge = g.contains(p, q, r);
                if a != b && b != c && a != c {
                    v.tripartite += edge as usize;
                } else if !(a == b && b == c) {
                    v.missing_two_one += !edge as usize;
                }
            }
        }
    }
    v
}

impl Recovery {
    /// Same parts as `planted`, in any order.
    pub fn matches(&self, planted: &Tripartition) -> bool {
        self.partition.same_up_to_relabeling(planted)
    }
}
