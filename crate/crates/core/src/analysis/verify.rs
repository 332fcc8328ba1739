//! Independent re-checking of construction claims.

use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::ConstructionClaims;
use crate::embed::{embed_covering, find_copy};
use crate::graph::Hypergraph3;
use crate::patterns::Pattern;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimCheck {
    pub claim: &'static str,
    pub expected: Value,
    pub measured: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub construction: String,
    pub pattern: String,
    pub checks: Vec<ClaimCheck>,
    pub pass: bool,
}

/// Recomputes every claim: vertex count, `δ₂` by a full pair scan, each
/// claimed uncovered vertex by exact embedding search, the partition's
/// shape, and that the claim names `pattern`.
pub fn verify_construction(
    g: &Hypergraph3,
    claims: &ConstructionClaims,
    pattern: &Pattern,
) -> VerifyReport {
    let n = g.n();
    let mut checks = vec![ClaimCheck {
        claim: "n",
        expected: json!(claims.n),
        measured: json!(n),
        pass: claims.n == n,
    }];
    if let Some(want) = &claims.pattern {
        checks.push(ClaimCheck {
            claim: "pattern",
            expected: json!(want),
            measured: json!(pattern.name()),
            pass: want == pattern.name(),
        });
    }
    if let Some(d) = claims.min_codegree {
        let got = g.min_codegree();
        checks.push(ClaimCheck {
            claim: "min_codegree",
            expected: json!(d),
            measured: json!(got),
            pass: got == d,
        });
    }
    if !claims.uncovered.is_empty() {
        let in_range = claims.uncovered.iter().all(|&v| v < n);
        let everyone = in_range && claims.uncovered.len() == n;
        let measured: Vec<usize> = if !in_range {
            Vec::new()
        } else if everyone {
            // all vertices uncovered iff the graph has no copy at all
            if find_copy(g, pattern).is_none() {
                (0..n).collect()
            } else {
                claims
                    .uncovered
                    .iter()
                    .copied()
                    .filter(|&v| embed_covering(g, v, pattern).is_none())
                    .collect()
            }
        } else {
            claims
                .uncovered
                .iter()
                .copied()
                .filter(|&v| embed_covering(g, v, pattern).is_none())
                .collect()
        };
        checks.push(ClaimCheck {
            claim: "uncovered",
            expected: json!(claims.uncovered),
            pass: in_range && measured.len() == claims.uncovered.len(),
            measured: json!(measured),
        });
    }
    if !claims.parts.is_empty() || claims.apex.is_some() {
        let mut count = vec![0usize; n];
        let mut ok = true;
        for v in claims
            .parts
            .iter()
            .flat_map(|r| r.clone())
            .chain(claims.apex)
        {
            if v < n {
                count[v] += 1;
            } else {
                ok = false;
            }
        }
        ok &= count.iter().all(|&c| c == 1);
        checks.push(ClaimCheck {
            claim: "partition",
            expected: json!(claims.parts.iter().map(|r| r.len()).collect::<Vec<_>>()),
            measured: json!(if ok {
                "partition of V"
            } else {
                "not a partition of V"
            }),
            pass: ok,
        });
    }
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        schema: 1,
        construction: claims.construction.clone(),
        pattern: pattern.name().to_string(),
        checks,
        pass,
    }
}
