//! Closed-form brackets for `c₂(n, F)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Hypergraph3;
use crate::patterns::{greedy_cover_bound, Pattern};

/// Where an exact value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Theorem,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundBracket {
    pub pattern: String,
    pub n: usize,
    pub lower: i64,
    pub upper: i64,
    pub exact: Option<i64>,
    pub source: Option<Provenance>,
}

impl BoundBracket {
    /// Records an exhaustively computed value. Fails if it falls outside
    /// the bracket.
    pub fn with_exhaustive(mut self, value: i64) -> Result<Self> {
        if value < self.lower || value > self.upper {
            return Err(Error::Precondition(format!(
                "value {value} lies outside [{}, {}]",
                self.lower, self.upper
            )));
        }
        self.exact = Some(value);
        self.source = Some(Provenance::Exhaustive);
        Ok(self)
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Catalog identity of a pattern, recognised by its graph rather than its
/// name.
enum Known {
    K4,
    K4Minus,
    C5,
    K5Minus,
    Fano,
    F32,
    Complete(usize),
    CompleteMinus,
    Other,
}

fn identify(p: &Pattern) -> Known {
    let g = p.graph();
    let f = p.f();
    let complete = Hypergraph3::complete(f);
    let minus = || {
        Pattern::complete_minus(f)
            .map(|q| q.graph() == g)
            .unwrap_or(false)
    };
    let same = |q: Result<Pattern>| q.map(|q| q.graph() == g).unwrap_or(false);
    match () {
        _ if *g == complete && f == 4 => Known::K4,
        _ if *g == complete && f >= 5 => Known::Complete(f),
        _ if f == 4 && minus() => Known::K4Minus,
        _ if f == 5 && minus() => Known::K5Minus,
        _ if f >= 6 && minus() => Known::CompleteMinus,
        _ if f == 5 && same(Pattern::tight_cycle(5)) => Known::C5,
        _ if f == 7 && *g == *Pattern::fano().graph() => Known::Fano,
        _ if f == 5 && *g == *Pattern::f32().graph() => Known::F32,
        _ => Known::Other,
    }
}

/// Best known bracket for `c₂(n, F)` from the closed forms, falling back on
/// `[0, greedy bound]`. The upper bound never exceeds `n - 3`, since `K_n`
/// covers every vertex once `n >= |V(F)|`. A known exact value collapses
/// the bracket onto it.
///
/// ```
/// use h3cover::{c2_bounds, Pattern};
/// let b = c2_bounds(&Pattern::complete(4)?, 99)?;
/// assert_eq!((b.lower, b.upper, b.exact), (64, 64, Some(64)));
/// # Ok::<(), h3cover::Error>(())
/// ```
pub fn c2_bounds(pattern: &Pattern, n: usize) -> Result<BoundBracket> {
    let greedy = greedy_cover_bound(pattern, n)?;
    let ni = n as i64;
    let k4_lower = floor_div(2 * ni - 5, 3);
    let (mut lower, mut upper, mut exact) = match identify(pattern) {
        Known::K4 => {
            let exact =
                (n > 98 || n % 3 == 1 || (n.is_multiple_of(3) && n >= 6)).then_some(k4_lower);
            (k4_lower, floor_div(2 * ni - 3, 3), exact)
        }
        Known::K4Minus if n >= 7 => {
            let (m, r) = ((n / 6) as i64, n % 6);
            let lower = match r {
                0 => 2 * m - 1,
                5 => 2 * m + 1,
                _ => 2 * m,
            };
            (lower, ni / 3, matches!(r, 1 | 2 | 5).then_some(lower))
        }
        Known::K4Minus => (0, ni / 3, None),
        Known::C5 => (floor_div(ni - 3, 2), ni / 2, None),
        Known::K5Minus => (k4_lower, floor_div(2 * ni - 2, 3), None),
        Known::Fano => (ni / 2, 2 * ni / 3, None),
        Known::F32 => (ni / 3 - 1, greedy, None),
        Known::Complete(t) => {
            let mut lower = k4_lower;
            if (n - 1).is_multiple_of(t - 1) {
                // blow-up of K_{t-1}^- with parts of size (n-1)/(t-1)
                let copies = ((n - 1) / (t - 1)) as i64;
                lower = lower.max((t as i64 - 2) * copies - 1);
            }
            (lower, greedy, None)
        }
        Known::CompleteMinus => (k4_lower, greedy, None),
        Known::Other => (0, greedy, None),
    };
    upper = upper.min(greedy).min(ni - 3);
    lower = lower.max(0).min(upper);
    match exact {
        Some(e) if e == lower && e <= upper => upper = e,
        _ => exact = None,
    }
    Ok(BoundBracket {
        pattern: pattern.name().to_string(),
        n,
        lower,
        upper,
        exact,
        source: exact.map(|_| Provenance::Theorem),
    })
}
