//! The set conditions of the `F32` upper-bound argument as predicates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Hypergraph3;

/// Which of the conditions on `(A, B)` hold around `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbConditions {
    /// `A ⊆ Γ(x, y)`.
    pub a_in_neighborhood: bool,
    /// `B` avoids `A ∪ {x}`.
    pub b_disjoint: bool,
    /// `B` spans no edge of `G`.
    pub b_independent: bool,
    /// `B` spans no pair of the link `G_x`.
    pub b_link_independent: bool,
}

impl AbConditions {
    pub fn all(&self) -> bool {
        self.a_in_neighborhood && self.b_disjoint && self.b_independent && self.b_link_independent
    }
}

pub fn ab_conditions(
    g: &Hypergraph3,
    x: usize,
    y: usize,
    a: &[usize],
    b: &[usize],
) -> Result<AbConditions> {
    let n = g.n();
    if let Some(&v) = [x, y].iter().chain(a).chain(b).find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if x == y {
        return Err(Error::SamePair(x));
    }
    let gamma = g.neighborhood(x, y)?;
    let link = g.link(x)?;
    Ok(AbConditions {
        a_in_neighborhood: a.iter().all(|v| gamma.contains(v)),
        b_disjoint: b.iter().all(|v| *v != x && !a.contains(v)),
        b_independent: g.is_independent(b),
        b_link_independent: link.is_independent(b),
    })
}
