//! The catalog of small target graphs `F` and their degeneracy data.

use std::fmt;
use std::str::FromStr;

use crate::canon::for_each_permutation;
use crate::constructions::steiner;
use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, TripleSet};

/// Catalog families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    /// `K_t`, all triples on `t` vertices.
    Complete,
    /// `K_t⁻`, `K_t` minus one triple.
    CompleteMinus,
    /// Tight cycle `C_t`: the `t` cyclically consecutive triples.
    TightCycle,
    Fano,
    /// `F₃,₂ = ([5], {123, 124, 125, 345})`.
    F32,
    /// Steiner triple system on `t` vertices.
    Steiner,
}

/// A target graph with its degeneracy `r` and elimination ordering.
///
/// `ordering[i]` is the pattern vertex `x_{i+1}`: each `x_i` has minimum
/// degree in the subgraph induced by `x_1..x_i`, so it lies in at most `r`
/// edges inside that prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Hypergraph3,
    r: usize,
    ordering: Vec<usize>,
    // one vertex per automorphism orbit, when the orbits were computed
    orbit_reps: Vec<usize>,
}

// Automorphism orbits are computed by brute force up to this many vertices.
const ORBIT_CAP: usize = 8;

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Hypergraph3) -> Result<Self> {
        let (r, ordering) = degeneracy(&graph)?;
        let orbit_reps = orbit_representatives(&graph);
        Ok(Self {
            name: name.into(),
            graph,
            r,
            ordering,
            orbit_reps,
        })
    }

    /// Looks up a catalog family. `t` is required for the sized families
    /// and ignored for `Fano` and `F32`.
    pub fn catalog(kind: PatternKind, t: Option<usize>) -> Result<Self> {
        let need = |min: usize| -> Result<usize> {
            match t {
                Some(t) if t >= min => Ok(t),
                Some(t) => Err(Error::InvalidParameter(format!(
                    "{kind:?} needs t >= {min}, got {t}"
                ))),
                None => Err(Error::InvalidParameter(format!("{kind:?} needs a size t"))),
            }
        };
        match kind {
            PatternKind::Complete => {
                let t = need(4)?;
                Self::new(format!("K{t}"), Hypergraph3::complete(t))
            }
            PatternKind::CompleteMinus => {
                let t = need(4)?;
                let g = Hypergraph3::complete(t).without_edge([t - 3, t - 2, t - 1])?;
                Self::new(format!("K{t}-"), g)
            }
            PatternKind::TightCycle => {
                let t = need(5)?;
                let g = Hypergraph3::new(t, (0..t).map(|i| [i, (i + 1) % t, (i + 2) % t]))?;
                Self::new(format!("C{t}"), g)
            }
            PatternKind::Fano => Self::new("Fano", fano_plane()),
            PatternKind::F32 => {
                let g = Hypergraph3::new(5, [[0, 1, 2], [0, 1, 3], [0, 1, 4], [2, 3, 4]])?;
                Self::new("F32", g)
            }
            PatternKind::Steiner => {
                let t = need(3)?;
                Self::new(format!("STS:{t}"), steiner(t)?)
            }
        }
    }

    pub fn complete(t: usize) -> Result<Self> {
        Self::catalog(PatternKind::Complete, Some(t))
    }

    pub fn complete_minus(t: usize) -> Result<Self> {
        Self::catalog(PatternKind::CompleteMinus, Some(t))
    }

    pub fn tight_cycle(t: usize) -> Result<Self> {
        Self::catalog(PatternKind::TightCycle, Some(t))
    }

    pub fn fano() -> Self {
        Self::catalog(PatternKind::Fano, None).expect("Fano plane is nonempty")
    }

    pub fn f32() -> Self {
        Self::catalog(PatternKind::F32, None).expect("F32 is nonempty")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Hypergraph3 {
        &self.graph
    }

    /// `|V(F)|`.
    pub fn f(&self) -> usize {
        self.graph.n()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    /// Pattern vertices that must be tried as the preimage of a single
    /// pinned host vertex.
    pub(crate) fn orbit_reps(&self) -> &[usize] {
        &self.orbit_reps
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Parses the CLI names: `K4 K4- K5 K5- C5 C6 C7 Fano F32 STS:t`, and more
/// generally `K<t>`, `K<t>-`, `C<t>`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownPattern(s.to_string());
        let size = |digits: &str| digits.parse::<usize>().map_err(|_| unknown());
        match s {
            "Fano" | "fano" => return Ok(Self::fano()),
            "F32" | "f32" => return Ok(Self::f32()),
            _ => {}
        }
        if let Some(t) = s.strip_prefix("STS:") {
            return Self::catalog(PatternKind::Steiner, Some(size(t)?));
        }
        if let Some(rest) = s.strip_prefix('K') {
            return match rest.strip_suffix('-') {
                Some(t) => Self::complete_minus(size(t)?),
                None => Self::complete(size(rest)?),
            };
        }
        if let Some(t) = s.strip_prefix('C') {
            return Self::tight_cycle(size(t)?);
        }
        Err(unknown())
    }
}

/// The Fano plane on `0..7`, lines `{i, i+1, i+3} mod 7`.
pub fn fano_plane() -> Hypergraph3 {
    Hypergraph3::new(7, (0..7).map(|i| [i, (i + 1) % 7, (i + 3) % 7])).expect("valid lines")
}

/// Degeneracy `r` and an elimination ordering `x_1..x_f`.
///
/// Vertices are peeled from the back: `x_f` has minimum degree in `F`,
/// `x_{f-1}` minimum degree in `F - x_f`, and so on, breaking ties by the
/// lowest index. `r` is the largest degree seen at removal time.
pub fn degeneracy(graph: &Hypergraph3) -> Result<(usize, Vec<usize>)> {
    if graph.edge_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    let n = graph.n();
    let mut degree = vec![0usize; n];
    for [a, b, c] in graph.edges() {
        degree[a] += 1;
        degree[b] += 1;
        degree[c] += 1;
    }
    let mut alive = vec![true; n];
    let mut removed = Vec::with_capacity(n);
    let mut r = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        r = r.max(degree[v]);
        alive[v] = false;
        removed.push(v);
        for b in 0..n {
            for c in b + 1..n {
                if alive[b] && alive[c] && graph.has(v, b, c) {
                    degree[b] -= 1;
                    degree[c] -= 1;
                }
            }
        }
    }
    removed.reverse();
    Ok((r, removed))
}

/// `⌊(1 − 1/r)n + (f − 2r − 1)/r⌋`, the greedy-embedding upper bound on the
/// covering codegree threshold, in exact integer arithmetic.
pub fn greedy_cover_bound(pattern: &Pattern, n: usize) -> Result<i64> {
    if n < pattern.f() {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is smaller than |V(F)| = {}",
            pattern.f()
        )));
    }
    let r = pattern.r() as i64;
    let f = pattern.f() as i64;
    let n = n as i64;
    Ok(((r - 1) * n + f - 2 * r - 1).div_euclid(r))
}

fn orbit_representatives(graph: &Hypergraph3) -> Vec<usize> {
    let n = graph.n();
    if n > ORBIT_CAP {
        return (0..n).collect();
    }
    let edges: Vec<_> = graph.edges().collect();
    let mut orbit = (0..n).collect::<Vec<usize>>();
    for_each_permutation(n, |perm| {
        let is_auto = edges
            .iter()
            .all(|&[a, b, c]| graph.contains(perm[a], perm[b], perm[c]));
        if is_auto {
            for v in 0..n {
                let (lo, hi) = (orbit[v].min(orbit[perm[v]]), orbit[v].max(orbit[perm[v]]));
                if lo != hi {
                    for o in orbit.iter_mut() {
                        if *o == hi {
                            *o = lo;
                        }
                    }
                }
            }
        }
    });
    (0..n).filter(|&v| orbit[v] == v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_parameters() {
        let k4: Pattern = "K4".parse().unwrap();
        assert_eq!((k4.f(), k4.r()), (4, 3));
        let fano: Pattern = "Fano".parse().unwrap();
        assert_eq!((fano.f(), fano.r()), (7, 3));
        assert_eq!(fano.graph().edge_count(), 7);
        let k4m: Pattern = "K4-".parse().unwrap();
        assert_eq!((k4m.f(), k4m.r()), (4, 2));
        assert_eq!("K5".parse::<Pattern>().unwrap().r(), 6);
        assert_eq!("C5".parse::<Pattern>().unwrap().r(), 3);
        assert_eq!("F32".parse::<Pattern>().unwrap().graph().edge_count(), 4);
        assert_eq!("STS:9".parse::<Pattern>().unwrap().graph().edge_count(), 12);
    }

    #[test]
    fn catalog_errors() {
        assert!(matches!(
            "K3".parse::<Pattern>(),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            "C4".parse::<Pattern>(),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            "Q7".parse::<Pattern>(),
            Err(Error::UnknownPattern(_))
        ));
        assert!(matches!(
            "Kx".parse::<Pattern>(),
            Err(Error::UnknownPattern(_))
        ));
        assert!("STS:8".parse::<Pattern>().is_err());
        assert!(Pattern::catalog(PatternKind::Complete, None).is_err());
    }

    #[test]
    fn single_edge_degeneracy() {
        let g = Hypergraph3::complete(3);
        assert_eq!(degeneracy(&g).unwrap().0, 1);
        assert_eq!(degeneracy(&Hypergraph3::empty(4)), Err(Error::EmptyPattern));
    }

    #[test]
    fn ordering_prefix_property() {
        for name in ["K4", "K4-", "K5", "K5-", "C5", "C6", "C7", "Fano", "F32"] {
            let p: Pattern = name.parse().unwrap();
            let ord = p.ordering();
            for i in 0..ord.len() {
                let prefix = &ord[..=i];
                let inside = p
                    .graph()
                    .edges()
                    .filter(|e| e.contains(&ord[i]) && e.iter().all(|v| prefix.contains(v)))
                    .count();
                assert!(inside <= p.r(), "{name}: x_{} has {inside} > r", i + 1);
            }
        }
    }

    #[test]
    fn greedy_bound_values() {
        let k4 = Pattern::complete(4).unwrap();
        assert_eq!(greedy_cover_bound(&k4, 99), Ok(65));
        assert_eq!(greedy_cover_bound(&Pattern::fano(), 21), Ok(14));
        assert_eq!(
            greedy_cover_bound(&Pattern::complete(5).unwrap(), 12),
            Ok(8)
        );
        assert!(greedy_cover_bound(&k4, 3).is_err());
    }

    #[test]
    fn orbits() {
        assert_eq!(Pattern::complete(4).unwrap().orbit_reps(), &[0]);
        assert_eq!(Pattern::f32().orbit_reps(), &[0, 2]);
        assert_eq!(Pattern::fano().orbit_reps(), &[0]);
        assert_eq!(Pattern::complete_minus(4).unwrap().orbit_reps(), &[0, 1]);
    }
}
