//! Embeddings of a pattern into a host: exact backtracking search and the
//! single-pass greedy procedure behind the degeneracy bound.

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Triple, TripleSet};
use crate::patterns::Pattern;

/// Injective map from pattern vertices to host vertices that sends every
/// pattern edge onto a host edge (not necessarily induced).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// `map()[p]` is the host vertex of pattern vertex `p`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Host vertices hit, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v
    }

    pub fn is_valid<H: TripleSet>(&self, host: &H, pattern: &Pattern) -> bool {
        let n = host.vertex_count();
        if self.map.len() != pattern.f() || self.map.iter().any(|&v| v >= n) {
            return false;
        }
        let mut seen = vec![false; n];
        if self
            .map
            .iter()
            .any(|&v| std::mem::replace(&mut seen[v], true))
        {
            return false;
        }
        pattern
            .graph()
            .edges()
            .all(|[a, b, c]| host.has(self.map[a], self.map[b], self.map[c]))
    }
}

/// Backtracking state for one search.
struct Search<'a, H> {
    host: &'a H,
    map: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
    // checks[i]: pairs (q, s) such that {order[i], q, s} is a pattern edge and
    // q, s are placed before order[i]
    checks: Vec<Vec<(usize, usize)>>,
}

const UNMAPPED: usize = usize::MAX;

impl<H: TripleSet> Search<'_, H> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let n = self.host.vertex_count();
        let checks = std::mem::take(&mut self.checks[depth]);
        let mut found = false;
        for w in 0..n {
            if self.used[w] {
                continue;
            }
            if checks
                .iter()
                .all(|&(q, s)| self.host.has(self.map[q], self.map[s], w))
            {
                self.map[p] = w;
                self.used[w] = true;
                if self.extend(depth + 1) {
                    found = true;
                }
                self.used[w] = false;
                if found {
                    break;
                }
                self.map[p] = UNMAPPED;
            }
        }
        self.checks[depth] = checks;
        found
    }
}

/// Pattern adjacency as, for each vertex, the list of the other two vertices
/// of its edges.
fn incident_pairs(pattern: &Pattern) -> Vec<Vec<(usize, usize)>> {
    let mut inc = vec![Vec::new(); pattern.f()];
    for [a, b, c] in pattern.graph().edges() {
        inc[a].push((b, c));
        inc[b].push((a, c));
        inc[c].push((a, b));
    }
    inc
}

/// Finds an embedding whose image contains every vertex of `required`
/// (distinct host vertices). Pattern vertices are placed in descending order
/// of constraints into the already placed set.
pub(crate) fn find_embedding<H: TripleSet>(
    host: &H,
    pattern: &Pattern,
    required: &[usize],
) -> Option<Embedding> {
    let f = pattern.f();
    let n = host.vertex_count();
    if required.len() > f || n < f {
        return None;
    }
    let inc = incident_pairs(pattern);

    // Assign required host vertices to pattern vertices in every injective
    // way. A single required vertex only needs one preimage per orbit.
    let mut pre: Vec<usize> = Vec::with_capacity(required.len());
    let mut taken = vec![false; f];
    let single = required.len() == 1;
    try_pins(host, pattern, &inc, required, &mut pre, &mut taken, single)
}

fn try_pins<H: TripleSet>(
    host: &H,
    pattern: &Pattern,
    inc: &[Vec<(usize, usize)>],
    required: &[usize],
    pre: &mut Vec<usize>,
    taken: &mut [bool],
    single: bool,
) -> Option<Embedding> {
    let f = pattern.f();
    let k = pre.len();
    if k == required.len() {
        return extend_pinned(host, inc, required, pre, f);
    }
    let candidates: Vec<usize> = if single {
        pattern.orbit_reps().to_vec()
    } else {
        (0..f).collect()
    };
    for p in candidates {
        if taken[p] {
            continue;
        }
        // edges among already pinned pattern vertices must map onto edges
        let ok = inc[p].iter().all(|&(q, s)| {
            match (
                pre.iter().position(|&x| x == q),
                pre.iter().position(|&x| x == s),
            ) {
                (Some(i), Some(j)) => host.has(required[i], required[j], required[k]),
                _ => true,
            }
        });
        if !ok {
            continue;
        }
        taken[p] = true;
        pre.push(p);
        let res = try_pins(host, pattern, inc, required, pre, taken, single);
        pre.pop();
        taken[p] = false;
        if res.is_some() {
            return res;
        }
    }
    None
}

fn extend_pinned<H: TripleSet>(
    host: &H,
    inc: &[Vec<(usize, usize)>],
    required: &[usize],
    pre: &[usize],
    f: usize,
) -> Option<Embedding> {
    let n = host.vertex_count();
    let mut map = vec![UNMAPPED; f];
    let mut used = vec![false; n];
    let mut placed = vec![false; f];
    for (&p, &v) in pre.iter().zip(required) {
        map[p] = v;
        used[v] = true;
        placed[p] = true;
    }

    let mut order = Vec::with_capacity(f - pre.len());
    let mut checks = Vec::with_capacity(f - pre.len());
    for _ in pre.len()..f {
        let next = (0..f)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let full = inc[p]
                    .iter()
                    .filter(|&&(q, s)| placed[q] && placed[s])
                    .count();
                let half = inc[p]
                    .iter()
                    .filter(|&&(q, s)| placed[q] || placed[s])
                    .count();
                (full, half, std::cmp::Reverse(p))
            })
            .expect("an unplaced vertex remains");
        checks.push(
            inc[next]
                .iter()
                .copied()
                .filter(|&(q, s)| placed[q] && placed[s])
                .collect(),
        );
        order.push(next);
        placed[next] = true;
    }

    let mut search = Search {
        host,
        map,
        used,
        order,
        checks,
    };
    search.extend(0).then_some(Embedding { map: search.map })
}

/// Exact decision: is `x` in the image of some embedding of `pattern`?
pub fn embed_covering<H: TripleSet>(host: &H, x: usize, pattern: &Pattern) -> Option<Embedding> {
    if x >= host.vertex_count() {
        return None;
    }
    find_embedding(host, pattern, &[x])
}

/// Some embedding of `pattern` anywhere in `host`.
pub fn find_copy<H: TripleSet>(host: &H, pattern: &Pattern) -> Option<Embedding> {
    find_embedding(host, pattern, &[])
}

/// The single forward pass of the degeneracy argument: `x_1 -> x`, `x_2` to
/// the lowest other vertex, `x_3` into `Γ(x, v_2)`, then each later `x_i` to
/// the lowest unused vertex in the common neighborhood of the pairs that
/// complete its edges into the placed prefix. Never backtracks, so `None`
/// does not mean that `x` is uncovered.
pub fn greedy_embed<H: TripleSet>(host: &H, x: usize, pattern: &Pattern) -> Option<Embedding> {
    let n = host.vertex_count();
    let f = pattern.f();
    if x >= n || n < f {
        return None;
    }
    let ord = pattern.ordering();
    let inc = incident_pairs(pattern);
    let mut map = vec![UNMAPPED; f];
    let mut used = vec![false; n];
    map[ord[0]] = x;
    used[x] = true;
    for (i, &p) in ord.iter().enumerate().skip(1) {
        let mut pairs: Vec<(usize, usize)> = inc[p]
            .iter()
            .copied()
            .filter(|&(q, s)| map[q] != UNMAPPED && map[s] != UNMAPPED)
            .map(|(q, s)| (map[q], map[s]))
            .collect();
        if i == 2 {
            let pair = (map[ord[0]], map[ord[1]]);
            if !pairs.contains(&pair) && !pairs.contains(&(pair.1, pair.0)) {
                pairs.push(pair);
            }
        }
        let w = (0..n).find(|&w| !used[w] && pairs.iter().all(|&(a, b)| host.has(a, b, w)))?;
        map[p] = w;
        used[w] = true;
    }
    Some(Embedding { map })
}

/// Vertices of `host` that lie in no copy of `pattern`, ascending.
pub fn uncovered_vertices<H: TripleSet>(host: &H, pattern: &Pattern) -> Vec<usize> {
    (0..host.vertex_count())
        .filter(|&x| embed_covering(host, x, pattern).is_none())
        .collect()
}

/// True iff some copy of `pattern` contains all three vertices of the edge
/// `e`.
pub fn edge_extendable(host: &Hypergraph3, e: Triple, pattern: &Pattern) -> Result<bool> {
    let [a, b, c] = e;
    if !host.contains(a, b, c) {
        return Err(Error::NotAnEdge(e));
    }
    Ok(find_embedding(host, pattern, &[a, b, c]).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_covers_itself() {
        let k4 = Pattern::complete(4).unwrap();
        let g = Hypergraph3::complete(4);
        let e = embed_covering(&g, 0, &k4).unwrap();
        assert!(e.is_valid(&g, &k4));
        assert_eq!(e.image(), vec![0, 1, 2, 3]);
        assert!(greedy_embed(&g, 2, &k4).unwrap().is_valid(&g, &k4));
    }

    #[test]
    fn k4_minus_host_has_no_k4() {
        let k4 = Pattern::complete(4).unwrap();
        let host = Hypergraph3::complete(4).without_edge([1, 2, 3]).unwrap();
        assert!(uncovered_vertices(&host, &k4).len() == 4);
        assert_eq!(edge_extendable(&host, [0, 1, 2], &k4), Ok(false));
        assert_eq!(
            edge_extendable(&host, [1, 2, 3], &k4),
            Err(Error::NotAnEdge([1, 2, 3]))
        );
    }

    #[test]
    fn k5_fully_covered_by_k4() {
        let k4 = Pattern::complete(4).unwrap();
        let g = Hypergraph3::complete(5);
        assert!(uncovered_vertices(&g, &k4).is_empty());
        for e in g.edges() {
            assert_eq!(edge_extendable(&g, e, &k4), Ok(true));
        }
    }

    #[test]
    fn too_small_host() {
        let fano = Pattern::fano();
        assert!(embed_covering(&Hypergraph3::complete(6), 0, &fano).is_none());
        assert!(greedy_embed(&Hypergraph3::complete(6), 0, &fano).is_none());
        assert!(embed_covering(&Hypergraph3::complete(6), 9, &fano).is_none());
    }

    #[test]
    fn invalid_embeddings_detected() {
        let k4 = Pattern::complete(4).unwrap();
        let g = Hypergraph3::complete(5);
        assert!(!Embedding {
            map: vec![0, 1, 2, 2]
        }
        .is_valid(&g, &k4));
        assert!(!Embedding { map: vec![0, 1, 2] }.is_valid(&g, &k4));
        let h = g.without_edge([0, 1, 2]).unwrap();
        assert!(!Embedding {
            map: vec![0, 1, 2, 3]
        }
        .is_valid(&h, &k4));
    }
}
