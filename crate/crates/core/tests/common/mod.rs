//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! nothing here calls the library's search or embedding code.

#![allow(dead_code)]

use h3cover::{Hypergraph3, Pattern};

/// Minimum codegree by counting every pair's neighbors one by one.
pub fn min_codegree(g: &Hypergraph3) -> usize {
    let n = g.n();
    let mut best = usize::MAX;
    for u in 0..n {
        for v in u + 1..n {
            let d = (0..n)
                .filter(|&w| w != u && w != v && g.contains(u, v, w))
                .count();
            best = best.min(d);
        }
    }
    best
}

/// Calls `f` on every permutation of `items` (Heap's algorithm), stopping
/// early when `f` returns true.
pub fn any_permutation(items: &mut [usize], f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn heap(k: usize, a: &mut [usize], f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k <= 1 {
            return f(a);
        }
        for i in 0..k {
            if heap(k - 1, a, f) {
                return true;
            }
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
        false
    }
    let k = items.len();
    heap(k, items, f)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order, stopping
/// early when `f` returns true.
pub fn any_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if go(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, n, k, &mut Vec::with_capacity(k), f)
}

/// Is `x` in some copy of `pattern`? Tries every `(f-1)`-set of other
/// vertices and every bijection onto it.
pub fn covers(g: &Hypergraph3, x: usize, pattern: &Pattern) -> bool {
    let f = pattern.f();
    let n = g.n();
    if n < f || x >= n {
        return false;
    }
    let edges: Vec<[usize; 3]> = pattern.graph().edges().collect();
    let others: Vec<usize> = (0..n).filter(|&v| v != x).collect();
    any_subset(n - 1, f - 1, &mut |idx| {
        let mut set: Vec<usize> = idx.iter().map(|&i| others[i]).collect();
        set.push(x);
        any_permutation(&mut set, &mut |m| {
            edges.iter().all(|&[a, b, c]| g.contains(m[a], m[b], m[c]))
        })
    })
}

/// Does `g` contain `pattern` anywhere?
pub fn contains_copy(g: &Hypergraph3, pattern: &Pattern) -> bool {
    (0..g.n()).any(|x| covers(g, x, pattern))
}

/// Max over every nonempty edge subset of the minimum degree among the
/// vertices that subset touches. Exponential in the edge count.
pub fn max_subgraph_min_degree_by_edges(g: &Hypergraph3) -> usize {
    let edges: Vec<[usize; 3]> = g.edges().collect();
    assert!(edges.len() <= 24, "edge-subset oracle limited to 24 edges");
    let mut best = 0;
    for mask in 1u32..(1 << edges.len()) {
        let mut deg = vec![0usize; g.n()];
        for (i, &[a, b, c]) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[a] += 1;
                deg[b] += 1;
                deg[c] += 1;
            }
        }
        let min = deg.iter().copied().filter(|&d| d > 0).min().unwrap_or(0);
        best = best.max(min);
    }
    best
}

/// Same quantity over vertex-induced subgraphs. An optimal edge subset can
/// be replaced by all edges induced on the vertices it touches without
/// lowering any degree, so both maxima agree.
pub fn max_subgraph_min_degree_by_vertices(g: &Hypergraph3) -> usize {
    let n = g.n();
    let edges: Vec<[usize; 3]> = g.edges().collect();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        let mut deg = vec![0usize; n];
        for &[a, b, c] in &edges {
            if inside(a) && inside(b) && inside(c) {
                deg[a] += 1;
                deg[b] += 1;
                deg[c] += 1;
            }
        }
        let min = (0..n)
            .filter(|&v| inside(v))
            .map(|v| deg[v])
            .min()
            .unwrap_or(0);
        best = best.max(min);
    }
    best
}

/// Catalog patterns on at most seven vertices.
pub fn small_catalog() -> Vec<Pattern> {
    [
        "K4", "K4-", "K5", "K5-", "K6", "K6-", "K7", "K7-", "C5", "C6", "C7", "Fano", "F32",
        "STS:7",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}
