mod common;

use h3cover::analysis::{classify_sy, SyLabel, AB, AC, AX, BC, BX, CX};
use h3cover::constructions::{blow_up, f2, f32_tripartite, fano_bipartite};
use h3cover::graph::triple_count;
use h3cover::{
    c2_bounds, c2_exact, canonical_key, edge_extendable, verify_construction, Budget, Hypergraph3,
    Pattern, SearchOptions,
};

fn pat(name: &str) -> Pattern {
    name.parse().unwrap()
}

fn all_graphs(n: usize) -> impl Iterator<Item = Hypergraph3> {
    let m = triple_count(n);
    (0u64..1 << m).map(move |mask| Hypergraph3::from_words(n, vec![mask]).unwrap())
}

/// Max δ₂ over graphs on `n` vertices with a vertex in no copy of `p`,
/// straight from the definition.
fn brute_c2(p: &Pattern, n: usize) -> usize {
    let mut best = 0;
    for g in all_graphs(n) {
        let d = common::min_codegree(&g);
        if d >= best && (0..n).any(|x| !common::covers(&g, x, p)) {
            best = d;
        }
    }
    best
}

#[test]
fn four_vertex_graphs_fall_into_five_classes() {
    let mut keys: Vec<_> = all_graphs(4).map(|g| canonical_key(&g).unwrap()).collect();
    assert_eq!(keys.len(), 16);
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), 5);
}

#[test]
fn five_vertex_classes() {
    let mut keys: Vec<_> = all_graphs(5).map(|g| canonical_key(&g).unwrap()).collect();
    keys.sort();
    keys.dedup();
    // non-isomorphic 3-graphs on 5 vertices
    assert_eq!(keys.len(), 34);
}

#[test]
fn exhaustive_search_matches_definition() {
    for (name, ns) in [
        ("K4", 4..=5),
        ("K4-", 4..=5),
        ("C5", 5..=5),
        ("K5-", 5..=5),
        ("F32", 5..=5),
    ] {
        let p = pat(name);
        for n in ns {
            let want = brute_c2(&p, n);
            for prune_iso in [false, true] {
                let opts = SearchOptions {
                    prune_iso,
                    ..SearchOptions::default()
                };
                let r = c2_exact(&p, n, &opts).unwrap();
                assert_eq!(r.value, Some(want), "{name} n = {n} prune {prune_iso}");
            }
        }
    }
}

#[test]
fn search_value_independent_of_workers_and_pruning() {
    for name in ["K4", "K4-", "C5", "F32"] {
        let p = pat(name);
        let mut values = Vec::new();
        for workers in [1, 2, 8] {
            for prune_iso in [false, true] {
                let opts = SearchOptions {
                    workers,
                    prune_iso,
                    budget: Budget::default(),
                };
                values.push(c2_exact(&p, 6, &opts).unwrap().value);
            }
        }
        assert!(
            values.iter().all(|v| *v == values[0] && v.is_some()),
            "{name}: {values:?}"
        );
    }
}

#[test]
fn witnesses_are_genuine() {
    for name in ["K4", "C5", "K5-", "Fano"] {
        let p = pat(name);
        let n = p.f().max(6);
        let r = c2_exact(&p, n, &SearchOptions::default()).unwrap();
        let w = r.witness_graph();
        assert_eq!(Some(common::min_codegree(&w)), r.value, "{name}");
        assert!(!common::covers(&w, r.uncovered_vertex, &p), "{name}");
    }
}

#[test]
fn sy_violation_count_matches_oracle() {
    let k4 = pat("K4");
    let pair_vertices = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
    let (mut lib, mut oracle) = (0, 0);
    for mask in 0u8..64 {
        let mut edges = vec![[0, 1, 3], [1, 2, 3], [0, 2, 3]];
        edges.extend(
            (0..6)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| [pair_vertices[i].0, pair_vertices[i].1, 4]),
        );
        let g = Hypergraph3::new(5, edges).unwrap();
        if classify_sy(&g, [0, 1, 2, 3], 4).unwrap().label != SyLabel::Violation {
            lib += 1;
        }
        if !common::covers(&g, 3, &k4) {
            oracle += 1;
        }
    }
    // masks inside one of the seven maximal sets, counted directly
    let seven = [
        AX | BX | AC | BC,
        AX | CX | AB | BC,
        BX | CX | AB | AC,
        AB | AC | BC | AX,
        AB | AC | BC | BX,
        AB | AC | BC | CX,
        AX | BX | CX,
    ];
    let inside = (0u8..64)
        .filter(|m| seven.iter().any(|s| m & !s == 0))
        .count();
    assert_eq!(lib, oracle);
    assert_eq!(lib, inside);
    assert_eq!(lib, 45);
}

#[test]
fn edge_extension_matches_oracle() {
    let k4 = pat("K4");
    let mut seed = 0x9e37_79b9_7f4a_7c15u64;
    for _ in 0..40 {
        let g = Hypergraph3::from_fn(6, |_, _, _| {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            !seed.is_multiple_of(3)
        });
        for e in g.edges() {
            // brute force: a fourth vertex completing e to a K4
            let want = (0..6).any(|w| {
                !e.contains(&w)
                    && g.contains(e[0], e[1], w)
                    && g.contains(e[0], e[2], w)
                    && g.contains(e[1], e[2], w)
            });
            assert_eq!(edge_extendable(&g, e, &k4).unwrap(), want);
        }
    }
}

#[test]
fn dense_hosts_extend_every_triple_to_k4_minus() {
    let k4m = pat("K4-");
    for n in 4..=9 {
        let g = Hypergraph3::complete(n);
        for e in g.edges() {
            assert!(edge_extendable(&g, e, &k4m).unwrap());
        }
    }
}

#[test]
fn blow_up_examples() {
    let (g, c) = blow_up(pat("K4-").graph(), 2).unwrap();
    assert_eq!((g.n(), common::min_codegree(&g)), (9, 5));
    assert_eq!(c.min_codegree, Some(5));
    let triple = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
    let (g, c) = blow_up(&triple, 1).unwrap();
    assert_eq!((g.n(), common::min_codegree(&g)), (4, 2));
    assert_eq!(c.min_codegree, Some(2));
    let (g, c) = blow_up(&h3cover::patterns::fano_plane().complement(), 2).unwrap();
    assert_eq!((g.n(), common::min_codegree(&g)), (15, 11));
    assert_eq!(c.min_codegree, Some(11));
    assert!(verify_construction(&g, &c, &pat("K6")).pass);
}

#[test]
fn two_colourable_constructions_avoid_their_patterns() {
    for n in 7..=9 {
        assert!(
            !common::contains_copy(&fano_bipartite(n).unwrap().0, &pat("Fano")),
            "n = {n}"
        );
        assert!(
            !common::contains_copy(&f32_tripartite(n).unwrap().0, &pat("F32")),
            "n = {n}"
        );
    }
    assert_eq!(common::min_codegree(&fano_bipartite(10).unwrap().0), 5);
    assert_eq!(common::min_codegree(&f32_tripartite(9).unwrap().0), 2);
    assert_eq!(common::min_codegree(&f32_tripartite(12).unwrap().0), 3);
}

#[test]
fn f2_claims_verify() {
    for n in [13, 17, 20] {
        let (g, c) = f2(n).unwrap();
        let report = verify_construction(&g, &c, &pat("K4-"));
        assert!(report.pass, "n = {n}: {report:?}");
    }
    let b = c2_bounds(&pat("K4-"), 17).unwrap();
    assert_eq!(b.exact, Some(5));
}
