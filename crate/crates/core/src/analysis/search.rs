//! Exact `c₂(n, F)` for tiny `n` by exhaustive search.
//!
//! The uncovered vertex is fixed to `x = n - 1` (any witness can be relabeled
//! so). For `k = n - 2, n - 3, …` the search asks whether some graph has
//! `δ₂ >= k` while `x` lies in no copy of `F`; the first `k` with a witness
//! is the answer. Triples are decided from the highest colex rank down with
//! the 0-branch first, so the triples through `x` (the top ranks) come first
//! and every assignment of them is an independent task for the worker pool.
//!
//! Two prunes keep this small. A triple can only be left out while every
//! pair it contains can still reach codegree `k` from the included and
//! undecided triples. A triple can only be put in while `x` stays uncovered,
//! which is tested against a precomputed list of the edge sets of all copies
//! of `F` through `x` in `K_n`. With isomorph pruning on, only one link graph
//! per isomorphism class (under relabelings fixing `x`) becomes a task.
//!
//! Every task runs to its own first witness, and the reported witness is the
//! one from the lowest-numbered task, so value, witness and node count do not
//! depend on the number of workers.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::canon::for_each_permutation;
use crate::embed::embed_covering;
use crate::error::{Error, Result};
use crate::graph::{binom2, pair_rank, triple_count, triple_rank, Hypergraph3, Triple};
use crate::patterns::Pattern;

/// Largest `n` searched without isomorph pruning.
pub const RAW_CAP: usize = 6;
/// Largest `n` searched at all (requires isomorph pruning).
pub const PRUNED_CAP: usize = 7;

/// Limits on one search. `None` means unlimited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    pub prune_iso: bool,
    pub budget: Budget,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            prune_iso: true,
            budget: Budget::default(),
        }
    }
}

/// Outcome of [`c2_exact`]. When `exhaustive` is false the search ran out of
/// budget: `value` is absent and only `lower <= c₂ <= upper` is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: u32,
    pub pattern: String,
    pub n: usize,
    pub exhaustive: bool,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// Edges of a graph with `δ₂ = lower` in which `uncovered_vertex` lies in
    /// no copy of the pattern.
    pub witness: Vec<Triple>,
    pub uncovered_vertex: usize,
    /// Search nodes visited over all levels and tasks.
    pub nodes: u64,
    /// Wall time; not serialized so that reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn witness_graph(&self) -> Hypergraph3 {
        Hypergraph3::new(self.n, self.witness.iter().copied()).expect("witness edges are valid")
    }
}

/// Fixed data shared by all tasks of one search.
struct Space {
    /// Non-apex triple ranks, descending.
    order: Vec<usize>,
    /// Pair indices of each triple, by rank.
    pairs_of: Vec<[usize; 3]>,
    /// Bit mask of the non-apex triples.
    rest: u64,
    /// Per pair, mask of the triples containing it.
    pair_mask: Vec<u64>,
    /// Per triple rank, edge masks of copies through `x` that use it.
    copies_with: Vec<Vec<u64>>,
    /// All copy masks through `x`.
    copies: Vec<u64>,
}

impl Space {
    fn new(pattern: &Pattern, n: usize) -> Self {
        let x = n - 1;
        let t = triple_count(n);
        let pairs = binom2(n);
        let mut pair_mask = vec![0u64; pairs];
        let mut pairs_of = vec![[0; 3]; t];
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    let r = triple_rank(a, b, c);
                    let ps = [pair_rank(a, b), pair_rank(a, c), pair_rank(b, c)];
                    for &p in &ps {
                        pair_mask[p] |= 1 << r;
                    }
                    pairs_of[r] = ps;
                }
            }
        }
        let link_start = triple_count(n - 1);
        let order: Vec<usize> = (0..link_start).rev().collect();
        let rest = order.iter().fold(0u64, |m, &r| m | 1 << r);

        let copies = copy_masks(pattern, n, x);
        let mut copies_with = vec![Vec::new(); t];
        for &m in &copies {
            for (r, list) in copies_with.iter_mut().enumerate() {
                if m >> r & 1 == 1 {
                    list.push(m);
                }
            }
        }
        Self {
            order,
            pairs_of,
            rest,
            pair_mask,
            copies_with,
            copies,
        }
    }
}

/// Edge masks (in `K_n`) of all copies of the pattern whose vertex image
/// contains `x`, deduplicated and sorted.
fn copy_masks(pattern: &Pattern, n: usize, x: usize) -> Vec<u64> {
    let f = pattern.f();
    let mut out = Vec::new();
    if f > n {
        return out;
    }
    let edges: Vec<Triple> = pattern.graph().edges().collect();
    let mut map = vec![0usize; f];
    let mut used = vec![false; n];
    fn place(
        i: usize,
        n: usize,
        x: usize,
        edges: &[Triple],
        map: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<u64>,
    ) {
        if i == map.len() {
            if used[x] {
                out.push(edges.iter().fold(0u64, |m, &[a, b, c]| {
                    m | 1 << triple_rank(map[a], map[b], map[c])
                }));
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                map[i] = v;
                place(i + 1, n, x, edges, map, used, out);
                used[v] = false;
            }
        }
    }
    place(0, n, x, &edges, &mut map, &mut used, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// One representative link graph (on `0..n-1`, as a pair bitmap) per
/// isomorphism class, or every link graph when `prune_iso` is off. Ascending.
fn link_candidates(n: usize, prune_iso: bool) -> Vec<u64> {
    let m = n - 1;
    let pairs = binom2(m);
    let total = 1u64 << pairs;
    if !prune_iso {
        return (0..total).collect();
    }
    // pair permutation induced by each vertex permutation
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for_each_permutation(m, |p| {
        let mut img = vec![0; pairs];
        for v in 1..m {
            for u in 0..v {
                img[pair_rank(u, v)] = pair_rank(p[u], p[v]);
            }
        }
        perms.push(img);
    });
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for g in 0..total {
        if seen[g as usize] {
            continue;
        }
        // g is the smallest member of its orbit: everything below was seen
        reps.push(g);
        for img in &perms {
            let mut h = 0u64;
            for (p, &q) in img.iter().enumerate() {
                h |= (g >> p & 1) << q;
            }
            seen[h as usize] = true;
        }
    }
    reps
}

struct Limits {
    start: Instant,
    budget: Budget,
    nodes: AtomicU64,
    stop: AtomicBool,
}

impl Limits {
    fn exceeded(&self, local: u64) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        let total = self.nodes.fetch_add(local, Ordering::Relaxed) + local;
        let over = self.budget.nodes.is_some_and(|cap| total > cap)
            || self.budget.time.is_some_and(|t| self.start.elapsed() > t);
        if over {
            self.stop.store(true, Ordering::Relaxed);
        }
        over
    }
}

const CHECK_EVERY: u64 = 1024;

struct Task<'a> {
    space: &'a Space,
    limits: &'a Limits,
    k: u32,
    bits: u64,
    upper: Vec<u32>,
    nodes: u64,
    pending: u64,
    aborted: bool,
}

impl Task<'_> {
    fn covered_by(&self, rank: usize, bits: u64) -> bool {
        self.space.copies_with[rank].iter().any(|&m| m & !bits == 0)
    }

    fn dfs(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= CHECK_EVERY {
            let local = std::mem::take(&mut self.pending);
            if self.limits.exceeded(local) {
                self.aborted = true;
            }
        }
        if self.aborted {
            return false;
        }
        let Some(&r) = self.space.order.get(depth) else {
            return true;
        };
        let ps = self.space.pairs_of[r];
        if ps.iter().all(|&p| self.upper[p] > self.k) {
            for &p in &ps {
                self.upper[p] -= 1;
            }
            let found = self.dfs(depth + 1);
            for &p in &ps {
                self.upper[p] += 1;
            }
            if found || self.aborted {
                return found;
            }
        }
        let with = self.bits | 1 << r;
        if !self.covered_by(r, with) {
            self.bits = with;
            if self.dfs(depth + 1) {
                return true;
            }
            self.bits &= !(1 << r);
        }
        false
    }
}

struct TaskResult {
    nodes: u64,
    witness: Option<u64>,
    aborted: bool,
}

fn run_task(space: &Space, limits: &Limits, n: usize, k: u32, link: u64) -> TaskResult {
    let link_start = triple_count(n - 1);
    let mut bits = 0u64;
    for p in 0..binom2(n - 1) {
        if link >> p & 1 == 1 {
            bits |= 1 << (link_start + p);
        }
    }
    let skip = TaskResult {
        nodes: 0,
        witness: None,
        aborted: false,
    };
    if space.copies.iter().any(|&m| m & !bits == 0) {
        return skip;
    }
    let reach = bits | space.rest;
    let upper: Vec<u32> = space
        .pair_mask
        .iter()
        .map(|&m| (m & reach).count_ones())
        .collect();
    if upper.iter().any(|&u| u < k) {
        return skip;
    }
    let mut task = Task {
        space,
        limits,
        k,
        bits,
        upper,
        nodes: 0,
        pending: 0,
        aborted: false,
    };
    let found = task.dfs(0);
    // a finished task stands; the check only stops tasks not yet started
    limits.exceeded(task.pending);
    TaskResult {
        nodes: task.nodes,
        witness: found.then_some(task.bits),
        aborted: task.aborted,
    }
}

/// Runs every task of one level; returns (nodes, first witness, aborted).
fn run_level(
    space: &Space,
    limits: &Limits,
    n: usize,
    k: u32,
    links: &[u64],
    workers: usize,
) -> (u64, Option<u64>, bool) {
    let results: Vec<Mutex<Option<TaskResult>>> = links.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..workers.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= links.len() || limits.stop.load(Ordering::Relaxed) {
                    break;
                }
                let r = run_task(space, limits, n, k, links[i]);
                *results[i].lock().expect("no panics while holding the lock") = Some(r);
            });
        }
    });
    let mut nodes = 0;
    let mut witness = None;
    let mut aborted = false;
    for slot in results {
        match slot.into_inner().expect("no panics while holding the lock") {
            Some(r) => {
                nodes += r.nodes;
                aborted |= r.aborted;
                if witness.is_none() {
                    witness = r.witness;
                }
            }
            None => aborted = true,
        }
    }
    (nodes, witness, aborted)
}

/// Exact `c₂(n, F)`: the largest `δ₂` of an `n`-vertex graph in which some
/// vertex lies in no copy of `F`.
///
/// `n <= 6` is searched as is; `n = 7` needs `prune_iso`. Results (value,
/// witness, node count) are identical for every worker count.
///
/// ```
/// use h3cover::{c2_exact, Pattern, SearchOptions};
/// let r = c2_exact(&Pattern::complete(4)?, 5, &SearchOptions::default())?;
/// assert_eq!(r.value, Some(2));
/// # Ok::<(), h3cover::Error>(())
/// ```
pub fn c2_exact(pattern: &Pattern, n: usize, options: &SearchOptions) -> Result<SearchReport> {
    if n < 3 || n < pattern.f() {
        return Err(Error::InvalidParameter(format!(
            "search needs n >= max(3, |V(F)|) = {}, got {n}",
            pattern.f().max(3)
        )));
    }
    let cap = if options.prune_iso {
        PRUNED_CAP
    } else {
        RAW_CAP
    };
    if n > cap {
        return Err(Error::TooLarge {
            what: if options.prune_iso {
                "exhaustive search"
            } else {
                "exhaustive search without isomorph pruning"
            },
            n,
            cap,
        });
    }
    let start = Instant::now();
    let space = Space::new(pattern, n);
    let limits = Limits {
        start,
        budget: options.budget.clone(),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
    };
    let links = link_candidates(n, options.prune_iso);
    let degrees = |link: u64| {
        (0..n - 1)
            .map(|v| {
                (0..n - 1)
                    .filter(|&u| u != v && link >> pair_rank(u, v) & 1 == 1)
                    .count()
            })
            .min()
            .unwrap_or(0) as u32
    };
    let link_min: Vec<u32> = links.iter().map(|&l| degrees(l)).collect();

    let x = n - 1;
    let mut nodes = 0;
    let mut upper = n - 2;
    for k in (0..=n - 2).rev() {
        let level: Vec<u64> = links
            .iter()
            .zip(&link_min)
            .filter(|&(_, &d)| d >= k as u32)
            .map(|(&l, _)| l)
            .collect();
        let (level_nodes, witness, aborted) =
            run_level(&space, &limits, n, k as u32, &level, options.workers);
        nodes += level_nodes;
        if let Some(bits) = witness {
            let g = Hypergraph3::from_words(n, vec![bits]).expect("search bitmaps fit the graph");
            assert_eq!(g.min_codegree(), k, "witness codegree");
            assert!(
                embed_covering(&g, x, pattern).is_none(),
                "witness vertex is covered"
            );
            return Ok(SearchReport {
                schema: 1,
                pattern: pattern.name().to_string(),
                n,
                exhaustive: true,
                value: Some(k),
                lower: k,
                upper: k,
                witness: g.edges().collect(),
                uncovered_vertex: x,
                nodes,
                elapsed: start.elapsed(),
            });
        }
        if aborted {
            break;
        }
        upper = k.saturating_sub(1);
    }
    // Out of budget: the empty graph leaves every vertex uncovered.
    Ok(SearchReport {
        schema: 1,
        pattern: pattern.name().to_string(),
        n,
        exhaustive: false,
        value: None,
        lower: 0,
        upper,
        witness: Vec::new(),
        uncovered_vertex: x,
        nodes,
        elapsed: start.elapsed(),
    })
}
