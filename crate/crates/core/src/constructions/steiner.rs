//! Steiner triple systems: Bose for `t ≡ 3`, Skolem for `t ≡ 1 (mod 6)`.
//!
//! Points are `Z_q × Z_3` (plus `∞` in the Skolem case), with `(x, i)`
//! labeled `x + i*q` and `∞` labeled `t - 1`.

use crate::error::{Error, Result};
use crate::graph::{Hypergraph3, Triple};

/// A Steiner triple system on `t` vertices: every pair lies in exactly one
/// edge.
pub fn steiner(t: usize) -> Result<Hypergraph3> {
    if t < 3 || !matches!(t % 6, 1 | 3) {
        return Err(Error::InvalidParameter(format!(
            "a Steiner triple system on {t} vertices needs t >= 3 and t ≡ 1 or 3 (mod 6)"
        )));
    }
    let triples = if t % 6 == 3 {
        bose(t / 6)
    } else {
        skolem(t / 6)
    };
    Hypergraph3::new(t, triples)
}

fn bose(k: usize) -> Vec<Triple> {
    let q = 2 * k + 1;
    // idempotent commutative quasigroup: (x + y) / 2 in Z_q
    let op = |x: usize, y: usize| (x + y) * (k + 1) % q;
    let at = |x: usize, i: usize| x + (i % 3) * q;
    let mut out: Vec<Triple> = (0..q).map(|x| [at(x, 0), at(x, 1), at(x, 2)]).collect();
    for i in 0..3 {
        for x in 0..q {
            for y in x + 1..q {
                out.push([at(x, i), at(y, i), at(op(x, y), i + 1)]);
            }
        }
    }
    out
}

fn skolem(k: usize) -> Vec<Triple> {
    let q = 2 * k;
    // half-idempotent commutative quasigroup: x∘x = (x+k)∘(x+k) = x for x < k
    let op = |x: usize, y: usize| {
        let e = (x + y) % q;
        if e.is_multiple_of(2) {
            e / 2
        } else {
            (e - 1) / 2 + k
        }
    };
    let at = |x: usize, i: usize| x + (i % 3) * q;
    let inf = 3 * q;
    let mut out: Vec<Triple> = (0..k).map(|x| [at(x, 0), at(x, 1), at(x, 2)]).collect();
    for i in 0..3 {
        for x in 0..k {
            out.push([inf, at(x + k, i), at(x, i + 1)]);
        }
        for x in 0..q {
            for y in x + 1..q {
                out.push([at(x, i), at(y, i), at(op(x, y), i + 1)]);
            }
        }
    }
    out
}
