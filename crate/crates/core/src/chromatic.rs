//! Chromatic polynomials and acyclic orientation counts.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{falling_factorial, IntPolynomial, Var};

/// Orientation enumeration guard for [`acyclic_count_brute`].
pub const BRUTE_EDGE_LIMIT: usize = 24;

const CACHE_LIMIT: usize = 1 << 20;

/// Memo table for deletion–contraction, keyed by the canonical labeled
/// graph. Safe to share between threads; a computation never holds the lock.
#[derive(Default)]
pub struct ChromaticCache {
    table: RwLock<HashMap<Graph, IntPolynomial>>,
}

impl ChromaticCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide cache used by the free functions in this module.
    pub fn global() -> &'static ChromaticCache {
        static CACHE: OnceLock<ChromaticCache> = OnceLock::new();
        CACHE.get_or_init(ChromaticCache::new)
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.table.write().unwrap().clear();
    }

    pub fn chromatic_poly(&self, g: &Graph) -> IntPolynomial {
        self.chromatic_with_pivot(g, |g| g.edges()[0])
    }

    /// Deletion–contraction with a caller-chosen pivot edge. The pivot choice
    /// must not change the answer, which the tests exploit.
    pub fn chromatic_with_pivot(
        &self,
        g: &Graph,
        pivot: impl Fn(&Graph) -> (usize, usize) + Copy,
    ) -> IntPolynomial {
        if let Some(p) = base_case(g) {
            return p;
        }
        if let Some(p) = self.table.read().unwrap().get(g) {
            return p.clone();
        }
        let (u, v) = pivot(g);
        let deleted = delete_edge(g, u, v);
        let contracted = contract_edge(g, u, v);
        let p = &self.chromatic_with_pivot(&deleted, pivot)
            - &self.chromatic_with_pivot(&contracted, pivot);
        let mut table = self.table.write().unwrap();
        if table.len() >= CACHE_LIMIT {
            table.clear();
        }
        table.insert(g.clone(), p.clone());
        p
    }
}

fn base_case(g: &Graph) -> Option<IntPolynomial> {
    let n = g.n();
    if g.edge_count() == 0 {
        return Some(IntPolynomial::monomial(1, n).in_var(Var::D));
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Some(falling_factorial(n));
    }
    None
}

fn delete_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let edges: Vec<_> = g.edges().iter().copied().filter(|&e| e != (u, v)).collect();
    crate::graph::make_graph(g.n(), &edges).expect("subgraph of a valid graph")
}

/// Identifies `v` with `u` (u < v); later labels shift down by one.
fn contract_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let labels: Vec<usize> = (0..=g.n())
        .map(|x| match x {
            0 => 0,
            x if x == v => u - 1,
            x if x > v => x - 2,
            x => x - 1,
        })
        .collect();
    g.quotient(&labels, g.n() - 1)
}

/// The chromatic polynomial in `d`, via the shared memo table.
pub fn chromatic_poly(g: &Graph) -> IntPolynomial {
    ChromaticCache::global().chromatic_poly(g)
}

/// Number of acyclic orientations, `(-1)^n chi(g, -1)`.
pub fn acyclic_count(g: &Graph) -> BigInt {
    let value = chromatic_poly(g).eval_i64(-1);
    if g.n().is_multiple_of(2) {
        value
    } else {
        -value
    }
}

/// Counts acyclic orientations by trying all `2^|E|` of them.
pub fn acyclic_count_brute(g: &Graph) -> Result<BigInt> {
    let m = g.edge_count();
    if m > BRUTE_EDGE_LIMIT {
        return Err(Error::Budget {
            what: "orientation enumeration (edges)",
            limit: BRUTE_EDGE_LIMIT,
            requested: m,
            hint: "; use acyclic_count instead",
        });
    }
    let full = g.full_mask();
    let mut count: u64 = 0;
    let mut out = vec![0u64; g.n()];
    for bits in 0u32..(1u32 << m) {
        out.iter_mut().for_each(|o| *o = 0);
        for (k, &(i, j)) in g.edges().iter().enumerate() {
            if bits & (1 << k) == 0 {
                out[i - 1] |= 1 << (j - 1);
            } else {
                out[j - 1] |= 1 << (i - 1);
            }
        }
        if is_acyclic(&out, full) {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Peels sinks until nothing is left (acyclic) or no sink remains.
fn is_acyclic(out: &[u64], full: u64) -> bool {
    let mut remaining = full;
    while remaining != 0 {
        let mut sinks = 0u64;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if out[v] & remaining == 0 {
                sinks |= 1 << v;
            }
        }
        if sinks == 0 {
            return false;
        }
        remaining &= !sinks;
    }
    true
}
