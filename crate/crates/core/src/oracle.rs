//! Brute-force face counts of a graphical zonotope from covectors.
//!
//! A point `x` of `R^n` has, for the generator `e_i - e_j` of edge `(i, j)`,
//! the sign of `x_i - x_j`. Sorting the distinct coordinate values of `x`
//! groups the vertices into an ordered set partition, and the signs depend
//! only on that ordered partition. Sweeping every ordered set partition
//! therefore produces every covector. Each covector is a face whose
//! dimension is the rank of its zero edges.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::RestrictedGrowth;
use crate::error::{Error, Result};
use crate::graph::{components_within, Graph};
use crate::zonotope::FVector;

/// Vertex limit for ordered set partition sweeps (Fubini(9) = 7,087,261).
pub const ORACLE_LIMIT: usize = 9;

fn check_budget(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Budget {
            what: "ordered set partition sweep (vertices)",
            limit,
            requested: n,
            hint: "",
        });
    }
    Ok(())
}

/// A sequence of disjoint nonempty blocks covering `1..=n`, order significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        // validate as an unordered partition, keep the caller's order
        crate::graph::VertexPartition::new(n, blocks.clone())?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `levels[v - 1]` is the position of the block holding `v`.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut levels = vec![0; n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &v in b {
                levels[v - 1] = k;
            }
        }
        levels
    }

    fn from_levels(levels: &[usize], blocks: usize) -> Self {
        let mut out = vec![Vec::new(); blocks];
        for (v, &l) in levels.iter().enumerate() {
            out[l].push(v + 1);
        }
        OrderedSetPartition { blocks: out }
    }
}

/// Level vectors of all ordered set partitions: every set partition (in
/// restricted growth order) with its blocks arranged in every order
/// (lexicographic permutation order).
struct LevelSweep {
    rgs: RestrictedGrowth,
    perm: Vec<usize>,
    fresh: bool,
}

impl LevelSweep {
    fn new(n: usize) -> Self {
        LevelSweep {
            rgs: RestrictedGrowth::new(n),
            perm: Vec::new(),
            fresh: true,
        }
    }

    /// Writes the next level vector into `levels`.
    fn next_into(&mut self, levels: &mut Vec<usize>) -> Option<usize> {
        if self.fresh || !next_permutation(&mut self.perm) {
            if !self.rgs.advance() {
                return None;
            }
            self.perm = (0..self.rgs.block_count()).collect();
            self.fresh = false;
        }
        levels.clear();
        levels.extend(self.rgs.current().iter().map(|&b| self.perm[b]));
        Some(self.perm.len())
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub struct OrderedSetPartitions {
    sweep: LevelSweep,
    levels: Vec<usize>,
}

impl Iterator for OrderedSetPartitions {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        let k = self.sweep.next_into(&mut self.levels)?;
        Some(OrderedSetPartition::from_levels(&self.levels, k))
    }
}

/// Every ordered set partition of `1..=n`, each exactly once.
pub fn ordered_set_partitions(n: usize) -> Result<OrderedSetPartitions> {
    if n == 0 {
        return Err(crate::error::invalid("ordered set partitions need n >= 1"));
    }
    check_budget(n, ORACLE_LIMIT)?;
    Ok(OrderedSetPartitions {
        sweep: LevelSweep::new(n),
        levels: Vec::with_capacity(n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

impl Sign {
    fn code(self) -> u64 {
        match self {
            Sign::Zero => 0,
            Sign::Plus => 1,
            Sign::Minus => 2,
        }
    }

    fn from_code(c: u64) -> Sign {
        match c {
            0 => Sign::Zero,
            1 => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Zero => '0',
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Sign vector over the graph's canonical edge order, two bits per entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Covector {
    len: usize,
    words: Vec<u64>,
}

impl Covector {
    fn zeros(len: usize) -> Self {
        Covector {
            len,
            words: vec![0; len.div_ceil(32).max(1)],
        }
    }

    fn set(&mut self, k: usize, s: Sign) {
        let (w, off) = (k / 32, 2 * (k % 32));
        self.words[w] = (self.words[w] & !(3 << off)) | (s.code() << off);
    }

    pub fn get(&self, k: usize) -> Sign {
        Sign::from_code((self.words[k / 32] >> (2 * (k % 32))) & 3)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.len).map(|k| self.get(k)).collect()
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut c = Covector::zeros(signs.len());
        for (k, &s) in signs.iter().enumerate() {
            c.set(k, s);
        }
        c
    }

    pub fn negated(&self) -> Self {
        let signs: Vec<Sign> = self
            .signs()
            .into_iter()
            .map(|s| match s {
                Sign::Plus => Sign::Minus,
                Sign::Minus => Sign::Plus,
                Sign::Zero => Sign::Zero,
            })
            .collect();
        Covector::from_signs(&signs)
    }

    pub fn is_zero_free(&self) -> bool {
        (0..self.len).all(|k| self.get(k) != Sign::Zero)
    }

    pub fn is_all_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Face dimension: rank of the spanning subgraph on the zero entries.
    pub fn face_dimension(&self, g: &Graph) -> usize {
        let mut adj = vec![0u64; g.n()];
        for (k, &(i, j)) in g.edges().iter().enumerate() {
            if self.get(k) == Sign::Zero {
                adj[i - 1] |= 1 << (j - 1);
                adj[j - 1] |= 1 << (i - 1);
            }
        }
        g.n() - components_within(&adj, g.full_mask()).len()
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.signs().into_iter().map(Sign::symbol).collect();
        write!(f, "{s}")
    }
}

fn covector_from_levels(g: &Graph, levels: &[usize]) -> Covector {
    let mut c = Covector::zeros(g.edge_count());
    for (k, &(i, j)) in g.edges().iter().enumerate() {
        let s = match levels[i - 1].cmp(&levels[j - 1]) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        };
        c.set(k, s);
    }
    c
}

/// Entry for edge `(i, j)` is the sign of `level(i) - level(j)`.
pub fn covector_of(g: &Graph, p: &OrderedSetPartition) -> Result<Covector> {
    let covered: usize = p.blocks().iter().map(Vec::len).sum();
    if covered != g.n() {
        return Err(crate::error::invalid(format!(
            "ordered partition covers {covered} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(covector_from_levels(g, &p.levels()))
}

/// The deduplicated set of covectors of the graphical arrangement.
pub fn enumerate_covectors(g: &Graph) -> Result<BTreeSet<Covector>> {
    enumerate_covectors_with_budget(g, ORACLE_LIMIT)
}

pub fn enumerate_covectors_with_budget(g: &Graph, budget: usize) -> Result<BTreeSet<Covector>> {
    check_budget(g.n(), budget.min(ORACLE_LIMIT))?;
    // split the sweep by set partition; block orderings run inside a worker
    let mut rgs = RestrictedGrowth::new(g.n());
    let mut seeds = Vec::new();
    while rgs.advance() {
        seeds.push((rgs.current().to_vec(), rgs.block_count()));
    }
    let found = seeds
        .par_iter()
        .fold(HashSet::new, |mut acc, (labels, k)| {
            let mut perm: Vec<usize> = (0..*k).collect();
            let mut levels = vec![0; labels.len()];
            loop {
                for (l, &b) in levels.iter_mut().zip(labels) {
                    *l = perm[b];
                }
                acc.insert(covector_from_levels(g, &levels));
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.into_iter().collect())
}

/// Face counts by dimension from the covector sweep.
pub fn f_vector_oracle(g: &Graph) -> Result<FVector> {
    f_vector_oracle_with_budget(g, ORACLE_LIMIT)
}

pub fn f_vector_oracle_with_budget(g: &Graph, budget: usize) -> Result<FVector> {
    let covectors = enumerate_covectors_with_budget(g, budget)?;
    Ok(tally(g, &covectors))
}

pub fn tally(g: &Graph, covectors: &BTreeSet<Covector>) -> FVector {
    let mut counts = vec![0u64; g.rank() + 1];
    for c in covectors {
        counts[c.face_dimension(g)] += 1;
    }
    FVector::new(counts.into_iter().map(BigInt::from).collect())
}
