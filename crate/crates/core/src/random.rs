//! Seeded random graphs for reproducible sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{make_graph, Edge, Graph};

/// Deterministic generator: the same seed always yields the same sequence.
pub struct GraphSampler {
    rng: ChaCha8Rng,
}

impl GraphSampler {
    pub fn new(seed: u64) -> Self {
        GraphSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn gnp(&mut self, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        make_graph(n, &edges).expect("sampled edges are in range")
    }

    /// `G(n, p)` conditioned on being connected, by rejection.
    pub fn connected_gnp(&mut self, n: usize, p: f64) -> Graph {
        loop {
            let g = self.gnp(n, p);
            if g.is_connected() {
                return g;
            }
        }
    }

    /// A random labeled tree: each vertex attaches to an earlier one, then
    /// the labels are shuffled.
    pub fn tree(&mut self, n: usize) -> Graph {
        let mut labels: Vec<usize> = (1..=n).collect();
        labels.shuffle(&mut self.rng);
        let edges: Vec<Edge> = (1..n)
            .map(|k| {
                let parent = self.rng.gen_range(0..k);
                (labels[parent], labels[k])
            })
            .collect();
        make_graph(n, &edges).expect("tree edges are in range")
    }

    pub fn vertex(&mut self, g: &Graph) -> usize {
        self.rng.gen_range(1..=g.n())
    }

    /// Uniform size in an inclusive range.
    pub fn size(&mut self, range: std::ops::RangeInclusive<usize>) -> usize {
        self.rng.gen_range(range)
    }
}
