//! Flats of the graphical matroid.
//!
//! A flat is an edge set whose connected pieces are induced subgraphs.
//! Equivalently it is a partition of the vertex set into blocks that each
//! induce a connected subgraph, the flat being every edge inside a block.
//! Flats are enumerated through the second description: walk all set
//! partitions and keep the ones with connected blocks.

use crate::combinat::RestrictedGrowth;
use crate::error::{invalid, Result};
use crate::graph::{
    components_within, is_connected_within, Edge, Graph, VertexMask, VertexPartition,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    partition: VertexPartition,
    edge_set: Vec<Edge>,
    rank: usize,
}

impl Flat {
    pub fn partition(&self) -> &VertexPartition {
        &self.partition
    }

    /// The closed edge set, in canonical edge order.
    pub fn edge_set(&self) -> &[Edge] {
        &self.edge_set
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of connected pieces of `(V, F)`, isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.partition.len()
    }

    /// The contraction `g / F`.
    pub fn contract(&self, g: &Graph) -> Graph {
        g.quotient(&self.partition.block_labels(), self.partition.len())
    }
}

/// Lazy enumeration of all flats of a graph, ordered by the restricted
/// growth string of the vertex partition.
pub struct Flats<'a> {
    graph: &'a Graph,
    adj: Vec<VertexMask>,
    rgs: RestrictedGrowth,
}

impl Iterator for Flats<'_> {
    type Item = Flat;

    fn next(&mut self) -> Option<Flat> {
        while self.rgs.advance() {
            let masks = self.rgs.block_masks();
            if masks.iter().all(|&m| is_connected_within(&self.adj, m)) {
                return Some(flat_from_blocks(self.graph, self.rgs.current(), &masks));
            }
        }
        None
    }
}

fn flat_from_blocks(g: &Graph, labels0: &[usize], masks: &[VertexMask]) -> Flat {
    let edge_set = g
        .edges()
        .iter()
        .copied()
        .filter(|&(i, j)| labels0[i - 1] == labels0[j - 1])
        .collect();
    Flat {
        partition: VertexPartition::from_masks(masks),
        edge_set,
        rank: g.n() - masks.len(),
    }
}

pub fn enumerate_flats(g: &Graph) -> Flats<'_> {
    Flats {
        graph: g,
        adj: g.adjacency_masks(),
        rgs: RestrictedGrowth::new(g.n()),
    }
}

/// Flats of rank `k`; out-of-range `k` yields nothing.
pub fn flats_of_rank(g: &Graph, k: usize) -> Vec<Flat> {
    if k > g.rank() {
        return Vec::new();
    }
    enumerate_flats(g).filter(|f| f.rank == k).collect()
}

/// Whether `edge_subset` is closed: every edge of `g` spanned by a
/// component of `(V, edge_subset)` already lies in the subset.
pub fn is_flat(g: &Graph, edge_subset: &[Edge]) -> Result<bool> {
    let mut chosen = vec![false; g.edge_count()];
    let mut adj = vec![0u64; g.n()];
    for &(a, b) in edge_subset {
        let idx = g
            .edge_index(a, b)
            .ok_or_else(|| invalid(format!("edge ({a},{b}) is not an edge of the graph")))?;
        chosen[idx] = true;
        adj[a - 1] |= 1 << (b - 1);
        adj[b - 1] |= 1 << (a - 1);
    }
    let mut label = vec![0usize; g.n() + 1];
    for (c, comp) in components_within(&adj, g.full_mask())
        .into_iter()
        .enumerate()
    {
        for v in crate::graph::mask_to_vertices(comp) {
            label[v] = c;
        }
    }
    Ok(g.edges()
        .iter()
        .zip(&chosen)
        .all(|(&(i, j), &inside)| inside || label[i] != label[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, make_graph, FamilyKind};
    use std::collections::{BTreeMap, BTreeSet};

    fn rank_profile(g: &Graph) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for f in enumerate_flats(g) {
            *m.entry(f.rank()).or_default() += 1;
        }
        m
    }

    /// Closed edge subsets found by filtering all `2^|E|` subsets.
    fn brute_flats(g: &Graph) -> BTreeSet<Vec<Edge>> {
        let m = g.edge_count();
        (0u32..1 << m)
            .map(|bits| {
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| bits & (1 << k) != 0)
                    .map(|(_, e)| *e)
                    .collect::<Vec<_>>()
            })
            .filter(|s| is_flat(g, s).unwrap())
            .collect()
    }

    #[test]
    fn triangle_flats() {
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert_eq!(rank_profile(&k3), BTreeMap::from([(0, 1), (1, 3), (2, 1)]));
        assert_eq!(brute_flats(&k3).len(), 5);
    }

    #[test]
    fn single_vertex_has_one_flat() {
        let k1 = make_graph(1, &[]).unwrap();
        let flats: Vec<_> = enumerate_flats(&k1).collect();
        assert_eq!(flats.len(), 1);
        assert_eq!(flats[0].rank(), 0);
        assert!(flats[0].edge_set().is_empty());
    }

    #[test]
    fn four_cycle_profile_matches_brute_force() {
        let c4 = family(FamilyKind::Cycle, 4).unwrap();
        let brute = brute_flats(&c4);
        // every proper subset of the 4 edges is closed except the 3-edge paths
        assert_eq!(brute.len(), 12);
        let mut expected = BTreeMap::new();
        for s in &brute {
            *expected
                .entry(c4.spanning_subgraph(s).unwrap().rank())
                .or_insert(0) += 1;
        }
        assert_eq!(rank_profile(&c4), expected);
        assert_eq!(expected, BTreeMap::from([(0, 1), (1, 4), (2, 6), (3, 1)]));
    }

    #[test]
    fn is_flat_examples() {
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert!(is_flat(&k3, &[(1, 2)]).unwrap());
        assert!(!is_flat(&k3, &[(1, 2), (1, 3)]).unwrap());
        let ex = make_graph(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(is_flat(&ex, &[(1, 2), (1, 3), (2, 3)]).unwrap());
        assert!(is_flat(&k3, &[(1, 4)]).is_err());
    }

    #[test]
    fn rank_slices() {
        for n in 3..=7 {
            let c = family(FamilyKind::Cycle, n).unwrap();
            assert_eq!(flats_of_rank(&c, 0).len(), 1);
            assert_eq!(flats_of_rank(&c, n - 1).len(), 1);
            assert_eq!(flats_of_rank(&c, n - 2).len(), n * (n - 1) / 2);
            assert!(flats_of_rank(&c, n).is_empty());
        }
    }

    #[test]
    fn order_is_deterministic() {
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        let sets: Vec<Vec<Edge>> = enumerate_flats(&k3)
            .map(|f| f.edge_set().to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![
                vec![(1, 2), (1, 3), (2, 3)],
                vec![(1, 2)],
                vec![(1, 3)],
                vec![(2, 3)],
                vec![],
            ]
        );
    }

    #[test]
    fn flats_agree_with_closed_subsets_up_to_twelve_edges() {
        // all graphs on 5 vertices, plus a few denser ones on 6
        let pairs5: Vec<Edge> = (1..=5)
            .flat_map(|i| (i + 1..=5).map(move |j| (i, j)))
            .collect();
        let mut graphs: Vec<Graph> = (0u32..1 << pairs5.len())
            .step_by(7)
            .map(|bits| {
                let es: Vec<Edge> = pairs5
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| bits & (1 << k) != 0)
                    .map(|(_, e)| *e)
                    .collect();
                make_graph(5, &es).unwrap()
            })
            .collect();
        graphs.push(family(FamilyKind::Cycle, 6).unwrap());
        graphs.push(
            make_graph(
                6,
                &[
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (4, 6),
                    (1, 6),
                    (2, 5),
                    (3, 6),
                    (1, 4),
                    (2, 6),
                ],
            )
            .unwrap(),
        );
        for g in graphs {
            let from_partitions: BTreeSet<Vec<Edge>> =
                enumerate_flats(&g).map(|f| f.edge_set().to_vec()).collect();
            let flats: Vec<Flat> = enumerate_flats(&g).collect();
            assert_eq!(
                flats.len(),
                from_partitions.len(),
                "duplicate flats for {g}"
            );
            assert_eq!(from_partitions, brute_flats(&g), "{g}");
            for f in &flats {
                assert!(is_flat(&g, f.edge_set()).unwrap());
                assert_eq!(f.rank(), g.n() - f.component_count());
                assert_eq!(f.rank(), g.spanning_subgraph(f.edge_set()).unwrap().rank());
            }
        }
    }

    #[test]
    fn tree_and_complete_counts() {
        for n in 1..=8 {
            let path = family(FamilyKind::Path, n).unwrap();
            assert_eq!(enumerate_flats(&path).count(), 1 << (n - 1));
            let star = family(FamilyKind::Star, n).unwrap();
            assert_eq!(enumerate_flats(&star).count(), 1 << (n - 1));
            let k = family(FamilyKind::Complete, n).unwrap();
            assert_eq!(
                enumerate_flats(&k).count() as u128,
                crate::combinat::bell(n)
            );
        }
    }
}
