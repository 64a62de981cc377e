//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! All public interfaces speak 1-indexed vertex labels. Vertex subsets used by
//! the enumeration kernels are `u64` bitmasks with bit `v - 1` standing for
//! vertex `v`, which caps graphs at [`MAX_VERTICES`] vertices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub const MAX_VERTICES: usize = 64;

/// A vertex subset as a bitmask (bit `v - 1` for vertex `v`).
pub type VertexMask = u64;

pub type Edge = (usize, usize);

/// A simple graph with a canonical (sorted, deduplicated) edge list.
///
/// Two `Graph` values compare equal iff they are the same labeled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = crate::Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        let pairs: Vec<Edge> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        make_graph(raw.n, &pairs)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

/// Builds a canonical graph from raw vertex pairs.
///
/// Pairs are normalized to `(min, max)`, sorted and deduplicated; repeated
/// edges are merged silently. Self-loops and out-of-range endpoints are
/// rejected.
pub fn make_graph(n: usize, raw_edges: &[Edge]) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("graph must have at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(invalid(format!(
            "graphs with more than {MAX_VERTICES} vertices are not supported (n = {n})"
        )));
    }
    let mut set = BTreeSet::new();
    for &(a, b) in raw_edges {
        if a < 1 || a > n || b < 1 || b > n {
            return Err(invalid(format!(
                "edge ({a},{b}) has an endpoint outside 1..={n}"
            )));
        }
        if a == b {
            return Err(invalid(format!("edge ({a},{b}) is a self-loop")));
        }
        set.insert((a.min(b), a.max(b)));
    }
    Ok(Graph {
        n,
        edges: set.into_iter().collect(),
    })
}

/// A partition of `1..=n` into nonempty blocks, each block sorted and the
/// blocks ordered by their minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Canonicalizes and validates that `blocks` partition `1..=n`.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(invalid("partition has an empty block"));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v < 1 || v > n {
                    return Err(invalid(format!("vertex {v} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(invalid(format!("vertex {v} appears in two blocks")));
                }
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(invalid(format!(
                "vertex {v} is not covered by the partition"
            )));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(VertexPartition { blocks })
    }

    /// Builds from bitmasks already known to partition the vertex set.
    pub(crate) fn from_masks(masks: &[VertexMask]) -> Self {
        let mut blocks: Vec<Vec<usize>> = masks.iter().map(|&m| mask_to_vertices(m)).collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        VertexPartition { blocks }
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn masks(&self) -> Vec<VertexMask> {
        self.blocks.iter().map(|b| vertices_to_mask(b)).collect()
    }

    /// `labels[v]` is the 0-based index of the block holding vertex `v`.
    pub(crate) fn block_labels(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum::<usize>();
        let mut labels = vec![0; n + 1];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = i;
            }
        }
        labels
    }
}

impl fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let vs: Vec<String> = b.iter().map(ToString::to_string).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

pub fn vertices_to_mask(vs: &[usize]) -> VertexMask {
    vs.iter().fold(0, |m, &v| m | (1 << (v - 1)))
}

pub fn mask_to_vertices(mut mask: VertexMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Position of an edge in the canonical edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn full_mask(&self) -> VertexMask {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Neighborhood bitmask per vertex, indexed 0-based.
    pub fn adjacency_masks(&self) -> Vec<VertexMask> {
        let mut adj = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components as a canonical partition.
    pub fn components(&self) -> VertexPartition {
        let adj = self.adjacency_masks();
        VertexPartition::from_masks(&components_within(&adj, self.full_mask()))
    }

    /// Size of a spanning forest, `n - c`.
    pub fn rank(&self) -> usize {
        self.n - self.components().len()
    }

    /// Induced subgraph on `set`, relabeled `1..=|set|` by increasing label.
    pub fn induced(&self, set: &[usize]) -> Result<Graph> {
        if set.is_empty() {
            return Err(invalid("induced subgraph needs a nonempty vertex set"));
        }
        if let Some(&v) = set.iter().find(|&&v| v < 1 || v > self.n) {
            return Err(invalid(format!("vertex {v} outside 1..={}", self.n)));
        }
        let mut vs = set.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut relabel = vec![0; self.n + 1];
        for (k, &v) in vs.iter().enumerate() {
            relabel[v] = k + 1;
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(i, j)| relabel[i] != 0 && relabel[j] != 0)
            .map(|&(i, j)| (relabel[i], relabel[j]))
            .collect();
        make_graph(vs.len(), &edges)
    }

    /// Contraction by a partition with connected blocks: one vertex per
    /// block (in block order), joined whenever some edge runs between the
    /// blocks. Parallel edges collapse.
    pub fn contract(&self, p: &VertexPartition) -> Result<Graph> {
        let covered: usize = p.blocks().iter().map(Vec::len).sum();
        if covered != self.n {
            return Err(invalid(format!(
                "partition covers {covered} vertices but the graph has {}",
                self.n
            )));
        }
        let adj = self.adjacency_masks();
        for block in p.blocks() {
            let mask = vertices_to_mask(block);
            if components_within(&adj, mask).len() != 1 {
                return Err(invalid(format!(
                    "block {block:?} does not induce a connected subgraph"
                )));
            }
        }
        Ok(self.quotient(&p.block_labels(), p.len()))
    }

    /// Quotient without connectivity checks; `labels[v]` is the 0-based
    /// class of vertex `v` (index 0 unused).
    pub(crate) fn quotient(&self, labels: &[usize], classes: usize) -> Graph {
        let mut set = BTreeSet::new();
        for &(i, j) in &self.edges {
            let (a, b) = (labels[i] + 1, labels[j] + 1);
            if a != b {
                set.insert((a.min(b), a.max(b)));
            }
        }
        Graph {
            n: classes,
            edges: set.into_iter().collect(),
        }
    }

    /// Spanning subgraph `(V, F)` for a subset of this graph's edges.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        for &(a, b) in edges {
            if !self.has_edge(a, b) {
                return Err(invalid(format!(
                    "edge ({a},{b}) is not an edge of the graph"
                )));
            }
        }
        make_graph(self.n, edges)
    }

    /// Degree sequence indexed by vertex label minus one.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i - 1] += 1;
            deg[j - 1] += 1;
        }
        deg
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "n={} E={{{}}}", self.n, es.join(","))
    }
}

/// Connected components of the subgraph induced on `within`.
pub(crate) fn components_within(adj: &[VertexMask], within: VertexMask) -> Vec<VertexMask> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Rank of the induced subgraph on `mask`: `|mask| - components`.
pub(crate) fn induced_rank(adj: &[VertexMask], mask: VertexMask) -> usize {
    mask.count_ones() as usize - components_within(adj, mask).len()
}

pub(crate) fn is_connected_within(adj: &[VertexMask], mask: VertexMask) -> bool {
    if mask == 0 {
        return false;
    }
    let mut comp = mask & mask.wrapping_neg();
    let mut frontier = comp;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp == mask
}

/// Disjoint union; the second graph's vertices are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let shift = g1.n;
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
    make_graph(g1.n + g2.n, &edges)
}

/// Glues `v1` of `g1` to `v2` of `g2`. Labels of `g1` are kept; the other
/// vertices of `g2` follow in increasing order.
pub fn wedge(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    if v1 < 1 || v1 > g1.n {
        return Err(invalid(format!("wedge vertex {v1} outside 1..={}", g1.n)));
    }
    if v2 < 1 || v2 > g2.n {
        return Err(invalid(format!("wedge vertex {v2} outside 1..={}", g2.n)));
    }
    let mut relabel = vec![0; g2.n + 1];
    let mut next = g1.n;
    for (v, slot) in relabel.iter_mut().enumerate().skip(1) {
        if v == v2 {
            *slot = v1;
        } else {
            next += 1;
            *slot = next;
        }
    }
    let mut edges = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(i, j)| (relabel[i], relabel[j])));
    make_graph(g1.n + g2.n - 1, &edges)
}

/// Whitney twist around the 2-cut `{u, v}` on the side `side`.
///
/// Edges from `side` to `u` are redirected to `v` and vice versa; every other
/// edge is kept. `{u, v}` must separate `side` from the remaining vertices.
pub fn whitney_twist(g: &Graph, u: usize, v: usize, side: &[usize]) -> Result<Graph> {
    let n = g.n;
    for &x in [u, v].iter().chain(side) {
        if x < 1 || x > n {
            return Err(invalid(format!("vertex {x} outside 1..={n}")));
        }
    }
    if u == v {
        return Err(invalid("twist needs two distinct cut vertices"));
    }
    if side.contains(&u) || side.contains(&v) {
        return Err(invalid("twist side must not contain the cut vertices"));
    }
    let in_side = vertices_to_mask(side);
    let hinge = (1u64 << (u - 1)) | (1u64 << (v - 1));
    let inside = |x: usize| in_side & (1 << (x - 1)) != 0;
    let on_hinge = |x: usize| hinge & (1 << (x - 1)) != 0;
    if let Some(&(a, b)) = g.edges.iter().find(|&&(a, b)| {
        let (sa, sb) = (inside(a), inside(b));
        (sa && !sb && !on_hinge(b)) || (sb && !sa && !on_hinge(a))
    }) {
        return Err(invalid(format!(
            "{{{u},{v}}} does not separate the side: edge ({a},{b}) crosses it"
        )));
    }
    let swap = |x: usize| {
        if x == u {
            v
        } else if x == v {
            u
        } else {
            x
        }
    };
    let edges: Vec<Edge> = g
        .edges
        .iter()
        .map(|&(a, b)| {
            if inside(a) && !inside(b) {
                (a, swap(b))
            } else if inside(b) && !inside(a) {
                (swap(a), b)
            } else {
                (a, b)
            }
        })
        .collect();
    make_graph(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Complete,
    Cycle,
    Path,
    Star,
}

impl std::str::FromStr for FamilyKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(FamilyKind::Complete),
            "cycle" => Ok(FamilyKind::Cycle),
            "path" => Ok(FamilyKind::Path),
            "star" => Ok(FamilyKind::Star),
            other => Err(invalid(format!(
                "unknown family {other:?} (expected complete, cycle, path or star)"
            ))),
        }
    }
}

/// Canonical labeled members of the standard families.
pub fn family(kind: FamilyKind, n: usize) -> Result<Graph> {
    let edges: Vec<Edge> = match kind {
        FamilyKind::Complete => (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect(),
        FamilyKind::Cycle => {
            if n < 3 {
                return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
            }
            (1..=n).map(|i| (i, i % n + 1)).collect()
        }
        FamilyKind::Path => (1..n).map(|i| (i, i + 1)).collect(),
        FamilyKind::Star => (2..=n).map(|j| (1, j)).collect(),
    };
    make_graph(n, &edges)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, e: &[Edge]) -> Graph {
        make_graph(n, e).unwrap()
    }

    fn example() -> Graph {
        g(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn make_graph_normalizes() {
        let h = g(4, &[(1, 2), (3, 1), (2, 3), (3, 4)]);
        assert_eq!(h.edges(), &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(g(1, &[]).edge_count(), 0);
        assert_eq!(g(3, &[(2, 1), (1, 2)]).edges(), &[(1, 2)]);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        let err = make_graph(3, &[(1, 4)]).unwrap_err();
        assert!(err.to_string().contains("(1,4)"), "{err}");
        assert!(make_graph(3, &[(2, 2)]).is_err());
        assert!(make_graph(0, &[]).is_err());
        assert!(make_graph(3, &[(0, 1)]).is_err());
    }

    #[test]
    fn components_and_rank() {
        let path = family(FamilyKind::Path, 3).unwrap();
        assert_eq!(path.components().blocks(), &[vec![1, 2, 3]]);
        assert_eq!(
            g(3, &[]).components().blocks(),
            &[vec![1], vec![2], vec![3]]
        );
        let two = g(4, &[(1, 2), (3, 4)]);
        assert_eq!(two.components().blocks(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(family(FamilyKind::Complete, 4).unwrap().rank(), 3);
        assert_eq!(g(5, &[]).rank(), 0);
        assert_eq!(two.rank(), 2);
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert_eq!(example().induced(&[1, 2, 3]).unwrap(), k3);
        assert_eq!(example().induced(&[1, 2, 3, 4]).unwrap(), example());
        let k4 = family(FamilyKind::Complete, 4).unwrap();
        assert_eq!(k4.induced(&[1, 4]).unwrap(), g(2, &[(1, 2)]));
        assert!(k4.induced(&[]).is_err());
        assert!(k4.induced(&[5]).is_err());
    }

    #[test]
    fn contraction() {
        let c4 = family(FamilyKind::Cycle, 4).unwrap();
        let p = VertexPartition::new(4, vec![vec![1, 2], vec![3], vec![4]]).unwrap();
        assert_eq!(
            c4.contract(&p).unwrap(),
            family(FamilyKind::Complete, 3).unwrap()
        );
        let all = VertexPartition::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(c4.contract(&all).unwrap(), g(1, &[]));
        assert_eq!(c4.contract(&VertexPartition::singletons(4)).unwrap(), c4);
        let bad = VertexPartition::new(4, vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        assert!(c4.contract(&bad).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err());
        let p = VertexPartition::new(3, vec![vec![3, 2], vec![1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![2, 3]]);
    }

    #[test]
    fn wedges() {
        let k1 = g(1, &[]);
        let k2 = g(2, &[(1, 2)]);
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert_eq!(
            wedge(&k2, 2, &k2, 1).unwrap(),
            family(FamilyKind::Path, 3).unwrap()
        );
        // triangle with a pendant edge at vertex 1
        assert_eq!(
            wedge(&k3, 1, &k2, 1).unwrap(),
            g(4, &[(1, 2), (1, 3), (2, 3), (1, 4)])
        );
        assert_eq!(wedge(&k3, 3, &k2, 1).unwrap(), example());
        assert_eq!(wedge(&k1, 1, &example(), 1).unwrap(), example());
        assert!(wedge(&k1, 2, &k2, 1).is_err());
    }

    #[test]
    fn twists() {
        let c4 = family(FamilyKind::Cycle, 4).unwrap();
        // 2 is adjacent to both 1 and 3, so the twist swaps its edges onto the same set.
        assert_eq!(whitney_twist(&c4, 1, 3, &[2]).unwrap(), c4);
        assert_eq!(whitney_twist(&example(), 1, 3, &[]).unwrap(), example());
        let err = whitney_twist(&c4, 1, 2, &[3]).unwrap_err();
        assert!(err.to_string().contains("(3,4)"), "{err}");
        assert!(whitney_twist(&c4, 1, 1, &[2]).is_err());
        assert!(whitney_twist(&c4, 1, 3, &[1]).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(
            family(FamilyKind::Complete, 3).unwrap().edges(),
            &[(1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(
            family(FamilyKind::Cycle, 4).unwrap().edges(),
            &[(1, 2), (1, 4), (2, 3), (3, 4)]
        );
        assert_eq!(family(FamilyKind::Path, 2).unwrap().edges(), &[(1, 2)]);
        assert_eq!(
            family(FamilyKind::Star, 4).unwrap().edges(),
            &[(1, 2), (1, 3), (1, 4)]
        );
        assert!(family(FamilyKind::Cycle, 2).is_err());
        assert!("wheel".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&example()).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[1,2],[1,3],[2,3],[3,4]]}"#);
        let back: Graph =
            serde_json::from_str(r#"{"n":4,"edges":[[3,4],[2,1],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(back, example());
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<Edge> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            let m = pairs.len();
            prop::collection::vec(any::<bool>(), m).prop_map(move |keep| {
                let es: Vec<Edge> = pairs
                    .iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|(e, _)| *e)
                    .collect();
                make_graph(n, &es).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn reingestion_is_idempotent(h in arb_graph(8)) {
            prop_assert_eq!(make_graph(h.n(), h.edges()).unwrap(), h);
        }

        #[test]
        fn rank_plus_components_is_n(h in arb_graph(9)) {
            prop_assert_eq!(h.rank() + h.components().len(), h.n());
        }

        #[test]
        fn identity_operations(h in arb_graph(8)) {
            let all: Vec<usize> = (1..=h.n()).collect();
            prop_assert_eq!(h.induced(&all).unwrap(), h.clone());
            prop_assert_eq!(h.contract(&VertexPartition::singletons(h.n())).unwrap(), h.clone());
            if h.is_connected() {
                let one = VertexPartition::new(h.n(), vec![all]).unwrap();
                prop_assert_eq!(h.contract(&one).unwrap(), make_graph(1, &[]).unwrap());
            }
        }

        #[test]
        fn twist_is_an_involution(h in arb_graph(7), u in 1usize..8, v in 1usize..8, side_bits in any::<u8>()) {
            prop_assume!(u <= h.n() && v <= h.n() && u != v);
            let side: Vec<usize> = (1..=h.n())
                .filter(|&x| x != u && x != v && side_bits & (1 << (x - 1)) != 0)
                .collect();
            if let Ok(t) = whitney_twist(&h, u, v, &side) {
                prop_assert_eq!(t.edge_count(), h.edge_count());
                prop_assert_eq!(whitney_twist(&t, u, v, &side).unwrap(), h);
            }
        }
    }
}
