//! Undirected loopless multigraphs with stable edge identities.
//!
//! A [`Multigraph`] stores a multiplicity per unordered vertex pair. Each of
//! the parallel edges joining a pair is addressed by an [`EdgeId`] carrying a
//! copy index, so colourings can give parallel edges distinct colours.
//! Edges are always enumerated in lexicographic `(u, v, copy)` order, and the
//! position of an edge in that enumeration is its dense index.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// One copy of an edge between two distinct vertices. Endpoints are stored
/// with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId {
    pub u: VertexId,
    pub v: VertexId,
    pub copy: u32,
}

impl EdgeId {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: VertexId, b: VertexId, copy: u32) -> Self {
        assert_ne!(a, b, "loops are not edges");
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        EdgeId { u, v, copy }
    }

    pub fn simple(a: VertexId, b: VertexId) -> Self {
        Self::new(a, b, 0)
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn is_incident(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        debug_assert!(self.is_incident(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copy == 0 {
            write!(f, "{{{}, {}}}", self.u, self.v)
        } else {
            write!(f, "{{{}, {}}}#{}", self.u, self.v, self.copy)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    /// Vertex pairs with nonzero multiplicity, sorted by `(u, v)`.
    pairs: Vec<(VertexId, VertexId, u32)>,
    /// `offsets[p]` is the dense index of copy 0 of pair `p`.
    offsets: Vec<usize>,
    lookup: HashMap<(VertexId, VertexId), usize>,
    /// Pair indices incident to each vertex, in increasing pair order.
    incident: Vec<Vec<usize>>,
}

impl Multigraph {
    /// Builds a multigraph from `(u, v, multiplicity)` triples. Pairs with
    /// multiplicity 0 are ignored; a pair listed twice is an error.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, u32)>,
    {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (a, b, mult) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if !seen.insert(key) {
                return Err(Error::DuplicatePair(key.0, key.1));
            }
            if mult > 0 {
                list.push((key.0, key.1, mult));
            }
        }
        list.sort_unstable();
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, pairs: Vec<(VertexId, VertexId, u32)>) -> Self {
        let mut offsets = Vec::with_capacity(pairs.len() + 1);
        let mut lookup = HashMap::with_capacity(pairs.len());
        let mut incident = vec![Vec::new(); n];
        let mut total = 0;
        for (p, &(u, v, mult)) in pairs.iter().enumerate() {
            offsets.push(total);
            total += mult as usize;
            lookup.insert((u, v), p);
            incident[u].push(p);
            incident[v].push(p);
        }
        offsets.push(total);
        Multigraph {
            n,
            pairs,
            offsets,
            lookup,
            incident,
        }
    }

    /// A simple graph from an edge list.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, counting parallel copies.
    pub fn edge_count(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    /// Vertex pairs with nonzero multiplicity, sorted.
    pub fn pairs(&self) -> &[(VertexId, VertexId, u32)] {
        &self.pairs
    }

    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> u32 {
        let key = if a < b { (a, b) } else { (b, a) };
        self.lookup.get(&key).map_or(0, |&p| self.pairs[p].2)
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e.copy < self.multiplicity(e.u, e.v)
    }

    /// Number of edge copies incident to `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incident[v]
            .iter()
            .map(|&p| self.pairs[p].2 as usize)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.pairs.iter().map(|p| p.2).max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.pairs.iter().all(|p| p.2 == 1)
    }

    /// Every pair of distinct vertices is joined by at least one edge.
    pub fn is_complete(&self) -> bool {
        self.pairs.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// All edges in lexicographic `(u, v, copy)` order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.pairs
            .iter()
            .flat_map(|&(u, v, mult)| (0..mult).map(move |copy| EdgeId { u, v, copy }))
    }

    /// Dense index of `e` in [`Multigraph::edges`] order.
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        let &p = self.lookup.get(&(e.u, e.v))?;
        (e.copy < self.pairs[p].2).then(|| self.offsets[p] + e.copy as usize)
    }

    /// Inverse of [`Multigraph::edge_index`].
    pub fn edge_at(&self, index: usize) -> EdgeId {
        assert!(index < self.edge_count(), "edge index out of range");
        let p = self.offsets.partition_point(|&o| o <= index) - 1;
        let (u, v, _) = self.pairs[p];
        EdgeId {
            u,
            v,
            copy: (index - self.offsets[p]) as u32,
        }
    }

    /// Neighbours of `v` with the multiplicity of the joining pair.
    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.incident[v].iter().map(move |&p| {
            let (a, b, mult) = self.pairs[p];
            (if a == v { b } else { a }, mult)
        })
    }

    /// Every edge copy incident to `v`.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incident[v].iter().flat_map(move |&p| {
            let (u, w, mult) = self.pairs[p];
            (0..mult).map(move |copy| EdgeId { u, v: w, copy })
        })
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Multigraph> {
    complete_multigraph(n, 1)
}

/// `λK_n`: `lambda` parallel edges between every pair of the `n` vertices.
pub fn complete_multigraph(n: usize, lambda: u32) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if lambda == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v, lambda)))
        .collect();
    Ok(Multigraph::from_sorted(n, pairs))
}

/// Circulant graph on `ℤ_n`: `{i, i + d}` for every `i` and every `d` in
/// `diffs`. Each difference must lie in `1..=n/2`.
pub fn circulant(n: usize, diffs: &[usize]) -> Result<Multigraph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let max = n / 2;
    let mut set = BTreeSet::new();
    for &d in diffs {
        if d == 0 || d > max {
            return Err(Error::DifferenceOutOfRange { diff: d, n, max });
        }
        set.insert(d);
    }
    let mut pairs = BTreeSet::new();
    for &d in &set {
        for i in 0..n {
            let j = (i + d) % n;
            pairs.insert((i.min(j), i.max(j)));
        }
    }
    Ok(Multigraph::from_sorted(
        n,
        pairs.into_iter().map(|(u, v)| (u, v, 1)).collect(),
    ))
}

/// A node of a Levi graph: either an original vertex or an original edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeviNode {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// Incidence graph of a multigraph together with the node correspondence.
#[derive(Debug, Clone)]
pub struct LeviGraph {
    pub graph: Multigraph,
    /// `nodes[i]` is the original object behind Levi node `i`. Vertices come
    /// first (`0..n`), followed by edges in dense edge order.
    pub nodes: Vec<LeviNode>,
}

pub fn levi_graph(g: &Multigraph) -> LeviGraph {
    let n = g.n();
    let mut nodes: Vec<LeviNode> = (0..n).map(LeviNode::Vertex).collect();
    let mut pairs = Vec::with_capacity(2 * g.edge_count());
    for (i, e) in g.edges().enumerate() {
        nodes.push(LeviNode::Edge(e));
        pairs.push((e.u, n + i, 1));
        pairs.push((e.v, n + i, 1));
    }
    pairs.sort_unstable();
    LeviGraph {
        graph: Multigraph::from_sorted(nodes.len(), pairs),
        nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        let k8 = complete_graph(8).unwrap();
        assert_eq!(k8.edge_count(), 28);
        assert!((0..8).all(|v| k8.degree(v) == 7));
        assert_eq!(complete_graph(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn complete_multigraph_counts() {
        assert_eq!(complete_multigraph(4, 2).unwrap().edge_count(), 12);
        let g = complete_multigraph(2, 5).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.multiplicity(1, 0), 5);
        let g = complete_multigraph(5, 3).unwrap();
        assert_eq!(g.edge_count(), 30);
        assert!((0..5).all(|v| g.degree(v) == 12));
        assert_eq!(complete_multigraph(3, 0), Err(Error::ZeroMultiplicity));
    }

    #[test]
    fn circulant_examples() {
        let c5 = circulant(5, &[1]).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let m = circulant(6, &[3]).unwrap();
        assert_eq!(m.edge_count(), 3);
        assert!((0..6).all(|v| m.degree(v) == 1));

        let h1 = circulant(9, &[2, 4]).unwrap();
        assert_eq!(h1.edge_count(), 18);
        assert!((0..9).all(|v| h1.degree(v) == 4));

        assert!(matches!(
            circulant(6, &[4]),
            Err(Error::DifferenceOutOfRange { diff: 4, .. })
        ));
        assert!(circulant(6, &[0]).is_err());
    }

    #[test]
    fn levi_examples() {
        let p3 = levi_graph(&complete_graph(2).unwrap());
        assert_eq!(p3.graph.n(), 3);
        assert_eq!(p3.graph.edge_count(), 2);
        assert_eq!(p3.graph.degree(2), 2);

        let l3 = levi_graph(&complete_graph(3).unwrap());
        assert_eq!(l3.graph.n(), 6);
        assert_eq!(l3.graph.edge_count(), 6);
        assert!((3..6).all(|i| l3.graph.degree(i) == 2));

        let l4 = levi_graph(&complete_graph(4).unwrap());
        assert_eq!(l4.graph.n(), 10);
        assert_eq!(l4.graph.edge_count(), 12);

        // parallel edges become distinct edge-nodes
        let l = levi_graph(&complete_multigraph(2, 3).unwrap());
        assert_eq!(l.graph.n(), 5);
        assert!(l.graph.is_simple());
        assert!((2..5).all(|i| l.graph.degree(i) == 2));
    }

    #[test]
    fn edge_index_round_trip() {
        let g = Multigraph::new(4, [(0, 1, 2), (2, 3, 1), (1, 3, 3)]).unwrap();
        assert_eq!(g.edge_count(), 6);
        for (i, e) in g.edges().enumerate() {
            assert_eq!(g.edge_index(e), Some(i));
            assert_eq!(g.edge_at(i), e);
        }
        assert_eq!(g.edge_index(EdgeId::new(0, 1, 2)), None);
        assert_eq!(g.edge_index(EdgeId::new(0, 2, 0)), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Multigraph::new(3, [(1, 1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Multigraph::new(3, [(0, 1, 1), (1, 0, 2)]),
            Err(Error::DuplicatePair(0, 1))
        );
        assert_eq!(
            Multigraph::new(3, [(0, 3, 1)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn incident_edges_cover_parallel_copies() {
        let g = complete_multigraph(3, 2).unwrap();
        let at0: Vec<_> = g.incident_edges(0).collect();
        assert_eq!(at0.len(), 4);
        assert!(at0.iter().all(|e| e.is_incident(0)));
        assert_eq!(g.degree(1), 4);
    }
}
