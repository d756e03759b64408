//! Harmonious total colouring verification.
//!
//! A total colouring is harmonious when it is proper (adjacent vertices,
//! adjacent edges and incident vertex/edge pairs all differ) and every
//! unordered pair `{colour(v), colour(e)}` taken over the incidences `v ∈ e`
//! occurs at most once.
//!
//! [`verify`] works directly on the multigraph. [`verify_via_levi`] checks
//! the same property as a harmonious vertex colouring of the incidence graph
//! and serves as an independent cross-check.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::colouring::{ColourId, TotalColouring};
use crate::error::Result;
use crate::graph::{levi_graph, EdgeId, LeviNode, Multigraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    FirstViolation,
    Exhaustive,
}

/// One incidence `vertex ∈ edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Incidence {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    AdjacentVertices {
        u: VertexId,
        v: VertexId,
        colour: ColourId,
    },
    AdjacentEdges {
        a: EdgeId,
        b: EdgeId,
        colour: ColourId,
    },
    Incidence {
        vertex: VertexId,
        edge: EdgeId,
        colour: ColourId,
    },
    RepeatedPair {
        colours: (ColourId, ColourId),
        first: Incidence,
        second: Incidence,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub proper_vertices: bool,
    pub proper_edges: bool,
    pub proper_incidence: bool,
    pub harmonious: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(mut violations: Vec<Violation>, mode: Mode) -> Self {
        let has = |f: fn(&Violation) -> bool, vs: &[Violation]| vs.iter().any(f);
        let proper_vertices = !has(|v| matches!(v, Violation::AdjacentVertices { .. }), &violations);
        let proper_edges = !has(|v| matches!(v, Violation::AdjacentEdges { .. }), &violations);
        let proper_incidence = !has(|v| matches!(v, Violation::Incidence { .. }), &violations);
        let harmonious = violations.is_empty();
        if mode == Mode::FirstViolation {
            violations.truncate(1);
        }
        VerificationReport {
            proper_vertices,
            proper_edges,
            proper_incidence,
            harmonious,
            violations,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.proper_vertices && self.proper_edges && self.proper_incidence
    }

    pub fn repeated_pairs(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::RepeatedPair { .. }))
    }
}

fn key(a: ColourId, b: ColourId) -> (ColourId, ColourId) {
    (a.min(b), a.max(b))
}

/// Flat occupancy table over unordered colour pairs.
struct PairTable<T: Copy> {
    size: usize,
    slots: Vec<Option<T>>,
}

impl<T: Copy> PairTable<T> {
    fn new(size: usize) -> Self {
        PairTable {
            size,
            slots: vec![None; size * size],
        }
    }

    /// Records `owner` for the pair, returning the previous owner if taken.
    fn claim(&mut self, a: ColourId, b: ColourId, owner: T) -> Option<T> {
        let (lo, hi) = key(a, b);
        let slot = &mut self.slots[lo as usize * self.size + hi as usize];
        match *slot {
            Some(prev) => Some(prev),
            None => {
                *slot = Some(owner);
                None
            }
        }
    }
}

/// Checks properness and harmoniousness of `c` on `g`.
///
/// Errors only when `c` is not a total colouring of `g`; a colouring that
/// fails the checks yields a report with `harmonious == false`. In
/// [`Mode::FirstViolation`] only the first violation is kept, but the flags
/// always reflect the whole colouring.
pub fn verify(g: &Multigraph, c: &TotalColouring, mode: Mode) -> Result<VerificationReport> {
    c.check_total(g)?;
    let edge_colour = |e: EdgeId| c.edges[&e];
    let mut violations = Vec::new();

    for &(u, v, _) in g.pairs() {
        if c.vertices[u] == c.vertices[v] {
            violations.push(Violation::AdjacentVertices {
                u,
                v,
                colour: c.vertices[u],
            });
        }
    }

    let mut clashes = BTreeSet::new();
    let mut first_with: Vec<Option<EdgeId>> = vec![None; c.palette.len()];
    for x in 0..g.n() {
        let mut touched = Vec::new();
        for e in g.incident_edges(x) {
            let col = edge_colour(e);
            match first_with[col as usize] {
                Some(a) => {
                    clashes.insert((a, e, col));
                }
                None => {
                    first_with[col as usize] = Some(e);
                    touched.push(col);
                }
            }
        }
        for col in touched {
            first_with[col as usize] = None;
        }
    }
    violations.extend(
        clashes
            .into_iter()
            .map(|(a, b, colour)| Violation::AdjacentEdges { a, b, colour }),
    );

    let mut table = PairTable::new(c.palette.len());
    let mut repeats = Vec::new();
    for (e, &col) in &c.edges {
        for x in [e.u, e.v] {
            let vc = c.vertices[x];
            if vc == col {
                violations.push(Violation::Incidence {
                    vertex: x,
                    edge: *e,
                    colour: col,
                });
            }
            let here = Incidence { vertex: x, edge: *e };
            if let Some(first) = table.claim(vc, col, here) {
                repeats.push(Violation::RepeatedPair {
                    colours: key(vc, col),
                    first,
                    second: here,
                });
            }
        }
    }
    violations.extend(repeats);

    Ok(VerificationReport::from_violations(violations, mode))
}

/// Transports `c` to a vertex colouring of the Levi graph of `g` and checks
/// that it is a harmonious vertex colouring there: adjacent nodes differ and
/// the colour pairs across Levi edges are pairwise distinct.
pub fn verify_via_levi(g: &Multigraph, c: &TotalColouring) -> Result<VerificationReport> {
    c.check_total(g)?;
    let levi = levi_graph(g);
    let colour: Vec<ColourId> = levi
        .nodes
        .iter()
        .map(|node| match *node {
            LeviNode::Vertex(v) => c.vertices[v],
            LeviNode::Edge(e) => c.edges[&e],
        })
        .collect();
    let lg = &levi.graph;
    let mut violations = Vec::new();

    // Levi edges join a vertex-node (lower index) to an edge-node.
    for &(a, b, _) in lg.pairs() {
        if colour[a] == colour[b] {
            let LeviNode::Edge(edge) = levi.nodes[b] else {
                unreachable!("Levi graph is bipartite")
            };
            violations.push(Violation::Incidence {
                vertex: a,
                edge,
                colour: colour[a],
            });
        }
    }

    // Nodes at distance two share a neighbour; they must differ as well.
    for (w, node) in levi.nodes.iter().enumerate() {
        let around: Vec<usize> = lg.neighbours(w).map(|(x, _)| x).collect();
        for (i, &x) in around.iter().enumerate() {
            for &y in &around[i + 1..] {
                if colour[x] != colour[y] {
                    continue;
                }
                violations.push(match (*node, levi.nodes[x], levi.nodes[y]) {
                    (LeviNode::Edge(_), LeviNode::Vertex(u), LeviNode::Vertex(v)) => {
                        Violation::AdjacentVertices {
                            u,
                            v,
                            colour: colour[x],
                        }
                    }
                    (LeviNode::Vertex(_), LeviNode::Edge(a), LeviNode::Edge(b)) => {
                        Violation::AdjacentEdges {
                            a,
                            b,
                            colour: colour[x],
                        }
                    }
                    _ => unreachable!("Levi graph is bipartite"),
                });
            }
        }
    }

    let mut table = PairTable::new(c.palette.len());
    for &(a, b, _) in lg.pairs() {
        let LeviNode::Edge(edge) = levi.nodes[b] else {
            unreachable!("Levi graph is bipartite")
        };
        let here = Incidence { vertex: a, edge };
        if let Some(first) = table.claim(colour[a], colour[b], here) {
            violations.push(Violation::RepeatedPair {
                colours: key(colour[a], colour[b]),
                first,
                second: here,
            });
        }
    }

    Ok(VerificationReport::from_violations(violations, Mode::Exhaustive))
}
