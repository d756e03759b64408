//! Palettes and total colourings.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Dense colour id, an index into a [`Palette`].
pub type ColourId = u32;

/// A finite colour universe. Colour `i` carries the symbolic label
/// `labels[i]` (for example `"3"`, `"∞_0"` or `"2_1"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Palette {
    labels: Vec<String>,
    #[serde(skip)]
    index: HashMap<String, ColourId>,
}

impl Palette {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as ColourId).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Palette { labels, index })
    }

    /// Colours labelled `"0"`, `"1"`, ... `"size-1"`.
    pub fn numeric(size: usize) -> Self {
        Self::new((0..size).map(|i| i.to_string()).collect()).expect("numeric labels are unique")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, c: ColourId) -> &str {
        &self.labels[c as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<ColourId> {
        self.index.get(label).copied()
    }

    /// Appends a fresh colour and returns its id.
    pub fn push(&mut self, label: impl Into<String>) -> Result<ColourId> {
        let label = label.into();
        let id = self.labels.len() as ColourId;
        if self.index.insert(label.clone(), id).is_some() {
            return Err(Error::DuplicateLabel(label));
        }
        self.labels.push(label);
        Ok(id)
    }
}

/// Colours on every vertex and every edge copy of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalColouring {
    pub palette: Palette,
    pub vertices: Vec<ColourId>,
    pub edges: BTreeMap<EdgeId, ColourId>,
}

impl TotalColouring {
    pub fn new(
        palette: Palette,
        vertices: Vec<ColourId>,
        edges: BTreeMap<EdgeId, ColourId>,
    ) -> Self {
        TotalColouring {
            palette,
            vertices,
            edges,
        }
    }

    pub fn vertex_colour(&self, v: VertexId) -> ColourId {
        self.vertices[v]
    }

    pub fn edge_colour(&self, e: EdgeId) -> Option<ColourId> {
        self.edges.get(&e).copied()
    }

    pub fn set_edge(&mut self, e: EdgeId, c: ColourId) {
        self.edges.insert(e, c);
    }

    /// Number of distinct colours that actually occur.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.palette.len()];
        for &c in self.vertices.iter().chain(self.edges.values()) {
            if let Some(s) = seen.get_mut(c as usize) {
                *s = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Checks that this colouring covers exactly the vertices and edge copies
    /// of `g`, with every colour id inside the palette.
    pub fn check_total(&self, g: &Multigraph) -> Result<()> {
        if self.vertices.len() != g.n() {
            return Err(Error::VertexCountMismatch {
                got: self.vertices.len(),
                n: g.n(),
            });
        }
        let size = self.palette.len();
        for &c in self.vertices.iter().chain(self.edges.values()) {
            if c as usize >= size {
                return Err(Error::ColourOutOfRange { colour: c, size });
            }
        }
        for e in g.edges() {
            if !self.edges.contains_key(&e) {
                return Err(Error::MissingEdgeColour(e));
            }
        }
        if self.edges.len() != g.edge_count() {
            let extra = self.edges.keys().find(|e| !g.contains(**e)).copied();
            return Err(Error::UnknownEdge(extra.expect("count mismatch implies an extra edge")));
        }
        Ok(())
    }

    /// The multigraph whose edges are exactly the coloured edge copies.
    /// Copies of each pair must be numbered `0..multiplicity`.
    pub fn underlying_graph(&self) -> Result<Multigraph> {
        let n = self.vertices.len();
        let mut counts: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
        for e in self.edges.keys() {
            if e.v >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v, n });
            }
            *counts.entry((e.u, e.v)).or_default() += 1;
        }
        for e in self.edges.keys() {
            if e.copy >= counts[&(e.u, e.v)] {
                return Err(Error::Malformed(format!(
                    "edge copies of ({}, {}) are not numbered contiguously from 0",
                    e.u, e.v
                )));
            }
        }
        Multigraph::new(n, counts.into_iter().map(|((u, v), m)| (u, v, m)))
    }
}

/// Injective, incidence-preserving map of a guest multigraph into a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

impl Embedding {
    /// Vertex `v ↦ vertex_map[v]`, edge copy `(u, v, k) ↦ (f(u), f(v), k)`.
    /// Edges whose ends collapse are left unmapped; [`restrict`] rejects
    /// such maps.
    pub fn induced(guest: &Multigraph, vertex_map: Vec<VertexId>) -> Self {
        let edges = guest
            .edges()
            .filter(|e| vertex_map[e.u] != vertex_map[e.v])
            .map(|e| (e, EdgeId::new(vertex_map[e.u], vertex_map[e.v], e.copy)))
            .collect();
        Embedding {
            vertices: vertex_map,
            edges,
        }
    }

    pub fn identity(g: &Multigraph) -> Self {
        Self::induced(g, (0..g.n()).collect())
    }
}

/// Pulls `host`'s colours back along `embedding` onto `guest`. The palette is
/// carried over unchanged.
pub fn restrict(
    host: &TotalColouring,
    guest: &Multigraph,
    embedding: &Embedding,
) -> Result<TotalColouring> {
    let host_n = host.vertices.len();
    if embedding.vertices.len() != guest.n() {
        return Err(Error::BadEmbedding(format!(
            "vertex map has {} entries for {} guest vertices",
            embedding.vertices.len(),
            guest.n()
        )));
    }
    let mut used = vec![false; host_n];
    for &h in &embedding.vertices {
        if h >= host_n {
            return Err(Error::BadEmbedding(format!("host vertex {h} out of range")));
        }
        if std::mem::replace(&mut used[h], true) {
            return Err(Error::BadEmbedding(format!("host vertex {h} used twice")));
        }
    }
    let mut edges = BTreeMap::new();
    let mut images = std::collections::BTreeSet::new();
    for e in guest.edges() {
        let Some(&img) = embedding.edges.get(&e) else {
            return Err(Error::BadEmbedding(format!("guest edge {e} is not mapped")));
        };
        let (a, b) = (embedding.vertices[e.u], embedding.vertices[e.v]);
        if (img.u, img.v) != (a.min(b), a.max(b)) {
            return Err(Error::BadEmbedding(format!(
                "guest edge {e} maps to {img}, which does not join {a} and {b}"
            )));
        }
        if !images.insert(img) {
            return Err(Error::BadEmbedding(format!("host edge {img} used twice")));
        }
        let Some(c) = host.edge_colour(img) else {
            return Err(Error::BadEmbedding(format!("host edge {img} is not coloured")));
        };
        edges.insert(e, c);
    }
    let vertices = embedding
        .vertices
        .iter()
        .map(|&h| host.vertices[h])
        .collect();
    Ok(TotalColouring::new(host.palette.clone(), vertices, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_multigraph};

    fn k3() -> TotalColouring {
        let edges = [((0, 1), 2), ((0, 2), 3), ((1, 2), 4)]
            .into_iter()
            .map(|((u, v), c)| (EdgeId::simple(u, v), c))
            .collect();
        TotalColouring::new(Palette::numeric(5), vec![0, 1, 2], edges)
    }

    #[test]
    fn palette_labels() {
        let mut p = Palette::new(vec!["∞".into(), "0_1".into()]).unwrap();
        assert_eq!(p.id("0_1"), Some(1));
        assert_eq!(p.push("x").unwrap(), 2);
        assert_eq!(p.push("∞"), Err(Error::DuplicateLabel("∞".into())));
        assert_eq!(p.label(2), "x");
    }

    #[test]
    fn totality_errors() {
        let g = complete_graph(3).unwrap();
        let mut c = k3();
        assert!(c.check_total(&g).is_ok());
        c.edges.remove(&EdgeId::simple(1, 2));
        assert_eq!(
            c.check_total(&g),
            Err(Error::MissingEdgeColour(EdgeId::simple(1, 2)))
        );
        let mut c = k3();
        c.vertices[0] = 9;
        assert!(matches!(c.check_total(&g), Err(Error::ColourOutOfRange { .. })));
        let mut c = k3();
        c.vertices.pop();
        assert!(matches!(c.check_total(&g), Err(Error::VertexCountMismatch { .. })));
        let c = k3();
        let g2 = complete_graph(2).unwrap();
        assert!(c.check_total(&g2).is_err());
    }

    #[test]
    fn underlying_graph_requires_contiguous_copies() {
        let mut c = k3();
        assert_eq!(c.underlying_graph().unwrap(), complete_graph(3).unwrap());
        c.edges.insert(EdgeId::new(0, 1, 2), 0);
        assert!(matches!(c.underlying_graph(), Err(Error::Malformed(_))));
    }

    #[test]
    fn restrict_rejects_bad_embeddings() {
        let host = k3();
        let guest = complete_graph(2).unwrap();
        let err = restrict(&host, &guest, &Embedding::induced(&guest, vec![1, 1]));
        assert!(matches!(err, Err(Error::BadEmbedding(_))));

        let mut emb = Embedding::induced(&guest, vec![0, 2]);
        emb.edges.insert(EdgeId::simple(0, 1), EdgeId::simple(1, 2));
        assert!(restrict(&host, &guest, &emb).is_err());

        let two = complete_multigraph(2, 2).unwrap();
        assert!(restrict(&host, &two, &Embedding::induced(&two, vec![0, 1])).is_err());

        let ok = restrict(&host, &guest, &Embedding::induced(&guest, vec![2, 0])).unwrap();
        assert_eq!(ok.vertices, vec![2, 0]);
        assert_eq!(ok.edge_colour(EdgeId::simple(0, 1)), Some(3));
    }
}
