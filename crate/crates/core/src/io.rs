//! JSON, DOT and CSV formats.
//!
//! Graph: `{"n": 4, "edges": [[u, v, multiplicity], …]}`.
//! Colouring: `{"palette": [labels], "vertices": [ids], "edges": [[u, v, copy, id], …]}`.
//!
//! Readers report the index of the first bad record.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::colouring::{ColourId, Palette, TotalColouring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, LeviGraph, LeviNode, Multigraph};
use crate::solver::{Certificate, Outcome};

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn parse_doc(text: &str) -> Result<serde_json::Map<String, Value>> {
    match serde_json::from_str(text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(malformed("top-level JSON value must be an object")),
        Err(e) => Err(malformed(format!("invalid JSON: {e}"))),
    }
}

fn field<'a>(doc: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value> {
    doc.get(key).ok_or_else(|| malformed(format!("missing field {key:?}")))
}

fn uint(v: &Value, what: &dyn Fn() -> String) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| malformed(format!("{}: expected a non-negative integer, got {v}", what())))
}

fn array<'a>(v: &'a Value, what: &dyn Fn() -> String) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| malformed(format!("{}: expected an array, got {v}", what())))
}

/// Unpacks record `i` of `key` as exactly `len` non-negative integers.
fn record(key: &str, i: usize, v: &Value, len: usize) -> Result<Vec<u64>> {
    let what = || format!("{key}[{i}]");
    let items = array(v, &what)?;
    if items.len() != len {
        return Err(malformed(format!(
            "{}: expected {len} entries, got {}",
            what(),
            items.len()
        )));
    }
    items.iter().map(|x| uint(x, &what)).collect()
}

pub fn graph_to_json(g: &Multigraph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.pairs().iter().map(|&(u, v, m)| json!([u, v, m])).collect::<Vec<_>>(),
    })
}

pub fn graph_from_json(text: &str) -> Result<Multigraph> {
    let doc = parse_doc(text)?;
    let n = uint(field(&doc, "n")?, &|| "n".into())? as usize;
    let edges = array(field(&doc, "edges")?, &|| "edges".into())?;
    let mut triples = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let r = record("edges", i, e, 3)?;
        if r[2] > u32::MAX as u64 {
            return Err(malformed(format!("edges[{i}]: multiplicity too large")));
        }
        triples.push((r[0] as usize, r[1] as usize, r[2] as u32));
    }
    Multigraph::new(n, triples.iter().copied()).map_err(|err| {
        // Name the record when the graph constructor rejects it.
        let culprit = triples.iter().position(|&t| Multigraph::new(n, [t]).is_err());
        match culprit {
            Some(i) => malformed(format!("edges[{i}]: {err}")),
            None => err,
        }
    })
}

pub fn colouring_to_json(c: &TotalColouring) -> Value {
    json!({
        "palette": c.palette.labels(),
        "vertices": c.vertices,
        "edges": c.edges.iter().map(|(e, &k)| json!([e.u, e.v, e.copy, k])).collect::<Vec<_>>(),
    })
}

/// Reads a colouring; ids are checked against the palette, not against any
/// graph.
pub fn colouring_from_json(text: &str) -> Result<TotalColouring> {
    let doc = parse_doc(text)?;
    let labels = array(field(&doc, "palette")?, &|| "palette".into())?
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            Value::String(s) => Ok(s.clone()),
            Value::Number(x) => Ok(x.to_string()),
            other => Err(malformed(format!("palette[{i}]: expected a label, got {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let palette = Palette::new(labels)?;
    let size = palette.len();
    let colour = |c: u64, what: String| -> Result<ColourId> {
        if c >= size as u64 {
            return Err(malformed(format!("{what}: colour id {c} outside palette of size {size}")));
        }
        Ok(c as ColourId)
    };

    let vertices = array(field(&doc, "vertices")?, &|| "vertices".into())?
        .iter()
        .enumerate()
        .map(|(i, v)| colour(uint(v, &|| format!("vertices[{i}]"))?, format!("vertices[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let n = vertices.len();

    let mut edges = BTreeMap::new();
    for (i, e) in array(field(&doc, "edges")?, &|| "edges".into())?.iter().enumerate() {
        let r = record("edges", i, e, 4)?;
        let (u, v) = (r[0] as usize, r[1] as usize);
        if u == v {
            return Err(malformed(format!("edges[{i}]: loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(malformed(format!(
                "edges[{i}]: vertex {} out of range for {n} vertices",
                u.max(v)
            )));
        }
        if r[2] > u32::MAX as u64 {
            return Err(malformed(format!("edges[{i}]: copy index too large")));
        }
        let id = EdgeId::new(u, v, r[2] as u32);
        if edges.insert(id, colour(r[3], format!("edges[{i}]"))?).is_some() {
            return Err(malformed(format!("edges[{i}]: edge {id} listed twice")));
        }
    }
    Ok(TotalColouring::new(palette, vertices, edges))
}

pub fn levi_to_json(levi: &LeviGraph) -> Value {
    let nodes: Vec<Value> = levi
        .nodes
        .iter()
        .map(|node| match node {
            LeviNode::Vertex(v) => json!({ "vertex": v }),
            LeviNode::Edge(e) => json!({ "edge": [e.u, e.v, e.copy] }),
        })
        .collect();
    let mut doc = graph_to_json(&levi.graph);
    doc["nodes"] = Value::Array(nodes);
    doc
}

pub fn certificate_to_json(cert: &Certificate) -> Value {
    json!({
        "outcome": cert.outcome.name(),
        "budget": cert.budget,
        "nodes": cert.nodes_explored,
        "elapsed_ms": cert.elapsed.as_secs_f64() * 1e3,
        "witness": match &cert.outcome {
            Outcome::Sat(c) => colouring_to_json(c),
            _ => Value::Null,
        },
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz source. With a colouring, vertices are labelled `index: colour`
/// and edges carry their colour label.
pub fn to_dot(g: &Multigraph, c: Option<&TotalColouring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        match c {
            Some(c) => {
                let label = dot_escape(c.palette.label(c.vertex_colour(v)));
                let _ = writeln!(out, "  {v} [label=\"{v}: {label}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for e in g.edges() {
        match c.and_then(|c| c.edge_colour(e).map(|k| c.palette.label(k))) {
            Some(label) => {
                let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.u, e.v, dot_escape(label));
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.u, e.v);
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `u,v,copy,colour_label` rows with a header line.
pub fn to_csv(c: &TotalColouring) -> String {
    let mut out = String::from("u,v,copy,colour_label\n");
    for (e, &k) in &c.edges {
        let label = c.palette.label(k);
        let label = if label.contains([',', '"', '\n']) {
            format!("\"{}\"", label.replace('"', "\"\""))
        } else {
            label.to_string()
        };
        let _ = writeln!(out, "{},{},{},{}", e.u, e.v, e.copy, label);
    }
    out
}
