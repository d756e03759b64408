//! Colourings transcribed from the published drawings.

use std::collections::BTreeMap;

use harmonious::{EdgeId, TotalColouring};

/// K_4 drawing: vertex i coloured i.
pub const SMALL_K4: [(usize, usize, &str); 6] = [
    (0, 1, "6"),
    (0, 2, "5"),
    (0, 3, "2"),
    (1, 2, "4"),
    (1, 3, "0"),
    (2, 3, "1"),
];

/// K_8 drawing, vertices named by their colour.
pub const K8: [(&str, &str, &str); 28] = [
    ("0_1", "∞_0", "0"),
    ("1_1", "2_0", "2"),
    ("2_1", "1_0", "0"),
    ("2_0", "0_0", "2_1"),
    ("1_0", "∞_0", "0_0"),
    ("∞_1", "0_1", "2_1"),
    ("∞_1", "1_1", "0_1"),
    ("∞_1", "2_1", "1_1"),
    ("∞_1", "2_0", "0"),
    ("∞_1", "1_0", "1"),
    ("∞_1", "0_0", "2"),
    ("∞_1", "∞_0", "∞"),
    ("0_1", "1_1", "0_0"),
    ("0_1", "2_1", "1_0"),
    ("0_1", "2_0", "1"),
    ("0_1", "1_0", "2"),
    ("0_1", "0_0", "∞"),
    ("1_1", "2_1", "∞_0"),
    ("1_1", "1_0", "∞"),
    ("1_1", "0_0", "0"),
    ("1_1", "∞_0", "1"),
    ("2_1", "2_0", "∞"),
    ("2_1", "0_0", "1"),
    ("2_1", "∞_0", "2"),
    ("2_0", "1_0", "1_1"),
    ("2_0", "∞_0", "1_0"),
    ("1_0", "0_0", "∞_1"),
    ("0_0", "∞_0", "2_0"),
];

pub type Drawing = &'static [(usize, usize, &'static str)];

/// Small drawings as `(palette size, edges)` for K_1..K_4.
pub const SMALL: [(usize, Drawing); 4] = [
    (1, &[]),
    (3, &[(0, 1, "2")]),
    (5, &[(0, 1, "2"), (0, 2, "3"), (1, 2, "4")]),
    (7, &SMALL_K4),
];

/// Compares a K_1..K_4 colouring with the drawing, label for label.
pub fn matches_small(n: usize, c: &TotalColouring) -> Result<(), String> {
    let (size, edges) = SMALL[n - 1];
    if c.palette.len() != size {
        return Err(format!("K_{n}: {} colours, drawing has {size}", c.palette.len()));
    }
    for v in 0..n {
        let label = c.palette.label(c.vertex_colour(v));
        if label != v.to_string() {
            return Err(format!("K_{n}: vertex {v} coloured {label}"));
        }
    }
    let got: Vec<(usize, usize, &str)> = c
        .edges
        .iter()
        .map(|(e, &k)| (e.u, e.v, c.palette.label(k)))
        .collect();
    if got != edges {
        return Err(format!("K_{n}: edges {got:?}, drawing {edges:?}"));
    }
    Ok(())
}

/// Compares a K_8 colouring with the drawing. Subscripted colours must match
/// exactly; the four bare colours name factors of the bipartite part and
/// need only correspond under one bijection.
pub fn matches_k8(c: &TotalColouring) -> Result<(), String> {
    let vertex_of: BTreeMap<&str, usize> = (0..c.vertices.len())
        .map(|v| (c.palette.label(c.vertex_colour(v)), v))
        .collect();
    if vertex_of.len() != 8 {
        return Err("vertex colours are not the eight subscripted labels".into());
    }
    let mut renaming: BTreeMap<&str, &str> = BTreeMap::new();
    for (a, b, label) in K8 {
        let (Some(&x), Some(&y)) = (vertex_of.get(a), vertex_of.get(b)) else {
            return Err(format!("no vertex coloured {a} or {b}"));
        };
        let ours = c
            .edge_colour(EdgeId::simple(x, y))
            .map(|k| c.palette.label(k))
            .ok_or_else(|| format!("edge {a}-{b} uncoloured"))?;
        if label.contains('_') || ours.contains('_') {
            if ours != label {
                return Err(format!("edge {a}-{b}: {ours}, drawing {label}"));
            }
        } else if *renaming.entry(label).or_insert(ours) != ours {
            return Err(format!("edge {a}-{b}: factor renaming is inconsistent"));
        }
    }
    let mut image: Vec<&str> = renaming.values().copied().collect();
    image.sort_unstable();
    image.dedup();
    if image.len() != renaming.len() {
        return Err(format!("factor renaming {renaming:?} is not injective"));
    }
    Ok(())
}
