use std::collections::BTreeMap;

use crate::colouring::{Palette, TotalColouring};
use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// Fixed optimal colourings of `K_1` to `K_4`, with 1, 3, 5 and 7 colours.
/// Vertex `i` has colour `i`.
pub fn construct_small(n: usize) -> Result<TotalColouring> {
    let (q, edges): (usize, &[(usize, usize, u32)]) = match n {
        1 => (1, &[]),
        2 => (3, &[(0, 1, 2)]),
        3 => (5, &[(0, 1, 2), (0, 2, 3), (1, 2, 4)]),
        4 => (
            7,
            &[(0, 1, 6), (0, 2, 5), (0, 3, 2), (1, 2, 4), (1, 3, 0), (2, 3, 1)],
        ),
        _ => {
            return Err(Error::BadOrder {
                what: "small-case colouring",
                expected: "1 <= n <= 4",
                n,
            })
        }
    };
    let edges: BTreeMap<_, _> = edges
        .iter()
        .map(|&(u, v, c)| (EdgeId::simple(u, v), c))
        .collect();
    Ok(TotalColouring::new(
        Palette::numeric(q),
        (0..n as u32).collect(),
        edges,
    ))
}
