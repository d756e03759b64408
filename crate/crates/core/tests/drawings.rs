//! The published drawings of K_1..K_4 and K_8, checked against the
//! constructions.

mod common;

use harmonious::constructors::{construct_8m, construct_small};
use harmonious::{complete_graph, verify, Mode, TotalColouring};

#[test]
fn small_drawings_match_exactly() {
    for n in 1..=4 {
        common::matches_small(n, &construct_small(n).unwrap()).unwrap();
    }
}

#[test]
fn k8_matches_drawing_up_to_factor_names() {
    let c = construct_8m(1).unwrap();
    assert_eq!(c.palette.len(), 12);
    assert!(verify(&complete_graph(8).unwrap(), &c, Mode::Exhaustive).unwrap().harmonious);
    common::matches_k8(&c).unwrap();
}

#[test]
fn k8_comparison_detects_changes() {
    let c = construct_8m(1).unwrap();
    let mut swapped: TotalColouring = c.clone();
    let (a, b) = {
        let mut it = c.edges.keys();
        (*it.next().unwrap(), *it.next().unwrap())
    };
    swapped.set_edge(a, c.edge_colour(b).unwrap());
    swapped.set_edge(b, c.edge_colour(a).unwrap());
    assert!(common::matches_k8(&swapped).is_err());
}
