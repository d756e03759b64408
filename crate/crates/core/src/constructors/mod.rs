//! Optimal harmonious total colourings of `K_n` and `λK_n`, and of any
//! multigraph by restriction.

mod difference;
mod doubled;
mod small;

pub use difference::{base_difference_colouring, construct_mod_1_2_3, OddCasePlan};
pub use doubled::{construct_8m, construct_8m4, plan_8m, plan_8m4, Family, Mod4Plan, Patch};
pub use small::construct_small;

use crate::colouring::{restrict, ColourId, Embedding, TotalColouring};
use crate::edge_factor::{complete_even_one_factorization, complete_odd_near_factorization};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

/// Harmonious total colouring of `K_n` with `h_t(K_n)` colours.
pub fn construct_complete(n: usize) -> Result<TotalColouring> {
    match n {
        0 => Err(Error::EmptyGraph),
        1..=4 => construct_small(n),
        _ if n % 8 == 0 => construct_8m(n / 8),
        _ if n % 8 == 4 => construct_8m4(n / 8),
        _ => construct_mod_1_2_3(n),
    }
}

/// Harmonious total colouring of `λK_n` with `h_t(λK_n)` colours.
///
/// Copy 0 of every edge is coloured as in [`construct_complete`]. Each further
/// copy `t` is coloured by a fresh block: a 1-factorization (`n − 1` colours)
/// for even `n`, a near-1-factorization (`n` colours) for odd `n`. Fresh
/// colours never appear on vertices and each forms a matching, so no new
/// pair can repeat.
pub fn construct_multigraph(n: usize, lambda: u32) -> Result<TotalColouring> {
    if lambda == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let mut c = construct_complete(n)?;
    if n == 1 || lambda == 1 {
        return Ok(c);
    }
    let factors = if n % 2 == 0 {
        complete_even_one_factorization(n)?
    } else {
        complete_odd_near_factorization(n)?
    };
    for t in 1..lambda {
        for (i, factor) in factors.factors.iter().enumerate() {
            let colour = c.palette.push(format!("t{t}.{i}"))?;
            for e in factor {
                c.set_edge(EdgeId::new(e.u, e.v, t), colour);
            }
        }
    }
    Ok(c)
}

/// Harmonious total colouring of an arbitrary multigraph, restricted from
/// [`construct_multigraph`]`(n, λ)` where `λ` is the largest multiplicity.
pub fn colour_any(g: &Multigraph) -> Result<TotalColouring> {
    let lambda = g.max_multiplicity().max(1);
    let host = construct_multigraph(g.n(), lambda)?;
    restrict(&host, g, &Embedding::identity(g))
}

/// Number of distinct vertex colours; equals `n` for every construction here.
pub fn vertex_colour_count(c: &TotalColouring) -> usize {
    let mut v: Vec<ColourId> = c.vertices.clone();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::expected_ht;
    use crate::graph::{complete_graph, complete_multigraph};
    use crate::verify::{verify, Mode};

    #[test]
    fn complete_dispatch() {
        for n in 1..=40 {
            let c = construct_complete(n).unwrap();
            assert_eq!(c.palette.len() as u64, expected_ht(n as u64, 1), "n = {n}");
            assert_eq!(vertex_colour_count(&c), n);
            let r = verify(&complete_graph(n).unwrap(), &c, Mode::Exhaustive).unwrap();
            assert!(r.harmonious, "n = {n}: {:?}", r.violations);
        }
        assert!(construct_complete(0).is_err());
    }

    #[test]
    fn multigraph_examples() {
        for (n, lambda, q) in [(4, 2, 10), (5, 2, 13), (6, 3, 19), (2, 4, 6), (1, 3, 1)] {
            let c = construct_multigraph(n, lambda).unwrap();
            assert_eq!(c.palette.len(), q, "({n}, {lambda})");
            let g = complete_multigraph(n, lambda).unwrap();
            assert!(verify(&g, &c, Mode::Exhaustive).unwrap().harmonious);
        }
        assert!(construct_multigraph(0, 2).is_err());
        assert!(construct_multigraph(3, 0).is_err());
    }

    #[test]
    fn colour_any_single_edge() {
        let g = Multigraph::from_edges(2, [(0, 1)]).unwrap();
        let c = colour_any(&g).unwrap();
        assert_eq!(c.colours_used(), 3);
        assert!(verify(&g, &c, Mode::Exhaustive).unwrap().harmonious);
    }

    #[test]
    fn colour_any_identity_restriction_is_idempotent() {
        let g = Multigraph::new(5, [(0, 1, 2), (1, 2, 1), (3, 4, 3), (0, 4, 1)]).unwrap();
        let c = colour_any(&g).unwrap();
        let again = restrict(&c, &g, &Embedding::identity(&g)).unwrap();
        assert_eq!(again, c);
    }
}
