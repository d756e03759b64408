//! Colourings of `K_n` for `n ≢ 0 (mod 4)`.
//!
//! Vertices are `ℤ_n` and vertex `i` has colour `i`. Writing `n = 4k + ℓ`,
//! the edge `{i, j}` with `i + j = 2k + 1`, `1 ≤ i < j ≤ 2k` gets colour 0,
//! and its translate by `h` gets colour `h`. That colours the odd difference
//! classes `1, 3, …, 2k−1`. The residual graph of even differences
//! `2, …, 2k`, plus `2k+1` when `ℓ ≥ 2`, is then edge-coloured with fresh
//! colours.
//!
//! For `ℓ = 3` the residual is `(2k+2)`-regular on an odd number of vertices,
//! so it needs `2k+3` fresh colours and the plain scheme ends one colour above
//! `⌈3n/2⌉`. [`OddCasePlan::augment`] fixes this: it shifts every base colour
//! down by one, which leaves the vertex-colour pairs `{b, b±1}` unused, and
//! then moves the residual edges `{b−1, b+1}` for `b = 0, 2, …, 4k` onto
//! vertex colour `b`. What remains has maximum degree `2k+2` and is coloured
//! with exactly that many fresh colours.

use std::collections::BTreeMap;

use crate::colouring::{ColourId, Palette, TotalColouring};
use crate::edge_factor::{h2_class1_colour, kempe_edge_colour, vizing_colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{circulant, complete_graph, EdgeId, Multigraph};

/// The vertex-colour part of a colouring of `K_{4k+ℓ}` and what is left.
#[derive(Debug, Clone)]
pub struct OddCasePlan {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    /// Translation colouring: `{i + h, j + h} ↦ h − shift`.
    pub base: BTreeMap<EdgeId, ColourId>,
    pub shift: usize,
    /// Residual edges moved onto vertex colours by [`OddCasePlan::augment`].
    pub extra: BTreeMap<EdgeId, ColourId>,
    /// Edges still to be coloured with fresh colours.
    pub residual: Multigraph,
    /// Number of fresh colours reserved for the residual.
    pub fresh: usize,
}

fn order_error(n: usize) -> Error {
    Error::BadOrder {
        what: "difference construction",
        expected: "n >= 5 and n not divisible by 4",
        n,
    }
}

/// Step one of the `n ≢ 0 (mod 4)` construction, with consistency checks on
/// the edge counts and the residual.
pub fn base_difference_colouring(n: usize) -> Result<OddCasePlan> {
    if n < 5 || n % 4 == 0 {
        return Err(order_error(n));
    }
    let (k, l) = (n / 4, n % 4);
    let mut base = BTreeMap::new();
    for h in 0..n {
        for i in 1..=k {
            let j = 2 * k + 1 - i;
            base.insert(EdgeId::simple((i + h) % n, (j + h) % n), h as ColourId);
        }
    }

    let internal = |what: String| Err(Error::Internal(what));
    if base.len() != k * n {
        return internal(format!("{} base edges, expected {}", base.len(), k * n));
    }
    let mut per_colour = vec![0; n];
    let mut per_vertex = vec![0; n];
    for (e, &c) in &base {
        per_colour[c as usize] += 1;
        per_vertex[e.u] += 1;
        per_vertex[e.v] += 1;
    }
    if per_colour.iter().any(|&x| x != k) || per_vertex.iter().any(|&x| x != 2 * k) {
        return internal("base colour classes or vertex loads are uneven".into());
    }

    let complete = complete_graph(n)?;
    let residual = Multigraph::from_edges(
        n,
        complete
            .edges()
            .filter(|e| !base.contains_key(e))
            .map(|e| (e.u, e.v)),
    )?;
    let mut diffs: Vec<usize> = (1..=k).map(|d| 2 * d).collect();
    if l >= 2 {
        diffs.push(2 * k + 1);
    }
    if residual != circulant(n, &diffs)? {
        return internal("residual is not the expected circulant".into());
    }
    let fresh = match l {
        1 | 2 => 2 * k + 1,
        _ => 2 * k + 3,
    };
    Ok(OddCasePlan {
        n,
        k,
        l,
        base,
        shift: 0,
        extra: BTreeMap::new(),
        residual,
        fresh,
    })
}

impl OddCasePlan {
    /// Rebalances an `ℓ = 3` plan so that the residual needs only `2k+2`
    /// fresh colours.
    pub fn augment(mut self) -> Result<OddCasePlan> {
        if self.l != 3 || self.shift != 0 {
            return Err(Error::Internal("only an unshifted l = 3 plan can be augmented".into()));
        }
        let n = self.n;
        for c in self.base.values_mut() {
            *c = ((*c as usize + n - 1) % n) as ColourId;
        }
        self.shift = 1;
        for b in (0..=4 * self.k).step_by(2) {
            let e = EdgeId::simple((b + n - 1) % n, (b + 1) % n);
            if !self.residual.contains(e) {
                return Err(Error::Internal(format!("{e} is not a residual edge")));
            }
            self.extra.insert(e, b as ColourId);
        }
        self.residual = Multigraph::from_edges(
            n,
            self.residual
                .edges()
                .filter(|e| !self.extra.contains_key(e))
                .map(|e| (e.u, e.v)),
        )?;
        self.fresh = 2 * self.k + 2;
        Ok(self)
    }

    /// Palette `0, …, n−1` followed by the fresh colours `r0, r1, …`.
    pub fn palette(&self) -> Palette {
        let labels = (0..self.n)
            .map(|i| i.to_string())
            .chain((0..self.fresh).map(|i| format!("r{i}")))
            .collect();
        Palette::new(labels).expect("distinct labels")
    }

    /// Completes the plan with an edge colouring of the residual that uses
    /// fresh colour `r_i` for colour `i`.
    pub fn complete_with(&self, residual: &EdgeColouring) -> Result<TotalColouring> {
        if !residual.is_proper(&self.residual) {
            return Err(Error::Internal("residual edge colouring is not proper".into()));
        }
        if residual.colour_of.values().any(|&c| c as usize >= self.fresh) {
            return Err(Error::BudgetExceeded {
                used: residual.colours_used,
                budget: self.fresh,
            });
        }
        let mut edges = self.base.clone();
        edges.extend(self.extra.iter().map(|(&e, &c)| (e, c)));
        edges.extend(
            residual
                .colour_of
                .iter()
                .map(|(&e, &c)| (e, self.n as ColourId + c)),
        );
        Ok(TotalColouring::new(
            self.palette(),
            (0..self.n as ColourId).collect(),
            edges,
        ))
    }
}

/// Harmonious total colouring of `K_n` with `⌈3n/2⌉` colours for `n ≥ 5`,
/// `n ≢ 0 (mod 4)`.
pub fn construct_mod_1_2_3(n: usize) -> Result<TotalColouring> {
    let plan = base_difference_colouring(n)?;
    let (plan, residual) = match plan.l {
        1 => {
            let col = vizing_colour(&plan.residual)?;
            (plan, col)
        }
        2 => {
            let col = h2_class1_colour(plan.k)?;
            (plan, col)
        }
        _ => {
            let plan = plan.augment()?;
            let col = (0..64)
                .find_map(|seed| kempe_edge_colour(&plan.residual, plan.fresh, seed, 200 * n as u64 * n as u64))
                .ok_or_else(|| {
                    Error::Internal(format!("no {}-edge-colouring of the residual of K_{n}", plan.fresh))
                })?;
            (plan, col)
        }
    };
    if residual.colours_used > plan.fresh {
        return Err(Error::BudgetExceeded {
            used: residual.colours_used,
            budget: plan.fresh,
        });
    }
    plan.complete_with(&residual)
}
