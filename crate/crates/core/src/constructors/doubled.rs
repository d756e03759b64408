//! Colourings of `K_{8m}` and `K_{8m+4}`.
//!
//! With `h = n/2`, let `𝒞′ = ℤ_{h−1} ∪ {∞}` and let `𝒞₀`, `𝒞₁` be two copies
//! of it, written `x_0` and `x_1`. The vertex set is `𝒞₀ ∪ 𝒞₁` and vertex
//! `x_u` has colour `x_u`. The edges between the two halves form a `K_{h,h}`
//! coloured from `𝒞′` by a 1-factorization. Edges inside each half follow
//! fixed modular formulas in the copy colours. Those formulas leave exactly
//! one repeated vertex/edge colour pair, which a short list of recolourings
//! removes.
//!
//! Index layout: vertex `x_u` is `u·h + x` with `∞ = h − 1`. Colours of
//! `𝒞₀ ∪ 𝒞₁` share those ids, and `y ∈ 𝒞′` is colour `2h + y`.

use std::collections::BTreeMap;

use crate::colouring::{ColourId, Palette, TotalColouring};
use crate::edge_factor::bipartite_one_factorization;
use crate::error::{Error, Result};
use crate::graph::EdgeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `n = 8m`, `𝒞′ = ℤ_{4m−1} ∪ {∞}`.
    EightM,
    /// `n = 8m + 4`, `𝒞′ = ℤ_{4m+1} ∪ {∞}`.
    EightMPlusFour,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Patch {
    pub edge: EdgeId,
    pub colour: ColourId,
}

/// Formula colouring before and after the recolouring step.
#[derive(Debug, Clone)]
pub struct Mod4Plan {
    pub m: usize,
    pub family: Family,
    /// Half the order; also `|𝒞′|`.
    pub h: usize,
    pub unpatched: TotalColouring,
    /// Recolourings, in application order.
    pub patches: Vec<Patch>,
}

impl Mod4Plan {
    pub fn n(&self) -> usize {
        2 * self.h
    }

    /// The colouring after every patch is applied.
    pub fn patched(&self) -> TotalColouring {
        let mut c = self.unpatched.clone();
        for p in &self.patches {
            c.set_edge(p.edge, p.colour);
        }
        c
    }

    /// The two edges whose incidences repeat a colour pair before patching:
    /// `{t_0, 0_0}` and `{t_1, 0_1}` with `t = 4m−2` (for `8m`) or `4m`
    /// (for `8m+4`).
    pub fn anomaly_edges(&self) -> [EdgeId; 2] {
        let t = self.h - 2;
        [
            EdgeId::simple(t, 0),
            EdgeId::simple(self.h + t, self.h),
        ]
    }
}

/// Symbolic handles for one instance.
struct Layout {
    h: usize,
    /// `h − 1`: modulus of the finite labels.
    p: usize,
}

impl Layout {
    fn md(&self, x: i64) -> usize {
        x.rem_euclid(self.p as i64) as usize
    }

    /// `x_u` for finite `x`, taken mod `p`.
    fn at(&self, x: i64, u: usize) -> usize {
        (u % 2) * self.h + self.md(x)
    }

    fn inf(&self, u: usize) -> usize {
        (u % 2) * self.h + self.h - 1
    }

    fn palette(&self) -> Palette {
        let sym = |x: usize| {
            if x == self.h - 1 {
                "∞".to_string()
            } else {
                x.to_string()
            }
        };
        let labels = (0..2)
            .flat_map(|u| (0..self.h).map(move |x| (u, x)))
            .map(|(u, x)| format!("{}_{u}", sym(x)))
            .chain((0..self.h).map(sym))
            .collect();
        Palette::new(labels).expect("distinct labels")
    }
}

struct Builder {
    edges: BTreeMap<EdgeId, ColourId>,
    clash: Option<EdgeId>,
}

impl Builder {
    fn set(&mut self, a: usize, b: usize, c: usize) {
        let e = EdgeId::simple(a, b);
        if self.edges.insert(e, c as ColourId).is_some() && self.clash.is_none() {
            self.clash = Some(e);
        }
    }
}

fn build(m: usize, family: Family) -> Result<Mod4Plan> {
    if m == 0 {
        return Err(Error::BadOrder {
            what: "doubled construction",
            expected: "m >= 1",
            n: 0,
        });
    }
    let h = match family {
        Family::EightM => 4 * m,
        Family::EightMPlusFour => 4 * m + 2,
    };
    let lay = Layout { h, p: h - 1 };
    let mut b = Builder {
        edges: BTreeMap::new(),
        clash: None,
    };

    // Between the halves: factor y joins x_0 to (x + y)_1, with ∞ as h − 1.
    for (y, factor) in bipartite_one_factorization(h).factors.iter().enumerate() {
        for e in factor {
            b.set(e.u, e.v, 2 * h + y);
        }
    }

    let mi = m as i64;
    let p = lay.p as i64;
    let mut patches = Vec::new();
    match family {
        Family::EightM if m == 1 => {
            for u in 0..2 {
                for j in 0..3 {
                    b.set(lay.inf(u), lay.at(j + 1, u), lay.at(j, u));
                }
            }
            b.set(lay.at(0, 0), lay.at(1, 0), lay.inf(1));
            b.set(lay.at(1, 0), lay.at(2, 0), lay.at(1, 1));
            b.set(lay.at(2, 0), lay.at(0, 0), lay.at(2, 1));
            b.set(lay.at(0, 1), lay.at(1, 1), lay.at(0, 0));
            b.set(lay.at(1, 1), lay.at(2, 1), lay.inf(0));
            b.set(lay.at(2, 1), lay.at(0, 1), lay.at(1, 0));
        }
        Family::EightM => {
            for u in 0..2 {
                let w = u + 1;
                for j in 0..p {
                    b.set(lay.inf(u), lay.at(2 * mi - 1 + j, u), lay.at(j, u));
                    for i in 0..mi - 1 {
                        b.set(lay.at(j, u), lay.at(4 * i + j + 3, u), lay.at(2 * i + j + 1, u));
                        b.set(lay.at(j, u), lay.at(4 * i + j + 5, u), lay.at(2 * i + j + 3, w));
                    }
                }
            }
            for j in 0..p {
                let c0 = if j % 2 == 0 && j <= 4 * mi - 4 {
                    lay.inf(1)
                } else {
                    lay.at(j, 1)
                };
                b.set(lay.at(j, 0), lay.at(j + 1, 0), c0);
                let c1 = if j % 2 == 1 && j <= 4 * mi - 3 {
                    lay.inf(0)
                } else {
                    lay.at(j, 0)
                };
                b.set(lay.at(j, 1), lay.at(j + 1, 1), c1);
            }
            let mut patch = |x: usize, y: usize, c: usize| {
                patches.push(Patch {
                    edge: EdgeId::simple(x, y),
                    colour: c as ColourId,
                })
            };
            patch(lay.at(4 * mi - 2, 0), lay.at(0, 0), lay.at(2 * mi - 1, 1));
            patch(lay.at(0, 0), lay.at(4 * mi - 3, 0), lay.at(4 * mi - 2, 1));
            patch(lay.at(2 * mi - 1, 1), lay.at(6 * mi - 4, 1), lay.at(4 * mi - 3, 0));
            patch(lay.at(4 * mi - 3, 0), lay.at(8 * mi - 6, 0), lay.at(4 * mi - 4, 1));
        }
        Family::EightMPlusFour => {
            for u in 0..2 {
                let w = u + 1;
                for j in 0..p {
                    b.set(lay.inf(u), lay.at(j, u), lay.at(j + 2 * mi, w));
                    for i in 0..mi {
                        b.set(lay.at(j, u), lay.at(4 * i + j + 3, u), lay.at(2 * i + j + 2, u));
                    }
                    for i in 0..mi - 1 {
                        b.set(lay.at(j, u), lay.at(4 * i + j + 5, u), lay.at(2 * i + j + 3, w));
                    }
                }
            }
            for j in 0..p {
                let c0 = if j % 2 == 0 && j <= 4 * mi - 2 {
                    lay.inf(0)
                } else {
                    lay.at(j, 1)
                };
                b.set(lay.at(j, 0), lay.at(j + 1, 0), c0);
                let c1 = if j % 2 == 1 && j < 4 * mi {
                    lay.inf(1)
                } else {
                    lay.at(j, 0)
                };
                b.set(lay.at(j, 1), lay.at(j + 1, 1), c1);
            }
            let mut patch = |x: usize, y: usize, c: usize| {
                patches.push(Patch {
                    edge: EdgeId::simple(x, y),
                    colour: c as ColourId,
                })
            };
            if m == 1 {
                patch(lay.at(0, 1), lay.at(4, 1), lay.at(3, 0));
                patch(lay.inf(0), lay.at(3, 0), lay.at(4, 0));
                patch(lay.at(4, 0), lay.at(1, 0), lay.at(0, 1));
            } else {
                patch(lay.at(4 * mi, 0), lay.at(0, 0), lay.at(2 * mi, 0));
                patch(lay.at(0, 0), lay.at(4 * mi - 1, 0), lay.at(4 * mi, 1));
                patch(lay.at(2 * mi, 0), lay.at(2 * mi - 2, 0), lay.at(4 * mi - 1, 0));
                patch(lay.at(4 * mi - 1, 0), lay.at(4 * mi - 3, 0), lay.at(4 * mi - 2, 1));
            }
        }
    }

    let n = 2 * h;
    if let Some(e) = b.clash {
        return Err(Error::Internal(format!("edge {e} assigned twice")));
    }
    if b.edges.len() != n * (n - 1) / 2 {
        return Err(Error::Internal(format!(
            "{} of {} edges coloured",
            b.edges.len(),
            n * (n - 1) / 2
        )));
    }
    if let Some(p) = patches.iter().find(|p| !b.edges.contains_key(&p.edge)) {
        return Err(Error::Internal(format!("patch targets missing edge {}", p.edge)));
    }
    let unpatched = TotalColouring::new(lay.palette(), (0..n as ColourId).collect(), b.edges);
    Ok(Mod4Plan {
        m,
        family,
        h,
        unpatched,
        patches,
    })
}

/// Formula colouring of `K_{8m}` with its recolouring list.
pub fn plan_8m(m: usize) -> Result<Mod4Plan> {
    build(m, Family::EightM)
}

/// Formula colouring of `K_{8m+4}` with its recolouring list.
pub fn plan_8m4(m: usize) -> Result<Mod4Plan> {
    build(m, Family::EightMPlusFour)
}

/// Harmonious total colouring of `K_{8m}` with `12m` colours.
pub fn construct_8m(m: usize) -> Result<TotalColouring> {
    Ok(plan_8m(m)?.patched())
}

/// Harmonious total colouring of `K_{8m+4}` with `12m + 6` colours.
pub fn construct_8m4(m: usize) -> Result<TotalColouring> {
    Ok(plan_8m4(m)?.patched())
}
