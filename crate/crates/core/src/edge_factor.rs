//! Edge colourings and factorizations used by the constructions.

use std::collections::{BTreeMap, VecDeque};

use rand::rngs::StdRng;
use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};

use crate::colouring::ColourId;
use crate::error::{Error, Result};
use crate::graph::{circulant, EdgeId, Multigraph, VertexId};

/// A colour per edge copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    pub colour_of: BTreeMap<EdgeId, ColourId>,
    pub colours_used: usize,
}

impl EdgeColouring {
    pub fn from_map(colour_of: BTreeMap<EdgeId, ColourId>) -> Self {
        let mut distinct: Vec<_> = colour_of.values().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        EdgeColouring {
            colours_used: distinct.len(),
            colour_of,
        }
    }

    /// Every edge of `g` is coloured, nothing else is, and edges sharing an
    /// endpoint differ.
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        if self.colour_of.len() != g.edge_count() {
            return false;
        }
        for v in 0..g.n() {
            let mut seen = Vec::new();
            for e in g.incident_edges(v) {
                let Some(&c) = self.colour_of.get(&e) else {
                    return false;
                };
                if seen.contains(&c) {
                    return false;
                }
                seen.push(c);
            }
        }
        true
    }
}

const NONE: u32 = u32::MAX;

/// Partial edge colouring state: `colour[u*n+v]` is the colour of `{u,v}`
/// and `at[v*q+c]` the neighbour reached from `v` along colour `c`.
struct EdgeState {
    n: usize,
    q: usize,
    colour: Vec<u32>,
    at: Vec<u32>,
}

impl EdgeState {
    fn new(n: usize, q: usize) -> Self {
        EdgeState {
            n,
            q,
            colour: vec![NONE; n * n],
            at: vec![NONE; n * q],
        }
    }

    fn get(&self, u: usize, v: usize) -> u32 {
        self.colour[u * self.n + v]
    }

    fn is_free(&self, v: usize, c: u32) -> bool {
        self.at[v * self.q + c as usize] == NONE
    }

    fn free_colour(&self, v: usize) -> u32 {
        (0..self.q as u32)
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree <= Δ always has a free colour among Δ+1")
    }

    fn set(&mut self, u: usize, v: usize, c: u32) {
        self.colour[u * self.n + v] = c;
        self.colour[v * self.n + u] = c;
        self.at[u * self.q + c as usize] = v as u32;
        self.at[v * self.q + c as usize] = u as u32;
    }

    fn clear(&mut self, u: usize, v: usize) {
        let c = self.get(u, v);
        if c != NONE {
            self.at[u * self.q + c as usize] = NONE;
            self.at[v * self.q + c as usize] = NONE;
            self.colour[u * self.n + v] = NONE;
            self.colour[v * self.n + u] = NONE;
        }
    }

    /// Maximal fan of `u` starting at `v`.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.n];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = (0..self.q as u32).filter(|&c| self.is_free(last, c)).find_map(|c| {
                let w = self.at[u * self.q + c as usize];
                (w != NONE && !in_fan[w as usize]).then_some(w as usize)
            });
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colours `c` and `d` along the alternating path leaving `u` on
    /// its `d` edge.
    fn invert_path(&mut self, u: usize, c: u32, d: u32) {
        let mut path = Vec::new();
        let mut x = u;
        let mut want = d;
        loop {
            let y = self.at[x * self.q + want as usize];
            if y == NONE {
                break;
            }
            let y = y as usize;
            path.push((x, y, want));
            x = y;
            want = if want == d { c } else { d };
        }
        for &(a, b, _) in &path {
            self.clear(a, b);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }
    }

    fn colour_edge(&mut self, u: usize, v: usize) {
        let fan = self.fan(u, v);
        let c = self.free_colour(u);
        let d = self.free_colour(*fan.last().unwrap());
        if c != d {
            self.invert_path(u, c, d);
        }
        // First fan vertex with d free whose prefix is still a fan.
        let mut end = None;
        for (i, &w) in fan.iter().enumerate() {
            if i > 0 {
                let col = self.get(u, w);
                if col == NONE || !self.is_free(fan[i - 1], col) {
                    break;
                }
            }
            if self.is_free(w, d) {
                end = Some(i);
                break;
            }
        }
        let end = end.expect("Misra-Gries invariant: some fan prefix ends at a vertex with d free");
        for i in 0..end {
            let next = self.get(u, fan[i + 1]);
            self.clear(u, fan[i + 1]);
            self.set(u, fan[i], next);
        }
        self.set(u, fan[end], d);
    }
}

/// Proper edge colouring of a simple graph with at most `Δ + 1` colours
/// (Misra–Gries). Edges are coloured in lexicographic order, so the result is
/// deterministic.
pub fn vizing_colour(g: &Multigraph) -> Result<EdgeColouring> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let mut mg = EdgeState::new(g.n(), g.max_degree() + 1);
    for &(u, v, _) in g.pairs() {
        mg.colour_edge(u, v);
    }
    let colour_of = g
        .pairs()
        .iter()
        .map(|&(u, v, _)| (EdgeId::simple(u, v), mg.get(u, v)))
        .collect();
    Ok(EdgeColouring::from_map(colour_of))
}

/// Tries to colour a simple graph with `q` colours by randomized Kempe-chain
/// recolouring. An uncoloured edge `uv` takes a colour missing at both ends
/// when one exists. Otherwise, with `a` missing at `u` and `b` missing at
/// `v`, the `a/b` chain leaving `v` is swapped so that `a` becomes free at
/// `v`. When that chain ends at `u`, the `b` edge at `u` is uncoloured
/// instead and requeued. A random fraction of steps first uncolours some
/// edge at `v` to escape chains that would cycle. Returns `None` after
/// `max_steps` edge placements.
pub fn kempe_edge_colour(g: &Multigraph, q: usize, seed: u64, max_steps: u64) -> Option<EdgeColouring> {
    if !g.is_simple() || g.max_degree() > q {
        return None;
    }
    let mut st = EdgeState::new(g.n(), q);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pending: VecDeque<(usize, usize)> = {
        let mut v: Vec<_> = g.pairs().iter().map(|&(a, b, _)| (a, b)).collect();
        v.shuffle(&mut rng);
        v.into()
    };
    let free = |st: &EdgeState, x: usize| -> Vec<u32> { (0..q as u32).filter(|&c| st.is_free(x, c)).collect() };
    let mut steps = 0;
    while let Some((mut u, mut v)) = pending.pop_back() {
        steps += 1;
        if steps > max_steps {
            return None;
        }
        let (mut at_u, mut at_v) = (free(&st, u), free(&st, v));
        let common: Vec<u32> = at_u.iter().copied().filter(|c| at_v.contains(c)).collect();
        if let Some(&c) = common.choose(&mut rng) {
            st.set(u, v, c);
            continue;
        }
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut u, &mut v);
            std::mem::swap(&mut at_u, &mut at_v);
        }
        let a = *at_u.choose(&mut rng).expect("degree below q leaves a free colour");
        // With one free colour per vertex the a/b chain can cycle forever;
        // now and then free a random colour at v instead.
        let b = if rng.gen_bool(0.2) {
            let b = (0..q as u32).filter(|&c| c != a).choose(&mut rng)?;
            let z = st.at[v * q + b as usize];
            if z != NONE {
                st.clear(v, z as usize);
                pending.push_front((v.min(z as usize), v.max(z as usize)));
            }
            b
        } else {
            *at_v.choose(&mut rng).expect("degree below q leaves a free colour")
        };
        let mut end = v;
        let mut want = a;
        loop {
            let y = st.at[end * q + want as usize];
            if y == NONE {
                break;
            }
            end = y as usize;
            want = if want == a { b } else { a };
        }
        if end == u {
            let w = st.at[u * q + b as usize] as usize;
            st.clear(u, w);
            st.set(u, v, b);
            pending.push_front((u.min(w), u.max(w)));
        } else {
            st.invert_path(v, b, a);
            st.set(u, v, a);
        }
    }
    let colour_of = g
        .pairs()
        .iter()
        .map(|&(u, v, _)| (EdgeId::simple(u, v), st.get(u, v)))
        .collect();
    Some(EdgeColouring::from_map(colour_of))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// Every factor is a perfect matching.
    Perfect,
    /// Every factor is a matching missing exactly one vertex.
    NearPerfect,
}

/// A partition of an edge set into matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub kind: FactorKind,
    pub n: usize,
    pub factors: Vec<Vec<EdgeId>>,
}

impl Factorization {
    /// Each factor is a matching of the declared kind.
    pub fn factors_are_matchings(&self) -> bool {
        let want = match self.kind {
            FactorKind::Perfect => self.n,
            FactorKind::NearPerfect => self.n - 1,
        };
        self.factors.iter().all(|f| {
            let mut hit = vec![false; self.n];
            for e in f {
                for x in [e.u, e.v] {
                    if x >= self.n || std::mem::replace(&mut hit[x], true) {
                        return false;
                    }
                }
            }
            hit.iter().filter(|&&h| h).count() == want
        })
    }

    /// The factors are pairwise disjoint and their union is `g`'s edge set.
    pub fn partitions(&self, g: &Multigraph) -> bool {
        let mut all: Vec<EdgeId> = self.factors.iter().flatten().copied().collect();
        all.sort_unstable();
        let expected: Vec<EdgeId> = g.edges().collect();
        all == expected
    }

    /// Edge colouring giving every edge of factor `i` colour `i`.
    pub fn to_edge_colouring(&self) -> EdgeColouring {
        EdgeColouring::from_map(
            self.factors
                .iter()
                .enumerate()
                .flat_map(|(i, f)| f.iter().map(move |&e| (e, i as ColourId)))
                .collect(),
        )
    }
}

/// `K_{n,n}` on left vertices `0..n` and right vertices `n..2n`.
pub fn complete_bipartite(n: usize) -> Multigraph {
    Multigraph::from_edges(2 * n, (0..n).flat_map(|x| (0..n).map(move |z| (x, n + z))))
        .expect("valid bipartite edge list")
}

/// 1-factorization of `K_{n,n}`: factor `y` joins left `x` to right
/// `x + y (mod n)`. Vertices are numbered as in [`complete_bipartite`].
pub fn bipartite_one_factorization(n: usize) -> Factorization {
    let factors = (0..n)
        .map(|y| (0..n).map(|x| EdgeId::simple(x, n + (x + y) % n)).collect())
        .collect();
    Factorization {
        kind: FactorKind::Perfect,
        n: 2 * n,
        factors,
    }
}

/// Round-robin 1-factorization of `K_n` for even `n`: vertex `n−1` is fixed
/// and factor `r` pairs it with `r`, then `r+i` with `r−i` modulo `n−1`.
pub fn complete_even_one_factorization(n: usize) -> Result<Factorization> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::BadOrder {
            what: "one-factorization of K_n",
            expected: "even n >= 2",
            n,
        });
    }
    let m = n - 1;
    let factors = (0..m)
        .map(|r| {
            let mut f = vec![EdgeId::simple(r, m)];
            for i in 1..n / 2 {
                f.push(EdgeId::simple((r + i) % m, (r + m - i) % m));
            }
            f.sort_unstable();
            f
        })
        .collect();
    Ok(Factorization {
        kind: FactorKind::Perfect,
        n,
        factors,
    })
}

/// Near-1-factorization of `K_n` for odd `n`: factor `r` holds the pairs
/// `{i, j}` with `i + j ≡ r (mod n)`, leaving `r/2` unmatched.
pub fn complete_odd_near_factorization(n: usize) -> Result<Factorization> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadOrder {
            what: "near-one-factorization of K_n",
            expected: "odd n >= 3",
            n,
        });
    }
    let factors = (0..n)
        .map(|r| {
            (0..n)
                .filter_map(|i| {
                    let j = (r + n - i) % n;
                    (i < j).then(|| EdgeId::simple(i, j))
                })
                .collect()
        })
        .collect();
    Ok(Factorization {
        kind: FactorKind::NearPerfect,
        n,
        factors,
    })
}

/// The graph left uncoloured in `K_{4k+2}` by the difference colouring:
/// even differences `2, 4, …, 2k` and the involution `2k+1`.
pub fn h2_residual(k: usize) -> Result<Multigraph> {
    let diffs: Vec<usize> = (1..=k).map(|d| 2 * d).chain([2 * k + 1]).collect();
    circulant(4 * k + 2, &diffs)
}

/// Edge colouring of [`h2_residual`]`(k)` with exactly `2k + 1` colours.
///
/// Even and odd vertices each induce a `K_{2k+1}` (vertex `2a` or `2a+1`
/// becomes `a`), joined by the perfect matching of difference `2k+1`, which
/// sends even `a` to odd `a + k`. The even copy colours `{a, a'}` with
/// `a + a'` and the odd copy with `b + b' + 1`, so `a` misses `2a` and its
/// partner `a + k` misses `2a + 2k + 1 ≡ 2a`; the matching edge takes that
/// colour. The result is checked and repaired by search if ever improper.
pub fn h2_class1_colour(k: usize) -> Result<EdgeColouring> {
    if k == 0 {
        return Err(Error::BadOrder {
            what: "H2 residual",
            expected: "k >= 1",
            n: 0,
        });
    }
    let g = h2_residual(k)?;
    let n = 4 * k + 2;
    let q = 2 * k + 1;
    let colour_for = |x: VertexId, y: VertexId| -> ColourId {
        let (a, b) = (x / 2, y / 2);
        let c = match (x % 2, y % 2) {
            (0, 0) => a + b,
            (1, 1) => a + b + 1,
            (0, 1) => 2 * a,
            _ => 2 * b,
        };
        (c % q) as ColourId
    };
    let colouring = EdgeColouring::from_map(
        g.pairs()
            .iter()
            .map(|&(u, v, _)| (EdgeId::simple(u, v), colour_for(u, v)))
            .collect(),
    );
    if colouring.is_proper(&g) && colouring.colours_used == q {
        return Ok(colouring);
    }
    (0..16)
        .filter_map(|seed| kempe_edge_colour(&g, q, seed, 1_000_000))
        .find(|c| c.is_proper(&g))
        .ok_or_else(|| Error::Internal(format!("no {q}-edge-colouring of H2 found for n = {n}")))
}
