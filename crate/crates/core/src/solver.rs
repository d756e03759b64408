//! Exhaustive search for harmonious total colourings with a fixed number of
//! colours.
//!
//! Variables are assigned depth first: vertices by descending degree, then
//! edges in lexicographic order. A partial assignment is pruned as soon as it
//! breaks properness or reuses a vertex/edge colour pair. The pair
//! occupancy table is kept incrementally. Two symmetry reductions are
//! available:
//!
//! * on complete (multi)graphs all vertex colours differ, so vertex `i` can be
//!   fixed to colour `i`;
//! * colours that are still unused are interchangeable, so only the lowest
//!   unused colour is tried.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bounds::{counting_lower_bound, expected_ht};
use crate::colouring::{ColourId, Palette, TotalColouring};
use crate::error::{Error, Result};
use crate::graph::{complete_multigraph, Multigraph};
use crate::verify::{verify, Mode};

pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    None,
    /// Fix vertex `i` to colour `i`. Only valid on complete graphs.
    CompleteGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub colour_budget: u32,
    pub symmetry: Symmetry,
    /// Try only the lowest colour not yet used anywhere.
    pub interchangeable_colours: bool,
    pub node_limit: Option<u64>,
    /// Number of worker threads for the top-level branches.
    pub parallel_width: usize,
}

impl SearchConfig {
    pub fn new(colour_budget: u32) -> Self {
        SearchConfig {
            colour_budget,
            symmetry: Symmetry::None,
            interchangeable_colours: true,
            node_limit: Some(DEFAULT_NODE_LIMIT),
            parallel_width: 1,
        }
    }

    pub fn complete(colour_budget: u32) -> Self {
        SearchConfig {
            symmetry: Symmetry::CompleteGraph,
            ..Self::new(colour_budget)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat(TotalColouring),
    Unsat,
    Inconclusive,
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Sat(_) => "sat",
            Outcome::Unsat => "unsat",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub outcome: Outcome,
    pub budget: u32,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl Certificate {
    pub fn is_sat(&self) -> bool {
        matches!(self.outcome, Outcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        self.outcome == Outcome::Unsat
    }

    pub fn witness(&self) -> Option<&TotalColouring> {
        match &self.outcome {
            Outcome::Sat(c) => Some(c),
            _ => None,
        }
    }
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
enum Var {
    Vertex(usize),
    Edge(usize),
}

/// Static view of the instance shared by all workers.
struct Problem {
    n: usize,
    q: usize,
    /// `(u, v)` per dense edge index.
    ends: Vec<(usize, usize)>,
    /// Neighbouring vertices of each vertex.
    nbrs: Vec<Vec<usize>>,
    /// Dense indices of the edges at each vertex.
    inc: Vec<Vec<usize>>,
    order: Vec<Var>,
}

impl Problem {
    fn new(g: &Multigraph, q: usize, fixed_vertices: bool) -> Self {
        let n = g.n();
        let ends: Vec<_> = g.edges().map(|e| (e.u, e.v)).collect();
        let nbrs = (0..n).map(|v| g.neighbours(v).map(|(w, _)| w).collect()).collect();
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in ends.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        let mut order = Vec::new();
        if !fixed_vertices {
            let mut vs: Vec<usize> = (0..n).collect();
            vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            order.extend(vs.into_iter().map(Var::Vertex));
        }
        order.extend((0..ends.len()).map(Var::Edge));
        Problem {
            n,
            q,
            ends,
            nbrs,
            inc,
            order,
        }
    }
}

/// Mutable search state owned by one worker.
#[derive(Clone)]
struct State {
    vcol: Vec<u32>,
    ecol: Vec<u32>,
    /// `edge_at[v * q + c]`: colour `c` is on an edge at `v`.
    edge_at: Vec<bool>,
    pairs: Vec<bool>,
    /// Uses of each colour, for the interchangeable-colour rule.
    uses: Vec<u32>,
    /// Smallest colour never used.
    next_unused: u32,
}

impl State {
    fn new(p: &Problem) -> Self {
        State {
            vcol: vec![NONE; p.n],
            ecol: vec![NONE; p.ends.len()],
            edge_at: vec![false; p.n * p.q],
            pairs: vec![false; p.q * p.q],
            uses: vec![0; p.q],
            next_unused: 0,
        }
    }

    fn pair_slot(q: usize, a: u32, b: u32) -> usize {
        let (lo, hi) = (a.min(b), a.max(b));
        lo as usize * q + hi as usize
    }

    /// Attempts `var := c`; on success returns the pair slots it claimed.
    fn try_assign(&mut self, p: &Problem, var: Var, c: u32, claimed: &mut Vec<usize>) -> bool {
        claimed.clear();
        match var {
            Var::Vertex(v) => {
                if p.nbrs[v].iter().any(|&w| self.vcol[w] == c) {
                    return false;
                }
                if self.edge_at[v * p.q + c as usize] {
                    return false;
                }
                for &e in &p.inc[v] {
                    let ec = self.ecol[e];
                    if ec == NONE {
                        continue;
                    }
                    let s = Self::pair_slot(p.q, c, ec);
                    if self.pairs[s] {
                        self.release(claimed);
                        return false;
                    }
                    self.pairs[s] = true;
                    claimed.push(s);
                }
                self.vcol[v] = c;
            }
            Var::Edge(e) => {
                let (u, v) = p.ends[e];
                if self.edge_at[u * p.q + c as usize] || self.edge_at[v * p.q + c as usize] {
                    return false;
                }
                for x in [u, v] {
                    let vc = self.vcol[x];
                    if vc == NONE {
                        continue;
                    }
                    let s = Self::pair_slot(p.q, vc, c);
                    if vc == c || self.pairs[s] {
                        self.release(claimed);
                        return false;
                    }
                    self.pairs[s] = true;
                    claimed.push(s);
                }
                self.ecol[e] = c;
                self.edge_at[u * p.q + c as usize] = true;
                self.edge_at[v * p.q + c as usize] = true;
            }
        }
        self.uses[c as usize] += 1;
        if c == self.next_unused {
            self.next_unused += 1;
        }
        true
    }

    fn release(&mut self, claimed: &[usize]) {
        for &s in claimed {
            self.pairs[s] = false;
        }
    }

    fn unassign(&mut self, p: &Problem, var: Var, claimed: &[usize]) {
        self.release(claimed);
        let c = match var {
            Var::Vertex(v) => std::mem::replace(&mut self.vcol[v], NONE),
            Var::Edge(e) => {
                let (u, v) = p.ends[e];
                let c = std::mem::replace(&mut self.ecol[e], NONE);
                self.edge_at[u * p.q + c as usize] = false;
                self.edge_at[v * p.q + c as usize] = false;
                c
            }
        };
        self.uses[c as usize] -= 1;
        if self.uses[c as usize] == 0 && c + 1 == self.next_unused {
            self.next_unused = c;
        }
    }

    fn candidates(&self, p: &Problem, interchangeable: bool) -> u32 {
        if interchangeable {
            (self.next_unused + 1).min(p.q as u32)
        } else {
            p.q as u32
        }
    }
}

/// Budget shared by all workers.
struct Shared {
    stop: AtomicBool,
    nodes: AtomicU64,
    limit: u64,
    limit_hit: AtomicBool,
}

enum Search {
    Found,
    Exhausted,
    Aborted,
}

struct Worker<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    interchangeable: bool,
    state: State,
    /// Nodes not yet added to the shared counter.
    unflushed: u64,
    /// Shared counter as of the last flush.
    seen: u64,
}

impl Worker<'_> {
    const FLUSH: u64 = 1 << 12;

    fn tick(&mut self) -> bool {
        self.unflushed += 1;
        if self.seen + self.unflushed > self.shared.limit {
            self.shared.limit_hit.store(true, Ordering::Relaxed);
            return false;
        }
        if self.unflushed == Self::FLUSH {
            self.flush();
            if self.shared.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    fn flush(&mut self) {
        self.seen = self.shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
        self.unflushed = 0;
    }

    fn dfs(&mut self, depth: usize) -> Search {
        let Some(&var) = self.p.order.get(depth) else {
            return Search::Found;
        };
        let mut claimed = Vec::new();
        for c in 0..self.state.candidates(self.p, self.interchangeable) {
            if !self.state.try_assign(self.p, var, c, &mut claimed) {
                continue;
            }
            if !self.tick() {
                return Search::Aborted;
            }
            match self.dfs(depth + 1) {
                Search::Exhausted => self.state.unassign(self.p, var, &claimed),
                other => return other,
            }
        }
        Search::Exhausted
    }
}

/// Exhaustive search for a harmonious total colouring of `g` with at most
/// `cfg.colour_budget` colours.
pub fn search(g: &Multigraph, cfg: &SearchConfig) -> Result<Certificate> {
    let start = Instant::now();
    if cfg.colour_budget == 0 {
        return Err(Error::Malformed("colour budget must be at least 1".into()));
    }
    let fixed = cfg.symmetry == Symmetry::CompleteGraph;
    if fixed && !g.is_complete() {
        return Err(Error::NotComplete);
    }
    let q = cfg.colour_budget as usize;
    let done = |outcome, nodes| Certificate {
        outcome,
        budget: cfg.colour_budget,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    };
    if fixed && g.n() > q {
        return Ok(done(Outcome::Unsat, 0));
    }

    let p = Problem::new(g, q, fixed);
    let mut root = State::new(&p);
    if fixed {
        let mut scratch = Vec::new();
        for v in 0..p.n {
            let ok = root.try_assign(&p, Var::Vertex(v), v as u32, &mut scratch);
            debug_assert!(ok);
        }
    }
    let shared = Shared {
        stop: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        limit: cfg.node_limit.unwrap_or(u64::MAX),
        limit_hit: AtomicBool::new(false),
    };

    let solution: Mutex<Option<(usize, State)>> = Mutex::new(None);
    if p.order.is_empty() {
        *solution.lock().unwrap() = Some((0, root.clone()));
    } else {
        // Top-level branches: values of the first free variable.
        let first = p.order[0];
        let mut branches = Vec::new();
        let mut claimed = Vec::new();
        for c in 0..root.candidates(&p, cfg.interchangeable_colours) {
            let mut s = root.clone();
            if s.try_assign(&p, first, c, &mut claimed) {
                branches.push(s);
            }
        }
        let next = AtomicUsize::new(0);
        let run = || {
            loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= branches.len() || shared.stop.load(Ordering::Relaxed) {
                    break;
                }
                let mut w = Worker {
                    p: &p,
                    shared: &shared,
                    interchangeable: cfg.interchangeable_colours,
                    state: branches[i].clone(),
                    unflushed: 0,
                    seen: shared.nodes.load(Ordering::Relaxed),
                };
                let r = if w.tick() { w.dfs(1) } else { Search::Aborted };
                w.flush();
                match r {
                    Search::Found => {
                        let mut slot = solution.lock().unwrap();
                        if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                            *slot = Some((i, w.state));
                        }
                        shared.stop.store(true, Ordering::Relaxed);
                    }
                    Search::Aborted => {
                        if shared.limit_hit.load(Ordering::Relaxed) {
                            shared.stop.store(true, Ordering::Relaxed);
                        }
                    }
                    Search::Exhausted => {}
                }
            }
        };
        let width = cfg.parallel_width.max(1).min(branches.len().max(1));
        if width == 1 {
            run();
        } else {
            std::thread::scope(|s| {
                for _ in 0..width {
                    s.spawn(run);
                }
            });
        }
    }

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let found = solution.into_inner().unwrap();
    if let Some((_, state)) = found {
        let witness = to_colouring(g, &p, &state);
        let report = verify(g, &witness, Mode::FirstViolation)?;
        if !report.harmonious {
            return Err(Error::Internal(format!(
                "search produced a non-harmonious witness: {:?}",
                report.violations
            )));
        }
        return Ok(done(Outcome::Sat(witness), nodes));
    }
    if shared.limit_hit.load(Ordering::Relaxed) {
        return Ok(done(Outcome::Inconclusive, nodes));
    }
    Ok(done(Outcome::Unsat, nodes))
}

fn to_colouring(g: &Multigraph, p: &Problem, s: &State) -> TotalColouring {
    let edges = g.edges().zip(&s.ecol).map(|(e, &c)| (e, c as ColourId)).collect();
    TotalColouring::new(Palette::numeric(p.q), s.vcol.clone(), edges)
}

/// Result of scanning budgets upward until a colouring exists.
#[derive(Debug, Clone)]
pub enum Exact {
    Determined {
        value: u32,
        /// UNSAT certificate at `value − 1`; absent when `value = 1`.
        below: Option<Certificate>,
        at: Certificate,
    },
    /// The search at this budget hit its node limit.
    Inconclusive(Certificate),
    /// Every budget up to the maximum is UNSAT.
    AboveMax { max_budget: u32 },
}

impl Exact {
    pub fn value(&self) -> Option<u32> {
        match self {
            Exact::Determined { value, .. } => Some(*value),
            _ => None,
        }
    }
}

/// Smallest budget admitting a harmonious total colouring of `g`, searched
/// upward from 1. Budget, symmetry and limits are taken from `template`
/// except for `colour_budget`.
pub fn ht_exact(g: &Multigraph, max_budget: u32, template: &SearchConfig) -> Result<Exact> {
    let mut below = None;
    for q in 1..=max_budget {
        let cfg = SearchConfig {
            colour_budget: q,
            ..*template
        };
        let cert = search(g, &cfg)?;
        match cert.outcome {
            Outcome::Sat(_) => {
                return Ok(Exact::Determined {
                    value: q,
                    below,
                    at: cert,
                })
            }
            Outcome::Unsat => below = Some(cert),
            Outcome::Inconclusive => return Ok(Exact::Inconclusive(cert)),
        }
    }
    Ok(Exact::AboveMax { max_budget })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossStatus {
    Agrees,
    Mismatch,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRecord {
    pub n: usize,
    pub lambda: u32,
    pub expected: u64,
    pub lower_bound: u64,
    pub found: Option<u32>,
    pub nodes: u64,
    pub status: CrossStatus,
}

/// Compares exhaustive-search values of `h_t(λK_n)` with the closed form and
/// the counting bound over small ranges.
pub fn crosscheck_bounds(
    ns: impl IntoIterator<Item = usize> + Clone,
    lambdas: impl IntoIterator<Item = u32>,
    node_limit: Option<u64>,
    parallel_width: usize,
) -> Result<Vec<CrossRecord>> {
    let mut out = Vec::new();
    for lambda in lambdas {
        for n in ns.clone() {
            let g = complete_multigraph(n, lambda)?;
            let expected = expected_ht(n as u64, lambda as u64);
            let lower_bound = counting_lower_bound(n as u64, lambda as u64)?.lower_bound;
            let template = SearchConfig {
                node_limit,
                parallel_width,
                ..SearchConfig::complete(1)
            };
            let exact = ht_exact(&g, expected as u32 + 1, &template)?;
            let (found, nodes) = match &exact {
                Exact::Determined { value, below, at } => (
                    Some(*value),
                    at.nodes_explored + below.as_ref().map_or(0, |b| b.nodes_explored),
                ),
                Exact::Inconclusive(c) => (None, c.nodes_explored),
                Exact::AboveMax { .. } => (None, 0),
            };
            let status = match (&exact, found) {
                (Exact::Inconclusive(_), _) => CrossStatus::Inconclusive,
                (_, Some(v)) if v as u64 == expected && v as u64 >= lower_bound => CrossStatus::Agrees,
                _ => CrossStatus::Mismatch,
            };
            out.push(CrossRecord {
                n,
                lambda,
                expected,
                lower_bound,
                found,
                nodes,
                status,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn k3_threshold() {
        let g = complete_graph(3).unwrap();
        assert!(search(&g, &SearchConfig::complete(4)).unwrap().is_unsat());
        let sat = search(&g, &SearchConfig::complete(5)).unwrap();
        assert!(sat.is_sat());
        assert!(verify(&g, sat.witness().unwrap(), Mode::Exhaustive).unwrap().harmonious);
    }

    #[test]
    fn k4_needs_seven() {
        let g = complete_graph(4).unwrap();
        assert!(search(&g, &SearchConfig::complete(6)).unwrap().is_unsat());
        assert!(search(&g, &SearchConfig::complete(7)).unwrap().is_sat());
    }

    #[test]
    fn symmetry_modes_agree() {
        for n in [3, 4] {
            let g = complete_graph(n).unwrap();
            for q in 4..=7 {
                let plain = SearchConfig {
                    interchangeable_colours: false,
                    ..SearchConfig::new(q)
                };
                let a = search(&g, &plain).unwrap().is_sat();
                let b = search(&g, &SearchConfig::new(q)).unwrap().is_sat();
                let c = search(&g, &SearchConfig::complete(q)).unwrap().is_sat();
                assert_eq!((a, a), (b, c), "K_{n}, q = {q}");
            }
        }
    }

    #[test]
    fn rejects_bad_configs() {
        let path = Multigraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(search(&path, &SearchConfig::complete(5)), Err(Error::NotComplete));
        assert!(search(&path, &SearchConfig::new(0)).is_err());
        // works without the complete-graph mode
        assert!(search(&path, &SearchConfig::new(4)).unwrap().is_sat());
    }

    #[test]
    fn exact_small_values() {
        let t = SearchConfig::complete(1);
        assert_eq!(ht_exact(&complete_graph(1).unwrap(), 5, &t).unwrap().value(), Some(1));
        assert_eq!(ht_exact(&complete_graph(2).unwrap(), 5, &t).unwrap().value(), Some(3));
        let two = complete_multigraph(2, 2).unwrap();
        assert_eq!(ht_exact(&two, 6, &t).unwrap().value(), Some(4));
        assert!(matches!(
            ht_exact(&complete_graph(3).unwrap(), 3, &t).unwrap(),
            Exact::AboveMax { max_budget: 3 }
        ));
    }

    #[test]
    fn node_limit_is_inconclusive() {
        let g = complete_graph(5).unwrap();
        let cfg = SearchConfig {
            node_limit: Some(10),
            ..SearchConfig::complete(7)
        };
        let cert = search(&g, &cfg).unwrap();
        assert_eq!(cert.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn sequential_node_count_is_reproducible() {
        let g = complete_graph(4).unwrap();
        let a = search(&g, &SearchConfig::complete(6)).unwrap();
        let b = search(&g, &SearchConfig::complete(6)).unwrap();
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert!(a.nodes_explored > 0);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = complete_multigraph(3, 2).unwrap();
        for q in 6..=9 {
            let seq = search(&g, &SearchConfig::complete(q)).unwrap();
            let par = search(
                &g,
                &SearchConfig {
                    parallel_width: 4,
                    ..SearchConfig::complete(q)
                },
            )
            .unwrap();
            assert_eq!(seq.outcome.name(), par.outcome.name(), "q = {q}");
        }
    }
}
