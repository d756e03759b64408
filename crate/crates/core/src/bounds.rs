//! Closed-form values of the harmonious total chromatic number of `λK_n` and
//! the counting lower bound behind them.

use serde::Serialize;

use crate::error::{Error, Result};

/// `h_t(λK_n)`.
///
/// For `λ = 1`: 1 at `n = 1`, 7 at `n = 4`, otherwise `⌈3n/2⌉`. For `λ ≥ 2`:
/// `3λ + 4` at `n = 4`, otherwise `(λ−1)(2⌈n/2⌉−1) + ⌈3n/2⌉`. The single
/// vertex needs one colour for any `λ`.
pub fn expected_ht(n: u64, lambda: u64) -> u64 {
    assert!(n >= 1 && lambda >= 1, "expected_ht needs n >= 1 and lambda >= 1");
    match n {
        1 => 1,
        4 => 3 * lambda + 4,
        _ => (lambda - 1) * (2 * n.div_ceil(2) - 1) + (3 * n).div_ceil(2),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    pub lambda: u64,
    /// `⌈(λ·C(n,2) − ⌊n(n−1)/4⌋) / ⌊n/2⌋⌉ + n`.
    pub lower_bound: u64,
    pub expected: u64,
    /// `⌊n(n−1)/4⌋`: the most edges that can carry vertex colours.
    pub vertex_coloured_edges: u64,
    /// `⌊n/2⌋`: the largest possible colour class among the edges.
    pub max_class: u64,
    /// `(λ−1)(n−1) + 3n/2` for even `n`, `(λ−1)n + (3n+1)/2` for odd `n`.
    pub closed_form: u64,
}

impl BoundReport {
    pub fn closed_form_agrees(&self) -> bool {
        self.closed_form == self.lower_bound
    }
}

/// Lower bound on `h_t(λK_n)` from counting colour classes.
///
/// At most `⌊n(n−1)/4⌋` edges can take colours that also appear on vertices,
/// and each remaining colour class is a matching of at most `⌊n/2⌋` edges.
pub fn counting_lower_bound(n: u64, lambda: u64) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::BadOrder {
            what: "counting lower bound",
            expected: "n >= 2",
            n: n as usize,
        });
    }
    if lambda == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let edges = lambda * n * (n - 1) / 2;
    let vertex_coloured_edges = n * (n - 1) / 4;
    let max_class = n / 2;
    let lower_bound = (edges - vertex_coloured_edges).div_ceil(max_class) + n;
    let closed_form = if n % 2 == 0 {
        (lambda - 1) * (n - 1) + 3 * n / 2
    } else {
        (lambda - 1) * n + (3 * n + 1) / 2
    };
    Ok(BoundReport {
        n,
        lambda,
        lower_bound,
        expected: expected_ht(n, lambda),
        vertex_coloured_edges,
        max_class,
        closed_form,
    })
}
