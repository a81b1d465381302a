//! Closed-form triangle bounds for a fixed edge count and the graphs that
//! attain them.
//!
//! Every edge count `n` splits uniquely as `n = C(r,2) + t` with
//! `0 <= t <= r - 1`. The maximum number of triangles over all graphs with
//! `n` edges is `C(r,3) + C(t,2)`, attained by `K_r` with one extra vertex
//! joined to `t` of its vertices (and, when `t = 1`, also by `K_2 ∪ K_r`).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{attach_fan, complete_graph, disjoint_union, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("{shape} is not a valid maximizer shape: {reason}")]
    InvalidShape { shape: String, reason: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(
        "Rivin's bound needs at least one edge and two vertices (got E={edges}, V={vertices})"
    )]
    RivinDomain { edges: u64, vertices: u64 },
}

/// `C(n, 2)`.
#[inline]
pub fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `C(n, 3)`.
#[inline]
pub fn choose3(n: u64) -> u64 {
    if n < 3 {
        return 0;
    }
    let n = n as u128;
    (n * (n - 1) * (n - 2) / 6) as u64
}

/// General binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `n = C(r,2) + t` with `C(r,2) <= n < C(r+1,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TriangularDecomposition {
    pub n: u64,
    pub r: u64,
    pub t: u64,
}

impl TriangularDecomposition {
    /// Fewest vertices that can carry `n` edges.
    pub fn min_vertex_count(&self) -> u64 {
        if self.t == 0 {
            self.r
        } else {
            self.r + 1
        }
    }
}

pub fn triangular_decompose(n: u64) -> TriangularDecomposition {
    // largest r with r(r-1)/2 <= n, from r = floor((1 + sqrt(1 + 8n)) / 2)
    let disc = 8u128 * n as u128 + 1;
    let mut r = disc.isqrt().div_ceil(2) as u64;
    while choose2(r) > n {
        r -= 1;
    }
    while choose2(r + 1) <= n {
        r += 1;
    }
    let r = r.max(1);
    TriangularDecomposition {
        n,
        r,
        t: n - choose2(r),
    }
}

/// Maximum number of triangles in a graph with `n` edges.
pub fn max_triangles(n: u64) -> u64 {
    let d = triangular_decompose(n);
    choose3(d.r) + choose2(d.t)
}

/// `((V-2)/sqrt(V(V-1))) * (sqrt(2)/3) * E^(3/2)`. Defined for `E >= 1`,
/// `V >= 2`; at `V = 2` (a single edge) it is 0.
pub fn rivin_bound(edge_count: u64, vertex_count: u64) -> Result<f64, ExtremalError> {
    if edge_count < 1 || vertex_count < 2 {
        return Err(ExtremalError::RivinDomain {
            edges: edge_count,
            vertices: vertex_count,
        });
    }
    let v = vertex_count as f64;
    let e = edge_count as f64;
    Ok((v - 2.0) / (v * (v - 1.0)).sqrt() * (2f64.sqrt() / 3.0) * e.powf(1.5))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Choose2Outcome {
    /// `C(c,2) + C(d,2) > C(a,2) + C(b,2)`.
    Strict,
    /// Both sides agree, and `c = a`.
    Equal,
    /// The tuple does not satisfy `a + b = c + d = m`, `c >= a >= b`.
    ViolatedPrecondition,
    /// Preconditions hold but the inequality or its equality case fails.
    Counterexample,
}

/// Compares `C(c,2) + C(d,2)` against `C(a,2) + C(b,2)` for a tuple with
/// `a + b = c + d = m` and `c >= a >= b`.
pub fn choose2_inequality_holds(a: u64, b: u64, c: u64, d: u64, m: u64) -> Choose2Outcome {
    if a + b != m || c + d != m || c < a || a < b {
        return Choose2Outcome::ViolatedPrecondition;
    }
    let lhs = choose2(c) + choose2(d);
    let rhs = choose2(a) + choose2(b);
    match (lhs.cmp(&rhs), c == a) {
        (std::cmp::Ordering::Greater, false) => Choose2Outcome::Strict,
        (std::cmp::Ordering::Equal, true) => Choose2Outcome::Equal,
        _ => Choose2Outcome::Counterexample,
    }
}

/// The triangle-maximal graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ExtremalShape {
    /// `K_r`.
    Complete { r: u64 },
    /// `K_r` plus a pendant vertex.
    PendantOne { r: u64 },
    /// `K_2 ∪ K_r`.
    K2UnionComplete { r: u64 },
    /// `K_r` plus a vertex joined to `t` of its vertices, `2 <= t <= r - 1`.
    FanT { r: u64, t: u64 },
}

impl fmt::Display for ExtremalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtremalShape::Complete { r } => write!(f, "K_{r}"),
            ExtremalShape::PendantOne { r } => write!(f, "K_{r}+pendant"),
            ExtremalShape::K2UnionComplete { r } => write!(f, "K_2 ∪ K_{r}"),
            ExtremalShape::FanT { r, t } => write!(f, "K_{r}+fan({t})"),
        }
    }
}

impl ExtremalShape {
    /// The `t` of the shape's decomposition (0, 1, or the fan size).
    pub fn extra_edges(&self) -> u64 {
        match *self {
            ExtremalShape::Complete { .. } => 0,
            ExtremalShape::PendantOne { .. } | ExtremalShape::K2UnionComplete { .. } => 1,
            ExtremalShape::FanT { t, .. } => t,
        }
    }

    pub fn r(&self) -> u64 {
        match *self {
            ExtremalShape::Complete { r }
            | ExtremalShape::PendantOne { r }
            | ExtremalShape::K2UnionComplete { r }
            | ExtremalShape::FanT { r, .. } => r,
        }
    }

    pub fn is_connected(&self) -> bool {
        !matches!(self, ExtremalShape::K2UnionComplete { .. })
    }

    pub fn validate(&self) -> Result<(), ExtremalError> {
        let reason = match *self {
            ExtremalShape::Complete { r } if r < 1 => Some("r must be at least 1"),
            ExtremalShape::PendantOne { r } | ExtremalShape::K2UnionComplete { r } if r < 2 => {
                Some("t = 1 needs r >= 2")
            }
            ExtremalShape::FanT { r, t } if t < 2 || t + 1 > r => {
                Some("fan size must satisfy 2 <= t <= r - 1")
            }
            _ => None,
        };
        match reason {
            Some(reason) => Err(ExtremalError::InvalidShape {
                shape: self.to_string(),
                reason,
            }),
            None => Ok(()),
        }
    }
}

/// Builds the representative graph of `shape`. Fans attach to vertices `0..t`.
pub fn build_extremal(shape: ExtremalShape) -> Result<Graph, ExtremalError> {
    shape.validate()?;
    let kr = complete_graph(shape.r() as usize)?;
    let g = match shape {
        ExtremalShape::Complete { .. } => kr,
        ExtremalShape::PendantOne { .. } => attach_fan(&kr, &[0])?,
        ExtremalShape::K2UnionComplete { .. } => disjoint_union(&complete_graph(2)?, &kr)?,
        ExtremalShape::FanT { t, .. } => {
            let targets: Vec<usize> = (0..t as usize).collect();
            attach_fan(&kr, &targets)?
        }
    };
    Ok(g)
}

/// All maximizer shapes for `n` edges, connected ones first.
/// `n = 0` yields `[Complete(1)]`.
pub fn maximizer_catalogue(n: u64) -> Vec<ExtremalShape> {
    let TriangularDecomposition { r, t, .. } = triangular_decompose(n);
    match t {
        0 => vec![ExtremalShape::Complete { r }],
        1 => vec![
            ExtremalShape::PendantOne { r },
            ExtremalShape::K2UnionComplete { r },
        ],
        _ => vec![ExtremalShape::FanT { r, t }],
    }
}
