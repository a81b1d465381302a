//! Canonical forms for small graphs.
//!
//! Isolated vertices are dropped first. The remaining vertices are split into
//! cells by iterated degree refinement (colour = rank of the pair "own colour,
//! sorted neighbour colours"), cells are laid out in colour order, and the
//! lexicographically smallest graph6 bit string over all cell-respecting
//! orderings is kept. The search grows the ordering one position at a time;
//! each new position fixes one more column of the bit string, so a branch is
//! cut as soon as its prefix exceeds the best one found. Interchangeable
//! twins (`N(u) \ {v} = N(v) \ {u}`) are tried only once per position.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6;

/// Largest vertex count (after removing isolated vertices) accepted.
pub const MAX_CANON_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical form needs at most {MAX_CANON_VERTICES} non-isolated vertices, graph has {0}")]
pub struct CanonError(pub usize);

/// Relabeling-invariant representative: equal forms exactly when the
/// graphs are isomorphic after stripping isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    /// graph6 line of the canonically relabeled graph.
    pub graph6: String,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        graph6::decode(&self.graph6).expect("canonical forms hold valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let g = g.strip_isolated();
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError(n));
    }
    let order = canonical_order(&g);
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let relabeled = g.permute(&perm).expect("search yields a permutation");
    Ok(CanonicalForm {
        vertex_count: n,
        graph6: graph6::encode(&relabeled),
    })
}

/// Degree-seeded colour refinement until the number of colours is stable.
pub(crate) fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| g.has_edge(v, w))
                    .map(|w| colour[w])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let stable = distinct.len() == classes;
        classes = distinct.len();
        colour = next;
        if stable {
            return colour;
        }
    }
}

fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let colour = refine_colours(g);
    let mut slot_colour: Vec<usize> = colour.clone();
    slot_colour.sort_unstable();

    let mut search = Search {
        g,
        colour: &colour,
        slot_colour: &slot_colour,
        order: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.descend();
    search.best.expect("at least one ordering exists").0
}

struct Search<'a> {
    g: &'a Graph,
    colour: &'a [usize],
    slot_colour: &'a [usize],
    order: Vec<usize>,
    columns: Vec<u64>,
    used: u64,
    best: Option<(Vec<usize>, Vec<u64>)>,
}

impl Search<'_> {
    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u64 << u) | (1u64 << v));
        self.g.neighbors(u) & mask == self.g.neighbors(v) & mask
    }

    /// Column for placing `v` next: bit `63 - i` is the adjacency to the
    /// vertex at position `i`, so integer order matches bit-string order.
    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .enumerate()
            .filter(|&(_, &u)| self.g.has_edge(u, v))
            .fold(0, |acc, (i, _)| acc | 1u64 << (63 - i))
    }

    /// Order of the current prefix extended by `col` against the best
    /// string's prefix of the same length.
    fn compare_prefix(&self, col: u64) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some((_, best)) => {
                let pos = self.columns.len();
                self.columns
                    .iter()
                    .chain(std::iter::once(&col))
                    .cmp(best[..=pos].iter())
            }
        }
    }

    fn descend(&mut self) {
        let pos = self.order.len();
        if pos == self.g.vertex_count() {
            let better = match &self.best {
                None => true,
                Some((_, best)) => self.columns < *best,
            };
            if better {
                self.best = Some((self.order.clone(), self.columns.clone()));
            }
            return;
        }
        let want = self.slot_colour[pos];
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.g.vertex_count() {
            if self.used >> v & 1 == 1 || self.colour[v] != want {
                continue;
            }
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let col = self.column(v);
            if self.compare_prefix(col) == Ordering::Greater {
                continue;
            }
            self.order.push(v);
            self.columns.push(col);
            self.used |= 1 << v;
            self.descend();
            self.used &= !(1 << v);
            self.columns.pop();
            self.order.pop();
        }
    }
}
