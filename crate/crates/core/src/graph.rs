//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one bit per unordered pair `{i, j}` (`i < j`) in
//! column order `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`, the same
//! order graph6 uses. A per-vertex neighbor mask is kept alongside so that
//! triangle counting is a popcount per edge.

use std::fmt;

use thiserror::Error;

/// Largest vertex count a [`Graph`] may have (single-byte graph6 size field).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("cannot contract vertex {0} with itself")]
    ContractSameVertex(usize),
    #[error("permutation is not a bijection on {0} vertices")]
    BadPermutation(usize),
}

/// Position of the pair `{i, j}` in graph6 column order. Requires `i < j`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(index: usize) -> (usize, usize) {
    let mut j = (8 * index as u64 + 1).isqrt().div_ceil(2) as usize;
    while j * (j - 1) / 2 > index {
        j -= 1;
    }
    while (j + 1) * j / 2 <= index {
        j += 1;
    }
    (index - j * (j - 1) / 2, j)
}

/// Number of unordered pairs on `n` vertices.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    bits: Vec<u64>,
    rows: Vec<u64>,
}

/// Vertices `x, y, z` with edges `xy`, `yz` and no edge `xz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OpenTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Graph {
    /// The edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        Ok(Self {
            vertex_count,
            bits: vec![0; pair_count(vertex_count).div_ceil(64)],
            rows: vec![0; vertex_count],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(vertex_count)?;
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.set_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks. The masks must be
    /// symmetric and loop-free; only bits `j > i` of row `i` are read.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let mut g = Self::empty(rows.len())?;
        let in_range = (1u64 << rows.len()) - 1;
        for (i, &row) in rows.iter().enumerate() {
            let mut upper = row & in_range & !((1u64 << (i + 1)) - 1);
            while upper != 0 {
                let j = upper.trailing_zeros() as usize;
                upper &= upper - 1;
                g.set_edge(i, j);
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    // Construction-time only; a finished Graph is never mutated.
    pub(crate) fn set_edge(&mut self, a: usize, b: usize) {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        let p = pair_index(i, j);
        self.bits[p / 64] |= 1 << (p % 64);
        self.rows[i] |= 1 << j;
        self.rows[j] |= 1 << i;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Packed pair bits in graph6 column order, least significant bit first.
    pub fn pair_bits(&self) -> &[u64] {
        &self.bits
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a < self.vertex_count && b < self.vertex_count && self.rows[a] >> b & 1 == 1
    }

    /// Neighbor set of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Edges `(i, j)` with `i < j`, in graph6 column order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.vertex_count).flat_map(move |j| {
            let mut below = self.rows[j] & ((1u64 << j) - 1);
            std::iter::from_fn(move || {
                if below == 0 {
                    return None;
                }
                let i = below.trailing_zeros() as usize;
                below &= below - 1;
                Some((i, j))
            })
        })
    }

    /// Number of triangles: every edge `{i, j}` sees `|N(i) ∩ N(j)|`
    /// triangles, and each triangle is seen from its three edges.
    pub fn triangle_count(&self) -> u64 {
        let per_edge: u64 = self
            .edges()
            .map(|(i, j)| (self.rows[i] & self.rows[j]).count_ones() as u64)
            .sum();
        per_edge / 3
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.vertex_count)
    }

    /// Number of connected components. The graph on zero vertices has none.
    pub fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let mut count = 0;
        for start in 0..self.vertex_count {
            if seen >> start & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u64 << start;
            seen |= frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.rows[v] & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
        }
        count
    }

    /// True when there is at most one component (the null graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Component label for every vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for start in 0..self.vertex_count {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(v) = stack.pop() {
                let mut nb = self.rows[v];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Removes every degree-0 vertex, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count)
            .filter(|&v| self.rows[v] != 0)
            .collect();
        self.induced(&keep)
    }

    /// Subgraph induced on `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len()).expect("subgraph is no larger than its parent");
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count;
        let mut hit = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::BadPermutation(n));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(GraphError::BadPermutation(n));
            }
        }
        let mut g = Graph::empty(n)?;
        for (i, j) in self.edges() {
            g.set_edge(perm[i], perm[j]);
        }
        Ok(g)
    }

    /// First open triple in the order: centre `y` ascending, then `x`, then `z`.
    pub fn find_open_triple(&self) -> Option<OpenTriple> {
        for y in 0..self.vertex_count {
            let nb = self.rows[y];
            let mut xs = nb;
            while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                let open = nb & !self.rows[x] & !(1u64 << x);
                if open != 0 {
                    let z = open.trailing_zeros() as usize;
                    return Some(OpenTriple { x, y, z });
                }
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `K_r`. `r = 0` gives the graph on zero vertices.
pub fn complete_graph(r: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(r)?;
    for j in 1..r {
        for i in 0..j {
            g.set_edge(i, j);
        }
    }
    Ok(g)
}

/// `g ∪ h`; the vertices of `h` are shifted by `g.vertex_count()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let offset = g.vertex_count;
    let mut out = Graph::empty(offset + h.vertex_count)?;
    for (i, j) in g.edges() {
        out.set_edge(i, j);
    }
    for (i, j) in h.edges() {
        out.set_edge(i + offset, j + offset);
    }
    Ok(out)
}

/// Adds one new vertex (index `g.vertex_count()`) adjacent to exactly `targets`.
pub fn attach_fan(g: &Graph, targets: &[usize]) -> Result<Graph, GraphError> {
    let v = g.vertex_count;
    let mut out = Graph::empty(v + 1)?;
    let mut used = 0u64;
    for &t in targets {
        g.check_vertex(t)?;
        if used >> t & 1 == 1 {
            return Err(GraphError::DuplicateVertex(t));
        }
        used |= 1 << t;
    }
    for (i, j) in g.edges() {
        out.set_edge(i, j);
    }
    for &t in targets {
        out.set_edge(t, v);
    }
    Ok(out)
}

/// Index that vertex `w` of the original graph receives after
/// `contract_pair(_, u, v)`. Both `u` and `v` map to the merged vertex.
pub fn contracted_index(w: usize, u: usize, v: usize) -> usize {
    let (keep, drop) = if u < v { (u, v) } else { (v, u) };
    if w == drop {
        keep
    } else if w > drop {
        w - 1
    } else {
        w
    }
}

/// Identifies `u` and `v`. The merged vertex sits at `min(u, v)`, the slot of
/// `max(u, v)` is removed and later vertices shift down by one. An edge `uv`
/// disappears and parallel edges collapse.
pub fn contract_pair(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::ContractSameVertex(u));
    }
    let mut out = Graph::empty(g.vertex_count - 1)?;
    for (i, j) in g.edges() {
        let (a, b) = (contracted_index(i, u, v), contracted_index(j, u, v));
        if a != b {
            out.set_edge(a, b);
        }
    }
    Ok(out)
}
