//! Graphs, digraphs, per-vertex labels and vertex partitions.
//!
//! Vertices are dense integers `0..n`. Adjacency is a [`BitMatrix`] so that
//! neighborhood queries and parity counts are single word scans.

use crate::gf2::{BitMatrix, BitVector};

/// A simple undirected graph: symmetric adjacency, zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: BitMatrix::zeros(n, n),
        }
    }

    /// # Panics
    ///
    /// Panics on an out-of-range endpoint or a self-loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// Adds the edge `{u, v}`. Adding an existing edge is a no-op.
    ///
    /// # Panics
    ///
    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at vertex {u}");
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Neighborhood of `v` as a bit mask over all vertices.
    pub fn neighbors(&self, v: usize) -> &BitVector {
        self.adj.row(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row(v).count_ones()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.neighbors(u).ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Bit `v` is the degree of `v` modulo 2.
    pub fn degree_parity_vector(&self) -> BitVector {
        let mut p = BitVector::zeros(self.n());
        for v in 0..self.n() {
            p.set(v, self.adj.row(v).parity());
        }
        p
    }

    /// Vertices with no neighbors, ascending.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj.row(v).is_zero()).collect()
    }

    /// The subgraph induced on `vertices` (duplicates ignored), along with
    /// the index map: entry `i` of the map is the original id of the new
    /// vertex `i`.
    ///
    /// # Panics
    ///
    /// Panics if any vertex is out of range.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.last() {
            assert!(v < self.n(), "vertex {v} out of range ({} vertices)", self.n());
        }
        let mut sub = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(i, j);
                }
            }
        }
        (sub, map)
    }

    /// Replaces every edge by a pair of opposite arcs.
    pub fn to_digraph(&self) -> Digraph {
        Digraph {
            adj: self.adj.clone(),
        }
    }
}

/// A loopless directed graph; `adjacency[u][v] = 1` iff there is an arc
/// `u -> v`. Opposite arcs may coexist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    adj: BitMatrix,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: BitMatrix::zeros(n, n),
        }
    }

    /// # Panics
    ///
    /// Panics on an out-of-range endpoint or a self-loop.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut d = Self::empty(n);
        for &(u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// Adds the arc `u -> v`. Adding an existing arc is a no-op.
    ///
    /// # Panics
    ///
    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at vertex {u}");
        self.adj.set(u, v, true);
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Out-neighborhood of `v` as a bit mask.
    pub fn out_neighbors(&self, v: usize) -> &BitVector {
        self.adj.row(v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj.row(v).count_ones()
    }

    pub fn arc_count(&self) -> usize {
        (0..self.n()).map(|v| self.out_degree(v)).sum()
    }

    /// Arcs as `(tail, head)` pairs, ascending.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n() {
            for v in self.out_neighbors(u).ones() {
                out.push((u, v));
            }
        }
        out
    }

    /// Bit `v` is the out-degree of `v` modulo 2.
    pub fn out_parity_vector(&self) -> BitVector {
        let mut p = BitVector::zeros(self.n());
        for v in 0..self.n() {
            p.set(v, self.adj.row(v).parity());
        }
        p
    }
}

/// A target parity for every vertex: bit `v` is the required degree parity
/// of `v` in the subgraph to be built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelFn {
    labels: BitVector,
}

impl LabelFn {
    pub fn new(labels: BitVector) -> Self {
        Self { labels }
    }

    pub fn all_zero(n: usize) -> Self {
        Self {
            labels: BitVector::zeros(n),
        }
    }

    pub fn all_one(n: usize) -> Self {
        Self {
            labels: BitVector::from_indices(n, &(0..n).collect::<Vec<_>>()),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The label of vertex `v`.
    pub fn get(&self, v: usize) -> bool {
        self.labels.get(v)
    }

    pub fn bits(&self) -> &BitVector {
        &self.labels
    }

    /// Vertices carrying the given label, ascending.
    pub fn vertices_labeled(&self, label: bool) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.get(v) == label).collect()
    }
}

/// An ordered 2-partition of the vertex set: bit `v` of `side` is 1 iff
/// `v` belongs to the second part `V1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    side: BitVector,
}

impl Partition {
    pub fn from_side(side: BitVector) -> Self {
        Self { side }
    }

    pub fn side(&self) -> &BitVector {
        &self.side
    }

    pub fn n(&self) -> usize {
        self.side.len()
    }

    /// True iff `v` lies in `V1`.
    pub fn side_of(&self, v: usize) -> bool {
        self.side.get(v)
    }

    /// Vertices of `V0` (side bit 0), ascending.
    pub fn part0(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.side.get(v)).collect()
    }

    /// Vertices of `V1` (side bit 1), ascending.
    pub fn part1(&self) -> Vec<usize> {
        self.side.ones().collect()
    }
}
