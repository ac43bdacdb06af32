//! Immutable simple undirected graphs and the combinators used to assemble
//! extremal colorings.
//!
//! Adjacency is one [`VertexSet`] row per vertex. Every combinator returns a
//! fresh graph; vertex numbering of composite graphs is fixed (left operand
//! first, row-major pairs for blow-ups) so that serialized output is stable.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges())
    }
}

impl Graph {
    pub(crate) fn blank(order: usize) -> Self {
        Graph {
            order,
            adj: vec![VertexSet::new(order); order],
        }
    }

    /// Only for use while a graph is still being assembled inside this crate.
    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Self::blank(order)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::blank(order);
        for u in 0..order {
            g.adj[u] = VertexSet::full(order);
            g.adj[u].remove(u);
        }
        g
    }

    /// `C_n` on vertices `0..n` in cyclic order.
    ///
    /// # Panics
    /// If `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(n);
        g.link(n - 1, 0);
        g
    }

    /// `P_n`, the path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Self::blank(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// `nK_2`: vertices `2i` and `2i+1` are matched.
    pub fn matching(n: usize) -> Self {
        let mut g = Self::blank(2 * n);
        for i in 0..n {
            g.link(2 * i, 2 * i + 1);
        }
        g
    }

    /// `K_{1,k}` with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        let mut g = Self::blank(k + 1);
        for v in 1..=k {
            g.link(0, v);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Repeated edges are merged.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::blank(order);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&d0) => d.iter().all(|&x| x == d0).then_some(d0),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.order);
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(self.order);
            comp.insert(s);
            seen.insert(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `(u, v)` adjacent iff `u != v` and not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut g = Self::complete(self.order);
        for (gv, sv) in g.adj.iter_mut().zip(&self.adj) {
            gv.difference_with(sv);
        }
        g
    }

    /// `self ∪ other`; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut g = Self::blank(self.order + other.order);
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(u + shift, v + shift);
        }
        g
    }

    /// Every vertex of `self` joined to every vertex of `other`, on top of
    /// `self ∪ other`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.order {
            for v in 0..other.order {
                g.link(u, self.order + v);
            }
        }
        g
    }

    /// `K_1 + G`: the new vertex is appended as the last vertex.
    pub fn cone(&self) -> Graph {
        self.join(&Graph::complete(1))
    }

    /// Lexicographic product `G[H]`: vertex `(u, i)` gets index `u * |H| + i`;
    /// `(u,i) ~ (v,j)` iff `u ~ v` in `G`, or `u = v` and `i ~ j` in `H`.
    pub fn blow_up(&self, factor: &Graph) -> Graph {
        let k = factor.order;
        let mut g = Self::blank(self.order * k);
        for u in 0..self.order {
            for (i, j) in factor.edges() {
                g.link(u * k + i, u * k + j);
            }
        }
        for (u, v) in self.edges() {
            for i in 0..k {
                for j in 0..k {
                    g.link(u * k + i, v * k + j);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, renumbered densely in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
            pos[v] = i;
        }
        let mut g = Self::blank(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = pos[w];
                if j != usize::MAX && j > i {
                    g.link(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on a vertex set, numbered in increasing vertex order.
    /// Returns the graph together with the original label of each new vertex.
    pub fn induced_set(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = set.iter().filter(|&v| v < self.order).collect();
        let g = self
            .induced(&labels)
            .expect("labels drawn from the vertex range");
        (g, labels)
    }

    /// Adds the given edges, returning a new graph. Used for property tests
    /// and local search; duplicates are ignored.
    pub fn with_edges<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.order, self.edges().into_iter().chain(edges))
    }

    /// Same graph with the pair `(u, v)` toggled.
    pub fn with_flipped(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.adj[u].contains(v) {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
        } else {
            g.link(u, v);
        }
        g
    }

    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        } else {
            self.link(u, v);
        }
    }
}
