//! Undirected graphs, digraphs, and the constructions used to grow
//! spectrally symmetric examples (blowups, 1-sums, line graphs).
//!
//! Vertices are always the dense labels `0..n`. Every construction that
//! creates a new vertex set documents where the old vertices end up.

use std::collections::VecDeque;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
}

impl Graph {
    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![false; n * n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adj[u * n + v] {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Self { n, edges: list, adj })
    }

    /// Builds a graph from pairs, silently merging repeats.
    pub(crate) fn from_pairs_dedup(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![false; n * n];
        for (u, v) in pairs {
            debug_assert!(u != v && u < n && v < n);
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Self::from_adjacency(n, adj)
    }

    fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u * n + v] {
                    edges.push((u, v));
                }
            }
        }
        Self { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), adj: vec![false; n * n] }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_pairs_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_pairs_dedup(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_pairs_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.adj[v * self.n + w]).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.degree(v) == 0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.adj[v * self.n + w])
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Self {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                adj[u * n + v] = u != v && !self.adj[u * n + v];
            }
        }
        Self::from_adjacency(n, adj)
    }

    /// Removes the listed edges; pairs that are not edges are ignored.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if u < self.n && v < self.n {
                adj[u * self.n + v] = false;
                adj[v * self.n + u] = false;
            }
        }
        Self::from_adjacency(self.n, adj)
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Self {
        assert!(v < self.n, "vertex {v} out of range");
        let relabel = |w: usize| if w < v { w } else { w - 1 };
        Self::from_pairs_dedup(
            self.n - 1,
            self.edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (relabel(a), relabel(b))),
        )
    }

    /// BFS 2-coloring. Returns the coloring on success, `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        self.bipartition_avoiding(None)
    }

    fn bipartition_avoiding(&self, skip: Option<usize>) -> Option<Vec<u8>> {
        const UNSEEN: u8 = u8::MAX;
        let mut color = vec![UNSEEN; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if Some(s) == skip || color[s] != UNSEEN {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if Some(w) == skip {
                        continue;
                    }
                    if color[w] == UNSEEN {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        if let Some(s) = skip {
            color[s] = 0;
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Vertices lying on every odd cycle, i.e. those whose deletion leaves
    /// a bipartite graph. For a bipartite graph this is every vertex.
    pub fn odd_dominating_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.bipartition_avoiding(Some(v)).is_some()).collect()
    }

    pub fn is_odd_dominating(&self, v: usize) -> bool {
        v < self.n && self.bipartition_avoiding(Some(v)).is_some()
    }

    /// Number of 3-sets inducing `K_3`, by iterating over all triples.
    pub fn triangle_count(&self) -> u64 {
        let n = self.n;
        let mut t = 0;
        for a in 0..n {
            for b in a + 1..n {
                if !self.adj[a * n + b] {
                    continue;
                }
                for c in b + 1..n {
                    if self.adj[a * n + c] && self.adj[b * n + c] {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    /// Line graph. Vertex `k` of the result is `self.edges()[k]`.
    pub fn line_graph(&self) -> Self {
        let m = self.edges.len();
        let mut pairs = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    pairs.push((i, j));
                }
            }
        }
        Self::from_pairs_dedup(m, pairs)
    }

    /// `2m / n^2` as an exact rational.
    pub fn limit_density(&self) -> Ratio<u64> {
        limit_density(self.n, self.edges.len())
    }

    /// Each edge becomes a digon.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        Digraph::from_sorted_unchecked(
            self.n,
            self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect(),
        )
    }
}

/// `2m / n^2`. Zero when `n = 0`.
pub fn limit_density(n: usize, m: usize) -> Ratio<u64> {
    if n == 0 {
        return Ratio::from_integer(0);
    }
    Ratio::new(2 * m as u64, (n * n) as u64)
}

/// Digraph on `0..n` with an arc multiset. Loops are rejected; digons and
/// repeated arcs are allowed, and [`Digraph::is_oriented`] reports whether
/// there are none.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    /// Sorted multiset.
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Self { n, arcs: list })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        Self { n, arcs }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, arcs: Vec::new() }
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Self {
        Self::from_sorted_unchecked(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    /// Transitive tournament: `i -> j` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        Self::from_sorted_unchecked(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Sorted arc multiset.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// `a(u, v)`: multiplicity of the arc `u -> v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let lo = self.arcs.partition_point(|&a| a < (u, v));
        let hi = self.arcs.partition_point(|&a| a <= (u, v));
        hi - lo
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// `n x n` row-major matrix of arc multiplicities.
    pub fn multiplicity_matrix(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.n * self.n];
        for &(u, v) in &self.arcs {
            m[u * self.n + v] += 1;
        }
        m
    }

    /// True iff there are no digons and no repeated arcs.
    pub fn is_oriented(&self) -> bool {
        self.arcs.windows(2).all(|w| w[0] != w[1]) && self.arcs.iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    pub(crate) fn require_oriented(&self) -> Result<(), GraphError> {
        if let Some(w) = self.arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::RepeatedArc(w[0].0, w[0].1));
        }
        if let Some(&(u, v)) = self.arcs.iter().find(|&&(u, v)| u < v && self.has_arc(v, u)) {
            return Err(GraphError::Digon(u, v));
        }
        Ok(())
    }

    /// Tournament: oriented, and every pair joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.is_oriented() && self.arcs.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, _) in &self.arcs {
            d[u] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(_, v) in &self.arcs {
            d[v] += 1;
        }
        d
    }

    /// Digons collapse to a single edge.
    pub fn underlying_graph(&self) -> Graph {
        Graph::from_pairs_dedup(self.n, self.arcs.iter().copied())
    }

    /// Every arc reversed.
    pub fn reverse(&self) -> Self {
        Self::from_sorted_unchecked(self.n, self.arcs.iter().map(|&(u, v)| (v, u)).collect())
    }

    /// Deletes vertex `v` and its arcs; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Self {
        assert!(v < self.n, "vertex {v} out of range");
        let relabel = |w: usize| if w < v { w } else { w - 1 };
        Self::from_sorted_unchecked(
            self.n - 1,
            self.arcs
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (relabel(a), relabel(b)))
                .collect(),
        )
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        Self::from_sorted_unchecked(self.n, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect())
    }

    /// Classifies every triple inducing `K_3` in the underlying graph.
    pub fn triangle_census(&self) -> Result<TriangleCensus, GraphError> {
        self.require_oriented()?;
        let n = self.n;
        let mut dir = vec![0i8; n * n];
        for &(u, v) in &self.arcs {
            dir[u * n + v] = 1;
            dir[v * n + u] = -1;
        }
        let mut census = TriangleCensus::default();
        for a in 0..n {
            for b in a + 1..n {
                let ab = dir[a * n + b];
                if ab == 0 {
                    continue;
                }
                for c in b + 1..n {
                    let bc = dir[b * n + c];
                    let ca = dir[c * n + a];
                    if bc == 0 || ca == 0 {
                        continue;
                    }
                    census.t += 1;
                    // a->b->c->a (or its reverse) is a directed 3-cycle
                    if ab == bc && bc == ca {
                        census.t1 += 1;
                    } else {
                        census.t0 += 1;
                    }
                }
            }
        }
        Ok(census)
    }

    /// Replaces vertex `v` by the independent block `v*l .. v*l + l` and each
    /// arc `u -> v` by all `l^2` arcs from block `u` to block `v`.
    pub fn blowup(&self, l: usize) -> Result<Self, GraphError> {
        if l == 0 {
            return Err(GraphError::ZeroBlowup);
        }
        let mut arcs = Vec::with_capacity(self.arcs.len() * l * l);
        for &(u, v) in &self.arcs {
            for i in 0..l {
                for j in 0..l {
                    arcs.push((u * l + i, v * l + j));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(self.n * l, arcs))
    }

    /// 1-sum: disjoint union of `self` and `other` with `other`'s vertex `u`
    /// identified with `self`'s vertex `v`.
    ///
    /// `self` keeps its labels. A vertex `w != u` of `other` becomes
    /// `n1 + w` if `w < u` and `n1 + w - 1` if `w > u`; `u` becomes `v`.
    /// Returns the merged digraph together with `v`.
    pub fn one_sum(&self, v: usize, other: &Digraph, u: usize) -> Result<(Self, usize), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u >= other.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: other.n });
        }
        let map = one_sum_map(self.n, v, u, other.n);
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(a, b)| (map[a], map[b])));
        Ok((Self::from_sorted_unchecked(self.n + other.n - 1, arcs), v))
    }

    pub fn limit_density(&self) -> Ratio<u64> {
        limit_density(self.n, self.arcs.len())
    }
}

/// Image of each vertex of the second summand under [`Digraph::one_sum`].
fn one_sum_map(n1: usize, v: usize, u: usize, n2: usize) -> Vec<usize> {
    (0..n2)
        .map(|w| match w.cmp(&u) {
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Equal => v,
            std::cmp::Ordering::Greater => n1 + w - 1,
        })
        .collect()
}

/// Transitive (`t0`) and directed (`t1`) triangle counts of an oriented graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCensus {
    pub t0: u64,
    pub t1: u64,
    pub t: u64,
}

/// Iterated 1-sums that remember which piece each vertex came from, so
/// that gluing can be restricted to locally odd-dominating vertices.
#[derive(Clone, Debug)]
pub struct GluedChain {
    digraph: Digraph,
    /// For each piece, the combined-graph ids of its vertices.
    pieces: Vec<Vec<usize>>,
    /// For each piece, its odd-dominating vertices (combined-graph ids).
    odd_dominating: Vec<Vec<usize>>,
}

impl GluedChain {
    pub fn new(first: Digraph) -> Self {
        let odd = first.underlying_graph().odd_dominating_vertices();
        let ids = (0..first.n()).collect();
        Self { digraph: first, pieces: vec![ids], odd_dominating: vec![odd] }
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Combined-graph ids of piece `i`.
    pub fn piece_vertices(&self, i: usize) -> &[usize] {
        &self.pieces[i]
    }

    /// Odd-dominating in at least one of the pieces it belongs to.
    pub fn is_locally_odd_dominating(&self, v: usize) -> bool {
        self.odd_dominating.iter().any(|odd| odd.contains(&v))
    }

    pub fn locally_odd_dominating(&self) -> Vec<usize> {
        (0..self.digraph.n()).filter(|&v| self.is_locally_odd_dominating(v)).collect()
    }

    /// Glues `piece` at its vertex `u` onto vertex `at` of the chain. When
    /// `require_odd_dominating` is set, both gluing vertices must be
    /// (locally) odd-dominating. Returns the merged vertex id.
    pub fn glue(
        &mut self,
        at: usize,
        piece: &Digraph,
        u: usize,
        require_odd_dominating: bool,
    ) -> Result<usize, GraphError> {
        if require_odd_dominating {
            if at >= self.digraph.n() || !self.is_locally_odd_dominating(at) {
                return Err(GraphError::NotOddDominating(at));
            }
            if !piece.underlying_graph().is_odd_dominating(u) {
                return Err(GraphError::NotOddDominating(u));
            }
        }
        let n1 = self.digraph.n();
        let (merged, v) = self.digraph.one_sum(at, piece, u)?;
        let map = one_sum_map(n1, at, u, piece.n());
        let odd = piece.underlying_graph().odd_dominating_vertices();
        self.pieces.push(map.clone());
        self.odd_dominating.push(odd.into_iter().map(|w| map[w]).collect());
        self.digraph = merged;
        Ok(v)
    }
}

/// `K_5 - E(K_3)`: the missing triangle is on `{0, 1, 2}`; `3` and `4` are
/// adjacent to everything.
pub fn k5_minus_triangle() -> Graph {
    Graph::complete(5).without_edges(&[(0, 1), (0, 2), (1, 2)])
}

/// `K_6 - E(2K_2)`: the removed matching is `{0,1}, {2,3}`.
pub fn k6_minus_matching() -> Graph {
    Graph::complete(6).without_edges(&[(0, 1), (2, 3)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn underlying_graph_collapses_digons() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(d.underlying_graph().edges(), &[(0, 1)]);
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(digon.underlying_graph().edges(), &[(0, 1)]);
        assert!(!digon.is_oriented());
        assert_eq!(Digraph::directed_cycle(3).underlying_graph(), Graph::complete(3));
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { .. })));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Digraph::new(3, [(2, 2)]), Err(GraphError::Loop(2)));
        // repeated arcs are allowed but not oriented
        let multi = Digraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(multi.multiplicity(0, 1), 2);
        assert!(!multi.is_oriented());
    }

    #[test]
    fn bipartite_checks() {
        let k33 = Graph::complete_bipartite(3, 3);
        let coloring = k33.bipartition().unwrap();
        for &(u, v) in k33.edges() {
            assert_ne!(coloring[u], coloring[v]);
        }
        assert!(!Graph::complete(3).is_bipartite());
        assert!(!k5_minus_triangle().is_bipartite());
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(7).is_bipartite());
    }

    #[test]
    fn triangle_census_examples() {
        let c = Digraph::directed_cycle(3).triangle_census().unwrap();
        assert_eq!(c, TriangleCensus { t0: 0, t1: 1, t: 1 });
        let t = Digraph::transitive_tournament(3).triangle_census().unwrap();
        assert_eq!(t, TriangleCensus { t0: 1, t1: 0, t: 1 });
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(digon.triangle_census(), Err(GraphError::Digon(0, 1)));
        let g = k5_minus_triangle();
        assert_eq!(g.triangle_count(), 3);
        let d = Digraph::new(5, g.edges().iter().copied()).unwrap();
        assert_eq!(d.triangle_census().unwrap().t, 3);
    }

    #[test]
    fn line_graph_small_cases() {
        assert_eq!(Graph::complete(3).line_graph(), Graph::complete(3));
        assert_eq!(Graph::complete_bipartite(1, 3).line_graph(), Graph::complete(3));
    }

    #[test]
    fn line_graph_of_k19() {
        let g = Graph::complete(19);
        let l = g.line_graph();
        let degs = g.degrees();
        let edges_formula: u64 = degs.iter().map(|&d| binom(d as u64, 2)).sum();
        let tri_formula = g.triangle_count() + degs.iter().map(|&d| binom(d as u64, 3)).sum::<u64>();
        assert_eq!(l.edge_count() as u64, edges_formula);
        assert_eq!(l.edge_count(), 2907);
        assert_eq!(l.triangle_count(), tri_formula);
        assert_eq!(l.triangle_count(), 16473);
    }

    #[test]
    fn blowup_counts_and_density() {
        let d = Digraph::new(5, k5_minus_triangle().edges().iter().copied()).unwrap();
        assert_eq!(d.blowup(1).unwrap(), d);
        let b = d.blowup(2).unwrap();
        assert_eq!((b.n(), b.arc_count()), (10, 28));
        assert_eq!(d.limit_density(), Ratio::new(14, 25));
        assert_eq!(b.limit_density(), Ratio::new(14, 25));
        assert!(b.is_oriented());
        assert_eq!(d.blowup(0), Err(GraphError::ZeroBlowup));
        // arc (0,3) maps into block 0 -> block 3
        assert!(b.has_arc(1, 7));
    }

    #[test]
    fn one_sum_relabeling() {
        let a = Digraph::new(2, [(0, 1)]).unwrap();
        let b = Digraph::new(2, [(0, 1)]).unwrap();
        // glue head of a to tail of b: directed path 0 -> 1 -> 2
        let (p, v) = a.one_sum(1, &b, 0).unwrap();
        assert_eq!(v, 1);
        assert_eq!(p.arcs(), &[(0, 1), (1, 2)]);

        let k = Digraph::new(5, k5_minus_triangle().edges().iter().copied()).unwrap();
        let (s, _) = k.one_sum(3, &k, 4).unwrap();
        assert_eq!((s.n(), s.arc_count()), (9, 14));
        assert!(s.is_oriented());
    }

    #[test]
    fn odd_dominating_examples() {
        assert_eq!(k5_minus_triangle().odd_dominating_vertices(), vec![3, 4]);
        assert_eq!(Graph::complete(3).odd_dominating_vertices(), vec![0, 1, 2]);
        assert_eq!(Graph::complete_bipartite(2, 3).odd_dominating_vertices(), vec![0, 1, 2, 3, 4]);
        assert!(Graph::complete(4).odd_dominating_vertices().is_empty());
    }

    #[test]
    fn limit_density_examples() {
        assert_eq!(Graph::complete_bipartite(4, 4).limit_density(), Ratio::new(1, 2));
        let g = k6_minus_matching();
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.limit_density(), Ratio::new(13, 18));
        assert_eq!(Graph::empty(1).limit_density(), Ratio::from_integer(0));
    }

    #[test]
    fn glued_chain_tracks_pieces() {
        let k = Digraph::new(5, k5_minus_triangle().edges().iter().copied()).unwrap();
        let mut chain = GluedChain::new(k.clone());
        assert_eq!(chain.glue(0, &k, 3, true), Err(GraphError::NotOddDominating(0)));
        assert_eq!(chain.glue(4, &k, 1, true), Err(GraphError::NotOddDominating(1)));
        let v = chain.glue(4, &k, 3, true).unwrap();
        assert_eq!(v, 4);
        assert_eq!(chain.digraph().n(), 9);
        // second piece's vertex 4 became 5 + 4 - 1 = 8
        assert_eq!(chain.locally_odd_dominating(), vec![3, 4, 8]);
        assert_eq!(chain.piece_vertices(1), &[5, 6, 7, 4, 8]);
    }
}
