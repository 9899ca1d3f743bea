//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor bitset per vertex, so every
//! set operation the solvers need (intersection, difference, popcount) is a
//! single machine word. Graphs are immutable after construction and cheap to
//! clone, which makes them safe to share across worker threads.

use std::fmt;

/// Hard cap on the vertex count: one machine word per neighbor set.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices backed by a single `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

/// An immutable simple undirected graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Panics if `n` is out of `1..=64`, an endpoint is out of range, or an
    /// edge is a self-loop. Parallel edges collapse silently.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "vertex count {n} out of 1..=64"
        );
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            assert!(u != v, "self-loop at vertex {u}");
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let g = Graph { n, adj };
        g.assert_invariants();
        g
    }

    /// Symmetry, irreflexivity, and bit-range checks; cheap at this scale,
    /// so it runs on every construction path.
    fn assert_invariants(&self) {
        let full = VertexSet::full(self.n).bits();
        for v in 0..self.n {
            assert_eq!(self.adj[v] & !full, 0, "neighbor bits above n at {v}");
            assert_eq!(self.adj[v] >> v & 1, 0, "self-loop at {v}");
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                assert_eq!(
                    self.adj[u] >> v & 1,
                    self.adj[v] >> u & 1,
                    "asymmetric adjacency at ({u},{v})"
                );
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !VertexSet::full(u + 1).bits()).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&a| a == 0)
    }

    /// No edge inside `s`.
    pub fn set_is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Every pair inside `s` adjacent.
    pub fn set_is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| s.without(v).is_subset_of(VertexSet(self.adj[v])))
    }

    /// Vertices reachable from `start` while staying inside `allowed`
    /// (`start` must itself be in `allowed`).
    pub fn reachable(&self, start: usize, allowed: VertexSet) -> VertexSet {
        debug_assert!(allowed.contains(start));
        let allowed = allowed.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.reachable(0, self.vertices()).len() == self.n
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.smallest() {
            let comp = self.reachable(v, remaining);
            out.push(comp);
            remaining = remaining.minus(comp);
        }
        out
    }

    /// Number of components of the graph obtained by deleting `removed`.
    /// Returns 0 when every vertex is deleted.
    pub fn component_count_excluding(&self, removed: VertexSet) -> usize {
        let mut remaining = self.vertices().minus(removed);
        let mut count = 0;
        while let Some(v) = remaining.smallest() {
            remaining = remaining.minus(self.reachable(v, remaining));
            count += 1;
        }
        count
    }

    /// Induced subgraph on `s`, plus the original label of each new vertex
    /// (new vertex `i` was `labels[i]`, ascending).
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let labels = s.to_vec();
        assert!(!labels.is_empty(), "induced subgraph must be nonempty");
        let mut edges = Vec::new();
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        (Graph::from_edges(labels.len(), &edges), labels)
    }

    /// Copy with vertex `old` renamed to `perm[old]`; `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        let g = Graph { n: self.n, adj };
        g.assert_invariants();
        g
    }

    /// New graph with one extra vertex whose neighborhood is `mask`
    /// (bits over the existing vertices).
    pub fn with_added_vertex(&self, mask: u64) -> Graph {
        assert!(self.n < MAX_VERTICES);
        assert_eq!(
            mask & !self.vertices().bits(),
            0,
            "neighbor bits out of range"
        );
        let k = self.n;
        let mut adj = self.adj.clone();
        adj.push(mask);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            adj[v] |= 1 << k;
        }
        Graph { n: k + 1, adj }
    }

    // ---- named constructions ----

    pub fn complete(n: usize) -> Graph {
        assert!(n >= 1);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[])
    }

    pub fn path(n: usize) -> Graph {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle graph needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph; part A is `0..a`, part B is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        assert!(a >= 1 && b >= 1);
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..(a + b) {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// Star with `leaves` leaves: center is vertex 0.
    pub fn star(leaves: usize) -> Graph {
        assert!(leaves >= 1);
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    /// The claw with one extra edge between two leaves (center 0, leaves
    /// 1..=3, extra edge 1-2).
    pub fn claw_plus_e() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)])
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9,
    /// spokes i -- i+5.
    pub fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
    }

    /// Gallery graph H1: a 6-cycle on rim vertices 0..5 (named r1..r6 below),
    /// an apex 6 joined to the antipodal rim pair {0, 3}, and the rim chord
    /// 1-5. Rim vertex r(i) is index i-1; the apex is index 6.
    pub fn h1() -> Graph {
        Graph::from_edges(
            7,
            &[
                (0, 1), // r1-r2
                (1, 2), // r2-r3
                (2, 3), // r3-r4
                (3, 4), // r4-r5
                (4, 5), // r5-r6
                (5, 0), // r6-r1
                (6, 0), // apex-r1
                (6, 3), // apex-r4
                (1, 5), // r2-r6 chord
            ],
        )
    }

    /// Disjoint union; the second graph's vertices are relabeled to follow
    /// the first's.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
        assert!(
            g.n + h.n <= MAX_VERTICES,
            "combined size {} exceeds {MAX_VERTICES}",
            g.n + h.n
        );
        let mut edges = g.edges();
        for (u, v) in h.edges() {
            edges.push((u + g.n, v + g.n));
        }
        Graph::from_edges(g.n + h.n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// All `k`-element subsets of `0..n` as bitmasks, ascending (Gosper's hack).
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= MAX_VERTICES);
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut cur: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if k == 0 {
            done = true;
            return Some(0);
        }
        // next subset in Gosper order
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        if r > full || r == 0 {
            done = true;
        } else {
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur > full {
                done = true;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.to_string(), "{0,3,5}");
        assert_eq!(s.minus(VertexSet::singleton(3)).len(), 2);
        assert!(VertexSet::EMPTY.is_empty());
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn named_graphs_have_expected_shape() {
        let p = Graph::petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.degree_sequence().iter().all(|&d| d == 3));
        // girth 5: no triangles, no 4-cycles (neighborhoods of adjacent
        // vertices are disjoint; non-adjacent pairs share exactly one).
        for u in 0..10 {
            for v in (u + 1)..10 {
                let common = p.neighbors(u).intersect(p.neighbors(v)).len();
                if p.has_edge(u, v) {
                    assert_eq!(common, 0);
                } else {
                    assert_eq!(common, 1);
                }
            }
        }

        let h = Graph::h1();
        assert_eq!(h.n(), 7);
        assert_eq!(h.edge_count(), 9);
        assert_eq!(h.degree_sequence(), vec![3, 3, 2, 3, 2, 3, 2]);

        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(Graph::star(3).degree_sequence(), vec![3, 1, 1, 1]);
        assert_eq!(Graph::claw_plus_e().edge_count(), 4);
    }

    #[test]
    fn disjoint_union_relabels_second_operand() {
        let g = Graph::disjoint_union(&Graph::empty(1), &Graph::path(2));
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.components().len(), 2);
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn components_partition_the_vertices() {
        let g = Graph::disjoint_union(&Graph::path(2), &Graph::path(3));
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].len(), 2);
        assert_eq!(comps[1].len(), 3);
        // disjoint cover, no cross edges
        let mut seen = VertexSet::EMPTY;
        for &c in &comps {
            assert!(seen.intersect(c).is_empty());
            seen = seen.union(c);
            for v in c.iter() {
                assert!(g.neighbors(v).is_subset_of(c));
            }
        }
        assert_eq!(seen, g.vertices());

        assert_eq!(Graph::empty(3).components().len(), 3);
        assert_eq!(Graph::petersen().components().len(), 1);
    }

    #[test]
    fn component_count_with_deletions() {
        let g = Graph::complete_bipartite(2, 3);
        assert_eq!(g.component_count_excluding(VertexSet::EMPTY), 1);
        let two_side: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(g.component_count_excluding(two_side), 3);
        assert_eq!(g.component_count_excluding(g.vertices()), 0);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Graph::h1();
        let perm = [3, 0, 6, 2, 5, 1, 4];
        let h = g.relabel(&perm);
        assert_eq!(h.edge_count(), g.edge_count());
        let mut want = g.degree_sequence();
        let mut got = h.degree_sequence();
        want.sort();
        got.sort();
        assert_eq!(want, got);
        assert_eq!(h.has_edge(perm[0], perm[1]), g.has_edge(0, 1));
    }

    #[test]
    fn induced_subgraph_keeps_labels_sorted() {
        let g = Graph::h1();
        let (sub, labels) = g.induced([1, 2, 3].into_iter().collect());
        assert_eq!(labels, vec![1, 2, 3]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 2); // the path r2-r3-r4
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(5, 6).count(), 0);
        assert_eq!(subsets_of_size(10, 3).count(), 120);
    }
}
