//! Hamilton-cycle and longest-cycle search with explicit certificates.
//!
//! Cycle conventions: a single vertex is a cycle of length 1 and a single
//! edge is a cycle of length 2, so K1 and K2 both count as hamiltonian.
//! The primary solver is pruned backtracking; `hamiltonian_cycle_dp` is an
//! independent bitmask dynamic program used to re-validate findings.

use crate::graph::{Graph, VertexSet};
use crate::invariants::is_t_tough;
use crate::rational::Rational;
use std::fmt;

/// Why a certificate failed validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertError {
    Empty,
    OutOfRange { vertex: usize },
    Repeated { vertex: usize },
    MissingEdge { u: usize, v: usize },
}

impl fmt::Display for CertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertError::Empty => write!(f, "empty vertex sequence"),
            CertError::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            CertError::Repeated { vertex } => write!(f, "vertex {vertex} repeated"),
            CertError::MissingEdge { u, v } => write!(f, "required edge {u}-{v} missing"),
        }
    }
}

impl std::error::Error for CertError {}

/// A cycle as an ordered vertex sequence, implicitly closed.
///
/// Length 1 is a single vertex and length 2 a single edge; consecutive
/// adjacency (including the wrap) is required from length 3 up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCert {
    seq: Vec<usize>,
}

impl CycleCert {
    pub fn new(seq: Vec<usize>) -> CycleCert {
        CycleCert { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.seq.iter().copied().collect()
    }

    /// The h-th successor of `v` along the cycle orientation.
    pub fn successor(&self, v: usize, h: usize) -> Option<usize> {
        let i = self.seq.iter().position(|&x| x == v)?;
        Some(self.seq[(i + h) % self.seq.len()])
    }

    /// The h-th predecessor of `v` along the cycle orientation.
    pub fn predecessor(&self, v: usize, h: usize) -> Option<usize> {
        let i = self.seq.iter().position(|&x| x == v)?;
        let t = self.seq.len();
        Some(self.seq[(i + t - h % t) % t])
    }

    /// Full validation against a host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), CertError> {
        if self.seq.is_empty() {
            return Err(CertError::Empty);
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.seq {
            if v >= g.n() {
                return Err(CertError::OutOfRange { vertex: v });
            }
            if seen.contains(v) {
                return Err(CertError::Repeated { vertex: v });
            }
            seen = seen.with(v);
        }
        match self.seq.len() {
            1 => Ok(()),
            2 => {
                if g.has_edge(self.seq[0], self.seq[1]) {
                    Ok(())
                } else {
                    Err(CertError::MissingEdge {
                        u: self.seq[0],
                        v: self.seq[1],
                    })
                }
            }
            t => {
                for i in 0..t {
                    let (u, v) = (self.seq[i], self.seq[(i + 1) % t]);
                    if !g.has_edge(u, v) {
                        return Err(CertError::MissingEdge { u, v });
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for CycleCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A simple path as an ordered vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitness {
    seq: Vec<usize>,
}

impl PathWitness {
    pub fn new(seq: Vec<usize>) -> PathWitness {
        PathWitness { seq }
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (
            *self.seq.first().expect("nonempty path"),
            *self.seq.last().expect("nonempty path"),
        )
    }

    pub fn interior(&self) -> VertexSet {
        if self.seq.len() < 3 {
            return VertexSet::EMPTY;
        }
        self.seq[1..self.seq.len() - 1].iter().copied().collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CertError> {
        if self.seq.is_empty() {
            return Err(CertError::Empty);
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.seq {
            if v >= g.n() {
                return Err(CertError::OutOfRange { vertex: v });
            }
            if seen.contains(v) {
                return Err(CertError::Repeated { vertex: v });
            }
            seen = seen.with(v);
        }
        for w in self.seq.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(CertError::MissingEdge { u: w[0], v: w[1] });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Searches for a Hamilton cycle by pruned backtracking. Determinism: paths
/// grow from vertex 0 and candidates are tried in ascending order.
pub fn hamiltonian_cycle(g: &Graph) -> Option<CycleCert> {
    let n = g.n();
    if n == 1 {
        return Some(CycleCert::new(vec![0]));
    }
    if n == 2 {
        return g.has_edge(0, 1).then(|| CycleCert::new(vec![0, 1]));
    }

    // necessary-condition prefilters
    if !g.is_connected() {
        return None;
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    if (0..n).any(|v| g.component_count_excluding(VertexSet::singleton(v)) >= 2) {
        return None;
    }
    // hamiltonian graphs are 1-tough; the subset scan is cheap enough to be
    // worth running as a prefilter up to n = 12
    if n <= 12 && !is_t_tough(g, Rational::ONE) {
        return None;
    }

    let mut path = Vec::with_capacity(n);
    path.push(0usize);
    let mut visited = VertexSet::singleton(0);
    if search_ham(g, &mut path, &mut visited) {
        let cert = CycleCert::new(path);
        debug_assert!(cert.validate(g).is_ok());
        Some(cert)
    } else {
        None
    }
}

fn search_ham(g: &Graph, path: &mut Vec<usize>, visited: &mut VertexSet) -> bool {
    let n = g.n();
    let u = *path.last().unwrap();
    if path.len() == n {
        return g.has_edge(u, 0);
    }

    let unvisited = g.vertices().minus(*visited);

    // connectivity cut-off: every unvisited vertex must be reachable from
    // the path head through unvisited territory
    let reach = g.reachable(u, unvisited.with(u));
    if !unvisited.is_subset_of(reach) {
        return false;
    }

    // each unvisited vertex still needs two usable cycle neighbors among
    // the unvisited vertices, the path head, and the start; a vertex with
    // exactly two, one of them the head, forces a head edge. The head has
    // one free slot mid-path but two at the very start (next and closing).
    let usable = unvisited.with(u).with(0);
    let mut forced = VertexSet::EMPTY;
    for w in unvisited.iter() {
        let avail = g.neighbors(w).intersect(usable);
        match avail.len() {
            0 | 1 => return false,
            2 if avail.contains(u) => forced = forced.with(w),
            _ => {}
        }
    }
    let free_slots = if path.len() == 1 { 2 } else { 1 };
    if forced.len() > free_slots {
        return false;
    }

    let candidates = if forced.is_empty() {
        g.neighbors(u).intersect(unvisited)
    } else {
        // every forced edge is incident to the head, so the next step must
        // take one of them (mirror traversals cover the start's case)
        forced
    };
    for v in candidates.iter() {
        path.push(v);
        *visited = visited.with(v);
        if search_ham(g, path, visited) {
            return true;
        }
        *visited = visited.without(v);
        path.pop();
    }
    false
}

/// Hamilton cycle by Held-Karp bitmask dynamic programming; the independent
/// re-validation route. Capped at n = 20 (table size 2^n).
pub fn hamiltonian_cycle_dp(g: &Graph) -> Option<CycleCert> {
    let n = g.n();
    assert!(n <= 20, "bitmask DP capped at n=20");
    if n == 1 {
        return Some(CycleCert::new(vec![0]));
    }
    if n == 2 {
        return g.has_edge(0, 1).then(|| CycleCert::new(vec![0, 1]));
    }

    // ends[mask] = set of v such that some simple path 0..v covers mask
    let full: u32 = ((1u64 << n) - 1) as u32;
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1; // the path consisting of vertex 0
    for mask in 1..=full {
        if mask & 1 == 0 || ends[mask as usize] == 0 {
            continue;
        }
        let mut es = ends[mask as usize];
        while es != 0 {
            let v = es.trailing_zeros() as usize;
            es &= es - 1;
            let mut nb = (g.neighbors(v).bits() as u32) & !mask & full;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                ends[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }

    let closing = ends[full as usize] & (g.neighbors(0).bits() as u32);
    if closing == 0 {
        return None;
    }
    // reconstruct a cycle by walking the table backwards
    let mut seq = Vec::with_capacity(n);
    let mut v = closing.trailing_zeros() as usize;
    let mut mask = full;
    loop {
        seq.push(v);
        if v == 0 {
            break;
        }
        let prev_mask = mask & !(1u32 << v);
        let preds = ends[prev_mask as usize] & (g.neighbors(v).bits() as u32);
        debug_assert!(preds != 0);
        v = preds.trailing_zeros() as usize;
        mask = prev_mask;
    }
    seq.reverse();
    let cert = CycleCert::new(seq);
    debug_assert!(cert.validate(g).is_ok());
    Some(cert)
}

/// Longest simple cycle of length >= 3, or `None` for forests. Ties break
/// to the first cycle found under ascending anchor and neighbor order, so
/// results are reproducible.
pub fn longest_cycle(g: &Graph) -> Option<CycleCert> {
    let n = g.n();
    if g.edge_count() + g.components().len() < n + 1 {
        return None; // forest: m = n - #components
    }
    let mut best: Option<Vec<usize>> = None;

    // anchor = smallest vertex of the cycle; the search uses only vertices
    // >= anchor, so each cycle is explored from one canonical root
    for anchor in 0..n {
        let best_len = best.as_ref().map_or(0, Vec::len);
        if best_len >= n - anchor {
            break; // no room to improve with a larger anchor
        }
        let allowed = VertexSet::from_bits(!0u64 << anchor).intersect(g.vertices());
        if g.neighbors(anchor).intersect(allowed).len() < 2 {
            continue;
        }
        let mut path = vec![anchor];
        let mut visited = VertexSet::singleton(anchor);
        search_longest(g, anchor, allowed, &mut path, &mut visited, &mut best);
        if best.as_ref().map_or(0, Vec::len) == n {
            break;
        }
    }
    best.map(|seq| {
        let cert = CycleCert::new(seq);
        debug_assert!(cert.validate(g).is_ok());
        cert
    })
}

fn search_longest(
    g: &Graph,
    anchor: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    visited: &mut VertexSet,
    best: &mut Option<Vec<usize>>,
) {
    let u = *path.last().unwrap();
    let best_len = best.as_ref().map_or(0, Vec::len);

    // upper bound: current path plus everything still reachable from u
    let open = allowed.minus(*visited);
    let reach = g.reachable(u, open.with(u)).without(u);
    if path.len() + reach.len() <= best_len.max(2) {
        return;
    }
    // closing requires some neighbor of the anchor on the frontier
    if g.neighbors(anchor).intersect(reach.with(u)).is_empty() {
        return;
    }

    for v in g.neighbors(u).intersect(allowed).iter() {
        if v == anchor {
            if path.len() >= 3 && path.len() > best_len {
                *best = Some(path.clone());
            }
            continue;
        }
        if visited.contains(v) {
            continue;
        }
        path.push(v);
        *visited = visited.with(v);
        search_longest(g, anchor, allowed, path, visited, best);
        *visited = visited.without(v);
        path.pop();
    }
}

/// True iff deleting the cycle leaves an edgeless graph. The certificate is
/// validated first and rejected if it is not a cycle of `g`.
pub fn is_dominating(g: &Graph, c: &CycleCert) -> Result<bool, CertError> {
    c.validate(g)?;
    let rest = g.vertices().minus(c.vertex_set());
    Ok(rest
        .iter()
        .all(|v| g.neighbors(v).intersect(rest).is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_cycles() {
        assert_eq!(hamiltonian_cycle(&Graph::empty(1)).unwrap().len(), 1);
        assert_eq!(hamiltonian_cycle(&Graph::path(2)).unwrap().len(), 2);
        assert!(hamiltonian_cycle(&Graph::empty(2)).is_none());
        assert_eq!(hamiltonian_cycle_dp(&Graph::empty(1)).unwrap().len(), 1);
        assert_eq!(hamiltonian_cycle_dp(&Graph::path(2)).unwrap().len(), 2);
        assert!(hamiltonian_cycle_dp(&Graph::empty(2)).is_none());
    }

    #[test]
    fn known_nonhamiltonian_graphs() {
        assert!(hamiltonian_cycle(&Graph::petersen()).is_none());
        assert!(hamiltonian_cycle_dp(&Graph::petersen()).is_none());
        assert!(hamiltonian_cycle(&Graph::h1()).is_none());
        assert!(hamiltonian_cycle(&Graph::complete_bipartite(2, 3)).is_none());
        assert!(hamiltonian_cycle(&Graph::star(3)).is_none());
        assert!(hamiltonian_cycle(&Graph::path(5)).is_none());
    }

    #[test]
    fn known_hamiltonian_graphs() {
        for g in [
            Graph::cycle(5),
            Graph::complete(6),
            Graph::complete_bipartite(3, 3),
            Graph::cycle(3),
        ] {
            let c = hamiltonian_cycle(&g).expect("hamiltonian");
            assert_eq!(c.len(), g.n());
            assert!(c.validate(&g).is_ok());
            assert!(hamiltonian_cycle_dp(&g).is_some());
        }
    }

    #[test]
    fn longest_cycle_values() {
        assert!(longest_cycle(&Graph::path(6)).is_none());
        assert!(longest_cycle(&Graph::star(4)).is_none());
        assert!(longest_cycle(&Graph::empty(3)).is_none());

        // a chord does not shorten the outer cycle
        let mut edges: Vec<_> = (1..6).map(|v| (v - 1, v)).collect();
        edges.push((5, 0));
        edges.push((0, 3));
        let chord = Graph::from_edges(6, &edges);
        assert_eq!(longest_cycle(&chord).unwrap().len(), 6);

        assert_eq!(longest_cycle(&Graph::petersen()).unwrap().len(), 9);
        assert_eq!(longest_cycle(&Graph::h1()).unwrap().len(), 6);
        assert_eq!(longest_cycle(&Graph::cycle(3)).unwrap().len(), 3);

        // disjoint cycles: the longer one wins
        let g = Graph::disjoint_union(&Graph::cycle(3), &Graph::cycle(5));
        assert_eq!(longest_cycle(&g).unwrap().len(), 5);
    }

    #[test]
    fn longest_cycle_agrees_with_hamiltonicity() {
        for g in [
            Graph::cycle(6),
            Graph::petersen(),
            Graph::h1(),
            Graph::complete(5),
            Graph::complete_bipartite(2, 3),
        ] {
            let lc = longest_cycle(&g).map_or(0, |c| c.len());
            assert_eq!(lc == g.n(), hamiltonian_cycle(&g).is_some());
        }
    }

    #[test]
    fn successor_predecessor_queries() {
        let c = CycleCert::new(vec![3, 1, 4, 0]);
        assert_eq!(c.successor(3, 1), Some(1));
        assert_eq!(c.successor(0, 1), Some(3));
        assert_eq!(c.successor(1, 2), Some(0));
        assert_eq!(c.predecessor(3, 1), Some(0));
        assert_eq!(c.predecessor(4, 3), Some(0));
        assert_eq!(c.successor(9, 1), None);
        assert_eq!(c.to_string(), "3,1,4,0");
    }

    #[test]
    fn certificate_validation_catches_garbage() {
        let g = Graph::cycle(5);
        assert!(CycleCert::new(vec![]).validate(&g).is_err());
        assert!(CycleCert::new(vec![0, 1, 1]).validate(&g).is_err());
        assert!(CycleCert::new(vec![0, 2, 4]).validate(&g).is_err());
        assert!(CycleCert::new(vec![0, 7]).validate(&g).is_err());
        assert!(CycleCert::new(vec![0, 1, 2, 3, 4]).validate(&g).is_ok());
        assert!(PathWitness::new(vec![0, 1, 2]).validate(&g).is_ok());
        assert!(PathWitness::new(vec![0, 2]).validate(&g).is_err());
    }

    #[test]
    fn dominating_cycle_examples() {
        let k23 = Graph::complete_bipartite(2, 3);
        let four = CycleCert::new(vec![0, 2, 1, 3]);
        assert!(four.validate(&k23).is_ok());
        assert_eq!(is_dominating(&k23, &four), Ok(true));

        let h1 = Graph::h1();
        let rim = CycleCert::new(vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(is_dominating(&h1, &rim), Ok(true));

        let g = Graph::disjoint_union(&Graph::cycle(3), &Graph::complete(2));
        let tri = CycleCert::new(vec![0, 1, 2]);
        assert_eq!(is_dominating(&g, &tri), Ok(false));

        // an invalid certificate is rejected, not interpreted
        assert!(is_dominating(&k23, &CycleCert::new(vec![0, 1])).is_err());
    }
}
