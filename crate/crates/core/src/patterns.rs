//! The forbidden-pattern catalog and the induced-subgraph matcher.
//!
//! "Free" always means free of *induced* copies. Every pattern the claim
//! registry needs is listed here; the matcher is a backtracking search over
//! pattern vertices in descending-degree order with bitset candidate
//! pruning, and `contains_induced_exhaustive` is the deliberately dumb
//! subset-and-permutation scan used to re-validate findings.

use crate::graph::{subsets_of_size, Graph, VertexSet};
use std::fmt;

/// Symbolic names for the catalog patterns. The token strings (accepted on
/// the command line) are listed next to each variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternId {
    /// `K1+P2`: isolated vertex plus an edge.
    K1P2,
    /// `K1+P3`
    K1P3,
    /// `K1+P4`
    K1P4,
    /// `K1+P5`
    K1P5,
    /// `K1+P6`
    K1P6,
    /// `K2+P3`
    K2P3,
    /// `2K2` (alias `K2+K2`): two independent edges.
    TwoK2,
    /// `K2+K3`
    K2K3,
    /// `K1+K1,3` (alias `K1+claw`)
    K1Claw,
    /// `P3`
    P3,
    /// `P4`
    P4,
    /// `K1,3` (alias `claw`)
    Claw,
    /// `K1,3+e` (alias `claw+e`)
    ClawPlusE,
    /// `2K1` (alias `K1+K1`): two isolated vertices.
    TwoK1,
    /// `3K1` (alias `K1+K1+K1`)
    ThreeK1,
}

impl PatternId {
    pub const ALL: [PatternId; 15] = [
        PatternId::K1P2,
        PatternId::K1P3,
        PatternId::K1P4,
        PatternId::K1P5,
        PatternId::K1P6,
        PatternId::K2P3,
        PatternId::TwoK2,
        PatternId::K2K3,
        PatternId::K1Claw,
        PatternId::P3,
        PatternId::P4,
        PatternId::Claw,
        PatternId::ClawPlusE,
        PatternId::TwoK1,
        PatternId::ThreeK1,
    ];

    pub fn token(self) -> &'static str {
        match self {
            PatternId::K1P2 => "K1+P2",
            PatternId::K1P3 => "K1+P3",
            PatternId::K1P4 => "K1+P4",
            PatternId::K1P5 => "K1+P5",
            PatternId::K1P6 => "K1+P6",
            PatternId::K2P3 => "K2+P3",
            PatternId::TwoK2 => "2K2",
            PatternId::K2K3 => "K2+K3",
            PatternId::K1Claw => "K1+K1,3",
            PatternId::P3 => "P3",
            PatternId::P4 => "P4",
            PatternId::Claw => "K1,3",
            PatternId::ClawPlusE => "K1,3+e",
            PatternId::TwoK1 => "2K1",
            PatternId::ThreeK1 => "3K1",
        }
    }

    /// Parses a pattern token (case-insensitive; a few aliases accepted).
    pub fn parse(s: &str) -> Option<PatternId> {
        let lower = s.to_ascii_lowercase();
        let norm = lower.as_str();
        for id in PatternId::ALL {
            if id.token().to_ascii_lowercase() == norm {
                return Some(id);
            }
        }
        match norm {
            "k2+k2" => Some(PatternId::TwoK2),
            "k1+k1" => Some(PatternId::TwoK1),
            "k1+k1+k1" => Some(PatternId::ThreeK1),
            "claw" => Some(PatternId::Claw),
            "claw+e" => Some(PatternId::ClawPlusE),
            "k1+claw" => Some(PatternId::K1Claw),
            _ => None,
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A named pattern graph (at most 7 vertices).
#[derive(Clone)]
pub struct Pattern {
    pub id: PatternId,
    graph: Graph,
}

impl Pattern {
    pub fn new(id: PatternId) -> Pattern {
        let k1 = Graph::empty(1);
        let graph = match id {
            PatternId::K1P2 => Graph::disjoint_union(&k1, &Graph::path(2)),
            PatternId::K1P3 => Graph::disjoint_union(&k1, &Graph::path(3)),
            PatternId::K1P4 => Graph::disjoint_union(&k1, &Graph::path(4)),
            PatternId::K1P5 => Graph::disjoint_union(&k1, &Graph::path(5)),
            PatternId::K1P6 => Graph::disjoint_union(&k1, &Graph::path(6)),
            PatternId::K2P3 => Graph::disjoint_union(&Graph::complete(2), &Graph::path(3)),
            PatternId::TwoK2 => Graph::disjoint_union(&Graph::complete(2), &Graph::complete(2)),
            PatternId::K2K3 => Graph::disjoint_union(&Graph::complete(2), &Graph::complete(3)),
            PatternId::K1Claw => Graph::disjoint_union(&k1, &Graph::star(3)),
            PatternId::P3 => Graph::path(3),
            PatternId::P4 => Graph::path(4),
            PatternId::Claw => Graph::star(3),
            PatternId::ClawPlusE => Graph::claw_plus_e(),
            PatternId::TwoK1 => Graph::empty(2),
            PatternId::ThreeK1 => Graph::empty(3),
        };
        debug_assert!(graph.n() <= 7);
        Pattern { id, graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// All fifteen catalog patterns.
pub fn catalog() -> Vec<Pattern> {
    PatternId::ALL.iter().map(|&id| Pattern::new(id)).collect()
}

/// An injective vertex map from a pattern into a host graph that preserves
/// both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Re-checks the embedding from scratch: injectivity plus induced
    /// adjacency agreement on every pattern pair.
    pub fn validate(&self, host: &Graph, pattern: &Pattern) -> bool {
        let p = pattern.graph();
        if self.map.len() != p.n() {
            return false;
        }
        if self.image().len() != self.map.len() {
            return false;
        }
        if self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for a in 0..p.n() {
            for b in (a + 1)..p.n() {
                if p.has_edge(a, b) != host.has_edge(self.map[a], self.map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}->{v}")?;
        }
        write!(f, "]")
    }
}

/// Searches for an induced copy of `pattern` in `host`. Returns the first
/// embedding found under a deterministic vertex order, or `None`.
pub fn contains_induced(host: &Graph, pattern: &Pattern) -> Option<Embedding> {
    let p = pattern.graph();
    if p.n() > host.n() {
        return None;
    }

    // Match high-degree pattern vertices first: they constrain candidates
    // hardest. Ties break on index so results are reproducible.
    let mut order: Vec<usize> = (0..p.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(p.degree(v)), v));

    // In an induced embedding the image of v has at least deg(v) neighbors.
    let mut degree_ok = vec![0u64; p.n()];
    for (v, mask) in degree_ok.iter_mut().enumerate() {
        for u in 0..host.n() {
            if host.degree(u) >= p.degree(v) {
                *mask |= 1 << u;
            }
        }
    }

    let mut map = vec![usize::MAX; p.n()];
    let mut used = VertexSet::EMPTY;

    fn go(
        host: &Graph,
        p: &Graph,
        order: &[usize],
        degree_ok: &[u64],
        depth: usize,
        map: &mut [usize],
        used: &mut VertexSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let pv = order[depth];
        let mut cand = degree_ok[pv] & !used.bits() & host.vertices().bits();
        for &pu in &order[..depth] {
            let hu = map[pu];
            cand &= if p.has_edge(pv, pu) {
                host.neighbors(hu).bits()
            } else {
                !host.neighbors(hu).bits()
            };
            if cand == 0 {
                return false;
            }
        }
        let mut c = cand;
        while c != 0 {
            let hv = c.trailing_zeros() as usize;
            c &= c - 1;
            map[pv] = hv;
            *used = used.with(hv);
            if go(host, p, order, degree_ok, depth + 1, map, used) {
                return true;
            }
            *used = used.without(hv);
            map[pv] = usize::MAX;
        }
        false
    }

    if go(host, p, &order, &degree_ok, 0, &mut map, &mut used) {
        let emb = Embedding { map };
        debug_assert!(emb.validate(host, pattern));
        Some(emb)
    } else {
        None
    }
}

/// True iff the host contains an induced copy of none of the given patterns.
pub fn is_free(host: &Graph, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|p| contains_induced(host, p).is_none())
}

pub fn is_free_of(host: &Graph, ids: &[PatternId]) -> bool {
    ids.iter()
        .all(|&id| contains_induced(host, &Pattern::new(id)).is_none())
}

/// Brute-force matcher: every |V(pattern)|-subset of the host, every
/// bijection onto it. Independent of the backtracking matcher; this is the
/// re-validation route for reported findings.
pub fn contains_induced_exhaustive(host: &Graph, pattern: &Pattern) -> Option<Embedding> {
    let p = pattern.graph();
    let k = p.n();
    if k > host.n() {
        return None;
    }
    for mask in subsets_of_size(host.n(), k) {
        let verts = VertexSet::from_bits(mask).to_vec();
        let mut perm: Vec<usize> = (0..k).collect();
        // Heap's algorithm, iterative
        let mut c = vec![0usize; k];
        loop {
            let map: Vec<usize> = (0..k).map(|i| verts[perm[i]]).collect();
            let emb = Embedding { map };
            if emb.validate(host, pattern) {
                return Some(emb);
            }
            let mut i = 1;
            loop {
                if i >= k {
                    break;
                }
                if c[i] < i {
                    if i % 2 == 0 {
                        perm.swap(0, i);
                    } else {
                        perm.swap(c[i], i);
                    }
                    c[i] += 1;
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i >= k {
                break;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete_and_shaped_right() {
        let cat = catalog();
        assert_eq!(cat.len(), 15);
        let sizes: Vec<usize> = cat.iter().map(|p| p.graph().n()).collect();
        assert!(sizes.iter().all(|&s| s <= 7));
        // spot-check a few constructions
        let k1p2 = Pattern::new(PatternId::K1P2);
        assert_eq!(k1p2.graph().n(), 3);
        assert_eq!(k1p2.graph().edge_count(), 1);
        let two_k2 = Pattern::new(PatternId::TwoK2);
        assert_eq!(two_k2.graph().degree_sequence(), vec![1, 1, 1, 1]);
        let k1claw = Pattern::new(PatternId::K1Claw);
        assert_eq!(k1claw.graph().n(), 5);
        assert_eq!(k1claw.graph().edge_count(), 3);
    }

    #[test]
    fn token_round_trip_and_aliases() {
        for id in PatternId::ALL {
            assert_eq!(PatternId::parse(id.token()), Some(id));
        }
        assert_eq!(PatternId::parse("K2+K2"), Some(PatternId::TwoK2));
        assert_eq!(PatternId::parse("claw"), Some(PatternId::Claw));
        assert_eq!(PatternId::parse("k1+claw"), Some(PatternId::K1Claw));
        assert_eq!(PatternId::parse("K1+K1+K1"), Some(PatternId::ThreeK1));
        assert_eq!(PatternId::parse("nonsense"), None);
    }

    #[test]
    fn k23_has_no_isolated_vertex_plus_edge() {
        let g = Graph::complete_bipartite(2, 3);
        assert!(contains_induced(&g, &Pattern::new(PatternId::K1P2)).is_none());
        assert!(contains_induced_exhaustive(&g, &Pattern::new(PatternId::K1P2)).is_none());
    }

    #[test]
    fn h1_contains_k1_p4() {
        let g = Graph::h1();
        let emb = contains_induced(&g, &Pattern::new(PatternId::K1P4)).expect("induced K1+P4");
        assert!(emb.validate(&g, &Pattern::new(PatternId::K1P4)));
        // one witness: path r3-r2-r1-apex (2,1,0,6) with r5 (4) isolated
        let manual = Embedding {
            map: vec![4, 2, 1, 0, 6],
        };
        assert!(manual.validate(&g, &Pattern::new(PatternId::K1P4)));
    }

    #[test]
    fn complete_graphs_have_no_nonadjacent_pair() {
        let g = Graph::complete(3);
        assert!(contains_induced(&g, &Pattern::new(PatternId::TwoK1)).is_none());
    }

    #[test]
    fn freeness_examples() {
        let h1 = Graph::h1();
        assert!(is_free(&h1, &[Pattern::new(PatternId::K2P3)]));
        assert!(is_free(&h1, &[Pattern::new(PatternId::K1Claw)]));
        // triangle-free host cannot contain K2+K3
        assert!(is_free(
            &Graph::petersen(),
            &[Pattern::new(PatternId::K2K3)]
        ));
        // but H1 does contain two independent edges
        assert!(!is_free(&h1, &[Pattern::new(PatternId::TwoK2)]));
    }

    #[test]
    fn matcher_agrees_with_exhaustive_on_small_hosts() {
        let hosts = [
            Graph::h1(),
            Graph::complete_bipartite(2, 3),
            Graph::cycle(5),
            Graph::path(6),
            Graph::star(4),
            Graph::disjoint_union(&Graph::complete(3), &Graph::path(3)),
        ];
        for host in &hosts {
            for pat in catalog() {
                let fast = contains_induced(host, &pat);
                let slow = contains_induced_exhaustive(host, &pat);
                assert_eq!(
                    fast.is_some(),
                    slow.is_some(),
                    "disagreement on {} in {:?}",
                    pat.id,
                    host
                );
                if let Some(e) = fast {
                    assert!(e.validate(host, &pat));
                }
            }
        }
    }

    #[test]
    fn freeness_is_isomorphism_invariant() {
        let g = Graph::h1();
        let perms = [
            vec![6, 5, 4, 3, 2, 1, 0],
            vec![1, 2, 3, 4, 5, 6, 0],
            vec![2, 0, 4, 6, 1, 5, 3],
        ];
        for perm in &perms {
            let h = g.relabel(perm);
            for pat in catalog() {
                assert_eq!(
                    contains_induced(&g, &pat).is_some(),
                    contains_induced(&h, &pat).is_some()
                );
            }
        }
    }
}
