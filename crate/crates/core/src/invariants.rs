//! Exact structural invariants: independence number, vertex connectivity,
//! and toughness, all with witnesses and exact rational arithmetic.
//!
//! Everything here enumerates vertex subsets, which is exactly right at desk
//! scale (the pruned toughness solver stays practical to roughly n = 24; the
//! exhaustive variants exist as independent re-validation routes).

use crate::graph::{subsets_of_size, Graph, VertexSet};
use crate::rational::Rational;

/// The exact toughness of a graph together with a witness cut when finite.
///
/// For a finite value `|S| / s(G\S)` the witness `S` attains it; complete
/// graphs have no disconnecting set and carry `Infinity` with no witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughnessResult {
    pub value: Rational,
    pub witness: Option<VertexSet>,
}

/// Maximum independent set size with a witness, by branch and bound.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = VertexSet::EMPTY;

    fn go(g: &Graph, chosen: VertexSet, cand: VertexSet, best: &mut VertexSet) {
        if chosen.len() + cand.len() <= best.len() {
            return;
        }
        if cand.is_empty() {
            if chosen.len() > best.len() {
                *best = chosen;
            }
            return;
        }
        // branch on a candidate of maximum degree within the candidate set;
        // ties break on index for determinism
        let pivot = cand
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersect(cand).len(), usize::MAX - v))
            .unwrap();
        // include pivot
        go(
            g,
            chosen.with(pivot),
            cand.without(pivot).minus(g.neighbors(pivot)),
            best,
        );
        // exclude pivot
        go(g, chosen, cand.without(pivot), best);
    }

    go(g, VertexSet::EMPTY, g.vertices(), &mut best);
    debug_assert!(g.set_is_independent(best));
    (best.len(), best)
}

/// Independence number by scanning all vertex subsets (oracle route).
pub fn independence_number_exhaustive(g: &Graph) -> usize {
    assert!(g.n() <= 20, "exhaustive independence scan capped at n=20");
    let mut best = 0;
    for mask in 0..(1u64 << g.n()) {
        let s = VertexSet::from_bits(mask);
        if s.len() > best && g.set_is_independent(s) {
            best = s.len();
        }
    }
    best
}

/// First vertex cut of exactly `k` vertices in subset enumeration order,
/// if one exists. A cut is a set whose removal leaves >= 2 components.
fn cut_of_size(g: &Graph, k: usize) -> Option<VertexSet> {
    if g.n() < k + 2 {
        return None;
    }
    subsets_of_size(g.n(), k)
        .map(VertexSet::from_bits)
        .find(|&s| g.component_count_excluding(s) >= 2)
}

/// Minimum number of vertices whose removal disconnects the graph;
/// `n - 1` for complete graphs, 0 for disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    if g.is_complete() {
        return g.n() - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    // a non-complete connected graph has a cut of size <= n-2
    (1..)
        .find(|&k| cut_of_size(g, k).is_some())
        .expect("non-complete graph must have a vertex cut")
}

/// True iff no fewer than `k` vertices disconnect the graph (with the
/// complete-graph convention, this is `vertex_connectivity(g) >= k`), but
/// only cuts below `k` are ever enumerated.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.is_complete() {
        return g.n() > k;
    }
    if k == 0 {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    if g.n() < k + 1 {
        return false;
    }
    (1..k).all(|j| cut_of_size(g, j).is_none())
}

/// Exact toughness with a witness: the minimum of `|S| / s(G\S)` over all
/// `S` leaving more than one component. Cut sizes are tried in increasing
/// order and the loop stops as soon as no larger cut can beat the best
/// ratio (a cut of size k yields at most n-k components).
pub fn toughness(g: &Graph) -> ToughnessResult {
    if g.is_complete() {
        return ToughnessResult {
            value: Rational::Infinity,
            witness: None,
        };
    }
    if !g.is_connected() {
        // the empty set already separates, so the minimum ratio is 0
        return ToughnessResult {
            value: Rational::ZERO,
            witness: Some(VertexSet::EMPTY),
        };
    }
    let n = g.n();
    let mut best: Option<(Rational, VertexSet)> = None;
    for k in 1..=(n - 2) {
        if let Some((value, _)) = best {
            // best possible at this size: all n-k survivors isolated
            if value <= Rational::new(k as u64, (n - k) as u64) {
                break;
            }
        }
        for mask in subsets_of_size(n, k) {
            let s = VertexSet::from_bits(mask);
            let comps = g.component_count_excluding(s);
            if comps >= 2 {
                let ratio = Rational::new(k as u64, comps as u64);
                if best.is_none_or(|(value, _)| ratio < value) {
                    best = Some((ratio, s));
                }
            }
        }
    }
    let (value, witness) = best.expect("connected non-complete graph has a cut");
    ToughnessResult {
        value,
        witness: Some(witness),
    }
}

/// Toughness by scanning every vertex subset, no pruning (oracle route).
pub fn toughness_exhaustive(g: &Graph) -> ToughnessResult {
    assert!(g.n() <= 20, "exhaustive toughness scan capped at n=20");
    if g.is_complete() {
        return ToughnessResult {
            value: Rational::Infinity,
            witness: None,
        };
    }
    let mut best: Option<(Rational, VertexSet)> = None;
    for mask in 0..(1u64 << g.n()) {
        let s = VertexSet::from_bits(mask);
        let comps = g.component_count_excluding(s);
        if comps >= 2 {
            let ratio = Rational::new(s.len() as u64, comps as u64);
            if best.is_none_or(|(value, _)| ratio < value) {
                best = Some((ratio, s));
            }
        }
    }
    let (value, witness) = best.expect("non-complete graph has a disconnecting set");
    ToughnessResult {
        value,
        witness: Some(witness),
    }
}

/// Decides `toughness(g) >= t` without computing the full minimum: stops at
/// the first counterexample cut, and stops enumerating sizes once
/// `t * (n - k) <= k` rules out every larger cut.
pub fn is_t_tough(g: &Graph, t: Rational) -> bool {
    if g.is_complete() {
        return true;
    }
    if t == Rational::ZERO {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    let n = g.n();
    for k in 1..=(n - 2) {
        // any counterexample of size k needs s(G\S) > k/t, and s <= n-k
        if !t.times_exceeds((n - k) as u64, k as u64) {
            break;
        }
        for mask in subsets_of_size(n, k) {
            let s = VertexSet::from_bits(mask);
            let comps = g.component_count_excluding(s);
            if comps >= 2 && t.times_exceeds(comps as u64, k as u64) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_witnesses() {
        let (a, w) = independence_number(&Graph::complete_bipartite(2, 3));
        assert_eq!(a, 3);
        assert_eq!(w, [2, 3, 4].into_iter().collect());

        assert_eq!(independence_number(&Graph::complete(6)).0, 1);
        assert_eq!(independence_number(&Graph::petersen()).0, 4);
        assert_eq!(independence_number(&Graph::empty(5)).0, 5);

        for g in [
            Graph::petersen(),
            Graph::h1(),
            Graph::cycle(7),
            Graph::disjoint_union(&Graph::cycle(3), &Graph::path(4)),
        ] {
            let (a, w) = independence_number(&g);
            assert_eq!(a, w.len());
            assert!(g.set_is_independent(w));
            assert_eq!(a, independence_number_exhaustive(&g));
        }
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(2, 3)), 2);
        assert_eq!(vertex_connectivity(&Graph::complete(5)), 4);
        assert_eq!(vertex_connectivity(&Graph::complete(1)), 0);
        assert_eq!(
            vertex_connectivity(&Graph::disjoint_union(
                &Graph::complete(2),
                &Graph::complete(2)
            )),
            0
        );
        assert_eq!(vertex_connectivity(&Graph::petersen()), 3);
        assert_eq!(vertex_connectivity(&Graph::path(5)), 1);
        assert_eq!(vertex_connectivity(&Graph::h1()), 2);

        assert!(is_k_connected(&Graph::petersen(), 3));
        assert!(!is_k_connected(&Graph::petersen(), 4));
        assert!(is_k_connected(&Graph::complete(3), 2));
        assert!(!is_k_connected(&Graph::complete(2), 2));
        assert!(!is_k_connected(&Graph::path(4), 2));
        assert!(is_k_connected(&Graph::path(4), 0));
    }

    #[test]
    fn toughness_gallery_values() {
        let k23 = toughness(&Graph::complete_bipartite(2, 3));
        assert_eq!(k23.value, Rational::new(2, 3));
        let w = k23.witness.unwrap();
        assert_eq!(
            Graph::complete_bipartite(2, 3).component_count_excluding(w),
            3
        );
        assert_eq!(w.len(), 2);

        assert_eq!(toughness(&Graph::h1()).value, Rational::ONE);
        assert_eq!(toughness(&Graph::petersen()).value, Rational::new(4, 3));
        assert_eq!(toughness(&Graph::complete(4)).value, Rational::Infinity);
        assert_eq!(
            toughness(&Graph::disjoint_union(
                &Graph::complete(2),
                &Graph::complete(2)
            ))
            .value,
            Rational::ZERO
        );
    }

    #[test]
    fn pruned_matches_exhaustive() {
        for g in [
            Graph::complete_bipartite(2, 3),
            Graph::h1(),
            Graph::petersen(),
            Graph::cycle(6),
            Graph::path(5),
            Graph::star(4),
            Graph::complete(5),
            Graph::disjoint_union(&Graph::path(2), &Graph::cycle(3)),
        ] {
            let fast = toughness(&g);
            let slow = toughness_exhaustive(&g);
            assert_eq!(fast.value, slow.value);
            if let Some(w) = fast.witness {
                let comps = g.component_count_excluding(w) as u64;
                assert!(comps >= 2 || w.is_empty());
                if comps >= 2 {
                    assert_eq!(fast.value, Rational::new(w.len() as u64, comps));
                }
            }
        }
    }

    #[test]
    fn t_tough_decisions() {
        assert!(is_t_tough(&Graph::h1(), Rational::ONE));
        assert!(!is_t_tough(&Graph::complete_bipartite(2, 3), Rational::ONE));
        assert!(is_t_tough(&Graph::complete(7), Rational::new(1000, 1)));
        assert!(is_t_tough(&Graph::complete(1), Rational::Infinity));
        assert!(!is_t_tough(&Graph::petersen(), Rational::new(3, 2)));
        assert!(is_t_tough(&Graph::petersen(), Rational::new(4, 3)));

        // threshold property: t-tough exactly up to the computed value
        for g in [Graph::h1(), Graph::petersen(), Graph::cycle(5)] {
            let n = g.n() as u64;
            let tau = toughness(&g).value;
            assert!(is_t_tough(&g, tau));
            if let Rational::Finite { num, den } = tau {
                let eps_den = n * (n + 1);
                let above = Rational::new(num * eps_den + den, den * eps_den);
                assert!(!is_t_tough(&g, above));
            }
        }
    }
}
