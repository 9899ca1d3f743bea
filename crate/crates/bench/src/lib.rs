//! Fixture builders shared by the criterion benchmarks.

use hamlab::Graph;

/// Deterministic pseudo-random graph (splitmix64 edge coin flips).
pub fn random_graph(n: usize, percent: u64, seed: u64) -> Graph {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if next() % 100 < percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}
