//! Shared fixtures for the integration suites: a tiny deterministic RNG and
//! cached graph universes.
#![allow(dead_code)] // each test binary uses its own subset

use hamlab::{enumerate_graphs, Graph};
use std::sync::OnceLock;

/// splitmix64; fixed seeds make every "random" test reproducible.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Random graph with each edge present with probability `percent`/100.
pub fn random_graph(n: usize, percent: u64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.below(100) < percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn random_permutation(n: usize, rng: &mut Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        p.swap(i, j);
    }
    p
}

/// All non-isomorphic graphs on 1..=7 vertices, generated once per binary.
pub fn universe_upto_7() -> &'static [Graph] {
    static CACHE: OnceLock<Vec<Graph>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (1..=7)
            .flat_map(|n| enumerate_graphs(n, false).unwrap())
            .collect()
    })
}

/// All non-isomorphic graphs on exactly 8 vertices, generated once.
pub fn universe_8() -> &'static [Graph] {
    static CACHE: OnceLock<Vec<Graph>> = OnceLock::new();
    CACHE.get_or_init(|| enumerate_graphs(8, false).unwrap().collect())
}
