//! Canonical forms for unlabeled graphs up to 16 vertices.
//!
//! The labeling search is classic individualization-refinement: refine a
//! coloring to equitability, pick the first non-singleton cell, branch on
//! its members, and keep the lexicographically smallest leaf adjacency
//! string. Automorphisms discovered from equal leaves prune sibling
//! branches, which keeps highly symmetric graphs (empty, complete,
//! complete multipartite) far away from factorial behavior.

use crate::graph::Graph;
use std::fmt;

/// Certified size bound for canonical labeling.
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonError {
    TooLarge { n: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::TooLarge { n } => {
                write!(
                    f,
                    "canonical labeling capped at {MAX_CANON_VERTICES} vertices, got {n}"
                )
            }
        }
    }
}

impl std::error::Error for CanonError {}

/// Isomorphism certificate: two graphs get equal codes iff they are
/// isomorphic. Bytes are the vertex count followed by the packed upper
/// triangle of the canonically relabeled adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn n(&self) -> usize {
        self.bytes[0] as usize
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(n={}, ", self.n())?;
        for b in &self.bytes[1..] {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Canonical code of a graph.
pub fn canonical_form(g: &Graph) -> Result<CanonicalCode, CanonError> {
    canonical_labeling(g).map(|(code, _)| code)
}

/// Canonical code plus the canonically relabeled copy of the graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Graph), CanonError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(CanonError::TooLarge { n });
    }
    let mut search = Search {
        g,
        n,
        best: None,
        generators: Vec::new(),
        prefix: Vec::new(),
    };
    search.descend(vec![0; n]);
    let (bits, perm) = search.best.expect("search visits at least one leaf");

    let mut bytes = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(8));
    bytes.push(n as u8);
    bytes.extend_from_slice(&pack_bits(&bits, n));
    Ok((CanonicalCode { bytes }, g.relabel(&perm)))
}

/// Upper-triangle adjacency bits (row-major) as booleans, then packed.
fn pack_bits(bits: &[bool], n: usize) -> Vec<u8> {
    let mut out = vec![0u8; (n * (n - 1) / 2).div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            out[i / 8] |= 1 << (7 - i % 8);
        }
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// smallest leaf so far: triangle bits and the permutation producing them
    best: Option<(Vec<bool>, Vec<usize>)>,
    /// automorphisms discovered from equal-code leaf pairs
    generators: Vec<Vec<usize>>,
    /// vertices individualized on the current search path
    prefix: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, coloring: Vec<usize>) {
        let coloring = self.refine(coloring);
        let cells = cells_of(&coloring, self.n);

        if cells.iter().all(|c| c.len() == 1) {
            self.visit_leaf(&coloring);
            return;
        }

        let target = cells
            .iter()
            .find(|c| c.len() > 1)
            .expect("non-discrete partition has a splittable cell");

        // union-find over the target cell under generators that fix the
        // current prefix pointwise; branches inside one orbit are equivalent
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gen in &self.generators {
            if self.prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            for &v in target {
                union(&mut parent, v, gen[v]);
            }
        }

        let mut tried_roots: Vec<usize> = Vec::new();
        for &w in target {
            let root = find(&mut parent, w);
            if tried_roots.contains(&root) {
                continue;
            }
            tried_roots.push(root);

            // individualize w: it becomes a singleton cell ahead of its cellmates
            let mut next = coloring.clone();
            for (v, color) in next.iter_mut().enumerate() {
                if *color > coloring[w] || (*color == coloring[w] && v != w) {
                    *color += 1;
                }
            }
            self.prefix.push(w);
            self.descend(next);
            self.prefix.pop();

            // fold any newly found generators into the orbit structure
            for gen in &self.generators {
                if self.prefix.iter().any(|&p| gen[p] != p) {
                    continue;
                }
                for &v in target {
                    union(&mut parent, v, gen[v]);
                }
            }
        }
    }

    /// 1-dimensional Weisfeiler-Leman refinement. Cell order is derived
    /// from sorted (old color, neighbor profile) keys, so it is invariant
    /// under relabeling.
    fn refine(&self, mut coloring: Vec<usize>) -> Vec<usize> {
        loop {
            let color_count = coloring.iter().max().unwrap() + 1;
            let mut masks = vec![0u64; color_count];
            for v in 0..self.n {
                masks[coloring[v]] |= 1 << v;
            }
            let keys: Vec<(usize, Vec<u32>)> = (0..self.n)
                .map(|v| {
                    let nbr = self.g.neighbors(v).bits();
                    let profile = masks.iter().map(|&m| (nbr & m).count_ones()).collect();
                    (coloring[v], profile)
                })
                .collect();
            let mut sorted: Vec<&(usize, Vec<u32>)> = keys.iter().collect();
            sorted.sort();
            sorted.dedup();
            let new_count = sorted.len();
            let next: Vec<usize> = keys
                .iter()
                .map(|k| sorted.binary_search(&k).unwrap())
                .collect();
            if new_count == color_count {
                return next;
            }
            coloring = next;
        }
    }

    fn visit_leaf(&mut self, coloring: &[usize]) {
        // perm[v] = canonical position of v
        let perm: Vec<usize> = coloring.to_vec();
        let mut inv = vec![0usize; self.n];
        for v in 0..self.n {
            inv[perm[v]] = v;
        }
        let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                bits.push(self.g.has_edge(inv[i], inv[j]));
            }
        }
        match &self.best {
            None => self.best = Some((bits, perm)),
            Some((best_bits, best_perm)) => {
                if bits < *best_bits {
                    self.best = Some((bits, perm));
                } else if bits == *best_bits {
                    // equal leaves compose to an automorphism
                    let mut inv_best = vec![0usize; self.n];
                    for v in 0..self.n {
                        inv_best[best_perm[v]] = v;
                    }
                    let auto: Vec<usize> = (0..self.n).map(|v| inv_best[perm[v]]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w)
                        && !self.generators.contains(&auto)
                    {
                        debug_assert!(is_automorphism(self.g, &auto));
                        self.generators.push(auto);
                    }
                }
            }
        }
    }
}

fn cells_of(coloring: &[usize], n: usize) -> Vec<Vec<usize>> {
    let count = coloring.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); count];
    for v in 0..n {
        cells[coloring[v]].push(v);
    }
    cells
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

fn is_automorphism(g: &Graph, perm: &[usize]) -> bool {
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v])))
}
