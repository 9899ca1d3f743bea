//! Longest-cycle segment decompositions: the structure the thm2 argument
//! inspects around a cycle and one off-cycle component.
//!
//! Given a cycle C and a component H of the rest, the contact vertices are
//! the cycle vertices with a neighbor in H; consecutive contacts cut C into
//! elementary segments. An intermediate path joins the interiors of two
//! distinct segments while avoiding C and H internally. These are
//! diagnostics: the harness asserts on small universes that whenever no
//! intermediate path exists at all, deleting the contacts leaves at least
//! s+1 components.

use crate::cycles::{CertError, CycleCert, PathWitness};
use crate::graph::{Graph, VertexSet};
use std::fmt;

/// One arc of the cycle between consecutive contact vertices (inclusive
/// endpoints); the interior excludes both contacts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementarySegment {
    pub from: usize,
    pub to: usize,
    /// Cycle vertices from `from` to `to` along the orientation.
    pub arc: Vec<usize>,
    pub interior: VertexSet,
}

/// The decomposition induced by one off-cycle component.
#[derive(Clone, Debug)]
pub struct SegmentDecomposition {
    pub cycle: CycleCert,
    pub component: VertexSet,
    /// Contact vertices in cycle order, starting from the cycle's head.
    pub contacts: Vec<usize>,
    pub segments: Vec<ElementarySegment>,
    /// All intermediate paths on two or three vertices, deterministic order.
    pub intermediate_paths: Vec<PathWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentError {
    InvalidCycle(CertError),
    /// The cycle already covers every vertex.
    NothingOffCycle,
}

impl fmt::Display for SegmentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentError::InvalidCycle(e) => write!(f, "invalid cycle certificate: {e}"),
            SegmentError::NothingOffCycle => write!(f, "cycle covers all vertices"),
        }
    }
}

impl std::error::Error for SegmentError {}

impl SegmentDecomposition {
    /// Contact successors along the cycle orientation (the set {contacts}+).
    pub fn contact_successors(&self) -> Vec<usize> {
        self.contacts
            .iter()
            .map(|&c| {
                self.cycle
                    .successor(c, 1)
                    .expect("contact lies on the cycle")
            })
            .collect()
    }

    pub fn contact_set(&self) -> VertexSet {
        self.contacts.iter().copied().collect()
    }

    /// Exact emptiness test for the full set of intermediate paths, with no
    /// length bound. A path of any length exists iff two distinct segment
    /// interiors are joined by an edge, or some component of the graph away
    /// from the cycle and H touches the interiors of two distinct segments.
    pub fn has_any_intermediate_path(&self, g: &Graph) -> bool {
        let interiors: Vec<VertexSet> = self.segments.iter().map(|s| s.interior).collect();
        for (a, sa) in interiors.iter().enumerate() {
            for sb in interiors.iter().skip(a + 1) {
                for z in sa.iter() {
                    if !g.neighbors(z).intersect(*sb).is_empty() {
                        return true;
                    }
                }
            }
        }
        let outside = g
            .vertices()
            .minus(self.cycle.vertex_set())
            .minus(self.component);
        let mut remaining = outside;
        while let Some(v) = remaining.smallest() {
            let comp = g.reachable(v, remaining);
            remaining = remaining.minus(comp);
            let mut touched = 0;
            for s in &interiors {
                let joins = s.iter().any(|z| !g.neighbors(z).intersect(comp).is_empty());
                if joins {
                    touched += 1;
                    if touched >= 2 {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Decomposes the graph around a cycle: one decomposition per component of
/// the off-cycle part, each listing contacts, elementary segments, and all
/// intermediate paths on at most three vertices.
pub fn segment_decomposition(
    g: &Graph,
    cycle: &CycleCert,
) -> Result<Vec<SegmentDecomposition>, SegmentError> {
    cycle.validate(g).map_err(SegmentError::InvalidCycle)?;
    let on_cycle = cycle.vertex_set();
    let off = g.vertices().minus(on_cycle);
    if off.is_empty() {
        return Err(SegmentError::NothingOffCycle);
    }

    let mut out = Vec::new();
    let mut remaining = off;
    while let Some(v) = remaining.smallest() {
        let component = g.reachable(v, remaining);
        remaining = remaining.minus(component);

        // contacts in cycle order from the certificate's head
        let contacts: Vec<usize> = cycle
            .seq()
            .iter()
            .copied()
            .filter(|&c| !g.neighbors(c).intersect(component).is_empty())
            .collect();

        let segments = build_segments(cycle, &contacts);
        let intermediate_paths = short_intermediate_paths(g, &segments, on_cycle, component);
        out.push(SegmentDecomposition {
            cycle: cycle.clone(),
            component,
            contacts,
            segments,
            intermediate_paths,
        });
    }
    Ok(out)
}

fn build_segments(cycle: &CycleCert, contacts: &[usize]) -> Vec<ElementarySegment> {
    let seq = cycle.seq();
    let t = seq.len();
    let pos_of = |v: usize| seq.iter().position(|&x| x == v).expect("contact on cycle");
    let s = contacts.len();
    let mut segments = Vec::with_capacity(s);
    if s == 0 {
        return segments;
    }
    for i in 0..s {
        let from = contacts[i];
        let to = contacts[(i + 1) % s];
        // walk the orientation until the next contact; with a single
        // contact this wraps the whole cycle back to it
        let mut p = pos_of(from);
        let mut arc = vec![from];
        loop {
            p = (p + 1) % t;
            arc.push(seq[p]);
            if seq[p] == to {
                break;
            }
        }
        let interior: VertexSet = arc[1..arc.len() - 1].iter().copied().collect();
        segments.push(ElementarySegment {
            from,
            to,
            arc,
            interior,
        });
    }
    segments
}

/// Intermediate paths with two or three vertices: interior-to-interior
/// edges across distinct segments, and two-edge paths through a vertex
/// that lies on neither the cycle nor the component.
fn short_intermediate_paths(
    g: &Graph,
    segments: &[ElementarySegment],
    on_cycle: VertexSet,
    component: VertexSet,
) -> Vec<PathWitness> {
    let outside = g.vertices().minus(on_cycle).minus(component);
    let mut paths = Vec::new();
    for (a, sa) in segments.iter().enumerate() {
        for sb in segments.iter().skip(a + 1) {
            for z in sa.interior.iter() {
                for w in sb.interior.iter() {
                    if g.has_edge(z, w) {
                        paths.push(PathWitness::new(vec![z, w]));
                    }
                    for m in outside.iter() {
                        if g.has_edge(z, m) && g.has_edge(m, w) {
                            paths.push(PathWitness::new(vec![z, m, w]));
                        }
                    }
                }
            }
        }
    }
    debug_assert!(paths.iter().all(|p| p.validate(g).is_ok()));
    paths
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k23_around_a_four_cycle() {
        let g = Graph::complete_bipartite(2, 3);
        let c = CycleCert::new(vec![0, 2, 1, 3]);
        let decs = segment_decomposition(&g, &c).unwrap();
        assert_eq!(decs.len(), 1);
        let d = &decs[0];
        assert_eq!(d.component, VertexSet::singleton(4));
        assert_eq!(d.contacts, vec![0, 1]);
        assert_eq!(d.segments.len(), 2);
        assert_eq!(d.segments[0].arc, vec![0, 2, 1]);
        assert_eq!(d.segments[0].interior, VertexSet::singleton(2));
        assert_eq!(d.segments[1].arc, vec![1, 3, 0]);
        assert_eq!(d.segments[1].interior, VertexSet::singleton(3));
        // the 3-side vertices 2 and 3 are non-adjacent and nothing lies
        // outside C and H, so no intermediate path exists at any length
        assert!(d.intermediate_paths.is_empty());
        assert!(!d.has_any_intermediate_path(&g));
        // ... and indeed deleting the contacts leaves s+1 = 3 components
        assert_eq!(g.component_count_excluding(d.contact_set()), 3);
    }

    #[test]
    fn h1_around_its_rim() {
        let g = Graph::h1();
        let c = CycleCert::new(vec![0, 1, 2, 3, 4, 5]);
        let decs = segment_decomposition(&g, &c).unwrap();
        assert_eq!(decs.len(), 1);
        let d = &decs[0];
        assert_eq!(d.component, VertexSet::singleton(6));
        assert_eq!(d.contacts, vec![0, 3]);
        assert_eq!(d.segments.len(), 2);
        assert_eq!(d.segments[0].interior, [1, 2].into_iter().collect());
        assert_eq!(d.segments[1].interior, [4, 5].into_iter().collect());
        // the rim chord 1-5 joins the two interiors directly
        assert_eq!(d.intermediate_paths.len(), 1);
        assert_eq!(d.intermediate_paths[0].seq(), &[1, 5]);
        assert!(d.has_any_intermediate_path(&g));
        assert_eq!(d.contact_successors(), vec![1, 4]);
    }

    #[test]
    fn hamiltonian_cycle_leaves_nothing() {
        let g = Graph::cycle(5);
        let c = CycleCert::new(vec![0, 1, 2, 3, 4]);
        assert!(matches!(
            segment_decomposition(&g, &c),
            Err(SegmentError::NothingOffCycle)
        ));
    }

    #[test]
    fn invalid_cycles_are_rejected() {
        let g = Graph::complete_bipartite(2, 3);
        let bogus = CycleCert::new(vec![0, 1, 2]);
        assert!(matches!(
            segment_decomposition(&g, &bogus),
            Err(SegmentError::InvalidCycle(_))
        ));
    }

    #[test]
    fn single_contact_wraps_the_cycle() {
        // triangle plus a pendant path attached at one vertex
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        let c = CycleCert::new(vec![0, 1, 2]);
        let decs = segment_decomposition(&g, &c).unwrap();
        assert_eq!(decs.len(), 1);
        let d = &decs[0];
        assert_eq!(d.contacts, vec![0]);
        assert_eq!(d.segments.len(), 1);
        assert_eq!(d.segments[0].arc, vec![0, 1, 2, 0]);
        assert_eq!(d.segments[0].interior, [1, 2].into_iter().collect());
        assert!(!d.has_any_intermediate_path(&g));
        // one contact, and deleting it leaves H and the interior: s+1 = 2
        assert_eq!(g.component_count_excluding(d.contact_set()), 2);
    }

    #[test]
    fn three_vertex_paths_through_outside_vertices() {
        // 6-cycle, one component hanging off vertices 0 and 3, and an
        // outside vertex 7 bridging the two segment interiors 1 and 4
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (6, 0),
                (6, 3),
                (7, 1),
                (7, 4),
            ],
        );
        let c = CycleCert::new(vec![0, 1, 2, 3, 4, 5]);
        let decs = segment_decomposition(&g, &c).unwrap();
        // components off the cycle: {6} and {7}
        assert_eq!(decs.len(), 2);
        let d6 = decs.iter().find(|d| d.component.contains(6)).unwrap();
        assert_eq!(d6.contacts, vec![0, 3]);
        let through7: Vec<_> = d6
            .intermediate_paths
            .iter()
            .filter(|p| p.seq().len() == 3)
            .collect();
        assert_eq!(through7.len(), 1);
        assert_eq!(through7[0].seq(), &[1, 7, 4]);
        assert!(d6.has_any_intermediate_path(&g));
    }
}
