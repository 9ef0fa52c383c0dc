//! Decomposition of the symmetric difference of two matchings into
//! alternating paths and cycles.
//!
//! Every vertex touches at most one edge of each matching, so the edges
//! lying in exactly one of the two matchings form disjoint paths and
//! even cycles whose edge labels alternate. Edges common to both
//! matchings are reported separately.

use crate::graph::{Side, Vertex};
use crate::matching::Matching;

/// Which input matching an edge of the symmetric difference came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    First,
    Second,
}

impl EdgeLabel {
    fn flip(self) -> EdgeLabel {
        match self {
            EdgeLabel::First => EdgeLabel::Second,
            EdgeLabel::Second => EdgeLabel::First,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One connected component of the symmetric difference.
///
/// `edge_labels[i]` labels the edge between `vertices[i]` and
/// `vertices[i + 1]`; for a cycle the last label closes it back to
/// `vertices[0]`, so a cycle has as many labels as vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDiffComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<Vertex>,
    pub edge_labels: Vec<EdgeLabel>,
}

/// Full decomposition: alternating components plus the edges present in
/// both matchings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricDifference {
    pub components: Vec<SymDiffComponent>,
    /// Edges in both matchings, ascending by S index.
    pub common_edges: Vec<(usize, usize)>,
}

/// Splits the edges lying in exactly one of `m1`, `m2` into alternating
/// paths and cycles. Paths are discovered from their endpoints in
/// (side S, then T, ascending index) order; cycles start at their
/// lowest S vertex and follow the first-matching edge first, so the
/// output is deterministic.
pub fn symmetric_difference(m1: &Matching, m2: &Matching) -> SymmetricDifference {
    assert_eq!(m1.n_s(), m2.n_s(), "matchings are on the same graph");
    assert_eq!(m1.n_t(), m2.n_t(), "matchings are on the same graph");

    let common_edges: Vec<(usize, usize)> = m1
        .pairs()
        .filter(|&(s, t)| m2.mate_of_s(s) == Some(t))
        .collect();

    let partner = |v: Vertex, label: EdgeLabel| -> Option<usize> {
        let (own, other) = match label {
            EdgeLabel::First => (m1, m2),
            EdgeLabel::Second => (m2, m1),
        };
        match own.mate(v) {
            Some(p) if other.mate(v) != Some(p) => Some(p),
            _ => None,
        }
    };

    let mut visited_s = vec![false; m1.n_s()];
    let mut visited_t = vec![false; m1.n_t()];
    let mut components = Vec::new();

    {
        let visit = |v: Vertex, visited_s: &mut [bool], visited_t: &mut [bool]| match v.side {
            Side::S => visited_s[v.index] = true,
            Side::T => visited_t[v.index] = true,
        };

        // Paths start at degree-one vertices.
        let endpoints: Vec<Vertex> = (0..m1.n_s())
            .map(Vertex::s)
            .chain((0..m1.n_t()).map(Vertex::t))
            .collect();
        for &start in &endpoints {
            let already = match start.side {
                Side::S => visited_s[start.index],
                Side::T => visited_t[start.index],
            };
            if already {
                continue;
            }
            let first = partner(start, EdgeLabel::First);
            let second = partner(start, EdgeLabel::Second);
            let label = match (first, second) {
                (Some(_), None) => EdgeLabel::First,
                (None, Some(_)) => EdgeLabel::Second,
                _ => continue, // isolated or interior vertex
            };

            let mut vertices = vec![start];
            let mut edge_labels = Vec::new();
            visit(start, &mut visited_s, &mut visited_t);
            let mut current = start;
            let mut next_label = label;
            while let Some(p) = partner(current, next_label) {
                let next = Vertex {
                    side: current.side.opposite(),
                    index: p,
                };
                edge_labels.push(next_label);
                vertices.push(next);
                visit(next, &mut visited_s, &mut visited_t);
                current = next;
                next_label = next_label.flip();
            }
            components.push(SymDiffComponent {
                kind: ComponentKind::Path,
                vertices,
                edge_labels,
            });
        }

        // What remains are cycles; every cycle contains an S vertex.
        for s in 0..m1.n_s() {
            let start = Vertex::s(s);
            if visited_s[s] || partner(start, EdgeLabel::First).is_none() {
                continue;
            }
            debug_assert!(partner(start, EdgeLabel::Second).is_some());
            let mut vertices = vec![start];
            let mut edge_labels = Vec::new();
            visit(start, &mut visited_s, &mut visited_t);
            let mut current = start;
            let mut next_label = EdgeLabel::First;
            loop {
                let p = partner(current, next_label).expect("cycle vertices have both partners");
                let next = Vertex {
                    side: current.side.opposite(),
                    index: p,
                };
                edge_labels.push(next_label);
                if next == start {
                    break;
                }
                vertices.push(next);
                visit(next, &mut visited_s, &mut visited_t);
                current = next;
                next_label = next_label.flip();
            }
            components.push(SymDiffComponent {
                kind: ComponentKind::Cycle,
                vertices,
                edge_labels,
            });
        }
    }

    SymmetricDifference {
        components,
        common_edges,
    }
}
