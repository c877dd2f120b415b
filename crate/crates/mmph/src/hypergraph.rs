//! The MMPH hypergraph: `k` labeled vertices, `l` hyperedges of size
//! 2..=rank, pairwise intersections at most rank−2, connected.
//!
//! Vertices exist only through hyperedge membership; the vertex table is the
//! first-appearance order of labels across the edge list, and both hyperedge
//! order and intra-edge vertex order are preserved so that serialization is
//! lossless. Structural equality (`==`) includes that order; use
//! [`crate::canon::isomorphic`] for order- and label-insensitive comparison.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::label::VertexLabel;

/// One hyperedge as an ordered, duplicate-free sequence of labels.
///
/// Equality is set-semantic; the stored order only matters for round trips.
#[derive(Clone, Debug, Eq)]
pub struct Hyperedge {
    vertices: Vec<VertexLabel>,
}

impl Hyperedge {
    pub fn new(vertices: Vec<VertexLabel>) -> Result<Self, BuildError> {
        if vertices.is_empty() {
            return Err(BuildError::EmptyEdge);
        }
        let mut seen = HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(BuildError::DuplicateVertexInEdge { label: v });
            }
        }
        Ok(Hyperedge { vertices })
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.vertices.contains(v)
    }
}

impl PartialEq for Hyperedge {
    fn eq(&self, other: &Self) -> bool {
        if self.vertices.len() != other.vertices.len() {
            return false;
        }
        let mut a: Vec<_> = self.vertices.clone();
        let mut b: Vec<_> = other.vertices.clone();
        a.sort();
        b.sort();
        a == b
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("hyperedge contains duplicate vertex {label}")]
    DuplicateVertexInEdge { label: VertexLabel },
    #[error("hyperedge is empty")]
    EmptyEdge,
    #[error("rank must be at least 2, got {rank}")]
    RankTooSmall { rank: usize },
}

/// A structural violation found by [`Mmph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Hyperedge has fewer than 2 vertices.
    EdgeTooSmall { edge: usize, size: usize },
    /// Hyperedge has more vertices than the rank allows.
    EdgeExceedsRank { edge: usize, size: usize, rank: usize },
    /// Two hyperedges are equal as vertex sets.
    DuplicateEdges { first: usize, second: usize },
    /// Two hyperedges share more than rank−2 vertices.
    ExcessiveOverlap {
        first: usize,
        second: usize,
        shared: usize,
        limit: usize,
    },
    /// Strict mode only: two hyperedges share exactly one vertex.
    SingleVertexOverlap { first: usize, second: usize },
    /// The vertex–hyperedge incidence graph is not connected.
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeTooSmall { edge, size } => {
                write!(f, "hyperedge {edge} has {size} vertices (minimum 2)")
            }
            Violation::EdgeExceedsRank { edge, size, rank } => {
                write!(f, "hyperedge {edge} has {size} vertices (rank {rank})")
            }
            Violation::DuplicateEdges { first, second } => {
                write!(f, "hyperedges {first} and {second} are equal as sets")
            }
            Violation::ExcessiveOverlap {
                first,
                second,
                shared,
                limit,
            } => write!(
                f,
                "hyperedges {first} and {second} share {shared} vertices (limit {limit})"
            ),
            Violation::SingleVertexOverlap { first, second } => {
                write!(f, "hyperedges {first} and {second} share only one vertex")
            }
            Violation::Disconnected { components } => {
                write!(f, "hypergraph has {components} connected components")
            }
        }
    }
}

/// Outcome of structural validation; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The hypergraph itself. Immutable after construction; the editing
/// operations (`without_edge`, vertex stripping) return new values.
#[derive(Clone, PartialEq, Eq)]
pub struct Mmph {
    rank: usize,
    labels: Vec<VertexLabel>,
    /// Edges as dense vertex ids into `labels`, source order preserved.
    edges: Vec<Vec<usize>>,
}

impl Mmph {
    pub fn new(rank: usize, edges: Vec<Hyperedge>) -> Result<Self, BuildError> {
        if rank < 2 {
            return Err(BuildError::RankTooSmall { rank });
        }
        let mut labels: Vec<VertexLabel> = Vec::new();
        let mut index: HashMap<VertexLabel, usize> = HashMap::new();
        let mut id_edges = Vec::with_capacity(edges.len());
        for e in &edges {
            let mut ids = Vec::with_capacity(e.len());
            for &v in e.vertices() {
                let id = *index.entry(v).or_insert_with(|| {
                    labels.push(v);
                    labels.len() - 1
                });
                ids.push(id);
            }
            id_edges.push(ids);
        }
        Ok(Mmph {
            rank,
            labels,
            edges: id_edges,
        })
    }

    /// Declared rank: the maximum hyperedge size and, for coordinatized
    /// hypergraphs, the space dimension. Stored explicitly because stripping
    /// can shrink every hyperedge below it.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// k: number of distinct vertices.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// l: number of hyperedges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The `k-l` name, e.g. `31-15`.
    pub fn name(&self) -> String {
        format!("{}-{}", self.vertex_count(), self.edge_count())
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> VertexLabel {
        self.labels[id]
    }

    pub fn vertex_id(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edge as dense vertex ids, in source order.
    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub(crate) fn raw_edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> {
        self.edges.iter().map(|e| e.as_slice())
    }

    pub fn edge_labels(&self, i: usize) -> impl Iterator<Item = VertexLabel> + '_ {
        self.edges[i].iter().map(|&id| self.labels[id])
    }

    /// Number of hyperedges containing each vertex, by dense id.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.labels.len()];
        for e in &self.edges {
            for &v in e {
                m[v] += 1;
            }
        }
        m
    }

    /// Number of hyperedges containing each vertex, keyed by label.
    pub fn vertex_multiplicities(&self) -> BTreeMap<VertexLabel, usize> {
        self.multiplicities()
            .into_iter()
            .enumerate()
            .map(|(id, m)| (self.labels[id], m))
            .collect()
    }

    /// Structural validation; checks conditions on edge sizes, duplicate
    /// edges, pairwise intersections and connectivity. The single-shared-
    /// vertex condition is only reported in strict mode: the published
    /// corpus routinely contains hyperedge pairs sharing exactly one vertex.
    pub fn validate(&self) -> ValidationReport {
        self.validate_with(false)
    }

    pub fn validate_strict(&self) -> ValidationReport {
        self.validate_with(true)
    }

    pub fn validate_with(&self, strict: bool) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() < 2 {
                violations.push(Violation::EdgeTooSmall {
                    edge: i,
                    size: e.len(),
                });
            }
            if e.len() > self.rank {
                violations.push(Violation::EdgeExceedsRank {
                    edge: i,
                    size: e.len(),
                    rank: self.rank,
                });
            }
        }
        let sets: Vec<HashSet<usize>> = self
            .edges
            .iter()
            .map(|e| e.iter().copied().collect())
            .collect();
        let limit = self.rank.saturating_sub(2);
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let shared = sets[i].intersection(&sets[j]).count();
                if shared == sets[i].len() && shared == sets[j].len() {
                    violations.push(Violation::DuplicateEdges { first: i, second: j });
                } else if shared > limit {
                    violations.push(Violation::ExcessiveOverlap {
                        first: i,
                        second: j,
                        shared,
                        limit,
                    });
                } else if strict && shared == 1 {
                    violations.push(Violation::SingleVertexOverlap { first: i, second: j });
                }
            }
        }
        let components = self.component_count();
        if components > 1 {
            violations.push(Violation::Disconnected { components });
        }
        ValidationReport { violations }
    }

    fn component_count(&self) -> usize {
        let k = self.labels.len();
        if k == 0 {
            return 0;
        }
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        (0..k).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Removes hyperedge `i`; vertices left in no hyperedge are dropped.
    pub fn without_edge(&self, i: usize) -> Mmph {
        let kept: Vec<&Vec<usize>> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e)
            .collect();
        self.rebuild(&kept)
    }

    /// Rebuilds from id-edges, compacting the label table (drops orphans).
    pub(crate) fn rebuild(&self, edges: &[&Vec<usize>]) -> Mmph {
        let mut map: HashMap<usize, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut new_edges = Vec::with_capacity(edges.len());
        for e in edges {
            let mut ids = Vec::with_capacity(e.len());
            for &v in e.iter() {
                let id = *map.entry(v).or_insert_with(|| {
                    labels.push(self.labels[v]);
                    labels.len() - 1
                });
                ids.push(id);
            }
            new_edges.push(ids);
        }
        Mmph {
            rank: self.rank,
            labels,
            edges: new_edges,
        }
    }
}

impl fmt::Debug for Mmph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mmph({}, rank {})", self.name(), self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_mmph;

    fn edge(s: &str) -> Hyperedge {
        Hyperedge::new(
            s.chars()
                .map(|c| VertexLabel::new(c, 0).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn minimal_legal_mmph_is_valid() {
        let m = Mmph::new(6, vec![edge("12")]).unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edge_count(), 1);
    }

    #[test]
    fn duplicate_edges_are_reported() {
        let m = Mmph::new(6, vec![edge("123456"), edge("123456")]).unwrap();
        let report = m.validate();
        assert_eq!(
            report.violations,
            vec![Violation::DuplicateEdges { first: 0, second: 1 }]
        );
        // same vertices in another order are still duplicates
        let m = Mmph::new(6, vec![edge("123456"), edge("654321")]).unwrap();
        assert!(!m.validate().is_valid());
    }

    #[test]
    fn oversized_intersection_is_reported() {
        // two rank-6 hyperedges sharing 5 vertices violate the rank-2 bound
        let m = Mmph::new(6, vec![edge("123456"), edge("123457")]).unwrap();
        let report = m.validate();
        assert_eq!(
            report.violations,
            vec![Violation::ExcessiveOverlap {
                first: 0,
                second: 1,
                shared: 5,
                limit: 4
            }]
        );
    }

    #[test]
    fn size_bounds_are_reported() {
        let m = Mmph::new(3, vec![edge("1234"), edge("45")]).unwrap();
        assert_eq!(
            m.validate().violations,
            vec![Violation::EdgeExceedsRank {
                edge: 0,
                size: 4,
                rank: 3
            }]
        );
        let m = Mmph::new(3, vec![edge("12"), edge("2"), edge("13")]).unwrap();
        assert!(m
            .validate()
            .violations
            .contains(&Violation::EdgeTooSmall { edge: 1, size: 1 }));
    }

    #[test]
    fn disconnected_is_reported() {
        let m = Mmph::new(4, vec![edge("12"), edge("34")]).unwrap();
        assert_eq!(
            m.validate().violations,
            vec![Violation::Disconnected { components: 2 }]
        );
    }

    #[test]
    fn strict_mode_flags_single_vertex_overlap() {
        let m = Mmph::new(3, vec![edge("12"), edge("23")]).unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(
            m.validate_strict().violations,
            vec![Violation::SingleVertexOverlap { first: 0, second: 1 }]
        );
    }

    #[test]
    fn multiplicities_sum_to_total_edge_size() {
        let m = parse_mmph("12,23,13.", 3).unwrap();
        let mult = m.vertex_multiplicities();
        assert_eq!(mult.values().sum::<usize>(), 6);
        assert!(mult.values().all(|&v| v >= 1));
        let m = parse_mmph("12.", 3).unwrap();
        assert!(m.vertex_multiplicities().values().all(|&v| v == 1));
    }

    #[test]
    fn without_edge_drops_orphans() {
        let m = parse_mmph("123,345.", 3).unwrap();
        let sub = m.without_edge(0);
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edge_count(), 1);
        assert_eq!(sub.rank(), 3);
        let names: Vec<String> = sub.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(names, vec!["3", "4", "5"]);
    }

    #[test]
    fn duplicate_vertex_within_edge_rejected_at_build() {
        let vs = "121"
            .chars()
            .map(|c| VertexLabel::new(c, 0).unwrap())
            .collect();
        assert!(matches!(
            Hyperedge::new(vs),
            Err(BuildError::DuplicateVertexInEdge { .. })
        ));
    }
}
