//! Coordinatizations and orthogonal-basis generation.
//!
//! A coordinatization binds a ray to every vertex of an MMPH; verification
//! confirms that the rays of each hyperedge are pairwise orthogonal (for a
//! rank-sized hyperedge, that certifies a basis). Going the other way,
//! [`generate_bases`] builds the full MMPH of orthogonal bases over a ray
//! set: hyperedges are exactly the rank-sized cliques of the orthogonality
//! graph, enumerated with Bron-Kerbosch pivoting. At most `n` nonzero
//! vectors of dimension `n` are mutually orthogonal, so every such clique
//! is maximal and the enumeration is exhaustive.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::hypergraph::{Hyperedge, Mmph};
use crate::label::VertexLabel;
use crate::ray::{Ray, RayError};
use crate::text::VectorTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoordError {
    #[error("table dimension {dimension} does not match MMPH rank {rank}")]
    RankMismatch { rank: usize, dimension: usize },
    #[error("no ray for vertex {0}")]
    MissingVertex(VertexLabel),
}

/// One non-orthogonal pair inside a hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFailure {
    pub edge: usize,
    pub first: VertexLabel,
    pub second: VertexLabel,
    pub inner_product: BigInt,
}

impl fmt::Display for PairFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "hyperedge {}: {}·{} = {}",
            self.edge, self.first, self.second, self.inner_product
        )
    }
}

/// Per-hyperedge orthogonality check result; empty failures = verified.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub failures: Vec<PairFailure>,
    pub pairs_checked: usize,
}

impl VerificationReport {
    pub fn is_orthogonal(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A total, faithful binding of rays to the vertices of an MMPH.
pub struct Coordinatization<'a> {
    mmph: &'a Mmph,
    rays: Vec<Ray>,
}

impl<'a> Coordinatization<'a> {
    /// Binds a table to an MMPH: dimension must equal the rank and every
    /// vertex must have a ray. Extra table entries are ignored.
    /// Faithfulness (distinct vertices on distinct rays) is a table
    /// invariant, enforced at insertion.
    pub fn bind(mmph: &'a Mmph, table: &VectorTable) -> Result<Self, CoordError> {
        if table.dimension() != mmph.rank() {
            return Err(CoordError::RankMismatch {
                rank: mmph.rank(),
                dimension: table.dimension(),
            });
        }
        let mut rays = Vec::with_capacity(mmph.vertex_count());
        for &label in mmph.labels() {
            match table.get(&label) {
                Some(r) => rays.push(r.clone()),
                None => return Err(CoordError::MissingVertex(label)),
            }
        }
        Ok(Coordinatization { mmph, rays })
    }

    pub fn ray(&self, vertex_id: usize) -> &Ray {
        &self.rays[vertex_id]
    }

    /// Checks every pair within every hyperedge for orthogonality.
    pub fn verify(&self) -> VerificationReport {
        let mut report = VerificationReport::default();
        for (i, edge) in self.mmph.edges().enumerate() {
            for (a, &u) in edge.iter().enumerate() {
                for &v in &edge[a + 1..] {
                    report.pairs_checked += 1;
                    let p = self.rays[u]
                        .inner_product(&self.rays[v])
                        .expect("equal dimensions by construction");
                    if !p.is_zero() {
                        report.failures.push(PairFailure {
                            edge: i,
                            first: self.mmph.label(u),
                            second: self.mmph.label(v),
                            inner_product: p,
                        });
                    }
                }
            }
        }
        report
    }
}

/// Binds and verifies in one step.
pub fn verify_coordinatization(
    mmph: &Mmph,
    table: &VectorTable,
) -> Result<VerificationReport, CoordError> {
    Ok(Coordinatization::bind(mmph, table)?.verify())
}

/// Fixed-capacity bitset used for clique enumeration.
#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn test(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn and_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn and_not(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Pairwise orthogonality relation over a set of rays.
pub struct OrthogonalityGraph {
    rays: Vec<Ray>,
    adj: Vec<Bits>,
}

impl OrthogonalityGraph {
    /// Builds the graph; all rays must share one dimension. The relation is
    /// symmetric and irreflexive (a nonzero integer vector has positive
    /// inner product with itself).
    pub fn build(rays: &[Ray]) -> Result<Self, RayError> {
        let n = rays.len();
        let mut adj = vec![Bits::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if rays[i].is_orthogonal_to(&rays[j])? {
                    adj[i].set(j);
                    adj[j].set(i);
                }
            }
        }
        Ok(OrthogonalityGraph {
            rays: rays.to_vec(),
            adj,
        })
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    pub fn are_orthogonal(&self, i: usize, j: usize) -> bool {
        self.adj[i].test(j)
    }

    /// All cliques of exactly `size` vertices, via Bron-Kerbosch with
    /// pivoting. Branches that cannot reach `size` are cut.
    pub fn cliques_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let n = self.rays.len();
        let mut p = Bits::new(n);
        for i in 0..n {
            p.set(i);
        }
        let x = Bits::new(n);
        let mut out = Vec::new();
        let mut r = Vec::new();
        self.bron_kerbosch(&mut r, p, x, size, &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Bits,
        x: Bits,
        size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r.len() + p.count() < size {
            return;
        }
        if p.is_empty() && x.is_empty() {
            if r.len() == size {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        // pivot: vertex of p∪x with most neighbours inside p
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| self.adj[u].and_count(&p))
            .expect("p or x nonempty");
        let mut p = p;
        let mut x = x;
        let candidates: Vec<usize> = p.and_not(&self.adj[pivot]).ones().collect();
        for v in candidates {
            r.push(v);
            self.bron_kerbosch(r, p.and(&self.adj[v]), x.and(&self.adj[v]), size, out);
            r.pop();
            p.clear(v);
            x.set(v);
        }
    }
}

/// The MMPH of orthogonal bases over a ray set, with its coordinatization.
pub struct GeneratedBases {
    pub mmph: Mmph,
    pub table: VectorTable,
    /// Input rays (after dedup) that appear in no basis and were dropped.
    pub unused_rays: Vec<Ray>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BasesError {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error(transparent)]
    Ray(#[from] RayError),
}

/// Builds the MMPH whose hyperedges are exactly the `dimension`-sized
/// mutually-orthogonal subsets of `rays`. Input order is irrelevant: rays
/// are sorted and deduplicated, labels are assigned to the surviving rays
/// in sorted order, and hyperedges come out lexicographically sorted.
/// Rays in no basis are excluded from the result.
pub fn generate_bases(rays: &[Ray], dimension: usize) -> Result<GeneratedBases, BasesError> {
    if dimension < 2 {
        return Err(BasesError::DimensionTooSmall(dimension));
    }
    let mut sorted: Vec<Ray> = rays.to_vec();
    for r in &sorted {
        if r.dimension() != dimension {
            return Err(BasesError::Ray(RayError::DimensionMismatch {
                left: r.dimension(),
                right: dimension,
            }));
        }
    }
    sorted.sort();
    sorted.dedup();
    let graph = OrthogonalityGraph::build(&sorted)?;
    let cliques = graph.cliques_of_size(dimension);

    let mut used = vec![false; sorted.len()];
    for c in &cliques {
        for &i in c {
            used[i] = true;
        }
    }
    let mut remap = vec![usize::MAX; sorted.len()];
    let mut table = VectorTable::new(dimension);
    let mut next = 0u64;
    let mut unused_rays = Vec::new();
    for (i, ray) in sorted.iter().enumerate() {
        if used[i] {
            let label = VertexLabel::from_index(next);
            remap[i] = next as usize;
            next += 1;
            table
                .insert(label, ray.clone())
                .expect("sorted rays are distinct");
        } else {
            unused_rays.push(ray.clone());
        }
    }
    let mut edges: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| c.iter().map(|&i| remap[i]).collect())
        .collect();
    edges.sort();
    let hyperedges = edges
        .into_iter()
        .map(|e| {
            Hyperedge::new(
                e.into_iter()
                    .map(|i| VertexLabel::from_index(i as u64))
                    .collect(),
            )
            .expect("clique members are distinct")
        })
        .collect();
    let mmph = Mmph::new(dimension, hyperedges).expect("structurally sound");
    Ok(GeneratedBases {
        mmph,
        table,
        unused_rays,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_mmph, parse_vectors};

    #[test]
    fn standard_basis_yields_one_hyperedge() {
        let rays: Vec<Ray> = (0..4)
            .map(|i| {
                let mut v = [0i64; 4];
                v[i] = 1;
                Ray::from_ints(&v).unwrap()
            })
            .collect();
        let g = generate_bases(&rays, 4).unwrap();
        assert_eq!(g.mmph.edge_count(), 1);
        assert_eq!(g.mmph.vertex_count(), 4);
        assert!(g.unused_rays.is_empty());
    }

    #[test]
    fn rays_outside_every_basis_are_dropped() {
        let rays = vec![
            Ray::from_ints(&[1, 0]).unwrap(),
            Ray::from_ints(&[0, 1]).unwrap(),
            Ray::from_ints(&[1, 2]).unwrap(),
        ];
        let g = generate_bases(&rays, 2).unwrap();
        assert_eq!(g.mmph.edge_count(), 1);
        assert_eq!(g.mmph.vertex_count(), 2);
        assert_eq!(g.unused_rays.len(), 1);
    }

    #[test]
    fn generation_is_input_order_invariant() {
        let mut rays = vec![
            Ray::from_ints(&[1, 0, 0]).unwrap(),
            Ray::from_ints(&[0, 1, 0]).unwrap(),
            Ray::from_ints(&[0, 0, 1]).unwrap(),
            Ray::from_ints(&[0, 1, 1]).unwrap(),
            Ray::from_ints(&[0, 1, -1]).unwrap(),
        ];
        let a = generate_bases(&rays, 3).unwrap();
        rays.reverse();
        let b = generate_bases(&rays, 3).unwrap();
        assert_eq!(a.mmph, b.mmph);
        assert_eq!(a.table, b.table);
        assert_eq!(a.mmph.edge_count(), 2);
    }

    #[test]
    fn verify_flags_failing_pair() {
        let m = parse_mmph("12.", 2).unwrap();
        let t = parse_vectors("1 = (1,0)\n2 = (1,1)\n", 2).unwrap();
        let report = verify_coordinatization(&m, &t).unwrap();
        assert!(!report.is_orthogonal());
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].inner_product, BigInt::from(1));
        assert_eq!(report.pairs_checked, 1);
    }

    #[test]
    fn bind_requires_total_table_and_matching_rank() {
        let m = parse_mmph("12.", 2).unwrap();
        let t = parse_vectors("1 = (1,0)\n", 2).unwrap();
        assert!(matches!(
            verify_coordinatization(&m, &t),
            Err(CoordError::MissingVertex(_))
        ));
        let t3 = parse_vectors("1 = (1,0,0)\n2 = (0,1,0)\n", 3).unwrap();
        assert!(matches!(
            verify_coordinatization(&m, &t3),
            Err(CoordError::RankMismatch { rank: 2, dimension: 3 })
        ));
    }
}
