//! Shared fixture loading, random instance generation, and the
//! independent brute-force oracles the solver suites check against.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;

use mmph::hypergraph::Hyperedge;
use mmph::text::MmphDocument;
use mmph::{parse_vector_document, Mmph, Ray, VectorTable, VertexLabel};

pub struct Fixture {
    pub name: &'static str,
    pub dir: &'static str,
    pub rank: usize,
}

/// The sixteen ground-truth sets, one per (k,l) listing, by dimension:
/// 6D appendix_a, 7D appendix_b, 9D appendix_c, 10D appendix_d,
/// 11D appendix_e, 12D appendix_f, 13D appendix_g, 14D appendix_h,
/// 15D appendix_i, 16D appendix_j.
pub const FIXTURES: [Fixture; 16] = [
    Fixture { name: "31-15", dir: "appendix_a", rank: 6 },
    Fixture { name: "32-16", dir: "appendix_a", rank: 6 },
    Fixture { name: "33-17", dir: "appendix_a", rank: 6 },
    Fixture { name: "34-14", dir: "appendix_b", rank: 7 },
    Fixture { name: "36-15", dir: "appendix_b", rank: 7 },
    Fixture { name: "36-16", dir: "appendix_b", rank: 7 },
    Fixture { name: "40-16", dir: "appendix_b", rank: 7 },
    Fixture { name: "47-16", dir: "appendix_c", rank: 9 },
    Fixture { name: "50-15", dir: "appendix_d", rank: 10 },
    Fixture { name: "50-14", dir: "appendix_e", rank: 11 },
    Fixture { name: "52-9", dir: "appendix_f", rank: 12 },
    Fixture { name: "63-16", dir: "appendix_g", rank: 13 },
    Fixture { name: "67-17", dir: "appendix_g", rank: 13 },
    Fixture { name: "66-15", dir: "appendix_h", rank: 14 },
    Fixture { name: "66-14", dir: "appendix_i", rank: 15 },
    Fixture { name: "70-9", dir: "appendix_j", rank: 16 },
];

pub fn fixtures_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn mmph_path(f: &Fixture) -> PathBuf {
    fixtures_root().join(f.dir).join(format!("{}.mmph", f.name))
}

pub fn vec_path(f: &Fixture) -> PathBuf {
    fixtures_root().join(f.dir).join(format!("{}.vec", f.name))
}

pub fn load_mmph(f: &Fixture) -> Mmph {
    let text = std::fs::read_to_string(mmph_path(f)).expect("fixture file");
    let doc = MmphDocument::parse(&text).expect("fixture parses");
    assert_eq!(doc.rank, f.rank, "{}: header rank", f.name);
    assert_eq!(doc.mmphs.len(), 1, "{}: one MMPH per fixture", f.name);
    doc.mmphs.into_iter().next().expect("one MMPH")
}

pub fn load_table(f: &Fixture) -> VectorTable {
    let text = std::fs::read_to_string(vec_path(f)).expect("fixture file");
    parse_vector_document(&text).expect("fixture table parses")
}

/// 2^k enumeration oracle: returns a valid set of 1-vertices, or None when
/// no assignment gives every hyperedge exactly one 1. Only for k ≤ 25.
pub fn brute_force_colorable(m: &Mmph) -> Option<BTreeSet<VertexLabel>> {
    let k = m.vertex_count();
    assert!(k <= 25, "oracle is exponential; k={k}");
    let masks: Vec<u32> = m
        .edges()
        .map(|e| e.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();
    'outer: for assignment in 0u32..(1u32 << k) {
        for &e in &masks {
            if (assignment & e).count_ones() != 1 {
                continue 'outer;
            }
        }
        return Some(
            (0..k)
                .filter(|&v| assignment >> v & 1 == 1)
                .map(|v| m.label(v))
                .collect(),
        );
    }
    None
}

/// Exhaustive bijection-search oracle for isomorphism, independent of the
/// canonical-form machinery. Backtracks over vertex images with degree
/// pruning and checks the full edge-set correspondence at the leaves.
pub fn brute_force_isomorphic(a: &Mmph, b: &Mmph) -> bool {
    if a.rank() != b.rank()
        || a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
    {
        return false;
    }
    let ka = a.vertex_count();
    let mut deg_a = vec![0usize; ka];
    for e in a.edges() {
        for &v in e {
            deg_a[v] += 1;
        }
    }
    let mut deg_b = vec![0usize; ka];
    for e in b.edges() {
        for &v in e {
            deg_b[v] += 1;
        }
    }
    {
        let mut da = deg_a.clone();
        let mut db = deg_b.clone();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
    }
    let b_edges: HashSet<BTreeSet<usize>> = b
        .edges()
        .map(|e| e.iter().copied().collect())
        .collect();
    let a_edges: Vec<BTreeSet<usize>> = a
        .edges()
        .map(|e| e.iter().copied().collect())
        .collect();
    let mut image = vec![usize::MAX; ka];
    let mut used = vec![false; ka];
    fn rec(
        v: usize,
        ka: usize,
        deg_a: &[usize],
        deg_b: &[usize],
        a_edges: &[BTreeSet<usize>],
        b_edges: &HashSet<BTreeSet<usize>>,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == ka {
            return a_edges
                .iter()
                .all(|e| b_edges.contains(&e.iter().map(|&u| image[u]).collect()));
        }
        for w in 0..ka {
            if used[w] || deg_b[w] != deg_a[v] {
                continue;
            }
            image[v] = w;
            used[w] = true;
            // every a-edge whose vertices are all mapped must be a b-edge
            let consistent = a_edges.iter().all(|e| {
                if e.iter().all(|&u| image[u] != usize::MAX) {
                    b_edges.contains(&e.iter().map(|&u| image[u]).collect())
                } else {
                    true
                }
            });
            if consistent
                && rec(v + 1, ka, deg_a, deg_b, a_edges, b_edges, image, used)
            {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
    rec(0, ka, &deg_a, &deg_b, &a_edges, &b_edges, &mut image, &mut used)
}

/// Naive basis enumeration oracle: every size-n subset of the rays tested
/// for mutual orthogonality. Only for small m.
pub fn naive_bases(rays: &[Ray], n: usize) -> Vec<BTreeSet<Ray>> {
    let mut sorted: Vec<Ray> = rays.to_vec();
    sorted.sort();
    sorted.dedup();
    let m = sorted.len();
    let mut out = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        start: usize,
        n: usize,
        m: usize,
        sorted: &[Ray],
        subset: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<Ray>>,
    ) {
        if subset.len() == n {
            out.push(subset.iter().map(|&i| sorted[i].clone()).collect());
            return;
        }
        if start >= m || m - start < n - subset.len() {
            return;
        }
        for i in start..m {
            if subset
                .iter()
                .all(|&j| sorted[j].is_orthogonal_to(&sorted[i]).unwrap())
            {
                subset.push(i);
                rec(i + 1, n, m, sorted, subset, out);
                subset.pop();
            }
        }
    }
    rec(0, n, m, &sorted, &mut subset, &mut out);
    out
}

/// Random valid MMPH: rank 3..=6; every hyperedge shares at least one
/// existing vertex (connectivity) and may reuse existing vertices entirely,
/// so noncolorable cores (odd cycles and denser tangles) do occur.
/// Candidates violating the pairwise-intersection bound or duplicating an
/// existing hyperedge are rejected and retried.
pub fn random_mmph(rng: &mut impl Rng, max_k: usize, max_edges: usize) -> Mmph {
    let rank = rng.gen_range(3..=6);
    let target_edges = rng.gen_range(1..=max_edges.max(1));
    let mut vertices: Vec<u64> = Vec::new();
    let mut next_label = 0u64;
    let mut edges: Vec<Vec<u64>> = Vec::new();

    let first_size = rng.gen_range(2..=rank);
    let mut first = Vec::new();
    for _ in 0..first_size {
        first.push(next_label);
        vertices.push(next_label);
        next_label += 1;
    }
    edges.push(first);

    let mut attempts = 0usize;
    while edges.len() < target_edges && attempts < 200 {
        attempts += 1;
        let size = rng.gen_range(2..=rank);
        let shared = rng.gen_range(1..=size.min(vertices.len()));
        let fresh = size - shared;
        if vertices.len() + fresh > max_k {
            continue;
        }
        let mut picked: Vec<u64> = vertices.choose_multiple(rng, shared).copied().collect();
        let fresh_start = next_label;
        for i in 0..fresh {
            picked.push(fresh_start + i as u64);
        }
        let cand: BTreeSet<u64> = picked.iter().copied().collect();
        let ok = edges.iter().all(|e| {
            let eset: BTreeSet<u64> = e.iter().copied().collect();
            let inter = cand.intersection(&eset).count();
            inter <= rank - 2 && cand != eset
        });
        if !ok {
            continue;
        }
        for i in 0..fresh {
            vertices.push(fresh_start + i as u64);
        }
        next_label += fresh as u64;
        picked.shuffle(rng);
        edges.push(picked);
    }

    let hyperedges = edges
        .into_iter()
        .map(|e| {
            Hyperedge::new(e.into_iter().map(VertexLabel::from_index).collect())
                .expect("distinct by construction")
        })
        .collect();
    let m = Mmph::new(rank, hyperedges).expect("structurally sound");
    debug_assert!(m.validate().is_valid(), "{:?}", m.validate());
    m
}

/// Relabels every vertex through a random injective map into the label
/// space (escape levels included), preserving all order.
pub fn random_relabel(m: &Mmph, rng: &mut impl Rng, label_space: u64) -> Mmph {
    let k = m.vertex_count() as u64;
    let space = label_space.max(k);
    let mut chosen: Vec<u64> = Vec::with_capacity(k as usize);
    let mut seen = HashSet::new();
    while (chosen.len() as u64) < k {
        let candidate = rng.gen_range(0..space);
        if seen.insert(candidate) {
            chosen.push(candidate);
        }
    }
    let hyperedges = m
        .edges()
        .map(|e| {
            Hyperedge::new(
                e.iter()
                    .map(|&v| VertexLabel::from_index(chosen[v]))
                    .collect(),
            )
            .expect("injective relabeling")
        })
        .collect();
    Mmph::new(m.rank(), hyperedges).expect("structure unchanged")
}
