//! Canonical forms and isomorphism for MMPHs.
//!
//! Two MMPHs are isomorphic when some vertex bijection maps one hyperedge
//! set onto the other (hyperedge order and intra-edge order are ignored).
//! The canonical form is computed by iterative partition refinement on
//! vertex invariants (multiplicity, incident edge sizes, co-member color
//! multisets) with backtracking over refinement ties: every way of
//! individualizing a vertex in the first non-singleton color class is
//! explored and the lexicographically least relabeled encoding wins. That
//! makes the form exact at any size; the randomized test suite checks it
//! against exhaustive bijection search on small instances.

use thiserror::Error;

use crate::hypergraph::{Mmph, ValidationReport};

/// Deterministic byte string identifying an MMPH up to vertex relabeling
/// and hyperedge reordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Debug, Error)]
#[error("invalid MMPH: {0}")]
pub struct InvalidMmph(pub ValidationReport);

/// Canonical form of a valid MMPH.
pub fn canonicalize(m: &Mmph) -> Result<CanonicalForm, InvalidMmph> {
    let report = m.validate();
    if !report.is_valid() {
        return Err(InvalidMmph(report));
    }
    Ok(canonicalize_unchecked(m))
}

/// Canonical form without the validity gate; used internally where the
/// input is known valid (or validity is irrelevant, e.g. dedup keys).
pub(crate) fn canonicalize_unchecked(m: &Mmph) -> CanonicalForm {
    let k = m.vertex_count();
    if k == 0 {
        return CanonicalForm(encode(m, &[]));
    }
    let mut ctx = Ctx {
        m,
        incident: incidence(m),
        best: None,
    };
    let colors = initial_colors(&ctx);
    ctx.search(colors);
    CanonicalForm(ctx.best.expect("search yields at least one leaf"))
}

/// True iff a vertex bijection maps one hyperedge set onto the other.
pub fn isomorphic(a: &Mmph, b: &Mmph) -> Result<bool, InvalidMmph> {
    Ok(canonicalize(a)? == canonicalize(b)?)
}

fn incidence(m: &Mmph) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); m.vertex_count()];
    for (i, e) in m.edges().enumerate() {
        for &v in e {
            inc[v].push(i);
        }
    }
    inc
}

struct Ctx<'a> {
    m: &'a Mmph,
    incident: Vec<Vec<usize>>,
    best: Option<Vec<u8>>,
}

/// Initial vertex colors from label-free invariants.
fn initial_colors(ctx: &Ctx) -> Vec<u32> {
    let keys: Vec<(usize, Vec<usize>)> = ctx
        .incident
        .iter()
        .map(|edges| {
            let mut sizes: Vec<usize> = edges.iter().map(|&e| ctx.m.edge(e).len()).collect();
            sizes.sort_unstable();
            (edges.len(), sizes)
        })
        .collect();
    rank_by_key(&keys)
}

/// Ranks vertices by sort order of their keys: equal keys share a color.
fn rank_by_key<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

impl Ctx<'_> {
    /// Refines colors to a fixpoint. Each round recolors a vertex by its
    /// current color plus the multiset, over incident edges, of (edge size,
    /// sorted co-member colors); refinement only ever splits classes.
    fn refine(&self, colors: &mut Vec<u32>) {
        let mut distinct = colors.iter().collect::<std::collections::HashSet<_>>().len();
        loop {
            let keys: Vec<(u32, Vec<(usize, Vec<u32>)>)> = (0..colors.len())
                .map(|v| {
                    let mut sig: Vec<(usize, Vec<u32>)> = self.incident[v]
                        .iter()
                        .map(|&e| {
                            let mut cs: Vec<u32> = self
                                .m
                                .edge(e)
                                .iter()
                                .filter(|&&u| u != v)
                                .map(|&u| colors[u])
                                .collect();
                            cs.sort_unstable();
                            (self.m.edge(e).len(), cs)
                        })
                        .collect();
                    sig.sort();
                    (colors[v], sig)
                })
                .collect();
            let next = rank_by_key(&keys);
            let next_distinct = next.iter().collect::<std::collections::HashSet<_>>().len();
            if next_distinct == distinct {
                return;
            }
            distinct = next_distinct;
            *colors = next;
        }
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        // first (lowest-color) non-singleton class is the branch target;
        // the choice is invariant under isomorphism because colors are
        let k = colors.len();
        let mut counts = vec![0usize; k];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = (0..k).find(|&c| counts[c] > 1);
        match target {
            None => {
                // discrete: colors are a permutation
                let mut order = vec![0usize; k];
                for (v, &c) in colors.iter().enumerate() {
                    order[c as usize] = v;
                }
                let enc = encode(self.m, &order);
                if self.best.as_ref().map_or(true, |b| enc < *b) {
                    self.best = Some(enc);
                }
            }
            Some(cell) => {
                let members: Vec<usize> = (0..k)
                    .filter(|&v| colors[v] as usize == cell)
                    .collect();
                for v in members {
                    // individualize v ahead of its cell mates, then re-rank
                    let keys: Vec<(u32, u8)> = colors
                        .iter()
                        .enumerate()
                        .map(|(u, &c)| (c, (u != v || c as usize != cell) as u8))
                        .collect();
                    self.search(rank_by_key(&keys));
                }
            }
        }
    }
}

/// Serializes (rank, k, l, sorted relabeled edges) injectively.
/// `order[p]` is the vertex placed at position `p`.
fn encode(m: &Mmph, order: &[usize]) -> Vec<u8> {
    let mut pos = vec![0u32; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p as u32;
    }
    let mut edges: Vec<Vec<u32>> = m
        .edges()
        .map(|e| {
            let mut ids: Vec<u32> = e.iter().map(|&v| pos[v]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    edges.sort();
    let mut out = Vec::with_capacity(12 + edges.iter().map(|e| 4 + 4 * e.len()).sum::<usize>());
    let push = |out: &mut Vec<u8>, x: u32| out.extend_from_slice(&x.to_be_bytes());
    push(&mut out, m.rank() as u32);
    push(&mut out, order.len() as u32);
    push(&mut out, edges.len() as u32);
    for e in &edges {
        push(&mut out, e.len() as u32);
        for &v in e {
            push(&mut out, v);
        }
    }
    out
}
