//! Dimensional upscaling: combine two coordinatized KS MMPHs of dimensions
//! d1 and d2 ≤ d1 into dimension D, with d1 < D ≤ d1+d2.
//!
//! The first parent's rays are padded with D−d1 trailing zeros. The second
//! parent's rays are written into D coordinates with the D−d2 zeros placed
//! at a fixed subset of the first d1 positions (the same placement for
//! every ray) and the d2 components permuted; the last D−d1 coordinates
//! therefore always carry second-parent components, so the merged set has
//! support in every cardinal direction. Merging identifies equal rays, and
//! the search over all C(d1, D−d2) placements × d2! orderings minimizes the
//! number of unique rays. The resulting set is not guaranteed to yield a KS
//! MMPH — the pipeline regenerates all orthogonal bases over the merged
//! rays and checks colorability as a separate step.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{check_colorable_with_budget, remove_vertex_and_edges, KsVerdict};
use crate::coord::{generate_bases, BasesError, Coordinatization, CoordError};
use crate::hypergraph::Mmph;
use crate::ray::Ray;
use crate::text::VectorTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UpscaleError {
    #[error("need d2 ≤ d1 < D ≤ d1+d2, got d1={d1}, d2={d2}, D={target}")]
    InvalidDimensions { d1: usize, d2: usize, target: usize },
    #[error("plan is inconsistent with its dimensions")]
    InconsistentPlan,
    #[error("parent ray has dimension {got}, expected {want}")]
    WrongParentDimension { got: usize, want: usize },
    #[error("parent has no rays")]
    EmptyParent,
}

/// One candidate embedding of the second parent: where its D−d2 zeros go
/// (all within the first d1 positions) and in which order its d2
/// components fill the remaining positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpscalePlan {
    d1: usize,
    d2: usize,
    target: usize,
    zero_positions: Vec<usize>,
    dim_order: Vec<usize>,
}

impl UpscalePlan {
    pub fn new(
        d1: usize,
        d2: usize,
        target: usize,
        zero_positions: Vec<usize>,
        dim_order: Vec<usize>,
    ) -> Result<Self, UpscaleError> {
        check_dimensions(d1, d2, target)?;
        let mut zs = zero_positions.clone();
        zs.sort_unstable();
        zs.dedup();
        if zs.len() != target - d2 || zs != zero_positions || zs.iter().any(|&p| p >= d1) {
            return Err(UpscaleError::InconsistentPlan);
        }
        let mut order = dim_order.clone();
        order.sort_unstable();
        if order != (0..d2).collect::<Vec<_>>() {
            return Err(UpscaleError::InconsistentPlan);
        }
        Ok(UpscalePlan {
            d1,
            d2,
            target,
            zero_positions,
            dim_order,
        })
    }

    pub fn zero_positions(&self) -> &[usize] {
        &self.zero_positions
    }

    pub fn dim_order(&self) -> &[usize] {
        &self.dim_order
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// The d2 positions that receive components: the last D−d1 coordinates
    /// plus the first-d1 positions not zeroed, ascending.
    pub fn nonzero_positions(&self) -> Vec<usize> {
        (0..self.target)
            .filter(|p| *p >= self.d1 || !self.zero_positions.contains(p))
            .collect()
    }
}

fn check_dimensions(d1: usize, d2: usize, target: usize) -> Result<(), UpscaleError> {
    if d2 < 2 || d2 > d1 || target <= d1 || target > d1 + d2 {
        return Err(UpscaleError::InvalidDimensions { d1, d2, target });
    }
    Ok(())
}

/// First-parent embedding: trailing zeros up to the target dimension.
pub fn embed_first(rays: &[Ray], target: usize) -> Result<Vec<Ray>, UpscaleError> {
    for r in rays {
        if r.dimension() > target {
            return Err(UpscaleError::WrongParentDimension {
                got: r.dimension(),
                want: target,
            });
        }
    }
    Ok(rays.iter().map(|r| r.extended(target)).collect())
}

/// Second-parent embedding according to a plan. The permuted components
/// land in the plan's nonzero positions in ascending order; zeros fill the
/// rest. A fixed plan is a fixed linear isometry, so all inner products —
/// and hence orthogonality — are preserved exactly.
pub fn embed_second(rays: &[Ray], plan: &UpscalePlan) -> Result<Vec<Ray>, UpscaleError> {
    let positions = plan.nonzero_positions();
    rays.iter()
        .map(|r| {
            if r.dimension() != plan.d2 {
                return Err(UpscaleError::WrongParentDimension {
                    got: r.dimension(),
                    want: plan.d2,
                });
            }
            let mut components = vec![num_bigint::BigInt::from(0); plan.target];
            for (j, &p) in positions.iter().enumerate() {
                components[p] = r.components()[plan.dim_order[j]].clone();
            }
            Ok(Ray::new(components).expect("nonzero input stays nonzero"))
        })
        .collect()
}

/// A merged embedding and its vertex count.
#[derive(Debug, Clone)]
pub struct UpscaleCandidate {
    pub plan: UpscalePlan,
    /// Sorted distinct rays of the union.
    pub merged: Vec<Ray>,
    pub unique_count: usize,
    /// Rays shared between the two embedded parents: r = r1 + r2 − overlap.
    pub overlap: usize,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub best: UpscaleCandidate,
    /// Whether every plan was evaluated (plan space within budget).
    pub exhaustive: bool,
    pub plans_evaluated: u64,
    pub plan_space: u128,
    /// Number of evaluated plans achieving the minimal unique count.
    pub ties_at_minimum: u64,
}

/// Enumerates zero placements × dimension orderings, merging by ray
/// equality, and returns the candidate with the fewest unique rays; ties
/// break to the lexicographically least (zero_positions, dim_order). When
/// the plan space exceeds the budget, a seeded uniform sample of `budget`
/// distinct plans is evaluated instead and the outcome is flagged
/// non-exhaustive. Plan evaluation is pure, so the parallel reduction is
/// an associative min and runs reproduce byte-identically.
pub fn search_min_vertices(
    first: &[Ray],
    second: &[Ray],
    target: usize,
    plan_budget: u64,
    seed: u64,
) -> Result<SearchOutcome, UpscaleError> {
    let d1 = parent_dimension(first)?;
    let d2 = parent_dimension(second)?;
    check_dimensions(d1, d2, target)?;
    let space = binomial(d1 as u64, (target - d2) as u64) * factorial(d2 as u64);
    let budget = plan_budget.max(1);
    let exhaustive = space <= budget as u128;
    let indices: Vec<u128> = if exhaustive {
        (0..space as u64).map(u128::from).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut set = HashSet::with_capacity(budget as usize);
        while (set.len() as u64) < budget {
            set.insert(rng.gen_range(0..space));
        }
        let mut v: Vec<u128> = set.into_iter().collect();
        v.sort_unstable();
        v
    };

    let embedded_first = embed_first(first, target)?;
    let first_set: HashSet<&Ray> = embedded_first.iter().collect();
    let perms = factorial(d2 as u64);

    let evaluate = |&index: &u128| -> (usize, u128) {
        let plan = plan_from_index(d1, d2, target, index, perms);
        let embedded = embed_second(second, &plan).expect("plan is consistent");
        let overlap = embedded.iter().filter(|r| first_set.contains(r)).count();
        (first.len() + second.len() - overlap, index)
    };
    let evals: Vec<(usize, u128)> = indices.par_iter().map(evaluate).collect();
    let &(best_r, best_index) = evals.iter().min().expect("at least one plan");
    let ties = evals.iter().filter(|&&(r, _)| r == best_r).count() as u64;

    let plan = plan_from_index(d1, d2, target, best_index, perms);
    let embedded = embed_second(second, &plan)?;
    let overlap = embedded.iter().filter(|r| first_set.contains(r)).count();
    let mut merged: Vec<Ray> = embedded_first.iter().chain(&embedded).cloned().collect();
    merged.sort();
    merged.dedup();
    let unique_count = merged.len();
    debug_assert_eq!(unique_count, first.len() + second.len() - overlap);
    Ok(SearchOutcome {
        best: UpscaleCandidate {
            plan,
            merged,
            unique_count,
            overlap,
        },
        exhaustive,
        plans_evaluated: indices.len() as u64,
        plan_space: space,
        ties_at_minimum: ties,
    })
}

fn parent_dimension(rays: &[Ray]) -> Result<usize, UpscaleError> {
    let d = rays
        .first()
        .map(Ray::dimension)
        .ok_or(UpscaleError::EmptyParent)?;
    for r in rays {
        if r.dimension() != d {
            return Err(UpscaleError::WrongParentDimension {
                got: r.dimension(),
                want: d,
            });
        }
    }
    Ok(d)
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Plan index → (lexicographic combination, lexicographic permutation).
fn plan_from_index(d1: usize, d2: usize, target: usize, index: u128, perms: u128) -> UpscalePlan {
    let comb_rank = index / perms;
    let perm_rank = index % perms;
    let zero_positions = unrank_combination(d1, target - d2, comb_rank);
    let dim_order = unrank_permutation(d2, perm_rank);
    UpscalePlan::new(d1, d2, target, zero_positions, dim_order).expect("unranked plan")
}

/// The `rank`-th size-`size` subset of 0..n in lexicographic order.
fn unrank_combination(n: usize, size: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(size);
    let mut next = 0usize;
    let mut remaining = size;
    while remaining > 0 {
        let with_next = binomial((n - next - 1) as u64, (remaining - 1) as u64);
        if rank < with_next {
            out.push(next);
            remaining -= 1;
        } else {
            rank -= with_next;
        }
        next += 1;
    }
    out
}

/// The `rank`-th permutation of 0..n in lexicographic order (Lehmer code).
fn unrank_permutation(n: usize, mut rank: u128) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i as u64);
        let digit = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(digit));
    }
    out
}

/// A parent for the pipeline: its ray table and, optionally, its hyperedge
/// structure (used only for the embedded-parent-edge diagnostic).
#[derive(Clone, Copy)]
pub struct Parent<'a> {
    pub table: &'a VectorTable,
    pub mmph: Option<&'a Mmph>,
}

impl<'a> Parent<'a> {
    pub fn rays_only(table: &'a VectorTable) -> Self {
        Parent { table, mmph: None }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Upscale(#[from] UpscaleError),
    #[error("parent MMPH does not match its table: {0}")]
    Coord(#[from] CoordError),
    #[error(transparent)]
    Bases(#[from] BasesError),
}

#[derive(Debug, Clone)]
pub struct UpscaleParams {
    pub target: usize,
    pub plan_budget: u64,
    pub node_budget: Option<u64>,
    pub seed: u64,
}

impl UpscaleParams {
    pub fn new(target: usize) -> Self {
        UpscaleParams {
            target,
            plan_budget: 100_000,
            node_budget: None,
            seed: 0,
        }
    }
}

/// Everything the pipeline produced: the winning candidate, the master of
/// all orthogonal bases over the merged rays, its KS verdict, and — when
/// the verdict is KS — the master with extraneous vertices removed (a
/// vertex is extraneous when deleting it and its hyperedges leaves a valid
/// KS MMPH).
pub struct UpscaleReport {
    pub search: SearchOutcome,
    pub master: Mmph,
    pub master_table: VectorTable,
    /// Merged rays that lie in no basis (excluded from the master).
    pub unused_rays: Vec<Ray>,
    pub verdict: KsVerdict,
    pub reduced: Option<(Mmph, VectorTable)>,
    /// Parent hyperedges mapped through the embeddings; each stays a
    /// mutually-orthogonal set. Present when parents carry structure.
    pub embedded_parent_edges: Vec<Vec<Ray>>,
}

/// Runs search → basis generation → KS check → extraneous-vertex reduction.
/// A colorable master is a normal outcome, reported in the verdict.
pub fn upscale_pipeline(
    p1: Parent,
    p2: Parent,
    params: &UpscaleParams,
) -> Result<UpscaleReport, PipelineError> {
    let first: Vec<Ray> = p1.table.rays().cloned().collect();
    let second: Vec<Ray> = p2.table.rays().cloned().collect();
    if let Some(m) = p1.mmph {
        Coordinatization::bind(m, p1.table)?;
    }
    if let Some(m) = p2.mmph {
        Coordinatization::bind(m, p2.table)?;
    }
    let search = search_min_vertices(&first, &second, params.target, params.plan_budget, params.seed)?;

    let bases = generate_bases(&search.best.merged, params.target)?;
    let verdict = check_colorable_with_budget(&bases.mmph, params.node_budget);

    let reduced = if verdict.is_ks() {
        let mut current = bases.mmph.clone();
        loop {
            let mut order: Vec<(usize, crate::label::VertexLabel)> = current
                .vertex_multiplicities()
                .into_iter()
                .map(|(l, m)| (m, l))
                .collect();
            order.sort();
            let step = order.into_iter().find_map(|(_, label)| {
                let cand = remove_vertex_and_edges(&current, &label).expect("label present");
                (cand.edge_count() > 0
                    && cand.validate().is_valid()
                    && check_colorable_with_budget(&cand, params.node_budget).is_ks())
                .then_some(cand)
            });
            match step {
                Some(next) => current = next,
                None => break,
            }
        }
        let mut table = VectorTable::new(params.target);
        for &label in current.labels() {
            table
                .insert(label, bases.table.get(&label).expect("subset").clone())
                .expect("restriction of a valid table");
        }
        Some((current, table))
    } else {
        None
    };

    let mut embedded_parent_edges = Vec::new();
    for (parent, is_first) in [(p1, true), (p2, false)] {
        if let Some(m) = parent.mmph {
            for i in 0..m.edge_count() {
                let rays: Vec<Ray> = m
                    .edge_labels(i)
                    .map(|l| parent.table.get(&l).expect("bound").clone())
                    .collect();
                let embedded = if is_first {
                    embed_first(&rays, params.target)?
                } else {
                    embed_second(&rays, &search.best.plan)?
                };
                embedded_parent_edges.push(embedded);
            }
        }
    }

    Ok(UpscaleReport {
        search,
        master: bases.mmph,
        master_table: bases.table,
        unused_rays: bases.unused_rays,
        verdict,
        reduced,
        embedded_parent_edges,
    })
}
