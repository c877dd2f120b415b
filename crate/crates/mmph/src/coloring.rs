//! The Kochen-Specker property: {0,1} colorability, criticality, stripping.
//!
//! A coloring is a total {0,1} assignment to the vertices such that (I) no
//! hyperedge carries two 1s and (II) no hyperedge is all 0s — equivalently,
//! every hyperedge contains exactly one vertex assigned 1. An MMPH is KS
//! (noncolorable) when no such assignment exists.
//!
//! The decider is a complete backtracking search: assigning 1 to a vertex
//! forces 0 on every hyperedge-mate, and a hyperedge with no 1 and a single
//! unassigned vertex forces that vertex to 1. Branching picks the vertex of
//! highest multiplicity in the most-constrained unsatisfied hyperedge, ties
//! broken by canonical label order, so runs are deterministic. An optional
//! node budget turns the verdict into an explicit "undecided" rather than
//! ever returning a wrong answer.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonicalize_unchecked;
use crate::hypergraph::{Mmph, ValidationReport};
use crate::label::VertexLabel;

/// A total {0,1} assignment, stored as the set of vertices assigned 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    ones: BTreeSet<VertexLabel>,
}

impl Coloring {
    pub fn new(ones: BTreeSet<VertexLabel>) -> Self {
        Coloring { ones }
    }

    pub fn value(&self, label: &VertexLabel) -> u8 {
        u8::from(self.ones.contains(label))
    }

    pub fn ones(&self) -> &BTreeSet<VertexLabel> {
        &self.ones
    }

    /// Independent re-check of rules (I) and (II) against an MMPH.
    pub fn satisfies(&self, m: &Mmph) -> bool {
        for edge in m.edges() {
            let ones = edge
                .iter()
                .filter(|&&v| self.ones.contains(&m.label(v)))
                .count();
            if ones != 1 {
                return false;
            }
        }
        true
    }

    /// `LABEL=0|1` lines for every vertex of `m`, in label order.
    pub fn to_lines(&self, m: &Mmph) -> String {
        let mut labels: Vec<VertexLabel> = m.labels().to_vec();
        labels.sort();
        let mut out = String::new();
        for l in labels {
            out.push_str(&format!("{l}={}\n", self.value(&l)));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KsOutcome {
    /// No valid coloring exists: the MMPH is a KS set.
    Noncolorable,
    /// A valid coloring exists; the witness re-checks independently.
    Colorable(Coloring),
    /// Search budget exhausted before a verdict.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsVerdict {
    pub outcome: KsOutcome,
    pub nodes_explored: u64,
}

impl KsVerdict {
    pub fn is_ks(&self) -> bool {
        matches!(self.outcome, KsOutcome::Noncolorable)
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match &self.outcome {
            KsOutcome::Colorable(c) => Some(c),
            _ => None,
        }
    }

    pub fn decided(&self) -> bool {
        !matches!(self.outcome, KsOutcome::Undecided)
    }
}

impl fmt::Display for KsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome {
            KsOutcome::Noncolorable => write!(f, "KS: yes"),
            KsOutcome::Colorable(_) => write!(f, "KS: no"),
            KsOutcome::Undecided => write!(f, "KS: undecided"),
        }
    }
}

/// Complete search for a valid coloring (no budget).
pub fn check_colorable(m: &Mmph) -> KsVerdict {
    check_colorable_with_budget(m, None)
}

/// Complete search with an optional branch-node ceiling.
pub fn check_colorable_with_budget(m: &Mmph, node_budget: Option<u64>) -> KsVerdict {
    let mut solver = Solver::new(m, node_budget);
    solver.run()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Free,
    Zero,
    One,
}

struct Solver<'a> {
    m: &'a Mmph,
    vertex_edges: Vec<Vec<usize>>,
    mult: Vec<usize>,
    state: Vec<Cell>,
    chosen: Vec<Option<usize>>,
    free_in_edge: Vec<usize>,
    satisfied: usize,
    trail: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Solver<'a> {
    fn new(m: &'a Mmph, budget: Option<u64>) -> Self {
        let k = m.vertex_count();
        let mut vertex_edges = vec![Vec::new(); k];
        for (i, e) in m.edges().enumerate() {
            for &v in e {
                vertex_edges[v].push(i);
            }
        }
        let mult = vertex_edges.iter().map(Vec::len).collect();
        Solver {
            m,
            vertex_edges,
            mult,
            state: vec![Cell::Free; k],
            chosen: vec![None; m.edge_count()],
            free_in_edge: m.edges().map(<[usize]>::len).collect(),
            satisfied: 0,
            trail: Vec::with_capacity(k),
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> KsVerdict {
        // unit-propagate size-1 hyperedges up front
        let units: Vec<usize> = (0..self.m.edge_count())
            .filter(|&e| self.m.edge(e).len() == 1)
            .map(|e| self.m.edge(e)[0])
            .collect();
        for v in units {
            if self.state[v] == Cell::Free && !self.assign(v, Cell::One) {
                return KsVerdict {
                    outcome: KsOutcome::Noncolorable,
                    nodes_explored: self.nodes,
                };
            }
        }
        let outcome = match self.search() {
            Err(Exhausted) => KsOutcome::Undecided,
            Ok(true) => {
                let ones = self
                    .state
                    .iter()
                    .enumerate()
                    .filter(|&(_, &s)| s == Cell::One)
                    .map(|(v, _)| self.m.label(v))
                    .collect();
                KsOutcome::Colorable(Coloring::new(ones))
            }
            Ok(false) => KsOutcome::Noncolorable,
        };
        KsVerdict {
            outcome,
            nodes_explored: self.nodes,
        }
    }

    /// Assigns and propagates; false on conflict (changes stay on the trail
    /// for the caller to undo).
    fn assign(&mut self, v0: usize, val0: Cell) -> bool {
        let mut queue = vec![(v0, val0)];
        while let Some((v, val)) = queue.pop() {
            match self.state[v] {
                s if s == val => continue,
                Cell::Free => {}
                _ => return false, // forced both ways
            }
            self.state[v] = val;
            self.trail.push(v);
            // decrement every counter first so undo stays symmetric even
            // when a conflict aborts the logic pass below halfway through
            for i in 0..self.vertex_edges[v].len() {
                let e = self.vertex_edges[v][i];
                self.free_in_edge[e] -= 1;
            }
            for i in 0..self.vertex_edges[v].len() {
                let e = self.vertex_edges[v][i];
                if val == Cell::One {
                    match self.chosen[e] {
                        Some(w) if w != v => return false, // two 1s in one hyperedge
                        Some(_) => {}
                        None => {
                            self.chosen[e] = Some(v);
                            self.satisfied += 1;
                            for &u in self.m.edge(e) {
                                if self.state[u] == Cell::Free {
                                    queue.push((u, Cell::Zero));
                                }
                            }
                        }
                    }
                } else if self.chosen[e].is_none() {
                    match self.free_in_edge[e] {
                        0 => return false, // hyperedge all 0s
                        1 => {
                            let u = *self
                                .m
                                .edge(e)
                                .iter()
                                .find(|&&u| self.state[u] == Cell::Free)
                                .expect("one free vertex remains");
                            queue.push((u, Cell::One));
                        }
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail nonempty");
            for &e in &self.vertex_edges[v] {
                self.free_in_edge[e] += 1;
                if self.chosen[e] == Some(v) {
                    self.chosen[e] = None;
                    self.satisfied -= 1;
                }
            }
            self.state[v] = Cell::Free;
        }
    }

    fn search(&mut self) -> Result<bool, Exhausted> {
        if self.satisfied == self.m.edge_count() {
            return Ok(true);
        }
        // most-constrained hyperedge: no 1 yet, fewest free vertices
        let e = (0..self.m.edge_count())
            .filter(|&e| self.chosen[e].is_none())
            .min_by_key(|&e| (self.free_in_edge[e], e))
            .expect("some hyperedge unsatisfied");
        // branch vertex: highest multiplicity, ties by canonical label order
        let v = self
            .m
            .edge(e)
            .iter()
            .copied()
            .filter(|&v| self.state[v] == Cell::Free)
            .min_by_key(|&v| (usize::MAX - self.mult[v], self.m.label(v)))
            .expect("unsatisfied hyperedge has free vertices");

        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(Exhausted);
            }
        }
        let mark = self.trail.len();
        if self.assign(v, Cell::One) && self.search()? {
            return Ok(true);
        }
        self.undo(mark);
        if self.assign(v, Cell::Zero) && self.search()? {
            return Ok(true);
        }
        self.undo(mark);
        Ok(false)
    }
}

struct Exhausted;

#[derive(Debug, Error)]
pub enum CriticalityError {
    #[error("input is not a KS MMPH (a valid coloring exists)")]
    NotKs(Coloring),
    #[error("KS status undecided within the search budget")]
    Undecided,
}

/// Whether each hyperedge is necessary for noncolorability.
#[derive(Debug, Clone)]
pub enum EdgeRole {
    /// Deleting the hyperedge makes the MMPH colorable; the witness is the
    /// coloring of the reduced MMPH.
    Necessary(Coloring),
    /// Deleting the hyperedge leaves a KS MMPH.
    Redundant,
    /// Budget ran out on this deletion.
    Undecided,
}

#[derive(Debug, Clone)]
pub struct CriticalityReport {
    pub roles: Vec<EdgeRole>,
    pub nodes_explored: u64,
}

impl CriticalityReport {
    /// Critical iff every single-hyperedge deletion is colorable.
    pub fn is_critical(&self) -> bool {
        self.roles
            .iter()
            .all(|r| matches!(r, EdgeRole::Necessary(_)))
    }

    pub fn redundant_edges(&self) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, EdgeRole::Redundant))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Checks hyperedge-criticality of a KS MMPH: for every hyperedge, deleting
/// it (dropping orphaned vertices) must leave a colorable MMPH.
pub fn check_critical(m: &Mmph) -> Result<CriticalityReport, CriticalityError> {
    check_critical_with_budget(m, None)
}

pub fn check_critical_with_budget(
    m: &Mmph,
    node_budget: Option<u64>,
) -> Result<CriticalityReport, CriticalityError> {
    let base = check_colorable_with_budget(m, node_budget);
    let mut nodes = base.nodes_explored;
    match base.outcome {
        KsOutcome::Colorable(w) => return Err(CriticalityError::NotKs(w)),
        KsOutcome::Undecided => return Err(CriticalityError::Undecided),
        KsOutcome::Noncolorable => {}
    }
    let mut roles = Vec::with_capacity(m.edge_count());
    for i in 0..m.edge_count() {
        let verdict = check_colorable_with_budget(&m.without_edge(i), node_budget);
        nodes += verdict.nodes_explored;
        roles.push(match verdict.outcome {
            KsOutcome::Colorable(w) => EdgeRole::Necessary(w),
            KsOutcome::Noncolorable => EdgeRole::Redundant,
            KsOutcome::Undecided => EdgeRole::Undecided,
        });
    }
    Ok(CriticalityReport {
        roles,
        nodes_explored: nodes,
    })
}

#[derive(Debug, Error)]
pub enum StripError {
    #[error("vertex {0} not present")]
    VertexNotFound(VertexLabel),
    #[error("removing the vertex would shrink hyperedge {edge} below 2 vertices")]
    CreatesSmallEdge { edge: usize },
    #[error("removal leaves an invalid MMPH: {0}")]
    InvalidResult(ValidationReport),
}

/// Deletes a vertex from every hyperedge containing it (hyperedges shrink).
/// The result is re-validated; KS status is not implied either way and the
/// caller re-checks it. Note that shrinking can never destroy
/// noncolorability: a coloring of the stripped MMPH extends to the original
/// by assigning the removed vertex 0.
pub fn strip_vertex(m: &Mmph, label: &VertexLabel) -> Result<Mmph, StripError> {
    let id = m
        .vertex_id(label)
        .ok_or(StripError::VertexNotFound(*label))?;
    for (i, e) in m.edges().enumerate() {
        if e.contains(&id) && e.len() < 3 {
            return Err(StripError::CreatesSmallEdge { edge: i });
        }
    }
    let shrunk: Vec<Vec<usize>> = m
        .edges()
        .map(|e| e.iter().copied().filter(|&v| v != id).collect())
        .collect();
    let refs: Vec<&Vec<usize>> = shrunk.iter().collect();
    let result = m.rebuild(&refs);
    let report = result.validate();
    if !report.is_valid() {
        return Err(StripError::InvalidResult(report));
    }
    Ok(result)
}

/// Deletes a vertex together with every hyperedge containing it, dropping
/// any vertices orphaned in the process. This is the reduction move used
/// when looking for extraneous vertices of a master: unlike
/// [`strip_vertex`], it can destroy the KS property, so the caller checks.
pub fn remove_vertex_and_edges(m: &Mmph, label: &VertexLabel) -> Result<Mmph, StripError> {
    let id = m
        .vertex_id(label)
        .ok_or(StripError::VertexNotFound(*label))?;
    let kept: Vec<&Vec<usize>> = m
        .raw_edges()
        .iter()
        .filter(|e| !e.contains(&id))
        .collect();
    Ok(m.rebuild(&kept))
}

#[derive(Debug, Clone)]
pub struct StripBudget {
    /// Randomized descent restarts.
    pub restarts: u64,
    /// Node ceiling per colorability check (None = complete search).
    pub node_budget: Option<u64>,
}

impl Default for StripBudget {
    fn default() -> Self {
        StripBudget {
            restarts: 32,
            node_budget: None,
        }
    }
}

/// Inclusive bounds on the k and l of emitted criticals.
#[derive(Debug, Clone, Default)]
pub struct StripFilters {
    pub min_k: Option<usize>,
    pub max_k: Option<usize>,
    pub min_l: Option<usize>,
    pub max_l: Option<usize>,
}

impl StripFilters {
    fn admits(&self, m: &Mmph) -> bool {
        let (k, l) = (m.vertex_count(), m.edge_count());
        self.min_k.map_or(true, |b| k >= b)
            && self.max_k.map_or(true, |b| k <= b)
            && self.min_l.map_or(true, |b| l >= b)
            && self.max_l.map_or(true, |b| l <= b)
    }
}

#[derive(Debug, Clone)]
pub struct StripOutcome {
    /// Distinct criticals (deduplicated by canonical form), sorted by
    /// (k, l, canonical form) so parallel runs emit identical streams.
    pub criticals: Vec<Mmph>,
    /// True when the restart budget ran out without the enumeration being
    /// provably complete. A critical master is the one provably-complete
    /// case: no proper sub-MMPH of a critical is KS.
    pub truncated: bool,
    pub restarts: u64,
}

/// Randomized descent from a KS master to critical sub-MMPHs.
///
/// Each restart repeatedly deletes a hyperedge whose removal keeps the MMPH
/// KS (random order, seeded); when stuck, it tries removing an extraneous
/// vertex (with its hyperedges); when neither moves, the result is a
/// hyperedge-critical KS MMPH with no extraneous vertices. Restarts run in
/// parallel on independent RNG streams; results are merged, filtered,
/// deduplicated by canonical form and sorted.
pub fn strip_search(
    master: &Mmph,
    budget: &StripBudget,
    filters: &StripFilters,
    seed: u64,
) -> Result<StripOutcome, CriticalityError> {
    let base = check_colorable_with_budget(master, budget.node_budget);
    match base.outcome {
        KsOutcome::Colorable(w) => return Err(CriticalityError::NotKs(w)),
        KsOutcome::Undecided => return Err(CriticalityError::Undecided),
        KsOutcome::Noncolorable => {}
    }
    let restarts = budget.restarts.max(1);
    let found: Vec<Mmph> = (0..restarts)
        .into_par_iter()
        .map(|r| descend(master, seed, r, budget.node_budget))
        .collect();

    let master_canon = canonicalize_unchecked(master);
    let mut truncated = false;
    let mut keyed: Vec<(usize, usize, crate::canon::CanonicalForm, Mmph)> = Vec::new();
    for m in found {
        let canon = canonicalize_unchecked(&m);
        if canon != master_canon {
            truncated = true; // a proper descent happened: stream not provably complete
        }
        if !filters.admits(&m) {
            continue;
        }
        debug_assert!(m.validate().is_valid());
        keyed.push((m.vertex_count(), m.edge_count(), canon, m));
    }
    keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    keyed.dedup_by(|a, b| a.2 == b.2);
    Ok(StripOutcome {
        criticals: keyed.into_iter().map(|(_, _, _, m)| m).collect(),
        truncated,
        restarts,
    })
}

fn descend(master: &Mmph, seed: u64, restart: u64, node_budget: Option<u64>) -> Mmph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    let is_ks = |m: &Mmph| check_colorable_with_budget(m, node_budget).is_ks();
    let mut current = master.clone();
    loop {
        let mut idxs: Vec<usize> = (0..current.edge_count()).collect();
        idxs.shuffle(&mut rng);
        let step = idxs.into_iter().find_map(|i| {
            let cand = current.without_edge(i);
            is_ks(&cand).then_some(cand)
        });
        if let Some(next) = step {
            current = next;
            continue;
        }
        // extraneous-vertex pass: remove a vertex with its hyperedges if
        // the remainder is still KS; ascending multiplicity, then label
        let mut order: Vec<(usize, VertexLabel)> = current
            .vertex_multiplicities()
            .into_iter()
            .map(|(l, m)| (m, l))
            .collect();
        order.sort();
        let vstep = order.into_iter().find_map(|(_, label)| {
            let cand = remove_vertex_and_edges(&current, &label).expect("label present");
            (cand.edge_count() > 0 && is_ks(&cand)).then_some(cand)
        });
        match vstep {
            Some(next) => current = next,
            None => return current,
        }
    }
}

/// Exact (k, l) → count table over a stream of MMPHs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    /// Keyed (l, k) so iteration is ascending l then k.
    cells: BTreeMap<(usize, usize), u64>,
}

impl Histogram {
    pub fn cells(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.cells
    }

    /// CSV with header `l,k,count`, one row per nonempty cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,k,count\n");
        for (&(l, k), &count) in &self.cells {
            out.push_str(&format!("{l},{k},{count}\n"));
        }
        out
    }
}

pub fn histogram<'a>(mmphs: impl IntoIterator<Item = &'a Mmph>) -> Histogram {
    let mut cells = BTreeMap::new();
    for m in mmphs {
        *cells
            .entry((m.edge_count(), m.vertex_count()))
            .or_insert(0u64) += 1;
    }
    Histogram { cells }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_mmph;

    #[test]
    fn single_hyperedge_is_colorable_with_expected_witness() {
        let m = parse_mmph("12.", 6).unwrap();
        let verdict = check_colorable(&m);
        let w = verdict.witness().expect("colorable");
        assert!(w.satisfies(&m));
        // highest-multiplicity tie broken by label order puts the 1 on '1'
        assert_eq!(w.value(&VertexLabel::new('1', 0).unwrap()), 1);
        assert_eq!(w.value(&VertexLabel::new('2', 0).unwrap()), 0);
        assert_eq!(w.to_lines(&m), "1=1\n2=0\n");
    }

    #[test]
    fn odd_cycle_of_pairs_is_noncolorable() {
        // exactly-one-per-edge fails on an odd cycle of 2-edges
        let m = parse_mmph("12,23,13.", 3).unwrap();
        assert!(check_colorable(&m).is_ks());
        let even = parse_mmph("12,23,34,14.", 3).unwrap();
        let v = check_colorable(&even);
        assert!(!v.is_ks());
        assert!(v.witness().unwrap().satisfies(&even));
    }

    #[test]
    fn budget_gives_undecided_never_wrong() {
        let m = parse_mmph("12,23,13.", 3).unwrap();
        let v = check_colorable_with_budget(&m, Some(0));
        assert_eq!(v.outcome, KsOutcome::Undecided);
        assert!(!v.is_ks());
        assert!(!v.decided());
    }

    #[test]
    fn criticality_of_odd_cycle() {
        let m = parse_mmph("12,23,13.", 3).unwrap();
        let report = check_critical(&m).unwrap();
        assert!(report.is_critical());
        for role in &report.roles {
            match role {
                EdgeRole::Necessary(_) => {}
                other => panic!("expected necessary, got {other:?}"),
            }
        }
        // colorable input is a distinct error
        let c = parse_mmph("12,23.", 3).unwrap();
        assert!(matches!(check_critical(&c), Err(CriticalityError::NotKs(_))));
    }

    #[test]
    fn redundant_edge_is_reported() {
        // noncolorable triangle plus a pendant hyperedge: deleting the
        // pendant leaves the triangle KS, so the pendant is redundant
        let m = parse_mmph("12,23,13,34.", 3).unwrap();
        assert!(check_colorable(&m).is_ks());
        let report = check_critical(&m).unwrap();
        assert!(!report.is_critical());
        assert_eq!(report.redundant_edges(), vec![3]);
        for (i, role) in report.roles.iter().enumerate() {
            if let EdgeRole::Necessary(w) = role {
                assert!(w.satisfies(&m.without_edge(i)));
            }
        }
    }

    #[test]
    fn strip_vertex_shrinks_edges() {
        let m = parse_mmph("123,234.", 4).unwrap();
        let three = VertexLabel::new('3', 0).unwrap();
        let s = strip_vertex(&m, &three).unwrap();
        assert_eq!(s.vertex_count(), 3);
        assert_eq!(s.edge_count(), 2);
        assert!(s.edges().all(|e| e.len() == 2));
        // rank is preserved even though every edge is now below it
        assert_eq!(s.rank(), 4);
    }

    #[test]
    fn strip_vertex_error_paths() {
        let m = parse_mmph("12,23.", 3).unwrap();
        let two = VertexLabel::new('2', 0).unwrap();
        assert!(matches!(
            strip_vertex(&m, &two),
            Err(StripError::CreatesSmallEdge { .. })
        ));
        let missing = VertexLabel::new('Z', 0).unwrap();
        assert!(matches!(
            strip_vertex(&m, &missing),
            Err(StripError::VertexNotFound(_))
        ));
        // stripping the only shared vertex disconnects the remainder
        let m = parse_mmph("123,345.", 3).unwrap();
        let three = VertexLabel::new('3', 0).unwrap();
        assert!(matches!(
            strip_vertex(&m, &three),
            Err(StripError::InvalidResult(_))
        ));
        // stripping can also collapse two hyperedges into duplicates
        let m = parse_mmph("12U,12,3U1.", 4).unwrap();
        let u = VertexLabel::new('U', 0).unwrap();
        assert!(matches!(
            strip_vertex(&m, &u),
            Err(StripError::InvalidResult(_))
        ));
    }

    #[test]
    fn remove_vertex_and_edges_drops_contexts() {
        let m = parse_mmph("123,345,561.", 3).unwrap();
        let three = VertexLabel::new('3', 0).unwrap();
        let r = remove_vertex_and_edges(&m, &three).unwrap();
        assert_eq!(r.edge_count(), 1);
        assert_eq!(r.vertex_count(), 3);
    }

    #[test]
    fn histogram_cells_and_csv() {
        let a = parse_mmph("12,23.", 3).unwrap();
        let b = parse_mmph("45,56.", 3).unwrap();
        let h = histogram([&a, &b]);
        assert_eq!(h.cells().get(&(2, 3)), Some(&2));
        assert_eq!(h.to_csv(), "l,k,count\n2,3,2\n");
        assert_eq!(histogram([]).to_csv(), "l,k,count\n");
    }
}
