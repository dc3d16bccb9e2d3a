//! Exact deduction numbers.
//!
//! Some successful layout of minimum size puts at most one searcher on each
//! vertex, so the search only has to try vertex subsets. For each component,
//! `k` counts up from the best lower bound, and the `k`-subsets are
//! tried in lexicographic order. The first success is the answer, and its
//! subset is the witness. Candidate subsets may be checked in parallel, but
//! the reported witness and counters are always those of the sequential scan.
//!
//! [`solve_multiset_oracle`] is an independent check on small graphs. It
//! searches every layout, stacked searchers included, through the general
//! simulator.

use rayon::prelude::*;
use thiserror::Error;

use crate::engine::simulate;
use crate::graph::{metrics, Graph, Vertex};
use crate::layout::Layout;

/// Largest order accepted by [`solve_multiset_oracle`].
pub const MAX_ORACLE_ORDER: usize = 8;

/// Rank blocks handed to one worker at a time.
const CHUNK: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("the multiset oracle supports 1 <= n <= {max}, got {n}")]
    OracleOutOfRange { n: usize, max: usize },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// Lower and upper bounds on `d(G)` that follow from graph parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    /// `ceil(n / 2)`: a searcher protects at most two vertices.
    pub half_ceil: usize,
    /// Minimum degree.
    pub min_degree: usize,
    /// Number of leaves; only for connected graphs with `n >= 3`.
    pub leaf_bound: Option<usize>,
    /// Clique number minus one.
    pub clique_bound: usize,
    /// Edge cover number (isolated vertices count one each).
    pub edge_cover_bound: usize,
    pub lower: usize,
    /// `n - 1` for a connected graph with an edge; in general the sum of the
    /// per-component values, where an isolated vertex needs its own searcher.
    pub upper: usize,
}

pub fn bounds(g: &Graph) -> BoundsReport {
    let m = metrics(g);
    let n = g.order();
    let half_ceil = n.div_ceil(2);
    let leaf_bound = (m.component_vertex_sets.len() == 1 && n >= 3).then_some(m.leaf_count);
    let clique_bound = m.clique_number - 1;
    let lower = [
        half_ceil,
        m.min_degree,
        leaf_bound.unwrap_or(0),
        clique_bound,
        m.edge_cover_number,
    ]
    .into_iter()
    .max()
    .unwrap_or(1);
    let upper = m
        .component_vertex_sets
        .iter()
        .map(|c| if c.len() >= 2 { c.len() - 1 } else { 1 })
        .sum();
    BoundsReport {
        half_ceil,
        min_degree: m.min_degree,
        leaf_bound,
        clique_bound,
        edge_cover_bound: m.edge_cover_number,
        lower,
        upper,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    /// Sorted vertex set of the component, in the original labels.
    pub vertices: Vec<Vertex>,
    pub d: usize,
    /// Witness in the original labels.
    pub witness: Layout,
    pub layouts_tested: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub d: usize,
    /// Standard layout of size `d`; the union of the component witnesses,
    /// each lexicographically least among the successful subsets of its size.
    pub witness: Layout,
    /// Position of the witness in the sequential candidate order, summed over
    /// components. Independent of how many workers ran.
    pub layouts_tested: u64,
    pub bounds: BoundsReport,
    /// `lower == upper`, so `d` is known before any layout is tried and the
    /// search only locates the witness.
    pub pinned_by_bounds: bool,
    /// One entry per component, in order of smallest vertex. Empty for a
    /// connected graph.
    pub per_component: Vec<ComponentSolution>,
}

/// Exhaustive solver with a fixed degree of parallelism.
#[derive(Default)]
pub struct Solver {
    pool: Option<rayon::ThreadPool>,
    sequential: bool,
}

impl Solver {
    /// `None` uses rayon's global pool; `Some(1)` scans sequentially.
    pub fn new(threads: Option<usize>) -> Result<Self, SolverError> {
        match threads {
            None => Ok(Self::default()),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map(|pool| Self {
                    pool: Some(pool),
                    sequential: t <= 1,
                })
                .map_err(|e| SolverError::ThreadPool(e.to_string())),
        }
    }

    /// Runs `op` on this solver's pool (rayon's global pool if none).
    pub fn install<R, F>(&self, op: F) -> R
    where
        R: Send,
        F: FnOnce() -> R + Send,
    {
        match &self.pool {
            Some(pool) => pool.install(op),
            None => op(),
        }
    }

    pub fn solve(&self, g: &Graph) -> SolveResult {
        let bounds = bounds(g);
        let components = g.components();
        let mut parts = Vec::with_capacity(components.len());
        for vertices in components {
            let sub = g.induced_subgraph(&vertices);
            let (d, local, layouts_tested) = self.solve_connected(&sub);
            let witness = Layout::standard(local.into_iter().map(|v| vertices[v]));
            parts.push(ComponentSolution {
                vertices,
                d,
                witness,
                layouts_tested,
            });
        }
        let d = parts.iter().map(|p| p.d).sum();
        let witness = Layout::standard(parts.iter().flat_map(|p| p.witness.occupied()));
        let layouts_tested = parts.iter().map(|p| p.layouts_tested).sum();
        if parts.len() == 1 {
            parts.clear();
        }
        SolveResult {
            d,
            witness,
            layouts_tested,
            pinned_by_bounds: bounds.lower == bounds.upper,
            bounds,
            per_component: parts,
        }
    }

    fn solve_connected(&self, g: &Graph) -> (usize, Vec<Vertex>, u64) {
        let n = g.order();
        let b = bounds(g);
        let mut tested = 0u64;
        let sim = (n <= 64).then(|| BitSimulator::new(g));
        for k in b.lower..=n {
            let found = if let Some(sim) = &sim {
                self.first_success(n, k, |set| sim.succeeds(set))
            } else {
                // Far beyond exhaustive reach, kept only so `solve` is total.
                let found = Combinations::new(n, k).enumerate().find(|(_, c)| {
                    simulate(g, &Layout::standard(c.iter().copied()))
                        .unwrap()
                        .success
                });
                found.map(|(rank, c)| (rank as u64, c))
            };
            match found {
                Some((rank, subset)) => return (k, subset, tested + rank + 1),
                None => tested += binomial(n, k),
            }
        }
        unreachable!("occupying every vertex always succeeds")
    }

    /// First (by lexicographic rank) `k`-subset of `0..n` whose bitmask
    /// satisfies `test`, with its rank.
    fn first_success<F>(&self, n: usize, k: usize, test: F) -> Option<(u64, Vec<Vertex>)>
    where
        F: Fn(u64) -> bool + Sync,
    {
        let total = binomial(n, k);
        let scan = |chunk: u64| -> Option<(u64, Vec<Vertex>)> {
            let start = chunk * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut comb = unrank_combination(n, k, start);
            for rank in start..end {
                if test(mask_of(&comb)) {
                    return Some((rank, comb));
                }
                if !next_combination(&mut comb, n) {
                    break;
                }
            }
            None
        };
        let chunks = total.div_ceil(CHUNK);
        if self.sequential || chunks <= 1 {
            return (0..chunks).find_map(scan);
        }
        self.install(|| (0..chunks).into_par_iter().find_map_first(scan))
    }
}

/// Solves with rayon's global pool.
pub fn solve(g: &Graph) -> SolveResult {
    Solver::default().solve(g)
}

/// Minimum number of searchers over all successful layouts, stacked
/// searchers allowed, found by brute force through [`simulate`].
pub fn solve_multiset_oracle(g: &Graph) -> Result<usize, SolverError> {
    let n = g.order();
    if n == 0 || n > MAX_ORACLE_ORDER {
        return Err(SolverError::OracleOutOfRange {
            n,
            max: MAX_ORACLE_ORDER,
        });
    }
    for total in 1..=n {
        let mut counts = vec![0usize; n];
        if any_composition(&mut counts, 0, total, &mut |c| {
            simulate(g, &Layout::from_counts(c.iter().copied().enumerate()))
                .unwrap()
                .success
        }) {
            return Ok(total);
        }
    }
    unreachable!("occupying every vertex always succeeds")
}

/// Tries every way of distributing `left` searchers over `counts[i..]`.
fn any_composition(
    counts: &mut [usize],
    i: usize,
    left: usize,
    test: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if i + 1 == counts.len() {
        counts[i] = left;
        let hit = test(counts);
        counts[i] = 0;
        return hit;
    }
    for here in (0..=left).rev() {
        counts[i] = here;
        if any_composition(counts, i + 1, left - here, test) {
            counts[i] = 0;
            return true;
        }
    }
    counts[i] = 0;
    false
}

/// Bitmask version of the game for standard layouts on at most 64 vertices.
/// With one searcher per vertex a vertex fires exactly when it has a single
/// unprotected neighbour.
pub(crate) struct BitSimulator {
    adj: Vec<u64>,
    full: u64,
}

impl BitSimulator {
    pub(crate) fn new(g: &Graph) -> Self {
        assert!(g.order() <= 64);
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let full = if g.order() == 64 {
            u64::MAX
        } else {
            (1u64 << g.order()) - 1
        };
        Self { adj, full }
    }

    pub(crate) fn succeeds(&self, occupied: u64) -> bool {
        let mut protected = occupied;
        let mut mobile = occupied;
        while protected != self.full {
            let mut arrivals = 0u64;
            let mut rest = mobile;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let open = self.adj[v] & !protected;
                match open.count_ones() {
                    0 => mobile &= !(1 << v),
                    1 => {
                        arrivals |= open;
                        mobile &= !(1 << v);
                    }
                    _ => {}
                }
            }
            if arrivals == 0 {
                return false;
            }
            protected |= arrivals;
        }
        true
    }
}

pub(crate) fn mask_of(subset: &[Vertex]) -> u64 {
    subset.iter().fold(0, |m, &v| m | 1 << v)
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
pub(crate) fn unrank_combination(n: usize, k: usize, mut rank: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(k);
    let mut v = 0;
    while out.len() < k {
        let remaining = k - out.len() - 1;
        let with_v = binomial(n - v - 1, remaining);
        if rank < with_v {
            out.push(v);
        } else {
            rank -= with_v;
        }
        v += 1;
    }
    out
}

/// Advances to the next `k`-subset in lexicographic order; false after the last.
pub(crate) fn next_combination(comb: &mut [Vertex], n: usize) -> bool {
    let k = comb.len();
    let Some(i) = (0..k).rev().find(|&i| comb[i] < n - k + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..k {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

/// Lexicographic iterator over the `k`-subsets of `0..n`.
pub struct Combinations {
    n: usize,
    current: Option<Vec<Vertex>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_combination(&mut next, self.n) {
            self.current = Some(next);
        }
        Some(out)
    }
}
