//! Iterated terminal layouts `L, L*, L**, ...`.
//!
//! Nothing here assumes the orbit behaves. An orbit that reaches an
//! unsuccessful layout, a cycle longer than two, or the iteration cap is
//! reported as data, and [`survey_orbits`] collects such cases as
//! counterexamples.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::engine::{simulate, terminal_layout, EngineError};
use crate::graph::Graph;
use crate::layout::Layout;
use crate::solver::{Combinations, Solver};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// `L, L*, L**, ...`, ending with the first repeated layout, the first
    /// unsuccessful layout, or the last layout computed before the cap.
    pub sequence: Vec<Layout>,
    /// Index of the first layout of the cycle.
    pub pre_period: Option<usize>,
    pub period: Option<usize>,
    pub all_successful: bool,
    pub failure_index: Option<usize>,
}

impl OrbitReport {
    pub fn truncated(&self) -> bool {
        self.period.is_none() && self.failure_index.is_none()
    }
}

/// Default iteration cap for a graph of order `n`.
pub fn default_max_iter(n: usize) -> usize {
    4 * n.max(1)
}

pub fn orbit(g: &Graph, layout: &Layout, max_iter: usize) -> Result<OrbitReport, EngineError> {
    let mut sequence = vec![terminal_layout(g, layout).map(|_| layout.clone())?];
    let mut index: BTreeMap<Layout, usize> = BTreeMap::from([(layout.clone(), 0)]);
    for _ in 0..max_iter {
        let current = sequence.last().expect("sequence starts non-empty");
        // Every layout already in the sequence is successful.
        let next = terminal_layout(g, current).expect("checked when pushed");
        let position = sequence.len();
        sequence.push(next.clone());
        if let Some(&first) = index.get(&next) {
            return Ok(OrbitReport {
                sequence,
                pre_period: Some(first),
                period: Some(position - first),
                all_successful: true,
                failure_index: None,
            });
        }
        if !simulate(g, &next)?.success {
            return Ok(OrbitReport {
                sequence,
                pre_period: None,
                period: None,
                all_successful: false,
                failure_index: Some(position),
            });
        }
        index.insert(next, position);
    }
    Ok(OrbitReport {
        sequence,
        pre_period: None,
        period: None,
        all_successful: true,
        failure_index: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reversibility {
    /// `L** = L`.
    pub reversible: bool,
    /// `L*` was not successful, so `L**` does not exist.
    pub intermediate_unsuccessful: bool,
}

pub fn is_reversible(g: &Graph, layout: &Layout) -> Result<Reversibility, EngineError> {
    let once = terminal_layout(g, layout)?;
    match terminal_layout(g, &once) {
        Ok(twice) => Ok(Reversibility {
            reversible: &twice == layout,
            intermediate_unsuccessful: false,
        }),
        Err(EngineError::Unsuccessful) => Ok(Reversibility {
            reversible: false,
            intermediate_unsuccessful: true,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CounterexampleKind {
    /// The orbit reached a layout that is not successful.
    Unsuccessful,
    /// The orbit closed into a cycle of length greater than two.
    LongPeriod,
    /// No repetition within the iteration cap.
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub layout: Layout,
    pub kind: CounterexampleKind,
    pub report: OrbitReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSurvey {
    pub n: usize,
    pub k: usize,
    pub max_iter: usize,
    /// Number of standard layouts of size `k`.
    pub layouts_examined: u64,
    pub successful_layout_count: u64,
    pub max_pre_period: usize,
    /// period -> number of orbits.
    pub periods_observed: BTreeMap<usize, u64>,
    /// Number of starting layouts with `L** = L`.
    pub reversible_count: u64,
    /// Ordered by starting layout.
    pub counterexamples: Vec<Counterexample>,
}

/// Runs [`orbit`] from every successful standard layout with `k` searchers.
pub fn survey_orbits(g: &Graph, k: usize, max_iter: usize) -> OrbitSurvey {
    survey_orbits_with(g, k, max_iter, &Solver::default())
}

/// As [`survey_orbits`], on the solver's worker pool. The result does not
/// depend on the number of workers.
pub fn survey_orbits_with(g: &Graph, k: usize, max_iter: usize, solver: &Solver) -> OrbitSurvey {
    let starts: Vec<Layout> = Combinations::new(g.order(), k)
        .map(Layout::standard)
        .collect();
    let examine = |l: &Layout| -> Option<(Layout, OrbitReport)> {
        let report = orbit(g, l, max_iter).ok()?;
        Some((l.clone(), report))
    };
    let runs: Vec<(Layout, OrbitReport)> =
        solver.install(|| starts.par_iter().filter_map(examine).collect());

    let mut survey = OrbitSurvey {
        n: g.order(),
        k,
        max_iter,
        layouts_examined: starts.len() as u64,
        successful_layout_count: runs.len() as u64,
        max_pre_period: 0,
        periods_observed: BTreeMap::new(),
        reversible_count: 0,
        counterexamples: Vec::new(),
    };
    for (layout, report) in runs {
        if report.pre_period == Some(0) && matches!(report.period, Some(1 | 2)) {
            survey.reversible_count += 1;
        }
        if let Some(pre) = report.pre_period {
            survey.max_pre_period = survey.max_pre_period.max(pre);
        }
        if let Some(p) = report.period {
            *survey.periods_observed.entry(p).or_insert(0) += 1;
        }
        let kind = match (report.failure_index, report.period) {
            (Some(_), _) => Some(CounterexampleKind::Unsuccessful),
            (None, Some(p)) if p > 2 => Some(CounterexampleKind::LongPeriod),
            (None, None) => Some(CounterexampleKind::Truncated),
            _ => None,
        };
        if let Some(kind) = kind {
            survey.counterexamples.push(Counterexample {
                layout,
                kind,
                report,
            });
        }
    }
    survey
}
