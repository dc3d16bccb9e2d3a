//! Serializable views of results, shared by the command-line tool and tests.
//!
//! Field order is part of the format: documents produced from equal results
//! are byte-identical. Layout maps are keyed by vertex in increasing numeric
//! order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dynamics::{CounterexampleKind, OrbitReport, OrbitSurvey};
use crate::engine::GameTrace;
use crate::families::FamilyAnswer;
use crate::graph::Vertex;
use crate::layout::Layout;
use crate::pruning::PruneResult;
use crate::solver::{BoundsReport, SolveResult};

fn layout_map(l: &Layout) -> BTreeMap<Vertex, usize> {
    l.as_map().clone()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveJson {
    pub from: Vertex,
    pub to: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageJson {
    pub index: usize,
    pub moves: Vec<MoveJson>,
    pub flummoxed: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub n: usize,
    pub layout: BTreeMap<Vertex, usize>,
    pub success: bool,
    pub stages: Vec<StageJson>,
    pub terminal: BTreeMap<Vertex, usize>,
    pub protected_final: Vec<Vertex>,
    pub motionless: Vec<Vertex>,
}

impl From<&GameTrace> for TraceJson {
    fn from(t: &GameTrace) -> Self {
        Self {
            n: t.n,
            layout: layout_map(&t.layout),
            success: t.success,
            stages: t
                .stages
                .iter()
                .map(|s| StageJson {
                    index: s.index,
                    moves: s
                        .moves
                        .iter()
                        .map(|m| MoveJson {
                            from: m.from,
                            to: m.to,
                        })
                        .collect(),
                    flummoxed: s.flummoxed.clone(),
                })
                .collect(),
            terminal: layout_map(&t.terminal),
            protected_final: t.protected_final.clone(),
            motionless: t.motionless.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsJson {
    pub half_ceil: usize,
    pub min_degree: usize,
    pub leaf_bound: Option<usize>,
    pub clique_bound: usize,
    pub edge_cover_bound: usize,
    pub lower: usize,
    pub upper: usize,
}

impl From<&BoundsReport> for BoundsJson {
    fn from(b: &BoundsReport) -> Self {
        Self {
            half_ceil: b.half_ceil,
            min_degree: b.min_degree,
            leaf_bound: b.leaf_bound,
            clique_bound: b.clique_bound,
            edge_cover_bound: b.edge_cover_bound,
            lower: b.lower,
            upper: b.upper,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveJson {
    pub d: usize,
    pub witness: Vec<Vertex>,
    pub bounds: BoundsJson,
    pub layouts_tested: u64,
}

impl From<&SolveResult> for SolveJson {
    fn from(r: &SolveResult) -> Self {
        Self {
            d: r.d,
            witness: r.witness.occupied().collect(),
            bounds: (&r.bounds).into(),
            layouts_tested: r.layouts_tested,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PruneJson {
    pub p: usize,
    pub layout: Vec<Vertex>,
    pub iterations: usize,
}

impl From<&PruneResult> for PruneJson {
    fn from(r: &PruneResult) -> Self {
        Self {
            p: r.p,
            layout: r.layout.occupied().collect(),
            iterations: r.iterations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyJson {
    pub family: String,
    pub n: usize,
    pub d: usize,
    pub witness: Vec<Vertex>,
}

impl From<&FamilyAnswer> for FamilyJson {
    fn from(a: &FamilyAnswer) -> Self {
        Self {
            family: a.spec.to_string(),
            n: a.spec.order(),
            d: a.d,
            witness: a.witness.occupied().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitJson {
    pub sequence: Vec<BTreeMap<Vertex, usize>>,
    pub pre_period: Option<usize>,
    pub period: Option<usize>,
    pub all_successful: bool,
    pub failure_index: Option<usize>,
}

impl From<&OrbitReport> for OrbitJson {
    fn from(r: &OrbitReport) -> Self {
        Self {
            sequence: r.sequence.iter().map(layout_map).collect(),
            pre_period: r.pre_period,
            period: r.period,
            all_successful: r.all_successful,
            failure_index: r.failure_index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleJson {
    pub layout: BTreeMap<Vertex, usize>,
    pub kind: &'static str,
    pub orbit: OrbitJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyJson {
    pub n: usize,
    pub k: usize,
    pub max_iter: usize,
    pub layouts_examined: u64,
    pub successful_layout_count: u64,
    pub max_pre_period: usize,
    pub periods_observed: BTreeMap<usize, u64>,
    pub reversible_count: u64,
    pub counterexamples: Vec<CounterexampleJson>,
}

pub fn counterexample_kind_name(kind: CounterexampleKind) -> &'static str {
    match kind {
        CounterexampleKind::Unsuccessful => "unsuccessful_terminal",
        CounterexampleKind::LongPeriod => "period_above_two",
        CounterexampleKind::Truncated => "truncated",
    }
}

impl From<&OrbitSurvey> for SurveyJson {
    fn from(s: &OrbitSurvey) -> Self {
        Self {
            n: s.n,
            k: s.k,
            max_iter: s.max_iter,
            layouts_examined: s.layouts_examined,
            successful_layout_count: s.successful_layout_count,
            max_pre_period: s.max_pre_period,
            periods_observed: s.periods_observed.clone(),
            reversible_count: s.reversible_count,
            counterexamples: s
                .counterexamples
                .iter()
                .map(|c| CounterexampleJson {
                    layout: layout_map(&c.layout),
                    kind: counterexample_kind_name(c.kind),
                    orbit: (&c.report).into(),
                })
                .collect(),
        }
    }
}
