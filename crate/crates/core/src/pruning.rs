//! The pruning algorithm: an optimal layout for trees and forests without
//! search.
//!
//! Each pass looks at the components of what is left. A component with one or
//! two vertices gets a searcher on its lowest label; a larger component gets a
//! searcher on each of its leaves. Then every leaf, every stem and every
//! isolated vertex of the pass-start forest is deleted. Passes repeat until no
//! vertex remains.

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::layout::Layout;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("input is not a forest")]
    NotAForest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneResult {
    /// Standard layout on the original labels.
    pub layout: Layout,
    /// Pruning number, `layout.total()`.
    pub p: usize,
    /// Number of passes.
    pub iterations: usize,
}

pub fn prune(t: &Graph) -> Result<PruneResult, PruneError> {
    if !t.is_forest() {
        return Err(PruneError::NotAForest);
    }
    let n = t.order();
    let mut alive = vec![true; n];
    let mut chosen = Vec::new();
    let mut iterations = 0;

    while alive.iter().any(|&a| a) {
        iterations += 1;
        let degree: Vec<usize> = (0..n)
            .map(|v| {
                if alive[v] {
                    t.neighbors(v).iter().filter(|&&w| alive[w]).count()
                } else {
                    0
                }
            })
            .collect();
        for comp in live_components(t, &alive) {
            if comp.len() <= 2 {
                chosen.push(comp[0]);
            } else {
                chosen.extend(comp.iter().copied().filter(|&v| degree[v] == 1));
            }
        }
        let doomed: Vec<Vertex> = (0..n)
            .filter(|&v| alive[v])
            .filter(|&v| {
                degree[v] <= 1 || t.neighbors(v).iter().any(|&w| alive[w] && degree[w] == 1)
            })
            .collect();
        for v in doomed {
            alive[v] = false;
        }
    }

    let layout = Layout::standard(chosen);
    Ok(PruneResult {
        p: layout.total(),
        layout,
        iterations,
    })
}

/// Components of the subgraph induced by the live vertices, each sorted.
fn live_components(t: &Graph, alive: &[bool]) -> Vec<Vec<Vertex>> {
    let n = t.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in (0..n).filter(|&v| alive[v]) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in t.neighbors(u) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
