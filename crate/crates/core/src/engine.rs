//! The deduction process.
//!
//! Stages are synchronous. At the start of a stage the protected set is
//! frozen; every vertex still holding its initial (mobile) searchers whose
//! number of unprotected neighbours `u` satisfies `1 <= u <= count` fires,
//! sending one searcher to each unprotected neighbour. Arrivals are immobile,
//! and whatever stays behind on a fired vertex never moves again. A vertex
//! whose neighbours are all protected has motionless searchers. A vertex with
//! `u > count` is flummoxed and waits. The game ends at the first stage in
//! which nothing moves.

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::layout::Layout;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("layout uses vertex {vertex}, but the graph has only {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("layout is not successful; it has no terminal layout")]
    Unsuccessful,
    #[error("destem needs a tree")]
    NotATree,
    #[error("destem needs a tree of order at least 3, got {0}")]
    TreeTooSmall(usize),
    #[error("vertex {0} is not a stem")]
    NotAStem(Vertex),
    #[error("stem {0} is unoccupied")]
    StemUnoccupied(Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub stage: usize,
    pub from: Vertex,
    pub to: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    /// 1-based.
    pub index: usize,
    /// Sorted by `(from, to)`.
    pub moves: Vec<Move>,
    /// Vertices with mobile searchers that had more unprotected neighbours
    /// than searchers at the start of the stage.
    pub flummoxed: Vec<Vertex>,
    /// Protected vertices at the end of the stage, sorted.
    pub protected_after: Vec<Vertex>,
}

/// Full record of one game.
///
/// `stages` lists every stage in which searchers moved. When the game stalls
/// with flummoxed searchers, the final move-less stage is recorded too, so the
/// waiting vertices are visible; a game that simply runs out of work records
/// no extra stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTrace {
    pub n: usize,
    pub layout: Layout,
    pub stages: Vec<Stage>,
    pub success: bool,
    pub terminal: Layout,
    pub protected_final: Vec<Vertex>,
    /// Vertices holding at least one searcher that never moved.
    pub motionless: Vec<Vertex>,
}

impl GameTrace {
    pub fn moves(&self) -> impl Iterator<Item = &Move> + '_ {
        self.stages.iter().flat_map(|s| s.moves.iter())
    }

    /// Vertices that received a searcher from `source`.
    pub fn targets_of(&self, source: Vertex) -> Vec<Vertex> {
        self.moves()
            .filter(|m| m.from == source)
            .map(|m| m.to)
            .collect()
    }
}

pub fn check_layout(g: &Graph, layout: &Layout) -> Result<(), EngineError> {
    match layout.max_vertex() {
        Some(vertex) if vertex >= g.order() => Err(EngineError::VertexOutOfRange {
            vertex,
            n: g.order(),
        }),
        _ => Ok(()),
    }
}

pub fn simulate(g: &Graph, layout: &Layout) -> Result<GameTrace, EngineError> {
    check_layout(g, layout)?;
    let n = g.order();
    let initial = layout.to_dense(n);
    let mut protected: Vec<bool> = initial.iter().map(|&k| k > 0).collect();
    let mut spent = vec![false; n];
    let mut moved_out = vec![0usize; n];
    let mut arrivals = vec![0usize; n];
    let mut stages = Vec::new();

    for index in 1.. {
        let mut moves = Vec::new();
        let mut flummoxed = Vec::new();
        let waiting: Vec<Vertex> = (0..n).filter(|&v| initial[v] > 0 && !spent[v]).collect();
        for v in waiting {
            let open: Vec<Vertex> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !protected[w])
                .collect();
            if open.is_empty() {
                spent[v] = true;
            } else if open.len() <= initial[v] {
                spent[v] = true;
                moves.extend(open.into_iter().map(|to| Move {
                    stage: index,
                    from: v,
                    to,
                }));
            } else {
                flummoxed.push(v);
            }
        }
        let done = moves.is_empty();
        for m in &moves {
            protected[m.to] = true;
            moved_out[m.from] += 1;
            arrivals[m.to] += 1;
        }
        if !done || !flummoxed.is_empty() {
            stages.push(Stage {
                index,
                moves,
                flummoxed,
                protected_after: (0..n).filter(|&v| protected[v]).collect(),
            });
        }
        if done {
            break;
        }
    }

    let terminal =
        Layout::from_counts((0..n).map(|v| (v, initial[v] - moved_out[v] + arrivals[v])));
    Ok(GameTrace {
        n,
        layout: layout.clone(),
        stages,
        success: protected.iter().all(|&p| p),
        terminal,
        protected_final: (0..n).filter(|&v| protected[v]).collect(),
        motionless: (0..n).filter(|&v| initial[v] > moved_out[v]).collect(),
    })
}

pub fn is_successful(g: &Graph, layout: &Layout) -> Result<bool, EngineError> {
    Ok(simulate(g, layout)?.success)
}

/// Final searcher positions `L*` of a successful layout.
pub fn terminal_layout(g: &Graph, layout: &Layout) -> Result<Layout, EngineError> {
    let trace = simulate(g, layout)?;
    if !trace.success {
        return Err(EngineError::Unsuccessful);
    }
    Ok(trace.terminal)
}

/// Empties the stem `s` of a tree: the searchers on `s` are moved onto the
/// vertices they would have protected, and any surplus goes to the leaves
/// adjacent to `s` in increasing label order (wrapping around if there are
/// more surplus searchers than leaves). The result is successful whenever the
/// input is.
pub fn destem(g: &Graph, layout: &Layout, s: Vertex) -> Result<Layout, EngineError> {
    check_layout(g, layout)?;
    if s >= g.order() {
        return Err(EngineError::VertexOutOfRange {
            vertex: s,
            n: g.order(),
        });
    }
    if !g.is_tree() {
        return Err(EngineError::NotATree);
    }
    if g.order() < 3 {
        return Err(EngineError::TreeTooSmall(g.order()));
    }
    if !g.is_stem(s) {
        return Err(EngineError::NotAStem(s));
    }
    if !layout.is_occupied(s) {
        return Err(EngineError::StemUnoccupied(s));
    }
    let trace = simulate(g, layout)?;
    if !trace.success {
        return Err(EngineError::Unsuccessful);
    }

    let mut out = layout.clone();
    let on_stem = out.remove(s, usize::MAX);
    let targets = trace.targets_of(s);
    for &t in &targets {
        out.add(t, 1);
    }
    let leaves: Vec<Vertex> = g
        .neighbors(s)
        .iter()
        .copied()
        .filter(|&w| g.is_leaf(w))
        .collect();
    for leaf in leaves.iter().cycle().take(on_stem - targets.len()) {
        out.add(*leaf, 1);
    }
    Ok(out)
}
