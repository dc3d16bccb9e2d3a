//! Closed forms and explicit optimal layouts for the solved families, and the
//! upper bounds for composite graphs.
//!
//! Witness layouts use the same labels as [`generate`]; a path or cycle
//! `v1 v2 ... vn` is `0 1 ... n-1` here.

use thiserror::Error;

use crate::graph::{generate, FamilySpec, Graph, GraphError, Vertex};
use crate::layout::Layout;
use crate::solver::{solve, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no closed form for {0}; use the pruning algorithm for trees")]
    NotCovered(FamilySpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyAnswer {
    pub spec: FamilySpec,
    pub d: usize,
    pub witness: Layout,
}

pub fn family_deduction_number(spec: &FamilySpec) -> Result<usize, FamilyError> {
    spec.validate()?;
    let d = match spec {
        FamilySpec::Path(n) | FamilySpec::Cycle(n) => n.div_ceil(2),
        FamilySpec::Wheel(4) => 3,
        FamilySpec::Wheel(n) => n.div_ceil(2),
        FamilySpec::Complete(n) | FamilySpec::Star(n) => n - 1,
        FamilySpec::Multipartite(parts) => {
            let total: usize = parts.iter().sum();
            if multipartite_needs_all_but_one(parts) {
                total - 1
            } else {
                total - 2
            }
        }
        FamilySpec::Hypercube(k) => 1 << (k - 1),
        FamilySpec::RandomTree { .. } => return Err(FamilyError::NotCovered(spec.clone())),
    };
    Ok(d)
}

/// Complete graphs and stars need `N - 1`; every other complete multipartite
/// graph needs `N - 2`.
fn multipartite_needs_all_but_one(parts: &[usize]) -> bool {
    parts.iter().all(|&p| p == 1) || (parts.len() == 2 && parts.contains(&1))
}

pub fn family_witness_layout(spec: &FamilySpec) -> Result<Layout, FamilyError> {
    spec.validate()?;
    let layout = match spec {
        FamilySpec::Path(n) => path_witness(*n),
        FamilySpec::Cycle(n) => cycle_witness(*n),
        FamilySpec::Wheel(n) => wheel_witness(*n),
        FamilySpec::Complete(n) | FamilySpec::Star(n) => all_but(*n, &[n - 1]),
        FamilySpec::Multipartite(parts) => multipartite_witness(parts),
        FamilySpec::Hypercube(k) => {
            // Q_k = Q_{k-1} □ P2: one searcher on the first vertex of every
            // P2 copy, i.e. on every even label.
            let p2 = Layout::standard([0]);
            product_witness(1 << (k - 1), None, 2, Some(&p2))
        }
        FamilySpec::RandomTree { .. } => return Err(FamilyError::NotCovered(spec.clone())),
    };
    Ok(layout)
}

pub fn family_answer(spec: &FamilySpec) -> Result<FamilyAnswer, FamilyError> {
    Ok(FamilyAnswer {
        spec: spec.clone(),
        d: family_deduction_number(spec)?,
        witness: family_witness_layout(spec)?,
    })
}

fn all_but(n: usize, skip: &[Vertex]) -> Layout {
    Layout::standard((0..n).filter(|v| !skip.contains(v)))
}

fn path_witness(n: usize) -> Layout {
    if n.is_multiple_of(2) {
        // v1, v3, v5, ...
        Layout::standard((0..n).step_by(2))
    } else {
        // v1 and v2, v4, ..., v_{n-1}
        Layout::standard(std::iter::once(0).chain((1..n).step_by(2)))
    }
}

fn cycle_witness(n: usize) -> Layout {
    match n {
        3 | 4 => Layout::standard([0, 1]),
        // v1, v2, v4, ..., v_{n-2}
        n if n % 2 == 0 => Layout::standard([0].into_iter().chain((1..n - 2).step_by(2))),
        // v1, v2, v4, ..., v_{n-3}, v_n
        n => Layout::standard([0].into_iter().chain((1..n - 3).step_by(2)).chain([n - 1])),
    }
}

fn wheel_witness(n: usize) -> Layout {
    if n == 4 {
        return all_but(4, &[3]);
    }
    if n % 2 == 1 {
        // v1, v_{n-2}, v_{n-1} and, from n = 7 on, v2, v4, ..., v_{n-5}
        let evens = (2..n - 4).step_by(2);
        Layout::standard([1, n - 2, n - 1].into_iter().chain(evens))
    } else {
        // v1, v3, ..., v_{n-5}, v_{n-2}, v_{n-1}
        let odds = (1..n - 4).step_by(2);
        Layout::standard(odds.chain([n - 2, n - 1]))
    }
}

fn multipartite_witness(parts: &[usize]) -> Layout {
    let total: usize = parts.iter().sum();
    if multipartite_needs_all_but_one(parts) {
        return all_but(total, &[total - 1]);
    }
    let starts: Vec<Vertex> = parts
        .iter()
        .scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        })
        .collect();
    let big: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] >= 2).collect();
    // Leave one vertex empty in two parts: two large parts if there are two,
    // otherwise the single large part and the first other part.
    let (a, b) = if big.len() >= 2 {
        (big[0], big[1])
    } else {
        let other = (0..parts.len()).find(|&i| i != big[0]).expect("m >= 2");
        (big[0], other)
    };
    all_but(total, &[starts[a], starts[b]])
}

/// `min(|V(G)| d(H), |V(H)| d(G))`, an upper bound for `d(G □ H)`.
pub fn product_upper_bound(size_g: usize, d_g: usize, size_h: usize, d_h: usize) -> usize {
    (size_g * d_h).min(size_h * d_g)
}

/// Layout on `G □ H` obtained by copying a layout of one factor into every
/// copy of that factor. Labels follow [`crate::graph::cartesian_product`].
/// With both layouts given, the copy using fewer searchers is returned.
pub fn product_witness(
    size_g: usize,
    layout_g: Option<&Layout>,
    size_h: usize,
    layout_h: Option<&Layout>,
) -> Layout {
    let across_h = layout_h.map(|lh| {
        Layout::from_counts(
            (0..size_g).flat_map(|u| lh.iter().map(move |(v, k)| (u * size_h + v, k))),
        )
    });
    let across_g = layout_g.map(|lg| {
        Layout::from_counts(
            lg.iter()
                .flat_map(|(u, k)| (0..size_h).map(move |v| (u * size_h + v, k))),
        )
    });
    match (across_h, across_g) {
        (Some(a), Some(b)) => {
            if b.total() < a.total() {
                b
            } else {
                a
            }
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => Layout::new(),
    }
}

/// `d(P_m □ G) = m n / 2` for even `m`, where `n = |V(G)|`.
pub fn even_path_product_number(m: usize, n: usize) -> Option<usize> {
    (m >= 2 && m.is_multiple_of(2)).then_some(m * n / 2)
}

/// Bound for gluing two graphs at a vertex, or joining them by a bridge:
/// both are at most `d(G1) + d(G2)`.
pub fn join_bound(d1: usize, d2: usize) -> usize {
    d1 + d2
}

/// `min` over cut vertices `u` of `1 + sum d(C)` over the components `C` of
/// `G - u`. `None` if `G` has no cut vertex.
pub fn cut_vertex_upper_bound(g: &Graph) -> Option<usize> {
    cut_vertex_upper_bound_with(g, &Solver::default())
}

pub fn cut_vertex_upper_bound_with(g: &Graph, solver: &Solver) -> Option<usize> {
    let base = g.components().len();
    g.vertices()
        .filter(|&u| g.degree(u) >= 2)
        .filter_map(|u| {
            let rest = g.remove_vertex(u);
            (rest.components().len() > base).then(|| 1 + solver.solve(&rest).d)
        })
        .min()
}

/// Solver agreement for a family member, for spot checks.
pub fn check_family(spec: &FamilySpec) -> Result<bool, FamilyError> {
    let g = generate(spec)?;
    Ok(solve(&g).d == family_deduction_number(spec)?)
}
