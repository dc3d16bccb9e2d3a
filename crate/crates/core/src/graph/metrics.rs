//! Exact structural parameters used by the lower and upper bounds.

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use super::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Number of degree-1 vertices.
    pub leaf_count: usize,
    pub clique_number: usize,
    pub component_vertex_sets: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    pub is_tree: bool,
    pub max_matching_size: usize,
    /// Minimum edge cover summed over components, where an isolated vertex
    /// counts 1. Equals `n - max_matching_size`.
    pub edge_cover_number: usize,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let degrees = g.vertices().map(|v| g.degree(v));
    let max_matching_size = max_matching_size(g);
    GraphMetrics {
        min_degree: degrees.clone().min().unwrap_or(0),
        max_degree: degrees.clone().max().unwrap_or(0),
        leaf_count: degrees.filter(|&d| d == 1).count(),
        clique_number: clique_number(g),
        component_vertex_sets: g.components(),
        cut_vertices: cut_vertices(g),
        is_tree: g.is_tree(),
        max_matching_size,
        edge_cover_number: edge_cover_number(g, max_matching_size),
    }
}

fn max_matching_size(g: &Graph) -> usize {
    let pg = UnGraph::<(), ()>::from_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
    if pg.node_count() == 0 {
        return 0;
    }
    maximum_matching(&pg).len()
}

fn edge_cover_number(g: &Graph, matching: usize) -> usize {
    // Gallai per non-trivial component (n_c - m_c), plus one per isolated
    // vertex; matchings add over components, so this telescopes.
    let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
    let covered = g.order() - isolated;
    covered - matching + isolated
}

/// Vertices whose removal increases the number of components.
fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    let base = g.components().len();
    if g.order() < 3 {
        return Vec::new();
    }
    g.vertices()
        .filter(|&v| g.degree(v) >= 2 && g.remove_vertex(v).components().len() > base)
        .collect()
}

fn clique_number(g: &Graph) -> usize {
    let mut best = 1;
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut rank = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        if g.degree(v) < best {
            break;
        }
        // Only extend with later vertices so each clique is found once.
        let cand: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| rank[w] > i)
            .collect();
        extend_clique(g, 1, &cand, &mut best);
    }
    best
}

fn extend_clique(g: &Graph, size: usize, cand: &[Vertex], best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    for (i, &v) in cand.iter().enumerate() {
        if size + cand.len() - i <= *best {
            return;
        }
        let next: Vec<Vertex> = cand[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        extend_clique(g, size + 1, &next, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use proptest::prelude::*;

    fn family(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn complete_graph() {
        let m = metrics(&family(FamilySpec::Complete(4)));
        assert_eq!(m.min_degree, 3);
        assert_eq!(m.clique_number, 4);
        assert_eq!(m.leaf_count, 0);
        assert_eq!(m.edge_cover_number, 2);
        assert!(m.cut_vertices.is_empty());
    }

    #[test]
    fn star() {
        let m = metrics(&family(FamilySpec::Star(5)));
        assert_eq!(m.min_degree, 1);
        assert_eq!(m.leaf_count, 4);
        assert_eq!(m.clique_number, 2);
        assert_eq!(m.edge_cover_number, 4);
        assert_eq!(m.cut_vertices, vec![0]);
    }

    #[test]
    fn path() {
        let m = metrics(&family(FamilySpec::Path(5)));
        assert_eq!(m.cut_vertices, vec![1, 2, 3]);
        assert!(m.is_tree);
        assert_eq!(m.edge_cover_number, 3);
    }

    #[test]
    fn isolated_vertices_count_in_edge_cover() {
        let k1 = Graph::empty(1).unwrap();
        let m = metrics(&k1);
        assert_eq!(
            (m.clique_number, m.edge_cover_number, m.max_matching_size),
            (1, 1, 0)
        );
        let g = family(FamilySpec::Path(3)).disjoint_union(&Graph::empty(2).unwrap());
        assert_eq!(metrics(&g).edge_cover_number, 2 + 2);
    }

    #[test]
    fn petersen() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let m = metrics(&g);
        assert_eq!(m.min_degree, 3);
        assert_eq!(m.clique_number, 2);
        assert_eq!(m.max_matching_size, 5);
        assert_eq!(m.edge_cover_number, 5);
        assert!(m.cut_vertices.is_empty());
    }

    // Brute-force oracles on at most 8 vertices.
    fn brute_matching(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        (0u32..1 << edges.len())
            .filter_map(|mask| {
                let mut used = 0u32;
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        if used >> u & 1 == 1 || used >> v & 1 == 1 {
                            return None;
                        }
                        used |= 1 << u | 1 << v;
                    }
                }
                Some(mask.count_ones() as usize)
            })
            .max()
            .unwrap()
    }

    fn brute_clique(g: &Graph) -> usize {
        let n = g.order();
        (1u32..1 << n)
            .filter(|&s| {
                (0..n).all(|u| {
                    s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || g.has_edge(u, v))
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn brute_cut_vertices(g: &Graph) -> Vec<Vertex> {
        let base = g.components().len();
        g.vertices()
            .filter(|&v| g.order() > 1 && g.remove_vertex(v).components().len() > base)
            .collect()
    }

    fn arb_small_graph() -> impl Strategy<Value = Graph> {
        (1usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn exact_parameters_match_brute_force(g in arb_small_graph()) {
            let m = metrics(&g);
            prop_assert_eq!(m.max_matching_size, brute_matching(&g));
            prop_assert_eq!(m.clique_number, brute_clique(&g));
            prop_assert_eq!(&m.cut_vertices, &brute_cut_vertices(&g));
            let n = g.order();
            prop_assert!(m.min_degree * n <= 2 * g.size() && 2 * g.size() <= m.max_degree * n);
            prop_assert_eq!(m.is_tree, g.is_connected() && g.size() + 1 == n);
            if g.is_connected() && n >= 2 {
                prop_assert_eq!(m.edge_cover_number + m.max_matching_size, n);
            }
        }
    }
}
