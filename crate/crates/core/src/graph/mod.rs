//! Simple undirected graphs on the vertex labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Every constructor validates its input,
//! so the rest of the crate can assume no self-loops, no duplicate edges and
//! symmetric, sorted adjacency lists.

mod edge_list;
mod generators;
mod metrics;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use generators::{
    cartesian_product, enumerate_labeled_trees, generate, prufer_decode, FamilySpec, SplitMix64,
    MAX_ENUMERATED_TREE_ORDER,
};
pub use metrics::{metrics, GraphMetrics};

use thiserror::Error;

/// Vertex label. Always in `0..n` for the graph it belongs to.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: endpoint {vertex} out of range for n = {n}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("labeled tree enumeration supports 1 <= n <= {max}, got {n}")]
    TreeOrderOutOfRange { n: usize, max: usize },
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are validated in order; the
    /// reported "line" of an error is the 1-based index of the offending edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let located = edges
            .into_iter()
            .enumerate()
            .map(|(i, (u, v))| (i + 1, u, v));
        Self::from_located_edges(n, located)
    }

    pub(crate) fn from_located_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (line, u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { line, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj, edge_count })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Builds a graph from edges already known to be valid. Panics otherwise.
    pub(crate) fn from_trusted_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges(n, edges).expect("internally generated edge list is valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    /// Vertices adjacent to at least one leaf.
    pub fn is_stem(&self, v: Vertex) -> bool {
        self.adj[v].iter().any(|&w| self.is_leaf(w))
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
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

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A graph is a forest iff it has no cycles: `|E| = n - #components`.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.order()
    }

    /// Subgraph induced by `vertices` (which must be distinct and in range),
    /// relabeled so that `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v].iter().filter_map(move |&w| {
                (index[w] != usize::MAX && i < index[w]).then_some((i, index[w]))
            })
        });
        Graph::from_trusted_edges(vertices.len(), edges)
    }

    /// `self` with vertex `v` deleted; remaining labels keep their order.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        let keep: Vec<Vertex> = self.vertices().filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_trusted_edges(shift + other.order(), edges)
    }

    /// Disjoint union plus the bridge `a`–`b`, where `b` is a vertex of
    /// `other` (shifted like in [`Graph::disjoint_union`]).
    pub fn bridge(&self, a: Vertex, other: &Graph, b: Vertex) -> Graph {
        let shift = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(std::iter::once((a, b + shift)));
        Graph::from_trusted_edges(shift + other.order(), edges)
    }

    /// Glues `self` and `other` by identifying `a` with `b`. Vertices of
    /// `other` other than `b` are appended after `self`'s vertices, in order.
    pub fn identify(&self, a: Vertex, other: &Graph, b: Vertex) -> Graph {
        let shift = self.order();
        let relabel = |w: Vertex| match w.cmp(&b) {
            std::cmp::Ordering::Equal => a,
            std::cmp::Ordering::Less => w + shift,
            std::cmp::Ordering::Greater => w + shift - 1,
        };
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (relabel(u), relabel(v))));
        Graph::from_trusted_edges(shift + other.order() - 1, edges)
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write_edge_list(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(0, []), Err(GraphError::Empty));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::OutOfRange {
                line: 1,
                vertex: 3,
                n: 3
            })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (2, 2)]),
            Err(GraphError::SelfLoop { line: 2, vertex: 2 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { line: 2, .. })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edges(4, [(3, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 3]);
        for (u, v) in g.edges() {
            assert!(g.has_edge(u, v) && g.has_edge(v, u));
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn structure_queries() {
        let p4 = path(4);
        assert!(p4.is_tree() && p4.is_forest() && p4.is_connected());
        assert!(p4.is_stem(1) && !p4.is_stem(0));
        let two = p4.disjoint_union(&path(2));
        assert_eq!(two.components(), vec![vec![0, 1, 2, 3], vec![4, 5]]);
        assert!(two.is_forest() && !two.is_tree());
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!c3.is_forest());
    }

    #[test]
    fn induced_and_removal() {
        let p5 = path(5);
        let rest = p5.remove_vertex(2);
        assert_eq!(rest.order(), 4);
        assert_eq!(rest.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let sub = p5.induced_subgraph(&[4, 3, 1]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn identify_and_bridge() {
        let p3 = path(3);
        // Identify the middle of one P3 with an end of another: a spider-ish tree.
        let glued = p3.identify(1, &p3, 0);
        assert_eq!(glued.order(), 5);
        assert_eq!(glued.size(), 4);
        assert_eq!(glued.degree(1), 3);
        assert!(glued.is_tree());
        let bridged = p3.bridge(2, &p3, 0);
        assert_eq!(bridged, path(6));
    }
}
