//! Graph families, Cartesian products and labeled-tree generation.

use super::{Graph, GraphError, Vertex};

/// Largest order accepted by [`enumerate_labeled_trees`].
pub const MAX_ENUMERATED_TREE_ORDER: usize = 8;

const MAX_HYPERCUBE_DIMENSION: u32 = 24;

/// A named graph family with its parameters.
///
/// Labelings: `Wheel(n)` has hub `0` and rim cycle `1..n`; `Star(n)` has
/// center `0`; `Multipartite` parts are consecutive label blocks;
/// `Hypercube(k)` labels are `k`-bit strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Complete(usize),
    Star(usize),
    Multipartite(Vec<usize>),
    Hypercube(u32),
    RandomTree { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidFamily(msg));
        match self {
            Self::Path(n) if *n < 1 => bad(format!("path needs n >= 1, got {n}")),
            Self::Cycle(n) if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Self::Wheel(n) if *n < 4 => bad(format!("wheel needs n >= 4, got {n}")),
            Self::Complete(n) if *n < 2 => bad(format!("complete graph needs n >= 2, got {n}")),
            Self::Star(n) if *n < 2 => bad(format!("star needs n >= 2, got {n}")),
            Self::Multipartite(parts) if parts.len() < 2 => bad(format!(
                "multipartite needs at least 2 parts, got {}",
                parts.len()
            )),
            Self::Multipartite(parts) if parts.contains(&0) => {
                bad("multipartite part sizes must be >= 1".to_owned())
            }
            Self::Hypercube(k) if *k < 1 || *k > MAX_HYPERCUBE_DIMENSION => bad(format!(
                "hypercube needs 1 <= k <= {MAX_HYPERCUBE_DIMENSION}, got {k}"
            )),
            Self::RandomTree { n, .. } if *n < 1 => bad("random tree needs n >= 1".to_owned()),
            _ => Ok(()),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            Self::Path(n)
            | Self::Cycle(n)
            | Self::Wheel(n)
            | Self::Complete(n)
            | Self::Star(n)
            | Self::RandomTree { n, .. } => *n,
            Self::Multipartite(parts) => parts.iter().sum(),
            Self::Hypercube(k) => 1 << k,
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Path(n) => write!(f, "P{n}"),
            Self::Cycle(n) => write!(f, "C{n}"),
            Self::Wheel(n) => write!(f, "W{n}"),
            Self::Complete(n) => write!(f, "K{n}"),
            Self::Star(n) => write!(f, "S{n}"),
            Self::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "K({})", parts.join(","))
            }
            Self::Hypercube(k) => write!(f, "Q{k}"),
            Self::RandomTree { n, seed } => write!(f, "T{n}#{seed}"),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let g = match spec {
        FamilySpec::Path(n) => Graph::from_trusted_edges(*n, (1..*n).map(|i| (i - 1, i))),
        FamilySpec::Cycle(n) => {
            Graph::from_trusted_edges(*n, (1..*n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
        }
        FamilySpec::Wheel(n) => {
            let spokes = (1..*n).map(|i| (0, i));
            let rim = (2..*n).map(|i| (i - 1, i)).chain([(1, n - 1)]);
            Graph::from_trusted_edges(*n, spokes.chain(rim))
        }
        FamilySpec::Complete(n) => {
            Graph::from_trusted_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
        }
        FamilySpec::Star(n) => Graph::from_trusted_edges(*n, (1..*n).map(|i| (0, i))),
        FamilySpec::Multipartite(parts) => {
            let mut part_of = Vec::new();
            for (p, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(p, size));
            }
            let n = part_of.len();
            let part_of = &part_of;
            Graph::from_trusted_edges(
                n,
                (0..n).flat_map(move |u| {
                    (u + 1..n)
                        .filter(move |&v| part_of[u] != part_of[v])
                        .map(move |v| (u, v))
                }),
            )
        }
        FamilySpec::Hypercube(k) => {
            let n = 1usize << k;
            let k = *k;
            Graph::from_trusted_edges(
                n,
                (0..n).flat_map(move |x| {
                    (0..k)
                        .map(move |b| (x, x ^ (1 << b)))
                        .filter(|&(x, y)| x < y)
                }),
            )
        }
        FamilySpec::RandomTree { n, seed } => random_tree(*n, *seed),
    };
    Ok(g)
}

/// `g □ h`: vertex `(u, v)` is labeled `u * |V(h)| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let label = move |u: Vertex, v: Vertex| u * nh + v;
    let along_h = g
        .vertices()
        .flat_map(|u| h.edges().map(move |(v, w)| (label(u, v), label(u, w))));
    let along_g = h
        .vertices()
        .flat_map(|v| g.edges().map(move |(u, w)| (label(u, v), label(w, v))));
    Graph::from_trusted_edges(g.order() * nh, along_h.chain(along_g))
}

/// SplitMix64, the generator behind `RandomTree` seeds.
///
/// ```text
/// state = state + 0x9E3779B97F4A7C15            (wrapping)
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB      (wrapping)
/// output z ^ (z >> 31)
/// ```
///
/// A random tree of order `n >= 3` is the Prüfer decoding of the sequence
/// whose `i`-th entry is `next_u64() % n`, for `i = 0..n-2`, starting from
/// `state = seed`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::from_trusted_edges(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = SplitMix64::new(seed);
    let code: Vec<Vertex> = (0..n - 2)
        .map(|_| (rng.next_u64() % n as u64) as Vertex)
        .collect();
    prufer_decode(&code)
}

/// Decodes a Prüfer sequence of length `n - 2` (entries in `0..n`) into the
/// labeled tree on `n` vertices. The empty sequence gives `K2`.
pub fn prufer_decode(code: &[Vertex]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` may
    // jump back below it when a code entry becomes a leaf.
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap_or(0);
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    Graph::from_trusted_edges(n, edges)
}

/// All labeled trees on `n` vertices, one per Prüfer sequence in
/// lexicographic order (`n^(n-2)` trees for `n >= 2`, one for `n = 1`).
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n == 0 || n > MAX_ENUMERATED_TREE_ORDER {
        return Err(GraphError::TreeOrderOutOfRange {
            n,
            max: MAX_ENUMERATED_TREE_ORDER,
        });
    }
    let len = n.saturating_sub(2);
    let mut code = Some(vec![0; len]);
    Ok(std::iter::from_fn(move || {
        let current = code.take()?;
        if n == 1 {
            return Some(Graph::from_trusted_edges(1, []));
        }
        let tree = prufer_decode(&current);
        let mut next = current;
        // Odometer increment; `None` once every digit wrapped.
        for digit in next.iter_mut().rev() {
            *digit += 1;
            if *digit < n {
                code = Some(next);
                break;
            }
            *digit = 0;
        }
        Some(tree)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn family_shapes() {
        let p8 = generate(&FamilySpec::Path(8)).unwrap();
        assert_eq!((p8.order(), p8.size()), (8, 7));
        assert_eq!(p8.vertices().filter(|&v| p8.is_leaf(v)).count(), 2);

        let w5 = generate(&FamilySpec::Wheel(5)).unwrap();
        assert_eq!(w5.degree(0), 4);
        assert!((1..5).all(|v| w5.degree(v) == 3));

        let q3 = generate(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert!(q3.vertices().all(|v| q3.degree(v) == 3));

        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(c5.vertices().all(|v| c5.degree(v) == 2) && c5.is_connected());

        let s5 = generate(&FamilySpec::Star(5)).unwrap();
        assert_eq!(s5.degree(0), 4);

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(k4.size(), 6);

        let k23 = generate(&FamilySpec::Multipartite(vec![2, 3])).unwrap();
        assert_eq!(k23.size(), 6);
        assert!(!k23.has_edge(0, 1) && !k23.has_edge(2, 4) && k23.has_edge(1, 2));
    }

    #[test]
    fn rejects_bad_parameters() {
        for spec in [
            FamilySpec::Path(0),
            FamilySpec::Cycle(2),
            FamilySpec::Wheel(3),
            FamilySpec::Complete(1),
            FamilySpec::Star(1),
            FamilySpec::Multipartite(vec![3]),
            FamilySpec::Multipartite(vec![2, 0]),
            FamilySpec::Hypercube(0),
            FamilySpec::RandomTree { n: 0, seed: 1 },
        ] {
            assert!(generate(&spec).is_err(), "{spec:?}");
        }
    }

    #[test]
    fn products() {
        let p2 = generate(&FamilySpec::Path(2)).unwrap();
        let sq = cartesian_product(&p2, &p2);
        assert_eq!((sq.order(), sq.size()), (4, 4));
        assert!(sq.vertices().all(|v| sq.degree(v) == 2));

        let q3 = cartesian_product(&cartesian_product(&p2, &p2), &p2);
        assert_eq!(q3, generate(&FamilySpec::Hypercube(3)).unwrap());

        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let c3 = generate(&FamilySpec::Cycle(3)).unwrap();
        let g = cartesian_product(&p3, &c3);
        assert_eq!((g.order(), g.size()), (9, 15));
    }

    #[test]
    fn hypercube_equals_iterated_product() {
        let p2 = generate(&FamilySpec::Path(2)).unwrap();
        let mut acc = p2.clone();
        for k in 2..=5 {
            acc = cartesian_product(&acc, &p2);
            assert_eq!(acc, generate(&FamilySpec::Hypercube(k)).unwrap());
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of SplitMix64 seeded with 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn random_trees_are_reproducible_trees() {
        for n in 1..20 {
            for seed in 0..10 {
                let spec = FamilySpec::RandomTree { n, seed };
                let t = generate(&spec).unwrap();
                assert!(t.is_tree());
                assert_eq!(t.order(), n);
                assert_eq!(t, generate(&spec).unwrap());
            }
        }
    }

    #[test]
    fn prufer_known_decoding() {
        // Classic textbook example (1-based [4,4,4,5] on 6 vertices).
        let t = prufer_decode(&[3, 3, 3, 4]);
        assert_eq!(
            t.edges().collect::<Vec<_>>(),
            vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn cayley_counts() {
        for (n, count) in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (7, 16807)] {
            let trees: Vec<Graph> = enumerate_labeled_trees(n).unwrap().collect();
            assert_eq!(trees.len(), count, "n = {n}");
            assert!(trees.iter().all(Graph::is_tree));
            let distinct: HashSet<&Graph> = trees.iter().collect();
            assert_eq!(distinct.len(), count);
        }
        assert!(enumerate_labeled_trees(0).is_err());
        assert!(enumerate_labeled_trees(9).is_err());
    }
}
