//! Searcher layouts: a multiset of vertices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutParseError {
    #[error("empty item in layout string")]
    EmptyItem,
    #[error("`{0}` is not a vertex number")]
    BadVertex(String),
    #[error("`{0}` is not a positive searcher count")]
    BadCount(String),
    #[error("vertex {0} listed twice")]
    Repeated(Vertex),
}

/// How many searchers sit on each vertex. Vertices with no searcher are not
/// stored, so equality is multiset equality.
///
/// The string form is a comma-separated list of `v` (one searcher) or `v:k`
/// (`k` searchers), e.g. `0,1,3:2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Layout {
    counts: BTreeMap<Vertex, usize>,
}

impl Layout {
    pub fn new() -> Self {
        Self::default()
    }

    /// Standard layout with one searcher on each listed vertex.
    pub fn standard<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut layout = Self::new();
        for v in vertices {
            layout.add(v, 1);
        }
        layout
    }

    pub fn from_counts<I: IntoIterator<Item = (Vertex, usize)>>(counts: I) -> Self {
        let mut layout = Self::new();
        for (v, k) in counts {
            layout.add(v, k);
        }
        layout
    }

    pub fn add(&mut self, v: Vertex, k: usize) {
        if k > 0 {
            *self.counts.entry(v).or_insert(0) += k;
        }
    }

    /// Takes up to `k` searchers off `v`; returns how many were removed.
    pub fn remove(&mut self, v: Vertex, k: usize) -> usize {
        let Some(c) = self.counts.get_mut(&v) else {
            return 0;
        };
        let taken = k.min(*c);
        *c -= taken;
        if *c == 0 {
            self.counts.remove(&v);
        }
        taken
    }

    pub fn count(&self, v: Vertex) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    pub fn is_occupied(&self, v: Vertex) -> bool {
        self.counts.contains_key(&v)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// At most one searcher per vertex.
    pub fn is_standard(&self) -> bool {
        self.counts.values().all(|&k| k <= 1)
    }

    /// Occupied vertices in increasing order.
    pub fn occupied(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.counts.keys().copied()
    }

    /// `(vertex, count)` pairs in increasing vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.counts.iter().map(|(&v, &k)| (v, k))
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.counts.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Dense count vector of length `n`. Vertices `>= n` are ignored.
    pub fn to_dense(&self, n: usize) -> Vec<usize> {
        let mut dense = vec![0; n];
        for (v, k) in self.iter().filter(|&(v, _)| v < n) {
            dense[v] = k;
        }
        dense
    }

    pub fn as_map(&self) -> &BTreeMap<Vertex, usize> {
        &self.counts
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, k)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if k == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}:{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Layout {
    type Err = LayoutParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut layout = Layout::new();
        if s.trim().is_empty() {
            return Ok(layout);
        }
        for item in s.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(LayoutParseError::EmptyItem);
            }
            let (v, k) = match item.split_once(':') {
                Some((v, k)) => (v.trim(), Some(k.trim())),
                None => (item, None),
            };
            let v: Vertex = v
                .parse()
                .map_err(|_| LayoutParseError::BadVertex(v.to_owned()))?;
            let k = match k {
                None => 1,
                Some(k) => match k.parse::<usize>() {
                    Ok(k) if k > 0 => k,
                    _ => return Err(LayoutParseError::BadCount(k.to_owned())),
                },
            };
            if layout.is_occupied(v) {
                return Err(LayoutParseError::Repeated(v));
            }
            layout.add(v, k);
        }
        Ok(layout)
    }
}

impl FromIterator<Vertex> for Layout {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::standard(iter)
    }
}
