//! Plain-text edge lists.
//!
//! ```text
//! # comments and blank lines are ignored
//! n m
//! u v      (exactly m of these, 0 <= u, v < n, u != v)
//! ```

use super::{Graph, GraphError};

fn malformed(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = fields
            .next()
            .ok_or_else(|| malformed(line, format!("expected two integers in {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| malformed(line, format!("`{tok}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(malformed(line, format!("trailing fields after {what}")));
    }
    Ok(pair)
}

/// Parses the edge-list format. Errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header, "header")?;
    if n == 0 {
        return Err(malformed(header_line, "n must be at least 1"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(malformed(line, format!("more than the {m} declared edges")));
        }
        let (u, v) = parse_pair(line, text, "edge")?;
        edges.push((line, u, v));
        last_line = line;
    }
    if edges.len() < m {
        return Err(malformed(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_located_edges(n, edges)
}

/// Canonical form: header, then edges `u v` with `u < v` in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
