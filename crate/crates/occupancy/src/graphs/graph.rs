use std::collections::VecDeque;
use std::fmt;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices, over the limit of {1} for this operation")]
    TooLarge(usize, usize),
    #[error("named graph {name}: expected {field} {expected}, got {got}")]
    ValidationMismatch {
        name: String,
        field: &'static str,
        expected: String,
        got: String,
    },
    #[error("vertex set is not independent: {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("{0}")]
    Precondition(String),
    #[error("io error: {0}")]
    Io(String),
}

/// Simple undirected graph with sorted per-vertex adjacency lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|list| list.len() == d)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// BFS from each vertex; when a non-tree edge closes a walk the sum of
    /// the endpoint depths bounds a cycle through the root, and scanning all
    /// roots makes the minimum exact.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for src in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y && parent[y] != x {
                        let c = dist[x] + dist[y] + 1;
                        if best.is_none_or(|b| c < b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        best
    }

    /// Distances from `src` by BFS; unreachable vertices get `usize::MAX`.
    pub fn distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn check_independent(&self, set: &[usize]) -> Result<(), GraphError> {
        for (i, &u) in set.iter().enumerate() {
            if u >= self.vertex_count() {
                return Err(GraphError::VertexOutOfRange(u, self.vertex_count()));
            }
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return Err(GraphError::NotIndependent(u, v));
                }
            }
        }
        Ok(())
    }

    /// Parse the text format: first non-comment line `n m`, then `m` lines
    /// `u v` with 0-based vertex ids. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty graph file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header line {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header line {header:?}")))?;
        if it.next().is_some() {
            return Err(GraphError::Parse(format!("trailing tokens in header {header:?}")));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| GraphError::Parse(format!("bad edge line {line:?}")))?;
            if it.next().is_some() {
                return Err(GraphError::Parse(format!("trailing tokens in edge line {line:?}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse(format!(
                "header promises {m} edges, file has {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn load(path: &Path) -> Result<Self, GraphError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GraphError::Io(format!("{}: {e}", path.display())))?;
        Graph::parse(&text)
    }

    /// Disjoint union.
    pub fn union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + offset).collect()),
        );
        Graph { adj }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.vertex_count(), self.edge_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(3, 3))
        ));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        ));
    }

    #[test]
    fn girth_of_cycles_and_forests() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.girth(), Some(4));
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Some(3));
    }

    #[test]
    fn regularity() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c5.is_regular(2));
        assert!(!c5.is_regular(3));
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = format!("# a four-cycle\n{g}");
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert!(matches!(Graph::parse("oops"), Err(GraphError::Parse(_))));
        assert!(matches!(Graph::parse("2 1\n0"), Err(GraphError::Parse(_))));
        assert!(matches!(Graph::parse("2 2\n0 1"), Err(GraphError::Parse(_))));
    }
}
