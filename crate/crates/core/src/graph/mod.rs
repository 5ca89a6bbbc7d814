//! Simple undirected graphs with a canonical, sorted edge set.
//!
//! Vertices are dense indices `0..n`. Every edge is stored once with its
//! endpoints ordered `u < v`, and the edge list is kept in lexicographic
//! order so that every traversal over a [`Graph`] is deterministic.

mod dot;
mod generate;
mod io;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dot::to_dot;
pub use generate::{gen_gnp, gen_named, Family};
pub use io::{emit_edge_list, parse_dimacs, parse_edge_list};

pub type VertexId = usize;

/// An undirected edge with canonical orientation `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "(VertexId, VertexId)", into = "(VertexId, VertexId)")]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds the canonical edge joining `a` and `b`. Returns `None` for loops.
    pub fn new(a: VertexId, b: VertexId) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, which must be one of the endpoints.
    pub fn other(self, x: VertexId) -> VertexId {
        debug_assert!(self.contains(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    /// The `"u-v"` key used in serialized sign maps.
    pub fn key(self) -> String {
        format!("{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge {}-{}", self.u, self.v)
    }
}

impl TryFrom<(VertexId, VertexId)> for Edge {
    type Error = String;

    fn try_from((a, b): (VertexId, VertexId)) -> std::result::Result<Self, Self::Error> {
        Edge::new(a, b).ok_or_else(|| format!("loop {a}-{b} is not an edge"))
    }
}

impl From<Edge> for (VertexId, VertexId) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

/// What normalization did to a raw input on its way to a simple graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationLog {
    pub dropped_loops: usize,
    pub merged_duplicates: usize,
    /// Non-fatal input issues, such as a header edge count that disagrees
    /// with the number of edge lines.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl NormalizationLog {
    pub fn is_clean(&self) -> bool {
        self.dropped_loops == 0 && self.merged_duplicates == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds the simple graph on `n` vertices spanned by `pairs`, dropping
    /// loops and merging repeated pairs (in either orientation).
    pub fn normalize<I>(n: usize, pairs: I) -> Result<(Graph, NormalizationLog)>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut log = NormalizationLog::default();
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::BadVertex { vertex: x, n });
                }
            }
            match Edge::new(a, b) {
                Some(e) => edges.push(e),
                None => log.dropped_loops += 1,
            }
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        log.merged_duplicates = before - edges.len();
        Ok((Graph::from_canonical(n, edges), log))
    }

    /// Builds a graph from pairs that must already be simple.
    pub fn from_edges(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Graph> {
        let (g, log) = Graph::normalize(n, pairs.iter().copied())?;
        if !log.is_clean() {
            return Err(Error::InvalidParams(format!(
                "edge list is not simple ({} loops, {} duplicates)",
                log.dropped_loops, log.merged_duplicates
            )));
        }
        Ok(g)
    }

    /// `edges` must be sorted, deduplicated and in range.
    fn from_canonical(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.v < self.n && self.adjacency[e.u].binary_search(&e.v).is_ok()
    }

    /// Canonical identifier: `n` followed by the sorted edge list,
    /// e.g. `"3:0-1,1-2"`.
    pub fn id(&self) -> String {
        let edges: Vec<String> = self.edges.iter().map(|e| e.key()).collect();
        format!("{}:{}", self.n, edges.join(","))
    }

    /// Connected component index for every vertex, numbered in order of
    /// their smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adjacency[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadVertex { vertex: v, n: self.n })
        }
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.component_count() {
            0 | 1 => Ok(()),
            components => Err(Error::Disconnected { components }),
        }
    }
}

/// True iff every vertex is reachable from vertex 0. Graphs with at most
/// one vertex are connected.
pub fn is_connected(g: &Graph) -> bool {
    g.component_count() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_is_canonical() {
        assert_eq!(Edge::new(3, 1), Edge::new(1, 3));
        assert_eq!(Edge::new(3, 1).unwrap().endpoints(), (1, 3));
        assert_eq!(Edge::new(2, 2), None);
        assert_eq!(Edge::new(0, 4).unwrap().other(4), 0);
    }

    #[test]
    fn normalize_reports_loops_and_duplicates() {
        let (g, log) = Graph::normalize(3, [(0, 0), (1, 0), (0, 1), (2, 1), (2, 2)]).unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1).unwrap(), Edge::new(1, 2).unwrap()]);
        assert_eq!(log.dropped_loops, 2);
        assert_eq!(log.merged_duplicates, 1);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn normalize_rejects_out_of_range() {
        assert!(matches!(Graph::normalize(2, [(0, 2)]), Err(Error::BadVertex { vertex: 2, n: 2 })));
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&Graph::from_edges(1, &[]).unwrap()));
        assert!(!is_connected(&Graph::from_edges(2, &[]).unwrap()));
        let k4 = gen_named(Family::Complete, &[4]).unwrap();
        assert!(is_connected(&k4));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.component_count(), 2);
        assert!(matches!(two.require_connected(), Err(Error::Disconnected { components: 2 })));
    }

    #[test]
    fn adjacency_is_symmetric_closure() {
        let g = gen_gnp(30, 0.2, 11);
        let mut from_adj = Vec::new();
        for v in 0..g.n() {
            for &w in g.neighbors(v) {
                assert!(g.neighbors(w).contains(&v));
                if v < w {
                    from_adj.push(Edge::new(v, w).unwrap());
                }
            }
        }
        assert_eq!(from_adj, g.edges());
    }

    #[test]
    fn edge_serializes_as_pair() {
        let e = Edge::new(2, 1).unwrap();
        assert_eq!(serde_json::to_string(&e).unwrap(), "[1,2]");
        let back: Edge = serde_json::from_str("[2,1]").unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<Edge>("[3,3]").is_err());
    }
}
