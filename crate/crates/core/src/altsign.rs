//! Alternating sign labelings on spanning trees.
//!
//! A labeling of tree edges by `+`/`-` is alternating when, for every
//! cotree edge, consecutive edges of its fundamental path carry different
//! signs. The construction has two steps:
//!
//! 1. Local search on the potential (sum of depths from a fixed root): while
//!    some cotree edge has a fundamental path that is not monotone in depth,
//!    exchange it for the path edge giving the largest strict gain in
//!    potential. The potential is an integer bounded by `(n-1)^2`, so the
//!    search terminates, and on exit every fundamental path is monotone.
//! 2. Label each tree edge `+` when its deeper endpoint has even depth and
//!    `-` otherwise. Along a monotone path the deeper-endpoint depths of
//!    consecutive edges differ by one, so the signs alternate.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{emit_edge_list, Edge, Graph, VertexId};
use crate::spantree::{
    bfs_tree, classify_depths, delta_potential, fundamental_path, monotone_report, potential, AncestorIndex,
    RootedTree, SwapMove,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Signs on tree edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignLabeling {
    assignment: BTreeMap<Edge, Sign>,
}

impl SignLabeling {
    pub fn new() -> SignLabeling {
        SignLabeling::default()
    }

    pub fn get(&self, e: Edge) -> Option<Sign> {
        self.assignment.get(&e).copied()
    }

    pub fn set(&mut self, e: Edge, s: Sign) {
        self.assignment.insert(e, s);
    }

    /// Negates the sign on `e`, if present.
    pub fn flip(&mut self, e: Edge) {
        if let Some(s) = self.assignment.get_mut(&e) {
            *s = -*s;
        }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        self.assignment.iter().map(|(&e, &s)| (e, s))
    }

    /// Checks that the labeling is defined on exactly the edges in `tree`.
    pub fn check_domain<'a, I>(&self, tree: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let tree: BTreeSet<Edge> = tree.into_iter().copied().collect();
        if let Some(&e) = tree.iter().find(|e| !self.assignment.contains_key(e)) {
            return Err(Error::LabelingNotTotal(e));
        }
        if let Some(&e) = self.assignment.keys().find(|e| !tree.contains(e)) {
            return Err(Error::LabelingNotOnTree(e));
        }
        Ok(())
    }
}

impl FromIterator<(Edge, Sign)> for SignLabeling {
    fn from_iter<I: IntoIterator<Item = (Edge, Sign)>>(iter: I) -> Self {
        SignLabeling { assignment: iter.into_iter().collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveTrace {
    pub initial_psi: u64,
    pub moves: Vec<SwapMove>,
    pub final_psi: u64,
    /// Full or partial passes over the cotree edges, including the final
    /// pass that found no violation.
    pub cotree_scan_passes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub tree: RootedTree,
    pub signs: SignLabeling,
    pub trace: SolveTrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Alternation,
    Monotonicity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationFailure {
    pub cotree_edge: Edge,
    pub path: Vec<VertexId>,
    /// First offending position: for alternation the index `i` with
    /// `sign(v_i v_{i+1}) == sign(v_{i+1} v_{i+2})`, for monotonicity the
    /// first interior local extremum.
    pub index: usize,
    pub property: Property,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub failures: Vec<VerificationFailure>,
}

impl VerificationReport {
    fn from_failures(failures: Vec<VerificationFailure>) -> VerificationReport {
        VerificationReport { ok: failures.is_empty(), failures }
    }
}

/// Picks the exchange for the non-monotone cotree edge `e`: every edge of
/// its fundamental path is tried as the removed edge and the largest gain
/// wins, ties going to the earliest path position.
///
/// Fails with [`Error::NoImprovingSwap`] if no candidate strictly increases
/// the potential.
pub fn find_improving_swap(g: &Graph, t: &RootedTree, e: Edge) -> Result<SwapMove> {
    let path = fundamental_path(g, t, e)?;
    if monotone_report(t, &path).monotone {
        return Err(Error::InvalidMove(format!("the fundamental path of {e} is already monotone")));
    }
    let mut best: Option<SwapMove> = None;
    let mut deltas = Vec::with_capacity(path.len() - 1);
    for w in path.windows(2) {
        let removed = Edge::new(w[0], w[1]).expect("tree path has no loops");
        let delta_psi = delta_potential(g, t, e, removed)?;
        deltas.push(delta_psi);
        if best.is_none_or(|b| delta_psi > b.delta_psi) {
            best = Some(SwapMove { added: e, removed, delta_psi });
        }
    }
    match best {
        Some(mv) if mv.delta_psi >= 1 => Ok(mv),
        _ => Err(Error::NoImprovingSwap(instance_dump(g, t, e, &path, &deltas))),
    }
}

fn instance_dump(g: &Graph, t: &RootedTree, e: Edge, path: &[VertexId], deltas: &[i64]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph (edge list):\n{}", emit_edge_list(g).trim_end());
    let _ = writeln!(out, "root: {}", t.root());
    let tree: Vec<String> = t.tree_edges().iter().map(|e| e.key()).collect();
    let _ = writeln!(out, "tree edges: {}", tree.join(" "));
    let _ = writeln!(out, "depths: {:?}", t.depths());
    let _ = writeln!(out, "cotree edge: {}", e.key());
    let _ = writeln!(out, "fundamental path: {path:?}");
    let depths: Vec<usize> = path.iter().map(|&v| t.depth(v)).collect();
    let _ = writeln!(out, "path depths: {depths:?}");
    let _ = write!(out, "candidate deltas: {deltas:?}");
    out
}

/// Local search from the BFS tree at `root` until every fundamental path is
/// monotone in depth. Cotree edges are scanned in lexicographic order and
/// the scan restarts after each applied exchange.
pub fn monotone_spanning_tree(g: &Graph, root: VertexId) -> Result<(RootedTree, SolveTrace)> {
    let mut tree = bfs_tree(g, root)?;
    let initial_psi = potential(&tree);
    let mut moves = Vec::new();
    let mut passes = 0;
    loop {
        passes += 1;
        let index = AncestorIndex::new(&tree);
        let violation = g.edges().iter().copied().find(|&e| !tree.contains_edge(e) && !index.is_vertical(e));
        let Some(e) = violation else { break };
        let mv = find_improving_swap(g, &tree, e)?;
        tree.swap_in_place(g, &mv)?;
        moves.push(mv);
    }
    let final_psi = potential(&tree);
    debug_assert_eq!(final_psi as i64 - initial_psi as i64, moves.iter().map(|m| m.delta_psi).sum::<i64>());
    Ok((tree, SolveTrace { initial_psi, moves, final_psi, cotree_scan_passes: passes }))
}

/// `+` when the deeper endpoint of a tree edge has even depth, `-` when odd.
pub fn assign_signs(t: &RootedTree) -> SignLabeling {
    t.tree_edges()
        .iter()
        .map(|&e| {
            let m = t.depth(e.u()).max(t.depth(e.v()));
            (e, if m.is_multiple_of(2) { Sign::Plus } else { Sign::Minus })
        })
        .collect()
}

/// Checks the alternating-sign condition on every cotree edge.
///
/// Only the tree's edge set is used: fundamental paths are recomputed from
/// scratch, so depth or parent data carried by `t` is never trusted.
pub fn verify_alternating(g: &Graph, t: &RootedTree, phi: &SignLabeling) -> Result<VerificationReport> {
    verify_alternating_edges(g, t.tree_edges().iter().copied(), phi)
}

/// As [`verify_alternating`], for a bare tree edge set.
pub fn verify_alternating_edges<I>(g: &Graph, tree_edges: I, phi: &SignLabeling) -> Result<VerificationReport>
where
    I: IntoIterator<Item = Edge>,
{
    let paths = PathFinder::new(g, tree_edges)?;
    phi.check_domain(&paths.edges)?;
    let mut failures = Vec::new();
    for &e in g.edges() {
        if paths.edges.binary_search(&e).is_ok() {
            continue;
        }
        let path = paths.path(e.u(), e.v());
        let sign = |i: usize| {
            let edge = Edge::new(path[i], path[i + 1]).expect("tree path has no loops");
            phi.get(edge).expect("domain checked")
        };
        if let Some(index) = (0..path.len().saturating_sub(2)).find(|&i| sign(i) == sign(i + 1)) {
            failures.push(VerificationFailure {
                cotree_edge: e,
                path,
                index,
                property: Property::Alternation,
            });
        }
    }
    Ok(VerificationReport::from_failures(failures))
}

/// Checks that every fundamental path of `t` is strictly monotone in depth
/// from `t`'s root, reporting the first interior extremum of each offender.
pub fn verify_monotone(g: &Graph, t: &RootedTree) -> Result<VerificationReport> {
    let mut failures = Vec::new();
    for &e in g.edges() {
        if t.contains_edge(e) {
            continue;
        }
        let path = fundamental_path(g, t, e)?;
        let depths: Vec<usize> = path.iter().map(|&v| t.depth(v)).collect();
        let report = classify_depths(&depths);
        if !report.monotone {
            let index = report
                .valley_indices
                .iter()
                .chain(&report.peak_indices)
                .copied()
                .min()
                .expect("non-monotone path has an extremum");
            failures.push(VerificationFailure {
                cotree_edge: e,
                path,
                index,
                property: Property::Monotonicity,
            });
        }
    }
    Ok(VerificationReport::from_failures(failures))
}

/// Tree paths over a bare edge set, rooted at vertex 0 independently of any
/// root the caller may have used.
struct PathFinder {
    edges: Vec<Edge>,
    parent: Vec<usize>,
    depth: Vec<usize>,
}

impl PathFinder {
    fn new<I: IntoIterator<Item = Edge>>(g: &Graph, tree_edges: I) -> Result<PathFinder> {
        let mut edges: Vec<Edge> = tree_edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let n = g.n();
        if let Some(&e) = edges.iter().find(|&&e| !g.has_edge(e)) {
            return Err(Error::NotAnEdge(e));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidTree(format!("{} edges for {n} vertices", edges.len())));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        depth[0] = 0;
        parent[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(Error::InvalidTree("edges do not span the graph".into()));
        }
        Ok(PathFinder { edges, parent, depth })
    }

    fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let (mut head, mut tail) = (vec![x], vec![y]);
        while x != y {
            if self.depth[x] >= self.depth[y] {
                x = self.parent[x];
                head.push(x);
            } else {
                y = self.parent[y];
                tail.push(y);
            }
        }
        tail.pop();
        head.extend(tail.into_iter().rev());
        head
    }
}

/// Builds a spanning tree with an alternating sign labeling, rooted at
/// `root` (vertex 0 by default).
pub fn solve(g: &Graph, root: Option<VertexId>) -> Result<Solution> {
    let (tree, trace) = monotone_spanning_tree(g, root.unwrap_or(0))?;
    let signs = assign_signs(&tree);
    Ok(Solution { tree, signs, trace })
}
