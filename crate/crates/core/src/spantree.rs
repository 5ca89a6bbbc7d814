//! Rooted spanning trees, the depth potential, fundamental paths and
//! edge-exchange moves.
//!
//! A [`RootedTree`] keeps a parent map and a depth map relative to its root.
//! The potential of a tree is the sum of all depths. Exchanging a cotree
//! edge for a tree edge on its fundamental path only moves the component
//! that the removed edge cuts off from the root, so depth updates are
//! confined to that component.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone)]
pub struct RootedTree {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    depth: Vec<usize>,
    tree_edges: BTreeSet<Edge>,
    // Tree neighbors of each vertex, unordered.
    adjacency: Vec<Vec<VertexId>>,
}

impl RootedTree {
    /// Roots the spanning tree with edge set `edges` at `root`, checking that
    /// the edges belong to `g` and form a spanning tree.
    pub fn from_edges<I>(g: &Graph, root: VertexId, edges: I) -> Result<RootedTree>
    where
        I: IntoIterator<Item = Edge>,
    {
        g.check_vertex(root)?;
        let n = g.n();
        let tree_edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(&e) = tree_edges.iter().find(|&&e| !g.has_edge(e)) {
            return Err(Error::NotAnEdge(e));
        }
        if tree_edges.len() + 1 != n {
            return Err(Error::InvalidTree(format!("{} edges for {n} vertices", tree_edges.len())));
        }
        let mut adjacency = vec![Vec::new(); n];
        for e in &tree_edges {
            adjacency[e.u()].push(e.v());
            adjacency[e.v()].push(e.u());
        }
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some(x);
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        if reached != n {
            return Err(Error::InvalidTree("edges do not span the graph".into()));
        }
        Ok(RootedTree { root, parent, depth, tree_edges, adjacency })
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn n(&self) -> usize {
        self.depth.len()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn depths(&self) -> &[usize] {
        &self.depth
    }

    pub fn tree_edges(&self) -> &BTreeSet<Edge> {
        &self.tree_edges
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.tree_edges.contains(&e)
    }

    /// Tree edges in lexicographic order.
    pub fn edge_list(&self) -> Vec<Edge> {
        self.tree_edges.iter().copied().collect()
    }

    /// Unique tree path from `a` to `b`, found by climbing both endpoints to
    /// their lowest common ancestor.
    pub fn path(&self, a: VertexId, b: VertexId) -> Vec<VertexId> {
        let (mut x, mut y) = (a, b);
        let mut head = vec![x];
        let mut tail = vec![y];
        while self.depth[x] > self.depth[y] {
            x = self.parent[x].expect("non-root has a parent");
            head.push(x);
        }
        while self.depth[y] > self.depth[x] {
            y = self.parent[y].expect("non-root has a parent");
            tail.push(y);
        }
        while x != y {
            x = self.parent[x].expect("non-root has a parent");
            y = self.parent[y].expect("non-root has a parent");
            head.push(x);
            tail.push(y);
        }
        tail.pop();
        head.extend(tail.into_iter().rev());
        head
    }

    /// Exchanges `mv.removed` for `mv.added` in place. Only the vertices cut
    /// off from the root by the removal get new parents and depths.
    pub fn swap_in_place(&mut self, g: &Graph, mv: &SwapMove) -> Result<()> {
        let cut = self.check_move(g, mv.added, mv.removed)?;
        let Cut { child, parent, attach, anchor } = cut;

        self.adjacency[child].retain(|&w| w != parent);
        self.adjacency[parent].retain(|&w| w != child);
        self.tree_edges.remove(&mv.removed);

        // Re-root the detached component at `attach`, hanging it from `anchor`.
        self.parent[attach] = Some(anchor);
        self.depth[attach] = self.depth[anchor] + 1;
        let mut stack = vec![attach];
        while let Some(x) = stack.pop() {
            let from = self.parent[x];
            for i in 0..self.adjacency[x].len() {
                let y = self.adjacency[x][i];
                if Some(y) != from {
                    self.parent[y] = Some(x);
                    self.depth[y] = self.depth[x] + 1;
                    stack.push(y);
                }
            }
        }

        self.adjacency[attach].push(anchor);
        self.adjacency[anchor].push(attach);
        self.tree_edges.insert(mv.added);
        Ok(())
    }

    /// Validates an exchange and locates the component it moves.
    fn check_move(&self, g: &Graph, add: Edge, remove: Edge) -> Result<Cut> {
        if !g.has_edge(add) {
            return Err(Error::NotAnEdge(add));
        }
        if self.contains_edge(add) {
            return Err(Error::TreeEdge(add));
        }
        if !self.contains_edge(remove) {
            return Err(Error::InvalidMove(format!("{remove} is not a tree edge")));
        }
        let (a, b) = remove.endpoints();
        let (child, parent) = if self.parent[a] == Some(b) { (a, b) } else { (b, a) };
        // The removed edge lies on the fundamental path of `add` iff exactly
        // one endpoint of `add` sits below `child`.
        let below_u = self.is_ancestor_by_climb(child, add.u());
        let below_v = self.is_ancestor_by_climb(child, add.v());
        match (below_u, below_v) {
            (true, false) => Ok(Cut { child, parent, attach: add.u(), anchor: add.v() }),
            (false, true) => Ok(Cut { child, parent, attach: add.v(), anchor: add.u() }),
            _ => Err(Error::InvalidMove(format!("{remove} is not on the fundamental path of {add}"))),
        }
    }

    fn is_ancestor_by_climb(&self, a: VertexId, mut x: VertexId) -> bool {
        while self.depth[x] > self.depth[a] {
            x = self.parent[x].expect("non-root has a parent");
        }
        x == a
    }

    /// Checks every structural invariant; used by tests.
    pub fn check_invariants(&self, g: &Graph) -> Result<()> {
        let fresh = RootedTree::from_edges(g, self.root, self.tree_edges.iter().copied())?;
        if fresh.parent != self.parent || fresh.depth != self.depth {
            return Err(Error::InvalidTree("parent/depth maps out of date".into()));
        }
        for e in &self.tree_edges {
            let mut nb: Vec<_> = self.adjacency[e.u()].clone();
            nb.sort_unstable();
            if nb.binary_search(&e.v()).is_err() {
                return Err(Error::InvalidTree(format!("adjacency misses {e}")));
            }
        }
        let degree_sum: usize = self.adjacency.iter().map(Vec::len).sum();
        if degree_sum != 2 * self.tree_edges.len() {
            return Err(Error::InvalidTree("adjacency has extra entries".into()));
        }
        Ok(())
    }
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        // `adjacency` is derived from `tree_edges`; its order is irrelevant.
        self.root == other.root
            && self.parent == other.parent
            && self.depth == other.depth
            && self.tree_edges == other.tree_edges
    }
}

impl Eq for RootedTree {}

struct Cut {
    /// Endpoint of the removed edge farther from the root.
    child: VertexId,
    parent: VertexId,
    /// Endpoint of the added edge inside the detached component.
    attach: VertexId,
    /// Endpoint of the added edge that stays with the root.
    anchor: VertexId,
}

/// Breadth-first spanning tree from `root`, visiting neighbors in sorted
/// order. Depths equal graph distances from the root.
pub fn bfs_tree(g: &Graph, root: VertexId) -> Result<RootedTree> {
    g.check_vertex(root)?;
    g.require_connected()?;
    let n = g.n();
    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edges = BTreeSet::new();
    let mut adjacency = vec![Vec::new(); n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = Some(x);
                tree_edges.insert(Edge::new(x, y).expect("simple graph"));
                adjacency[x].push(y);
                adjacency[y].push(x);
                queue.push_back(y);
            }
        }
    }
    Ok(RootedTree { root, parent, depth, tree_edges, adjacency })
}

/// Sum of the depths of all vertices.
pub fn potential(t: &RootedTree) -> u64 {
    t.depth.iter().map(|&d| d as u64).sum()
}

/// The tree path `v_0, ..., v_l` from `e.u()` to `e.v()` for a cotree edge `e`.
pub fn fundamental_path(g: &Graph, t: &RootedTree, e: Edge) -> Result<Vec<VertexId>> {
    if !g.has_edge(e) {
        return Err(Error::NotAnEdge(e));
    }
    if t.contains_edge(e) {
        return Err(Error::TreeEdge(e));
    }
    Ok(t.path(e.u(), e.v()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
    None,
}

/// Shape of the depth sequence along a tree path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneReport {
    pub monotone: bool,
    pub direction: Direction,
    /// Interior positions `i` with `depth(v_{i-1}) > depth(v_i) < depth(v_{i+1})`.
    pub valley_indices: Vec<usize>,
    /// Interior positions `i` with `depth(v_{i-1}) < depth(v_i) > depth(v_{i+1})`.
    pub peak_indices: Vec<usize>,
}

pub fn monotone_report(t: &RootedTree, path: &[VertexId]) -> MonotoneReport {
    let depths: Vec<usize> = path.iter().map(|&v| t.depth(v)).collect();
    classify_depths(&depths)
}

/// Classifies a depth sequence whose consecutive entries differ by one.
pub fn classify_depths(depths: &[usize]) -> MonotoneReport {
    let mut valley_indices = Vec::new();
    let mut peak_indices = Vec::new();
    for (i, w) in depths.windows(3).enumerate() {
        if w[0] > w[1] && w[1] < w[2] {
            valley_indices.push(i + 1);
        } else if w[0] < w[1] && w[1] > w[2] {
            peak_indices.push(i + 1);
        }
    }
    let monotone = valley_indices.is_empty() && peak_indices.is_empty();
    let direction = match (monotone, depths) {
        (true, [a, b, ..]) if a < b => Direction::Increasing,
        (true, [a, b, ..]) if a > b => Direction::Decreasing,
        _ => Direction::None,
    };
    MonotoneReport { monotone, direction, valley_indices, peak_indices }
}

/// One edge exchange: `added` (a cotree edge) enters the tree and `removed`
/// (a tree edge on its fundamental path) leaves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapMove {
    pub added: Edge,
    pub removed: Edge,
    /// Potential after the move minus potential before.
    pub delta_psi: i64,
}

impl SwapMove {
    /// The move that undoes this one.
    pub fn inverse(&self) -> SwapMove {
        SwapMove { added: self.removed, removed: self.added, delta_psi: -self.delta_psi }
    }
}

/// Change in potential from exchanging `remove` for `add`, without touching
/// `t`. Only the detached component is walked.
pub fn delta_potential(g: &Graph, t: &RootedTree, add: Edge, remove: Edge) -> Result<i64> {
    let Cut { child, parent, attach, anchor } = t.check_move(g, add, remove)?;
    let base = t.depth[anchor] as i64 + 1;
    let mut delta = 0i64;
    // (vertex, predecessor in the walk, new depth)
    let mut stack = vec![(attach, anchor, base)];
    while let Some((x, from, d)) = stack.pop() {
        delta += d - t.depth[x] as i64;
        for &y in &t.adjacency[x] {
            if y == from || (x == child && y == parent) {
                continue;
            }
            stack.push((y, x, d + 1));
        }
    }
    Ok(delta)
}

/// Applies a validated move and returns the new tree. `mv.delta_psi` must
/// match the actual change in potential.
pub fn apply_swap(g: &Graph, t: &RootedTree, mv: &SwapMove) -> Result<RootedTree> {
    let mut next = t.clone();
    next.swap_in_place(g, mv)?;
    let actual = potential(&next) as i64 - potential(t) as i64;
    if actual != mv.delta_psi {
        return Err(Error::InvalidMove(format!(
            "declared delta {} but the exchange changes the potential by {actual}",
            mv.delta_psi
        )));
    }
    Ok(next)
}

/// Preorder entry/exit times over a tree for constant-time ancestor tests.
/// Must be rebuilt after the tree changes.
#[derive(Debug, Clone)]
pub struct AncestorIndex {
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl AncestorIndex {
    pub fn new(t: &RootedTree) -> AncestorIndex {
        let n = t.n();
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let mut clock = 0;
        // (vertex, next adjacency position)
        let mut stack = vec![(t.root, 0usize)];
        enter[t.root] = clock;
        clock += 1;
        while let Some(top) = stack.last_mut() {
            let (x, i) = *top;
            if let Some(&y) = t.adjacency[x].get(i) {
                top.1 += 1;
                if Some(y) != t.parent[x] {
                    enter[y] = clock;
                    clock += 1;
                    stack.push((y, 0));
                }
            } else {
                exit[x] = clock;
                stack.pop();
            }
        }
        AncestorIndex { enter, exit }
    }

    /// True iff `a` is `b` or lies on the path from `b` to the root.
    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        self.enter[a] <= self.enter[b] && self.exit[b] <= self.exit[a]
    }

    /// True iff the fundamental path of `e` is monotone in depth, i.e. one
    /// endpoint is an ancestor of the other.
    pub fn is_vertical(&self, e: Edge) -> bool {
        self.is_ancestor(e.u(), e.v()) || self.is_ancestor(e.v(), e.u())
    }
}
