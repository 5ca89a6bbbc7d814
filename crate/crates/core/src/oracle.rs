//! Brute-force ground truth for small graphs.
//!
//! Everything here is deliberately naive: spanning trees are enumerated by
//! backtracking, potentials are recomputed from scratch for every candidate
//! tree, and tree counts come from an exact determinant. None of it shares
//! code with the incremental machinery the solver uses beyond
//! [`RootedTree::from_edges`].

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::altsign::{solve, verify_alternating};
use crate::error::{Error, Result};
use crate::graph::{is_connected, Edge, Graph, VertexId};
use crate::spantree::{classify_depths, potential, RootedTree};

/// Default cap on the number of spanning trees the enumerator will produce.
pub const DEFAULT_TREE_CAP: usize = 1_000_000;

/// Largest vertex count accepted by [`enumerate_connected_graphs`].
pub const MAX_CORPUS_N: usize = 6;

/// Union-find with undo, no path compression.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

struct Enumerator<'g, F> {
    g: &'g Graph,
    excluded: Vec<bool>,
    chosen: Vec<Edge>,
    dsu: RollbackDsu,
    visit: F,
}

impl<F> Enumerator<'_, F>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    fn run(&mut self, i: usize) -> ControlFlow<()> {
        let target = self.g.n().saturating_sub(1);
        if self.chosen.len() == target {
            return (self.visit)(&self.chosen);
        }
        let edges = self.g.edges();
        if target - self.chosen.len() > edges.len() - i {
            return ControlFlow::Continue(());
        }
        let e = edges[i];

        if self.dsu.union(e.u(), e.v()) {
            self.chosen.push(e);
            let flow = self.run(i + 1);
            self.chosen.pop();
            self.dsu.undo();
            flow?;
        } else {
            self.dsu.undo();
        }

        self.excluded[i] = true;
        if self.still_connected() {
            self.run(i + 1)?;
        }
        self.excluded[i] = false;
        ControlFlow::Continue(())
    }

    /// Whether the graph minus the excluded edges is still connected.
    fn still_connected(&self) -> bool {
        let n = self.g.n();
        let mut adj = vec![Vec::new(); n];
        for (e, _) in self.g.edges().iter().zip(&self.excluded).filter(|(_, &x)| !x) {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }
}

/// Calls `visit` with the (sorted) edge set of every spanning tree of `g`,
/// each exactly once, until `visit` breaks.
pub fn for_each_spanning_tree<F>(g: &Graph, visit: F)
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    if g.n() == 0 || !is_connected(g) {
        return;
    }
    let mut en = Enumerator {
        g,
        excluded: vec![false; g.m()],
        chosen: Vec::with_capacity(g.n()),
        dsu: RollbackDsu::new(g.n()),
        visit,
    };
    let _ = en.run(0);
}

/// All spanning tree edge sets of `g`, in the enumerator's order.
pub fn spanning_tree_edge_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<Edge>>> {
    g.require_connected()?;
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_spanning_tree(g, |edges| {
        if out.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(edges.to_vec());
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::TooLarge(format!("more than {cap} spanning trees")));
    }
    Ok(out)
}

/// Every spanning tree of `g`, rooted at `root`.
pub fn enumerate_spanning_trees(g: &Graph, root: VertexId, cap: usize) -> Result<Vec<RootedTree>> {
    g.check_vertex(root)?;
    spanning_tree_edge_sets(g, cap)?.into_iter().map(|edges| RootedTree::from_edges(g, root, edges)).collect()
}

/// Number of spanning trees via the reduced Laplacian determinant, computed
/// exactly with fraction-free (Bareiss) elimination.
pub fn count_spanning_trees(g: &Graph) -> Result<u128> {
    let n = g.n();
    if n <= 1 {
        return Ok(1);
    }
    // Laplacian with row and column 0 deleted.
    let k = n - 1;
    let mut a = vec![vec![0i128; k]; k];
    for v in 1..n {
        a[v - 1][v - 1] = g.degree(v) as i128;
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        if u > 0 {
            a[u - 1][v - 1] = -1;
            a[v - 1][u - 1] = -1;
        }
    }
    let det = bareiss_determinant(a)?;
    u128::try_from(det).map_err(|_| Error::InvalidParams(format!("negative tree count {det}")))
}

fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> Result<i128> {
    let k = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let lhs = a[i][j].checked_mul(a[p][p]).ok_or(Error::Overflow)?;
                let rhs = a[i][p].checked_mul(a[p][j]).ok_or(Error::Overflow)?;
                let num = lhs.checked_sub(rhs).ok_or(Error::Overflow)?;
                debug_assert_eq!(num % prev, 0);
                a[i][j] = num / prev;
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    Ok(sign * a[k - 1][k - 1])
}

/// Potential of the tree with edge set `edges`, rebuilt from scratch.
pub fn recomputed_potential(g: &Graph, root: VertexId, edges: &[Edge]) -> Result<u64> {
    Ok(potential(&RootedTree::from_edges(g, root, edges.iter().copied())?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPotential {
    /// The maximizer with the lexicographically least edge set.
    pub tree: RootedTree,
    pub max_psi: u64,
    /// How many spanning trees attain `max_psi`.
    pub count: usize,
}

pub fn max_potential_tree(g: &Graph, root: VertexId, cap: usize) -> Result<MaxPotential> {
    let trees = enumerate_spanning_trees(g, root, cap)?;
    let mut best: Option<(u64, Vec<Edge>, RootedTree)> = None;
    let mut count = 0;
    for t in trees {
        let psi = potential(&t);
        let edges = t.edge_list();
        let replace = match &best {
            None => true,
            Some((bp, be, _)) => psi > *bp || (psi == *bp && edges < *be),
        };
        match &best {
            Some((bp, _, _)) if psi == *bp => count += 1,
            Some((bp, _, _)) if psi < *bp => {}
            _ => count = 1,
        }
        if replace {
            best = Some((psi, edges, t));
        }
    }
    let (max_psi, _, tree) = best.expect("connected graph has a spanning tree");
    Ok(MaxPotential { tree, max_psi, count })
}

/// Whether every cotree edge's fundamental path is strictly monotone in depth.
/// Paths are found by walking parent links, depths read from the tree.
pub fn all_paths_monotone(g: &Graph, t: &RootedTree) -> bool {
    g.edges().iter().filter(|&&e| !t.contains_edge(e)).all(|&e| {
        let depths: Vec<usize> = t.path(e.u(), e.v()).iter().map(|&v| t.depth(v)).collect();
        classify_depths(&depths).monotone
    })
}

/// Whether no single exchange (a cotree edge in, an edge of its fundamental
/// path out) strictly increases the potential. Every candidate tree is
/// rebuilt from its edge set.
pub fn is_swap_local_max(g: &Graph, t: &RootedTree) -> Result<bool> {
    let psi = potential(t);
    let edges = t.edge_list();
    for &add in g.edges() {
        if t.contains_edge(add) {
            continue;
        }
        let path = t.path(add.u(), add.v());
        for w in path.windows(2) {
            let remove = Edge::new(w[0], w[1]).expect("tree path has no loops");
            let candidate: Vec<Edge> = edges.iter().copied().filter(|&x| x != remove).chain([add]).collect();
            if recomputed_potential(g, t.root(), &candidate)? > psi {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which check failed: `global_max`, `local_max`, `solve` or `count`.
    pub check: String,
    pub tree_edges: Vec<Edge>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub root: VertexId,
    pub tree_count: u64,
    pub kirchhoff_count: u64,
    pub count_agrees: bool,
    pub max_psi: u64,
    pub max_psi_tree_count: u64,
    pub local_max_count: u64,
    pub global_max_conforms: bool,
    pub all_local_maxima_conform: bool,
    pub solve_agrees: bool,
    pub witnesses: Vec<Witness>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.count_agrees && self.global_max_conforms && self.all_local_maxima_conform && self.solve_agrees
    }
}

/// Runs every brute-force check on `g` rooted at `root`:
/// (a) the Ψ-maximal tree has only monotone fundamental paths;
/// (b) so does every tree that no single exchange improves;
/// (c) `solve` yields a labeling that passes the verifier;
/// (d) the enumerated tree count matches the determinant.
pub fn exhaustive_check(g: &Graph, root: VertexId, cap: usize) -> Result<OracleReport> {
    g.check_vertex(root)?;
    let trees = enumerate_spanning_trees(g, root, cap)?;
    let kirchhoff = count_spanning_trees(g)?;
    let mut witnesses = Vec::new();

    let count_agrees = trees.len() as u128 == kirchhoff;
    if !count_agrees {
        witnesses.push(Witness {
            check: "count".into(),
            tree_edges: Vec::new(),
            detail: format!("enumerated {} trees, determinant {kirchhoff}", trees.len()),
        });
    }

    let max = max_potential_tree(g, root, cap)?;
    let global_max_conforms = all_paths_monotone(g, &max.tree);
    if !global_max_conforms {
        witnesses.push(Witness {
            check: "global_max".into(),
            tree_edges: max.tree.edge_list(),
            detail: format!("maximal potential {} with a non-monotone fundamental path", max.max_psi),
        });
    }

    let mut local_max_count = 0;
    let mut all_local_maxima_conform = true;
    for t in &trees {
        if is_swap_local_max(g, t)? {
            local_max_count += 1;
            if !all_paths_monotone(g, t) {
                all_local_maxima_conform = false;
                witnesses.push(Witness {
                    check: "local_max".into(),
                    tree_edges: t.edge_list(),
                    detail: format!("local maximum with potential {} is not monotone", potential(t)),
                });
            }
        }
    }

    let solve_agrees = match solve(g, Some(root)) {
        Ok(sol) => match verify_alternating(g, &sol.tree, &sol.signs) {
            Ok(report) if report.ok => true,
            Ok(report) => {
                witnesses.push(Witness {
                    check: "solve".into(),
                    tree_edges: sol.tree.edge_list(),
                    detail: format!("{} alternation failures", report.failures.len()),
                });
                false
            }
            Err(err) => {
                witnesses.push(Witness {
                    check: "solve".into(),
                    tree_edges: sol.tree.edge_list(),
                    detail: err.to_string(),
                });
                false
            }
        },
        Err(err) => {
            witnesses.push(Witness {
                check: "solve".into(),
                tree_edges: Vec::new(),
                detail: err.to_string(),
            });
            false
        }
    };

    Ok(OracleReport {
        graph_id: g.id(),
        n: g.n(),
        m: g.m(),
        root,
        tree_count: trees.len() as u64,
        kirchhoff_count: kirchhoff as u64,
        count_agrees,
        max_psi: max.max_psi,
        max_psi_tree_count: max.count as u64,
        local_max_count,
        global_max_conforms,
        all_local_maxima_conform,
        solve_agrees,
        witnesses,
    })
}

/// Every labeled simple connected graph on `n` vertices, in order of the
/// bitmask over the lexicographically ordered pairs of `K_n`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_CORPUS_N {
        return Err(Error::InvalidParams(format!("corpus size n must be in 1..={MAX_CORPUS_N}, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let chosen: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let g = Graph::from_edges(n, &chosen)?;
        if is_connected(&g) {
            out.push(g);
        }
    }
    Ok(out)
}
