//! Canonically oriented spanning trees of maximal bipartite subgraphs and
//! their fundamental cycle vectors.

use std::collections::VecDeque;

use crate::bipartite::{Bipartition, MaxBipartiteSubgraph};
use crate::error::{Error, Result};
use crate::graph::{DirectedEdge, Graph};

/// BFS spanning tree rooted at vertex 1, with every edge oriented from `V-`
/// to `V+` of the owning bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    bipartition: Bipartition,
    // graph edge index of each tree edge, in discovery order
    edges: Vec<usize>,
    oriented: Vec<DirectedEdge>,
    // per vertex (slot 0 unused)
    parent: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    depth: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl SpanningTree {
    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    /// Graph edge indices of the tree edges, in tree order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Canonically oriented tree edges, in tree order.
    pub fn oriented_edges(&self) -> &[DirectedEdge] {
        &self.oriented
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Position of a graph edge within the tree order, if it is a tree edge.
    pub fn position(&self, edge: usize) -> Option<usize> {
        self.position.get(edge).copied().flatten()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.position(edge).is_some()
    }
}

/// Breadth-first spanning tree of `b` from vertex 1, neighbors visited in
/// ascending order.
pub fn spanning_tree(g: &Graph, b: &MaxBipartiteSubgraph) -> SpanningTree {
    let n = g.vertex_count();
    let bip = *b.bipartition();
    let mut parent = vec![None; n + 1];
    let mut parent_edge = vec![None; n + 1];
    let mut depth = vec![0; n + 1];
    let mut position = vec![None; g.edge_count()];
    let mut seen = vec![false; n + 1];
    let mut edges = Vec::with_capacity(n - 1);
    let mut oriented = Vec::with_capacity(n - 1);

    seen[1] = true;
    let mut queue = VecDeque::from([1]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            let e = g.edge_index(v, w).expect("neighbor edge exists");
            if seen[w] || !b.contains(e) {
                continue;
            }
            seen[w] = true;
            parent[w] = Some(v);
            parent_edge[w] = Some(edges.len());
            depth[w] = depth[v] + 1;
            position[e] = Some(edges.len());
            edges.push(e);
            oriented.push(if bip.is_plus(v) {
                DirectedEdge::new(w, v)
            } else {
                DirectedEdge::new(v, w)
            });
            queue.push_back(w);
        }
    }
    debug_assert_eq!(
        edges.len(),
        n - 1,
        "maximal bipartite subgraphs are spanning"
    );
    SpanningTree {
        bipartition: bip,
        edges,
        oriented,
        parent,
        parent_edge,
        depth,
        position,
    }
}

/// Signed incidence vector of a fundamental cycle, indexed by tree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleVector {
    /// The closing edge, oriented from its smaller to its larger endpoint.
    pub non_tree_edge: DirectedEdge,
    /// Index of the closing edge in the graph.
    pub edge: usize,
    pub coeffs: Vec<i8>,
}

impl CycleVector {
    pub fn dot(&self, d: &[i8]) -> i64 {
        self.coeffs
            .iter()
            .zip(d)
            .map(|(&c, &x)| c as i64 * x as i64)
            .sum()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

/// Fundamental cycle closed by the non-tree edge `edge`. The cycle runs along
/// `edge` from its smaller endpoint `u` to its larger endpoint `v` and back
/// through the tree, so that `sum_k coeffs[k] * point(tree_k) = point((v, u))`.
pub fn fundamental_cycle(g: &Graph, t: &SpanningTree, edge: usize) -> Result<CycleVector> {
    if edge >= g.edge_count() {
        return Err(Error::IndexOutOfRange {
            index: edge,
            len: g.edge_count(),
        });
    }
    let (u, v) = g.edge(edge);
    if t.contains(edge) {
        return Err(Error::EdgeInTree(u, v));
    }
    let mut coeffs = vec![0i8; t.len()];
    // tree path from v back to u: climb from v (steps child -> parent), then
    // descend to u (steps parent -> child)
    let up_step = |x: usize| {
        let k = t.parent_edge[x].expect("non-root vertex has a parent edge");
        let sign = if t.oriented[k].tail == x { 1 } else { -1 };
        (k, sign)
    };
    let (mut a, mut b) = (v, u);
    while a != b {
        if t.depth[a] >= t.depth[b] {
            let (k, s) = up_step(a);
            coeffs[k] = s;
            a = t.parent[a].unwrap();
        } else {
            let (k, s) = up_step(b);
            coeffs[k] = -s;
            b = t.parent[b].unwrap();
        }
    }
    Ok(CycleVector {
        non_tree_edge: DirectedEdge::new(u, v),
        edge,
        coeffs,
    })
}
