//! Face invariants and cycle balancing.

use std::collections::HashSet;

use crate::bipartite::two_coloring;
use crate::config::{affine_dimension, PointConfiguration};
use crate::error::{Error, Result};
use crate::facet::Facet;
use crate::graph::{DirectedEdge, DisjointSet, Edge, Graph};

/// Largest vertex count accepted by [`simple_cycles`].
pub const MAX_CYCLE_VERTICES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceProperties {
    pub dim: usize,
    pub corank: usize,
    pub independent: bool,
    pub circuit: bool,
    /// Connected components of the subgraph on the touched vertices.
    pub component_count: usize,
}

fn sorted_subset(cfg: &PointConfiguration, indices: &[usize]) -> Result<Vec<usize>> {
    if indices.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= cfg.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            len: cfg.len(),
        });
    }
    let mut s = indices.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

fn dim_of(cfg: &PointConfiguration, subset: &[usize]) -> usize {
    let pts: Vec<&[i64]> = subset.iter().map(|&i| cfg.point(i)).collect();
    affine_dimension(&pts)
}

/// Dimension, corank and dependence data of a set of points, computed from the
/// geometry. `component_count` comes from the graph side.
pub fn face_properties(cfg: &PointConfiguration, indices: &[usize]) -> Result<FaceProperties> {
    let subset = sorted_subset(cfg, indices)?;
    let dim = dim_of(cfg, &subset);
    let corank = subset.len() - dim - 1;
    let independent = corank == 0;
    let circuit = !independent
        && (0..subset.len()).all(|skip| {
            let rest: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &i)| i)
                .collect();
            rest.len() == dim_of(cfg, &rest) + 1
        });
    let edges: Vec<Edge> = subset
        .iter()
        .map(|&i| cfg.directed_edge(i).undirected())
        .collect();
    Ok(FaceProperties {
        dim,
        corank,
        independent,
        circuit,
        component_count: touched_components(cfg.vertex_count(), &edges),
    })
}

fn touched_components(vertex_count: usize, edges: &[Edge]) -> usize {
    let mut ds = DisjointSet::new(vertex_count + 1);
    let mut touched = HashSet::new();
    let mut merges = 0;
    for &(a, b) in edges {
        touched.insert(a);
        touched.insert(b);
        if ds.union(a, b) {
            merges += 1;
        }
    }
    touched.len() - merges
}

/// Every simple cycle of `g` (length at least 3) once, as a vertex sequence
/// starting at its smallest vertex with the second vertex smaller than the
/// last.
pub fn simple_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > MAX_CYCLE_VERTICES {
        return Err(Error::too_large(
            "cycle enumeration vertex count",
            MAX_CYCLE_VERTICES,
            n,
        ));
    }
    let mut out = Vec::new();
    for start in 1..=n {
        let mut path = vec![start];
        let mut on_path = vec![false; n + 1];
        on_path[start] = true;
        extend_cycles(g, start, &mut path, &mut on_path, &mut out);
    }
    Ok(out)
}

fn extend_cycles(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("path is nonempty");
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_cycles(g, start, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Whether, for every cycle of `g` traversed in either direction, the given
/// directed edges run along it as often as against it.
pub fn is_balanced(g: &Graph, directed: &[DirectedEdge]) -> Result<bool> {
    let set: HashSet<DirectedEdge> = directed.iter().copied().collect();
    for cycle in simple_cycles(g)? {
        let mut along = 0usize;
        let mut against = 0usize;
        for (k, &a) in cycle.iter().enumerate() {
            let b = cycle[(k + 1) % cycle.len()];
            along += usize::from(set.contains(&DirectedEdge::new(a, b)));
            against += usize::from(set.contains(&DirectedEdge::new(b, a)));
        }
        if along != against {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`is_balanced`] on the directed facet subgraph.
pub fn balancing_check(g: &Graph, facet: &Facet) -> Result<bool> {
    is_balanced(g, &facet.directed_edges)
}

/// Whether every connected component `H` of the subgraph with the given edges
/// is a maximal bipartite subgraph of the induced subgraph `G[V(H)]`.
pub fn components_are_maximal_bipartite(g: &Graph, edges: &[Edge]) -> bool {
    let n = g.vertex_count();
    let mut ds = DisjointSet::new(n + 1);
    for &(a, b) in edges {
        ds.union(a, b);
    }
    let root_of: Vec<usize> = (0..=n).map(|v| ds.find(v)).collect();
    let own: HashSet<Edge> = edges.iter().copied().collect();
    let mut roots: Vec<usize> = edges.iter().map(|&(a, _)| root_of[a]).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.into_iter().all(|root| {
        let members: Vec<usize> = (1..=n).filter(|&v| root_of[v] == root).collect();
        // relabel the component to 1..=k so it can be two-coloured
        let label = |v: usize| members.binary_search(&v).map(|i| i + 1).ok();
        let comp: Vec<Edge> = edges
            .iter()
            .filter(|&&(a, _)| root_of[a] == root)
            .map(|&(a, b)| (label(a).unwrap(), label(b).unwrap()))
            .collect();
        let Some(bip) = two_coloring(members.len(), &comp) else {
            return false;
        };
        g.edges().iter().all(|&(a, b)| match (label(a), label(b)) {
            (Some(la), Some(lb)) if bip.crosses((la, lb)) => own.contains(&(a, b)),
            _ => true,
        })
    })
}
