//! Bipartitions and maximal bipartite subgraphs.
//!
//! A maximal bipartite subgraph of a connected graph is connected, spanning,
//! and contains every edge crossing its (unique) bipartition. Conversely a
//! vertex bipartition whose crossing edges form a connected spanning subgraph
//! yields a maximal bipartite subgraph, since any other edge joins two vertices
//! of the same colour and closes an odd cycle. Enumerating bipartitions with
//! vertex 1 fixed on the plus side therefore lists each subgraph exactly once.

use crate::error::{Error, Result};
use crate::graph::{DisjointSet, Edge, Graph};

/// Largest vertex count accepted by [`enumerate_maximal_bipartite_subgraphs`]
/// (the scan visits `2^(N-1)` bipartitions).
pub const MAX_BIPARTITION_VERTICES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

/// A split `V+ ∪ V-` of `1..=N` with both sides nonempty, normalized so that
/// vertex 1 lies in `V+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    // bit v-1 set iff v in V+
    plus_mask: u64,
    vertex_count: usize,
}

impl Bipartition {
    /// Builds the canonical bipartition with the given plus side; the sides
    /// are swapped if vertex 1 was listed on the minus side.
    pub fn new(vertex_count: usize, plus: &[usize]) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::too_large(
                "bipartition vertex count",
                64,
                vertex_count,
            ));
        }
        let mut mask = 0u64;
        for &v in plus {
            if v == 0 || v > vertex_count {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    len: vertex_count,
                });
            }
            mask |= 1 << (v - 1);
        }
        Self::from_mask(vertex_count, mask)
    }

    pub(crate) fn from_mask(vertex_count: usize, mut plus_mask: u64) -> Result<Self> {
        let all = full_mask(vertex_count);
        plus_mask &= all;
        if plus_mask & 1 == 0 {
            plus_mask = all & !plus_mask;
        }
        if plus_mask == all {
            return Err(Error::Domain("bipartition needs two nonempty sides".into()));
        }
        Ok(Bipartition {
            plus_mask,
            vertex_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Bitmask of `V+` (bit `v - 1` for vertex `v`).
    pub fn plus_mask(&self) -> u64 {
        self.plus_mask
    }

    pub fn side(&self, v: usize) -> Side {
        if self.plus_mask >> (v - 1) & 1 == 1 {
            Side::Plus
        } else {
            Side::Minus
        }
    }

    pub fn is_plus(&self, v: usize) -> bool {
        self.side(v) == Side::Plus
    }

    pub fn plus(&self) -> Vec<usize> {
        (1..=self.vertex_count)
            .filter(|&v| self.is_plus(v))
            .collect()
    }

    pub fn minus(&self) -> Vec<usize> {
        (1..=self.vertex_count)
            .filter(|&v| !self.is_plus(v))
            .collect()
    }

    pub fn crosses(&self, (a, b): Edge) -> bool {
        self.side(a) != self.side(b)
    }
}

fn full_mask(vertex_count: usize) -> u64 {
    if vertex_count >= 64 {
        u64::MAX
    } else {
        (1u64 << vertex_count) - 1
    }
}

/// A maximal bipartite subgraph: a bipartition together with all of the
/// graph's edges crossing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaxBipartiteSubgraph {
    bipartition: Bipartition,
    edges: Vec<usize>,
}

impl MaxBipartiteSubgraph {
    /// Checks that the crossing edges of `bipartition` form a connected
    /// spanning subgraph of `g`.
    pub fn from_bipartition(g: &Graph, bipartition: Bipartition) -> Option<Self> {
        if bipartition.vertex_count() != g.vertex_count() {
            return None;
        }
        let edges: Vec<usize> = (0..g.edge_count())
            .filter(|&e| bipartition.crosses(g.edge(e)))
            .collect();
        if edges.len() + 1 < g.vertex_count() {
            return None;
        }
        let mut ds = DisjointSet::new(g.vertex_count() + 1);
        let merges = edges
            .iter()
            .filter(|&&e| {
                let (a, b) = g.edge(e);
                ds.union(a, b)
            })
            .count();
        (merges + 1 == g.vertex_count()).then_some(MaxBipartiteSubgraph { bipartition, edges })
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    /// Edge indices into the owning graph, ascending.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    pub fn edge_pairs(&self, g: &Graph) -> Vec<Edge> {
        self.edges.iter().map(|&e| g.edge(e)).collect()
    }

    /// Cyclomatic number `|E(B)| - N + 1` of this connected spanning subgraph.
    pub fn corank(&self) -> usize {
        self.edges.len() + 1 - self.bipartition.vertex_count()
    }
}

/// All maximal bipartite subgraphs of `g`, ordered by the bitmask of `V+`.
pub fn enumerate_maximal_bipartite_subgraphs(g: &Graph) -> Result<Vec<MaxBipartiteSubgraph>> {
    let n = g.vertex_count();
    if n > MAX_BIPARTITION_VERTICES {
        return Err(Error::too_large(
            "vertex count",
            MAX_BIPARTITION_VERTICES,
            n,
        ));
    }
    let mut out = Vec::new();
    // vertex 1 is always in V+; the remaining N-1 bits range over all
    // assignments except the one putting everything in V+
    for rest in 0..(1u64 << (n - 1)) - 1 {
        let mask = 1 | (rest << 1);
        let bip = Bipartition::from_mask(n, mask)?;
        if let Some(b) = MaxBipartiteSubgraph::from_bipartition(g, bip) {
            out.push(b);
        }
    }
    Ok(out)
}

/// Two-colouring of the subgraph given by `edge_subset`, if it is connected,
/// spanning and bipartite.
pub fn spanning_two_coloring(g: &Graph, edge_subset: &[usize]) -> Option<Bipartition> {
    let pairs: Vec<Edge> = edge_subset.iter().map(|&e| g.edge(e)).collect();
    two_coloring(g.vertex_count(), &pairs)
}

/// Two-colouring of the graph on `1..=vertex_count` with the given edges, if
/// it is connected and bipartite.
pub fn two_coloring(vertex_count: usize, edges: &[Edge]) -> Option<Bipartition> {
    let n = vertex_count;
    if !(2..=64).contains(&n) {
        return None;
    }
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        if a == 0 || b == 0 || a > n || b > n {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color: Vec<Option<bool>> = vec![None; n + 1];
    color[1] = Some(true);
    let mut stack = vec![1];
    while let Some(v) = stack.pop() {
        let cv = color[v]?;
        for &w in &adj[v] {
            match color[w] {
                None => {
                    color[w] = Some(!cv);
                    stack.push(w);
                }
                Some(cw) if cw == cv => return None,
                Some(_) => {}
            }
        }
    }
    let mut mask = 0u64;
    for (v, c) in color.iter().enumerate().skip(1) {
        if (*c)? {
            mask |= 1 << (v - 1);
        }
    }
    Bipartition::from_mask(n, mask).ok()
}

/// Whether `g` contains a cycle of even length: equivalently, whether some
/// maximal bipartite subgraph has a cycle.
pub fn has_even_cycle(g: &Graph) -> Result<bool> {
    Ok(enumerate_maximal_bipartite_subgraphs(g)?
        .iter()
        .any(|b| b.corank() >= 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::parse_edge_list;

    #[test]
    fn bipartite_graph_is_its_own_unique_subgraph() {
        let c4 = families::cycle(4).unwrap();
        let subs = enumerate_maximal_bipartite_subgraphs(&c4).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].edges(), &[0, 1, 2, 3]);
        assert_eq!(subs[0].bipartition().plus(), vec![1, 3]);
        assert_eq!(subs[0].corank(), 1);
    }

    #[test]
    fn triangle_has_three_paths() {
        let c3 = families::cycle(3).unwrap();
        let subs = enumerate_maximal_bipartite_subgraphs(&c3).unwrap();
        assert_eq!(subs.len(), 3);
        for b in &subs {
            assert_eq!(b.edges().len(), 2);
            assert_eq!(b.corank(), 0);
        }
        let masks: Vec<u64> = subs.iter().map(|b| b.bipartition().plus_mask()).collect();
        assert_eq!(masks, vec![0b001, 0b011, 0b101]);
    }

    #[test]
    fn joined_cycle_example_has_seven_subgraphs() {
        let g = parse_edge_list(b"1 2\n2 3\n3 4\n4 1\n4 5\n5 6\n6 7\n7 1\n").unwrap();
        let subs = enumerate_maximal_bipartite_subgraphs(&g).unwrap();
        assert_eq!(subs.len(), 7);
        let trees = subs.iter().filter(|b| b.corank() == 0).count();
        assert_eq!(trees, 3);
        let square = [
            g.edge_index(1, 2),
            g.edge_index(2, 3),
            g.edge_index(3, 4),
            g.edge_index(1, 4),
        ];
        for b in subs.iter().filter(|b| b.corank() == 1) {
            assert!(square.iter().all(|e| b.contains(e.unwrap())));
        }
    }

    #[test]
    fn bipartition_canonicalizes_vertex_one() {
        let b = Bipartition::new(4, &[2, 4]).unwrap();
        assert_eq!(b.plus(), vec![1, 3]);
        assert_eq!(b.minus(), vec![2, 4]);
        assert!(Bipartition::new(3, &[1, 2, 3]).is_err());
        assert!(Bipartition::new(3, &[]).is_err());
    }

    #[test]
    fn even_cycles() {
        assert!(!has_even_cycle(&families::cycle(3).unwrap()).unwrap());
        assert!(has_even_cycle(&families::cycle(4).unwrap()).unwrap());
        assert!(!has_even_cycle(&families::cycle(5).unwrap()).unwrap());
        assert!(has_even_cycle(&families::complete(4).unwrap()).unwrap());
        assert!(!has_even_cycle(&families::path(5).unwrap()).unwrap());
    }

    #[test]
    fn two_coloring() {
        let c4 = families::cycle(4).unwrap();
        let b = spanning_two_coloring(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(b.plus(), vec![1, 3]);
        let c3 = families::cycle(3).unwrap();
        assert!(spanning_two_coloring(&c3, &[0, 1, 2]).is_none());
        // not spanning
        assert!(spanning_two_coloring(&c4, &[0]).is_none());
    }
}
