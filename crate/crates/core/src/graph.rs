//! Simple connected graphs on vertices `1..=N` and the edge-list text format.

use std::collections::HashMap;
use std::fmt;
use std::io::Read;

use crate::error::{Error, Result, ValidationError};

/// An undirected edge `{lo, hi}` stored with `lo < hi`.
pub type Edge = (usize, usize);

/// A directed edge `(tail, head)`, i.e. the point `e_tail - e_head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub tail: usize,
    pub head: usize,
}

impl DirectedEdge {
    pub fn new(tail: usize, head: usize) -> Self {
        debug_assert_ne!(tail, head);
        DirectedEdge { tail, head }
    }

    pub fn reversed(self) -> Self {
        DirectedEdge {
            tail: self.head,
            head: self.tail,
        }
    }

    pub fn undirected(self) -> Edge {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

impl std::ops::Neg for DirectedEdge {
    type Output = DirectedEdge;

    fn neg(self) -> DirectedEdge {
        self.reversed()
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

/// A validated simple connected graph.
///
/// Edges are kept sorted lexicographically on `(lo, hi)`; an edge's position
/// in that list is its index everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    index: HashMap<Edge, usize>,
    // slot 0 unused so vertices index directly
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(ValidationError::SelfLoop(a).into());
            }
            list.push(if a < b { (a, b) } else { (b, a) });
        }
        if list.is_empty() {
            return Err(ValidationError::NoEdges.into());
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(ValidationError::DuplicateEdge(w[0].0, w[0].1).into());
        }
        if let Some(&(lo, hi)) = list.iter().find(|&&(lo, hi)| lo == 0 || hi > vertex_count) {
            let vertex = if lo == 0 { lo } else { hi };
            return Err(ValidationError::VertexOutOfRange {
                vertex,
                vertex_count,
            }
            .into());
        }
        // a connected graph has at least N - 1 edges; checked before allocating
        if vertex_count > list.len() + 1 {
            return Err(ValidationError::Disconnected.into());
        }

        let mut neighbors = vec![Vec::new(); vertex_count + 1];
        for &(a, b) in &list {
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        let index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let g = Graph {
            vertex_count,
            edges: list,
            index,
            neighbors,
        };
        if !g.is_connected() {
            return Err(ValidationError::Disconnected.into());
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Number of vertices `N`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Ambient dimension `n = N - 1` of the reduced point configuration.
    pub fn reduced_dim(&self) -> usize {
        self.vertex_count - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.index.get(&key).copied()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.vertex_count
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

/// Parses the edge-list format: one `u v` pair per line, `#` comments and
/// blank lines ignored, vertices 1-indexed, `N` equal to the largest label.
pub fn parse_edge_list(input: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(input).map_err(|e| Error::Parse {
        line: input[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1,
        message: "invalid UTF-8".into(),
    })?;
    let mut edges = Vec::new();
    let mut max_label = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(format!(
                "expected two vertex labels, found {} tokens",
                tokens.len()
            )));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&tokens) {
            *slot = tok
                .parse::<usize>()
                .map_err(|_| parse_err(format!("invalid vertex label {tok:?}")))?;
            if *slot == 0 {
                return Err(parse_err("vertex labels start at 1".into()));
            }
        }
        max_label = max_label.max(pair[0]).max(pair[1]);
        edges.push((pair[0], pair[1]));
    }
    Graph::new(max_label, edges)
}

pub fn read_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut buf = Vec::new();
    reader.read_to_end(&mut buf).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })?;
    parse_edge_list(&buf)
}

#[derive(Debug, Clone)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Connected components of the subgraph formed by the given edges, as sorted
/// vertex lists ordered by smallest vertex. Only touched vertices appear.
pub fn components(g: &Graph, edge_subset: &[usize]) -> Vec<Vec<usize>> {
    let mut ds = DisjointSet::new(g.vertex_count() + 1);
    let mut touched = vec![false; g.vertex_count() + 1];
    for &e in edge_subset {
        let (a, b) = g.edge(e);
        touched[a] = true;
        touched[b] = true;
        ds.union(a, b);
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in g.vertices().filter(|&v| touched[v]) {
        groups.entry(ds.find(v)).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_unstable_by_key(|c| c[0]);
    out
}

/// `|E| - |V| + k` for the subgraph spanned by `edge_subset` (given as edge
/// indices), where `V` is the set of touched vertices and `k` the number of
/// its components.
pub fn cyclomatic_number(edge_subset: &[usize], g: &Graph) -> usize {
    let mut sorted = edge_subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let comps = components(g, &sorted);
    let touched: usize = comps.iter().map(Vec::len).sum();
    sorted.len() + comps.len() - touched
}
