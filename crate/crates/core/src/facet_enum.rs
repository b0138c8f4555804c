//! Facet enumeration through maximal bipartite subgraphs.
//!
//! Fix a maximal bipartite subgraph `B` with bipartition `(V+, V-)` and its
//! canonically oriented spanning tree `T` (edges from `V-` to `V+`). The
//! facets whose facet subgraph is `B` are in bijection with the sign vectors
//! `d ∈ {±1}^n` such that, for every fundamental cycle vector `c(e)` of `T`,
//!
//! * `c(e) · d = ±1` when `e ∈ E(B) \ E(T)`, and
//! * `c(e) · d = 0` when `e ∈ E(G) \ E(B)`.
//!
//! The facet for `d` contains the signed tree points `d_k x_k`, and its
//! normalized normal `a` solves `<d_k x_k, a> = -1` on the tree.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bipartite::{
    enumerate_maximal_bipartite_subgraphs, has_even_cycle, MaxBipartiteSubgraph,
};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::facet::{verify_facet, Facet};
use crate::graph::{DirectedEdge, Graph};
use crate::tree::{fundamental_cycle, spanning_tree, CycleVector, SpanningTree};

/// Largest tree length accepted by [`enumerate_sign_vectors`].
pub const MAX_SIGN_VECTOR_LEN: usize = 30;

/// Signs `d ∈ {±1}^n` attached to the tree edges, in tree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if entries.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::Domain("sign vector entries must be ±1".into()));
        }
        Ok(SignVector(entries))
    }

    pub fn all_plus(len: usize) -> Self {
        SignVector(vec![1; len])
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The cycle equations for one maximal bipartite subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleConstraintSystem {
    pub tree: SpanningTree,
    /// Rows for edges of `B` outside the tree; each must evaluate to `±1`.
    pub rows_pm: Vec<CycleVector>,
    /// Rows for edges of `G` outside `B`; each must evaluate to `0`.
    pub rows_zero: Vec<CycleVector>,
}

impl CycleConstraintSystem {
    pub fn row_count(&self) -> usize {
        self.rows_pm.len() + self.rows_zero.len()
    }

    pub fn is_satisfied_by(&self, d: &SignVector) -> bool {
        d.len() == self.tree.len()
            && self.rows_pm.iter().all(|r| r.dot(d.entries()).abs() == 1)
            && self.rows_zero.iter().all(|r| r.dot(d.entries()) == 0)
    }
}

pub fn build_cycle_system(g: &Graph, b: &MaxBipartiteSubgraph) -> CycleConstraintSystem {
    let tree = spanning_tree(g, b);
    let mut rows_pm = Vec::new();
    let mut rows_zero = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| !tree.contains(e)) {
        let row = fundamental_cycle(g, &tree, e).expect("edge is outside the tree");
        if b.contains(e) {
            rows_pm.push(row);
        } else {
            rows_zero.push(row);
        }
    }
    CycleConstraintSystem {
        tree,
        rows_pm,
        rows_zero,
    }
}

struct SignSearch<'a> {
    rows: Vec<(&'a [i8], bool)>,
    // remaining[r][k]: nonzero entries of row r at positions >= k
    remaining: Vec<Vec<i64>>,
    len: usize,
}

impl<'a> SignSearch<'a> {
    fn new(sys: &'a CycleConstraintSystem) -> Self {
        let len = sys.tree.len();
        let rows: Vec<(&[i8], bool)> = sys
            .rows_pm
            .iter()
            .map(|r| (r.coeffs.as_slice(), true))
            .chain(sys.rows_zero.iter().map(|r| (r.coeffs.as_slice(), false)))
            .collect();
        let remaining = rows
            .iter()
            .map(|(c, _)| {
                let mut rem = vec![0i64; len + 1];
                for k in (0..len).rev() {
                    rem[k] = rem[k + 1] + i64::from(c[k] != 0);
                }
                rem
            })
            .collect();
        SignSearch {
            rows,
            remaining,
            len,
        }
    }

    fn feasible(&self, sums: &[i64], next: usize) -> bool {
        self.rows
            .iter()
            .zip(sums)
            .zip(&self.remaining)
            .all(|(((_, pm), &s), rem)| {
                let r = rem[next];
                if *pm {
                    (s - 1).abs() <= r || (s + 1).abs() <= r
                } else {
                    s.abs() <= r
                }
            })
    }

    fn run(&self, k: usize, d: &mut Vec<i8>, sums: &mut [i64], visit: &mut dyn FnMut(&[i8])) {
        if k == self.len {
            visit(d);
            return;
        }
        for sign in [-1i8, 1] {
            d.push(sign);
            for ((c, _), s) in self.rows.iter().zip(sums.iter_mut()) {
                *s += i64::from(c[k] * sign);
            }
            if self.feasible(sums, k + 1) {
                self.run(k + 1, d, sums, visit);
            }
            for ((c, _), s) in self.rows.iter().zip(sums.iter_mut()) {
                *s -= i64::from(c[k] * sign);
            }
            d.pop();
        }
    }
}

fn search(sys: &CycleConstraintSystem, visit: &mut dyn FnMut(&[i8])) -> Result<()> {
    let n = sys.tree.len();
    if n > MAX_SIGN_VECTOR_LEN {
        return Err(Error::too_large(
            "sign vector length",
            MAX_SIGN_VECTOR_LEN,
            n,
        ));
    }
    let s = SignSearch::new(sys);
    let mut sums = vec![0i64; s.rows.len()];
    if s.feasible(&sums, 0) {
        s.run(0, &mut Vec::with_capacity(n), &mut sums, visit);
    }
    Ok(())
}

/// All solutions of the cycle equations, in increasing order of `d` read as a
/// binary number with `-1 ↦ 0` and the first tree edge most significant.
pub fn enumerate_sign_vectors(sys: &CycleConstraintSystem) -> Result<Vec<SignVector>> {
    let mut out = Vec::new();
    search(sys, &mut |d| out.push(SignVector(d.to_vec())))?;
    Ok(out)
}

/// Number of solutions of the cycle equations.
pub fn count_sign_vectors(sys: &CycleConstraintSystem) -> Result<u64> {
    let mut count = 0u64;
    search(sys, &mut |_| count += 1)?;
    Ok(count)
}

/// Solves `a_tail - a_head = -d_k` along the tree with `a_1 = 0` and returns
/// `a` in reduced coordinates.
fn tree_normal(g: &Graph, tree: &SpanningTree, d: &SignVector) -> Vec<i64> {
    let mut alpha = vec![0i64; g.vertex_count() + 1];
    // tree order is BFS discovery order, so the parent side is always known
    for (k, (&e, &DirectedEdge { tail, head })) in
        tree.edges().iter().zip(tree.oriented_edges()).enumerate()
    {
        let (a, b) = g.edge(e);
        let child = if tree.parent(a) == Some(b) { a } else { b };
        let dk = i64::from(d.entries()[k]);
        if child == head {
            alpha[head] = alpha[tail] + dk;
        } else {
            alpha[tail] = alpha[head] - dk;
        }
    }
    alpha[2..].to_vec()
}

/// The facet selected by a solution `d` of the cycle equations of `b`.
pub fn facet_from_sign_vector(
    g: &Graph,
    cfg: &PointConfiguration,
    b: &MaxBipartiteSubgraph,
    tree: &SpanningTree,
    d: &SignVector,
) -> Result<Facet> {
    if d.len() != tree.len() {
        return Err(Error::DimensionMismatch {
            expected: tree.len(),
            actual: d.len(),
        });
    }
    let normal = tree_normal(g, tree, d);
    let facet = verify_facet(cfg, &normal)
        .map_err(|e| Error::InternalInconsistency(format!("sign vector {d:?}: {e}")))?;
    if facet.normal.coeffs() != normal.as_slice() || facet.normal.min_value() != -1 {
        return Err(Error::InternalInconsistency(format!(
            "tree normal {normal:?} is not normalized"
        )));
    }
    for (k, &oriented) in tree.oriented_edges().iter().enumerate() {
        let signed = if d.entries()[k] == 1 {
            oriented
        } else {
            -oriented
        };
        let idx = cfg
            .index_of(g, signed)
            .expect("tree edge belongs to the graph");
        if facet.point_indices.binary_search(&idx).is_err() {
            return Err(Error::InternalInconsistency(format!(
                "signed tree point {signed} missing from facet"
            )));
        }
    }
    if facet.subgraph_edges != b.edge_pairs(g) {
        return Err(Error::InternalInconsistency(
            "facet subgraph differs from the maximal bipartite subgraph".into(),
        ));
    }
    Ok(facet)
}

/// The facet `F` with all edges of `b` oriented from `V-` to `V+`, and `-F`.
pub fn canonical_facet_pair(
    g: &Graph,
    cfg: &PointConfiguration,
    b: &MaxBipartiteSubgraph,
) -> Result<(Facet, Facet)> {
    let bip = b.bipartition();
    let normal: Vec<i64> = (2..=g.vertex_count())
        .map(|v| if bip.is_plus(v) { 0 } else { -1 })
        .collect();
    let check = |facet: Result<Facet>, flip: bool| -> Result<Facet> {
        let facet =
            facet.map_err(|e| Error::InternalInconsistency(format!("canonical facet: {e}")))?;
        let expected: HashSet<DirectedEdge> = b
            .edge_pairs(g)
            .into_iter()
            .map(|(u, v)| {
                let e = if bip.is_plus(u) {
                    DirectedEdge::new(v, u)
                } else {
                    DirectedEdge::new(u, v)
                };
                if flip {
                    -e
                } else {
                    e
                }
            })
            .collect();
        let actual: HashSet<DirectedEdge> = facet.directed_edges.iter().copied().collect();
        if expected != actual {
            return Err(Error::InternalInconsistency(
                "canonical facet is not the uniformly oriented cut".into(),
            ));
        }
        Ok(facet)
    };
    let plus = check(verify_facet(cfg, &normal), false)?;
    let negated: Vec<i64> = normal.iter().map(|x| -x).collect();
    let minus = check(verify_facet(cfg, &negated), true)?;
    Ok((plus, minus))
}

/// The facets sharing one facet subgraph.
#[derive(Debug, Clone)]
pub struct FacetClass {
    pub subgraph_index: usize,
    pub subgraph: MaxBipartiteSubgraph,
    pub system: CycleConstraintSystem,
    pub sign_vectors: Vec<SignVector>,
    pub facets: Vec<Facet>,
}

impl FacetClass {
    pub fn corank(&self) -> usize {
        self.subgraph.corank()
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }
}

fn build_class(
    g: &Graph,
    cfg: &PointConfiguration,
    subgraph_index: usize,
    subgraph: MaxBipartiteSubgraph,
) -> Result<FacetClass> {
    let system = build_cycle_system(g, &subgraph);
    let sign_vectors = enumerate_sign_vectors(&system)?;
    let facets = sign_vectors
        .iter()
        .map(|d| facet_from_sign_vector(g, cfg, &subgraph, &system.tree, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(FacetClass {
        subgraph_index,
        subgraph,
        system,
        sign_vectors,
        facets,
    })
}

/// All facets grouped by facet subgraph, classes in subgraph order.
pub fn enumerate_facet_classes(g: &Graph) -> Result<Vec<FacetClass>> {
    let cfg = PointConfiguration::from_graph(g);
    let subgraphs = enumerate_maximal_bipartite_subgraphs(g)?;
    let classes = subgraphs
        .into_par_iter()
        .enumerate()
        .map(|(i, b)| build_class(g, &cfg, i, b))
        .collect::<Result<Vec<_>>>()?;
    let mut seen = HashSet::new();
    for f in classes.iter().flat_map(|c| &c.facets) {
        if !seen.insert(f.normal.coeffs().to_vec()) {
            return Err(Error::InternalInconsistency(format!(
                "facet with normal {:?} appears in two classes",
                f.normal.coeffs()
            )));
        }
    }
    Ok(classes)
}

/// Every facet of the polytope of `g`, grouped by facet subgraph and ordered by
/// sign vector within each group.
pub fn enumerate_all_facets(g: &Graph) -> Result<Vec<Facet>> {
    Ok(enumerate_facet_classes(g)?
        .into_iter()
        .flat_map(|c| c.facets)
        .collect())
}

/// Whether every facet is a simplex, i.e. whether `g` has no even cycle.
pub fn is_simplicial(g: &Graph) -> Result<bool> {
    Ok(!has_even_cycle(g)?)
}
