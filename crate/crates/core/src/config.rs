//! The point configuration `{±(e_{i-1} - e_{j-1})}` of a graph in reduced
//! coordinates (vertex 1's axis dropped) and incidence matrices of directed
//! subgraphs.

use crate::exact;
use crate::graph::{DirectedEdge, Graph};

/// The points of the symmetric edge polytope of a graph, one per directed
/// edge, in `R^(N-1)`.
///
/// Point `2k` is `(i, j)` and point `2k + 1` is `(j, i)` for the `k`-th edge
/// `{i, j}`, `i < j`; so `p ^ 1` is always the index of `-p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    vertex_count: usize,
    points: Vec<Vec<i64>>,
    directed: Vec<DirectedEdge>,
}

/// Reduced coordinates of `e_tail - e_head`, with `e_1` mapped to zero.
pub fn reduced_point(vertex_count: usize, e: DirectedEdge) -> Vec<i64> {
    let mut p = vec![0; vertex_count - 1];
    if e.tail > 1 {
        p[e.tail - 2] += 1;
    }
    if e.head > 1 {
        p[e.head - 2] -= 1;
    }
    p
}

/// Full coordinates of `e_tail - e_head` in `R^N`.
pub fn lifted_point(vertex_count: usize, e: DirectedEdge) -> Vec<i64> {
    let mut p = vec![0; vertex_count];
    p[e.tail - 1] += 1;
    p[e.head - 1] -= 1;
    p
}

impl PointConfiguration {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut points = Vec::with_capacity(2 * g.edge_count());
        let mut directed = Vec::with_capacity(2 * g.edge_count());
        for &(i, j) in g.edges() {
            for e in [DirectedEdge::new(i, j), DirectedEdge::new(j, i)] {
                points.push(reduced_point(n, e));
                directed.push(e);
            }
        }
        PointConfiguration {
            vertex_count: n,
            points,
            directed,
        }
    }

    /// Ambient dimension `n = N - 1`.
    pub fn dim(&self) -> usize {
        self.vertex_count - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &[i64] {
        &self.points[index]
    }

    pub fn directed_edge(&self, index: usize) -> DirectedEdge {
        self.directed[index]
    }

    pub fn negation(index: usize) -> usize {
        index ^ 1
    }

    /// Index of the point for a directed edge of the graph.
    pub fn index_of(&self, g: &Graph, e: DirectedEdge) -> Option<usize> {
        let k = g.edge_index(e.tail, e.head)?;
        Some(2 * k + usize::from(e.tail > e.head))
    }

    /// The point in full coordinates: the reduced point with the negated
    /// coordinate sum prepended.
    pub fn lifted(&self, index: usize) -> Vec<i64> {
        let p = &self.points[index];
        std::iter::once(-p.iter().sum::<i64>())
            .chain(p.iter().copied())
            .collect()
    }

    pub fn dot(&self, index: usize, normal: &[i64]) -> i64 {
        self.points[index]
            .iter()
            .zip(normal)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Affine dimension of a nonempty set of points: the rank of the differences
/// to the first point.
pub fn affine_dimension<P: AsRef<[i64]>>(points: &[P]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let first = first.as_ref();
    let diffs: Vec<Vec<i64>> = rest
        .iter()
        .map(|p| p.as_ref().iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        return 0;
    }
    exact::rank(&diffs)
}

/// Incidence matrix of a list of directed edges: column `(i, j)` is
/// `e_i - e_j`. The truncated form drops the row of vertex 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    truncated: bool,
    columns: Vec<DirectedEdge>,
    rows: Vec<Vec<i64>>,
}

impl IncidenceMatrix {
    pub fn full(vertex_count: usize, columns: &[DirectedEdge]) -> Self {
        Self::build(vertex_count, columns, false)
    }

    pub fn truncated(vertex_count: usize, columns: &[DirectedEdge]) -> Self {
        Self::build(vertex_count, columns, true)
    }

    fn build(vertex_count: usize, columns: &[DirectedEdge], truncated: bool) -> Self {
        let mut rows = vec![vec![0i64; columns.len()]; vertex_count];
        for (c, e) in columns.iter().enumerate() {
            rows[e.tail - 1][c] += 1;
            rows[e.head - 1][c] -= 1;
        }
        if truncated {
            rows.remove(0);
        }
        IncidenceMatrix {
            truncated,
            columns: columns.to_vec(),
            rows,
        }
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn columns(&self) -> &[DirectedEdge] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[c]).collect()
    }

    /// `Q * x` for an integer coefficient vector over the columns.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        if self.columns.is_empty() {
            return 0;
        }
        exact::rank(&self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k2_points() {
        let g = families::path(2).unwrap();
        let cfg = PointConfiguration::from_graph(&g);
        assert_eq!(cfg.points(), &[vec![-1], vec![1]]);
        assert_eq!(cfg.lifted(0), vec![1, -1]);
    }

    #[test]
    fn triangle_points_form_a_hexagon() {
        let cfg = PointConfiguration::from_graph(&families::cycle(3).unwrap());
        let mut pts = cfg.points().to_vec();
        pts.sort();
        let mut expected = vec![
            vec![-1, 0],
            vec![1, 0],
            vec![1, -1],
            vec![-1, 1],
            vec![0, 1],
            vec![0, -1],
        ];
        expected.sort();
        assert_eq!(pts, expected);
    }

    #[test]
    fn c4_has_eight_points_in_r3() {
        let cfg = PointConfiguration::from_graph(&families::cycle(4).unwrap());
        assert_eq!(cfg.len(), 8);
        assert_eq!(cfg.dim(), 3);
    }

    #[test]
    fn index_round_trip() {
        let g = families::complete(4).unwrap();
        let cfg = PointConfiguration::from_graph(&g);
        for i in 0..cfg.len() {
            let e = cfg.directed_edge(i);
            assert_eq!(cfg.index_of(&g, e), Some(i));
            assert_eq!(cfg.directed_edge(PointConfiguration::negation(i)), -e);
        }
    }

    #[test]
    fn affine_dimensions() {
        assert_eq!(affine_dimension(&[vec![1, 0]]), 0);
        assert_eq!(affine_dimension(&[vec![1, 0], vec![-1, 0]]), 1);
        // C4 canonical facet: (2,1), (4,1), (2,3), (4,3) in reduced coordinates
        let f = [vec![1, 0, 0], vec![0, 0, 1], vec![1, -1, 0], vec![0, -1, 1]];
        assert_eq!(affine_dimension(&f), 2);
    }

    #[test]
    fn incidence_columns_sum_to_zero() {
        let cols = [DirectedEdge::new(2, 1), DirectedEdge::new(2, 3)];
        let q = IncidenceMatrix::full(3, &cols);
        for c in 0..cols.len() {
            assert_eq!(q.column(c).iter().sum::<i64>(), 0);
        }
        let qt = IncidenceMatrix::truncated(3, &cols);
        assert_eq!(qt.rows().len(), 2);
        assert_eq!(qt.column(0), reduced_point(3, cols[0]));
        assert_eq!(q.rank(), 2);
    }
}
