//! Inner normals and exact facet verification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bipartite::{two_coloring, Bipartition};
use crate::config::{affine_dimension, PointConfiguration};
use crate::error::{Error, Result};
use crate::exact::{bigint_to_i64, gcd_i64};
use crate::graph::{DirectedEdge, Edge};

/// A primitive integer inner normal together with its minimum over the
/// configuration. Scaling by `1 / -min_value` gives the normalized normal,
/// whose minimum is `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InnerNormal {
    coeffs: Vec<i64>,
    min_value: i64,
}

impl InnerNormal {
    /// Primitive integer coefficients in reduced coordinates.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `min <x, coeffs>` over all points; always negative.
    pub fn min_value(&self) -> i64 {
        self.min_value
    }

    /// The positive factor taking the primitive normal to the normalized one.
    pub fn scale(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(-self.min_value))
    }

    pub fn normalized(&self) -> Vec<BigRational> {
        let s = self.scale();
        self.coeffs
            .iter()
            .map(|&c| BigRational::from_integer(c.into()) * &s)
            .collect()
    }

    /// The normalized normal lifted to `R^N` and centered so its entries sum
    /// to zero (vertex 1 first). For a canonical facet this is the `±1/2`
    /// indicator of the bipartition.
    pub fn centered_lift(&self) -> Vec<BigRational> {
        let reduced = self.normalized();
        let full: Vec<BigRational> = std::iter::once(BigRational::zero())
            .chain(reduced)
            .collect();
        let mean = full.iter().fold(BigRational::zero(), |acc, x| acc + x)
            / BigRational::from_integer(BigInt::from(full.len()));
        full.into_iter().map(|x| x - &mean).collect()
    }
}

/// A facet of the point configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: InnerNormal,
    /// Sorted indices into the configuration.
    pub point_indices: Vec<usize>,
    /// Undirected facet subgraph, sorted.
    pub subgraph_edges: Vec<Edge>,
    /// Directed facet subgraph, in point order.
    pub directed_edges: Vec<DirectedEdge>,
    pub dim: usize,
    pub corank: usize,
    /// Bipartition of the facet subgraph (vertex 1 on the plus side).
    pub bipartition: Bipartition,
}

impl Facet {
    pub fn points<'a>(
        &'a self,
        cfg: &'a PointConfiguration,
    ) -> impl Iterator<Item = &'a [i64]> + 'a {
        self.point_indices.iter().map(move |&i| cfg.point(i))
    }

    pub fn len(&self) -> usize {
        self.point_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point_indices.is_empty()
    }

    /// The opposite facet `-F`.
    pub fn negated(&self, cfg: &PointConfiguration) -> Result<Facet> {
        let neg: Vec<i64> = self.normal.coeffs.iter().map(|c| -c).collect();
        verify_facet(cfg, &neg)
    }
}

/// Checks that `direction` is an inner normal of a facet and returns that
/// facet. The direction need not be primitive; all arithmetic is exact.
pub fn verify_facet(cfg: &PointConfiguration, direction: &[i64]) -> Result<Facet> {
    let n = cfg.dim();
    if direction.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: direction.len(),
        });
    }
    let g = gcd_i64(direction);
    if g == 0 {
        return Err(Error::ZeroNormal);
    }
    let coeffs: Vec<i64> = direction.iter().map(|c| c / g).collect();
    let values: Vec<i64> = (0..cfg.len()).map(|i| cfg.dot(i, &coeffs)).collect();
    let min_value = *values.iter().min().expect("configuration is nonempty");
    // the configuration is centrally symmetric and full-dimensional, so a
    // nonzero normal always has a negative minimum
    debug_assert!(min_value < 0);

    let point_indices: Vec<usize> = (0..cfg.len()).filter(|&i| values[i] == min_value).collect();
    let pts: Vec<&[i64]> = point_indices.iter().map(|&i| cfg.point(i)).collect();
    let dim = affine_dimension(&pts);
    if dim + 1 != n {
        return Err(Error::NotAFacet {
            dim,
            expected: n - 1,
        });
    }

    let directed_edges: Vec<DirectedEdge> = point_indices
        .iter()
        .map(|&i| cfg.directed_edge(i))
        .collect();
    let mut subgraph_edges: Vec<Edge> = directed_edges.iter().map(|e| e.undirected()).collect();
    subgraph_edges.sort_unstable();
    if subgraph_edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InternalInconsistency(
            "facet contains a point and its negation".into(),
        ));
    }
    let bipartition = two_coloring(cfg.vertex_count(), &subgraph_edges).ok_or_else(|| {
        Error::InternalInconsistency("facet subgraph is not connected and bipartite".into())
    })?;
    Ok(Facet {
        normal: InnerNormal { coeffs, min_value },
        corank: point_indices.len() - dim - 1,
        point_indices,
        subgraph_edges,
        directed_edges,
        dim,
        bipartition,
    })
}

/// Clears denominators of a rational direction and returns the primitive
/// integer direction with the same sign.
pub fn integer_direction(direction: &[BigRational]) -> Result<Vec<i64>> {
    let lcm = direction
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = direction
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let prim = crate::exact::primitive(&scaled);
    prim.iter()
        .map(|x| {
            bigint_to_i64(x).ok_or_else(|| Error::Domain(format!("normal entry {x} out of range")))
        })
        .collect()
}

/// [`verify_facet`] for a rational direction.
pub fn verify_facet_rational(cfg: &PointConfiguration, direction: &[BigRational]) -> Result<Facet> {
    if direction.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroNormal);
    }
    debug_assert!(direction.iter().all(|x| !x.denom().is_negative()));
    verify_facet(cfg, &integer_direction(direction)?)
}
