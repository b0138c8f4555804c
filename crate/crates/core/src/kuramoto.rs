//! Support-level data for the unmixed algebraic Kuramoto system.
//!
//! Only exponent vectors are modeled; coefficients are left to the solver.

use std::fmt::Write as _;

use crate::config::{affine_dimension, PointConfiguration};
use crate::error::{Error, Result};
use crate::facet::Facet;
use crate::facet_enum::enumerate_all_facets;
use crate::graph::Graph;

/// A set of exponent vectors in `Z^(N-1)`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    points: Vec<Vec<i64>>,
    include_origin: bool,
}

impl SupportSet {
    fn build(dim: usize, points: impl IntoIterator<Item = Vec<i64>>, include_origin: bool) -> Self {
        let mut points: Vec<Vec<i64>> = points.into_iter().collect();
        if include_origin {
            points.push(vec![0; dim]);
        }
        points.sort();
        points.dedup();
        SupportSet {
            points,
            include_origin,
        }
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn include_origin(&self) -> bool {
        self.include_origin
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// One vector per line; each line optionally followed by extra integer
    /// columns (lift value, coefficient, ...).
    pub fn to_text(&self, extra: &[Vec<i64>]) -> String {
        let mut out = String::new();
        for (k, p) in self.points.iter().enumerate() {
            let cols = p.iter().chain(extra.get(k).into_iter().flatten());
            let line: Vec<String> = cols.map(i64::to_string).collect();
            writeln!(out, "{}", line.join(" ")).expect("writing to a string");
        }
        out
    }
}

/// `∇̌_G ∪ {0}`: the common support of every equation in the unmixed form.
pub fn unmixed_support(cfg: &PointConfiguration) -> SupportSet {
    SupportSet::build(cfg.dim(), cfg.points().iter().cloned(), true)
}

/// The homotopy lift: 0 at the origin and 1 at every other exponent.
pub fn homotopy_lift(s: &SupportSet) -> Vec<(Vec<i64>, i64)> {
    s.points
        .iter()
        .map(|p| (p.clone(), i64::from(p.iter().any(|&x| x != 0))))
        .collect()
}

/// `F ∪ {0}`, the support of the subsystem selected by a facet.
pub fn facet_subsystem_support(cfg: &PointConfiguration, facet: &Facet) -> SupportSet {
    SupportSet::build(cfg.dim(), facet.points(cfg).map(<[i64]>::to_vec), true)
}

/// The points of a positive-dimensional face, without the origin.
pub fn face_system_support(cfg: &PointConfiguration, indices: &[usize]) -> Result<SupportSet> {
    if indices.is_empty() {
        return Err(Error::EmptyFace);
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= cfg.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            len: cfg.len(),
        });
    }
    let pts: Vec<&[i64]> = indices.iter().map(|&i| cfg.point(i)).collect();
    if affine_dimension(&pts) == 0 {
        return Err(Error::DegenerateFace);
    }
    Ok(SupportSet::build(
        cfg.dim(),
        pts.into_iter().map(<[i64]>::to_vec),
        false,
    ))
}

/// Rows of `V` are the primitive facet normals; `h_i` is the minimum of row
/// `i` over the configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogenizationData {
    pub v: Vec<Vec<i64>>,
    pub h: Vec<i64>,
}

impl HomogenizationData {
    pub fn facet_count(&self) -> usize {
        self.v.len()
    }

    /// `V a - h`.
    pub fn lifted_exponents(&self, a: &[i64]) -> Vec<i64> {
        self.v
            .iter()
            .zip(&self.h)
            .map(|(row, h)| row.iter().zip(a).map(|(x, y)| x * y).sum::<i64>() - h)
            .collect()
    }

    /// Header `m n`, then the rows of `V`, then `h`.
    pub fn to_text(&self) -> String {
        let n = self.v.first().map_or(0, Vec::len);
        let mut out = format!("{} {}\n", self.v.len(), n);
        for row in self.v.iter().chain(std::iter::once(&self.h)) {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Homogenization data with rows in [`enumerate_all_facets`] order.
pub fn homogenization_data(g: &Graph) -> Result<HomogenizationData> {
    let cfg = PointConfiguration::from_graph(g);
    let facets = enumerate_all_facets(g)?;
    let data = HomogenizationData {
        v: facets.iter().map(|f| f.normal.coeffs().to_vec()).collect(),
        h: facets.iter().map(|f| f.normal.min_value()).collect(),
    };
    for (i, p) in cfg.points().iter().enumerate() {
        let lifted = data.lifted_exponents(p);
        for (row, (&x, f)) in lifted.iter().zip(&facets).enumerate() {
            let on_facet = f.point_indices.binary_search(&i).is_ok();
            if x < 0 || (x == 0) != on_facet {
                return Err(Error::InternalInconsistency(format!(
                    "lifted exponent {x} of point {i} on facet row {row}"
                )));
            }
        }
    }
    if data.h.iter().any(|&h| h >= 0) {
        return Err(Error::InternalInconsistency(
            "origin is not interior".into(),
        ));
    }
    Ok(data)
}
