//! Brute-force facet enumeration, independent of the graph-theoretic
//! parametrization.
//!
//! Every facet of a full-dimensional configuration containing the origin in
//! its interior contains `n` linearly independent points, and the hyperplane
//! `<x, a> = -1` through them is unique. The oracle solves for that hyperplane
//! for every linearly independent `n`-subset, keeps the ones with all points on
//! the nonnegative side, and deduplicates by primitive normal.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::exact::{bigint_to_i64, cramer_minus_ones, ExactInt};
use crate::facet::{verify_facet, Facet};

pub const MAX_ORACLE_DIM: usize = 8;
pub const MAX_ORACLE_POINTS: usize = 40;

/// All facets of `cfg`, ordered lexicographically by primitive normal.
pub fn brute_force_facets(cfg: &PointConfiguration) -> Result<Vec<Facet>> {
    let n = cfg.dim();
    if n > MAX_ORACLE_DIM {
        return Err(Error::too_large("oracle dimension", MAX_ORACLE_DIM, n));
    }
    if cfg.len() > MAX_ORACLE_POINTS {
        return Err(Error::too_large(
            "oracle point count",
            MAX_ORACLE_POINTS,
            cfg.len(),
        ));
    }
    let normals = supporting_normals(cfg)?;
    normals
        .into_iter()
        .map(|normal| {
            verify_facet(cfg, &normal).map_err(|e| {
                Error::InternalInconsistency(format!("oracle normal {normal:?} rejected: {e}"))
            })
        })
        .collect()
}

/// Primitive normals of all facets, sorted.
pub fn supporting_normals(cfg: &PointConfiguration) -> Result<BTreeSet<Vec<i64>>> {
    let n = cfg.dim();
    let m = cfg.len();
    let partial: Vec<Result<BTreeSet<Vec<i64>>>> = (0..m)
        .into_par_iter()
        .map(|first| {
            let mut found = BTreeSet::new();
            let mut subset = vec![first];
            scan(cfg, n, &mut subset, &mut found)?;
            Ok(found)
        })
        .collect();
    let mut all = BTreeSet::new();
    for part in partial {
        all.extend(part?);
    }
    Ok(all)
}

fn scan(
    cfg: &PointConfiguration,
    n: usize,
    subset: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<i64>>,
) -> Result<()> {
    if subset.len() == n {
        if let Some(normal) = hyperplane_normal(cfg, subset)? {
            found.insert(normal);
        }
        return Ok(());
    }
    let last = *subset.last().expect("subset starts nonempty");
    for next in last + 1..cfg.len() {
        // p and -p are linearly dependent
        if subset.contains(&PointConfiguration::negation(next)) {
            continue;
        }
        subset.push(next);
        scan(cfg, n, subset, found)?;
        subset.pop();
    }
    Ok(())
}

/// The primitive normal of the hyperplane `<x, a> = -1` through the points of
/// `subset` if those points are independent and every point of `cfg` lies on
/// the side `<x, a> >= -1`.
fn hyperplane_normal(cfg: &PointConfiguration, subset: &[usize]) -> Result<Option<Vec<i64>>> {
    let rows: Vec<&[i64]> = subset.iter().map(|&i| cfg.point(i)).collect();
    let normal = supported::<i128>(cfg, &rows)
        .or_else(|| supported::<BigInt>(cfg, &rows))
        .expect("bigint arithmetic cannot overflow");
    normal
        .map(|v| {
            v.iter()
                .map(bigint_to_i64)
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::InternalInconsistency("normal entries exceed i64".into()))
        })
        .transpose()
}

fn supported<T: ExactInt>(
    cfg: &PointConfiguration,
    rows: &[&[i64]],
) -> Option<Option<Vec<BigInt>>> {
    let Some((mut nums, mut den)) = cramer_minus_ones::<T>(rows)? else {
        return Some(None);
    };
    // a = nums / den; with den > 0 require <x, nums> >= -den for every point
    if den < T::zero() {
        den = den.neg()?;
        for x in &mut nums {
            *x = x.neg()?;
        }
    }
    let neg_den = den.neg()?;
    for p in cfg.points() {
        let mut v = T::zero();
        for (&c, a) in p.iter().zip(&nums) {
            v = match c {
                0 => continue,
                1 => v.add(a)?,
                -1 => v.sub(a)?,
                _ => v.add(&a.mul(&T::from_i64(c))?)?,
            };
        }
        if v < neg_den {
            return Some(None);
        }
    }
    let nums: Vec<BigInt> = nums.iter().map(ExactInt::to_bigint).collect();
    Some(Some(crate::exact::primitive(&nums)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn k2_has_two_facets() {
        let cfg = PointConfiguration::from_graph(&families::path(2).unwrap());
        let facets = brute_force_facets(&cfg).unwrap();
        let normals: Vec<&[i64]> = facets.iter().map(|f| f.normal.coeffs()).collect();
        assert_eq!(normals, vec![&[-1][..], &[1][..]]);
    }

    #[test]
    fn c4_has_six_facets() {
        let cfg = PointConfiguration::from_graph(&families::cycle(4).unwrap());
        assert_eq!(brute_force_facets(&cfg).unwrap().len(), 6);
    }

    #[test]
    fn triangle_hexagon_has_six_edges() {
        let cfg = PointConfiguration::from_graph(&families::cycle(3).unwrap());
        let facets = brute_force_facets(&cfg).unwrap();
        assert_eq!(facets.len(), 6);
        assert!(facets.iter().all(|f| f.len() == 2 && f.corank == 0));
    }

    #[test]
    fn guard_rails() {
        let cfg = PointConfiguration::from_graph(&families::path(10).unwrap());
        assert!(matches!(
            brute_force_facets(&cfg),
            Err(Error::TooLarge { .. })
        ));
        let cfg = PointConfiguration::from_graph(&families::complete(7).unwrap());
        assert!(matches!(
            brute_force_facets(&cfg),
            Err(Error::TooLarge { .. })
        ));
    }
}
