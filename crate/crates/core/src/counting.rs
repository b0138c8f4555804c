//! Closed-form facet counts and the per-class census.

use num_bigint::BigUint;
use num_integer::binomial;

use crate::bipartite::{enumerate_maximal_bipartite_subgraphs, Bipartition};
use crate::error::{Error, Result};
use crate::facet_enum::{build_cycle_system, count_sign_vectors};
use crate::graph::Graph;

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

fn choose(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    binomial(big(n), big(k))
}

/// Number of `d ∈ {±1}^(2n)` with `d_1 + ... + d_n - d_(n+1) - ... - d_(2n) = 0`,
/// namely `C(2n, n)`.
pub fn count_sum_zero(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    Ok(choose(2 * n, n))
}

/// Number of `d ∈ {±1}^(2n)` with the same alternating row summing to 2,
/// namely `C(2n, n - 1)`.
pub fn count_sum_two(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    Ok(choose(2 * n, n - 1))
}

/// Facet counts of two cycles of lengths `2 m1` and `2 m2 + 1` sharing an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinedCyclesCount {
    pub corank0: BigUint,
    pub corank1: BigUint,
    pub total: BigUint,
}

pub fn joined_cycles_count(m1: usize, m2: usize) -> Result<JoinedCyclesCount> {
    if m1 < 2 || m2 < 1 {
        return Err(Error::Domain(format!(
            "joined cycles need m1 >= 2 and m2 >= 1, got ({m1}, {m2})"
        )));
    }
    let odd_part = choose(2 * m2, m2);
    let corank0 = big(2 * m1 - 1) * choose(2 * m1 - 2, m1 - 1) * &odd_part;
    let corank1 = big(2 * m2) * choose(2 * m1 - 1, m1) * &odd_part;
    let total = &corank0 + &corank1;
    Ok(JoinedCyclesCount {
        corank0,
        corank1,
        total,
    })
}

/// The same total in product form, `(m1 + 2 m2) / 2 · C(2 m1, m1) · C(2 m2, m2)`.
pub fn joined_cycles_total_closed_form(m1: usize, m2: usize) -> Result<BigUint> {
    if m1 < 2 || m2 < 1 {
        return Err(Error::Domain(format!(
            "joined cycles need m1 >= 2 and m2 >= 1, got ({m1}, {m2})"
        )));
    }
    // C(2 m1, m1) is even, so the halving is exact
    Ok(big(m1 + 2 * m2) * choose(2 * m1, m1) * choose(2 * m2, m2) / big(2))
}

/// Facet count `C(2k, k)` of the even cycle `C_2k`.
pub fn even_cycle_facet_count(k: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::Domain(format!("even cycle needs k >= 2, got {k}")));
    }
    Ok(choose(2 * k, k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub bipartition: Bipartition,
    pub corank: usize,
    pub size: u64,
}

/// Facet class sizes of a graph, one record per maximal bipartite subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCensus {
    pub vertex_count: usize,
    pub records: Vec<ClassRecord>,
    pub total: u64,
}

impl FacetCensus {
    /// Number of maximal bipartite subgraphs.
    pub fn beta(&self) -> usize {
        self.records.len()
    }

    /// Largest possible class size, `2^(N-1)`.
    pub fn class_bound(&self) -> u64 {
        1u64 << (self.vertex_count - 1)
    }

    /// `β · 2^(N-1)`.
    pub fn bound(&self) -> u64 {
        self.beta() as u64 * self.class_bound()
    }

    /// Total facets on classes of the given corank.
    pub fn total_with_corank(&self, corank: usize) -> u64 {
        self.records
            .iter()
            .filter(|r| r.corank == corank)
            .map(|r| r.size)
            .sum()
    }
}

pub fn facet_census(g: &Graph) -> Result<FacetCensus> {
    let subgraphs = enumerate_maximal_bipartite_subgraphs(g)?;
    let mut records = Vec::with_capacity(subgraphs.len());
    for b in &subgraphs {
        let size = count_sign_vectors(&build_cycle_system(g, b))?;
        records.push(ClassRecord {
            bipartition: *b.bipartition(),
            corank: b.corank(),
            size,
        });
    }
    let census = FacetCensus {
        vertex_count: g.vertex_count(),
        total: records.iter().map(|r| r.size).sum(),
        records,
    };
    let cap = census.class_bound();
    if let Some(r) = census.records.iter().find(|r| r.size > cap || r.size < 2) {
        return Err(Error::InternalInconsistency(format!(
            "class size {} outside [2, {cap}]",
            r.size
        )));
    }
    if census.total > census.bound() {
        return Err(Error::InternalInconsistency(
            "total exceeds class bound".into(),
        ));
    }
    Ok(census)
}
