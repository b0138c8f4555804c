//! Standard graph families and exhaustive generators for small vertex counts.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest vertex count accepted by the exhaustive generators.
pub const MAX_GENERATED_VERTICES: usize = 7;

/// Cycle `1 - 2 - ... - n - 1`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (1..=n).map(|i| (i, i % n + 1)))
}

/// Path `1 - 2 - ... - n`.
pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

/// A cycle of length `2 * m1` and a cycle of length `2 * m2 + 1` glued along
/// the edge `{1, 2}`. The even cycle runs `2, 3, ..., 2*m1, 1`; the odd cycle
/// runs `2, 2*m1 + 1, ..., 2*m1 + 2*m2 - 1, 1`.
pub fn joined_cycles(m1: usize, m2: usize) -> Result<Graph> {
    if m1 < 2 || m2 < 1 {
        return Err(Error::Domain(format!(
            "joined cycles need m1 >= 2 and m2 >= 1, got ({m1}, {m2})"
        )));
    }
    let n = 2 * m1 + 2 * m2 - 1;
    let mut edges = vec![(1, 2)];
    let even: Vec<usize> = std::iter::once(2).chain(3..=2 * m1).chain([1]).collect();
    let odd: Vec<usize> = std::iter::once(2)
        .chain(2 * m1 + 1..=n)
        .chain([1])
        .collect();
    for walk in [even, odd] {
        edges.extend(walk.windows(2).map(|w| (w[0], w[1])));
    }
    Graph::new(n, edges)
}

fn all_pairs(n: usize) -> Vec<Edge> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

fn check_generated(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("need at least 2 vertices, got {n}")));
    }
    if n > MAX_GENERATED_VERTICES {
        return Err(Error::too_large(
            "generated vertex count",
            MAX_GENERATED_VERTICES,
            n,
        ));
    }
    Ok(())
}

/// Every connected simple graph on the labeled vertex set `1..=n`.
pub fn connected_labeled_graphs(n: usize) -> Result<Vec<Graph>> {
    check_generated(n)?;
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    for mask in 1u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        if let Ok(g) = Graph::new(n, edges) {
            out.push(g);
        }
    }
    Ok(out)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in order of their canonical adjacency mask.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Result<Vec<Graph>> {
    check_generated(n)?;
    let pairs = all_pairs(n);
    let pair_bit = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let bit_of: Vec<Vec<usize>> = (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| {
                    if a == 0 || b == 0 || a == b {
                        0
                    } else {
                        pair_bit(a, b)
                    }
                })
                .collect()
        })
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for g in connected_labeled_graphs(n)? {
        let canon = perms
            .iter()
            .map(|p| {
                g.edges()
                    .iter()
                    .fold(0u64, |m, &(a, b)| m | 1 << bit_of[p[a - 1]][p[b - 1]])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push((canon, g));
        }
    }
    out.sort_by_key(|(c, _)| *c);
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts_of_connected_graphs() {
        // OEIS A001187 (labeled) and A001349 (unlabeled)
        let labeled: Vec<usize> = (2..=5)
            .map(|n| connected_labeled_graphs(n).unwrap().len())
            .collect();
        assert_eq!(labeled, vec![1, 4, 38, 728]);
        let unlabeled: Vec<usize> = (2..=5)
            .map(|n| connected_graphs_up_to_isomorphism(n).unwrap().len())
            .collect();
        assert_eq!(unlabeled, vec![1, 2, 6, 21]);
    }

    #[test]
    fn joined_cycles_shape() {
        let g = joined_cycles(2, 2).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 8);
        let g = joined_cycles(2, 1).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4)]);
        assert!(joined_cycles(1, 1).is_err());
        assert!(joined_cycles(2, 0).is_err());
    }

    #[test]
    fn cycles_and_complete_graphs() {
        assert_eq!(cycle(4).unwrap().edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert!(cycle(2).is_err());
    }
}
