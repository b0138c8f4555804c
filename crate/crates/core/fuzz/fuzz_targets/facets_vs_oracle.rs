#![no_main]

use libfuzzer_sys::fuzz_target;
use symedge::{brute_force_facets, enumerate_all_facets, Graph, PointConfiguration};

// First byte picks N in 2..=6; later bits choose extra edges on top of a path.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else {
        return;
    };
    let n = 2 + usize::from(head % 5);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v, v + 1)).collect();
    let mut bit = 0;
    for a in 1..=n {
        for b in a + 2..=n {
            let byte = rest.get(bit / 8).copied().unwrap_or(0);
            if byte >> (bit % 8) & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    let g = Graph::new(n, edges).unwrap();
    let mut ours: Vec<Vec<i64>> = enumerate_all_facets(&g)
        .unwrap()
        .iter()
        .map(|f| f.normal.coeffs().to_vec())
        .collect();
    ours.sort();
    let oracle: Vec<Vec<i64>> = brute_force_facets(&PointConfiguration::from_graph(&g))
        .unwrap()
        .iter()
        .map(|f| f.normal.coeffs().to_vec())
        .collect();
    assert_eq!(ours, oracle);
});
