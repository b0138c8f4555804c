use std::fs::File;

use symedge::faces::balancing_check;
use symedge::families::joined_cycles;
use symedge::{
    build_cycle_system, enumerate_facet_classes, enumerate_maximal_bipartite_subgraphs,
    enumerate_sign_vectors, face_properties, facet_census, facet_subsystem_support,
    homogenization_data, is_simplicial, read_edge_list, unmixed_support, Bipartition, Graph,
    MaxBipartiteSubgraph, PointConfiguration,
};

fn fixture() -> Graph {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/joined_c4_c5.txt");
    read_edge_list(File::open(path).unwrap()).unwrap()
}

fn subgraph(g: &Graph, plus: &[usize]) -> MaxBipartiteSubgraph {
    MaxBipartiteSubgraph::from_bipartition(g, Bipartition::new(g.vertex_count(), plus).unwrap())
        .unwrap()
}

#[test]
fn seven_subgraphs_three_of_them_trees() {
    let g = fixture();
    assert_eq!((g.vertex_count(), g.edge_count()), (7, 8));
    let subs = enumerate_maximal_bipartite_subgraphs(&g).unwrap();
    let coranks: Vec<usize> = subs.iter().map(MaxBipartiteSubgraph::corank).collect();
    assert_eq!(coranks.iter().filter(|&&c| c == 0).count(), 3);
    assert_eq!(coranks.iter().filter(|&&c| c == 1).count(), 4);
}

#[test]
fn path_subgraph_has_twelve_facets() {
    let g = fixture();
    // the path 2-3-4-5-6-7-1
    let b = subgraph(&g, &[1, 2, 4, 6]);
    assert_eq!(
        b.edge_pairs(&g),
        vec![(1, 7), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    );
    let sys = build_cycle_system(&g, &b);
    assert_eq!((sys.rows_pm.len(), sys.rows_zero.len()), (0, 2));
    assert_eq!(enumerate_sign_vectors(&sys).unwrap().len(), 12);
}

#[test]
fn subgraph_without_one_odd_edge_has_eighteen_facets() {
    let g = fixture();
    let b = subgraph(&g, &[1, 3, 5, 7]);
    assert!(!b.edge_pairs(&g).contains(&(1, 7)));
    let sys = build_cycle_system(&g, &b);
    assert_eq!((sys.rows_pm.len(), sys.rows_zero.len()), (1, 1));
    assert_eq!(enumerate_sign_vectors(&sys).unwrap().len(), 18);
}

#[test]
fn census_and_face_data() {
    let g = fixture();
    let cfg = PointConfiguration::from_graph(&g);
    let census = facet_census(&g).unwrap();
    let mut sizes: Vec<u64> = census.records.iter().map(|r| r.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![12, 12, 12, 18, 18, 18, 18]);
    assert_eq!(census.total, 108);
    assert_eq!(census.bound(), 7 * 64);
    assert!(!is_simplicial(&g).unwrap());

    let classes = enumerate_facet_classes(&g).unwrap();
    let simplicial = classes
        .iter()
        .flat_map(|c| &c.facets)
        .filter(|f| face_properties(&cfg, &f.point_indices).unwrap().independent)
        .count();
    assert_eq!(simplicial, 36);
    for f in classes.iter().flat_map(|c| &c.facets) {
        assert!(balancing_check(&g, f).unwrap());
        let expected = if f.corank == 1 { 8 } else { 7 };
        assert_eq!(facet_subsystem_support(&cfg, f).len(), expected);
    }
}

#[test]
fn homogenization_of_the_example() {
    let g = fixture();
    let cfg = PointConfiguration::from_graph(&g);
    let data = homogenization_data(&g).unwrap();
    assert_eq!(data.facet_count(), 108);
    assert!(data.v.iter().all(|row| row.len() == 6));
    let support = unmixed_support(&cfg);
    assert_eq!(support.len(), 17);
    for a in support.points() {
        let lifted = data.lifted_exponents(a);
        assert!(lifted.iter().all(|&x| x >= 0));
        let origin = a.iter().all(|&x| x == 0);
        assert_eq!(lifted.contains(&0), !origin);
    }
}

#[test]
fn generated_joined_cycles_match_the_fixture_counts() {
    let g = joined_cycles(2, 2).unwrap();
    let census = facet_census(&g).unwrap();
    assert_eq!(
        (census.total_with_corank(0), census.total_with_corank(1)),
        (36, 72)
    );
}
