//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::io::Write as _;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symedge::bipartite::two_coloring;
use symedge::faces::{balancing_check, simple_cycles};
use symedge::families::{
    connected_graphs_up_to_isomorphism, connected_labeled_graphs, cycle, joined_cycles,
};
use symedge::{
    brute_force_facets, count_sum_two, count_sum_zero, enumerate_all_facets,
    enumerate_facet_classes, even_cycle_facet_count, face_properties, facet_census,
    homogenization_data, is_simplicial, joined_cycles_count, parse_edge_list, unmixed_support,
    Edge, Graph, PointConfiguration,
};

const EXAMPLE: &str = "1 2\n2 3\n3 4\n4 1\n4 5\n5 6\n6 7\n7 1\n";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn example() -> Graph {
    parse_edge_list(EXAMPLE.as_bytes()).unwrap()
}

fn example_file() -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(EXAMPLE.as_bytes()).unwrap();
    f
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_symedge"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "symedge {args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

/// Labeled N <= 5, all 112 isomorphism classes for N = 6.
fn small_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.extend(connected_labeled_graphs(n).unwrap());
    }
    out.extend(connected_graphs_up_to_isomorphism(6).unwrap());
    out
}

/// Graphs on 7 vertices: the example, a few named ones, and a seeded sample.
fn seven_vertex_corpus() -> Vec<Graph> {
    let mut out = vec![example(), joined_cycles(2, 2).unwrap(), cycle(7).unwrap()];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    while out.len() < 40 {
        let mut edges: BTreeSet<Edge> = (2..=7).map(|v| (rng.gen_range(1..v), v)).collect();
        for a in 1..=7 {
            for b in a + 1..=7 {
                if rng.gen_bool(0.3) {
                    edges.insert((a, b));
                }
            }
        }
        out.push(Graph::new(7, edges).unwrap());
    }
    out
}

fn normals(facets: &[symedge::Facet]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = facets.iter().map(|f| f.normal.coeffs().to_vec()).collect();
    v.sort();
    v
}

fn shape(edges: &[Edge]) -> (bool, usize, usize) {
    // (acyclic, touched vertices, components) by plain union-find
    let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut touched = BTreeSet::new();
    let (mut acyclic, mut merges) = (true, 0);
    for &(a, b) in edges {
        touched.insert(a);
        touched.insert(b);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            acyclic = false;
        } else {
            parent[ra] = rb;
            merges += 1;
        }
    }
    (acyclic, touched.len(), touched.len() - merges)
}

fn c1_worked_example() -> Outcome {
    let file = example_file();
    let start = Instant::now();
    let stdout = run_cli(&["count", "--json", file.path().to_str().unwrap()])?;
    let elapsed = start.elapsed();
    let doc: serde_json::Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    let classes = doc["classes"].as_array().ok_or("missing classes")?;
    let pairs: Vec<(u64, u64)> = classes
        .iter()
        .map(|c| (c["corank"].as_u64().unwrap(), c["size"].as_u64().unwrap()))
        .collect();
    let mut sizes: Vec<u64> = pairs.iter().map(|p| p.1).collect();
    sizes.sort();
    let by_corank = |k| pairs.iter().filter(|p| p.0 == k).map(|p| p.1).sum::<u64>();
    let subgraphs = |k| pairs.iter().filter(|p| p.0 == k).count();
    ensure(doc["beta"] == 7, || format!("beta = {}", doc["beta"]))?;
    ensure(subgraphs(0) == 3 && subgraphs(1) == 4, || {
        format!("coranks {pairs:?}")
    })?;
    ensure(sizes == [12, 12, 12, 18, 18, 18, 18], || {
        format!("sizes {sizes:?}")
    })?;
    ensure(doc["total"] == 108, || format!("total = {}", doc["total"]))?;
    ensure(by_corank(0) == 36 && by_corank(1) == 72, || {
        "corank split".into()
    })?;
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "beta=7, 3x12 + 4x18 = 36 + 72 = 108 in {elapsed:.2?}"
    ))
}

fn c2_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let corpus = small_corpus();
    let unlabeled_six = connected_graphs_up_to_isomorphism(6).unwrap().len();
    ensure(unlabeled_six == 112, || {
        format!("{unlabeled_six} graphs on 6 vertices")
    })?;
    let mut checked = 0;
    for g in corpus.iter().chain([&example()]) {
        let ours = normals(&enumerate_all_facets(g).map_err(|e| e.to_string())?);
        let cfg = PointConfiguration::from_graph(g);
        let oracle = normals(&brute_force_facets(&cfg).map_err(|e| e.to_string())?);
        ensure(ours == oracle, || {
            format!(
                "mismatch on {:?}: {} vs {}",
                g.edges(),
                ours.len(),
                oracle.len()
            )
        })?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{checked} graphs, zero discrepancies in {elapsed:.2?}"
    ))
}

fn c3_even_cycles() -> Outcome {
    for k in [2, 3] {
        let got = enumerate_all_facets(&cycle(2 * k).unwrap())
            .map_err(|e| e.to_string())?
            .len();
        let want = even_cycle_facet_count(k).unwrap();
        ensure(want.to_string() == got.to_string(), || {
            format!("C{}: {got} vs {want}", 2 * k)
        })?;
    }
    Ok("C4 = 6, C6 = 20".into())
}

fn c4_joined_cycles() -> Outcome {
    let mut report = Vec::new();
    for (m1, m2) in [(2, 1), (2, 2), (3, 1)] {
        let formula = joined_cycles_count(m1, m2).unwrap();
        let census = facet_census(&joined_cycles(m1, m2).unwrap()).map_err(|e| e.to_string())?;
        let got = (
            census.total_with_corank(0).to_string(),
            census.total_with_corank(1).to_string(),
            census.total.to_string(),
        );
        let want = (
            formula.corank0.to_string(),
            formula.corank1.to_string(),
            formula.total.to_string(),
        );
        ensure(got == want, || {
            format!("({m1},{m2}): census {got:?} vs formula {want:?}")
        })?;
        report.push(format!("({m1},{m2})={}", want.2));
    }
    Ok(report.join(" "))
}

fn c5_bounds() -> Outcome {
    let mut bipartite = 0;
    let corpus: Vec<Graph> = small_corpus()
        .into_iter()
        .chain(seven_vertex_corpus())
        .collect();
    for g in &corpus {
        let c = facet_census(g).map_err(|e| e.to_string())?;
        ensure(c.records.iter().all(|r| r.size <= c.class_bound()), || {
            format!("class over 2^(N-1) on {:?}", g.edges())
        })?;
        ensure(c.total <= c.bound(), || {
            format!("total over bound on {:?}", g.edges())
        })?;
        if two_coloring(g.vertex_count(), g.edges()).is_some() {
            bipartite += 1;
            ensure(c.beta() == 1, || {
                format!("bipartite with beta {} on {:?}", c.beta(), g.edges())
            })?;
        }
    }
    Ok(format!(
        "{} graphs, {bipartite} bipartite with beta = 1",
        corpus.len()
    ))
}

fn c6_face_properties() -> Outcome {
    let mut facets_checked = 0;
    for g in small_corpus().iter().chain(&seven_vertex_corpus()) {
        let cfg = PointConfiguration::from_graph(g);
        for f in enumerate_all_facets(g).map_err(|e| e.to_string())? {
            let p = face_properties(&cfg, &f.point_indices).map_err(|e| e.to_string())?;
            let (forest, verts, k) = shape(&f.subgraph_edges);
            let cyclomatic = f.subgraph_edges.len() + k - verts;
            ensure(p.corank == cyclomatic, || {
                format!("corank {} vs {cyclomatic}", p.corank)
            })?;
            ensure(p.independent == forest, || {
                format!("independence on {:?}", f.subgraph_edges)
            })?;
            ensure(p.dim + k + 1 == verts, || {
                format!("dim {} with |V|={verts}, k={k}", p.dim)
            })?;
            ensure(balancing_check(g, &f).map_err(|e| e.to_string())?, || {
                format!("unbalanced facet {:?}", f.normal.coeffs())
            })?;
            facets_checked += 1;
        }
    }
    Ok(format!("{facets_checked} facets"))
}

fn c7_simplicial() -> Outcome {
    let corpus = small_corpus();
    for g in &corpus {
        let simplicial = is_simplicial(g).map_err(|e| e.to_string())?;
        let all_corank0 = enumerate_facet_classes(g)
            .map_err(|e| e.to_string())?
            .iter()
            .all(|c| c.facets.iter().all(|f| f.corank == 0));
        let even = simple_cycles(g)
            .map_err(|e| e.to_string())?
            .iter()
            .any(|c| c.len() % 2 == 0);
        ensure(simplicial == all_corank0 && simplicial == !even, || {
            format!("disagreement on {:?}", g.edges())
        })?;
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn c8_binomial_counts() -> Outcome {
    for n in 1..=6usize {
        let (mut zero, mut two) = (0u64, 0u64);
        for mask in 0u32..1 << (2 * n) {
            let s: i64 = (0..2 * n)
                .map(|k| {
                    let d = if mask >> k & 1 == 1 { 1 } else { -1 };
                    if k < n {
                        d
                    } else {
                        -d
                    }
                })
                .sum();
            zero += u64::from(s == 0);
            two += u64::from(s == 2);
        }
        let z = count_sum_zero(n).unwrap().to_string();
        let t = count_sum_two(n).unwrap().to_string();
        ensure(z == zero.to_string() && t == two.to_string(), || {
            format!("n={n}: formula ({z}, {t}) vs exhaustive ({zero}, {two})")
        })?;
    }
    Ok("n = 1..6".into())
}

fn c9_homogenization() -> Outcome {
    let mut report = Vec::new();
    for (name, g) in [("C4", cycle(4).unwrap()), ("example", example())] {
        let data = homogenization_data(&g).map_err(|e| e.to_string())?;
        let support = unmixed_support(&PointConfiguration::from_graph(&g));
        for a in support.points() {
            let lifted = data.lifted_exponents(a);
            let origin = a.iter().all(|&x| x == 0);
            ensure(lifted.iter().all(|&x| x >= 0), || {
                format!("{name}: negative at {a:?}")
            })?;
            if origin {
                ensure(lifted.iter().all(|&x| x > 0), || {
                    format!("{name}: origin on a facet")
                })?;
            } else {
                ensure(lifted.contains(&0), || format!("{name}: {a:?} on no facet"))?;
            }
        }
        report.push(format!("{name} {}x{}", data.v.len(), g.vertex_count() - 1));
    }
    Ok(report.join(", "))
}

fn c10_determinism() -> Outcome {
    let file = example_file();
    let path = file.path().to_str().unwrap();
    let a = run_cli(&["facets", "--json", "--quiet", path])?;
    let b = run_cli(&["facets", "--json", "--quiet", path])?;
    ensure(a == b, || "outputs differ".into())?;
    let doc: serde_json::Value = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    ensure(doc["schema"] == "v1" && doc["facet_count"] == 108, || {
        "unexpected document".into()
    })?;
    Ok(format!("{} identical bytes", a.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("worked example census", c1_worked_example),
        ("oracle equivalence", c2_oracle_equivalence),
        ("even cycle counts", c3_even_cycles),
        ("joined cycles formula", c4_joined_cycles),
        ("facet count bounds", c5_bounds),
        ("face properties and balancing", c6_face_properties),
        ("simplicial equivalence", c7_simplicial),
        ("binomial counts", c8_binomial_counts),
        ("homogenization soundness", c9_homogenization),
        ("output determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
