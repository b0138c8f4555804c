use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symedge::report::{CensusDocument, FacetsDocument};
use symedge::{
    brute_force_facets, enumerate_all_facets, enumerate_facet_classes,
    enumerate_maximal_bipartite_subgraphs, facet_census, facet_subsystem_support,
    homogenization_data, homotopy_lift, is_simplicial, joined_cycles_count, read_edge_list,
    unmixed_support, Error, Graph, PointConfiguration,
};

/// Facets of symmetric edge polytopes.
#[derive(Debug, Parser)]
#[command(name = "symedge", version)]
struct Cli {
    /// Suppress informational messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate every facet, grouped by facet subgraph.
    Facets {
        /// Edge-list file, or `-` for stdin.
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Facet counts per maximal bipartite subgraph.
    Count {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the maximal bipartite subgraphs.
    Bipartite { file: PathBuf },
    /// Compare the enumeration against the brute-force oracle.
    OracleCheck { file: PathBuf },
    /// Report whether every facet is a simplex.
    Simplicial { file: PathBuf },
    /// Closed-form counts for cycles of lengths 2*m1 and 2*m2+1 sharing an edge.
    JoinedCycles { m1: usize, m2: usize },
    /// Export supports for the unmixed Kuramoto system.
    KuramotoSupport {
        file: PathBuf,
        /// Restrict to the subsystem of this facet (enumeration order).
        #[arg(long, conflicts_with = "homogenize")]
        facet: Option<usize>,
        /// Emit the homogenization data (V, h) instead of a support.
        #[arg(long)]
        homogenize: bool,
        /// Append a pseudorandom rational coefficient `num den` to each line.
        #[arg(long, conflicts_with = "homogenize")]
        seed: Option<u64>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Ctx {
    quiet: bool,
}

impl Ctx {
    fn info(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("{}", msg.as_ref());
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => e.exit_code() as u8,
            CliError::Io { .. } => 1,
            CliError::Mismatch(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Ctx { quiet: cli.quiet };
    let mut out = Vec::new();
    match run(&ctx, cli.command, &mut out) {
        Ok(()) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(&out).and_then(|_| stdout.flush());
            ExitCode::SUCCESS
        }
        Err(e) => {
            // partial output is still useful for mismatch reports
            let _ = io::stdout().write_all(&out);
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load(path: &Path) -> Result<Graph, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let g = if path.as_os_str() == "-" {
        read_edge_list(io::stdin().lock())
    } else {
        read_edge_list(File::open(path).map_err(io_err)?)
    };
    g.map_err(|e| match e {
        Error::Parse { line, message } => CliError::Core(Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        }),
        other => CliError::Core(other),
    })
}

fn set_string(vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn run(ctx: &Ctx, cmd: Command, out: &mut Vec<u8>) -> Result<(), CliError> {
    match cmd {
        Command::Facets { file, json } => facets(ctx, &load(&file)?, json, out),
        Command::Count { file, json } => count(ctx, &load(&file)?, json, out),
        Command::Bipartite { file } => bipartite(&load(&file)?, out),
        Command::OracleCheck { file } => oracle_check(ctx, &load(&file)?, out),
        Command::Simplicial { file } => {
            writeln!(out, "{}", is_simplicial(&load(&file)?)?).expect("vec write");
            Ok(())
        }
        Command::JoinedCycles { m1, m2 } => {
            let c = joined_cycles_count(m1, m2)?;
            writeln!(
                out,
                "corank0={} corank1={} total={}",
                c.corank0, c.corank1, c.total
            )
            .expect("vec write");
            Ok(())
        }
        Command::KuramotoSupport {
            file,
            facet,
            homogenize,
            seed,
            out: path,
        } => {
            let text = kuramoto(ctx, &load(&file)?, facet, homogenize, seed)?;
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|source| CliError::Io {
                    path: p.display().to_string(),
                    source,
                }),
                None => {
                    out.extend_from_slice(text.as_bytes());
                    Ok(())
                }
            }
        }
    }
}

fn facets(ctx: &Ctx, g: &Graph, json: bool, out: &mut Vec<u8>) -> Result<(), CliError> {
    let cfg = PointConfiguration::from_graph(g);
    let classes = enumerate_facet_classes(g)?;
    let doc = FacetsDocument::new(&cfg, &classes);
    ctx.info(format!(
        "{} facets in {} classes",
        doc.facet_count,
        classes.len()
    ));
    if json {
        serde_json::to_writer(&mut *out, &doc).expect("serializing to memory");
        out.push(b'\n');
        return Ok(());
    }
    for c in &classes {
        writeln!(
            out,
            "class {} V+={} corank={} size={}",
            c.subgraph_index,
            set_string(&c.subgraph.bipartition().plus()),
            c.corank(),
            c.len()
        )
        .expect("vec write");
        for f in &c.facets {
            let edges: Vec<String> = f.directed_edges.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "  normal={:?} edges={}",
                f.normal.coeffs(),
                edges.join(" ")
            )
            .expect("vec write");
        }
    }
    writeln!(out, "total={}", doc.facet_count).expect("vec write");
    Ok(())
}

fn count(ctx: &Ctx, g: &Graph, json: bool, out: &mut Vec<u8>) -> Result<(), CliError> {
    let census = facet_census(g)?;
    ctx.info(format!("N={} m={}", g.vertex_count(), g.edge_count()));
    if json {
        serde_json::to_writer(&mut *out, &CensusDocument::from(&census))
            .expect("serializing to memory");
        out.push(b'\n');
        return Ok(());
    }
    writeln!(out, "beta={} bound={}", census.beta(), census.bound()).expect("vec write");
    for (i, r) in census.records.iter().enumerate() {
        writeln!(
            out,
            "class {i} V+={} corank={} size={}",
            set_string(&r.bipartition.plus()),
            r.corank,
            r.size
        )
        .expect("vec write");
    }
    let max_corank = census.records.iter().map(|r| r.corank).max().unwrap_or(0);
    for k in 0..=max_corank {
        writeln!(out, "corank{k}={}", census.total_with_corank(k)).expect("vec write");
    }
    writeln!(out, "total={}", census.total).expect("vec write");
    Ok(())
}

fn bipartite(g: &Graph, out: &mut Vec<u8>) -> Result<(), CliError> {
    for (i, b) in enumerate_maximal_bipartite_subgraphs(g)?.iter().enumerate() {
        let edges: Vec<String> = b
            .edge_pairs(g)
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        writeln!(
            out,
            "{i} V+={} corank={} edges={}",
            set_string(&b.bipartition().plus()),
            b.corank(),
            edges.join(" ")
        )
        .expect("vec write");
    }
    Ok(())
}

fn oracle_check(ctx: &Ctx, g: &Graph, out: &mut Vec<u8>) -> Result<(), CliError> {
    let cfg = PointConfiguration::from_graph(g);
    let oracle = brute_force_facets(&cfg)?;
    let mut ours: Vec<Vec<i64>> = enumerate_all_facets(g)?
        .iter()
        .map(|f| f.normal.coeffs().to_vec())
        .collect();
    ours.sort();
    let theirs: Vec<Vec<i64>> = oracle.iter().map(|f| f.normal.coeffs().to_vec()).collect();
    if ours == theirs {
        writeln!(out, "{} == {}", ours.len(), theirs.len()).expect("vec write");
        return Ok(());
    }
    writeln!(out, "{} != {}", ours.len(), theirs.len()).expect("vec write");
    for n in ours.iter().filter(|n| theirs.binary_search(n).is_err()) {
        ctx.info(format!("enumeration only: {n:?}"));
    }
    for n in theirs.iter().filter(|n| ours.binary_search(n).is_err()) {
        ctx.info(format!("oracle only: {n:?}"));
    }
    Err(CliError::Mismatch("facet sets differ".into()))
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> (i64, i64) {
    let mut num: i64 = rng.gen_range(-1000..=1000);
    if num == 0 {
        num = 1;
    }
    let den: i64 = rng.gen_range(1..=1000);
    let g = num.gcd(&den);
    (num / g, den / g)
}

fn kuramoto(
    ctx: &Ctx,
    g: &Graph,
    facet: Option<usize>,
    homogenize: bool,
    seed: Option<u64>,
) -> Result<String, CliError> {
    if homogenize {
        let data = homogenization_data(g)?;
        ctx.info(format!("{} facet normals", data.facet_count()));
        return Ok(data.to_text());
    }
    let cfg = PointConfiguration::from_graph(g);
    let support = match facet {
        None => unmixed_support(&cfg),
        Some(i) => {
            let facets = enumerate_all_facets(g)?;
            let f = facets.get(i).ok_or(Error::IndexOutOfRange {
                index: i,
                len: facets.len(),
            })?;
            facet_subsystem_support(&cfg, f)
        }
    };
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let extra: Vec<Vec<i64>> = homotopy_lift(&support)
        .into_iter()
        .map(|(_, w)| {
            let mut cols = vec![w];
            if let Some(rng) = rng.as_mut() {
                let (n, d) = random_coefficient(rng);
                cols.extend([n, d]);
            }
            cols
        })
        .collect();
    Ok(support.to_text(&extra))
}
