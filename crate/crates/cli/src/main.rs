use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use mop_rainbow::coloring::rainbow_color;
use mop_rainbow::dot::{ccs_dot, coloring_dot, graph_dot};
use mop_rainbow::format::{parse_coloring, parse_graph_file, write_coloring, write_mop, GraphFile};
use mop_rainbow::generators::{fan, lad, lad_plus, random_instance, GeneratedInstance};
use mop_rainbow::metrics::{ecc_diam_rad_center, layers};
use mop_rainbow::spine::build_ccs;
use mop_rainbow::verify::{check, exact_rc, exact_src, ExactOptions, Limits};
use mop_rainbow::{Error, Graph, MopGraph};

/// Maximal outerplanar graphs: generation, analysis, rainbow colouring and
/// verification.
#[derive(Parser)]
#[command(name = "moprc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a MOP (and its known colouring for fan and ladder families).
    Gen {
        family: FamilyArg,
        /// Path length for `fan`, diameter for `lad`/`lad-plus`, vertex count
        /// for `random`.
        param: usize,
        /// Required for `random`.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Size, diameter, radius, centre and BFS layer sizes.
    Info { input: PathBuf },
    /// Print the central-cut-spine as indented text.
    Ccs {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Rainbow-colour a MOP.
    Color {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Check a colouring; prints `OK` or `FAIL <u> <v>`.
    Verify {
        input: PathBuf,
        coloring: PathBuf,
        /// Require a rainbow shortest path for every pair.
        #[arg(long)]
        strong: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Exact rainbow connection number by exhaustive search.
    Rc {
        input: PathBuf,
        #[arg(long)]
        strong: bool,
        /// Where to write the optimal colouring.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// CSV comparison of the colouring against the exact value.
    Bench {
        /// Vertex counts of random instances, comma separated.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Random instances per vertex count.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ladder diameters, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4, 5, 6])]
        lad: Vec<usize>,
        /// Fan path lengths, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [7])]
        fan: Vec<usize>,
        /// Leave the millis column empty so the output is reproducible.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fan,
    Lad,
    #[value(name = "lad_plus", alias = "lad-plus")]
    LadPlus,
    Random,
}

#[derive(Args)]
struct Output {
    /// Write here instead of stdout; side files get `.coloring`/`.dot`
    /// appended.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also emit Graphviz DOT.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct Caps {
    #[arg(long, default_value_t = 200)]
    max_n: usize,
    #[arg(long, default_value_t = 32)]
    max_colors: usize,
    /// Edge cap for exact search.
    #[arg(long, default_value_t = 22)]
    max_edges: usize,
    #[arg(long)]
    timeout_s: Option<u64>,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            max_n: self.max_n,
            max_colors: self.max_colors,
        }
    }

    fn exact(&self) -> ExactOptions {
        ExactOptions {
            max_edges: self.max_edges,
            timeout: self.timeout_s.map(Duration::from_secs),
            ..ExactOptions::default()
        }
    }
}

/// Verification failure, reported with exit code 1.
#[derive(Debug)]
struct Rejected;

impl std::fmt::Display for Rejected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("verification failed")
    }
}

impl std::error::Error for Rejected {}

fn side_path(base: &Path, ext: &str) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

impl Output {
    /// Writes the main text, then the side outputs: to files next to
    /// `--out`, or after the main text on stdout.
    fn emit(&self, main: &str, side: &[(&str, Option<String>)]) -> Result<()> {
        match &self.out {
            Some(path) => {
                fs::write(path, main).with_context(|| format!("writing {}", path.display()))?;
                for (ext, text) in side {
                    if let Some(text) = text {
                        let p = side_path(path, ext);
                        fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
                    }
                }
            }
            None => {
                print!("{main}");
                for text in side.iter().filter_map(|(_, t)| t.as_ref()) {
                    print!("{text}");
                }
            }
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    let g = match parse_graph_file(&text).with_context(|| path.display().to_string())? {
        GraphFile::Mop(c) => MopGraph::from_canonical(&c)?.graph().clone(),
        GraphFile::Plain(g) => g,
    };
    Ok(g)
}

fn load_mop(path: &Path) -> Result<MopGraph> {
    let text = read(path)?;
    let g = match parse_graph_file(&text).with_context(|| path.display().to_string())? {
        GraphFile::Mop(c) => MopGraph::from_canonical(&c)?,
        GraphFile::Plain(g) => MopGraph::from_graph(g)?,
    };
    Ok(g)
}

fn labels(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_gen(family: FamilyArg, param: usize, seed: Option<u64>, out: &Output) -> Result<()> {
    let inst: GeneratedInstance = match family {
        FamilyArg::Fan => fan(param)?,
        FamilyArg::Lad => lad(param)?,
        FamilyArg::LadPlus => lad_plus(param)?,
        FamilyArg::Random => {
            let Some(seed) = seed else {
                bail!(Error::Domain("`gen random` needs --seed".into()));
            };
            random_instance(param, seed)?
        }
    };
    let g = inst.graph.graph();
    // The colouring only goes to a side file; stdout carries the MOP alone.
    let coloring = inst
        .coloring
        .as_ref()
        .filter(|_| out.out.is_some())
        .map(|c| write_coloring(g, c));
    let dot = out.dot.then(|| match &inst.coloring {
        Some(c) => coloring_dot(g, c),
        None => graph_dot(g),
    });
    out.emit(
        &write_mop(&inst.canonical),
        &[(".coloring", coloring), (".dot", dot)],
    )
}

fn cmd_info(input: &Path) -> Result<()> {
    let g = load_mop(input)?;
    let e = ecc_diam_rad_center(g.graph())?;
    let tree = build_ccs(&g)?;
    let root = tree.root_vertex();
    let ls = layers(g.graph(), &[root])?;
    let sizes: Vec<String> = ls.iter().map(|l| l.len().to_string()).collect();
    println!("n: {}", g.n());
    println!("edges: {}", g.m());
    println!("diam: {}", e.diam);
    println!("rad: {}", e.rad);
    println!("center: {}", labels(&e.center));
    println!("root: {}", root + 1);
    println!("layers: {}", sizes.join(" "));
    Ok(())
}

fn cmd_ccs(input: &Path, out: &Output) -> Result<()> {
    let g = load_mop(input)?;
    let tree = build_ccs(&g)?;
    let dot = out.dot.then(|| ccs_dot(&tree));
    out.emit(&tree.to_text(), &[(".dot", dot)])
}

fn cmd_color(input: &Path, out: &Output) -> Result<()> {
    let g = load_mop(input)?;
    let (c, stats, _) = rainbow_color(&g)?;
    eprintln!(
        "colors_used: {} bound: {} excess: {}",
        stats.colors_used, stats.palette_bound, stats.excess_c
    );
    let dot = out.dot.then(|| coloring_dot(g.graph(), &c));
    out.emit(&write_coloring(g.graph(), &c), &[(".dot", dot)])
}

fn cmd_verify(input: &Path, coloring: &Path, strong: bool, caps: &Caps) -> Result<()> {
    let g = load_graph(input)?;
    let c = parse_coloring(&read(coloring)?, &g).with_context(|| coloring.display().to_string())?;
    let r = check(&g, &c, caps.limits(), strong, false)?;
    match r.counterexample {
        None => {
            println!("OK");
            Ok(())
        }
        Some((u, v)) => {
            println!("FAIL {} {}", u + 1, v + 1);
            Err(Rejected.into())
        }
    }
}

fn cmd_rc(input: &Path, strong: bool, out: Option<&Path>, caps: &Caps) -> Result<()> {
    let g = load_graph(input)?;
    let r = if strong {
        exact_src(&g, caps.exact())?
    } else {
        exact_rc(&g, caps.exact())?
    };
    println!("{}", r.value);
    if let Some(path) = out {
        fs::write(path, write_coloring(&g, &r.certificate))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

struct BenchRow {
    n: usize,
    diam: usize,
    rad: usize,
    colors: usize,
    exact: Option<usize>,
    millis: u128,
}

fn bench_row(g: &MopGraph, caps: &Caps) -> Result<BenchRow> {
    let start = Instant::now();
    let e = ecc_diam_rad_center(g.graph())?;
    let (_, stats, _) = rainbow_color(g)?;
    let exact = match exact_rc(g.graph(), caps.exact()) {
        Ok(r) => Some(r.value),
        Err(Error::ScaleLimit { .. } | Error::Timeout { .. }) => None,
        Err(other) => return Err(other.into()),
    };
    Ok(BenchRow {
        n: g.n(),
        diam: e.diam,
        rad: e.rad,
        colors: stats.colors_used,
        exact,
        millis: start.elapsed().as_millis(),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    ns: &[usize],
    trials: usize,
    seed: u64,
    lads: &[usize],
    fans: &[usize],
    no_timing: bool,
    out: Option<&Path>,
    caps: &Caps,
) -> Result<()> {
    let mut graphs = Vec::new();
    for &d in lads {
        graphs.push(lad(d)?.graph);
    }
    for &n in fans {
        graphs.push(fan(n)?.graph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in ns {
        for _ in 0..trials {
            graphs.push(random_instance(n, rng.next_u64())?.graph);
        }
    }
    let rows: Vec<BenchRow> = graphs
        .par_iter()
        .map(|g| bench_row(g, caps))
        .collect::<Result<_>>()?;
    let mut csv = String::from("n,diam,rad,alg3_colors,bound_3rad,exact_rc,millis\n");
    for r in rows {
        let exact = r.exact.map(|x| x.to_string()).unwrap_or_default();
        let millis = if no_timing {
            String::new()
        } else {
            r.millis.to_string()
        };
        csv.push_str(&format!(
            "{},{},{},{},{},{exact},{millis}\n",
            r.n,
            r.diam,
            r.rad,
            r.colors,
            3 * r.rad
        ));
    }
    match out {
        Some(path) => {
            fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::Gen {
            family,
            param,
            seed,
            out,
        } => cmd_gen(*family, *param, *seed, out),
        Command::Info { input } => cmd_info(input),
        Command::Ccs { input, out } => cmd_ccs(input, out),
        Command::Color { input, out } => cmd_color(input, out),
        Command::Verify {
            input,
            coloring,
            strong,
            caps,
        } => cmd_verify(input, coloring, *strong, caps),
        Command::Rc {
            input,
            strong,
            out,
            caps,
        } => cmd_rc(input, *strong, out.as_deref(), caps),
        Command::Bench {
            n,
            trials,
            seed,
            lad,
            fan,
            no_timing,
            out,
            caps,
        } => cmd_bench(
            n,
            *trials,
            *seed,
            lad,
            fan,
            *no_timing,
            out.as_deref(),
            caps,
        ),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<Rejected>() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::ScaleLimit { .. } | Error::Timeout { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = exit_code(&err);
            if code != 1 {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(code)
        }
    }
}
