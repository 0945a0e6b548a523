mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use factorsmith::corpus::{random_13_tree, random_base_tree_2k1, CorpusSpec};
use factorsmith::families::{generate_t2k1, generate_t3};
use factorsmith::formats::{encode_edge_list, encode_graph6, to_dot};
use factorsmith::report::run_verify;
use factorsmith::{
    check_iso_condition, extract_component_factor, isolated_toughness, Family, Ratio, VertexSet,
};

use input::Format;

/// Fractional [1, k+1/2]-factors, isolated-vertex conditions and component
/// factors.
#[derive(Parser)]
#[command(name = "factorsmith", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test iso(G - S) <= c|S| for every vertex set S.
    Check {
        /// Input file (graph6 or edge list); stdin when omitted.
        input: Option<PathBuf>,
        /// Ratio as p/q, e.g. 3/2.
        #[arg(long)]
        c: String,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Find a certified component factor.
    Factor {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// F1 goes with k = 1, F2 with k >= 2.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Isolated toughness I(G), exactly.
    Toughness {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Check condition, fractional factor and component factor agree over a
    /// corpus. Prints a JSON report.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated values of k.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        k: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print only the summary.
        #[arg(long)]
        summary: bool,
    },
    /// Write a corpus or generated family members as graph6 lines.
    Gen {
        #[command(flatten)]
        source: GenArgs,
    },
    /// Convert one graph between formats.
    Convert {
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "F1", alias = "f1")]
    F1,
    #[value(name = "F2", alias = "f2")]
    F2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Trace,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Args)]
#[group(multiple = false)]
struct CorpusSource {
    /// Every labelled graph on N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// Random graphs: n,p,count[,seed=S] with p as p/q, 0 or 1.
    #[arg(long, value_name = "SPEC")]
    gnp: Option<String>,
    /// Random labelled trees: n,count[,seed=S].
    #[arg(long, value_name = "SPEC")]
    trees: Option<String>,
    /// Paths P2..P(MAX) and cycles C3..C(MAX).
    #[arg(long, value_name = "MAX")]
    paths_cycles: Option<usize>,
    /// Every tree on at most MAX vertices, up to isomorphism.
    #[arg(long, value_name = "MAX")]
    free_trees: Option<usize>,
    /// One graph6 string per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    #[command(flatten)]
    source: CorpusSource,
    /// Overrides the seed of --gnp and --trees.
    #[arg(long)]
    seed: Option<u64>,
}

impl CorpusArgs {
    fn spec(&self) -> Result<Option<CorpusSpec>> {
        let s = &self.source;
        let mut spec = if let Some(n) = s.exhaustive {
            CorpusSpec::Exhaustive(n)
        } else if let Some(text) = &s.gnp {
            CorpusSpec::parse_gnp(text)?
        } else if let Some(text) = &s.trees {
            CorpusSpec::parse_trees(text)?
        } else if let Some(max) = s.paths_cycles {
            CorpusSpec::PathsCycles(max)
        } else if let Some(max) = s.free_trees {
            CorpusSpec::FreeTrees(max)
        } else if let Some(path) = &s.file {
            CorpusSpec::File(path.clone())
        } else {
            return Ok(None);
        };
        if let (Some(new), CorpusSpec::Gnp { seed, .. } | CorpusSpec::Trees { seed, .. }) =
            (self.seed, &mut spec)
        {
            *seed = new;
        }
        Ok(Some(spec))
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Members of T(3) built from random {1,3}-trees with M branch vertices.
    #[arg(long, value_name = "M", conflicts_with_all = ["exhaustive", "gnp", "trees", "paths_cycles", "free_trees", "file", "t2k1"])]
    t3: Option<usize>,
    /// Members of T(2k+1) built from random base trees: k,size.
    #[arg(long, value_name = "K,SIZE", conflicts_with_all = ["exhaustive", "gnp", "trees", "paths_cycles", "free_trees", "file"])]
    t2k1: Option<String>,
    /// Number of family members to generate.
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Emit the base trees instead of the family members.
    #[arg(long)]
    base: bool,
}

fn label_set(set: &VertexSet, labels: &[String]) -> String {
    let names: Vec<&str> = set.iter().map(|v| labels[v].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

fn parse_ratio(text: &str) -> Result<Ratio> {
    Ok(text.parse()?)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { input, c, format } => {
            let c = parse_ratio(&c)?;
            let lg = input::load(input.as_deref(), format)?;
            match check_iso_condition(&lg.graph, c)? {
                None => {
                    println!("holds");
                    Ok(0)
                }
                Some(w) => {
                    println!("violated");
                    println!("S = {}", label_set(&w.s, &lg.labels));
                    println!("isolated = {}", label_set(&w.isolated, &lg.labels));
                    Ok(1)
                }
            }
        }
        Command::Factor {
            input,
            k,
            family,
            emit,
            format,
        } => {
            let expected = Family::for_k(k)?;
            match (family, expected) {
                (Some(FamilyArg::F1), Family::F2(_)) => {
                    bail!("family F1 goes with k = 1, got k = {k}")
                }
                (Some(FamilyArg::F2), Family::F1) => bail!("family F2 needs k >= 2"),
                _ => {}
            }
            let lg = input::load(input.as_deref(), format)?;
            let g = &lg.graph;
            let Some(found) = extract_component_factor(g, k)? else {
                println!("no fractional [1,{k}+1/2]-factor");
                if let Some(w) = check_iso_condition(g, Ratio::k_plus_half(k))? {
                    println!("S = {}", label_set(&w.s, &lg.labels));
                }
                return Ok(1);
            };
            match emit {
                Emit::Json => println!("{}", serde_json::to_string_pretty(&found)?),
                Emit::Dot => print!("{}", to_dot(g, Some(&found.factor))?),
                Emit::Trace => {
                    print!("{}", found.trace);
                    let classes: Vec<String> = found
                        .certificate
                        .classes()
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    println!("components: {}", classes.join(", "));
                }
            }
            Ok(0)
        }
        Command::Toughness { input, format } => {
            let lg = input::load(input.as_deref(), format)?;
            println!("{}", isolated_toughness(&lg.graph)?);
            Ok(0)
        }
        Command::Verify {
            corpus,
            k,
            jobs,
            summary,
        } => {
            if k.contains(&0) {
                bail!("k must be at least 1");
            }
            let Some(spec) = corpus.spec()? else {
                bail!("give a corpus: --exhaustive, --gnp, --trees, --paths-cycles, --free-trees or --file");
            };
            let report = run_verify(spec.graphs()?, &k, jobs)?;
            if summary {
                println!("{}", serde_json::to_string_pretty(&report.summary)?);
            } else {
                println!("{}", serde_json::to_string_pretty(&report)?);
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Gen { source } => {
            gen(source)?;
            Ok(0)
        }
        Command::Convert { input, to, format } => {
            let lg = input::load(input.as_deref(), format)?;
            match to {
                Target::Graph6 => println!("{}", encode_graph6(&lg.graph)?),
                Target::Edgelist => print!("{}", encode_edge_list(&lg.graph)),
                Target::Dot => print!("{}", to_dot(&lg.graph, None)?),
            }
            Ok(0)
        }
    }
}

fn gen(args: GenArgs) -> Result<()> {
    let seed = args.corpus.seed.unwrap_or(0);
    if let Some(m) = args.t3 {
        for s in seed..seed + args.count {
            let r = random_13_tree(m, s);
            let out = if args.base { r } else { generate_t3(&r)? };
            println!("{}", encode_graph6(&out)?);
        }
        return Ok(());
    }
    if let Some(text) = &args.t2k1 {
        let (k, size) = text
            .split_once(',')
            .and_then(|(k, s)| {
                Some((
                    k.trim().parse::<u32>().ok()?,
                    s.trim().parse::<usize>().ok()?,
                ))
            })
            .with_context(|| format!("expected k,size, got {text:?}"))?;
        for s in seed..seed + args.count {
            let r = random_base_tree_2k1(k, size, s)?;
            let out = if args.base { r } else { generate_t2k1(&r, k)? };
            println!("{}", encode_graph6(&out)?);
        }
        return Ok(());
    }
    let Some(spec) = args.corpus.spec()? else {
        bail!("give a corpus, --t3 or --t2k1");
    };
    for (_, g) in spec.graphs()? {
        println!("{}", encode_graph6(&g)?);
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FACTORSMITH_LOG")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
