//! `wedge`: analyze graphs, generate family members, run censuses and
//! bounded theorem checks.
//!
//! Exit status: 0 on success (or a check that holds), 1 when a check finds a
//! counterexample, 2 on usage, input or bound errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use wedge_core::census::{collect, CensusFilter, MAX_CENSUS_ORDER};
use wedge_core::edgelist::{self, InputFormat};
use wedge_core::families::{build, FamilyId, FamilySpec};
use wedge_core::matching::{is_equimatchable, is_randomly_matchable};
use wedge_core::verify::verify_graphs;
use wedge_core::{canonical_code, graph6, invariant_report, is_wed, verify, Graph, TheoremId};

#[derive(Parser)]
#[command(
    name = "wedge",
    version,
    about = "Edge domination and matching invariants of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every invariant of one graph as key=value lines.
    Analyze {
        /// Edge-list or graph6 file; standard input when omitted or `-`.
        path: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Write a named graph or family member as an edge list.
    Gen {
        /// Family name, e.g. f21, hstar, cycle, product.
        family: String,
        /// Parameters as key=value, e.g. n=3 r=1 s=1.
        params: Vec<String>,
        /// Left factor of a product, e.g. "cycle n=5".
        #[arg(long)]
        left: Option<String>,
        /// Right factor of a product.
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check one characterization exhaustively up to a bound.
    Verify {
        /// kn, krs, randomly-matchable, triangle-free, split, cartesian,
        /// girth5, match-removal, gamma-equals-i or factors.
        theorem: String,
        /// Order bound for single-graph checks.
        #[arg(long)]
        max_n: Option<usize>,
        /// Factor order bound for cartesian and factors.
        #[arg(long)]
        factor_max: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Read graph6 lines instead of generating (`-` for standard input).
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// List one graph6 line per isomorphism class passing the filters.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        nonbipartite: bool,
        #[arg(long)]
        girth_min: Option<usize>,
        #[arg(long)]
        girth_max: Option<usize>,
        #[arg(long)]
        split: bool,
        #[arg(long, value_enum)]
        predicate: Option<Predicate>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Filter graph6 lines from a file (`-` for standard input) instead
        /// of generating.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    Wed,
    Equimatchable,
    RandomlyMatchable,
}

impl Predicate {
    fn test(self, g: &Graph) -> bool {
        match self {
            Predicate::Wed => is_wed(g),
            Predicate::Equimatchable => is_equimatchable(g),
            Predicate::RandomlyMatchable => is_randomly_matchable(g),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { path, format } => analyze(path, format),
        Command::Gen {
            family,
            params,
            left,
            right,
            output,
        } => generate(&family, &params, left, right, output),
        Command::Verify {
            theorem,
            max_n,
            factor_max,
            jobs,
            input,
        } => {
            set_jobs(jobs)?;
            check(&theorem, max_n, factor_max, input)
        }
        Command::Census {
            max_n,
            connected,
            triangle_free,
            bipartite,
            nonbipartite,
            girth_min,
            girth_max,
            split,
            predicate,
            jobs,
            output,
            input,
        } => {
            set_jobs(jobs)?;
            let filter = CensusFilter {
                max_order: max_n,
                connected,
                triangle_free,
                bipartite,
                nonbipartite,
                min_girth: girth_min,
                max_girth: girth_max,
                split_only: split,
            };
            census(filter, predicate, output, input)
        }
    }
}

fn set_jobs(jobs: Option<usize>) -> Result<()> {
    if let Some(n) = jobs {
        if n == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the worker pool")?;
    }
    Ok(())
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")?;
            Ok(text)
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn analyze(path: Option<PathBuf>, format: Option<Format>) -> Result<ExitCode> {
    let text = read_input(path.as_ref())?;
    let format = format.map(|f| match f {
        Format::Edgelist => InputFormat::EdgeList,
        Format::Graph6 => InputFormat::Graph6,
    });
    let g = edgelist::parse_auto(&text, format)?;
    let report = invariant_report(&g)?;
    let mut out = String::new();
    for (key, value) in report.records() {
        out.push_str(&format!("{key}={value}\n"));
    }
    emit(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn generate(
    family: &str,
    params: &[String],
    left: Option<String>,
    right: Option<String>,
    output: Option<PathBuf>,
) -> Result<ExitCode> {
    let id: FamilyId = family.parse()?;
    let spec = if id == FamilyId::Product {
        if !params.is_empty() {
            bail!("product takes --left and --right, not parameters");
        }
        let (Some(left), Some(right)) = (left, right) else {
            bail!("product needs --left and --right");
        };
        FamilySpec::product(FamilySpec::parse(&left)?, FamilySpec::parse(&right)?)
    } else {
        if left.is_some() || right.is_some() {
            bail!("--left and --right only apply to product");
        }
        FamilySpec::from_parts(id, params.iter().map(String::as_str))?
    };
    let g = build(&spec)?;
    emit(output.as_ref(), &edgelist::write(&g, &[spec.to_string()]))?;
    Ok(ExitCode::SUCCESS)
}

fn default_bound(id: TheoremId) -> usize {
    match id {
        TheoremId::Kn => 8,
        TheoremId::Krs => 10,
        TheoremId::TriangleFree | TheoremId::Girth5 => 9,
        TheoremId::MatchRemoval => 7,
        TheoremId::Cartesian => 4,
        TheoremId::Factors => 3,
        TheoremId::RandomlyMatchable | TheoremId::Split | TheoremId::GammaEqualsI => 8,
    }
}

fn check(
    theorem: &str,
    max_n: Option<usize>,
    factor_max: Option<usize>,
    input: Option<PathBuf>,
) -> Result<ExitCode> {
    let id: TheoremId = theorem.parse()?;
    let bound = if id.bounds_factors() {
        if max_n.is_some() {
            bail!("{id} is bounded by --factor-max");
        }
        factor_max.unwrap_or(default_bound(id))
    } else {
        if factor_max.is_some() {
            bail!("--factor-max only applies to cartesian and factors");
        }
        max_n.unwrap_or(default_bound(id))
    };
    let verdict = match input {
        Some(path) => {
            let text = read_input(Some(&path))?;
            let graphs = decode_lines(&text)?;
            verify_graphs(id, graphs)?
        }
        None => verify(id, bound)?,
    };
    let mut out = String::new();
    out.push_str(&format!("theorem={}\n", verdict.theorem_id));
    let bound_key = if id.bounds_factors() {
        "factor_max"
    } else {
        "max_n"
    };
    out.push_str(&format!("{bound_key}={}\n", verdict.max_order));
    out.push_str(&format!("graphs_checked={}\n", verdict.graphs_checked));
    for w in &verdict.witnesses {
        out.push_str(&format!("witness={w}\n"));
    }
    for c in &verdict.counterexamples {
        out.push_str(&format!("counterexample={c}\n"));
    }
    out.push_str(&format!(
        "summary holds={} witnesses={} counterexamples={}\n",
        verdict.holds,
        verdict.witnesses.len(),
        verdict.counterexamples.len()
    ));
    emit(None, &out)?;
    Ok(if verdict.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| graph6::decode(l).with_context(|| format!("line {}", i + 1)))
        .collect()
}

fn census(
    filter: CensusFilter,
    predicate: Option<Predicate>,
    output: Option<PathBuf>,
    input: Option<PathBuf>,
) -> Result<ExitCode> {
    let codes = match input {
        Some(path) => {
            if filter.max_order == 0 || filter.max_order > wedge_core::canon::MAX_CANON_ORDER {
                bail!(
                    "--max-n must be within 1..={} for external input",
                    wedge_core::canon::MAX_CANON_ORDER
                );
            }
            let text = read_input(Some(&path))?;
            let mut codes: Vec<_> = decode_lines(&text)?
                .into_par_iter()
                .filter(|g| filter.accepts(g))
                .map(|g| canonical_code(&g).expect("order checked by the filter"))
                .collect();
            codes.sort_unstable();
            codes
        }
        None => {
            if filter.max_order > MAX_CENSUS_ORDER {
                bail!(
                    "--max-n {} exceeds the census bound of {MAX_CENSUS_ORDER}",
                    filter.max_order
                );
            }
            collect(&filter)?
        }
    };
    let kept: Vec<String> = codes
        .par_iter()
        .filter(|c| predicate.is_none_or(|p| p.test(&c.to_graph())))
        .map(|c| c.to_graph6())
        .collect();
    let mut text = String::new();
    for line in &kept {
        text.push_str(line);
        text.push('\n');
    }
    emit(output.as_ref(), &text)?;
    eprintln!(
        "summary graphs={} examined={} max_n={}",
        kept.len(),
        codes.len(),
        filter.max_order
    );
    Ok(ExitCode::SUCCESS)
}
