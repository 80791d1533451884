use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kgrel::measures::LogBase;
use kgrel::MethodParams;
use serde::{Deserialize, Serialize};

/// Default directory searched for `*.nt` files when no `--graph` is given.
pub const GRAPH_DIR_ENV: &str = "KGREL_GRAPH_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "kgrel",
    version,
    about = "Semantic relatedness over RDF knowledge graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// N-Triples files to load (defaults to every *.nt file in $KGREL_GRAPH_DIR)
    #[arg(long = "graph", global = true)]
    pub graphs: Vec<PathBuf>,

    /// Drop statements with this predicate IRI
    #[arg(long = "exclude-predicate", global = true)]
    pub exclude_predicates: Vec<String>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Max undirected path length
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub h: u64,

    /// ASRMP directed path length
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,

    /// Paths kept by exclm
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,

    /// exclm length damping, in (0, 1]
    #[arg(long, default_value_t = 0.25, value_parser = parse_alpha)]
    pub alpha: f64,

    /// Log base for IC, PF-ITF and predicate weights
    #[arg(long = "log-base", default_value_t = 10.0, value_parser = parse_base)]
    pub log_base: f64,

    /// Log base for the ldsd family
    #[arg(long = "pattern-log-base", default_value_t = std::f64::consts::E, value_parser = parse_base)]
    pub pattern_log_base: f64,

    /// TSV of predicate IRI and weight for proxm (default: predicate IC)
    #[arg(long)]
    pub weights: Option<PathBuf>,

    /// Report asrmp in one direction only instead of the two-way mean
    #[arg(long)]
    pub directed_asrmp: bool,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("alpha must be in (0, 1], got {v}"))
    }
}

fn parse_base(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 1.0 {
        Ok(v)
    } else {
        Err(format!("log base must be > 1, got {v}"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print triple, resource and per-predicate counts
    Stats,
    /// Score one pair with one method
    Score {
        method: String,
        iri1: String,
        iri2: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// List the acyclic paths between two resources
    Paths {
        iri1: String,
        iri2: String,
        /// Follow triples subject to object only
        #[arg(long)]
        directed: bool,
        /// Only paths of exactly `bound` steps
        #[arg(long)]
        exactly: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Correlate method scores with golden datasets
    Bench {
        /// Dataset TSV files
        #[arg(long = "dataset", required = true)]
        datasets: Vec<PathBuf>,
        /// Term to IRI mapping TSV
        #[arg(long)]
        mapping: Option<PathBuf>,
        /// Comma-separated method names, or `all`
        #[arg(long = "methods", alias = "method", default_value = "all")]
        methods: String,
        /// Keep only pairs joined by a path of length at most 2
        #[arg(long)]
        clean: bool,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Print the effective configuration as JSON
    Config {
        #[command(flatten)]
        params: ParamArgs,
    },
}

/// Everything a run depends on, in serializable form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliConfig {
    pub graphs: Vec<PathBuf>,
    pub exclude_predicates: Vec<String>,
    pub params: MethodParams,
    pub weights_file: Option<PathBuf>,
    pub format: Format,
}

impl CliConfig {
    pub fn new(
        graph: &GraphArgs,
        params: &ParamArgs,
        weights: Option<BTreeMap<String, f64>>,
    ) -> Self {
        Self {
            graphs: graph.graphs.clone(),
            exclude_predicates: graph.exclude_predicates.clone(),
            params: MethodParams {
                h: params.h as usize,
                m: params.m as usize,
                k: params.k as usize,
                alpha: params.alpha,
                ic_log_base: LogBase::new(params.log_base),
                pattern_log_base: LogBase::new(params.pattern_log_base),
                prox_weights: weights,
                symmetrize_asrmp: !params.directed_asrmp,
            },
            weights_file: params.weights.clone(),
            format: graph.format,
        }
    }
}
