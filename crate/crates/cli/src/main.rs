mod config;

use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use kgrel::bench::{self, reports_to_json, reports_to_tsv, TermMapping};
use kgrel::path::{enumerate_paths, LengthMode, PathDirection, PathQuery};
use kgrel::store::StoreBuilder;
use kgrel::{IngestOptions, Method, Scorer, TermId, TripleStore};
use serde_json::json;
use thiserror::Error;

use config::{Cli, CliConfig, Command, Format, GraphArgs, ParamArgs, GRAPH_DIR_ENV};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Input { path: PathBuf, source: io::Error },
    #[error("unresolvable IRI: {0}")]
    UnknownIri(String),
    #[error("dataset {0} has no resolvable pair")]
    Unresolved(String),
    #[error(transparent)]
    Ingest(#[from] kgrel::IngestError),
    #[error(transparent)]
    Bench(#[from] kgrel::BenchError),
    #[error(transparent)]
    Measure(#[from] kgrel::MeasureError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } => 2,
            CliError::UnknownIri(_) => 3,
            CliError::Unresolved(_) => 4,
            _ => 1,
        }
    }
}

fn graph_files(args: &GraphArgs) -> Result<Vec<PathBuf>, CliError> {
    if !args.graphs.is_empty() {
        return Ok(args.graphs.clone());
    }
    let Some(dir) = std::env::var_os(GRAPH_DIR_ENV) else {
        return Err(CliError::Usage(format!(
            "no --graph given and {GRAPH_DIR_ENV} is not set"
        )));
    };
    let dir = PathBuf::from(dir);
    let entries = fs::read_dir(&dir).map_err(|source| CliError::Input {
        path: dir.clone(),
        source,
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "nt"))
        .collect();
    files.sort();
    Ok(files)
}

fn load_graph(args: &GraphArgs) -> Result<TripleStore, CliError> {
    let mut builder = StoreBuilder::new(IngestOptions {
        exclude_predicates: args.exclude_predicates.clone(),
        ..IngestOptions::default()
    });
    for path in graph_files(args)? {
        let file = File::open(&path).map_err(|source| CliError::Input {
            path: path.clone(),
            source,
        })?;
        builder.ingest(BufReader::new(file))?;
    }
    Ok(builder.seal())
}

fn load_weights(path: &Path) -> Result<BTreeMap<String, f64>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })?;
    let mut table = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed = line
            .split_once('\t')
            .and_then(|(iri, w)| Some((iri.trim(), w.trim().parse::<f64>().ok()?)));
        let Some((iri, w)) = parsed else {
            return Err(CliError::Usage(format!(
                "{}: line {}: expected `predicate<TAB>weight`",
                path.display(),
                i + 1
            )));
        };
        let iri = iri.trim_start_matches('<').trim_end_matches('>');
        table.insert(iri.to_string(), w);
    }
    Ok(table)
}

fn config(graph: &GraphArgs, params: &ParamArgs) -> Result<CliConfig, CliError> {
    let weights = params.weights.as_deref().map(load_weights).transpose()?;
    Ok(CliConfig::new(graph, params, weights))
}

fn resource(store: &TripleStore, iri: &str) -> Result<TermId, CliError> {
    let bare = iri.trim_start_matches('<').trim_end_matches('>');
    store
        .resource(bare)
        .ok_or_else(|| CliError::UnknownIri(iri.to_string()))
}

fn parse_method(name: &str) -> Result<Method, CliError> {
    name.parse().map_err(|_| {
        let names: Vec<&str> = Method::all().iter().map(|m| m.name()).collect();
        CliError::Usage(format!(
            "unknown method `{name}`; expected one of: {}",
            names.join(", ")
        ))
    })
}

fn parse_methods(list: &str) -> Result<Vec<Method>, CliError> {
    if list.trim() == "all" {
        return Ok(Method::all().to_vec());
    }
    list.split(',').map(|m| parse_method(m.trim())).collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut stdout = io::stdout().lock();
    let format = cli.graph.format;
    match cli.command {
        Command::Stats => {
            let store = load_graph(&cli.graph)?;
            let summary = store.summary();
            match format {
                Format::Tsv => write!(stdout, "{}", summary.to_tsv())?,
                Format::Json => writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&summary).expect("summary serializes")
                )?,
            }
        }
        Command::Score {
            method,
            iri1,
            iri2,
            params,
        } => {
            let method = parse_method(&method)?;
            let cfg = config(&cli.graph, &params)?;
            let store = load_graph(&cli.graph)?;
            let (a, b) = (resource(&store, &iri1)?, resource(&store, &iri2)?);
            let score = Scorer::new(&store, cfg.params).score(method, a, b)?;
            match format {
                Format::Tsv => writeln!(stdout, "{method}\t{iri1}\t{iri2}\t{score:.6}")?,
                Format::Json => writeln!(
                    stdout,
                    "{}",
                    json!({"method": method, "iri1": iri1, "iri2": iri2, "score": score})
                )?,
            }
        }
        Command::Paths {
            iri1,
            iri2,
            directed,
            exactly,
            bound,
        } => {
            let store = load_graph(&cli.graph)?;
            let (a, b) = (resource(&store, &iri1)?, resource(&store, &iri2)?);
            let q = PathQuery {
                start: a,
                end: b,
                direction: if directed {
                    PathDirection::Directed
                } else {
                    PathDirection::Undirected
                },
                length_mode: if exactly {
                    LengthMode::Exactly
                } else {
                    LengthMode::AtMost
                },
                bound: bound as usize,
            };
            let paths = enumerate_paths(&store, &q)?;
            for path in &paths {
                let mut line = store.iri(path.start()).to_string();
                for step in path.steps() {
                    let p = store.iri(step.triple.p);
                    let next = store.iri(step.to_node());
                    if step.forward {
                        line.push_str(&format!(" -{p}-> {next}"));
                    } else {
                        line.push_str(&format!(" <-{p}- {next}"));
                    }
                }
                writeln!(stdout, "{line}")?;
            }
            writeln!(stdout, "{} paths", paths.len())?;
        }
        Command::Bench {
            datasets,
            mapping,
            methods,
            clean,
            out,
            params,
        } => {
            let methods = parse_methods(&methods)?;
            let cfg = config(&cli.graph, &params)?;
            let mapping = match &mapping {
                Some(path) => bench::load_mapping(path)?,
                None => TermMapping::default(),
            };
            let store = load_graph(&cli.graph)?;
            let mut reports = Vec::new();
            let mut unresolved = None;
            for path in &datasets {
                let dataset = bench::load_dataset(path)?;
                let batch =
                    bench::run_benchmark(&store, &methods, &dataset, &mapping, &cfg.params, clean);
                if batch.first().is_some_and(|r| r.fully_unresolved()) {
                    unresolved.get_or_insert(dataset.name.clone());
                }
                reports.extend(batch);
            }
            let text = match format {
                Format::Tsv => reports_to_tsv(&reports),
                Format::Json => reports_to_json(&reports) + "\n",
            };
            match out {
                Some(path) => fs::write(path, text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
            if let Some(name) = unresolved {
                return Err(CliError::Unresolved(name));
            }
        }
        Command::Config { params } => {
            let cfg = config(&cli.graph, &params)?;
            writeln!(
                stdout,
                "{}",
                serde_json::to_string_pretty(&cfg).expect("config serializes")
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kgrel: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
