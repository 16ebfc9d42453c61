use clap::{Args, Parser, Subcommand, ValueEnum};
use hunters_core::StartSet;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "hunters", version, about = "Solver toolkit for the Hunters and Rabbit game")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact hunter number or monotone hunter number.
    Compute(ComputeArgs),
    /// Check a strategy: winning, parsimonious, monotone.
    Verify(VerifyArgs),
    /// Reduce an instance by vertex-cover twin classes.
    Kernelize(KernelizeArgs),
    /// Write a generated family instance to a directory.
    Generate(GenerateArgs),
    /// Run a class-specific solver against the exact solver.
    Compare(CompareArgs),
    /// Exact pathwidth.
    Pathwidth(GraphArg),
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Graph file: "n m" header, then one "u v" line per edge.
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    H,
    Mh,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::H => "h",
            Mode::Mh => "mh",
        }
    }
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// all, red, white, or a comma-separated vertex list.
    #[arg(long, default_value = "all", value_parser = parse_start)]
    pub start: StartSet,
    /// Write an optimal strategy to this file.
    #[arg(long)]
    pub strategy: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub strategy: PathBuf,
    #[arg(long, default_value = "all", value_parser = parse_start)]
    pub start: StartSet,
}

#[derive(Args, Debug)]
pub struct KernelizeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Also decide whether k hunters suffice in this mode.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Spider,
    #[value(name = "T")]
    T,
    Ternary,
    Splitmatch,
    Cographgap,
    /// Subdivision of the tree given by --graph that two hunters clear.
    Subdivision,
    RandomTree,
    RandomSplit,
    RandomCograph,
    RandomConnected,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Family parameters, e.g. i=2,q=6.
    #[arg(long, default_value = "", value_parser = parse_params)]
    pub params: Params,
    /// Required by the random families.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Input tree for the subdivision family.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Split,
    Interval,
    Cograph,
    Tree,
    Auto,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long, value_enum)]
    pub class: Class,
    #[arg(long)]
    pub graph: PathBuf,
}

fn parse_start(s: &str) -> Result<StartSet, String> {
    match s {
        "all" => Ok(StartSet::All),
        "red" => Ok(StartSet::Red),
        "white" => Ok(StartSet::White),
        list => list
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("not a vertex id: {t:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(StartSet::Vertices),
    }
}

/// `key=value` pairs with integer values, in the order given.
#[derive(Clone, Debug, Default)]
pub struct Params(pub Vec<(String, usize)>);

impl Params {
    pub fn get(&self, key: &str) -> Result<usize, String> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| format!("missing parameter {key}"))
    }
}

fn parse_params(s: &str) -> Result<Params, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
        let v = v
            .trim()
            .parse()
            .map_err(|_| format!("parameter {k} is not a non-negative integer"))?;
        out.push((k.trim().to_string(), v));
    }
    Ok(Params(out))
}
