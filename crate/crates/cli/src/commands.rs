use crate::args::{Class, Cli, Command, CompareArgs, ComputeArgs, Family, GenerateArgs, KernelizeArgs, Mode, VerifyArgs};
use anyhow::{anyhow, Context};
use hunters_core::classes::{cograph_mh, interval_mh, split_h, split_mh, tree_mh, RootedTree};
use hunters_core::game::{escape_witness, is_parsimonious, is_winning, monotonicity_violation};
use hunters_core::generators::{self, RandomKind};
use hunters_core::graph::{pathwidth_exact, recognize_cograph, recognize_interval, recognize_split};
use hunters_core::kernel::{fpt_decide, kernelize, GameMode};
use hunters_core::solver::{hunter_number, monotone_hunter_number};
use hunters_core::{FamilyInstance, Graph, HunterStrategy, SolveResult, VertexSet};
use std::fmt::Write;
use std::fs;
use std::path::Path;

pub enum Failure {
    /// Partial report and the domain error.
    Domain(String, anyhow::Error),
    Usage(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(String::new(), e)
    }
}

impl From<hunters_core::Error> for Failure {
    fn from(e: hunters_core::Error) -> Self {
        Failure::Domain(String::new(), e.into())
    }
}

type Outcome = Result<String, Failure>;

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Kernelize(a) => kernel(a),
        Command::Generate(a) => generate(a),
        Command::Compare(a) => compare(a),
        Command::Pathwidth(a) => {
            let g = read_graph(&a.graph)?;
            let (pw, _) = pathwidth_exact(&g)?;
            Ok(format!("pw={pw}\n"))
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn solve(g: &Graph, w: &VertexSet, mode: Mode) -> hunters_core::Result<SolveResult> {
    match mode {
        Mode::H => hunter_number(g, w),
        Mode::Mh => monotone_hunter_number(g, w),
    }
}

fn compute(a: ComputeArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    let w = a.start.resolve(&g)?;
    let res = solve(&g, &w, a.mode)?;
    if let Some(path) = &a.strategy {
        match &res.strategy {
            Some(s) => write_file(path, &s.to_text())?,
            None => eprintln!("note: no strategy needed on a single vertex; {} not written", path.display()),
        }
    }
    Ok(format!("{}={}\n", a.mode.name(), res.value))
}

fn verify(a: VerifyArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    let text = fs::read_to_string(&a.strategy)
        .with_context(|| format!("reading {}", a.strategy.display()))?;
    let strat = HunterStrategy::parse(&text, g.n())
        .with_context(|| format!("parsing {}", a.strategy.display()))?;
    let w = a.start.resolve(&g)?;
    let winning = is_winning(&g, &w, &strat)?;
    let parsimonious = is_parsimonious(&g, &w, &strat)?;
    let violation = monotonicity_violation(&g, &w, &strat)?;
    let mut out = format!(
        "winning={winning} parsimonious={parsimonious} monotone={}\n",
        violation.is_none()
    );
    if let Some(v) = violation {
        writeln!(
            out,
            "violation vertex={} cleared={} recontaminated={}",
            v.vertex, v.cleared, v.recontaminated
        )
        .unwrap();
    }
    if let Some(walk) = escape_witness(&g, &w, &strat)? {
        let walk: Vec<String> = walk.positions.iter().map(usize::to_string).collect();
        writeln!(out, "escape {}", walk.join(" ")).unwrap();
    }
    Ok(out)
}

fn kernel(a: KernelizeArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    let cover = hunters_core::graph::vertex_cover(&g, hunters_core::graph::CoverMode::Approx2)?;
    let kr = kernelize(&g, a.k, &cover)?;
    let mut out = kr.to_text();
    if let Some(mode) = a.mode {
        let gm = match mode {
            Mode::H => GameMode::Hunter,
            Mode::Mh => GameMode::Monotone,
        };
        let yes = fpt_decide(&g, a.k, gm)?;
        writeln!(out, "{}<={}: {yes}", mode.name(), a.k).unwrap();
    }
    Ok(out)
}

fn generate(a: GenerateArgs) -> Outcome {
    let p = |key: &str| a.params.get(key).map_err(Failure::Usage);
    let random = |kind: RandomKind| -> Result<FamilyInstance, Failure> {
        let seed = a
            .seed
            .ok_or_else(|| Failure::Usage("random families need an explicit --seed".into()))?;
        let n = p("n")?;
        if n == 0 {
            return Err(Failure::Usage("n must be at least 1".into()));
        }
        Ok(FamilyInstance {
            graph: generators::random_instance(kind, n, seed),
            strategy: None,
            start_set: None,
            meta: vec![("n".into(), n.to_string()), ("seed".into(), seed.to_string())],
        })
    };
    let inst = match a.family {
        Family::Spider => generators::gen_spider(p("k")?, p("q")?)?,
        Family::T => generators::gen_t(p("i")?, p("q")?)?,
        Family::Ternary => {
            let n = p("n")?;
            FamilyInstance {
                graph: generators::gen_ternary(n)?,
                strategy: None,
                start_set: None,
                meta: vec![("n".into(), n.to_string())],
            }
        }
        Family::Splitmatch => generators::gen_split_matching(p("a")?)?,
        Family::Cographgap => generators::gen_cograph_gap(p("a")?)?,
        Family::Subdivision => {
            let path = a
                .graph
                .as_ref()
                .ok_or_else(|| Failure::Usage("subdivision needs --graph <tree>".into()))?;
            generators::subdivide_for_two_hunters(&read_graph(path)?)?
        }
        Family::RandomTree => random(RandomKind::Tree)?,
        Family::RandomSplit => random(RandomKind::Split)?,
        Family::RandomCograph => random(RandomKind::Cograph)?,
        Family::RandomConnected => random(RandomKind::Connected)?,
    };
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let mut out = String::new();
    let mut emit = |name: &str, text: &str| -> anyhow::Result<()> {
        let path = a.out.join(name);
        write_file(&path, text)?;
        writeln!(out, "wrote {}", path.display()).unwrap();
        Ok(())
    };
    emit("graph.g", &inst.graph.to_text())?;
    emit("meta.txt", &inst.meta_text())?;
    if let Some(s) = &inst.strategy {
        emit("strategy.s", &s.to_text())?;
    }
    if let Some(w) = &inst.start_set {
        emit("start.txt", &format!("{w}\n"))?;
    }
    out.push_str(&inst.meta_text());
    Ok(out)
}

/// Class-solver value(s) and the name of the class used.
fn class_values(class: Class, g: &Graph) -> anyhow::Result<(Class, Option<usize>, usize)> {
    let pick = match class {
        Class::Auto => {
            if g.is_tree() {
                Class::Tree
            } else if recognize_split(g).is_some() {
                Class::Split
            } else if recognize_cograph(g).is_some() {
                Class::Cograph
            } else if recognize_interval(g)?.is_some() {
                Class::Interval
            } else {
                return Err(anyhow!("graph is in none of the supported classes"));
            }
        }
        c => c,
    };
    Ok(match pick {
        Class::Tree => {
            if !g.is_tree() {
                return Err(anyhow!("graph is not a tree"));
            }
            (pick, None, tree_mh(&RootedTree::new(g, 0)?))
        }
        Class::Split => {
            let sp = recognize_split(g).ok_or_else(|| anyhow!("graph is not a split graph"))?;
            (pick, Some(split_h(g, &sp)?.value), split_mh(g, &sp)?.value)
        }
        Class::Cograph => {
            let t = recognize_cograph(g).ok_or_else(|| anyhow!("graph is not a cograph"))?;
            (pick, None, cograph_mh(&t))
        }
        Class::Interval => (pick, None, interval_mh(g)?),
        Class::Auto => unreachable!("resolved above"),
    })
}

fn compare(a: CompareArgs) -> Outcome {
    let g = read_graph(&a.graph)?;
    g.require_connected()?;
    let (class, class_h, class_mh) = class_values(a.class, &g)?;
    let w = g.vertices();
    let exact_mh = monotone_hunter_number(&g, &w)?;
    let exact_h = match class_h {
        Some(_) => Some(hunter_number(&g, &w)?),
        None => None,
    };
    let mut out = String::new();
    if a.class == Class::Auto {
        writeln!(out, "class={}", format!("{class:?}").to_lowercase()).unwrap();
    }
    let h_ok = class_h == exact_h.as_ref().map(|r| r.value);
    if h_ok && class_mh == exact_mh.value {
        match class_h {
            Some(h) => writeln!(out, "MATCH h={h} mh={class_mh}").unwrap(),
            None => writeln!(out, "MATCH mh={class_mh}").unwrap(),
        }
        return Ok(out);
    }
    if let (Some(ch), Some(eh)) = (class_h, &exact_h) {
        write!(out, "MISMATCH class_h={ch} exact_h={} ", eh.value).unwrap();
    } else {
        out.push_str("MISMATCH ");
    }
    writeln!(out, "class_mh={class_mh} exact_mh={}", exact_mh.value).unwrap();
    if let Some(s) = &exact_mh.strategy {
        out.push_str(&s.to_text());
    }
    Err(Failure::Domain(out, anyhow!("class solver disagrees with the exact solver")))
}
