//! Kernelization parameterized by a vertex cover.
//!
//! Vertices outside a cover U are grouped by their exact neighborhood (all
//! inside U). Keeping k+1 vertices of each group preserves whether k
//! hunters suffice, in both the general and the monotone game, and k ≥ |U|
//! hunters always suffice.

use crate::error::{Error, Result};
use crate::graph::{vertex_cover, CoverMode, Graph};
use crate::solver::{decide_h, decide_mh, SEARCH_LIMIT};
use crate::vertex_set::VertexSet;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Independent-side vertices grouped by neighborhood, keyed by that
/// neighborhood as a sorted vertex list.
pub fn neighborhood_classes(g: &Graph, cover: &VertexSet) -> Result<BTreeMap<Vec<usize>, Vec<usize>>> {
    if let Some((u, v)) = g.edges().find(|&(u, v)| !cover.contains(u) && !cover.contains(v)) {
        return Err(Error::NotCover(u, v));
    }
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in (0..g.n()).filter(|&v| !cover.contains(v)) {
        classes.entry(g.neighbors(v).to_vec()).or_default().push(v);
    }
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    /// k is at least the cover size, so k hunters win.
    TriviallyYes,
    /// The reduced graph and, for each of its vertices, the original id.
    Reduced { graph: Graph, kept: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub outcome: KernelOutcome,
    /// Size of the cover used.
    pub t: usize,
    pub k: usize,
    /// 4^t (t + 1) + 2t, saturating.
    pub size_bound: u128,
}

impl KernelResult {
    /// Header line, then either `trivially_yes` or the reduced graph and the
    /// `old new` id map.
    pub fn to_text(&self) -> String {
        let mut out = format!("kernel t={} k={} bound={}\n", self.t, self.k, self.size_bound);
        match &self.outcome {
            KernelOutcome::TriviallyYes => out.push_str("trivially_yes\n"),
            KernelOutcome::Reduced { graph, kept } => {
                out.push_str("reduced\n");
                out.push_str(&graph.to_text());
                writeln!(out, "map {}", kept.len()).unwrap();
                for (new, old) in kept.iter().enumerate() {
                    writeln!(out, "{old} {new}").unwrap();
                }
            }
        }
        out
    }
}

pub fn size_bound(t: usize) -> u128 {
    let t = t as u32;
    4u128
        .checked_pow(t)
        .and_then(|p| p.checked_mul(u128::from(t) + 1))
        .and_then(|p| p.checked_add(2 * u128::from(t)))
        .unwrap_or(u128::MAX)
}

/// Applies the two reduction rules for target `k` with cover `cover`.
pub fn kernelize(g: &Graph, k: usize, cover: &VertexSet) -> Result<KernelResult> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::BadParameters("k must be at least 1".into()));
    }
    let classes = neighborhood_classes(g, cover)?;
    let t = cover.len();
    let mut result = KernelResult {
        outcome: KernelOutcome::TriviallyYes,
        t,
        k,
        size_bound: size_bound(t),
    };
    if k >= t {
        return Ok(result);
    }
    let mut keep = g.vertices();
    for members in classes.values() {
        for &v in members.iter().skip(k + 1) {
            keep.remove(v);
        }
    }
    let (graph, kept) = g.induced_subgraph(&keep);
    if !graph.is_connected() {
        return Err(Error::Internal("kernelization disconnected the graph".into()));
    }
    if graph.n() as u128 > result.size_bound {
        return Err(Error::Internal("kernel exceeds its size bound".into()));
    }
    result.outcome = KernelOutcome::Reduced { graph, kept };
    Ok(result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameMode {
    /// Any strategy.
    Hunter,
    /// Monotone strategies only.
    Monotone,
}

/// Decides whether k hunters win (in the given mode) by kernelizing with a
/// matching-based cover and searching the kernel.
pub fn fpt_decide(g: &Graph, k: usize, mode: GameMode) -> Result<bool> {
    let cover = vertex_cover(g, CoverMode::Approx2)?;
    let kr = kernelize(g, k, &cover)?;
    match kr.outcome {
        KernelOutcome::TriviallyYes => Ok(true),
        KernelOutcome::Reduced { graph, .. } => {
            if graph.n() > SEARCH_LIMIT {
                return Err(Error::SizeLimitExceeded {
                    what: "kernel for exact search",
                    size: graph.n(),
                    limit: SEARCH_LIMIT,
                });
            }
            let w = graph.vertices();
            let found = match mode {
                GameMode::Hunter => decide_h(&graph, &w, k)?,
                GameMode::Monotone => decide_mh(&graph, &w, k)?,
            };
            Ok(found.is_some())
        }
    }
}
