//! Exact hunter numbers by state-space search (graphs up to 64 vertices).

mod search;

use crate::error::{Error, Result};
use crate::game::{self, HunterStrategy};
use crate::graph::{pathwidth_exact, vertex_cover, CoverMode, Graph, EXACT_COVER_LIMIT, PATHWIDTH_LIMIT};
use crate::vertex_set::VertexSet;
use search::Space;

/// Largest graph the search accepts.
pub const SEARCH_LIMIT: usize = 64;

/// Where the rabbit may start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StartSet {
    All,
    /// Colour class of vertex 0 in a bipartite graph.
    Red,
    White,
    Vertices(Vec<usize>),
}

impl StartSet {
    pub fn resolve(&self, g: &Graph) -> Result<VertexSet> {
        let n = g.n();
        match self {
            StartSet::All => Ok(g.vertices()),
            StartSet::Red | StartSet::White => {
                let bip = g
                    .bipartition()?
                    .ok_or_else(|| Error::BadParameters("graph is not bipartite".into()))?;
                Ok(if *self == StartSet::Red { bip.red } else { bip.white })
            }
            StartSet::Vertices(vs) => {
                if let Some(&v) = vs.iter().find(|&&v| v >= n) {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                Ok(VertexSet::from_iter(n, vs.iter().copied()))
            }
        }
    }
}

/// Optimal value with a strategy attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    /// Absent only for the single-vertex graph, whose value is 0 by convention.
    pub strategy: Option<HunterStrategy>,
    /// Whether the strategy was replayed and accepted by the game checkers.
    pub certificate_checked: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Any,
    Monotone,
}

fn prepare(g: &Graph, w: &VertexSet) -> Result<(Space, u64)> {
    g.require_connected()?;
    if g.n() > SEARCH_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "exact search",
            size: g.n(),
            limit: SEARCH_LIMIT,
        });
    }
    if w.capacity() != g.n() || w.is_empty() {
        return Err(Error::BadParameters("start set must be a non-empty subset of V".into()));
    }
    Ok((Space::new(g.neighbor_masks().unwrap()), w.to_mask().unwrap()))
}

fn decide(g: &Graph, w: &VertexSet, k: usize, mode: Mode) -> Result<Option<HunterStrategy>> {
    if k == 0 {
        return Err(Error::BadParameters("k must be at least 1".into()));
    }
    let (space, start) = prepare(g, w)?;
    let full = start == g.vertices().to_mask().unwrap();
    let Some(shots) = search::search(&space, start, k, mode == Mode::Monotone, full) else {
        return Ok(None);
    };
    if g.n() < 64 && shots.len() as u128 > 1u128 << g.n() {
        return Err(Error::Internal("strategy longer than the number of states".into()));
    }
    let rounds = shots.into_iter().map(|s| VertexSet::from_mask(g.n(), s)).collect();
    Ok(Some(HunterStrategy::new(g.n(), rounds)?))
}

/// Whether `k` hunters win from `w`; on success the returned strategy is
/// parsimonious and wins.
pub fn decide_h(g: &Graph, w: &VertexSet, k: usize) -> Result<Option<HunterStrategy>> {
    decide(g, w, k, Mode::Any)
}

/// Whether `k` hunters win monotonically from `w`; on success the returned
/// strategy is parsimonious, monotone and winning.
pub fn decide_mh(g: &Graph, w: &VertexSet, k: usize) -> Result<Option<HunterStrategy>> {
    decide(g, w, k, Mode::Monotone)
}

fn certify(g: &Graph, w: &VertexSet, s: &HunterStrategy, k: usize, mode: Mode) -> Result<bool> {
    let ok = s.hunters_used() <= k
        && game::is_winning(g, w, s)?
        && (mode == Mode::Any || game::is_monotone(g, w, s)?);
    if !ok {
        return Err(Error::Internal(format!("search produced an invalid {k}-hunter strategy")));
    }
    Ok(true)
}

fn cover_bound(g: &Graph) -> Result<usize> {
    let mode = if g.n() <= EXACT_COVER_LIMIT {
        CoverMode::Exact
    } else {
        CoverMode::Approx2
    };
    Ok(vertex_cover(g, mode)?.len())
}

fn optimize(g: &Graph, w: &VertexSet, mode: Mode) -> Result<SolveResult> {
    prepare(g, w)?;
    if g.n() == 1 {
        return Ok(SolveResult {
            value: 0,
            strategy: None,
            certificate_checked: true,
        });
    }
    let full = *w == g.vertices();
    let lower = match (mode, full) {
        (Mode::Any, true) => g.min_degree(),
        (Mode::Monotone, true) if g.n() <= PATHWIDTH_LIMIT => pathwidth_exact(g)?.0,
        _ => 1,
    }
    .max(1);
    let upper = cover_bound(g)?.max(lower);
    for k in lower..=upper {
        if let Some(s) = decide(g, w, k, mode)? {
            let certificate_checked = certify(g, w, &s, k, mode)?;
            return Ok(SolveResult {
                value: k,
                strategy: Some(s),
                certificate_checked,
            });
        }
    }
    Err(Error::Internal(format!("no strategy found up to the vertex cover bound {upper}")))
}

/// h_W(G).
pub fn hunter_number(g: &Graph, w: &VertexSet) -> Result<SolveResult> {
    optimize(g, w, Mode::Any)
}

/// mh_W(G).
pub fn monotone_hunter_number(g: &Graph, w: &VertexSet) -> Result<SolveResult> {
    optimize(g, w, Mode::Monotone)
}

#[cfg(test)]
mod tests;
