//! The contamination recurrence, strategy checkers and strategy transforms.
//!
//! A strategy is judged by the sets Z_0 = W and
//! Z_i = N(Z_{i-1} \ S_i): every vertex the rabbit may occupy after round i.

mod strategy;

pub use strategy::{ContaminationTrace, HunterStrategy, RabbitTrajectory};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

/// N(z \ s).
pub fn advance(g: &Graph, z: &VertexSet, s: &VertexSet) -> Result<VertexSet> {
    if s.is_empty() {
        return Err(Error::EmptyShot(0));
    }
    Ok(advance_unchecked(g, z, s))
}

fn advance_unchecked(g: &Graph, z: &VertexSet, s: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in z {
        if !s.contains(v) {
            for &w in g.neighbors(v) {
                out.insert(w);
            }
        }
    }
    out
}

fn check_inputs(g: &Graph, w: &VertexSet, strat: &HunterStrategy) -> Result<()> {
    g.require_connected()?;
    if strat.n() != g.n() || w.capacity() != g.n() {
        return Err(Error::BadParameters(format!(
            "strategy or start set sized for {} vertices, graph has {}",
            strat.n(),
            g.n()
        )));
    }
    if w.is_empty() {
        return Err(Error::BadParameters("empty start set".into()));
    }
    Ok(())
}

pub fn trace(g: &Graph, w: &VertexSet, strat: &HunterStrategy) -> Result<ContaminationTrace> {
    check_inputs(g, w, strat)?;
    let mut zsets = Vec::with_capacity(strat.len() + 1);
    zsets.push(w.clone());
    for s in strat.rounds() {
        let next = advance_unchecked(g, zsets.last().unwrap(), s);
        zsets.push(next);
    }
    Ok(ContaminationTrace {
        start: w.clone(),
        zsets,
    })
}

pub fn is_winning(g: &Graph, w: &VertexSet, strat: &HunterStrategy) -> Result<bool> {
    Ok(trace(g, w, strat)?.last().is_empty())
}

/// A rabbit walk that survives every shot, rebuilt backwards from Z_ℓ;
/// `None` when the strategy wins.
pub fn escape_witness(
    g: &Graph,
    w: &VertexSet,
    strat: &HunterStrategy,
) -> Result<Option<RabbitTrajectory>> {
    let t = trace(g, w, strat)?;
    let Some(mut r) = t.last().first() else {
        return Ok(None);
    };
    let mut positions = vec![r];
    for i in (0..strat.len()).rev() {
        let shots = &strat.rounds()[i];
        r = g
            .neighbors(r)
            .iter()
            .copied()
            .find(|&x| t.zsets[i].contains(x) && !shots.contains(x))
            .ok_or_else(|| Error::Internal("contamination trace is inconsistent".into()))?;
        positions.push(r);
    }
    positions.reverse();
    Ok(Some(RabbitTrajectory { positions }))
}

pub fn is_parsimonious(g: &Graph, w: &VertexSet, strat: &HunterStrategy) -> Result<bool> {
    let t = trace(g, w, strat)?;
    Ok(strat
        .rounds()
        .iter()
        .zip(&t.zsets)
        .all(|(s, z)| s.is_subset(z)))
}

/// Parsimonious winning strategy derived from a winning one: cut after the
/// first empty Z, replace shots missing Z_{i-1} by a contaminated vertex,
/// then intersect every shot with Z_{i-1}.
pub fn make_parsimonious(
    g: &Graph,
    w: &VertexSet,
    strat: &HunterStrategy,
) -> Result<HunterStrategy> {
    if !is_winning(g, w, strat)? {
        return Err(Error::NotWinning);
    }
    let mut rounds = strat.rounds().to_vec();
    let mut from = 0;
    loop {
        let cur = HunterStrategy::new(g.n(), rounds.clone())?;
        let t = trace(g, w, &cur)?;
        let end = t.effective_length().ok_or(Error::NotWinning)?;
        rounds.truncate(end);
        match (from..end).find(|&i| rounds[i].is_disjoint(&t.zsets[i])) {
            Some(i) => {
                let v = t.zsets[i].first().expect("Z_i is non-empty before the end");
                rounds[i] = VertexSet::from_iter(g.n(), [v]);
                from = i + 1;
            }
            None => {
                for (s, z) in rounds.iter_mut().zip(&t.zsets) {
                    s.intersect_with(z);
                }
                return HunterStrategy::new(g.n(), rounds);
            }
        }
    }
}

/// Vertices cleared at round `i` (1-based) given Z_{i-1} and S_i.
fn cleared_set(g: &Graph, z_prev: &VertexSet, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    for v in 0..g.n() {
        if out.contains(v) {
            continue;
        }
        let mut touches = false;
        let mut inside = true;
        for &x in g.neighbors(v) {
            if z_prev.contains(x) {
                touches = true;
                inside &= s.contains(x);
            }
        }
        if touches && inside {
            out.insert(v);
        }
    }
    out
}

/// Whether `v` is cleared at round `i` (1-based).
pub fn cleared_at(
    g: &Graph,
    w: &VertexSet,
    strat: &HunterStrategy,
    v: usize,
    i: usize,
) -> Result<bool> {
    if i == 0 || i > strat.len() {
        return Err(Error::BadParameters(format!("round {i} outside 1..={}", strat.len())));
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let t = trace(g, w, strat)?;
    Ok(cleared_set(g, &t.zsets[i - 1], &strat.rounds()[i - 1]).contains(v))
}

/// A recontamination: `vertex` cleared at round `cleared`, then in Z_j for
/// j = `recontaminated` but not shot at round j+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub cleared: usize,
    pub recontaminated: usize,
}

/// First violation of monotonicity, ordered by round then vertex.
pub fn monotonicity_violation(
    g: &Graph,
    w: &VertexSet,
    strat: &HunterStrategy,
) -> Result<Option<Violation>> {
    let t = trace(g, w, strat)?;
    let n = g.n();
    let mut first_cleared = vec![0usize; n];
    let rounds = strat.rounds();
    for j in 1..strat.len() {
        for v in &cleared_set(g, &t.zsets[j - 1], &rounds[j - 1]) {
            if first_cleared[v] == 0 {
                first_cleared[v] = j;
            }
        }
        if let Some(v) = t.zsets[j]
            .iter()
            .find(|&v| first_cleared[v] != 0 && !rounds[j].contains(v))
        {
            return Ok(Some(Violation {
                vertex: v,
                cleared: first_cleared[v],
                recontaminated: j,
            }));
        }
    }
    Ok(None)
}

pub fn is_monotone(g: &Graph, w: &VertexSet, strat: &HunterStrategy) -> Result<bool> {
    Ok(monotonicity_violation(g, w, strat)?.is_none())
}

/// Restriction to the subgraph induced by `h`, expressed in the ids of
/// `g.induced_subgraph(h)`. Rounds missing `h` shoot the first vertex of `h`
/// that the strategy ever shoots.
pub fn restrict_strategy(
    strat: &HunterStrategy,
    g: &Graph,
    h: &VertexSet,
) -> Result<HunterStrategy> {
    if h.is_empty() || h.capacity() != g.n() || strat.n() != g.n() {
        return Err(Error::InvalidSubgraph);
    }
    let (sub, map) = g.induced_subgraph(h);
    if !sub.is_connected() {
        return Err(Error::InvalidSubgraph);
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        local[v] = i;
    }
    let fallback = strat
        .rounds()
        .iter()
        .find_map(|s| s.intersection(h).first())
        .unwrap_or_else(|| h.first().unwrap());
    let rounds = strat
        .rounds()
        .iter()
        .map(|s| {
            let inside = s.intersection(h);
            if inside.is_empty() {
                VertexSet::from_iter(sub.n(), [local[fallback]])
            } else {
                VertexSet::from_iter(sub.n(), inside.iter().map(|v| local[v]))
            }
        })
        .collect();
    HunterStrategy::new(sub.n(), rounds)
}

/// Turns a strategy winning from the red class into one winning from all of
/// V: the strategy is played twice, with one extra round in between when ℓ
/// is even so that the second copy starts against the white class.
pub fn extend_red_to_full(
    g: &Graph,
    bip: &Bipartition,
    strat: &HunterStrategy,
) -> Result<HunterStrategy> {
    if !is_winning(g, &bip.red, strat)? {
        return Err(Error::NotWinning);
    }
    let mut rounds = strat.rounds().to_vec();
    if strat.len().is_multiple_of(2) {
        rounds.push(VertexSet::from_iter(g.n(), [0]));
    }
    rounds.extend(strat.rounds().iter().cloned());
    HunterStrategy::new(g.n(), rounds)
}
