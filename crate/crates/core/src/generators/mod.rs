//! Graph families with explicit strategies, and seeded random instances.

mod families;
mod random;

pub use families::{
    gen_cograph_gap, gen_spider, gen_split_matching, gen_t, gen_ternary, subdivide_for_two_hunters,
    T_VERTEX_LIMIT, T_WORK_LIMIT,
};
pub use random::{prufer_decode, prufer_trees, random_cotree, random_instance, RandomKind};

use crate::error::{Error, Result};
use crate::game::{is_winning, HunterStrategy};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use std::fmt::Write;

/// A generated graph with its construction parameters and, when the
/// construction provides one, a winning strategy.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub strategy: Option<HunterStrategy>,
    /// Where the rabbit may start; `None` means anywhere.
    pub start_set: Option<VertexSet>,
    pub meta: Vec<(String, String)>,
}

impl FamilyInstance {
    fn new(graph: Graph) -> Self {
        FamilyInstance {
            graph,
            strategy: None,
            start_set: None,
            meta: Vec::new(),
        }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    /// Attaches a strategy after replaying it; a losing strategy is a
    /// construction bug.
    fn with_strategy(mut self, strat: HunterStrategy, start: Option<VertexSet>) -> Result<Self> {
        let w = start.clone().unwrap_or_else(|| self.graph.vertices());
        if !is_winning(&self.graph, &w, &strat)? {
            return Err(Error::Internal("generated strategy does not win".into()));
        }
        self.strategy = Some(strat);
        self.start_set = start;
        Ok(self)
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Start set the strategy is meant for, as a vertex set.
    pub fn start_vertices(&self) -> VertexSet {
        self.start_set.clone().unwrap_or_else(|| self.graph.vertices())
    }

    pub fn meta_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            writeln!(out, "{k}={v}").unwrap();
        }
        out
    }
}

fn join_list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
