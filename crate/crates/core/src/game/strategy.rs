use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use std::fmt::Write;

/// Shots S_1..S_ℓ, one non-empty vertex set per round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HunterStrategy {
    n: usize,
    rounds: Vec<VertexSet>,
}

impl HunterStrategy {
    /// Validates that every round is non-empty, ids are below `n` and there
    /// is at least one round.
    pub fn new(n: usize, rounds: Vec<VertexSet>) -> Result<Self> {
        if rounds.is_empty() {
            return Err(Error::BadParameters("strategy has no rounds".into()));
        }
        for (i, s) in rounds.iter().enumerate() {
            if s.capacity() != n {
                if let Some(v) = s.iter().find(|&v| v >= n) {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if s.is_empty() {
                return Err(Error::EmptyShot(i + 1));
            }
        }
        let rounds = rounds
            .into_iter()
            .map(|s| {
                if s.capacity() == n {
                    s
                } else {
                    VertexSet::from_iter(n, s.iter())
                }
            })
            .collect();
        Ok(HunterStrategy { n, rounds })
    }

    /// Builds a strategy from plain id lists.
    pub fn from_lists<R: AsRef<[usize]>>(n: usize, rounds: &[R]) -> Result<Self> {
        let mut sets = Vec::with_capacity(rounds.len());
        for r in rounds {
            if let Some(&v) = r.as_ref().iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            sets.push(VertexSet::from_iter(n, r.as_ref().iter().copied()));
        }
        Self::new(n, sets)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// ℓ.
    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    /// Shots in order; `rounds()[i]` is S_{i+1}.
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }

    /// max |S_i|.
    pub fn hunters_used(&self) -> usize {
        self.rounds.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn into_rounds(self) -> Vec<VertexSet> {
        self.rounds
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("strategy {}\n", self.len());
        for s in &self.rounds {
            writeln!(out, "{s}").unwrap();
        }
        out
    }

    /// Parses the `strategy ℓ` format for a graph on `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (_, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
        let len: usize = header
            .strip_prefix("strategy ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| err(1, format!("expected \"strategy <rounds>\", got {header:?}")))?;
        let mut rounds = Vec::with_capacity(len);
        for (lineno, line) in lines {
            if line.is_empty() {
                if rounds.len() == len {
                    continue;
                }
                return Err(err(lineno, "empty shot".into()));
            }
            if rounds.len() == len {
                return Err(err(lineno, format!("more than {len} rounds")));
            }
            let mut s = VertexSet::new(n);
            for tok in line.split_ascii_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| err(lineno, format!("not an integer: {tok:?}")))?;
                if v >= n {
                    return Err(err(lineno, format!("vertex {v} out of range for {n} vertices")));
                }
                s.insert(v);
            }
            rounds.push(s);
        }
        if rounds.len() != len {
            return Err(err(len + 1, format!("expected {len} rounds, found {}", rounds.len())));
        }
        Self::new(n, rounds)
    }
}

/// Z_0..Z_ℓ for a strategy from start set W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContaminationTrace {
    pub start: VertexSet,
    pub zsets: Vec<VertexSet>,
}

impl ContaminationTrace {
    /// First round after which nothing is contaminated.
    pub fn effective_length(&self) -> Option<usize> {
        self.zsets.iter().position(VertexSet::is_empty)
    }

    pub fn last(&self) -> &VertexSet {
        self.zsets.last().expect("trace holds Z_0")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("trace {}\n", self.zsets.len());
        for z in &self.zsets {
            writeln!(out, "{z}").unwrap();
        }
        out
    }
}

/// A walk r_0..r_m of the rabbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RabbitTrajectory {
    pub positions: Vec<usize>,
}
