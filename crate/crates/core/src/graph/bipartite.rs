use super::Graph;
use crate::error::Result;
use crate::vertex_set::VertexSet;

/// Two-colouring of a connected bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub red: VertexSet,
    pub white: VertexSet,
}

impl Graph {
    /// Two-colouring with vertex 0 red, or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        self.require_connected()?;
        let dist = self.distances_from(0);
        if self.edges().any(|(u, v)| dist[u] % 2 == dist[v] % 2) {
            return Ok(None);
        }
        let n = self.n();
        Ok(Some(Bipartition {
            red: VertexSet::from_iter(n, (0..n).filter(|&v| dist[v].is_multiple_of(2))),
            white: VertexSet::from_iter(n, (0..n).filter(|&v| dist[v] % 2 == 1)),
        }))
    }
}
