use super::{maximal_cliques, Graph};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Partition of a split graph into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    /// Checks that the parts partition V, that `clique` is an
    /// inclusion-maximal clique and that `independent` is independent.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidPartition(m.to_string()));
        if self.clique.capacity() != g.n() || self.independent.capacity() != g.n() {
            return bad("capacity differs from vertex count");
        }
        if !self.clique.is_disjoint(&self.independent)
            || self.clique.len() + self.independent.len() != g.n()
        {
            return bad("parts do not partition the vertex set");
        }
        if self.clique.is_empty() {
            return bad("empty clique");
        }
        if !g.is_clique(&self.clique) {
            return bad("clique part is not a clique");
        }
        if !g.is_independent(&self.independent) {
            return bad("independent part has an edge");
        }
        if let Some(v) = self.independent.iter().find(|&v| self.absorbs(g, v)) {
            return Err(Error::InvalidPartition(format!(
                "clique is not inclusion-maximal: vertex {v} sees all of it"
            )));
        }
        Ok(())
    }

    fn absorbs(&self, g: &Graph, v: usize) -> bool {
        self.clique.iter().all(|c| g.has_edge(v, c))
    }

    /// Neighbors of `x` inside the independent part.
    pub fn independent_neighbors(&self, g: &Graph, x: usize) -> VertexSet {
        g.neighbor_set(x).intersection(&self.independent)
    }
}

/// A split partition with an inclusion-maximal clique, if `g` is split.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let cliques = maximal_cliques(g);
    let best = cliques.iter().map(Vec::len).max()?;
    for c in cliques.iter().filter(|c| c.len() == best) {
        let clique = VertexSet::from_iter(n, c.iter().copied());
        let independent = g.vertices().difference(&clique);
        if !g.is_independent(&independent) {
            continue;
        }
        let mut sp = SplitPartition {
            clique,
            independent,
        };
        while let Some(v) = sp.independent.iter().find(|&v| sp.absorbs(g, v)) {
            sp.independent.remove(v);
            sp.clique.insert(v);
        }
        return Some(sp);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn triangle_with_pendant() {
        let mut g = named::complete(3);
        let p = g.add_vertex();
        g.add_edge(0, p).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(sp.clique.to_vec(), vec![0, 1, 2]);
        assert_eq!(sp.independent.to_vec(), vec![3]);
        sp.validate(&g).unwrap();
    }

    #[test]
    fn c5_is_not_split() {
        assert!(recognize_split(&named::cycle(5)).is_none());
        assert!(recognize_split(&named::cycle(4)).is_none());
    }

    #[test]
    fn clique_with_matching() {
        let mut g = named::complete(4);
        for i in 0..4 {
            let v = g.add_vertex();
            g.add_edge(i, v).unwrap();
        }
        let sp = recognize_split(&g).unwrap();
        assert_eq!(sp.clique.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(sp.independent.to_vec(), vec![4, 5, 6, 7]);
    }

    #[test]
    fn validate_rejects_non_maximal_clique() {
        let g = named::complete(3);
        let sp = SplitPartition {
            clique: VertexSet::from_iter(3, [0, 1]),
            independent: VertexSet::from_iter(3, [2]),
        };
        assert!(matches!(sp.validate(&g), Err(Error::InvalidPartition(_))));
        let star = named::star(3);
        let sp = recognize_split(&star).unwrap();
        assert_eq!(sp.clique.len(), 2);
        sp.validate(&star).unwrap();
    }
}
