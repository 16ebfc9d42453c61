use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest graph accepted by the exact vertex cover search.
pub const EXACT_COVER_LIMIT: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverMode {
    Exact,
    /// Both endpoints of a greedy maximal matching.
    Approx2,
}

pub fn vertex_cover(g: &Graph, mode: CoverMode) -> Result<VertexSet> {
    match mode {
        CoverMode::Approx2 => Ok(matching_cover(g)),
        CoverMode::Exact => {
            if g.n() > EXACT_COVER_LIMIT {
                return Err(Error::SizeLimitExceeded {
                    what: "exact vertex cover",
                    size: g.n(),
                    limit: EXACT_COVER_LIMIT,
                });
            }
            let adj = g.neighbor_masks().unwrap();
            let mut best = g.vertices().to_mask().unwrap();
            if g.m() == 0 {
                best = 0;
            }
            branch(&adj, 0, 0, &mut best);
            Ok(VertexSet::from_mask(g.n(), best))
        }
    }
}

fn matching_cover(g: &Graph) -> VertexSet {
    let mut cover = VertexSet::new(g.n());
    for (u, v) in g.edges() {
        if !cover.contains(u) && !cover.contains(v) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    cover
}

/// `taken` is the partial cover, `removed` the vertices whose edges are all
/// covered already.
fn branch(adj: &[u64], taken: u64, removed: u64, best: &mut u64) {
    if taken.count_ones() >= best.count_ones() {
        return;
    }
    let live = |v: usize| adj[v] & !removed;
    let pick = (0..adj.len())
        .filter(|&v| removed >> v & 1 == 0)
        .max_by_key(|&v| live(v).count_ones());
    let v = match pick {
        Some(v) if live(v) != 0 => v,
        _ => {
            *best = taken;
            return;
        }
    };
    if live(v).count_ones() == 1 {
        // a vertex of live degree one: taking its neighbor is never worse
        let u = live(v).trailing_zeros() as usize;
        branch(adj, taken | 1 << u, removed | 1 << u, best);
        return;
    }
    branch(adj, taken | 1 << v, removed | 1 << v, best);
    let nb = live(v);
    branch(adj, taken | nb, removed | nb | 1 << v, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    fn covers(g: &Graph, c: &VertexSet) -> bool {
        g.edges().all(|(u, v)| c.contains(u) || c.contains(v))
    }

    fn brute_force(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|m| covers(g, &VertexSet::from_mask(n, *m as u64)))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn examples() {
        let s = vertex_cover(&named::star(5), CoverMode::Exact).unwrap();
        assert_eq!(s.to_vec(), vec![0]);
        assert_eq!(vertex_cover(&named::path(4), CoverMode::Exact).unwrap().len(), 2);
        let c5 = named::cycle(5);
        assert_eq!(vertex_cover(&c5, CoverMode::Exact).unwrap().len(), brute_force(&c5));
        assert_eq!(brute_force(&c5), 3);
        assert!(vertex_cover(&c5, CoverMode::Approx2).unwrap().len() <= 4);
        assert!(vertex_cover(&named::path(26), CoverMode::Exact).is_err());
        assert!(vertex_cover(&Graph::new(3), CoverMode::Exact).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn exact_is_minimum_and_approx_within_two(edges in proptest::collection::vec((0usize..9, 0usize..9), 0..24)) {
            let mut g = Graph::new(9);
            for (u, v) in edges {
                if u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
            let exact = vertex_cover(&g, CoverMode::Exact).unwrap();
            let approx = vertex_cover(&g, CoverMode::Approx2).unwrap();
            prop_assert!(covers(&g, &exact) && covers(&g, &approx));
            prop_assert_eq!(exact.len(), brute_force(&g));
            prop_assert!(exact.len() <= approx.len() && approx.len() <= 2 * exact.len());
        }
    }
}
