use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest graph accepted by [`pathwidth_exact`].
pub const PATHWIDTH_LIMIT: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks vertex coverage, edge coverage and contiguity.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        let covered = (0..n).all(|v| self.bags.iter().any(|b| b.contains(v)));
        let edges = g
            .edges()
            .all(|(u, v)| self.bags.iter().any(|b| b.contains(u) && b.contains(v)));
        let contiguous = (0..n).all(|v| {
            let idx: Vec<usize> = (0..self.bags.len()).filter(|&i| self.bags[i].contains(v)).collect();
            idx.windows(2).all(|w| w[1] == w[0] + 1)
        });
        covered && edges && contiguous
    }
}

/// Vertices of `prefix` with a neighbor outside it.
fn boundary(adj: &[u64], prefix: u64) -> u32 {
    let mut rest = prefix;
    let mut count = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & !prefix != 0 {
            count += 1;
        }
    }
    count
}

/// Max boundary size over the prefixes of `order`.
pub fn vertex_separation_of(g: &Graph, order: &[usize]) -> usize {
    let adj = g.neighbor_masks().expect("at most 64 vertices");
    let mut prefix = 0u64;
    let mut worst = 0;
    for &v in order {
        prefix |= 1 << v;
        worst = worst.max(boundary(&adj, prefix));
    }
    worst as usize
}

/// Exact pathwidth as the vertex separation number, by dynamic programming
/// over vertex subsets, with a decomposition of that width.
pub fn pathwidth_exact(g: &Graph) -> Result<(usize, PathDecomposition)> {
    let n = g.n();
    if n > PATHWIDTH_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "exact pathwidth",
            size: n,
            limit: PATHWIDTH_LIMIT,
        });
    }
    if n == 0 {
        return Ok((0, PathDecomposition { bags: Vec::new() }));
    }
    let adj = g.neighbor_masks().unwrap();
    let full = (1usize << n) - 1;
    // best[s] = min over orderings of s of the max boundary of its prefixes
    let mut best = vec![u8::MAX; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let mut m = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            m = m.min(best[s & !(1 << v)]);
        }
        best[s] = m.max(boundary(&adj, s as u64) as u8);
    }
    let width = best[full] as usize;

    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = (0..n)
            .find(|&v| s >> v & 1 == 1 && best[s & !(1 << v)] as usize <= width)
            .unwrap();
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();

    let mut bags = Vec::with_capacity(n);
    let mut prefix = 0u64;
    for &v in &order {
        let mut bag = VertexSet::new(n);
        bag.insert(v);
        let mut rest = prefix;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[u] & !prefix != 0 {
                bag.insert(u);
            }
        }
        bags.push(bag);
        prefix |= 1 << v;
    }
    let pd = PathDecomposition { bags };
    debug_assert_eq!(pd.width(), width);
    Ok((width, pd))
}
