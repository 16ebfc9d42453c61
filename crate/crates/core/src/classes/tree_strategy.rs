use super::tree::{branch_labels, label_from_children, BranchLabels, RootedTree, TreeLabel};
use crate::error::{Error, Result};
use crate::game::{self, HunterStrategy};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A monotone winning strategy for a tree using exactly its monotone hunter
/// number of hunters (one hunter on a single vertex).
///
/// A spine path v_1..v_p is chosen so that every component of T minus the
/// path needs fewer hunters. Phase i keeps one hunter on v_i while the
/// components hanging from v_i are cleared recursively, then shoots
/// {v_i, v_{i+1}} to move on.
pub fn tree_monotone_strategy(t: &RootedTree) -> Result<HunterStrategy> {
    let g = t.graph();
    let mut rounds = synthesize(g)?;
    let s = HunterStrategy::from_lists(g.n(), &rounds)?;
    let trace = game::trace(g, &g.vertices(), &s)?;
    match trace.effective_length() {
        Some(end) => {
            rounds.truncate(end.max(1));
            HunterStrategy::from_lists(g.n(), &rounds)
        }
        None => Err(Error::Internal("synthesized tree strategy does not win".into())),
    }
}

fn synthesize(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n <= 2 {
        return Ok(vec![vec![0], vec![0]]);
    }
    let labels = branch_labels(g)?;
    let branches = |v: usize| -> Vec<(usize, usize)> {
        g.neighbors(v).iter().map(|&u| (u, labels.branch_mh(v, u))).collect()
    };
    let big = (0..n).filter(|&v| g.degree(v) >= 2).count();
    if big <= 1 {
        let center = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        return Ok(vec![vec![center], vec![center]]);
    }
    let m = mh_of(g, &labels);

    let critical: Vec<usize> = (0..n)
        .filter(|&v| branches(v).iter().filter(|b| b.1 >= m).count() == 2)
        .collect();
    let path = if critical.is_empty() {
        descend(0, None, m, &branches)
    } else {
        spine_through(g, &critical, m, &branches)?
    };

    let mut on_path = VertexSet::new(n);
    for &v in &path {
        on_path.insert(v);
    }
    let rest = g.vertices().difference(&on_path);
    let components = g.components_within(&rest);

    let mut rounds = vec![vec![path[0]]];
    for (i, &v) in path.iter().enumerate() {
        for comp in components.iter().filter(|c| c.len() >= 2 && c.iter().any(|&x| g.has_edge(x, v))) {
            let (sub, map) = g.induced_subgraph(&VertexSet::from_iter(n, comp.iter().copied()));
            for r in synthesize(&sub)? {
                let mut round: Vec<usize> = r.iter().map(|&x| map[x]).collect();
                round.push(v);
                rounds.push(round);
            }
        }
        if let Some(&next) = path.get(i + 1) {
            rounds.push(vec![v, next]);
        }
    }
    rounds.push(vec![*path.last().unwrap()]);
    Ok(rounds)
}

/// mh of the whole tree: the value of any vertex viewed as a root.
fn mh_of(g: &Graph, labels: &BranchLabels) -> usize {
    let children: Vec<TreeLabel> = g
        .neighbors(0)
        .iter()
        .map(|&c| labels.away_from(c, 0).clone())
        .collect();
    label_from_children(&children).value()
}

/// Greedy walk into the unique heavy branch not leading back.
fn descend(
    start: usize,
    from: Option<usize>,
    m: usize,
    branches: &dyn Fn(usize) -> Vec<(usize, usize)>,
) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = from;
    let mut cur = start;
    while let Some((next, _)) = branches(cur)
        .into_iter()
        .filter(|&(u, val)| Some(u) != prev && val >= m)
        .min_by_key(|&(u, _)| u)
    {
        path.push(next);
        prev = Some(cur);
        cur = next;
    }
    path
}

/// The path through the vertices having two heavy branches, extended by
/// one vertex into a heavy branch at each end.
fn spine_through(
    g: &Graph,
    critical: &[usize],
    m: usize,
    branches: &dyn Fn(usize) -> Vec<(usize, usize)>,
) -> Result<Vec<usize>> {
    let in_x = |v: usize| critical.binary_search(&v).is_ok();
    let x_degree = |v: usize| g.neighbors(v).iter().filter(|&&u| in_x(u)).count();
    let start = *critical
        .iter()
        .find(|&&v| x_degree(v) <= 1)
        .ok_or_else(|| Error::Internal("critical vertices do not form a path".into()))?;
    let mut middle = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&u| in_x(u) && Some(u) != prev) {
        middle.push(next);
        prev = Some(cur);
        cur = next;
    }
    if middle.len() != critical.len() || critical.iter().any(|&v| x_degree(v) > 2) {
        return Err(Error::Internal("critical vertices do not form a path".into()));
    }
    let heavy_outside = |v: usize, avoid: Option<usize>| -> Option<usize> {
        branches(v)
            .into_iter()
            .filter(|&(u, val)| val >= m && Some(u) != avoid)
            .map(|(u, _)| u)
            .min()
    };
    let first = middle[0];
    let last = *middle.last().unwrap();
    let after_first = middle.get(1).copied();
    let before_last = if middle.len() >= 2 {
        Some(middle[middle.len() - 2])
    } else {
        None
    };
    let head = heavy_outside(first, after_first)
        .ok_or_else(|| Error::Internal("missing heavy branch at spine end".into()))?;
    let tail = branches(last)
        .into_iter()
        .filter(|&(u, val)| val >= m && Some(u) != before_last && u != head)
        .map(|(u, _)| u)
        .min()
        .ok_or_else(|| Error::Internal("missing heavy branch at spine end".into()))?;
    let mut path = vec![head];
    path.extend(middle);
    path.push(tail);
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::tree::{tree_mh, RootedTree};
    use crate::graph::named;

    fn check(g: &Graph) {
        let t = RootedTree::new(g, 0).unwrap();
        let s = tree_monotone_strategy(&t).unwrap();
        let w = g.vertices();
        assert!(game::is_winning(g, &w, &s).unwrap(), "{}", g.to_text());
        assert!(game::is_monotone(g, &w, &s).unwrap(), "{}\n{}", g.to_text(), s.to_text());
        assert_eq!(s.hunters_used(), tree_mh(&t).max(1), "{}", g.to_text());
    }

    #[test]
    fn star_is_two_shots_on_the_center() {
        let g = named::star(4);
        let s = tree_monotone_strategy(&RootedTree::new(&g, 3).unwrap()).unwrap();
        assert_eq!(s, HunterStrategy::from_lists(5, &[vec![0], vec![0]]).unwrap());
    }

    #[test]
    fn paths() {
        for n in 1..10 {
            check(&named::path(n));
        }
    }

    #[test]
    fn three_two_one_tree() {
        let (g, _) = crate::classes::tree::tests::three_two_one_tree();
        check(&g);
        let t = RootedTree::new(&g, 0).unwrap();
        assert_eq!(tree_monotone_strategy(&t).unwrap().hunters_used(), 3);
    }

    #[test]
    fn random_trees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..60);
            let mut g = Graph::new(n);
            for v in 1..n {
                g.add_edge(rng.gen_range(0..v), v).unwrap();
            }
            check(&g);
        }
    }
}
