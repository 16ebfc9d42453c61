use crate::graph::{CoTree, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Families of seeded random connected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    Tree,
    Split,
    Cograph,
    Connected,
}

/// A connected graph of the given kind on `n ≥ 1` vertices; the same seed
/// always gives the same graph.
pub fn random_instance(kind: RandomKind, n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 1 {
        return Graph::new(n);
    }
    match kind {
        RandomKind::Tree => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
        RandomKind::Split => random_split(n, &mut rng),
        RandomKind::Cograph => random_cotree(n, &mut rng).evaluate(n),
        RandomKind::Connected => random_connected(n, &mut rng),
    }
}

/// Tree on `n` vertices with Prüfer sequence `seq` (length n−2).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert_eq!(seq.len() + 2, n.max(2), "sequence length must be n-2");
    let mut g = Graph::new(n);
    if n < 2 {
        return g;
    }
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        g.add_edge(leaf, v).expect("Prüfer edges are new");
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1]).expect("Prüfer edges are new");
    g
}

/// Every labeled tree on `n` vertices, in lexicographic Prüfer order.
pub fn prufer_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 1 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(n, &seq)
    })
}

/// Random cotree on leaves 0..n with a join at the root, so the cograph it
/// describes is connected. Leaves are shuffled and node types alternate.
pub fn random_cotree(n: usize, rng: &mut impl Rng) -> CoTree {
    let mut leaves: Vec<usize> = (0..n).collect();
    leaves.shuffle(rng);
    cotree_over(&leaves, true, rng)
}

fn cotree_over(leaves: &[usize], join: bool, rng: &mut impl Rng) -> CoTree {
    if leaves.len() == 1 {
        return CoTree::Leaf(leaves[0]);
    }
    let parts = rng.gen_range(2..=leaves.len());
    let mut cuts: Vec<usize> = (1..leaves.len()).collect();
    cuts.shuffle(rng);
    cuts.truncate(parts - 1);
    cuts.sort_unstable();
    let mut children = Vec::with_capacity(parts);
    let mut from = 0;
    for to in cuts.into_iter().chain([leaves.len()]) {
        children.push(cotree_over(&leaves[from..to], !join, rng));
        from = to;
    }
    if join {
        CoTree::Join(children)
    } else {
        CoTree::Union(children)
    }
}

/// Clique of size ≥ 2, every other vertex joined to a random nonempty proper
/// subset of it (so the clique stays maximal), then labels shuffled.
fn random_split(n: usize, rng: &mut impl Rng) -> Graph {
    let c = rng.gen_range(2..=n);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut g = Graph::new(n);
    for x in 0..c {
        for y in x + 1..c {
            g.add_edge(label[x], label[y]).unwrap();
        }
    }
    for v in c..n {
        let mut nbrs: Vec<usize> = (0..c).filter(|_| rng.gen_bool(0.5)).collect();
        if nbrs.is_empty() {
            nbrs.push(rng.gen_range(0..c));
        } else if nbrs.len() == c {
            let drop = rng.gen_range(0..c);
            nbrs.remove(drop);
        }
        for x in nbrs {
            g.add_edge(label[v], label[x]).unwrap();
        }
    }
    g
}

/// G(n, p) with p drawn from [0.2, 0.7], resampled until connected.
fn random_connected(n: usize, rng: &mut impl Rng) -> Graph {
    let p = rng.gen_range(0.2..0.7);
    loop {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}
