use super::{join_list, FamilyInstance};
use crate::error::{Error, Result};
use crate::game::{restrict_strategy, HunterStrategy};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest T_{i,q} that will be built.
pub const T_VERTEX_LIMIT: usize = 100_000;
/// Cap on vertices × rounds, the cost of replaying a T_{i,q} strategy.
pub const T_WORK_LIMIT: u128 = 200_000_000;

fn even_ceil(x: usize) -> usize {
    x + x % 2
}

/// Root of a built tree and, per branch, the path leaving it (its last vertex
/// is the root of the branch's subtree).
#[derive(Clone, Debug)]
struct Layout {
    root: usize,
    branches: Vec<(Vec<usize>, Layout)>,
}

impl Layout {
    fn shifted(&self, by: usize) -> Layout {
        Layout {
            root: self.root + by,
            branches: self
                .branches
                .iter()
                .map(|(p, l)| (p.iter().map(|v| v + by).collect(), l.shifted(by)))
                .collect(),
        }
    }
}

/// A built tree with a two-hunter red strategy rooted at vertex 0, padded to
/// the even length `ell`.
struct Built {
    graph: Graph,
    rounds: Vec<Vec<usize>>,
    layout: Layout,
    ell: usize,
    lengths: Vec<usize>,
    phase_ends: Vec<usize>,
}

/// Appends a path of `len` edges hanging from `from`; returns its vertices.
fn hang_path(g: &mut Graph, from: usize, len: usize) -> Vec<usize> {
    let mut prev = from;
    (0..len)
        .map(|_| {
            let v = g.add_vertex();
            g.add_edge(prev, v).expect("fresh vertex");
            prev = v;
            v
        })
        .collect()
}

/// Shoots `path` one vertex per round, adding `c` on odd rounds.
fn sweep(rounds: &mut Vec<Vec<usize>>, c: usize, path: &[usize]) {
    for &v in path {
        if rounds.len().is_multiple_of(2) {
            rounds.push(vec![c, v]);
        } else {
            rounds.push(vec![v]);
        }
    }
}

fn spider_built(k: usize, q: usize) -> Built {
    let mut graph = Graph::new(1);
    let branches: Vec<(Vec<usize>, Layout)> = (0..q)
        .map(|_| {
            let path = hang_path(&mut graph, 0, k);
            let end = *path.last().unwrap();
            (path, Layout { root: end, branches: Vec::new() })
        })
        .collect();
    let mut rounds = vec![vec![0]];
    for (path, _) in &branches {
        if rounds.len() % 2 == 0 {
            rounds.push(vec![0]);
        }
        sweep(&mut rounds, 0, path);
    }
    let len = rounds.len();
    debug_assert_eq!(len, if k.is_multiple_of(2) { 1 + q * k } else { q * (k + 1) });
    let ell = even_ceil(len);
    while rounds.len() < ell {
        rounds.push(vec![0]);
    }
    Built {
        graph,
        rounds,
        layout: Layout { root: 0, branches },
        ell,
        lengths: vec![k; q],
        phase_ends: Vec::new(),
    }
}

fn spider_params(k: usize, q: usize) -> Result<()> {
    if k == 0 || q == 0 {
        return Err(Error::BadParameters("spider needs k >= 1 and q >= 1".into()));
    }
    Ok(())
}

/// S_{k,q}: q paths of k edges glued at the center 0. For k ≥ 3 and q ≥ 6
/// the instance carries the two-hunter strategy against a rabbit starting in
/// the center's color class.
pub fn gen_spider(k: usize, q: usize) -> Result<FamilyInstance> {
    spider_params(k, q)?;
    let built = spider_built(k, q);
    let inst = FamilyInstance::new(built.graph.clone()).with("k", k).with("q", q);
    if k < 3 || q < 6 {
        return Ok(inst);
    }
    let len = if k.is_multiple_of(2) { 1 + q * k } else { q * (k + 1) };
    let inst = inst.with("length", len).with("ell", built.ell);
    finish(inst, built)
}

fn finish(inst: FamilyInstance, built: Built) -> Result<FamilyInstance> {
    let n = built.graph.n();
    let red = built
        .graph
        .bipartition()?
        .ok_or_else(|| Error::Internal("tree is not bipartite".into()))?
        .red;
    let strat = HunterStrategy::from_lists(n, &built.rounds)?;
    inst.with_strategy(strat, Some(red))
}

/// Vertex count and strategy length bound of T_{i,q}, with the connecting
/// path lengths of the top level.
fn t_sizes(i: usize, q: usize) -> (u128, u128, Vec<u128>) {
    let mut n: u128 = 1 + 3 * q as u128;
    let mut ell: u128 = 4 * q as u128;
    let mut p = vec![3; q];
    for _ in 1..i {
        p = Vec::with_capacity(q);
        let mut sum = 0u128;
        for j in 0..q {
            let len = if j == 0 { 2 } else { let x = ell + sum; x + x % 2 };
            p.push(len);
            sum += len;
        }
        n = 1 + p.iter().map(|&len| len - 1 + n).sum::<u128>();
        let bound = q as u128 * ell + p.iter().enumerate().map(|(j, &len)| (j as u128 + 1) * len).sum::<u128>();
        ell = bound + bound % 2;
        if n > T_VERTEX_LIMIT as u128 {
            break;
        }
    }
    (n, ell, p)
}

fn t_built(i: usize, q: usize) -> Built {
    if i == 1 {
        return spider_built(3, q);
    }
    let sub = t_built(i - 1, q);
    let mut lengths = Vec::with_capacity(q);
    let mut sum = 0;
    for j in 0..q {
        let len = if j == 0 { 2 } else { even_ceil(sub.ell + sum) };
        assert!(len % 2 == 0 && (j == 0 || len >= sub.ell + sum));
        lengths.push(len);
        sum += len;
    }

    let mut graph = Graph::new(1);
    let mut branches = Vec::with_capacity(q);
    for &len in &lengths {
        let mut path = hang_path(&mut graph, 0, len - 1);
        let offset = graph.n();
        for _ in 0..sub.graph.n() {
            graph.add_vertex();
        }
        for (u, v) in sub.graph.edges() {
            graph.add_edge(u + offset, v + offset).expect("copy edge");
        }
        let layout = sub.layout.shifted(offset);
        graph
            .add_edge(*path.last().unwrap_or(&0), layout.root)
            .expect("path to copy root");
        path.push(layout.root);
        branches.push((path, layout));
    }

    // Phase j: pin the root on odd rounds while sweeping the paths from the
    // last branch down to branch j, then play the sub-strategy in copy j.
    assert_eq!(sub.rounds[0], vec![0]);
    let mut rounds: Vec<Vec<usize>> = Vec::new();
    let mut phase_ends = Vec::with_capacity(q);
    for j in 0..q {
        let start = rounds.len();
        assert!(start.is_multiple_of(2), "phases start after an even round");
        rounds.push(vec![0]);
        for (path, _) in branches[j..].iter().rev() {
            sweep(&mut rounds, 0, path);
        }
        assert_eq!(rounds.len() % 2, 1, "copy root is reached on an odd round");
        let offset = branches[j].1.root;
        for s in &sub.rounds[1..] {
            rounds.push(s.iter().map(|v| v + offset).collect());
        }
        let phase_len = sub.ell + lengths[j..].iter().sum::<usize>();
        assert_eq!(rounds.len() - start, phase_len);
        phase_ends.push(rounds.len());
    }
    let bound = q * sub.ell + lengths.iter().enumerate().map(|(j, p)| (j + 1) * p).sum::<usize>();
    let ell = even_ceil(bound);
    assert!(rounds.len() <= ell);
    while rounds.len() < ell {
        rounds.push(vec![0]);
    }
    Built {
        graph,
        rounds,
        layout: Layout { root: 0, branches },
        ell,
        lengths,
        phase_ends,
    }
}

fn t_check(i: usize, q: usize) -> Result<()> {
    if i == 0 || q < 6 {
        return Err(Error::BadParameters("T needs i >= 1 and q >= 6".into()));
    }
    let (n, ell, _) = t_sizes(i, q);
    if n > T_VERTEX_LIMIT as u128 {
        return Err(Error::SizeLimitExceeded {
            what: "T_{i,q} vertices",
            size: usize::try_from(n).unwrap_or(usize::MAX),
            limit: T_VERTEX_LIMIT,
        });
    }
    if n * ell > T_WORK_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "T_{i,q} vertices x rounds",
            size: usize::try_from(n * ell).unwrap_or(usize::MAX),
            limit: T_WORK_LIMIT as usize,
        });
    }
    Ok(())
}

/// The tree T_{i,q} (root 0) with its phase-by-phase two-hunter strategy
/// against a rabbit starting in the root's color class.
pub fn gen_t(i: usize, q: usize) -> Result<FamilyInstance> {
    t_check(i, q)?;
    let built = t_built(i, q);
    let inst = FamilyInstance::new(built.graph.clone())
        .with("i", i)
        .with("q", q)
        .with("vertices", built.graph.n())
        .with("p", join_list(&built.lengths))
        .with("ell", built.ell)
        .with("length", built.rounds.len())
        .with("phase_ends", join_list(&built.phase_ends));
    finish(inst, built)
}

/// Complete ternary tree of depth n rooted at 0.
pub fn gen_ternary(n: usize) -> Result<Graph> {
    if n > 12 {
        return Err(Error::SizeLimitExceeded {
            what: "ternary depth",
            size: n,
            limit: 12,
        });
    }
    let mut g = Graph::new(1);
    let mut frontier = vec![0];
    for _ in 0..n {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for &v in &frontier {
            for _ in 0..3 {
                let c = g.add_vertex();
                g.add_edge(v, c).expect("fresh vertex");
                next.push(c);
            }
        }
        frontier = next;
    }
    Ok(g)
}

/// Clique 0..a with vertex a+x matched to clique vertex x.
pub fn gen_split_matching(a: usize) -> Result<FamilyInstance> {
    if a < 2 {
        return Err(Error::BadParameters("split matching needs a >= 2".into()));
    }
    let mut g = Graph::new(2 * a);
    for x in 0..a {
        for y in x + 1..a {
            g.add_edge(x, y)?;
        }
        g.add_edge(x, a + x)?;
    }
    Ok(FamilyInstance::new(g)
        .with("a", a)
        .with("h", a - 1)
        .with("mh", a))
}

/// Join of two copies of K_a plus a isolated vertices, with the non-monotone
/// 2a-hunter strategy (A, both cliques, second clique, A).
/// First side: clique 0..a, isolated a..2a; second side shifted by 2a.
pub fn gen_cograph_gap(a: usize) -> Result<FamilyInstance> {
    if a == 0 {
        return Err(Error::BadParameters("cograph gap needs a >= 1".into()));
    }
    let side = |g: &mut Graph, base: usize| -> Result<()> {
        for x in 0..a {
            for y in x + 1..a {
                g.add_edge(base + x, base + y)?;
            }
        }
        Ok(())
    };
    let n = 4 * a;
    let mut g = Graph::new(n);
    side(&mut g, 0)?;
    side(&mut g, 2 * a)?;
    for u in 0..2 * a {
        for v in 2 * a..n {
            g.add_edge(u, v)?;
        }
    }
    let side_a: Vec<usize> = (0..2 * a).collect();
    let cliques: Vec<usize> = (0..a).chain(2 * a..3 * a).collect();
    let clique_b: Vec<usize> = (2 * a..3 * a).collect();
    let strat = HunterStrategy::from_lists(n, &[&side_a, &cliques, &clique_b, &side_a])?;
    FamilyInstance::new(g)
        .with("a", a)
        .with("h", 2 * a)
        .with("mh", 3 * a - 1)
        .with_strategy(strat, None)
}

/// Embeds a tree into T_{i,max(6,Δ)}, rooted at a vertex of minimum
/// eccentricity i, and returns the subdivision with the restriction of the
/// T strategy. Each tree vertex sits on a branching vertex of T (leaves of
/// the deepest level sit on spider leg ends). Meta `embed` lists the
/// subdivision vertex of every tree vertex.
pub fn subdivide_for_two_hunters(t: &Graph) -> Result<FamilyInstance> {
    if !t.is_tree() {
        return Err(Error::BadParameters("input is not a tree".into()));
    }
    let ecc: Vec<usize> = (0..t.n())
        .map(|v| t.distances_from(v).into_iter().max().unwrap_or(0))
        .collect();
    let root = (0..t.n()).min_by_key(|&v| (ecc[v], v)).unwrap();
    let i = ecc[root];
    let q = t.max_degree().max(6);
    if i == 0 {
        return Ok(FamilyInstance::new(t.clone())
            .with("i", 0)
            .with("q", q)
            .with("root", root)
            .with("embed", 0));
    }
    t_check(i, q)?;
    let built = t_built(i, q);
    let big = &built.graph;

    let mut keep = VertexSet::new(big.n());
    let mut image = vec![0; t.n()];
    let mut stack = vec![(root, usize::MAX, built.layout.clone())];
    while let Some((u, parent, layout)) = stack.pop() {
        keep.insert(layout.root);
        image[u] = layout.root;
        let children = t.neighbors(u).iter().filter(|&&c| c != parent);
        for (&c, (path, sub)) in children.zip(layout.branches) {
            for &v in &path {
                keep.insert(v);
            }
            stack.push((c, u, sub));
        }
    }
    let strat = HunterStrategy::from_lists(big.n(), &built.rounds)?;
    let restricted = restrict_strategy(&strat, big, &keep)?;
    let (sub, map) = big.induced_subgraph(&keep);
    let mut local = vec![0; big.n()];
    for (new, &old) in map.iter().enumerate() {
        local[old] = new;
    }
    let embed: Vec<usize> = image.iter().map(|&v| local[v]).collect();
    let red = sub
        .bipartition()?
        .ok_or_else(|| Error::Internal("subdivision is not bipartite".into()))?
        .red;
    FamilyInstance::new(sub)
        .with("i", i)
        .with("q", q)
        .with("root", root)
        .with("embed", join_list(&embed))
        .with_strategy(restricted, Some(red))
}
