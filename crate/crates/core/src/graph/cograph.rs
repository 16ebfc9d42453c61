use super::Graph;
use crate::vertex_set::VertexSet;

/// Cotree of a cograph. Internal nodes have at least two children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoTree {
    Leaf(usize),
    Union(Vec<CoTree>),
    Join(Vec<CoTree>),
}

impl CoTree {
    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            CoTree::Leaf(_) => 1,
            CoTree::Union(ch) | CoTree::Join(ch) => ch.iter().map(CoTree::size).sum(),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            CoTree::Leaf(v) => out.push(*v),
            CoTree::Union(ch) | CoTree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// The graph the cotree describes, on `n` vertices named by the leaves.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut g = Graph::new(n);
        self.add_edges(&mut g);
        g
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            CoTree::Leaf(_) => {}
            CoTree::Union(ch) => ch.iter().for_each(|c| c.add_edges(g)),
            CoTree::Join(ch) => {
                ch.iter().for_each(|c| c.add_edges(g));
                let parts: Vec<Vec<usize>> = ch.iter().map(CoTree::leaves).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for &u in a {
                            for &v in b {
                                g.add_edge(u, v).expect("leaves are distinct");
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Cotree of `g` by recursive complement-component splitting, or `None`
/// when `g` has an induced P_4.
pub fn recognize_cograph(g: &Graph) -> Option<CoTree> {
    if g.n() == 0 {
        return None;
    }
    let comp = g.complement();
    decompose(g, &comp, &g.vertices())
}

fn decompose(g: &Graph, comp: &Graph, within: &VertexSet) -> Option<CoTree> {
    if within.len() == 1 {
        return Some(CoTree::Leaf(within.first().unwrap()));
    }
    let n = g.n();
    let split = |h: &Graph| -> Option<Vec<CoTree>> {
        h.components_within(within)
            .into_iter()
            .map(|c| decompose(g, comp, &VertexSet::from_iter(n, c)))
            .collect()
    };
    if g.components_within(within).len() > 1 {
        return split(g).map(CoTree::Union);
    }
    if comp.components_within(within).len() > 1 {
        return split(comp).map(CoTree::Join);
    }
    None
}
