//! Monotone hunter number of trees through vertex labels.
//!
//! The label of u in the subtree T[u] is a strictly decreasing list
//! a_1 > ... > a_p ≥ 0 with an optional star on a_p. a_1 = mh(T[u]); each
//! later entry records the value of what remains after removing the path
//! to a critical vertex for the previous entry.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeLabel {
    pub entries: Vec<usize>,
    pub starred: bool,
}

impl TreeLabel {
    fn single(m: usize) -> Self {
        TreeLabel {
            entries: vec![m],
            starred: false,
        }
    }

    fn single_starred(m: usize) -> Self {
        TreeLabel {
            entries: vec![m],
            starred: true,
        }
    }

    /// mh of the labelled subtree.
    pub fn value(&self) -> usize {
        self.entries[0]
    }

    fn contains(&self, m: usize) -> bool {
        self.entries.contains(&m)
    }

    /// m appears before the last entry, or is the last entry with a star:
    /// the subtree has an m-critical vertex.
    fn has_critical(&self, m: usize) -> bool {
        let last = self.entries.len() - 1;
        self.entries[..last].contains(&m) || (self.starred && self.entries[last] == m)
    }

    pub fn is_well_formed(&self) -> bool {
        !self.entries.is_empty()
            && self.entries.windows(2).all(|w| w[0] > w[1])
            && !(self.entries == [1, 0])
    }
}

impl fmt::Display for TreeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(usize::to_string).collect();
        write!(f, "{}{}", parts.join(","), if self.starred { "*" } else { "" })
    }
}

impl FromStr for TreeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            msg: format!("not a tree label: {s:?}"),
        };
        let (body, starred) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let entries = body
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<usize>>>()?;
        let label = TreeLabel { entries, starred };
        if label.is_well_formed() {
            Ok(label)
        } else {
            Err(bad())
        }
    }
}

/// Label of a vertex from the labels of its children.
pub fn label_from_children(children: &[TreeLabel]) -> TreeLabel {
    if children.is_empty() {
        return TreeLabel::single(0);
    }
    let k = children.iter().map(TreeLabel::value).max().unwrap();
    // invariant at the start of iteration m: lambda = label of v in the
    // tree keeping only children whose label values are below m
    let mut lambda = TreeLabel::single(0);
    for m in 0..=k {
        let with_m = children.iter().filter(|c| c.contains(m)).count();
        let critical = children.iter().any(|c| c.has_critical(m));
        if m == 0 {
            lambda = TreeLabel::single(usize::from(with_m >= 1));
            continue;
        }
        if with_m == 0 {
            continue;
        }
        if m == 1 {
            lambda = if with_m == 1 && !critical && lambda.entries == [0] {
                TreeLabel::single_starred(1)
            } else {
                TreeLabel::single(2)
            };
            continue;
        }
        lambda = match (with_m, critical) {
            (3.., _) => TreeLabel::single(m + 1),
            (2, true) => TreeLabel::single(m + 1),
            (2, false) => TreeLabel::single_starred(m),
            (1, true) if lambda.contains(m) => TreeLabel::single(m + 1),
            (1, true) => {
                let mut entries = vec![m];
                entries.extend_from_slice(&lambda.entries);
                TreeLabel {
                    entries,
                    starred: lambda.starred,
                }
            }
            (1, false) => TreeLabel::single(m),
            (0, _) => unreachable!(),
        };
    }
    lambda
}

/// A tree with a chosen root.
#[derive(Clone, Debug)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// Vertices in breadth-first order from the root.
    order: Vec<usize>,
}

impl RootedTree {
    pub fn new(g: &Graph, root: usize) -> Result<Self> {
        if !g.is_tree() {
            return Err(Error::BadParameters("graph is not a tree".into()));
        }
        if root >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: g.n() });
        }
        let n = g.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in g.neighbors(u) {
                if Some(w) != parent[u] {
                    parent[w] = Some(u);
                    children[u].push(w);
                    order.push(w);
                }
            }
        }
        Ok(RootedTree {
            graph: g.clone(),
            root,
            parent,
            children,
            order,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in breadth-first order from the root.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Labels of all vertices, each relative to its own subtree.
pub fn tree_labels(t: &RootedTree) -> Vec<TreeLabel> {
    let mut labels: Vec<Option<TreeLabel>> = vec![None; t.graph.n()];
    for &u in t.order.iter().rev() {
        let ch: Vec<TreeLabel> = t.children[u]
            .iter()
            .map(|&c| labels[c].take().expect("children come later in BFS order"))
            .collect();
        labels[u] = Some(label_from_children(&ch));
        // restore children labels for the caller
        for (&c, l) in t.children[u].iter().zip(ch) {
            labels[c] = Some(l);
        }
    }
    labels.into_iter().map(Option::unwrap).collect()
}

/// Label of `u` in its subtree.
pub fn tree_label(t: &RootedTree, u: usize) -> TreeLabel {
    tree_labels(t).swap_remove(u)
}

/// mh of the tree.
pub fn tree_mh(t: &RootedTree) -> usize {
    tree_labels(t)[t.root].value()
}

/// Labels of every vertex seen from every neighbor: the label of `u` in the
/// component of T - p containing u, rooted at u.
#[derive(Clone, Debug)]
pub struct BranchLabels {
    labels: Vec<Vec<Option<TreeLabel>>>,
    graph: Graph,
}

impl BranchLabels {
    /// Label of `u` inside the branch at `p` that contains `u`; `u` and `p`
    /// must be adjacent.
    pub fn away_from(&self, u: usize, p: usize) -> &TreeLabel {
        let i = self.graph.neighbors(u).binary_search(&p).expect("adjacent vertices");
        self.labels[u][i].as_ref().unwrap()
    }

    /// mh of the branch at `v` containing its neighbor `u`.
    pub fn branch_mh(&self, v: usize, u: usize) -> usize {
        self.away_from(u, v).value()
    }
}

/// Labels along every directed edge, each computed once.
pub fn branch_labels(g: &Graph) -> Result<BranchLabels> {
    if !g.is_tree() {
        return Err(Error::BadParameters("graph is not a tree".into()));
    }
    let n = g.n();
    let mut labels: Vec<Vec<Option<TreeLabel>>> = (0..n).map(|u| vec![None; g.degree(u)]).collect();
    // iterative post-order over directed edges (u, parent)
    for u in 0..n {
        for i in 0..g.degree(u) {
            if labels[u][i].is_some() {
                continue;
            }
            let mut stack = vec![(u, g.neighbors(u)[i])];
            while let Some(&(x, p)) = stack.last() {
                let j = g.neighbors(x).binary_search(&p).unwrap();
                if labels[x][j].is_some() {
                    stack.pop();
                    continue;
                }
                let mut ready = true;
                for &c in g.neighbors(x) {
                    if c == p {
                        continue;
                    }
                    let j = g.neighbors(c).binary_search(&x).unwrap();
                    if labels[c][j].is_none() {
                        ready = false;
                        stack.push((c, x));
                    }
                }
                if !ready {
                    continue;
                }
                stack.pop();
                let ch: Vec<TreeLabel> = g
                    .neighbors(x)
                    .iter()
                    .filter(|&&c| c != p)
                    .map(|&c| {
                        let j = g.neighbors(c).binary_search(&x).unwrap();
                        labels[c][j].clone().unwrap()
                    })
                    .collect();
                labels[x][j] = Some(label_from_children(&ch));
            }
        }
    }
    Ok(BranchLabels {
        labels,
        graph: g.clone(),
    })
}
