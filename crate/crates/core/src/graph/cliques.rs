use super::Graph;
use crate::vertex_set::VertexSet;

/// All inclusion-maximal cliques (Bron–Kerbosch with pivoting), each as a
/// sorted vertex list, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let nbr: Vec<VertexSet> = (0..n).map(|v| g.neighbor_set(v)).collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&nbr, &mut r, g.vertices(), VertexSet::new(n), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    nbr: &[VertexSet],
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| nbr[u].intersection(&p).len())
        .unwrap();
    for v in p.difference(&nbr[pivot]).to_vec() {
        r.push(v);
        bron_kerbosch(nbr, r, p.intersection(&nbr[v]), x.intersection(&nbr[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// A maximum clique; among those, the lexicographically smallest.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let cliques = maximal_cliques(g);
    let best = cliques.iter().map(Vec::len).max().unwrap_or(0);
    cliques.into_iter().find(|c| c.len() == best).unwrap_or_default()
}

/// ω(G).
pub fn omega(g: &Graph) -> usize {
    maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(0)
}
