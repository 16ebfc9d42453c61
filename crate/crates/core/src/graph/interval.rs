use super::{maximal_cliques, Graph};
use crate::error::Result;
use crate::vertex_set::VertexSet;

/// Maximum cardinality search order, reversed, is a perfect elimination
/// ordering exactly when the graph is chordal.
fn elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    order.reverse();
    order
}

pub fn is_chordal(g: &Graph) -> bool {
    let order = elimination_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        match later.iter().min_by_key(|&&w| pos[w]) {
            None => true,
            Some(&p) => later.iter().all(|&w| w == p || g.has_edge(p, w)),
        }
    })
}

/// Whether `a` and `b` are joined by a path avoiding the closed
/// neighborhood of `c`.
fn linked_avoiding(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let mut allowed = g.vertices().difference(&g.neighbor_set(c));
    allowed.remove(c);
    g.components_within(&allowed)
        .iter()
        .any(|comp| comp.contains(&a) && comp.contains(&b))
}

fn has_asteroidal_triple(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if linked_avoiding(g, a, b, c)
                    && linked_avoiding(g, a, c, b)
                    && linked_avoiding(g, b, c, a)
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Interval recognition through chordality plus AT-freeness. Returns the
/// maximal cliques when the graph is an interval graph.
pub fn recognize_interval(g: &Graph) -> Result<Option<Vec<VertexSet>>> {
    g.require_connected()?;
    if !is_chordal(g) || has_asteroidal_triple(g) {
        return Ok(None);
    }
    let n = g.n();
    Ok(Some(
        maximal_cliques(g)
            .into_iter()
            .map(|c| VertexSet::from_iter(n, c))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    /// Chordless cycle of length at least 4 by subset enumeration.
    fn brute_force_has_hole(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let set = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            set.len() >= 4 && {
                let (h, _) = g.induced_subgraph(&set);
                h.is_connected() && (0..h.n()).all(|v| h.degree(v) == 2)
            }
        })
    }

    fn brute_force_at(g: &Graph) -> bool {
        let n = g.n();
        let ok = |a: usize, b: usize, c: usize| {
            let mut allowed = g.vertices();
            allowed.remove(c);
            for &w in g.neighbors(c) {
                allowed.remove(w);
            }
            let (h, map) = g.induced_subgraph(&allowed);
            let ia = map.iter().position(|&x| x == a);
            let ib = map.iter().position(|&x| x == b);
            match (ia, ib) {
                (Some(ia), Some(ib)) => h.distances_from(ia)[ib] != usize::MAX,
                _ => false,
            }
        };
        (0..n).any(|a| {
            (0..n).any(|b| {
                (0..n).any(|c| a != b && b != c && a != c && ok(a, b, c) && ok(a, c, b) && ok(b, c, a))
            })
        })
    }

    #[test]
    fn paths_are_interval() {
        for n in 1..8 {
            assert!(recognize_interval(&named::path(n)).unwrap().is_some());
        }
    }

    #[test]
    fn c4_is_not_interval() {
        assert!(recognize_interval(&named::cycle(4)).unwrap().is_none());
    }

    #[test]
    fn clique_with_apexes_and_pendants() {
        // K_4 = {0..3}; apexes 4, 5 see all of K_4; pendant 6 on 4, 7 on 5.
        let mut g = named::complete(4);
        let (a, b, c, d) = (g.add_vertex(), g.add_vertex(), g.add_vertex(), g.add_vertex());
        for k in 0..4 {
            g.add_edge(a, k).unwrap();
            g.add_edge(b, k).unwrap();
        }
        g.add_edge(c, a).unwrap();
        g.add_edge(d, b).unwrap();
        assert!(!brute_force_has_hole(&g));
        assert!(!brute_force_at(&g));
        let cliques = recognize_interval(&g).unwrap().unwrap();
        assert_eq!(cliques.len(), 4);
    }

    #[test]
    fn subdivided_claw_has_asteroidal_triple() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(is_chordal(&g));
        assert!(brute_force_at(&g));
        assert!(recognize_interval(&g).unwrap().is_none());
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        while checked < 150 {
            let n = rng.gen_range(3..8);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            assert_eq!(is_chordal(&g), !brute_force_has_hole(&g));
            let expect = !brute_force_has_hole(&g) && !brute_force_at(&g);
            assert_eq!(recognize_interval(&g).unwrap().is_some(), expect, "{}", g.to_text());
        }
    }
}
