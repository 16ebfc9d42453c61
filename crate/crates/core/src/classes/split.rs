use crate::error::Result;
use crate::game::{self, HunterStrategy};
use crate::graph::{Graph, SplitPartition};
use crate::solver::SolveResult;
use crate::vertex_set::VertexSet;

fn trivial() -> SolveResult {
    SolveResult {
        value: 0,
        strategy: None,
        certificate_checked: true,
    }
}

fn certified(g: &Graph, value: usize, rounds: Vec<VertexSet>, monotone: bool) -> Result<SolveResult> {
    let s = HunterStrategy::new(g.n(), rounds)?;
    let w = g.vertices();
    let ok = s.hunters_used() <= value
        && game::is_winning(g, &w, &s)?
        && (!monotone || game::is_monotone(g, &w, &s)?);
    Ok(SolveResult {
        value,
        strategy: Some(s),
        certificate_checked: ok,
    })
}

fn without(c: &VertexSet, v: usize) -> VertexSet {
    let mut s = c.clone();
    s.remove(v);
    s
}

/// h of a connected split graph: |C| when every two clique vertices share
/// an independent neighbor, |C| - 1 otherwise.
pub fn split_h(g: &Graph, sp: &SplitPartition) -> Result<SolveResult> {
    g.require_connected()?;
    sp.validate(g)?;
    if g.n() == 1 {
        return Ok(trivial());
    }
    let c = sp.clique.to_vec();
    let lonely_pair = c.iter().enumerate().find_map(|(i, &x)| {
        let nx = sp.independent_neighbors(g, x);
        c[i + 1..]
            .iter()
            .find(|&&y| nx.is_disjoint(&sp.independent_neighbors(g, y)))
            .map(|&y| (x, y))
    });
    match lonely_pair {
        Some((x, y)) => {
            let (cx, cy) = (without(&sp.clique, x), without(&sp.clique, y));
            let rounds = vec![cy.clone(), cy.clone(), cx.clone(), cx, cy];
            certified(g, c.len() - 1, rounds, false)
        }
        None => certified(g, c.len(), vec![sp.clique.clone(), sp.clique.clone()], false),
    }
}

/// mh of a connected split graph: |C| - 1 when some clique vertex has no
/// independent neighbor, |C| otherwise.
pub fn split_mh(g: &Graph, sp: &SplitPartition) -> Result<SolveResult> {
    g.require_connected()?;
    sp.validate(g)?;
    if g.n() == 1 {
        return Ok(trivial());
    }
    match sp
        .clique
        .iter()
        .find(|&v| sp.independent_neighbors(g, v).is_empty())
    {
        Some(v) => {
            let s = without(&sp.clique, v);
            certified(g, sp.clique.len() - 1, vec![s.clone(), s], true)
        }
        None => certified(g, sp.clique.len(), vec![sp.clique.clone(), sp.clique.clone()], true),
    }
}

/// Split graphs have h = pw; this returns the split_h value.
pub fn split_pathwidth_equals_h(g: &Graph, sp: &SplitPartition) -> Result<usize> {
    Ok(split_h(g, sp)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{named, pathwidth_exact, recognize_split};
    use crate::solver::{hunter_number, monotone_hunter_number};

    fn matched_clique(a: usize) -> Graph {
        let mut g = named::complete(a);
        for c in 0..a {
            let v = g.add_vertex();
            g.add_edge(c, v).unwrap();
        }
        g
    }

    fn check(g: &Graph) {
        let sp = recognize_split(g).unwrap();
        let h = split_h(g, &sp).unwrap();
        let mh = split_mh(g, &sp).unwrap();
        assert!(h.certificate_checked && mh.certificate_checked);
        assert_eq!(h.value, hunter_number(g, &g.vertices()).unwrap().value);
        assert_eq!(mh.value, monotone_hunter_number(g, &g.vertices()).unwrap().value);
        assert_eq!(split_pathwidth_equals_h(g, &sp).unwrap(), pathwidth_exact(g).unwrap().0);
    }

    #[test]
    fn clique_with_matching() {
        let g = matched_clique(4);
        let sp = recognize_split(&g).unwrap();
        assert_eq!(split_h(&g, &sp).unwrap().value, 3);
        assert_eq!(split_mh(&g, &sp).unwrap().value, 4);
        check(&g);
    }

    #[test]
    fn triangle() {
        let g = named::complete(3);
        let bad = SplitPartition {
            clique: VertexSet::from_iter(3, [0, 1]),
            independent: VertexSet::from_iter(3, [2]),
        };
        assert!(matches!(split_h(&g, &bad), Err(Error::InvalidPartition(_))));
        let sp = recognize_split(&g).unwrap();
        assert_eq!(split_h(&g, &sp).unwrap().value, 2);
        check(&g);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1);
        let sp = recognize_split(&g).unwrap();
        assert_eq!(split_h(&g, &sp).unwrap().value, 0);
        assert_eq!(split_mh(&g, &sp).unwrap().value, 0);
    }

    #[test]
    fn triangle_with_pendant() {
        let mut g = named::complete(3);
        let p = g.add_vertex();
        g.add_edge(0, p).unwrap();
        let sp = recognize_split(&g).unwrap();
        assert_eq!(split_mh(&g, &sp).unwrap().value, 2);
        check(&g);
    }

    #[test]
    fn pure_clique() {
        for n in 2..6 {
            let g = named::complete(n);
            let sp = recognize_split(&g).unwrap();
            assert_eq!(split_mh(&g, &sp).unwrap().value, n - 1);
            check(&g);
        }
    }
}
