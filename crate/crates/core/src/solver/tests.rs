use super::*;
use crate::graph::named;
use proptest::prelude::*;
use std::collections::{HashSet, VecDeque};

fn all(g: &Graph) -> VertexSet {
    g.vertices()
}

/// Breadth-first oracle over every shot of size at most k (no restriction
/// to contaminated vertices, no pruning), written against plain vectors.
fn oracle(g: &Graph, w: &VertexSet, k: usize, monotone: bool) -> bool {
    let n = g.n();
    let nb = |z: &[bool], s: &[bool]| -> Vec<bool> {
        let mut out = vec![false; n];
        for v in 0..n {
            if z[v] && !s[v] {
                for &x in g.neighbors(v) {
                    out[x] = true;
                }
            }
        }
        out
    };
    let start: Vec<bool> = (0..n).map(|v| w.contains(v)).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([(start, vec![false; n])]);
    while let Some((z, c)) = queue.pop_front() {
        for mask in 1u32..1 << n {
            if mask.count_ones() as usize > k {
                continue;
            }
            let s: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            if monotone && (0..n).any(|v| c[v] && z[v] && !s[v]) {
                continue;
            }
            let z2 = nb(&z, &s);
            if z2.iter().all(|&b| !b) {
                return true;
            }
            let mut c2 = c.clone();
            if monotone {
                for v in 0..n {
                    let hit: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| z[x]).collect();
                    if s[v] || (!hit.is_empty() && hit.iter().all(|&x| s[x])) {
                        c2[v] = true;
                    }
                }
            }
            if seen.insert((z2.clone(), c2.clone())) {
                queue.push_back((z2, c2));
            }
        }
    }
    false
}

#[test]
fn paths_need_one_hunter() {
    for n in 2..=10 {
        let g = named::path(n);
        let s = decide_h(&g, &all(&g), 1).unwrap().unwrap();
        assert!(game::is_winning(&g, &all(&g), &s).unwrap());
    }
}

#[test]
fn cycles_need_two() {
    for n in 3..=9 {
        let g = named::cycle(n);
        assert!(decide_h(&g, &all(&g), 1).unwrap().is_none());
        assert!(decide_h(&g, &all(&g), 2).unwrap().is_some());
    }
}

#[test]
fn k4_needs_three() {
    let g = named::complete(4);
    assert!(decide_h(&g, &all(&g), 2).unwrap().is_none());
    assert!(decide_h(&g, &all(&g), 3).unwrap().is_some());
}

#[test]
fn hunter_number_examples() {
    let k1 = Graph::new(1);
    let r = hunter_number(&k1, &all(&k1)).unwrap();
    assert_eq!((r.value, r.strategy), (0, None));
    let grid = named::grid(3, 3);
    assert_eq!(hunter_number(&grid, &all(&grid)).unwrap().value, 2);
    let claw = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
    let red = StartSet::Red.resolve(&claw).unwrap();
    assert_eq!(red.to_vec(), vec![0, 2, 4, 6]);
    let r = hunter_number(&claw, &red).unwrap();
    assert_eq!(r.value, 1);
    assert!(r.certificate_checked);
}

#[test]
fn monotone_examples() {
    for n in 4..=8 {
        let g = named::path(n);
        assert!(decide_mh(&g, &all(&g), 1).unwrap().is_none());
        assert!(decide_mh(&g, &all(&g), 2).unwrap().is_some());
    }
    let star = named::star(5);
    assert!(decide_mh(&star, &all(&star), 1).unwrap().is_some());

    let mut g = named::complete(3);
    for c in 0..3 {
        let v = g.add_vertex();
        g.add_edge(c, v).unwrap();
    }
    assert_eq!(hunter_number(&g, &all(&g)).unwrap().value, 2);
    assert_eq!(monotone_hunter_number(&g, &all(&g)).unwrap().value, 3);

    let k1 = Graph::new(1);
    assert_eq!(monotone_hunter_number(&k1, &all(&k1)).unwrap().value, 0);
    let p6 = named::path(6);
    assert_eq!(monotone_hunter_number(&p6, &all(&p6)).unwrap().value, 2);
}

#[test]
fn extracted_strategies() {
    let k2 = named::path(2);
    let s = decide_h(&k2, &all(&k2), 1).unwrap().unwrap();
    assert_eq!(s, HunterStrategy::from_lists(2, &[vec![0], vec![0]]).unwrap());
    let p4 = named::path(4);
    let s = decide_h(&p4, &all(&p4), 1).unwrap().unwrap();
    assert!(game::is_winning(&p4, &all(&p4), &s).unwrap());
    let c4 = named::cycle(4);
    let s = decide_h(&c4, &all(&c4), 2).unwrap().unwrap();
    assert!(game::is_winning(&c4, &all(&c4), &s).unwrap());
    assert!(s.hunters_used() <= 2);
}

#[test]
fn rejects_bad_inputs() {
    assert_eq!(decide_h(&Graph::new(2), &VertexSet::full(2), 1), Err(Error::NotConnected));
    let p = named::path(65);
    assert!(matches!(decide_h(&p, &all(&p), 1), Err(Error::SizeLimitExceeded { .. })));
    let p = named::path(3);
    assert!(decide_h(&p, &all(&p), 0).is_err());
    assert!(decide_h(&p, &VertexSet::new(3), 1).is_err());
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..0.7).prop_map(|(n, seed, p)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(rng.gen_range(0..v), v).unwrap();
        }
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) && rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decisions_match_oracle(g in arb_connected(6), start in any::<u64>()) {
        let n = g.n();
        let mut w = VertexSet::from_mask(n, start);
        if w.is_empty() {
            w = g.vertices();
        }
        for k in 1..n {
            prop_assert_eq!(decide_h(&g, &w, k).unwrap().is_some(), oracle(&g, &w, k, false), "h k={} {}", k, g.to_text());
            prop_assert_eq!(decide_mh(&g, &w, k).unwrap().is_some(), oracle(&g, &w, k, true), "mh k={} {}", k, g.to_text());
        }
    }

    #[test]
    fn sandwiches(g in arb_connected(8)) {
        let w = g.vertices();
        let h = hunter_number(&g, &w).unwrap();
        let mh = monotone_hunter_number(&g, &w).unwrap();
        let pw = pathwidth_exact(&g).unwrap().0;
        let vc = vertex_cover(&g, CoverMode::Exact).unwrap().len();
        prop_assert!(g.min_degree() <= h.value && h.value <= mh.value && mh.value <= vc);
        prop_assert!(pw <= mh.value && mh.value <= pw + 1);
        let s = mh.strategy.unwrap();
        prop_assert!(game::is_monotone(&g, &w, &s).unwrap());
        prop_assert!(game::is_parsimonious(&g, &w, &s).unwrap());
    }

    #[test]
    fn decisions_are_monotone_in_k(g in arb_connected(7)) {
        let w = g.vertices();
        let mut prev = (false, false);
        for k in 1..=g.n() {
            let cur = (decide_h(&g, &w, k).unwrap().is_some(), decide_mh(&g, &w, k).unwrap().is_some());
            prop_assert!(!prev.0 || cur.0);
            prop_assert!(!prev.1 || cur.1);
            prop_assert!(!cur.1 || cur.0);
            prev = cur;
        }
    }

    #[test]
    fn induced_subgraphs_need_no_more_hunters(g in arb_connected(8), keep in any::<u64>()) {
        let n = g.n();
        let set = VertexSet::from_mask(n, keep | 1);
        let comp = g.components_within(&set).into_iter().next().unwrap();
        let (h, _) = g.induced_subgraph(&VertexSet::from_iter(n, comp));
        let hw = h.vertices();
        prop_assert!(hunter_number(&h, &hw).unwrap().value <= hunter_number(&g, &g.vertices()).unwrap().value);
        prop_assert!(monotone_hunter_number(&h, &hw).unwrap().value <= monotone_hunter_number(&g, &g.vertices()).unwrap().value);
    }
}
