use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hunters_bench::batch;
use hunters_core::classes::{tree_monotone_strategy, tree_mh, RootedTree};
use hunters_core::game::is_winning;
use hunters_core::generators::{gen_t, RandomKind};
use hunters_core::graph::{named, pathwidth_exact, vertex_cover, CoverMode};
use hunters_core::kernel::{fpt_decide, GameMode};
use hunters_core::solver::{hunter_number, monotone_hunter_number};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for (name, g) in [("grid3x3", named::grid(3, 3)), ("cycle9", named::cycle(9)), ("grid3x4", named::grid(3, 4))] {
        group.bench_with_input(BenchmarkId::new("h", name), &g, |b, g| {
            b.iter(|| hunter_number(g, &g.vertices()).unwrap().value)
        });
        group.bench_with_input(BenchmarkId::new("mh", name), &g, |b, g| {
            b.iter(|| monotone_hunter_number(g, &g.vertices()).unwrap().value)
        });
    }
    let graphs = batch(RandomKind::Connected, 10, 20);
    group.bench_function("mh/random10x20", |b| {
        b.iter(|| graphs.iter().map(|g| monotone_hunter_number(g, &g.vertices()).unwrap().value).sum::<usize>())
    });
    group.finish();
}

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("trees");
    for n in [100, 1000, 10_000] {
        let g = batch(RandomKind::Tree, n, 1).pop().unwrap();
        let t = RootedTree::new(&g, 0).unwrap();
        group.bench_with_input(BenchmarkId::new("labels", n), &t, |b, t| b.iter(|| tree_mh(t)));
        if n <= 1000 {
            group.bench_with_input(BenchmarkId::new("synthesis", n), &t, |b, t| {
                b.iter(|| tree_monotone_strategy(t).unwrap().len())
            });
        }
    }
    group.finish();
}

fn families(c: &mut Criterion) {
    let inst = gen_t(2, 6).unwrap();
    let strat = inst.strategy.clone().unwrap();
    let w = inst.start_vertices();
    c.bench_function("replay/T_2_6", |b| b.iter(|| is_winning(&inst.graph, &w, black_box(&strat)).unwrap()));
    c.bench_function("build/T_2_6", |b| b.iter(|| gen_t(2, 6).unwrap().graph.n()));
}

fn misc(c: &mut Criterion) {
    let graphs = batch(RandomKind::Connected, 14, 10);
    c.bench_function("pathwidth/random14x10", |b| {
        b.iter(|| graphs.iter().map(|g| pathwidth_exact(g).unwrap().0).sum::<usize>())
    });
    c.bench_function("cover/random14x10", |b| {
        b.iter(|| graphs.iter().map(|g| vertex_cover(g, CoverMode::Exact).unwrap().len()).sum::<usize>())
    });
    let star = named::star(200);
    c.bench_function("fpt/star200", |b| b.iter(|| fpt_decide(&star, 1, GameMode::Hunter).unwrap()));
}

criterion_group!(benches, exact, trees, families, misc);
criterion_main!(benches);
