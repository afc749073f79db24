use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tourney_core::generate::{generate, GenKind};
use tourney_core::par::{map_range_seq, trial_seed};
use tourney_core::query::{find_top_cycle_bounded, static_oracle};
use tourney_core::solutions::solve;
use tourney_core::{Caps, SolutionKind, Tournament};

fn top_cycle_trial(n: usize, trial: usize) -> usize {
    let t = generate(GenKind::PlantedTc, n, 3, trial_seed(1, n as u64, trial as u64)).unwrap();
    find_top_cycle_bounded(static_oracle(&t), 3, false).unwrap().queries
}

fn sweep_one(ts: &[Tournament], i: usize) -> usize {
    let caps = Caps::default();
    SolutionKind::BOUNDED.iter().map(|&k| solve(&ts[i], k, &caps).unwrap().len()).sum()
}

fn query_batches(c: &mut Criterion) {
    let mut group = c.benchmark_group("top_cycle_trials");
    group.sample_size(10);
    for n in [100usize, 400] {
        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, &n| {
            b.iter(|| black_box(map_range_seq(64, |i| top_cycle_trial(n, i))))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, &n| {
            b.iter(|| black_box(tourney_core::par::map_range_par(64, |i| top_cycle_trial(n, i))))
        });
    }
    group.finish();
}

fn solution_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("exhaustive_sweep");
    group.sample_size(10);
    let ts: Vec<Tournament> = Tournament::all(5).collect();
    group.bench_function("seq", |b| b.iter(|| black_box(map_range_seq(ts.len(), |i| sweep_one(&ts, i)))));
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| black_box(tourney_core::par::map_range_par(ts.len(), |i| sweep_one(&ts, i))))
    });
    group.finish();
}

criterion_group!(benches, query_batches, solution_sweeps);
criterion_main!(benches);
