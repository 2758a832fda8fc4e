//! Sequential against parallel batch sweeps, and the single-thread pipeline
//! against the producer/consumer one.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lscpm::pipeline::{self, Mode};
use lscpm::sweep::{communities_by_k, snapshot_sweep, Execution};
use lscpm::synth::{generate, SynthParams};
use lscpm::{LinkStream, Tick};

fn stream(instants: usize) -> LinkStream<Tick> {
    generate(&SynthParams {
        vertices: 600,
        instants,
        group_size: 10,
        delta: 200,
        seed: 3,
        ..SynthParams::default()
    })
    .unwrap()
}

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn by_k(c: &mut Criterion) {
    let s = stream(50_000);
    let ks = [3, 4, 5, 6];
    let mut group = c.benchmark_group("communities_by_k");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| communities_by_k(&s, &ks, exec).unwrap()));
    }
    group.finish();
}

fn snapshots(c: &mut Criterion) {
    let s = stream(20_000);
    let span = s.span().unwrap();
    let times: Vec<Tick> = (0..64).map(|i| span.t0 + (span.t1 - span.t0) * i / 64).collect();
    let mut group = c.benchmark_group("snapshot_sweep");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| snapshot_sweep(&s, &times, 3, exec).unwrap()));
    }
    group.finish();
}

fn pipeline_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for instants in [20_000, 100_000] {
        let s = stream(instants);
        for (name, mode) in [("single_thread", Mode::SingleThread), ("threaded", Mode::default())] {
            group.bench_with_input(BenchmarkId::new(name, s.len()), &s, |b, s| {
                b.iter(|| pipeline::communities(s, 3, mode).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, by_k, snapshots, pipeline_modes);
criterion_main!(benches);
