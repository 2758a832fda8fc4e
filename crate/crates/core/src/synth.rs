//! Synthetic link streams for tests and benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::stream::{apply_delta, LinkStream};
use crate::time::Tick;

/// Parameters of the grouped interaction generator.
///
/// Vertices are split into consecutive groups of `group_size`. Each instant
/// falls on its own tick and joins a random pair inside a random group, or
/// with probability `cross_fraction` a random pair of arbitrary vertices.
/// The instantaneous degree therefore stays near `group_size - 1` regardless
/// of the stream length, as long as `delta` is small against the number of
/// groups.
#[derive(Clone, Debug, PartialEq)]
pub struct SynthParams {
    pub vertices: u32,
    pub instants: usize,
    pub group_size: u32,
    pub delta: Tick,
    pub cross_fraction: f64,
    pub seed: u64,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams {
            vertices: 2_000,
            instants: 100_000,
            group_size: 8,
            delta: 400,
            cross_fraction: 0.02,
            seed: 0,
        }
    }
}

/// Instants `(t, u, v)` with decimal vertex labels.
pub fn generate_instants(params: &SynthParams) -> Vec<(Tick, String, String)> {
    assert!(params.vertices >= 2 && params.group_size >= 2);
    let mut rng = StdRng::seed_from_u64(params.seed);
    let groups = (params.vertices / params.group_size).max(1);
    let size = params.group_size.min(params.vertices);
    (0..params.instants)
        .map(|i| {
            let (u, v) = if rng.gen_bool(params.cross_fraction.clamp(0.0, 1.0)) {
                distinct_pair(&mut rng, 0, params.vertices)
            } else {
                let base = rng.gen_range(0..groups) * size;
                distinct_pair(&mut rng, base, size)
            };
            (i as Tick, u.to_string(), v.to_string())
        })
        .collect()
}

fn distinct_pair(rng: &mut impl Rng, base: u32, span: u32) -> (u32, u32) {
    let u = rng.gen_range(0..span);
    let mut v = rng.gen_range(0..span - 1);
    if v >= u {
        v += 1;
    }
    (base + u, base + v)
}

pub fn generate(params: &SynthParams) -> Result<LinkStream<Tick>> {
    apply_delta(&generate_instants(params), params.delta)
}

/// A small random stream for exhaustive checks: at most `max_vertices`
/// vertices and `max_links` links, random instants expanded by a random
/// duration.
pub fn random_small_stream(rng: &mut impl Rng, max_vertices: u32, max_links: usize) -> LinkStream<Tick> {
    let n = rng.gen_range(4..=max_vertices.max(4));
    let m = rng.gen_range(1..=max_links.max(1));
    let horizon: Tick = rng.gen_range(5..=60);
    let delta: Tick = rng.gen_range(1..=15);
    let instants: Vec<(Tick, String, String)> = (0..m)
        .map(|_| {
            let (u, v) = distinct_pair(rng, 0, n);
            (rng.gen_range(0..horizon), u.to_string(), v.to_string())
        })
        .collect();
    apply_delta(&instants, delta).expect("positive duration")
}
