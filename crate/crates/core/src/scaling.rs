//! Wall-clock scaling of the span solver on random trees.

use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::prufer::{random_tree, seeded_rng};
use crate::span::strong_vertex_span;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub trials: usize,
    /// Median solver time over the trials, in seconds.
    pub median_secs: f64,
    /// `median_secs` divided by the previous row's, absent on the first row.
    pub ratio: Option<f64>,
}

/// Times [`strong_vertex_span`] on `trials` fresh random trees per size.
/// Tree generation is excluded from the timing.
pub fn measure(sizes: &[usize], trials: usize, seed: u64) -> Vec<ScalingRow> {
    let trials = trials.max(1);
    let mut rows: Vec<ScalingRow> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let mut times: Vec<Duration> = (0..trials)
            .map(|k| {
                let mut rng = seeded_rng(seed ^ ((n as u64) << 20) ^ k as u64);
                let t = random_tree(n, &mut rng);
                let start = Instant::now();
                black_box(strong_vertex_span(black_box(&t)));
                start.elapsed()
            })
            .collect();
        times.sort_unstable();
        let median_secs = times[trials / 2].as_secs_f64();
        let ratio = rows.last().map(|prev| median_secs / prev.median_secs);
        rows.push(ScalingRow {
            n,
            trials,
            median_secs,
            ratio,
        });
    }
    rows
}
