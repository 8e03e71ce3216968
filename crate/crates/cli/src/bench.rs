//! Benchmark harness: run the direct and prefiltered hull pipelines over a
//! dataset, verify they agree, and report median timings.

use std::time::Instant;

use serde::Serialize;

use prehull::datasets::DatasetSpec;
use prehull::filter::prefilter;
use prehull::geom::PointSet;
use prehull::hull::monotone_chain;

use crate::CliError;

/// One report row. `speedup` is direct hull time over filter-plus-hull time,
/// both sides using this crate's own hull.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub dataset: String,
    pub n: usize,
    pub t_hull_direct_ms: f64,
    pub t_filter_ms: f64,
    pub t_hull_filtered_ms: f64,
    pub remaining_pct: f64,
    pub speedup: f64,
    /// Always true in an emitted record; a mismatch aborts the run instead.
    pub hulls_match: bool,
}

/// Fixed CSV schema, in column order.
pub const CSV_HEADER: &str =
    "dataset,n,t_hull_direct_ms,t_filter_ms,t_hull_filtered_ms,remaining_pct,speedup";

struct RunSample {
    t_hull_direct_ms: f64,
    t_filter_ms: f64,
    t_hull_filtered_ms: f64,
    remaining_pct: f64,
}

/// Times both pipelines `reps` times (after one discarded warm-up run) and
/// reports per-phase medians. Hull equality is verified on every run
/// including the warm-up.
pub fn bench_spec(
    spec: &DatasetSpec,
    reps: usize,
    angles: &[f64],
) -> Result<BenchRecord, CliError> {
    let label = spec.label();
    let points = spec.load()?;

    run_once(&points, angles, &label)?; // warm-up, excluded from stats

    let mut direct = Vec::with_capacity(reps);
    let mut filter = Vec::with_capacity(reps);
    let mut filtered_hull = Vec::with_capacity(reps);
    let mut remaining_pct = 0.0;
    for _ in 0..reps {
        let sample = run_once(&points, angles, &label)?;
        direct.push(sample.t_hull_direct_ms);
        filter.push(sample.t_filter_ms);
        filtered_hull.push(sample.t_hull_filtered_ms);
        remaining_pct = sample.remaining_pct;
    }

    let t_hull_direct_ms = median(&mut direct);
    let t_filter_ms = median(&mut filter);
    let t_hull_filtered_ms = median(&mut filtered_hull);
    Ok(BenchRecord {
        dataset: label,
        n: points.len(),
        t_hull_direct_ms,
        t_filter_ms,
        t_hull_filtered_ms,
        remaining_pct,
        speedup: t_hull_direct_ms / (t_filter_ms + t_hull_filtered_ms),
        hulls_match: true,
    })
}

fn run_once(points: &PointSet, angles: &[f64], label: &str) -> Result<RunSample, CliError> {
    let started = Instant::now();
    let direct = monotone_chain(points);
    let t_hull_direct_ms = started.elapsed().as_secs_f64() * 1e3;

    let (survivors, report) = prefilter(points, angles);
    let started = Instant::now();
    let filtered = monotone_chain(&survivors);
    let t_hull_filtered_ms = started.elapsed().as_secs_f64() * 1e3;

    if direct.polygon != filtered.polygon {
        eprintln!("direct ring ({} vertices):", direct.polygon.len());
        for v in direct.polygon.vertices() {
            eprintln!("{} {}", v.x, v.y);
        }
        eprintln!("filtered ring ({} vertices):", filtered.polygon.len());
        for v in filtered.polygon.vertices() {
            eprintln!("{} {}", v.x, v.y);
        }
        return Err(CliError::HullMismatch {
            dataset: label.to_string(),
        });
    }

    Ok(RunSample {
        t_hull_direct_ms,
        t_filter_ms: report.timings.total().as_secs_f64() * 1e3,
        t_hull_filtered_ms,
        remaining_pct: report.remaining_fraction * 100.0,
    })
}

/// Median: middle element for odd counts, mean of the middle two for even.
fn median(samples: &mut [f64]) -> f64 {
    assert!(!samples.is_empty());
    samples.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    }
}

pub fn emit_csv<W: std::io::Write>(out: &mut W, records: &[BenchRecord]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        // remaining_pct is printed exactly (shortest round-trip form) since
        // it is data, not timing.
        writeln!(
            out,
            "{},{},{:.3},{:.3},{:.3},{},{:.3}",
            r.dataset,
            r.n,
            r.t_hull_direct_ms,
            r.t_filter_ms,
            r.t_hull_filtered_ms,
            r.remaining_pct,
            r.speedup
        )?;
    }
    Ok(())
}

pub fn emit_json<W: std::io::Write>(out: &mut W, records: &[BenchRecord]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)
}
