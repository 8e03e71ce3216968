//! Interior-point prefilter.
//!
//! Before running a full hull pass over a large set, points that provably
//! cannot be hull vertices are discarded: at each configured angle the four
//! points extremizing the rotated-frame x and y coordinates are collected
//! (sixteen candidates for the default four angles), their convex polygon is
//! built, and every point strictly inside that polygon is dropped. Points on
//! the polygon boundary are always kept, so the hull of the survivors equals
//! the hull of the input.
//!
//! The extreme search is an associative reduction and the discard pass is an
//! independent per-point map followed by a stable compaction. Both are
//! data-parallel with the `parallel` feature (the default) and fall back to
//! the sequential implementations in [`sequential`] without it; worker count
//! never changes the result, bit for bit.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::geom::{point_in_convex_polygon, ConvexPolygon, Point2, PointSet};
use crate::hull::monotone_chain;

/// Default rotation angles, in degrees. The angle list is configurable
/// because nearby variants (e.g. a repeated 45°) are also meaningful; a
/// repeated angle just contributes duplicate candidates that deduplication
/// removes.
pub const DEFAULT_ANGLES_DEG: [f64; 4] = [0.0, 30.0, 45.0, 60.0];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FilterError {
    #[error("empty input")]
    EmptyInput,
    #[error("no rotation angles given")]
    NoAngles,
}

/// The four extreme-point indices found at one rotation angle: argmin and
/// argmax of the rotated-frame x and y coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleExtremes {
    pub angle_deg: f64,
    pub min_x: usize,
    pub max_x: usize,
    pub min_y: usize,
    pub max_y: usize,
}

impl AngleExtremes {
    pub fn indices(&self) -> [usize; 4] {
        [self.min_x, self.max_x, self.min_y, self.max_y]
    }
}

/// Extreme candidates collected across every configured angle, with
/// provenance back into the source set.
#[derive(Debug, Clone)]
pub struct ExtremeSet {
    candidates: Vec<Point2>,
    angles_used: Vec<f64>,
    per_angle: Vec<AngleExtremes>,
}

impl ExtremeSet {
    /// Distinct candidate points, in first-seen order. At most four per
    /// angle; fewer when picks coincide.
    pub fn candidates(&self) -> &[Point2] {
        &self.candidates
    }

    pub fn angles_used(&self) -> &[f64] {
        &self.angles_used
    }

    pub fn per_angle(&self) -> &[AngleExtremes] {
        &self.per_angle
    }
}

/// Wall time of each filter phase.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhaseTimings {
    pub extremes: Duration,
    pub polygon: Duration,
    pub discard: Duration,
}

impl PhaseTimings {
    pub fn total(&self) -> Duration {
        self.extremes + self.polygon + self.discard
    }
}

/// Outcome of one filter pass.
#[derive(Debug, Clone)]
pub struct FilterReport {
    pub input_size: usize,
    pub extreme_count: usize,
    pub survivor_count: usize,
    /// `survivor_count / input_size`; 1.0 for empty input.
    pub remaining_fraction: f64,
    /// The discard region; degenerate when filtering was skipped.
    pub polygon: ConvexPolygon,
    /// True when no discard pass ran (tiny input or degenerate polygon) and
    /// the survivors are the input unchanged.
    pub skipped: bool,
    pub timings: PhaseTimings,
}

/// Projection onto a frame rotated by a fixed angle. Both execution paths
/// share this so their arithmetic is identical.
#[derive(Debug, Clone, Copy)]
struct Frame {
    cos: f64,
    sin: f64,
}

impl Frame {
    fn from_degrees(angle_deg: f64) -> Self {
        let (sin, cos) = angle_deg.to_radians().sin_cos();
        Frame { cos, sin }
    }

    /// Rotated-frame coordinates of `p`: x along the direction at the frame
    /// angle, y along its perpendicular.
    #[inline]
    fn project(&self, p: Point2) -> (f64, f64) {
        (
            p.x * self.cos + p.y * self.sin,
            p.y * self.cos - p.x * self.sin,
        )
    }
}

/// One projection extremum candidate. `usize::MAX` marks the empty slot.
#[derive(Debug, Clone, Copy)]
struct Cand {
    proj: f64,
    index: usize,
}

/// Picks the smaller projection; equal projections keep the lower index.
/// Total order over finite inputs, so the reduction is associative and any
/// grouping of the combine steps yields the same winner.
#[inline]
fn better_min(a: Cand, b: Cand) -> Cand {
    if b.proj < a.proj || (b.proj == a.proj && b.index < a.index) {
        b
    } else {
        a
    }
}

#[inline]
fn better_max(a: Cand, b: Cand) -> Cand {
    if b.proj > a.proj || (b.proj == a.proj && b.index < a.index) {
        b
    } else {
        a
    }
}

/// Running state of the four simultaneous extremum searches at one angle.
#[derive(Debug, Clone, Copy)]
struct ExtremeAcc {
    min_x: Cand,
    max_x: Cand,
    min_y: Cand,
    max_y: Cand,
}

impl ExtremeAcc {
    const EMPTY: ExtremeAcc = ExtremeAcc {
        min_x: Cand {
            proj: f64::INFINITY,
            index: usize::MAX,
        },
        max_x: Cand {
            proj: f64::NEG_INFINITY,
            index: usize::MAX,
        },
        min_y: Cand {
            proj: f64::INFINITY,
            index: usize::MAX,
        },
        max_y: Cand {
            proj: f64::NEG_INFINITY,
            index: usize::MAX,
        },
    };

    #[inline]
    fn observe(self, frame: &Frame, index: usize, p: Point2) -> ExtremeAcc {
        let (px, py) = frame.project(p);
        ExtremeAcc {
            min_x: better_min(self.min_x, Cand { proj: px, index }),
            max_x: better_max(self.max_x, Cand { proj: px, index }),
            min_y: better_min(self.min_y, Cand { proj: py, index }),
            max_y: better_max(self.max_y, Cand { proj: py, index }),
        }
    }

    #[inline]
    fn merge(self, other: ExtremeAcc) -> ExtremeAcc {
        ExtremeAcc {
            min_x: better_min(self.min_x, other.min_x),
            max_x: better_max(self.max_x, other.max_x),
            min_y: better_min(self.min_y, other.min_y),
            max_y: better_max(self.max_y, other.max_y),
        }
    }

    fn into_extremes(self, angle_deg: f64) -> AngleExtremes {
        AngleExtremes {
            angle_deg,
            min_x: self.min_x.index,
            max_x: self.max_x.index,
            min_y: self.min_y.index,
            max_y: self.max_y.index,
        }
    }
}

#[inline]
fn keep(p: Point2, poly: &ConvexPolygon) -> bool {
    !point_in_convex_polygon(p, poly).is_strictly_inside()
}

/// Sequential implementations. These define the reference semantics; the
/// parallel paths must reproduce them exactly.
pub mod sequential {
    use super::*;

    /// Single-threaded extreme search at one angle.
    pub fn find_extremes_at_angle(
        s: &PointSet,
        angle_deg: f64,
    ) -> Result<AngleExtremes, FilterError> {
        if s.is_empty() {
            return Err(FilterError::EmptyInput);
        }
        let frame = Frame::from_degrees(angle_deg);
        let acc = s
            .points()
            .iter()
            .enumerate()
            .fold(ExtremeAcc::EMPTY, |acc, (i, &p)| acc.observe(&frame, i, p));
        Ok(acc.into_extremes(angle_deg))
    }

    /// Single-threaded discard pass: keep everything not strictly inside.
    pub fn discard_interior(s: &PointSet, poly: &ConvexPolygon) -> PointSet {
        if poly.is_degenerate() {
            return s.clone();
        }
        let survivors: Vec<Point2> = s
            .points()
            .iter()
            .copied()
            .filter(|&p| keep(p, poly))
            .collect();
        PointSet::from_vec_unchecked(survivors)
    }
}

/// Data-parallel implementations on the current rayon pool. The reduction
/// combiner preserves the lowest-index tie-break under any association and
/// the discard maps each point independently before a stable compaction, so
/// results are bit-identical to [`sequential`] for any worker count.
#[cfg(feature = "parallel")]
pub mod parallel {
    use super::*;
    use rayon::prelude::*;

    pub fn find_extremes_at_angle(
        s: &PointSet,
        angle_deg: f64,
    ) -> Result<AngleExtremes, FilterError> {
        if s.is_empty() {
            return Err(FilterError::EmptyInput);
        }
        let frame = Frame::from_degrees(angle_deg);
        let acc = s
            .points()
            .par_iter()
            .enumerate()
            .fold(
                || ExtremeAcc::EMPTY,
                |acc, (i, &p)| acc.observe(&frame, i, p),
            )
            .reduce(|| ExtremeAcc::EMPTY, ExtremeAcc::merge);
        Ok(acc.into_extremes(angle_deg))
    }

    pub fn discard_interior(s: &PointSet, poly: &ConvexPolygon) -> PointSet {
        if poly.is_degenerate() {
            return s.clone();
        }
        let pts = s.points();
        let mut mask: Vec<bool> = Vec::new();
        pts.par_iter()
            .map(|&p| keep(p, poly))
            .collect_into_vec(&mut mask);

        let survivor_count = mask.iter().filter(|&&k| k).count();
        let mut survivors = Vec::with_capacity(survivor_count);
        survivors.extend(
            pts.iter()
                .zip(&mask)
                .filter_map(|(&p, &k)| if k { Some(p) } else { None }),
        );
        PointSet::from_vec_unchecked(survivors)
    }
}

/// Indices of the four projection extremes at one angle, lowest index
/// winning ties. Runs on the rayon pool when the `parallel` feature is
/// enabled, sequentially otherwise.
pub fn find_extremes_at_angle(s: &PointSet, angle_deg: f64) -> Result<AngleExtremes, FilterError> {
    #[cfg(feature = "parallel")]
    {
        parallel::find_extremes_at_angle(s, angle_deg)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sequential::find_extremes_at_angle(s, angle_deg)
    }
}

/// Runs the extreme search at every angle and deduplicates the picked
/// points, keeping provenance indices per angle.
pub fn collect_extremes(s: &PointSet, angles_deg: &[f64]) -> Result<ExtremeSet, FilterError> {
    if angles_deg.is_empty() {
        return Err(FilterError::NoAngles);
    }
    let mut per_angle = Vec::with_capacity(angles_deg.len());
    for &angle in angles_deg {
        per_angle.push(find_extremes_at_angle(s, angle)?);
    }

    let pts = s.points();
    let mut candidates: Vec<Point2> = Vec::with_capacity(4 * angles_deg.len());
    for extremes in &per_angle {
        for index in extremes.indices() {
            let p = pts[index];
            if !candidates.contains(&p) {
                candidates.push(p);
            }
        }
    }

    Ok(ExtremeSet {
        candidates,
        angles_used: angles_deg.to_vec(),
        per_angle,
    })
}

/// Convex hull of the extreme candidates: the region whose strict interior
/// is safe to discard. Degenerate (fewer than three non-collinear
/// candidates) means filtering must be skipped.
pub fn build_filter_polygon(extremes: &ExtremeSet) -> ConvexPolygon {
    let candidates = PointSet::from_vec_unchecked(extremes.candidates.clone());
    monotone_chain(&candidates).polygon
}

/// Keeps exactly the points not strictly inside `poly`, in original order.
/// A degenerate polygon keeps everything.
pub fn discard_interior(s: &PointSet, poly: &ConvexPolygon) -> PointSet {
    #[cfg(feature = "parallel")]
    {
        parallel::discard_interior(s, poly)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sequential::discard_interior(s, poly)
    }
}

/// The full prefilter pipeline: collect extremes, hull them into the filter
/// polygon, discard strict-interior points.
///
/// Total over all inputs: anything degenerate (fewer than three points,
/// collinear extremes, an empty angle list) skips filtering and returns the
/// input unchanged, reported as skipped rather than as an error.
pub fn prefilter(s: &PointSet, angles_deg: &[f64]) -> (PointSet, FilterReport) {
    let input_size = s.len();

    let started = Instant::now();
    let extremes = match collect_extremes(s, angles_deg) {
        Ok(e) => e,
        Err(_) => {
            return skipped_report(s, 0, ConvexPolygon::from_ring_unchecked(Vec::new()), {
                PhaseTimings {
                    extremes: started.elapsed(),
                    ..Default::default()
                }
            });
        }
    };
    let t_extremes = started.elapsed();

    let started = Instant::now();
    let polygon = build_filter_polygon(&extremes);
    let t_polygon = started.elapsed();

    let timings = PhaseTimings {
        extremes: t_extremes,
        polygon: t_polygon,
        ..Default::default()
    };
    if polygon.is_degenerate() {
        return skipped_report(s, extremes.candidates.len(), polygon, timings);
    }

    let started = Instant::now();
    let survivors = discard_interior(s, &polygon);
    let t_discard = started.elapsed();

    let report = FilterReport {
        input_size,
        extreme_count: extremes.candidates.len(),
        survivor_count: survivors.len(),
        remaining_fraction: remaining_fraction(survivors.len(), input_size),
        polygon,
        skipped: false,
        timings: PhaseTimings {
            discard: t_discard,
            ..timings
        },
    };
    (survivors, report)
}

fn remaining_fraction(survivors: usize, input: usize) -> f64 {
    if input == 0 {
        1.0
    } else {
        survivors as f64 / input as f64
    }
}

fn skipped_report(
    s: &PointSet,
    extreme_count: usize,
    polygon: ConvexPolygon,
    timings: PhaseTimings,
) -> (PointSet, FilterReport) {
    let report = FilterReport {
        input_size: s.len(),
        extreme_count,
        survivor_count: s.len(),
        remaining_fraction: 1.0,
        polygon,
        skipped: true,
        timings,
    };
    (s.clone(), report)
}
