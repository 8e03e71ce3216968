//! Full convex hull via Andrew's monotone chain.
//!
//! The same routine serves three callers: hulling the handful of extreme
//! candidates into the filter polygon, hulling filter survivors into the
//! pipeline's final answer, and hulling raw input when no filtering is
//! requested.

use std::time::{Duration, Instant};

use crate::geom::{orientation, ConvexPolygon, Point2, PointSet};

/// Hull of a point set in canonical form.
///
/// The ring starts at the lexicographically smallest vertex (x, then y) and
/// proceeds counterclockwise, so two hulls are equal exactly when their rings
/// compare equal as sequences. `vertex_indices` maps each ring vertex back to
/// a position in the input set.
#[derive(Debug, Clone)]
pub struct HullResult {
    pub polygon: ConvexPolygon,
    pub vertex_indices: Vec<usize>,
    pub elapsed: Duration,
}

/// Computes the convex hull with Andrew's monotone chain: sort points
/// lexicographically, then build lower and upper chains with strict-turn
/// popping so collinear boundary points are excluded from the ring.
///
/// Inputs with fewer than three distinct points, or all points collinear,
/// yield a degenerate ring: empty, a single point, or the two extreme points
/// of the segment.
pub fn monotone_chain(s: &PointSet) -> HullResult {
    let started = Instant::now();
    let pts = s.points();
    let n = pts.len();

    if n == 0 {
        return HullResult {
            polygon: ConvexPolygon::from_ring_unchecked(Vec::new()),
            vertex_indices: Vec::new(),
            elapsed: started.elapsed(),
        };
    }

    let mut order: Vec<usize> = (0..n).collect();
    // Tie-break equal points by index so the sorted order is unique.
    order.sort_unstable_by(|&i, &j| pts[i].lex_cmp(&pts[j]).then(i.cmp(&j)));

    let first = pts[order[0]];
    let last = pts[order[n - 1]];
    if first == last {
        // All points coincide.
        return HullResult {
            polygon: ConvexPolygon::from_ring_unchecked(vec![first]),
            vertex_indices: vec![order[0]],
            elapsed: started.elapsed(),
        };
    }

    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2
            && orientation(
                pts[lower[lower.len() - 2]],
                pts[lower[lower.len() - 1]],
                pts[i],
            ) <= 0.0
        {
            lower.pop();
        }
        lower.push(i);
    }

    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2
            && orientation(
                pts[upper[upper.len() - 2]],
                pts[upper[upper.len() - 1]],
                pts[i],
            ) <= 0.0
        {
            upper.pop();
        }
        upper.push(i);
    }

    // Each chain ends where the other begins.
    lower.pop();
    upper.pop();
    lower.extend(upper);

    let ring: Vec<Point2> = lower.iter().map(|&i| pts[i]).collect();
    HullResult {
        polygon: ConvexPolygon::from_ring_unchecked(ring),
        vertex_indices: lower,
        elapsed: started.elapsed(),
    }
}
