//! Shared test support: an independent gift-wrapping hull oracle and the
//! point-cloud families the randomized suites draw from.
//!
//! The oracle deliberately shares no code with the library's hull: it has its
//! own cross product and its own O(nh) wrapping loop, so agreement between
//! the two is evidence, not tautology.

#![allow(dead_code)]

use prehull::datasets::{gen_uniform_disk, gen_uniform_square, PortableRng};
use prehull::geom::{Point2, PointSet};

/// Gift-wrapping (Jarvis march) hull: counterclockwise vertex ring starting
/// at the lexicographically smallest point, collinear edge-interior points
/// excluded. Intended for small, mostly general-position instances.
pub fn gift_wrap_hull(points: &[Point2]) -> Vec<Point2> {
    if points.is_empty() {
        return Vec::new();
    }

    let start = *points
        .iter()
        .min_by(|a, b| {
            a.x.partial_cmp(&b.x)
                .unwrap()
                .then(a.y.partial_cmp(&b.y).unwrap())
        })
        .unwrap();
    if points.iter().all(|&p| p == start) {
        return vec![start];
    }

    let mut hull = vec![start];
    let mut current = start;
    for _ in 0..=points.len() {
        let mut next: Option<Point2> = None;
        for &p in points {
            if p == current {
                continue;
            }
            match next {
                None => next = Some(p),
                Some(n) => {
                    let turn = wrap_cross(current, n, p);
                    // More clockwise wins; on ties take the farther point so
                    // points interior to an edge never become vertices.
                    if turn < 0.0 || (turn == 0.0 && dist2(current, p) > dist2(current, n)) {
                        next = Some(p);
                    }
                }
            }
        }
        let n = next.expect("non-degenerate input has a next vertex");
        if n == start {
            return hull;
        }
        hull.push(n);
        current = n;
    }
    panic!("gift wrapping failed to close the ring");
}

fn wrap_cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn dist2(a: Point2, b: Point2) -> f64 {
    (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)
}

/// Vertex set in a canonical order, for set-equality comparisons.
pub fn sorted_vertices(vertices: &[Point2]) -> Vec<(u64, u64)> {
    let mut keyed: Vec<(u64, u64)> = vertices
        .iter()
        .map(|p| (p.x.to_bits(), p.y.to_bits()))
        .collect();
    keyed.sort_unstable();
    keyed.dedup();
    keyed
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Square,
    Disk,
    Gaussian,
    Collinear,
    Duplicates,
    Grid,
}

pub const ALL_FAMILIES: [Family; 6] = [
    Family::Square,
    Family::Disk,
    Family::Gaussian,
    Family::Collinear,
    Family::Duplicates,
    Family::Grid,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Square => "square",
            Family::Disk => "disk",
            Family::Gaussian => "gaussian",
            Family::Collinear => "collinear",
            Family::Duplicates => "duplicates",
            Family::Grid => "grid",
        }
    }

    pub fn generate(self, n: usize, seed: u64) -> PointSet {
        match self {
            Family::Square => gen_uniform_square(n, seed),
            Family::Disk => gen_uniform_disk(n, seed),
            Family::Gaussian => gaussian_set(n, seed),
            Family::Collinear => collinear_set(n, seed),
            Family::Duplicates => duplicate_set(n, seed),
            Family::Grid => grid_set(n, seed),
        }
    }
}

/// Standard bivariate normal points, one Box–Muller draw per point.
pub fn gaussian_set(n: usize, seed: u64) -> PointSet {
    let mut rng = PortableRng::new(seed);
    let coords: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let u1 = 1.0 - rng.next_f64(); // (0, 1]
            let u2 = rng.next_f64();
            let r = (-2.0 * u1.ln()).sqrt();
            let theta = 2.0 * std::f64::consts::PI * u2;
            (r * theta.cos(), r * theta.sin())
        })
        .collect();
    PointSet::from_coords(coords).unwrap()
}

/// Points on a random line: anchor plus random multiples of one direction,
/// at a coordinate scale varying from 1e-4 to 1e4 by seed. The coordinates
/// are real-valued, so collinearity holds only up to rounding; this is the
/// family that stresses the boundary policy hardest.
pub fn collinear_set(n: usize, seed: u64) -> PointSet {
    let mut rng = PortableRng::new(seed);
    let scale = 10f64.powi((rng.next_u64() % 9) as i32 - 4);
    let anchor = (
        rng.next_signed() * 2.0 * scale,
        rng.next_signed() * 2.0 * scale,
    );
    let angle = rng.next_f64() * std::f64::consts::PI;
    let (dy, dx) = angle.sin_cos();
    let coords: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let t = rng.next_signed() * scale;
            (anchor.0 + t * dx, anchor.1 + t * dy)
        })
        .collect();
    PointSet::from_coords(coords).unwrap()
}

/// One random point repeated `n` times.
pub fn duplicate_set(n: usize, seed: u64) -> PointSet {
    let mut rng = PortableRng::new(seed);
    let p = (rng.next_signed() * 10.0, rng.next_signed() * 10.0);
    PointSet::from_coords(std::iter::repeat_n(p, n)).unwrap()
}

/// First `n` cells of a k×k integer grid. Small integer coordinates keep
/// every orientation test exact.
pub fn grid_set(n: usize, seed: u64) -> PointSet {
    let mut rng = PortableRng::new(seed);
    let k = (n as f64).sqrt().ceil() as usize;
    let base_x = (rng.next_u64() % 1000) as f64;
    let base_y = (rng.next_u64() % 1000) as f64;
    let coords: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            (
                base_x + (i % k.max(1)) as f64,
                base_y + (i / k.max(1)) as f64,
            )
        })
        .collect();
    PointSet::from_coords(coords).unwrap()
}
