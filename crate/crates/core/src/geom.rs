//! Planar geometry primitives: points, point sets, convex polygons, and the
//! predicates everything else is built from.

use thiserror::Error;

/// Errors produced when constructing or transforming geometry.
#[derive(Debug, Error)]
pub enum GeomError {
    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },
    #[error("rotation angle is not finite")]
    NonFiniteAngle,
    #[error("polygon ring is not strictly counterclockwise at vertex {index}")]
    NotStrictlyCcw { index: usize },
}

/// A planar point with finite double-precision coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic order: by x, then by y. Total on finite points.
    pub fn lex_cmp(&self, other: &Point2) -> std::cmp::Ordering {
        self.x
            .partial_cmp(&other.x)
            .unwrap()
            .then(self.y.partial_cmp(&other.y).unwrap())
    }
}

/// An immutable, ordered collection of points. Iteration order is stable and
/// duplicates are permitted; every admitted coordinate is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point2>,
}

impl PointSet {
    /// Builds a set from points, rejecting any non-finite coordinate.
    pub fn new(points: Vec<Point2>) -> Result<Self, GeomError> {
        for (index, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(GeomError::NonFiniteCoordinate { index });
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_coords<I>(coords: I) -> Result<Self, GeomError>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        Self::new(coords.into_iter().map(|(x, y)| Point2::new(x, y)).collect())
    }

    /// Wraps points already known to be finite (generator output, survivors of
    /// a filter pass over an admitted set).
    pub(crate) fn from_vec_unchecked(points: Vec<Point2>) -> Self {
        debug_assert!(points.iter().all(Point2::is_finite));
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point2> {
        self.points.iter()
    }
}

/// A convex polygon stored as a counterclockwise vertex ring.
///
/// Rings of fewer than three vertices (empty set, single point, segment) are
/// permitted but flagged degenerate; a non-degenerate ring has every
/// consecutive vertex triple in strictly counterclockwise orientation, so no
/// three consecutive vertices are collinear.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    ring: Vec<Point2>,
}

impl ConvexPolygon {
    /// Validates and wraps a vertex ring. Rings shorter than three vertices
    /// are accepted as degenerate.
    pub fn from_ring(ring: Vec<Point2>) -> Result<Self, GeomError> {
        for (index, v) in ring.iter().enumerate() {
            if !v.is_finite() {
                return Err(GeomError::NonFiniteCoordinate { index });
            }
        }
        if ring.len() >= 3 {
            let n = ring.len();
            for i in 0..n {
                let a = ring[i];
                let b = ring[(i + 1) % n];
                let c = ring[(i + 2) % n];
                if orientation(a, b, c) <= 0.0 {
                    return Err(GeomError::NotStrictlyCcw { index: i });
                }
            }
        }
        Ok(ConvexPolygon { ring })
    }

    /// Wraps a ring produced by the hull construction, which maintains the
    /// strict-CCW invariant itself.
    pub(crate) fn from_ring_unchecked(ring: Vec<Point2>) -> Self {
        ConvexPolygon { ring }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ring.is_empty()
    }

    /// A ring of fewer than three vertices encloses no interior.
    pub fn is_degenerate(&self) -> bool {
        self.ring.len() < 3
    }
}

/// Which side of the filter a point falls on. Boundary points are grouped
/// with the outside so that downstream discards are conservative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    StrictlyInside,
    OnBoundaryOrOutside,
}

impl Containment {
    pub fn is_strictly_inside(self) -> bool {
        matches!(self, Containment::StrictlyInside)
    }
}

/// Twice the signed area of triangle `abc`:
/// `(b.x - a.x)(c.y - a.y) - (b.y - a.y)(c.x - a.x)`.
///
/// Positive for a counterclockwise turn, zero for collinear points, negative
/// for clockwise. Plain double precision with exact-zero comparison; callers
/// that must never misclassify a boundary point treat the zero case
/// conservatively.
#[inline]
pub fn orientation(a: Point2, b: Point2, c: Point2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Rotates every point counterclockwise by `theta_deg` degrees about the
/// origin, preserving order and length.
pub fn rotate_set(s: &PointSet, theta_deg: f64) -> Result<PointSet, GeomError> {
    if !theta_deg.is_finite() {
        return Err(GeomError::NonFiniteAngle);
    }
    let (sin, cos) = theta_deg.to_radians().sin_cos();
    let rotated: Vec<Point2> = s
        .iter()
        .map(|p| Point2::new(p.x * cos - p.y * sin, p.x * sin + p.y * cos))
        .collect();
    // Re-validate: rotation of very large finite coordinates can overflow.
    PointSet::new(rotated)
}

/// Classifies `p` against a counterclockwise convex ring.
///
/// Strictly inside means `orientation(v_i, v_{i+1}, p) > 0` for every edge;
/// points on an edge or vertex, and every point when the ring is degenerate,
/// classify as [`Containment::OnBoundaryOrOutside`].
pub fn point_in_convex_polygon(p: Point2, poly: &ConvexPolygon) -> Containment {
    let ring = poly.vertices();
    if ring.len() < 3 {
        return Containment::OnBoundaryOrOutside;
    }
    let n = ring.len();
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        if orientation(a, b, p) <= 0.0 {
            return Containment::OnBoundaryOrOutside;
        }
    }
    Containment::StrictlyInside
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::from_ring(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn orientation_ccw_collinear_cw() {
        let a = Point2::new(0.0, 0.0);
        assert_eq!(
            orientation(a, Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)),
            1.0
        );
        assert_eq!(
            orientation(a, Point2::new(1.0, 0.0), Point2::new(2.0, 0.0)),
            0.0
        );
        assert_eq!(
            orientation(a, Point2::new(0.0, 1.0), Point2::new(1.0, 0.0)),
            -1.0
        );
    }

    #[test]
    fn orientation_antisymmetric_in_last_two_args() {
        let mut rng = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((rng >> 11) as f64 / (1u64 << 53) as f64) * 200.0 - 100.0
        };
        for _ in 0..1000 {
            let a = Point2::new(next(), next());
            let b = Point2::new(next(), next());
            let c = Point2::new(next(), next());
            assert_eq!(orientation(a, b, c), -orientation(a, c, b));
        }
    }

    #[test]
    fn point_set_rejects_non_finite() {
        let err = PointSet::from_coords([(0.0, 0.0), (f64::NAN, 1.0)]).unwrap_err();
        assert!(matches!(err, GeomError::NonFiniteCoordinate { index: 1 }));
        let err = PointSet::from_coords([(f64::INFINITY, 0.0)]).unwrap_err();
        assert!(matches!(err, GeomError::NonFiniteCoordinate { index: 0 }));
    }

    #[test]
    fn rotate_quarter_turn() {
        let s = PointSet::from_coords([(1.0, 0.0)]).unwrap();
        let r = rotate_set(&s, 90.0).unwrap();
        assert!((r.points()[0].x - 0.0).abs() < 1e-15);
        assert!((r.points()[0].y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rotate_zero_is_identity_bitwise() {
        let s = PointSet::from_coords([(1.5, -2.25), (0.125, 3.0), (-7.5, 0.875)]).unwrap();
        let r = rotate_set(&s, 0.0).unwrap();
        for (a, b) in s.iter().zip(r.iter()) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.y.to_bits(), b.y.to_bits());
        }
    }

    #[test]
    fn rotate_45_degrees_analytic() {
        let s = PointSet::from_coords([(1.0, 0.0)]).unwrap();
        let r = rotate_set(&s, 45.0).unwrap();
        let half_sqrt2 = std::f64::consts::SQRT_2 / 2.0;
        assert!((r.points()[0].x - half_sqrt2).abs() < 1e-12);
        assert!((r.points()[0].y - half_sqrt2).abs() < 1e-12);
    }

    #[test]
    fn rotate_rejects_non_finite_angle() {
        let s = PointSet::from_coords([(1.0, 0.0)]).unwrap();
        assert!(matches!(
            rotate_set(&s, f64::NAN),
            Err(GeomError::NonFiniteAngle)
        ));
    }

    #[test]
    fn rotate_round_trip_within_tolerance() {
        let mut rng = 12345u64;
        let mut next = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((rng >> 11) as f64 / (1u64 << 53) as f64) * 2e6 - 1e6
        };
        let coords: Vec<(f64, f64)> = (0..200).map(|_| (next(), next())).collect();
        let s = PointSet::from_coords(coords).unwrap();
        for theta in [13.0, 45.0, 90.0, 217.5] {
            let back = rotate_set(&rotate_set(&s, theta).unwrap(), -theta).unwrap();
            for (a, b) in s.iter().zip(back.iter()) {
                assert!((a.x - b.x).abs() < 1e-9, "x drift {}", (a.x - b.x).abs());
                assert!((a.y - b.y).abs() < 1e-9, "y drift {}", (a.y - b.y).abs());
            }
        }
    }

    #[test]
    fn rotate_preserves_pairwise_distances() {
        let s = PointSet::from_coords([
            (0.0, 0.0),
            (3.0, 4.0),
            (-2.5, 1.25),
            (100.0, -40.0),
            (0.001, 0.002),
        ])
        .unwrap();
        let r = rotate_set(&s, 33.0).unwrap();
        let pts = s.points();
        let rot = r.points();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let d0 = (pts[i].x - pts[j].x).powi(2) + (pts[i].y - pts[j].y).powi(2);
                let d1 = (rot[i].x - rot[j].x).powi(2) + (rot[i].y - rot[j].y).powi(2);
                assert!((d0 - d1).abs() <= 1e-9 * d0.max(1.0));
            }
        }
    }

    #[test]
    fn containment_center_of_square() {
        let poly = unit_square();
        assert_eq!(
            point_in_convex_polygon(Point2::new(0.5, 0.5), &poly),
            Containment::StrictlyInside
        );
    }

    #[test]
    fn containment_edge_point_not_inside() {
        let poly = unit_square();
        assert_eq!(
            point_in_convex_polygon(Point2::new(0.0, 0.5), &poly),
            Containment::OnBoundaryOrOutside
        );
    }

    #[test]
    fn containment_vertices_never_inside() {
        let poly = unit_square();
        for &v in poly.vertices() {
            assert_eq!(
                point_in_convex_polygon(v, &poly),
                Containment::OnBoundaryOrOutside
            );
        }
    }

    #[test]
    fn containment_degenerate_ring_keeps_everything() {
        let seg =
            ConvexPolygon::from_ring(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)]).unwrap();
        assert!(seg.is_degenerate());
        assert_eq!(
            point_in_convex_polygon(Point2::new(0.5, 0.5), &seg),
            Containment::OnBoundaryOrOutside
        );
    }

    #[test]
    fn polygon_rejects_clockwise_ring() {
        let err = ConvexPolygon::from_ring(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 0.0),
        ])
        .unwrap_err();
        assert!(matches!(err, GeomError::NotStrictlyCcw { .. }));
    }

    #[test]
    fn polygon_rejects_collinear_triple() {
        let err = ConvexPolygon::from_ring(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 1.0),
        ])
        .unwrap_err();
        assert!(matches!(err, GeomError::NotStrictlyCcw { .. }));
    }
}
