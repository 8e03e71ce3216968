//! Planar convex hulls with an interior-point prefilter.
//!
//! Computing the convex hull of a large planar set spends most of its time on
//! points that can be ruled out in a single linear pass: collect the points
//! extremizing the rotated-frame x and y coordinates at a few angles (sixteen
//! candidates for the default four angles), hull those candidates into a
//! small convex polygon, and discard everything strictly inside it. Every
//! discarded point was provably interior, so the hull of the survivors is the
//! hull of the input, typically computed from a fraction of a percent of the
//! original points.
//!
//! - [`geom`]: points, point sets, convex rings, and the orientation and
//!   containment predicates.
//! - [`filter`]: the prefilter (extreme reduction, filter polygon, discard
//!   pass), data-parallel under the `parallel` feature.
//! - [`hull`]: Andrew's monotone chain, producing canonical rings.
//! - [`datasets`]: reproducible generators and `x y` / OBJ loaders.
//!
//! ```
//! use prehull::{monotone_chain, prefilter, PointSet, DEFAULT_ANGLES_DEG};
//!
//! let points = PointSet::from_coords([
//!     (0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0),
//!     (1.0, 2.0), (2.0, 1.0), (3.0, 3.0),
//! ]).unwrap();
//!
//! let (survivors, report) = prefilter(&points, &DEFAULT_ANGLES_DEG);
//! assert!(report.survivor_count < points.len());
//! assert_eq!(
//!     monotone_chain(&survivors).polygon,
//!     monotone_chain(&points).polygon,
//! );
//! ```

pub mod datasets;
pub mod filter;
pub mod geom;
pub mod hull;

pub use datasets::{DatasetError, DatasetSpec};
pub use filter::{prefilter, FilterError, FilterReport, DEFAULT_ANGLES_DEG};
pub use geom::{Containment, ConvexPolygon, GeomError, Point2, PointSet};
pub use hull::{monotone_chain, HullResult};
