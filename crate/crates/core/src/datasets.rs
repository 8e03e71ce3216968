//! Dataset generators and point-file loaders.
//!
//! Generators draw from a fixed, portable PRNG so the same (family, size,
//! seed) triple produces a bit-identical point set on every platform and
//! every run. Loaders accept two text formats: whitespace-separated `x y`
//! lines, and the vertex lines of ASCII OBJ meshes projected onto the XY
//! plane.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::geom::{Point2, PointSet};

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
}

/// xoshiro256++ with splitmix64 seed expansion.
///
/// The algorithm is pinned here (rather than taken from a dependency) so the
/// generated streams stay stable across platforms and toolchain upgrades:
/// state update `s[1] * 5 rotl 7 * 9` output, xor/shift/rotate transitions,
/// and `(u >> 11) * 2^-53` for unit-interval doubles.
#[derive(Debug, Clone)]
pub struct PortableRng {
    state: [u64; 4],
}

impl PortableRng {
    pub fn new(seed: u64) -> Self {
        // splitmix64, the reference seeding scheme for the xoshiro family.
        let mut x = seed;
        let mut next = move || {
            x = x.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = x;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        PortableRng {
            state: [next(), next(), next(), next()],
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform double in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform double in `[-1, 1)`.
    pub fn next_signed(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }
}

/// `size` i.i.d. points uniform over the square [-1, 1]².
pub fn gen_uniform_square(size: usize, seed: u64) -> PointSet {
    let mut rng = PortableRng::new(seed);
    let mut points = Vec::with_capacity(size);
    for _ in 0..size {
        let x = rng.next_signed();
        let y = rng.next_signed();
        points.push(Point2::new(x, y));
    }
    PointSet::from_vec_unchecked(points)
}

/// `size` i.i.d. points uniform over the unit disk, by rejection sampling
/// from the square (acceptance rate π/4; uniformity is exact).
pub fn gen_uniform_disk(size: usize, seed: u64) -> PointSet {
    let mut rng = PortableRng::new(seed);
    let mut points = Vec::with_capacity(size);
    while points.len() < size {
        let x = rng.next_signed();
        let y = rng.next_signed();
        if x * x + y * y <= 1.0 {
            points.push(Point2::new(x, y));
        }
    }
    PointSet::from_vec_unchecked(points)
}

/// Loads whitespace-separated `x y` lines. Blank lines and lines starting
/// with `#` are skipped; columns beyond the first two are ignored; file
/// order is preserved.
pub fn load_xy(path: &Path) -> Result<PointSet, DatasetError> {
    let display = path.display().to_string();
    let file = File::open(path).map_err(|source| DatasetError::Io {
        path: display.clone(),
        source,
    })?;

    let mut points = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|source| DatasetError::Io {
            path: display.clone(),
            source,
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let x = parse_coord(fields.next(), &display, lineno)?;
        let y = parse_coord(fields.next(), &display, lineno)?;
        points.push(Point2::new(x, y));
    }
    Ok(PointSet::from_vec_unchecked(points))
}

/// Loads the vertices of an ASCII OBJ file and projects them onto the XY
/// plane: every `v x y z` record contributes `(x, y)`, all other record
/// types are ignored, and file order (including duplicates created by the
/// projection) is preserved.
pub fn load_obj_projected(path: &Path) -> Result<PointSet, DatasetError> {
    let display = path.display().to_string();
    let file = File::open(path).map_err(|source| DatasetError::Io {
        path: display.clone(),
        source,
    })?;

    let mut points = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|source| DatasetError::Io {
            path: display.clone(),
            source,
        })?;
        let mut fields = line.split_whitespace();
        if fields.next() != Some("v") {
            continue;
        }
        let x = parse_coord(fields.next(), &display, lineno)?;
        let y = parse_coord(fields.next(), &display, lineno)?;
        // z is required by the format but dropped by the projection.
        let z = fields.next().ok_or_else(|| DatasetError::Parse {
            path: display.clone(),
            line: lineno,
            message: "vertex line has fewer than three coordinates".into(),
        })?;
        z.parse::<f64>().map_err(|_| DatasetError::Parse {
            path: display.clone(),
            line: lineno,
            message: format!("invalid coordinate {z:?}"),
        })?;
        points.push(Point2::new(x, y));
    }
    Ok(PointSet::from_vec_unchecked(points))
}

fn parse_coord(field: Option<&str>, path: &str, line: usize) -> Result<f64, DatasetError> {
    let field = field.ok_or_else(|| DatasetError::Parse {
        path: path.to_string(),
        line,
        message: "expected two coordinates".into(),
    })?;
    let value: f64 = field.parse().map_err(|_| DatasetError::Parse {
        path: path.to_string(),
        line,
        message: format!("invalid coordinate {field:?}"),
    })?;
    if !value.is_finite() {
        return Err(DatasetError::Parse {
            path: path.to_string(),
            line,
            message: format!("non-finite coordinate {field:?}"),
        });
    }
    Ok(value)
}

/// Description of a point set: a seeded generator family or a file to load.
#[derive(Debug, Clone)]
pub enum DatasetSpec {
    UniformSquare { size: usize, seed: u64 },
    UniformDisk { size: usize, seed: u64 },
    FileXy { path: PathBuf },
    FileObjProjected { path: PathBuf },
}

impl DatasetSpec {
    /// Generates or loads the points. Identical specs produce bit-identical
    /// sets.
    pub fn load(&self) -> Result<PointSet, DatasetError> {
        match self {
            DatasetSpec::UniformSquare { size, seed } => Ok(gen_uniform_square(*size, *seed)),
            DatasetSpec::UniformDisk { size, seed } => Ok(gen_uniform_disk(*size, *seed)),
            DatasetSpec::FileXy { path } => load_xy(path),
            DatasetSpec::FileObjProjected { path } => load_obj_projected(path),
        }
    }

    /// Short name for report rows.
    pub fn label(&self) -> String {
        match self {
            DatasetSpec::UniformSquare { seed, .. } => format!("uniform-square(seed={seed})"),
            DatasetSpec::UniformDisk { seed, .. } => format!("uniform-disk(seed={seed})"),
            DatasetSpec::FileXy { path } | DatasetSpec::FileObjProjected { path } => {
                path.display().to_string()
            }
        }
    }
}
